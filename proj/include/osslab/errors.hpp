#pragma once

#include <stdexcept>
#include <string>

namespace osslab {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error { using Error::Error; };
struct BianchiViolation : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct NonSymmetric : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct KernelViolation : Error { using Error::Error; };
struct WrongDimension : Error { using Error::Error; };

/// Two seed components disagree after symmetry propagation. Indices are
/// 0-based as handed to canonicalize().
struct ConflictingEntry : Error {
  ConflictingEntry(const std::string& what, int i_, int j_, int k_, int l_,
                   double existing_, double incoming_)
      : Error(what), i(i_), j(j_), k(k_), l(l_), existing(existing_), incoming(incoming_) {}
  int i, j, k, l;
  double existing, incoming;
};

/// A basis completion failed the adapted-basis residual bound, i.e. the
/// tensor does not satisfy the duality hypothesis at the base vector.
struct NotAdapted : Error {
  NotAdapted(const std::string& what, double residual_) : Error(what), residual(residual_) {}
  double residual;
};

/// Malformed model or report file contents.
struct FormatError : Error { using Error::Error; };

/// Filesystem-level read/write failures.
struct IoError : Error { using Error::Error; };

}  // namespace osslab
