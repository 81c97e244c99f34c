#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "osslab/linalg.hpp"
#include "osslab/report.hpp"

namespace osslab {

/// Dense algebraic curvature tensor on R^n, 2 <= n <= 8, in a fixed
/// orthonormal basis (the inner product is the identity in this basis).
///
/// Components satisfy, bitwise by construction,
///   A(x,y,z,w) = -A(y,x,z,w) = A(z,w,x,y)
/// and the first Bianchi identity
///   A(x,y,z,w) + A(y,z,x,w) + A(z,x,y,w) = 0
/// within 1e-12 of the max-magnitude component.
///
/// Instances are immutable after construction; all operations below are
/// pure functions and safe to call concurrently on shared tensors.
class CurvatureTensor {
 public:
  static constexpr int kMinDimension = 2;
  static constexpr int kMaxDimension = 8;

  /// Relative bound for the Bianchi identity at construction time.
  static constexpr double kBianchiTol = 1e-12;

  static CurvatureTensor zero(int n);

  /// Wraps a dense n^4 array (row-major in (i,j,k,l)). Requires the pair
  /// symmetries to hold exactly and the Bianchi identity within kBianchiTol
  /// of the largest component.
  static CurvatureTensor from_raw(int n, std::span<const double> raw);

  int dimension() const { return n_; }

  double operator()(int i, int j, int k, int l) const { return a_[index(i, j, k, l)]; }

  std::span<const double> raw() const { return a_; }

  /// Largest |component|.
  double max_abs() const;

  /// Largest |A(i,j,k,l) + A(j,k,i,l) + A(k,i,j,l)| over all index tuples.
  double bianchi_residual() const;

  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;

 private:
  friend CurvatureTensor canonicalize(int, std::span<const struct ComponentEntry>);
  friend CurvatureTensor project_curvature(int, std::span<const double>);

  CurvatureTensor(int n, std::vector<double> a) : n_(n), a_(std::move(a)) {}

  std::size_t index(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }

  int n_ = 0;
  std::vector<double> a_;
};

/// One seed component for canonicalize(); indices are 0-based.
struct ComponentEntry {
  int i, j, k, l;
  double value;
};

/// Builds a tensor from seed components, filling every symmetry image of
/// each seed. Throws ConflictingEntry when two seeds disagree by more than
/// 1e-12 after propagation, IndexOutOfRange for bad indices, and
/// BianchiViolation if the filled tensor fails the Bianchi bound (the
/// identity is validated, never imposed).
CurvatureTensor canonicalize(int n, std::span<const ComponentEntry> entries);

/// Orthogonal projection of an arbitrary n^4 array onto the curvature
/// symmetry class: antisymmetrization in both pairs, pair-interchange
/// symmetrization, then the Bianchi projection S -> S - (1/3) bS.
/// Valid tensors are fixed points; the projector is idempotent.
CurvatureTensor project_curvature(int n, std::span<const double> raw);

/// R + s*X. The symmetry class is linear, so the result is again valid.
CurvatureTensor add_scaled(const CurvatureTensor& r, double s, const CurvatureTensor& x);

/// Jacobi operator J(x): the symmetric n x n matrix M[i][j] = A(e_i,x,x,e_j)
/// for the internally normalized x. Satisfies M x = 0. Throws ZeroVector.
Matrix jacobi(const CurvatureTensor& r, const Vec& x);

/// Max-entry norm of
///   J(cos t x + sin t y) - cos^2 t J(x) - sin^2 t J(y)
///       - cos t sin t (A(.,x)y + A(.,y)x),
/// an exact bilinearity identity, so the result is at rounding level for
/// every valid tensor. Requires x,y orthonormal (NotOrthonormal otherwise).
double jacobi_expansion_residual(const CurvatureTensor& r, const Vec& x, const Vec& y,
                                 double theta);

/// Ricci operator rho[i][j] = sum_k A(e_k, e_i, e_j, e_k).
Matrix ricci(const CurvatureTensor& r);

/// Scalar curvature: trace of the Ricci operator.
double scalar_curvature(const CurvatureTensor& r);

/// Passes iff ||rho - (tau/n) Id||_inf <= tol * max(1, ||rho||_inf). The
/// witness carries the offending matrix entry on failure.
CheckReport einstein_check(const CurvatureTensor& r, double tol = kDefaultTol);

}  // namespace osslab
