#pragma once

#include <optional>
#include <string>
#include <utility>

#include "osslab/linalg.hpp"

namespace osslab {

/// Default check-time tolerance; every check scales it by a documented
/// magnitude (spectrum diameter, ||R||, ...) to obtain its threshold.
inline constexpr double kDefaultTol = 1e-8;

/// A verdict is "marginal" when the residual lies within a factor of 10 of
/// the threshold, so fuzz harnesses can set numerically ambiguous models
/// aside instead of miscounting them.
inline bool near_threshold(double residual, double threshold) {
  return residual > threshold / 10.0 && residual < threshold * 10.0;
}

struct Witness {
  Vec direction;  // offending direction; empty when no direction applies
  double eigenvalue = 0.0;
  double residual = 0.0;
};

struct CheckReport {
  std::string check;
  bool pass = false;
  double maxResidual = 0.0;
  /// Effective bound: pass <=> maxResidual <= threshold.
  double threshold = 0.0;
  int samplesUsed = 0;
  /// Present exactly when the check fails.
  std::optional<Witness> witness;
  bool marginal = false;

  static CheckReport make(std::string name, double residual, double threshold, int samples,
                          std::optional<Witness> failWitness) {
    CheckReport r;
    r.check = std::move(name);
    r.maxResidual = residual;
    r.threshold = threshold;
    r.samplesUsed = samples;
    r.pass = residual <= threshold;
    r.marginal = near_threshold(residual, threshold);
    if (!r.pass) r.witness = std::move(failWitness);
    return r;
  }
};

}  // namespace osslab
