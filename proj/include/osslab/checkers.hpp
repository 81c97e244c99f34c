#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "osslab/report.hpp"
#include "osslab/tensor.hpp"

namespace osslab {

/// Sampling plan for the direction-dependent checks. With
/// includeStructured, the pseudo-random unit vectors are followed by basis
/// vectors, the pairwise diagonals (e_i +- e_j)/sqrt(2), and the probe
/// directions (sqrt(3) e_i + e_j)/2.
struct SampleConfig {
  int count = 200;
  std::uint64_t seed = 0;
  bool includeStructured = true;
};

/// count pseudo-random unit vectors (normalized standard-normal draws keyed
/// by (seed, index)) plus the structured set when flagged. Deterministic
/// given cfg; throws std::invalid_argument for count < 1.
std::vector<Vec> sample_unit_vectors(int n, const SampleConfig& cfg);

/// Sorted spectrum of J(x) restricted to x^perp.
Vec perp_spectrum(const CurvatureTensor& r, const Vec& x);

/// Sampled Osserman check: the sorted restricted spectrum must match the
/// first sample's, position by position, within tol * max(1, diameter).
CheckReport osserman_check_sampled(const CurvatureTensor& r, const SampleConfig& cfg,
                                   double tol = kDefaultTol);

/// Sampled duality check: for every sampled x and every eigenpair (l, y) of
/// J(x)|x^perp (plus `eigenspaceProbes` random unit vectors inside each
/// eigenspace of multiplicity > 1), ||J(y)x - l x|| must stay within
/// tol * max(1, ||R||_inf). Set eigenspaceProbes = 0 for the basis-only
/// reading of the duality principle.
CheckReport rakic_duality_check(const CurvatureTensor& r, const SampleConfig& cfg,
                                double tol = kDefaultTol, int eigenspaceProbes = 2);

/// Joint run of both sampled checks on identical samples; in dimension 4
/// the exact criterion is run as well and three-way consistency recorded.
struct EquivalenceReport {
  CheckReport duality;
  CheckReport osserman;
  bool agree = false;  // both pass or both fail
  std::optional<CheckReport> exact;
  std::optional<bool> exactConsistent;

  bool anyMarginal() const {
    return duality.marginal || osserman.marginal || (exact && exact->marginal);
  }
  /// Full agreement across every verdict that was computed.
  bool consistent() const { return agree && exactConsistent.value_or(true); }
};

EquivalenceReport equivalence_experiment(const CurvatureTensor& r, const SampleConfig& cfg,
                                         double tol = kDefaultTol);

/// Single-threaded reference drivers. Sample work is identical to the
/// OpenMP versions above, which must reproduce these reports bit for bit;
/// the benchmark target compares their throughput.
namespace serial {
CheckReport osserman_check_sampled(const CurvatureTensor& r, const SampleConfig& cfg,
                                   double tol = kDefaultTol);
CheckReport rakic_duality_check(const CurvatureTensor& r, const SampleConfig& cfg,
                                double tol = kDefaultTol, int eigenspaceProbes = 2);
EquivalenceReport equivalence_experiment(const CurvatureTensor& r, const SampleConfig& cfg,
                                         double tol = kDefaultTol);
}  // namespace serial

}  // namespace osslab
