#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osslab/checkers.hpp"
#include "osslab/tensor.hpp"

namespace osslab {

/// Composition of a fuzz corpus. Canonical models exist only in dimension
/// 4; in dimension 3 their slots are filled with space forms.
struct CorpusMix {
  int canonical = 0;
  int spaceForms = 0;
  int randoms = 0;
  int perturbed = 0;

  int total() const { return canonical + spaceForms + randoms + perturbed; }
};

/// Default split used by the fuzz command: positives (canonical models and
/// space forms) against generic negatives (random and perturbed tensors).
CorpusMix default_mix(int dim, int trials);

struct CorpusModel {
  std::string kind;   // canonical | space-form | random | perturbed
  std::string label;  // human-readable parameters
  CurvatureTensor tensor;
};

/// Deterministic corpus: model t depends only on (dim, mix, seed, t).
/// Canonical draws cycle through repeated-eigenvalue patterns; perturbation
/// bases are kept away from zero so the negatives stay negative.
std::vector<CorpusModel> make_corpus(int dim, const CorpusMix& mix, std::uint64_t seed);

struct FuzzTrial {
  std::string kind;
  std::string label;
  bool dualityPass = false;
  bool ossermanPass = false;
  bool agree = false;
  bool exactConsistent = true;  // true when the exact check does not apply
  bool marginal = false;
};

struct FuzzSummary {
  int dim = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int agreements = 0;  // trials where every computed verdict coincides
  int marginalCount = 0;
  int nonMarginalDisagreements = 0;
  std::vector<FuzzTrial> perTrial;
};

/// Runs the equivalence experiment over a corpus. Trials execute
/// concurrently (each using the serial checkers internally) with ordered,
/// deterministic aggregation.
FuzzSummary run_fuzz(int dim, const CorpusMix& mix, std::uint64_t seed, double tol,
                     const SampleConfig& base);

FuzzSummary run_fuzz(int dim, int trials, std::uint64_t seed, double tol = kDefaultTol,
                     const SampleConfig& base = {});

}  // namespace osslab
