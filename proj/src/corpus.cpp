#include "osslab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <sstream>

#include "osslab/fourdim.hpp"
#include "osslab/generators.hpp"
#include "osslab/rng.hpp"

namespace osslab {

namespace {

double fmt_round(double v) { return std::round(v * 100.0) / 100.0; }

std::string label3(const char* kind, double a, double b, double c) {
  std::ostringstream os;
  os << kind << "(" << fmt_round(a) << "," << fmt_round(b) << "," << fmt_round(c) << ")";
  return os.str();
}

/// Eigenvalue triple for a canonical model, cycling through repeated
/// patterns so the corpus exercises every multiplicity case.
std::array<double, 3> canonical_triple(CounterRng& rng, int index) {
  const double a = rng.next_uniform(-3.0, 3.0);
  const double b = rng.next_uniform(-3.0, 3.0);
  const double c = rng.next_uniform(-3.0, 3.0);
  switch (index % 4) {
    case 0: return {a, b, c};
    case 1: return {a, a, b};
    case 2: return {a, b, b};
    default: return {a, a, a};
  }
}

/// Curvature scale away from zero, sign alternating with the draw.
double nonzero_scale(CounterRng& rng) {
  const double mag = 0.5 + 2.5 * rng.next_unit();
  return rng.next_unit() < 0.5 ? -mag : mag;
}

}  // namespace

CorpusMix default_mix(int dim, int trials) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  CorpusMix mix;
  if (dim == 4) {
    mix.canonical = trials / 4;
    mix.spaceForms = trials / 10;
    mix.perturbed = trials / 4;
  } else {
    mix.spaceForms = trials / 3;
    mix.perturbed = trials / 4;
  }
  mix.randoms = trials - mix.canonical - mix.spaceForms - mix.perturbed;
  return mix;
}

std::vector<CorpusModel> make_corpus(int dim, const CorpusMix& mix, std::uint64_t seed) {
  if (dim != 3 && dim != 4)
    throw WrongDimension("corpus dimension must be 3 or 4, got " + std::to_string(dim));
  if (dim == 3 && mix.canonical != 0)
    throw std::invalid_argument("canonical models exist only in dimension 4");

  std::vector<CorpusModel> corpus;
  corpus.reserve(mix.total());
  const std::uint64_t base = CounterRng::derive(seed, rng_stream::kCorpus);
  int trial = 0;

  for (int t = 0; t < mix.canonical; ++t, ++trial) {
    CounterRng rng(base, static_cast<std::uint64_t>(trial));
    const auto l = canonical_triple(rng, t);
    corpus.push_back({"canonical", label3("canonical", l[0], l[1], l[2]),
                      canonical_osserman(l[0], l[1], l[2])});
  }
  for (int t = 0; t < mix.spaceForms; ++t, ++trial) {
    CounterRng rng(base, static_cast<std::uint64_t>(trial));
    const double c = t == 0 ? 0.0 : nonzero_scale(rng);  // keep one flat model around
    std::ostringstream os;
    os << "space-form(c=" << fmt_round(c) << ")";
    corpus.push_back({"space-form", os.str(), space_form(dim, c)});
  }
  for (int t = 0; t < mix.randoms; ++t, ++trial) {
    CounterRng rng(base, static_cast<std::uint64_t>(trial));
    const std::uint64_t s = rng.next_u64();
    std::ostringstream os;
    os << "random(seed=" << s << ")";
    corpus.push_back({"random", os.str(), random_curvature(dim, s, 1.0)});
  }
  for (int t = 0; t < mix.perturbed; ++t, ++trial) {
    CounterRng rng(base, static_cast<std::uint64_t>(trial));
    CurvatureTensor baseModel =
        (dim == 4 && t % 2 == 0)
            ? [&] {
                auto l = canonical_triple(rng, t / 2);
                for (auto& v : l) v += (v >= 0.0 ? 1.0 : -1.0);  // keep ||base|| >= 1
                return canonical_osserman(l[0], l[1], l[2]);
              }()
            : space_form(dim, nonzero_scale(rng));
    const double eps = 0.05 * std::max(1.0, baseModel.max_abs());
    const std::uint64_t s = rng.next_u64();
    std::ostringstream os;
    os << "perturbed(eps=" << fmt_round(eps) << ",seed=" << s << ")";
    corpus.push_back({"perturbed", os.str(), perturb(baseModel, s, eps)});
  }
  return corpus;
}

FuzzSummary run_fuzz(int dim, const CorpusMix& mix, std::uint64_t seed, double tol,
                     const SampleConfig& base) {
  const std::vector<CorpusModel> corpus = make_corpus(dim, mix, seed);
  FuzzSummary summary;
  summary.dim = dim;
  summary.trials = static_cast<int>(corpus.size());
  summary.seed = seed;
  summary.perTrial.resize(corpus.size());

  std::exception_ptr err = nullptr;
  const std::int64_t count = static_cast<std::int64_t>(corpus.size());
// Trials are independent; each one runs the serial checkers internally and
// writes its own slot, so the aggregate is order-independent.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      SampleConfig cfg = base;
      cfg.seed = CounterRng::derive(base.seed, 1000 + static_cast<std::uint64_t>(i));
      const EquivalenceReport rep =
          serial::equivalence_experiment(corpus[i].tensor, cfg, tol);
      FuzzTrial& t = summary.perTrial[i];
      t.kind = corpus[i].kind;
      t.label = corpus[i].label;
      t.dualityPass = rep.duality.pass;
      t.ossermanPass = rep.osserman.pass;
      t.agree = rep.agree;
      t.exactConsistent = rep.exactConsistent.value_or(true);
      t.marginal = rep.anyMarginal();
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  for (const auto& t : summary.perTrial) {
    const bool consistent = t.agree && t.exactConsistent;
    if (consistent) ++summary.agreements;
    if (t.marginal) ++summary.marginalCount;
    if (!consistent && !t.marginal) ++summary.nonMarginalDisagreements;
  }
  return summary;
}

FuzzSummary run_fuzz(int dim, int trials, std::uint64_t seed, double tol,
                     const SampleConfig& base) {
  return run_fuzz(dim, default_mix(dim, trials), seed, tol, base);
}

}  // namespace osslab
