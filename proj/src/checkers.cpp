#include "osslab/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>

#include "osslab/fourdim.hpp"
#include "osslab/rng.hpp"
#include "osslab/spectral.hpp"

namespace osslab {

namespace {

void require_checker_dim(const CurvatureTensor& r, const char* op) {
  if (r.dimension() != 3 && r.dimension() != 4)
    throw WrongDimension(std::string(op) + " supports dimensions 3 and 4, got " +
                         std::to_string(r.dimension()));
}

/// Residual and worst offender produced by one sample direction.
struct SampleOutcome {
  double residual = 0.0;
  double eigenvalue = 0.0;
};

SampleOutcome osserman_sample(const CurvatureTensor& r, const Vec& x, const Vec& ref) {
  const Vec spec = perp_spectrum(r, x);
  SampleOutcome out;
  for (std::size_t p = 0; p < spec.size(); ++p) {
    const double d = std::abs(spec[p] - ref[p]);
    if (d >= out.residual) {
      out.residual = d;
      out.eigenvalue = spec[p];
    }
  }
  return out;
}

SampleOutcome duality_sample(const CurvatureTensor& r, const Vec& x, std::uint64_t probeKey,
                             int eigenspaceProbes) {
  const Vec xu = normalized(x);
  const Matrix jx = jacobi(r, xu);
  const Matrix q = perp_basis(xu);
  const SpectralDecomposition dec = eigh(restrict_to_perp(jx, xu));
  const int n = r.dimension();

  SampleOutcome out;
  auto dual_residual = [&](const Vec& y, double lambda) {
    const Vec jyx = jacobi(r, y) * xu;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = jyx[i] - lambda * xu[i];
      s += d * d;
    }
    const double res = std::sqrt(s);
    if (res >= out.residual) {
      out.residual = res;
      out.eigenvalue = lambda;
    }
  };

  for (std::size_t g = 0; g < dec.groups.size(); ++g) {
    const auto& group = dec.groups[g];
    for (int member : group)
      dual_residual(q * column(dec.eigenvectors, member), dec.eigenvalues[member]);

    // Extra probes inside degenerate eigenspaces; the eigenvalue of a probe
    // is its Rayleigh quotient, which coincides with the group value when
    // the eigenspace is genuine.
    if (group.size() > 1 && eigenspaceProbes > 0) {
      CounterRng rng(probeKey, g);
      for (int p = 0; p < eigenspaceProbes; ++p) {
        Vec combo(n, 0.0);
        for (int member : group) {
          const double c = rng.next_normal();
          const Vec col = q * column(dec.eigenvectors, member);
          for (int i = 0; i < n; ++i) combo[i] += c * col[i];
        }
        if (norm(combo) < 1e-9) continue;  // essentially impossible, skip
        const Vec y = normalized(combo);
        dual_residual(y, dot(jx * y, y));
      }
    }
  }
  return out;
}

CheckReport reduce_outcomes(std::string name, const std::vector<Vec>& samples,
                            const std::vector<SampleOutcome>& outcomes, double threshold) {
  double worst = 0.0;
  for (const auto& o : outcomes) worst = std::max(worst, o.residual);

  // First failing sample (lowest index) supplies the witness; this keeps the
  // report independent of the execution order of the sample loop.
  Witness w;
  for (std::size_t i = 0; i < outcomes.size(); ++i)
    if (outcomes[i].residual > threshold) {
      w.direction = samples[i];
      w.eigenvalue = outcomes[i].eigenvalue;
      w.residual = outcomes[i].residual;
      break;
    }
  return CheckReport::make(std::move(name), worst, threshold,
                           static_cast<int>(samples.size()), w);
}

template <typename PerSample>
std::vector<SampleOutcome> drive_samples(const std::vector<Vec>& samples, bool parallel,
                                         PerSample&& body) {
  std::vector<SampleOutcome> outcomes(samples.size());
  std::exception_ptr err = nullptr;
  const std::int64_t count = static_cast<std::int64_t>(samples.size());
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        outcomes[i] = body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) outcomes[i] = body(static_cast<std::size_t>(i));
  }
  if (err) std::rethrow_exception(err);
  return outcomes;
}

CheckReport run_osserman(const CurvatureTensor& r, const SampleConfig& cfg, double tol,
                         bool parallel) {
  require_checker_dim(r, "osserman_check_sampled");
  const std::vector<Vec> samples = sample_unit_vectors(r.dimension(), cfg);
  const Vec ref = perp_spectrum(r, samples.front());
  const double diameter = ref.back() - ref.front();
  const double threshold = tol * std::max(1.0, diameter);

  auto outcomes = drive_samples(samples, parallel,
                                [&](std::size_t i) { return osserman_sample(r, samples[i], ref); });
  return reduce_outcomes("osserman-sampled", samples, outcomes, threshold);
}

CheckReport run_duality(const CurvatureTensor& r, const SampleConfig& cfg, double tol,
                        int eigenspaceProbes, bool parallel) {
  require_checker_dim(r, "rakic_duality_check");
  if (eigenspaceProbes < 0) throw std::invalid_argument("eigenspaceProbes must be >= 0");
  const std::vector<Vec> samples = sample_unit_vectors(r.dimension(), cfg);
  const double threshold = tol * std::max(1.0, r.max_abs());
  const std::uint64_t probeBase = CounterRng::derive(cfg.seed, rng_stream::kEigenspaceProbe);

  auto outcomes = drive_samples(samples, parallel, [&](std::size_t i) {
    return duality_sample(r, samples[i], CounterRng::derive(probeBase, i), eigenspaceProbes);
  });
  return reduce_outcomes("rakic-duality", samples, outcomes, threshold);
}

EquivalenceReport run_equivalence(const CurvatureTensor& r, const SampleConfig& cfg, double tol,
                                  bool parallel) {
  require_checker_dim(r, "equivalence_experiment");
  EquivalenceReport rep;
  rep.duality = run_duality(r, cfg, tol, 2, parallel);
  rep.osserman = run_osserman(r, cfg, tol, parallel);
  rep.agree = rep.duality.pass == rep.osserman.pass;
  if (r.dimension() == 4) {
    rep.exact = osserman_check_exact(r, tol);
    rep.exactConsistent =
        rep.exact->pass == rep.duality.pass && rep.exact->pass == rep.osserman.pass;
  }
  return rep;
}

}  // namespace

std::vector<Vec> sample_unit_vectors(int n, const SampleConfig& cfg) {
  if (n < 2) throw std::invalid_argument("sampling requires dimension >= 2");
  if (cfg.count < 1) throw std::invalid_argument("sample count must be >= 1");

  std::vector<Vec> out;
  out.reserve(cfg.count);
  const std::uint64_t base = CounterRng::derive(cfg.seed, rng_stream::kSampleVectors);
  for (int s = 0; s < cfg.count; ++s) {
    CounterRng rng(base, static_cast<std::uint64_t>(s));
    Vec v(n);
    double nn = 0.0;
    do {
      for (auto& c : v) c = rng.next_normal();
      nn = norm(v);
    } while (nn < 1e-6);
    for (auto& c : v) c /= nn;
    out.push_back(std::move(v));
  }

  if (cfg.includeStructured) {
    const double invSqrt2 = 1.0 / std::sqrt(2.0);
    const double halfSqrt3 = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < n; ++i) {
      Vec v(n, 0.0);
      v[i] = 1.0;
      out.push_back(std::move(v));
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (double sign : {+1.0, -1.0}) {
          Vec v(n, 0.0);
          v[i] = invSqrt2;
          v[j] = sign * invSqrt2;
          out.push_back(std::move(v));
        }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Vec v(n, 0.0);
        v[i] = halfSqrt3;
        v[j] = 0.5;
        out.push_back(std::move(v));
      }
  }
  return out;
}

Vec perp_spectrum(const CurvatureTensor& r, const Vec& x) {
  const Vec xu = normalized(x);
  return eigh(restrict_to_perp(jacobi(r, xu), xu)).eigenvalues;
}

CheckReport osserman_check_sampled(const CurvatureTensor& r, const SampleConfig& cfg,
                                   double tol) {
  return run_osserman(r, cfg, tol, /*parallel=*/true);
}

CheckReport rakic_duality_check(const CurvatureTensor& r, const SampleConfig& cfg, double tol,
                                int eigenspaceProbes) {
  return run_duality(r, cfg, tol, eigenspaceProbes, /*parallel=*/true);
}

EquivalenceReport equivalence_experiment(const CurvatureTensor& r, const SampleConfig& cfg,
                                         double tol) {
  return run_equivalence(r, cfg, tol, /*parallel=*/true);
}

namespace serial {

CheckReport osserman_check_sampled(const CurvatureTensor& r, const SampleConfig& cfg,
                                   double tol) {
  return run_osserman(r, cfg, tol, /*parallel=*/false);
}

CheckReport rakic_duality_check(const CurvatureTensor& r, const SampleConfig& cfg, double tol,
                                int eigenspaceProbes) {
  return run_duality(r, cfg, tol, eigenspaceProbes, /*parallel=*/false);
}

EquivalenceReport equivalence_experiment(const CurvatureTensor& r, const SampleConfig& cfg,
                                         double tol) {
  return run_equivalence(r, cfg, tol, /*parallel=*/false);
}

}  // namespace serial

}  // namespace osslab
