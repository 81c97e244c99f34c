#include "osslab/generators.hpp"

#include <utility>
#include <vector>

#include "osslab/rng.hpp"

namespace osslab {

CurvatureTensor space_form(int n, double c) {
  std::vector<ComponentEntry> seeds;
  // A(i,j,j,i) = c for i < j; all other orbits vanish.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) seeds.push_back({i, j, j, i, c});
  return canonicalize(n, seeds);
}

CurvatureTensor random_curvature(int n, std::uint64_t seed, double scale) {
  const std::size_t sz =
      static_cast<std::size_t>(n) * n * static_cast<std::size_t>(n) * n;
  CounterRng rng(seed, rng_stream::kRandomTensor);
  std::vector<double> raw(sz);
  for (auto& v : raw) v = rng.next_uniform(-scale, scale);
  return project_curvature(n, raw);
}

CurvatureTensor perturb(const CurvatureTensor& r, std::uint64_t seed, double eps) {
  if (eps < 0.0) throw std::invalid_argument("perturbation size must be >= 0");
  return add_scaled(r, eps, random_curvature(r.dimension(), seed, 1.0));
}

}  // namespace osslab
