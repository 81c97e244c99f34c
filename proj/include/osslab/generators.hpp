#pragma once

#include <cstdint>

#include "osslab/tensor.hpp"

namespace osslab {

/// Constant-sectional-curvature tensor
///   A(x,y,z,w) = c (<x,w><y,z> - <x,z><y,w>),
/// whose Jacobi operator is c(Id - x x^T) for every unit x: the simplest
/// Osserman model, Einstein with rho = (n-1) c Id.
CurvatureTensor space_form(int n, double c);

/// project_curvature applied to i.i.d. uniform(-scale, scale) draws from
/// the counter-based generator; deterministic in (n, seed, scale). Generic
/// outputs are neither Osserman nor duality models.
CurvatureTensor random_curvature(int n, std::uint64_t seed, double scale);

/// R + eps * random_curvature(n, seed, 1). Still a valid curvature tensor.
CurvatureTensor perturb(const CurvatureTensor& r, std::uint64_t seed, double eps);

}  // namespace osslab
