#pragma once

#include <optional>
#include <vector>

#include "osslab/linalg.hpp"

namespace osslab {

/// Full eigendecomposition of a small symmetric matrix.
///
/// Eigenvalues are sorted ascending; eigenvector columns are paired with
/// them, orthonormal, and sign-normalized (largest-magnitude coordinate
/// positive, ties broken by lowest index) so identical inputs produce
/// bit-identical output. `groups` partitions the indices into clusters of
/// eigenvalues closer than the grouping tolerance; within a cluster only
/// the eigenspace, not the individual vectors, is contractually meaningful.
struct SpectralDecomposition {
  Vec eigenvalues;
  Matrix eigenvectors;
  std::vector<std::vector<int>> groups;
};

/// Grouping tolerance used when none is supplied: one order looser than the
/// eigensolver accuracy, absolute plus relative to the spectrum diameter.
double default_grouping_tol(const Vec& sortedValues);

/// Cyclic Jacobi-rotation eigensolver. Off-diagonal threshold is
/// 1e-14 * ||M||_inf with at most 50 sweeps (NoConvergence beyond that,
/// which cannot happen for m <= 8). Throws NonSymmetric when the input is
/// asymmetric beyond 1e-12 * max(1, ||M||_inf).
SpectralDecomposition eigh(const Matrix& m, std::optional<double> groupingTol = std::nullopt);

/// Deterministic orthonormal completion of the unit vector x: the n x (n-1)
/// matrix whose columns are the trailing columns of the Householder
/// reflection mapping e_1 to +-x.
Matrix perp_basis(const Vec& x);

/// Matrix of M restricted to x^perp in the perp_basis(x) coordinates.
/// Requires M x = 0 within 1e-10 * max(1, ||M||_inf); KernelViolation
/// otherwise. The spectrum equals the spectrum of M minus one zero.
Matrix restrict_to_perp(const Matrix& m, const Vec& x);

/// Greedy left-to-right chaining of sorted values: a value joins the
/// current group iff it is within tol of the group's current maximum.
std::vector<std::vector<int>> group_eigenvalues(const Vec& sortedValues, double tol);

}  // namespace osslab
