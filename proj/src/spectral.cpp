#include "osslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace osslab {

namespace {

constexpr double kSweepTol = 1e-14;    // off-diagonal threshold, relative to ||M||
constexpr double kSymTol = 1e-12;      // input asymmetry bound
constexpr double kKernelTol = 1e-10;   // ||Mx|| bound in restrict_to_perp
constexpr int kMaxSweeps = 50;

double offdiag_max(const Matrix& m) {
  double mx = 0.0;
  for (int p = 0; p < m.rows(); ++p)
    for (int q = p + 1; q < m.cols(); ++q) mx = std::max(mx, std::abs(m(p, q)));
  return mx;
}

/// Largest-magnitude coordinate made positive; ties broken by lowest index.
void fix_sign(Matrix& q, int col) {
  int best = 0;
  double mag = 0.0;
  for (int i = 0; i < q.rows(); ++i) {
    const double a = std::abs(q(i, col));
    if (a > mag) {
      mag = a;
      best = i;
    }
  }
  if (q(best, col) < 0.0)
    for (int i = 0; i < q.rows(); ++i) q(i, col) = -q(i, col);
}

}  // namespace

double default_grouping_tol(const Vec& sortedValues) {
  double diameter = 0.0;
  if (!sortedValues.empty()) diameter = sortedValues.back() - sortedValues.front();
  return 1e-7 + 1e-7 * diameter;
}

std::vector<std::vector<int>> group_eigenvalues(const Vec& sortedValues, double tol) {
  if (tol < 0.0) throw std::invalid_argument("grouping tolerance must be >= 0");
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(sortedValues.size()); ++i) {
    if (!groups.empty() && sortedValues[i] - sortedValues[groups.back().back()] <= tol)
      groups.back().push_back(i);
    else
      groups.push_back({i});
  }
  return groups;
}

SpectralDecomposition eigh(const Matrix& m, std::optional<double> groupingTol) {
  if (m.rows() != m.cols()) throw ShapeMismatch("eigh expects a square matrix");
  const int n = m.rows();
  const double scale = max_abs(m);
  if (max_asymmetry(m) > kSymTol * std::max(1.0, scale))
    throw NonSymmetric("matrix is asymmetric beyond tolerance");

  Matrix b = symmetrized(m);
  Matrix v = Matrix::identity(n);
  const double thresh = kSweepTol * scale;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_max(b) <= thresh) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = b(p, q);
        if (std::abs(apq) <= thresh) continue;
        const double theta = 0.5 * (b(q, q) - b(p, p)) / apq;
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        b(p, p) -= t * apq;
        b(q, q) += t * apq;
        b(p, q) = 0.0;
        b(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = b(r, p);
          const double h = b(r, q);
          b(r, p) = c * g - s * h;
          b(p, r) = b(r, p);
          b(r, q) = s * g + c * h;
          b(q, r) = b(r, q);
        }
        for (int r = 0; r < n; ++r) {
          const double g = v(r, p);
          const double h = v(r, q);
          v(r, p) = c * g - s * h;
          v(r, q) = s * g + c * h;
        }
      }
  }
  if (offdiag_max(b) > thresh)
    throw NoConvergence("Jacobi sweeps did not converge within " +
                        std::to_string(kMaxSweeps) + " sweeps");

  // Sort ascending; stable so exactly equal eigenvalues keep rotation order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int c) { return b(a, a) < b(c, c); });

  SpectralDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    dec.eigenvalues[j] = b(order[j], order[j]);
    for (int i = 0; i < n; ++i) dec.eigenvectors(i, j) = v(i, order[j]);
  }

  dec.groups = group_eigenvalues(dec.eigenvalues,
                                 groupingTol.value_or(default_grouping_tol(dec.eigenvalues)));

  // Re-orthonormalize within degenerate groups (tiny correction: the
  // rotation product is already orthogonal to rounding).
  for (const auto& g : dec.groups) {
    if (g.size() < 2) continue;
    for (std::size_t a = 0; a < g.size(); ++a) {
      Vec col = column(dec.eigenvectors, g[a]);
      for (std::size_t p = 0; p < a; ++p) {
        const Vec prev = column(dec.eigenvectors, g[p]);
        const double d = dot(col, prev);
        for (int i = 0; i < n; ++i) col[i] -= d * prev[i];
      }
      const double nn = norm(col);
      for (int i = 0; i < n; ++i) dec.eigenvectors(i, g[a]) = col[i] / nn;
    }
  }

  for (int j = 0; j < n; ++j) fix_sign(dec.eigenvectors, j);
  return dec;
}

Matrix perp_basis(const Vec& x) {
  const Vec u = normalized(x);
  const int n = static_cast<int>(u.size());
  // Householder vector h = u + sign(u_0) e_0; the reflection maps e_0 to
  // -sign(u_0) u, and its remaining columns span u^perp.
  Vec h = u;
  const double s = (u[0] >= 0.0) ? 1.0 : -1.0;
  h[0] += s;
  const double hh = dot(h, h);
  Matrix q(n, n - 1);
  for (int col = 1; col < n; ++col) {
    const double f = 2.0 * h[col] / hh;
    for (int i = 0; i < n; ++i) q(i, col - 1) = (i == col ? 1.0 : 0.0) - f * h[i];
  }
  return q;
}

Matrix restrict_to_perp(const Matrix& m, const Vec& x) {
  if (m.rows() != m.cols() || m.rows() != static_cast<int>(x.size()))
    throw ShapeMismatch("restrict_to_perp: size mismatch");
  const Vec u = normalized(x);
  const Vec mu = m * u;
  if (norm(mu) > kKernelTol * std::max(1.0, max_abs(m)))
    throw KernelViolation("||M x|| = " + std::to_string(norm(mu)) +
                          " exceeds the kernel tolerance");
  const Matrix q = perp_basis(u);
  return symmetrized(transpose(q) * (m * q));
}

}  // namespace osslab
