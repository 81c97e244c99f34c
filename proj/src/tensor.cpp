#include "osslab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace osslab {

namespace {

constexpr double kConflictTol = 1e-12;  // absolute, construction time
constexpr double kOrthoTol = 1e-12;

std::size_t flat(int n, int i, int j, int k, int l) {
  return ((static_cast<std::size_t>(i) * n + j) * n + k) * n + l;
}

void check_dimension(int n) {
  if (n < CurvatureTensor::kMinDimension || n > CurvatureTensor::kMaxDimension)
    throw std::invalid_argument("dimension must lie in [2, 8], got " + std::to_string(n));
}

/// The 8 signed symmetry images of an index tuple: antisymmetry in each
/// pair and pair interchange.
struct OrbitImage {
  int i, j, k, l;
  double sign;
};

std::array<OrbitImage, 8> orbit(int i, int j, int k, int l) {
  return {{{i, j, k, l, +1.0},
           {j, i, k, l, -1.0},
           {i, j, l, k, -1.0},
           {j, i, l, k, +1.0},
           {k, l, i, j, +1.0},
           {l, k, i, j, -1.0},
           {k, l, j, i, -1.0},
           {l, k, j, i, +1.0}}};
}

/// Writes one value across a full orbit, so pair symmetries hold bitwise.
void write_orbit(int n, std::vector<double>& a, int i, int j, int k, int l, double v) {
  for (const auto& im : orbit(i, j, k, l)) a[flat(n, im.i, im.j, im.k, im.l)] = im.sign * v;
}

double bianchi_residual_raw(int n, const std::vector<double>& a) {
  double mx = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double b =
              a[flat(n, i, j, k, l)] + a[flat(n, j, k, i, l)] + a[flat(n, k, i, j, l)];
          mx = std::max(mx, std::abs(b));
        }
  return mx;
}

void check_bianchi(int n, const std::vector<double>& a) {
  double mx = 0.0;
  for (double v : a) mx = std::max(mx, std::abs(v));
  const double res = bianchi_residual_raw(n, a);
  if (res > CurvatureTensor::kBianchiTol * mx) {
    std::ostringstream os;
    os << "first Bianchi identity violated: residual " << res << " exceeds "
       << CurvatureTensor::kBianchiTol << " * " << mx;
    throw BianchiViolation(os.str());
  }
}

/// J(v)[i][j] = A(e_j, v, v, e_i) without normalizing v; used where the
/// bilinear expansion must be exact in the raw argument.
double jacobi_entry_raw(const CurvatureTensor& r, const Vec& v, int i, int j) {
  const int n = r.dimension();
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    if (v[k] == 0.0) continue;
    for (int l = 0; l < n; ++l) s += r(j, k, l, i) * v[k] * v[l];
  }
  return s;
}

}  // namespace

CurvatureTensor CurvatureTensor::zero(int n) {
  check_dimension(n);
  const std::size_t sz = static_cast<std::size_t>(n) * n * n * n;
  return CurvatureTensor(n, std::vector<double>(sz, 0.0));
}

CurvatureTensor CurvatureTensor::from_raw(int n, std::span<const double> raw) {
  check_dimension(n);
  const std::size_t sz = static_cast<std::size_t>(n) * n * n * n;
  if (raw.size() != sz)
    throw ShapeMismatch("expected " + std::to_string(sz) + " components, got " +
                        std::to_string(raw.size()));
  std::vector<double> a(raw.begin(), raw.end());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = a[flat(n, i, j, k, l)];
          if (a[flat(n, j, i, k, l)] != -v || a[flat(n, k, l, i, j)] != v)
            throw Error("raw array violates the exact pair symmetries at (" +
                        std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                        "," + std::to_string(l) + ")");
        }
  check_bianchi(n, a);
  return CurvatureTensor(n, std::move(a));
}

double CurvatureTensor::max_abs() const {
  double mx = 0.0;
  for (double v : a_) mx = std::max(mx, std::abs(v));
  return mx;
}

double CurvatureTensor::bianchi_residual() const { return bianchi_residual_raw(n_, a_); }

CurvatureTensor canonicalize(int n, std::span<const ComponentEntry> entries) {
  check_dimension(n);
  const std::size_t sz = static_cast<std::size_t>(n) * n * n * n;
  std::vector<double> a(sz, 0.0);
  std::vector<signed char> assigned(sz, 0);

  for (const auto& e : entries) {
    for (int idx : {e.i, e.j, e.k, e.l})
      if (idx < 0 || idx >= n)
        throw IndexOutOfRange("component index " + std::to_string(idx) +
                              " out of range for dimension " + std::to_string(n));
    for (const auto& im : orbit(e.i, e.j, e.k, e.l)) {
      const std::size_t f = flat(n, im.i, im.j, im.k, im.l);
      const double v = im.sign * e.value;
      if (assigned[f]) {
        if (std::abs(a[f] - v) > kConflictTol) {
          std::ostringstream os;
          os << "component (" << e.i << "," << e.j << "," << e.k << "," << e.l
             << ") conflicts with an earlier seed under symmetry: image (" << im.i << ","
             << im.j << "," << im.k << "," << im.l << ") already holds " << a[f]
             << ", propagation gives " << v;
          throw ConflictingEntry(os.str(), e.i, e.j, e.k, e.l, a[f], v);
        }
        continue;  // agreeing duplicate; first value wins
      }
      a[f] = v;
      assigned[f] = 1;
    }
  }

  check_bianchi(n, a);
  return CurvatureTensor(n, std::move(a));
}

CurvatureTensor project_curvature(int n, std::span<const double> raw) {
  check_dimension(n);
  const std::size_t sz = static_cast<std::size_t>(n) * n * n * n;
  if (raw.size() != sz)
    throw ShapeMismatch("expected " + std::to_string(sz) + " components, got " +
                        std::to_string(raw.size()));

  std::vector<double> s1(sz), s2(sz), s3(sz);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s1[flat(n, i, j, k, l)] =
              0.5 * (raw[flat(n, i, j, k, l)] - raw[flat(n, j, i, k, l)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s2[flat(n, i, j, k, l)] =
              0.5 * (s1[flat(n, i, j, k, l)] - s1[flat(n, i, j, l, k)]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          s3[flat(n, i, j, k, l)] =
              0.5 * (s2[flat(n, i, j, k, l)] + s2[flat(n, k, l, i, j)]);

  // Bianchi projection S - (1/3) bS, evaluated once per orbit representative
  // and written across the orbit so the pair symmetries stay bitwise exact.
  std::vector<double> out(sz, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          const double b = s3[flat(n, i, j, k, l)] + s3[flat(n, j, k, i, l)] +
                           s3[flat(n, k, i, j, l)];
          write_orbit(n, out, i, j, k, l, s3[flat(n, i, j, k, l)] - b / 3.0);
        }
  return CurvatureTensor(n, std::move(out));
}

CurvatureTensor add_scaled(const CurvatureTensor& r, double s, const CurvatureTensor& x) {
  if (r.dimension() != x.dimension())
    throw ShapeMismatch("tensor dimensions differ: " + std::to_string(r.dimension()) +
                        " vs " + std::to_string(x.dimension()));
  std::vector<double> a(r.raw().begin(), r.raw().end());
  auto xr = x.raw();
  for (std::size_t f = 0; f < a.size(); ++f) a[f] += s * xr[f];
  return CurvatureTensor::from_raw(r.dimension(), a);
}

Matrix jacobi(const CurvatureTensor& r, const Vec& x) {
  const int n = r.dimension();
  if (static_cast<int>(x.size()) != n)
    throw ShapeMismatch("direction has size " + std::to_string(x.size()) +
                        ", tensor dimension is " + std::to_string(n));
  const Vec u = normalized(x);  // throws ZeroVector
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double v = jacobi_entry_raw(r, u, i, j);
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

double jacobi_expansion_residual(const CurvatureTensor& r, const Vec& x, const Vec& y,
                                 double theta) {
  const int n = r.dimension();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw ShapeMismatch("direction size does not match tensor dimension");
  if (std::abs(norm(x) - 1.0) > kOrthoTol || std::abs(norm(y) - 1.0) > kOrthoTol ||
      std::abs(dot(x, y)) > kOrthoTol)
    throw NotOrthonormal("x, y must be orthonormal unit vectors");

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = c * x[i] + s * y[i];

  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // Mixed operator A(.,x)y + A(.,y)x in the same slot convention as J.
      double cross = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) cross += x[k] * y[l] * (r(j, k, l, i) + r(j, l, k, i));
      const double lhs = jacobi_entry_raw(r, v, i, j);
      const double rhs = c * c * jacobi_entry_raw(r, x, i, j) +
                         s * s * jacobi_entry_raw(r, y, i, j) + c * s * cross;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

Matrix ricci(const CurvatureTensor& r) {
  const int n = r.dimension();
  Matrix rho(n, n);
  // Summands are bitwise symmetric in (i,j) thanks to exact storage
  // symmetry, so the plain double loop already yields rho = rho^T.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += r(k, i, j, k);
      rho(i, j) = s;
    }
  return rho;
}

double scalar_curvature(const CurvatureTensor& r) {
  const Matrix rho = ricci(r);
  double tau = 0.0;
  for (int i = 0; i < r.dimension(); ++i) tau += rho(i, i);
  return tau;
}

CheckReport einstein_check(const CurvatureTensor& r, double tol) {
  const int n = r.dimension();
  const Matrix rho = ricci(r);
  double tau = 0.0;
  for (int i = 0; i < n; ++i) tau += rho(i, i);
  const double c = tau / n;

  double dev = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d = std::abs(rho(i, j) - (i == j ? c : 0.0));
      if (d > dev) {
        dev = d;
        wi = i;
        wj = j;
      }
    }

  const double threshold = tol * std::max(1.0, max_abs(rho));
  Witness w;
  w.direction = Vec(n, 0.0);
  w.direction[wi] = 1.0;
  w.eigenvalue = rho(wi, wj);
  w.residual = dev;
  return CheckReport::make("einstein", dev, threshold, 0, w);
}

}  // namespace osslab
