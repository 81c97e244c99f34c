#include "osslab/fourdim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "osslab/spectral.hpp"

namespace osslab {

namespace {

void require_dim4(const CurvatureTensor& r, const char* op) {
  if (r.dimension() != 4)
    throw WrongDimension(std::string(op) + " requires a 4-dimensional model, got dimension " +
                         std::to_string(r.dimension()));
}

/// Ascending index pairs spanning the bivector space Lambda.
constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int pair_index(int a, int b) {  // requires a < b
  static constexpr int lut[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return lut[a][b];
}

/// Coordinates of f_a ^ f_b in the standard Lambda basis.
void add_wedge(Vec& coords, int a, int b, double weight) {
  if (a < b)
    coords[pair_index(a, b)] += weight;
  else
    coords[pair_index(b, a)] -= weight;
}

/// E_i^{+-} for the frame (e1,e2,e3,e4) when orientation = +1, and for the
/// frame (e1,e2,e4,e3) when orientation = -1. Each is returned as a
/// 6-coordinate vector over the standard Lambda basis.
std::array<Vec, 3> star_eigenbasis(int orientation, int sign) {
  const std::array<int, 4> f =
      orientation > 0 ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 1, 3, 2};
  const double r = 1.0 / std::sqrt(2.0);
  std::array<Vec, 3> basis{Vec(6, 0.0), Vec(6, 0.0), Vec(6, 0.0)};
  add_wedge(basis[0], f[0], f[1], r);
  add_wedge(basis[0], f[2], f[3], sign * r);
  add_wedge(basis[1], f[0], f[2], r);
  add_wedge(basis[1], f[1], f[3], -sign * r);
  add_wedge(basis[2], f[0], f[3], r);
  add_wedge(basis[2], f[1], f[2], sign * r);
  return basis;
}

Matrix bivector_matrix(const Vec& coords) {
  Matrix m(4, 4);
  for (int p = 0; p < 6; ++p) {
    const auto [a, b] = kPairs[p];
    m(a, b) += coords[p];
    m(b, a) -= coords[p];
  }
  return m;
}

/// Weyl operator on Lambda in the standard bivector basis.
Matrix weyl_on_lambda(const CurvatureTensor& w) {
  Matrix m(6, 6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q)
      m(p, q) = w(kPairs[p].first, kPairs[p].second, kPairs[q].first, kPairs[q].second);
  return m;
}

Matrix projected_block(const Matrix& mLambda, const std::array<Vec, 3>& basis) {
  Matrix out(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      double s = 0.0;
      for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q) s += basis[a][p] * mLambda(p, q) * basis[b][q];
      out(a, b) = s;
      out(b, a) = s;
    }
  return out;
}

struct SelfDualNorms {
  double plus, minus, scale;
};

SelfDualNorms self_dual_norms(const CurvatureTensor& r, double tol, HodgeSplit* split = nullptr) {
  HodgeSplit hs = weyl_pm(r, +1);
  SelfDualNorms out{max_abs(hs.weylPlus), max_abs(hs.weylMinus),
                    tol * std::max(1.0, weyl(r).max_abs())};
  if (split) *split = std::move(hs);
  return out;
}

}  // namespace

CurvatureTensor weyl(const CurvatureTensor& r) {
  require_dim4(r, "weyl");
  const int n = 4;
  const Matrix rho = ricci(r);
  double tau = 0.0;
  for (int i = 0; i < n; ++i) tau += rho(i, i);

  auto g = [](int a, int b) { return a == b ? 1.0 : 0.0; };
  std::vector<double> raw(256, 0.0);
  auto at = [&raw](int a, int b, int c, int d) -> double& {
    return raw[((static_cast<std::size_t>(a) * 4 + b) * 4 + c) * 4 + d];
  };
  // Each representative written across its full orbit, bitwise symmetric.
  auto write = [&](int i, int j, int k, int l, double v) {
    at(i, j, k, l) = v;
    at(j, i, k, l) = -v;
    at(i, j, l, k) = -v;
    at(j, i, l, k) = v;
    at(k, l, i, j) = v;
    at(l, k, i, j) = -v;
    at(k, l, j, i) = -v;
    at(l, k, j, i) = v;
  };

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (std::make_pair(i, j) > std::make_pair(k, l)) continue;
          const double v = r(i, j, k, l) +
                           tau / 6.0 * (g(i, l) * g(j, k) - g(i, k) * g(j, l)) -
                           0.5 * (rho(i, l) * g(j, k) + rho(j, k) * g(i, l) -
                                  rho(i, k) * g(j, l) - rho(j, l) * g(i, k));
          write(i, j, k, l, v);
        }
  return CurvatureTensor::from_raw(4, raw);
}

Matrix hodge_star() {
  Matrix s(6, 6);
  s(0, 5) = 1.0;
  s(5, 0) = 1.0;
  s(1, 4) = -1.0;
  s(4, 1) = -1.0;
  s(2, 3) = 1.0;
  s(3, 2) = 1.0;
  return s;
}

HodgeSplit weyl_pm(const CurvatureTensor& r, int orientation) {
  require_dim4(r, "weyl_pm");
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("orientation must be +1 or -1");

  const Matrix mLambda = weyl_on_lambda(weyl(r));
  const auto plus = star_eigenbasis(orientation, +1);
  const auto minus = star_eigenbasis(orientation, -1);

  HodgeSplit hs;
  hs.orientation = orientation;
  for (int i = 0; i < 3; ++i) {
    hs.lambdaPlusBasis[i] = bivector_matrix(plus[i]);
    hs.lambdaMinusBasis[i] = bivector_matrix(minus[i]);
  }
  hs.weylPlus = projected_block(mLambda, plus);
  hs.weylMinus = projected_block(mLambda, minus);
  return hs;
}

SelfDualVerdict self_dual_check(const CurvatureTensor& r, double tol) {
  const auto n = self_dual_norms(r, tol);
  const bool plusZero = n.plus <= n.scale;
  const bool minusZero = n.minus <= n.scale;
  if (plusZero && minusZero) return SelfDualVerdict::both;
  if (plusZero) return SelfDualVerdict::antiSelfDual;
  if (minusZero) return SelfDualVerdict::selfDual;
  return SelfDualVerdict::neither;
}

CheckReport self_dual_report(const CurvatureTensor& r, double tol) {
  const auto n = self_dual_norms(r, tol);
  Witness w;
  w.residual = std::min(n.plus, n.minus);
  return CheckReport::make("selfdual", std::min(n.plus, n.minus), n.scale, 0, w);
}

CheckReport osserman_check_exact(const CurvatureTensor& r, double tol) {
  require_dim4(r, "osserman_check_exact");
  const CheckReport e = einstein_check(r, tol);
  const auto n = self_dual_norms(r, tol);

  // Normalize both residuals by their thresholds; the combined check passes
  // iff each sub-check does, i.e. the worst ratio stays at or below 1.
  const double ratioE = e.maxResidual / e.threshold;
  const double ratioW = std::min(n.plus, n.minus) / n.scale;
  const double worst = std::max(ratioE, ratioW);

  Witness w;
  if (ratioE >= ratioW && e.witness) w = *e.witness;
  else w.residual = std::min(n.plus, n.minus);
  return CheckReport::make("osserman-exact", worst, 1.0, 0, w);
}

AdaptedBasis adapted_basis(const CurvatureTensor& r, const Vec& x, double tol) {
  require_dim4(r, "adapted_basis");
  const Vec xu = normalized(x);
  const Matrix jx = jacobi(r, xu);
  const Matrix q = perp_basis(xu);
  const SpectralDecomposition dec = eigh(restrict_to_perp(jx, xu));

  Vec y = q * column(dec.eigenvectors, 0);
  Vec z = q * column(dec.eigenvectors, 1);
  Vec w = q * column(dec.eigenvectors, 2);

  const Matrix jy = jacobi(r, y);

  // When l2 and l3 fall in one J(x) eigenspace the pair (z,w) is only
  // determined up to rotation; J(y) preserves span{z,w}, so diagonalize its
  // restriction there to pin the pair down.
  bool zwDegenerate = false;
  for (const auto& g : dec.groups)
    if (std::find(g.begin(), g.end(), 1) != g.end() &&
        std::find(g.begin(), g.end(), 2) != g.end())
      zwDegenerate = true;
  if (zwDegenerate) {
    Matrix c(2, 2);
    const Vec jyz = jy * z;
    const Vec jyw = jy * w;
    c(0, 0) = dot(z, jyz);
    c(1, 1) = dot(w, jyw);
    c(0, 1) = 0.5 * (dot(z, jyw) + dot(w, jyz));
    c(1, 0) = c(0, 1);
    const SpectralDecomposition sub = eigh(c);
    Vec z2(4), w2(4);
    for (int i = 0; i < 4; ++i) {
      z2[i] = sub.eigenvectors(0, 0) * z[i] + sub.eigenvectors(1, 0) * w[i];
      w2[i] = sub.eigenvectors(0, 1) * z[i] + sub.eigenvectors(1, 1) * w[i];
    }
    z = std::move(z2);
    w = std::move(w2);
  }

  const Matrix jz = jacobi(r, z);

  AdaptedBasis out;
  out.x = xu;
  out.y = y;
  out.z = z;
  out.w = w;
  out.lambda[0] = dot(jx * y, y);
  out.lambda[1] = dot(jx * z, z);
  out.lambda[2] = dot(jx * w, w);
  out.lambda[3] = dot(jy * z, z);
  out.lambda[4] = dot(jy * w, w);
  out.lambda[5] = dot(jz * w, w);

  auto residual = [](const Matrix& op, const Vec& v, double lambda) {
    const Vec ov = op * v;
    Vec d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) d[i] = ov[i] - lambda * v[i];
    return norm(d);
  };
  double worst = residual(jx, y, out.lambda[0]);
  worst = std::max(worst, residual(jx, z, out.lambda[1]));
  worst = std::max(worst, residual(jx, w, out.lambda[2]));
  worst = std::max(worst, residual(jy, z, out.lambda[3]));
  worst = std::max(worst, residual(jy, w, out.lambda[4]));
  worst = std::max(worst, residual(jz, w, out.lambda[5]));
  out.maxResidual = worst;

  const double bound = tol * std::max(1.0, r.max_abs());
  if (worst > bound) {
    std::ostringstream os;
    os << "no adapted basis at this direction: eigenvector residual " << worst
       << " exceeds " << bound << " (duality hypothesis fails here)";
    throw NotAdapted(os.str(), worst);
  }
  return out;
}

EigStructureCase classify_structure(const std::array<double, 6>& lambda, double tol) {
  double scale = 1.0;
  for (double v : lambda) scale = std::max(scale, std::abs(v));
  const double eps = tol * scale;

  auto eq = [&](std::initializer_list<int> idx) {
    double lo = lambda[*idx.begin() - 1], hi = lo;
    for (int i : idx) {
      lo = std::min(lo, lambda[i - 1]);
      hi = std::max(hi, lambda[i - 1]);
    }
    return hi - lo <= eps;
  };

  if (eq({1, 2, 3, 4, 5, 6})) return EigStructureCase::a;
  if (eq({1, 6}) && eq({2, 3, 4, 5})) return EigStructureCase::b;
  if (eq({2, 5}) && eq({1, 3, 4, 6})) return EigStructureCase::c;
  if (eq({3, 4}) && eq({1, 2, 5, 6})) return EigStructureCase::d;
  if (eq({1, 6}) && eq({2, 5}) && eq({3, 4})) return EigStructureCase::e;
  return EigStructureCase::none;
}

const char* to_string(EigStructureCase c) {
  switch (c) {
    case EigStructureCase::a: return "a";
    case EigStructureCase::b: return "b";
    case EigStructureCase::c: return "c";
    case EigStructureCase::d: return "d";
    case EigStructureCase::e: return "e";
    default: return "none";
  }
}

const char* to_string(SelfDualVerdict v) {
  switch (v) {
    case SelfDualVerdict::selfDual: return "selfDual";
    case SelfDualVerdict::antiSelfDual: return "antiSelfDual";
    case SelfDualVerdict::both: return "both";
    default: return "neither";
  }
}

CurvatureTensor canonical_osserman(double l1, double l2, double l3) {
  const std::array<ComponentEntry, 9> seeds = {{
      {0, 1, 1, 0, l1},
      {2, 3, 3, 2, l1},
      {0, 2, 2, 0, l2},
      {1, 3, 3, 1, l2},
      {0, 3, 3, 0, l3},
      {1, 2, 2, 1, l3},
      {0, 2, 3, 1, (-l1 + 2.0 * l2 - l3) / 3.0},
      {0, 3, 2, 1, (l1 + l2 - 2.0 * l3) / 3.0},
      {0, 1, 3, 2, (-2.0 * l1 + l2 + l3) / 3.0},
  }};
  return canonicalize(4, seeds);
}

}  // namespace osslab
