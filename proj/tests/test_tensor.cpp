#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "osslab/fourdim.hpp"
#include "osslab/generators.hpp"
#include "osslab/tensor.hpp"
#include "test_util.hpp"

using namespace osslab;

TEST_CASE("canonicalize fills the symmetry images of seed components") {
  // Canonical model seeds with (l1,l2,l3) = (1,2,3); mixed values evaluate to
  // 0, -1 and 1.
  const std::vector<ComponentEntry> seeds = {
      {0, 1, 1, 0, 1.0}, {0, 2, 2, 0, 2.0}, {0, 3, 3, 0, 3.0},
      {2, 3, 3, 2, 1.0}, {1, 3, 3, 1, 2.0}, {1, 2, 2, 1, 3.0},
      {0, 2, 3, 1, 0.0}, {0, 3, 2, 1, -1.0}, {0, 1, 3, 2, 1.0},
  };
  const CurvatureTensor r = canonicalize(4, seeds);
  CHECK(r(0, 1, 1, 0) == 1.0);
  CHECK(r(0, 2, 3, 1) == 0.0);
  CHECK(r(0, 3, 2, 1) == -1.0);
  CHECK(r(0, 1, 3, 2) == 1.0);
  // propagated images
  CHECK(r(1, 0, 1, 0) == -1.0);
  CHECK(r(1, 0, 0, 1) == 1.0);
  CHECK(r(2, 1, 0, 3) == -1.0);
  CHECK(r.bianchi_residual() <= 1e-12 * r.max_abs());
}

TEST_CASE("canonicalize of an empty entry list is the zero tensor") {
  const CurvatureTensor r = canonicalize(3, {});
  CHECK(r.max_abs() == 0.0);
  CHECK(r.bianchi_residual() == 0.0);
  CHECK(r == CurvatureTensor::zero(3));
}

TEST_CASE("canonicalize rejects seeds that conflict under symmetry") {
  // Antisymmetry propagates (0,1,1,0)=1 to (1,0,1,0)=-1, so seeding +1 there clashes.
  const std::vector<ComponentEntry> seeds = {{0, 1, 1, 0, 1.0}, {1, 0, 1, 0, 1.0}};
  CHECK_THROWS_AS(canonicalize(4, seeds), ConflictingEntry);
}

TEST_CASE("canonicalize rejects out-of-range indices and bad dimensions") {
  CHECK_THROWS_AS(canonicalize(3, std::vector<ComponentEntry>{{0, 1, 1, 3, 1.0}}),
                  IndexOutOfRange);
  CHECK_THROWS_AS(canonicalize(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(canonicalize(9, {}), std::invalid_argument);
}

TEST_CASE("canonicalize validates the Bianchi identity instead of imposing it") {
  // A single fully-mixed seed cannot satisfy Bianchi on its own.
  CHECK_THROWS_AS(canonicalize(4, std::vector<ComponentEntry>{{0, 1, 2, 3, 1.0}}),
                  BianchiViolation);
}

TEST_CASE("project_curvature fixes valid tensors and kills symmetric input") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  const CurvatureTensor p = project_curvature(4, r.raw());
  CHECK(testutil::max_component_diff(r, p) <= 1e-14 * std::max(1.0, r.max_abs()));

  const std::vector<double> ones(256, 1.0);
  CHECK(project_curvature(4, ones).max_abs() == 0.0);

  CHECK_THROWS_AS(project_curvature(4, std::vector<double>(255, 0.0)), ShapeMismatch);
}

TEST_CASE("project_curvature matches the group-averaging oracle") {
  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const auto raw = testutil::random_raw(4, seed);
    const CurvatureTensor p = project_curvature(4, raw);
    const auto oracle = testutil::brute_force_projection(4, raw);
    double diff = 0.0;
    for (std::size_t f = 0; f < oracle.size(); ++f)
      diff = std::max(diff, std::abs(oracle[f] - p.raw()[f]));
    CHECK(diff <= 1e-12);
    CHECK(p.bianchi_residual() <= 1e-12 * std::max(1.0, p.max_abs()));
  }
}

TEST_CASE("project_curvature is idempotent") {
  for (int n : {3, 4, 5}) {
    const auto raw = testutil::random_raw(n, 100 + n);
    const CurvatureTensor once = project_curvature(n, raw);
    const CurvatureTensor twice = project_curvature(n, once.raw());
    CHECK(testutil::max_component_diff(once, twice) <=
          1e-14 * std::max(1.0, once.max_abs()));
  }
}

TEST_CASE("jacobi of a space form is c(Id - x x^T)") {
  const CurvatureTensor r = space_form(4, 2.5);
  Vec e1(4, 0.0);
  e1[0] = 1.0;
  const Matrix m = jacobi(r, e1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m(i, j) == doctest::Approx(i == j && i > 0 ? 2.5 : 0.0).epsilon(1e-14));
}

TEST_CASE("jacobi of the canonical model at e1 is diag(0, l1, l2, l3)") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  Vec e1(4, 0.0);
  e1[0] = 1.0;
  const Matrix m = jacobi(r, e1);
  const double expected[4] = {0.0, 1.0, 2.0, 3.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m(i, j) == doctest::Approx(i == j ? expected[i] : 0.0).epsilon(1e-14));
}

TEST_CASE("jacobi normalizes its direction and rejects zero vectors") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  const Matrix a = jacobi(r, Vec{2.0, 0.0, 0.0, 0.0});
  const Matrix b = jacobi(r, Vec{1.0, 0.0, 0.0, 0.0});
  CHECK(a == b);
  CHECK_THROWS_AS(jacobi(r, Vec(4, 0.0)), ZeroVector);
}

TEST_CASE("jacobi is symmetric with J(x)x = 0 on random tensors") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CurvatureTensor r = random_curvature(4, seed, 1.0);
    const Vec x = testutil::random_unit(4, 900 + seed);
    const Matrix m = jacobi(r, x);
    CHECK(max_asymmetry(m) == 0.0);  // symmetrized bitwise at construction
    CHECK(max_abs(m * x) <= 1e-14 * std::max(1.0, max_abs(m)));
  }
}

TEST_CASE("jacobi expansion residual vanishes at the endpoints") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  Vec x(4, 0.0), y(4, 0.0);
  x[0] = 1.0;
  y[1] = 1.0;
  CHECK(jacobi_expansion_residual(r, x, y, 0.0) == 0.0);
  CHECK(jacobi_expansion_residual(r, x, y, 3.141592653589793 / 2.0) <= 1e-13);
}

TEST_CASE("jacobi expansion residual stays at rounding level on random input") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CurvatureTensor r = random_curvature(4, 200 + seed, 1.0);
    const Vec x = testutil::random_unit(4, 300 + seed);
    Vec yRaw = testutil::random_unit(4, 400 + seed);
    const double d = dot(yRaw, x);
    for (int i = 0; i < 4; ++i) yRaw[i] -= d * x[i];
    const Vec y = normalized(yRaw);
    CHECK(jacobi_expansion_residual(r, x, y, 0.7) <= 1e-12);
  }
}

TEST_CASE("jacobi expansion residual rejects non-orthonormal pairs") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  Vec x(4, 0.0), y(4, 0.0);
  x[0] = 1.0;
  y[0] = 0.6;
  y[1] = 0.8;
  CHECK_THROWS_AS(jacobi_expansion_residual(r, x, y, 0.3), NotOrthonormal);
  Vec longx(4, 0.0);
  longx[0] = 1.5;
  CHECK_THROWS_AS(jacobi_expansion_residual(r, longx, y, 0.3), NotOrthonormal);
}

TEST_CASE("ricci and scalar curvature of reference models") {
  SUBCASE("canonical model") {
    const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
    const Matrix rho = ricci(r);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(rho(i, j) == doctest::Approx(i == j ? 6.0 : 0.0));
    CHECK(scalar_curvature(r) == doctest::Approx(24.0));
  }
  SUBCASE("zero tensor") {
    const CurvatureTensor r = CurvatureTensor::zero(4);
    CHECK(max_abs(ricci(r)) == 0.0);
    CHECK(scalar_curvature(r) == 0.0);
  }
  SUBCASE("3-dimensional space form") {
    const CurvatureTensor r = space_form(3, 1.5);
    const Matrix rho = ricci(r);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(rho(i, j) == doctest::Approx(i == j ? 3.0 : 0.0));
    CHECK(scalar_curvature(r) == doctest::Approx(9.0));
  }
}

TEST_CASE("ricci diagonal reproduces the Jacobi trace identity") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CurvatureTensor r = random_curvature(4, 500 + seed, 1.0);
    const Matrix rho = ricci(r);
    for (int i = 0; i < 4; ++i) {
      // rho(v,v) = Tr J(v) summed over the basis realization
      double traceSum = 0.0;
      Vec ei(4, 0.0);
      ei[i] = 1.0;
      for (int k = 0; k < 4; ++k) {
        Vec ek(4, 0.0);
        ek[k] = 1.0;
        traceSum += dot(jacobi(r, ek) * ei, ei);
      }
      CHECK(traceSum == doctest::Approx(rho(i, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("einstein check verdicts") {
  SUBCASE("canonical model passes with zero deviation") {
    const CheckReport rep = einstein_check(canonical_osserman(1.0, 2.0, 3.0));
    CHECK(rep.pass);
    CHECK(rep.maxResidual <= 1e-14);
    CHECK(!rep.witness.has_value());
  }
  SUBCASE("zero tensor passes") { CHECK(einstein_check(CurvatureTensor::zero(4)).pass); }
  SUBCASE("a bumped diagonal component fails with the entry as witness") {
    const std::vector<ComponentEntry> seeds = {
        {0, 1, 1, 0, 1.1}, {0, 2, 2, 0, 2.0}, {0, 3, 3, 0, 3.0},
        {2, 3, 3, 2, 1.0}, {1, 3, 3, 1, 2.0}, {1, 2, 2, 1, 3.0},
        {0, 2, 3, 1, 0.0}, {0, 3, 2, 1, -1.0}, {0, 1, 3, 2, 1.0},
    };
    const CheckReport rep = einstein_check(canonicalize(4, seeds));
    CHECK(!rep.pass);
    CHECK(rep.maxResidual == doctest::Approx(0.05));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->residual == doctest::Approx(0.05));
  }
}

TEST_CASE("add_scaled stays in the symmetry class") {
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  const CurvatureTensor x = random_curvature(4, 77, 1.0);
  const CurvatureTensor sum = add_scaled(r, 0.25, x);
  CHECK(sum.bianchi_residual() <= 1e-12 * std::max(1.0, sum.max_abs()));
  const CurvatureTensor back = add_scaled(sum, -0.25, x);
  CHECK(testutil::max_component_diff(back, r) <= 1e-15);
}

TEST_CASE("from_raw validates shape and symmetry") {
  CHECK_THROWS_AS(CurvatureTensor::from_raw(4, std::vector<double>(10, 0.0)), ShapeMismatch);
  auto raw = testutil::random_raw(4, 3);
  CHECK_THROWS(CurvatureTensor::from_raw(4, raw));  // generic array is not curvature-like
  const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
  CHECK(CurvatureTensor::from_raw(4, r.raw()) == r);
}
