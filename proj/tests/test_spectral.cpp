#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>

#include "osslab/fourdim.hpp"
#include "osslab/spectral.hpp"
#include "test_util.hpp"

using namespace osslab;

namespace {

double reconstruction_error(const Matrix& m, const SpectralDecomposition& dec) {
  const int n = m.rows();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += dec.eigenvectors(i, k) * dec.eigenvalues[k] * dec.eigenvectors(j, k);
      worst = std::max(worst, std::abs(s - m(i, j)));
    }
  return worst;
}

double orthonormality_error(const SpectralDecomposition& dec) {
  const Matrix q = dec.eigenvectors;
  const Matrix qtq = transpose(q) * q;
  double worst = 0.0;
  for (int i = 0; i < q.cols(); ++i)
    for (int j = 0; j < q.cols(); ++j)
      worst = std::max(worst, std::abs(qtq(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

}  // namespace

TEST_CASE("eigh on the identity yields a single group of ones") {
  const SpectralDecomposition dec = eigh(Matrix::identity(3));
  for (double l : dec.eigenvalues) CHECK(l == doctest::Approx(1.0).epsilon(1e-14));
  REQUIRE(dec.groups.size() == 1);
  CHECK(dec.groups[0].size() == 3);
}

TEST_CASE("eigh on the 2x2 swap matrix") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  const SpectralDecomposition dec = eigh(m);
  CHECK(dec.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(dec.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigh recovers a planted spectrum through orthogonal conjugation") {
  const Matrix q = testutil::random_orthogonal(4, 42);
  Matrix d(4, 4);
  const double planted[4] = {0.0, 1.0, 2.0, 3.0};
  for (int i = 0; i < 4; ++i) d(i, i) = planted[i];
  const Matrix m = symmetrized(q * (d * transpose(q)));
  const SpectralDecomposition dec = eigh(m);
  for (int i = 0; i < 4; ++i)
    CHECK(dec.eigenvalues[i] == doctest::Approx(planted[i]).epsilon(1e-10));
}

TEST_CASE("eigh satisfies its contract on random symmetric matrices") {
  for (int n = 2; n <= 8; ++n)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Matrix m = testutil::random_symmetric(n, seed * 31 + n);
      const SpectralDecomposition dec = eigh(m);
      const double scale = std::max(1.0, max_abs(m));
      CHECK(reconstruction_error(m, dec) <= 1e-10 * scale);
      CHECK(orthonormality_error(dec) <= 1e-10);
      double traceM = 0.0, sumL = 0.0;
      for (int i = 0; i < n; ++i) traceM += m(i, i);
      for (double l : dec.eigenvalues) sumL += l;
      CHECK(std::abs(traceM - sumL) <= 1e-10 * scale);
      for (int j = 0; j + 1 < n; ++j) CHECK(dec.eigenvalues[j] <= dec.eigenvalues[j + 1]);
      // eigenpair residuals
      for (int j = 0; j < n; ++j) {
        const Vec v = column(dec.eigenvectors, j);
        const Vec mv = m * v;
        double res = 0.0;
        for (int i = 0; i < n; ++i)
          res = std::max(res, std::abs(mv[i] - dec.eigenvalues[j] * v[i]));
        CHECK(res <= 1e-10 * scale);
      }
    }
}

TEST_CASE("eigh is bit-deterministic") {
  const Matrix m = testutil::random_symmetric(6, 7);
  const SpectralDecomposition a = eigh(m);
  const SpectralDecomposition b = eigh(m);
  CHECK(std::memcmp(a.eigenvalues.data(), b.eigenvalues.data(),
                    a.eigenvalues.size() * sizeof(double)) == 0);
  CHECK(a.eigenvectors == b.eigenvectors);
  CHECK(a.groups == b.groups);
}

TEST_CASE("eigh sign convention makes the largest coordinate positive") {
  const Matrix m = testutil::random_symmetric(5, 99);
  const SpectralDecomposition dec = eigh(m);
  for (int j = 0; j < 5; ++j) {
    const Vec v = column(dec.eigenvectors, j);
    double best = 0.0;
    int idx = 0;
    for (int i = 0; i < 5; ++i)
      if (std::abs(v[i]) > best) {
        best = std::abs(v[i]);
        idx = i;
      }
    CHECK(v[idx] > 0.0);
  }
}

TEST_CASE("eigh rejects asymmetric matrices") {
  Matrix m(3, 3);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0 + 1e-6;
  CHECK_THROWS_AS(eigh(m), NonSymmetric);
}

TEST_CASE("restrict_to_perp examples") {
  SUBCASE("diagonal operator at e1 drops the kernel row") {
    Matrix m(4, 4);
    m(1, 1) = 1.0;
    m(2, 2) = 2.0;
    m(3, 3) = 3.0;
    Vec e1(4, 0.0);
    e1[0] = 1.0;
    const Matrix b = restrict_to_perp(m, e1);
    REQUIRE(b.rows() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(b(i, j) == doctest::Approx(i == j ? i + 1.0 : 0.0).epsilon(1e-14));
  }
  SUBCASE("space-form Jacobi restricts to c Id for any base direction") {
    const double c = -1.75;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Vec x = testutil::random_unit(4, seed);
      Matrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = c * ((i == j ? 1.0 : 0.0) - x[i] * x[j]);
      const Matrix b = restrict_to_perp(symmetrized(m), x);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(b(i, j) == doctest::Approx(i == j ? c : 0.0).epsilon(1e-12));
    }
  }
  SUBCASE("canonical Jacobi restricted at a diagonal direction has spectrum {1,2,3}") {
    const CurvatureTensor r = canonical_osserman(1.0, 2.0, 3.0);
    const Vec x = {1.0 / std::sqrt(2.0), 0.0, 1.0 / std::sqrt(2.0), 0.0};
    const SpectralDecomposition dec = eigh(restrict_to_perp(jacobi(r, x), x));
    CHECK(dec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(dec.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-9));
  }
}

TEST_CASE("restrict_to_perp rejects operators that move x") {
  const Matrix m = Matrix::identity(4);
  Vec e1(4, 0.0);
  e1[0] = 1.0;
  CHECK_THROWS_AS(restrict_to_perp(m, e1), KernelViolation);
}

TEST_CASE("restricted spectrum equals the full spectrum minus one zero") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vec x = testutil::random_unit(5, 50 + seed);
    // Build M with M x = 0: conjugate a diagonal by the perp completion.
    const Matrix q = perp_basis(x);
    const Matrix d = testutil::random_symmetric(4, seed);
    const Matrix m = symmetrized(q * (d * transpose(q)));
    const Vec full = eigh(m).eigenvalues;            // contains one extra 0
    const Vec restricted = eigh(restrict_to_perp(m, x)).eigenvalues;
    // remove the eigenvalue of the x-direction (closest to zero residual-wise):
    // both lists sorted; full has exactly one more entry.
    double worst = 1e9;
    for (std::size_t skip = 0; skip < full.size(); ++skip) {
      if (std::abs(full[skip]) > 1e-9) continue;
      double diff = 0.0;
      std::size_t r = 0;
      for (std::size_t f = 0; f < full.size(); ++f) {
        if (f == skip) continue;
        diff = std::max(diff, std::abs(full[f] - restricted[r++]));
      }
      worst = std::min(worst, diff);
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("perp_basis is a deterministic orthonormal completion") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vec x = testutil::random_unit(4, 70 + seed);
    const Matrix q = perp_basis(x);
    REQUIRE(q.rows() == 4);
    REQUIRE(q.cols() == 3);
    const Matrix qtq = transpose(q) * q;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(qtq(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-13));
    for (int col = 0; col < 3; ++col) CHECK(std::abs(dot(column(q, col), x)) <= 1e-14);
    CHECK(perp_basis(x) == q);
  }
}

TEST_CASE("group_eigenvalues chaining rule") {
  CHECK(group_eigenvalues({1.0, 1.0, 1.0}, 1e-8) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(group_eigenvalues({1.0, 2.0, 3.0}, 1e-8) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(group_eigenvalues({1.0, 1.0 + 5e-9, 2.0}, 1e-8) ==
        std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(group_eigenvalues({}, 1e-8).empty());
  CHECK_THROWS_AS(group_eigenvalues({1.0}, -1.0), std::invalid_argument);
}
