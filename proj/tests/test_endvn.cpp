#include <doctest.h>

#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/su2_reps.hpp"

using namespace gelfand;

namespace {
EndMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  EndMatrix m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m(i, j) = cdouble(g(rng), g(rng));
  return m;
}
double hs(const EndMatrix& a, const EndMatrix& b) { return (a.adjoint() * b).trace().real(); }
}  // namespace

TEST_CASE("discrete q polynomials") {
  auto q = discrete_q_polys(2);
  CHECK(q[0].coeffs == std::vector<Rational>{1});
  CHECK(q[1].coeffs == std::vector<Rational>{0, 1});
  CHECK(q[2].coeffs == std::vector<Rational>{Rational(-8, 3), 0, 1});
  for (int n = 0; n <= 10; ++n) {
    auto qs = discrete_q_polys(n);
    for (int l = 0; l <= n; ++l) {
      CHECK(qs[l].degree() == l);
      CHECK(qs[l].coeffs.back() == 1);
    }
  }
}

TEST_CASE("b_matrix examples and orthogonality") {
  CHECK(b_diagonal(2, 2) == std::vector<Rational>{Rational(4, 3), Rational(-8, 3), Rational(4, 3)});
  for (int n = 0; n <= 10; ++n) {
    CHECK((b_matrix(n, 0) - EndMatrix::Identity(n + 1, n + 1)).norm() == 0);
    if (n > 0)
      for (int j = 0; j <= n; ++j) CHECK(b_matrix(n, 1)(j, j).real() == -n + 2 * j);
    for (int l = 0; l <= n; ++l)
      for (int k = 0; k < l; ++k) {
        auto a = b_diagonal(n, l), b = b_diagonal(n, k);
        Rational s = 0;
        for (int j = 0; j <= n; ++j) s += a[j] * b[j];
        CHECK(s == 0);
      }
  }
  CHECK_THROWS_AS(b_matrix(2, 3), InvalidIsotypicIndex);
  CHECK_THROWS_AS(b_matrix(2, -1), InvalidIsotypicIndex);
}

TEST_CASE("isotypic projection") {
  for (int n = 1; n <= 5; ++n) {
    for (int l = 1; l <= n; ++l)
      CHECK(isotypic_project(EndMatrix::Identity(n + 1, n + 1), l, n).norm() < 1e-12);
    EndMatrix b1 = b_matrix(n, 1);
    CHECK((isotypic_project(b1, 1, n) - b1).norm() < 1e-11 * b1.norm());
  }
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 4; ++n) {
    EndMatrix m = random_matrix(n, rng), m2 = random_matrix(n, rng);
    EndMatrix sum = EndMatrix::Zero(n + 1, n + 1);
    for (int l = 0; l <= n; ++l) {
      EndMatrix p = isotypic_project(m, l, n);
      sum += p;
      CHECK((isotypic_project(p, l, n) - p).norm() < 1e-12 * m.norm());
      // Self-adjoint for the HS inner product.
      CHECK(std::abs(hs(m2, p) - hs(isotypic_project(m2, l, n), m)) < 1e-12 * m.norm() * m2.norm());
    }
    CHECK((sum - m).norm() < 1e-12 * m.norm());
  }
  CHECK_THROWS_AS(isotypic_project(EndMatrix::Identity(3, 3), 3, 2), InvalidIsotypicIndex);
}

TEST_CASE("exact projection of t^l recovers B^l") {
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= n; ++l) {
      ExactMatrix m(n + 1, n + 1);
      auto t = ray_slopes(n);
      for (int j = 0; j <= n; ++j) {
        Rational p = 1;
        for (int i = 0; i < l; ++i) p *= t[j];
        m(j, j) = GaussRational(p);
      }
      ExactMatrix proj = isotypic_project_exact(m, l, n);
      auto b = b_diagonal(n, l);
      ExactMatrix expect(n + 1, n + 1);
      for (int j = 0; j <= n; ++j) expect(j, j) = GaussRational(b[j]);
      CHECK(proj == expect);
    }
}

TEST_CASE("interpolation degree") {
  CHECK(interpolation_degree({0, 0, 0}) == -1);
  CHECK(interpolation_degree({5, 5, 5}) == 0);
  for (int n = 0; n <= 6; ++n)
    for (int l = 0; l <= n; ++l) CHECK(interpolation_degree(b_diagonal(n, l)) == l);
}

TEST_CASE("equivariant polynomials") {
  auto qi = q_equivariant_poly({1, 1, 1}, 0, 2);
  CHECK((qi.evaluate({cdouble(0.3, 1), cdouble(2, -1)}) - EndMatrix::Identity(3, 3)).norm() < 1e-14);
  for (int n = 1; n <= 4; ++n) {
    auto q = q_equivariant_poly(b_diagonal(n, 1), 1, n);
    CHECK((q.evaluate({0.0, 1.0}) - b_matrix(n, 1)).norm() < 1e-13);
  }
  // Symbolic trace identity and bidegree.
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= n; ++l)
      for (int d = l; d <= n + 1; ++d) {
        auto b = b_diagonal(n, l);
        auto q = q_equivariant_poly(b, d, n);
        Rational tr = 0;
        for (auto& v : b) tr += v;
        CHECK(q.trace() == Poly4::norm2().power(d).scaled(tr));
        for (int i = 0; i <= n; ++i)
          for (int k = 0; k <= n; ++k) CHECK(q.r(i, k).homogeneous(d, d));
      }
  CHECK_THROWS_AS(q_equivariant_poly(b_diagonal(2, 2), 1, 2), NotPolynomial);
}

TEST_CASE("equivariance of Q_B^d") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l) {
      auto q = q_equivariant_poly(b_diagonal(n, l), l, n);
      for (int s = 0; s < 5; ++s) {
        Mat2 k = random_u2(rng);
        C2 z = random_point(rng);
        C2 kz = {k(0, 0) * z[0] + k(0, 1) * z[1], k(1, 0) * z[0] + k(1, 1) * z[1]};
        EndMatrix t = rep_matrix(k, {n, n});
        EndMatrix lhs = q.evaluate(kz), rhs = t * q.evaluate(z) * t.adjoint();
        CHECK((lhs - rhs).norm() < 1e-10 * (1 + rhs.norm()));
      }
    }
}

TEST_CASE("symbol of D_n") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 4; ++n) {
    auto d = dn_symbol(n);
    CHECK((d.evaluate({0.0, 1.0}) - weight_matrix(n)).norm() < 1e-13);
    for (int s = 0; s < 4; ++s) {
      C2 z = random_point(rng);
      EndMatrix v = d.evaluate(z);
      CHECK((v - dn_symbol_numeric(z, n)).norm() < 1e-11 * (1 + v.norm()));
      Eigen::SelfAdjointEigenSolver<EndMatrix> es(v);
      const double r2 = std::norm(z[0]) + std::norm(z[1]);
      for (int j = 0; j <= n; ++j) CHECK(std::abs(es.eigenvalues()(j) - (-n + 2 * j) * r2) < 1e-10 * (1 + n * r2));
    }
  }
}

TEST_CASE("Cayley-Hamilton for the D_n symbol") {
  std::mt19937_64 rng(9);
  for (int n = 0; n <= 5; ++n) {
    auto c = dn_characteristic(n);
    for (int s = 0; s < 3; ++s) {
      C2 z = random_point(rng);
      const double r2 = std::norm(z[0]) + std::norm(z[1]);
      EndMatrix d = dn_symbol_numeric(z, n);
      EndMatrix power = EndMatrix::Identity(n + 1, n + 1), rhs = EndMatrix::Zero(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) {
        rhs -= to_double(c[k]) * std::pow(r2, n + 1 - k) * power;
        power = power * d;
      }
      CHECK((power - rhs).norm() < 1e-9 * (1 + power.norm()));
    }
  }
}
