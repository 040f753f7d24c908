#include <cmath>
#include <random>

#include "doctest.h"
#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/extension.hpp"
#include "gelfand/su2_reps.hpp"
#include "gelfand/transform.hpp"
#include "support.hpp"

using namespace gelfand;
using testing_support::gaussian_identity;
using testing_support::test_plane;

namespace {
const double kPi = std::acos(-1.0);

PlaneClosedForm monomial(int p, int q, double c = 1.0) {
  Poly2 m;
  m.c[{p, q}] = c;
  PlaneClosedForm g;
  g.terms.push_back({m, Poly2{}});
  return g;
}

// Exact restriction of sum_q x_q xi1^{d-q} xi2^q / d! to the rays, differentiated d times.
std::vector<Rational> restrict_exact(const std::vector<Rational>& x, int n) {
  std::vector<Rational> c;
  for (int j = 0; j <= n; ++j) {
    Rational t(-n + 2 * j), p(1), s(0);
    for (const auto& v : x) {
      s += v * p;
      p *= t;
    }
    c.push_back(s);
  }
  return c;
}
}  // namespace

TEST_CASE("mu for g = xi2, n = 1 by both routes") {
  const auto g = monomial(0, 1);
  for (double xi : {0.05, 0.7, 2.0}) {
    CHECK(std::abs(mu(g, 1, 0, xi) + xi) < 1e-14);
    CHECK(std::abs(mu(g, 1, 1, xi) - 1) < 1e-13);
    CHECK(std::abs(mu_hermite_genocchi(g, 1, 1, xi) - 1) < 1e-13);
  }
  CHECK(std::abs(mu(g, 1, 1, 0.0) - 1) < 1e-14);
}

TEST_CASE("mu of a function of xi1 alone has no higher components") {
  const auto g = plane_gaussian(Poly2::constant(2.0), 0.7, 0, 0.2, 0, 0);
  for (double xi : {0.03, 0.5, 1.5}) {
    CHECK(std::abs(mu(g, 3, 0, xi) - g(xi, 0)) < 1e-14);
    for (int l = 1; l <= 3; ++l) CHECK(std::abs(mu(g, 3, l, xi)) < 1e-12);
  }
}

TEST_CASE("Hermite-Genocchi agrees with divided differences on (0, 2]") {
  const auto g = test_plane();
  for (int n = 0; n <= 4; ++n)
    for (int l = 0; l <= n; ++l)
      for (double xi : {0.02, 0.1, 0.3, 0.7, 1.2, 2.0}) {
        const double a = mu_divided(g, n, l, xi), b = mu_hermite_genocchi(g, n, l, xi);
        CHECK(std::abs(a - b) < 1e-8);
      }
  CHECK_THROWS_AS(mu(g, 2, 3, 0.5), InvalidIsotypicIndex);
  CHECK_THROWS_AS(ray_profiles_from_plane(g, 1, {-1.0}), InvalidSpectralParameter);
}

TEST_CASE("Newton form reproduces the ray values") {
  const auto g = test_plane();
  for (int n = 0; n <= 4; ++n) {
    const auto b = newton_basis_coefficients(n);
    for (double xi : {0.0, 0.05, 0.8, 3.0}) {
      for (int j = 0; j <= n; ++j) {
        const double t = -n + 2 * j;
        double s = 0;
        for (int l = 0; l <= n; ++l) {
          double p = 0;
          for (int k = 0; k <= l; ++k) p += to_double(Rational(b[l][k])) * std::pow(t, k);
          s += mu(g, n, l, xi) * std::pow(xi, l) * p;
        }
        CHECK(std::abs(s - g(xi, t * xi)) < 1e-12);
      }
    }
  }
  const auto b2 = newton_basis_coefficients(2);
  CHECK(b2[1] == std::vector<Integer>{2, 1});
  CHECK(b2[2] == std::vector<Integer>{0, 2, 1});
}

TEST_CASE("inverse transform on the Fourier side is the equivariant extension of the ray data") {
  const auto g = test_plane();
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int n = 0; n <= 3; ++n) {
    InverseOptions o;
    o.space_radius = 10;  // Fourier side only; skip the spatial probe
    InverseTransform inv(g, n, o);
    for (int trial = 0; trial < 4; ++trial) {
      C2 z{cdouble(nd(rng), nd(rng)), cdouble(nd(rng), nd(rng))};
      if (trial == 0) z = {0.0, 0.0};
      const double r = norm(z), xi = r * r;
      EndMatrix d = EndMatrix::Zero(n + 1, n + 1);
      for (int j = 0; j <= n; ++j) d(j, j) = g(xi, (-n + 2 * j) * xi);
      EndMatrix want = d;
      if (r > 0) {
        const EndMatrix t = rep_matrix(sphere_element({z[0] / r, z[1] / r}), {n, n});
        want = t * d * t.adjoint();
      }
      CHECK((inv.evaluate_fourier(z) - want).norm() < 1e-11);
    }
  }
}

TEST_CASE("inverse transform of zero is zero") {
  PlaneClosedForm zero;
  InverseTransform inv(zero, 2);
  CHECK(inv.evaluate_fourier({0.3, 0.4}).norm() == 0);
  CHECK(inv.evaluate_space({0.3, 0.4}).norm() == 0);
}

TEST_CASE("n = 0 inverse recovers the Gaussian pair") {
  // (2 pi)^2 e^{-xi/2} is the transform of e^{-|z|^2/2}.
  const auto g = plane_gaussian(Poly2::constant(4 * kPi * kPi), 0.5, 0, 0, 0, 0);
  InverseTransform inv(g, 0);
  for (double r : {0.0, 0.5, 1.3, 2.5, 4.0}) {
    const double want = std::exp(-r * r / 2);
    CHECK(std::abs(inv.space_diagonal(r)[0] - want) < 1e-10);
  }
}

TEST_CASE("forward after inverse is the identity on the rays") {
  const auto g = test_plane();
  const std::vector<double> xis{0.0, 0.3, 1.0, 2.5, 5.0};
  for (int n = 1; n <= 2; ++n) {
    InverseTransform inv(g, n);
    const auto f = inv.sampled();
    const auto back = forward_transform(f, xis);
    double err = 0;
    for (int j = 0; j <= n; ++j)
      for (double xi : xis) err = std::max(err, std::abs(back(j, xi) - g(xi, (-n + 2 * j) * xi)));
    CHECK(err < 1e-5);
  }
}

TEST_CASE("ray jets") {
  SUBCASE("xi1 xi2 restricted to the rays") {
    for (int n = 0; n <= 3; ++n) {
      const auto c = ray_jet(SpectralFunction::from_plane(monomial(1, 1), n), 3);
      for (int d = 0; d <= 3; ++d)
        for (int j = 0; j <= n; ++j) CHECK(c[d][j] == (d == 2 ? 2.0 * (-n + 2 * j) : 0.0));
    }
  }
  SUBCASE("exact derivatives against central differences") {
    const auto rays = SpectralFunction::from_plane(test_plane(), 2);
    const auto c = ray_jet(rays, 2);
    const double h = 1e-4;
    for (int j = 0; j <= 2; ++j) {
      const auto& r = rays.rays[j];
      CHECK(std::abs(c[1][j] - (r(h) - r(-h)) / (2 * h)) < 1e-6);
      CHECK(std::abs(c[2][j] - (r(h) - 2 * r(0) + r(-h)) / (h * h)) < 1e-6);
    }
    auto closed = forward_transform_exact(gaussian_identity(1, 0.5));
    const auto cc = ray_jet(closed, 3);
    // (2 pi)^2 e^{-xi/2}: d-th derivative (2 pi)^2 (-1/2)^d.
    for (int d = 0; d <= 3; ++d) CHECK(std::abs(cc[d][0] - 4 * kPi * kPi * std::pow(-0.5, d)) < 1e-12);
  }
  SUBCASE("sampled rays: fine grid works, coarse grid throws") {
    std::vector<double> xs, vs;
    for (int i = 0; i <= 40; ++i) {
      xs.push_back(0.01 * i);
      vs.push_back(std::exp(-xs.back()));
    }
    SpectralFunction s{0, {SampledRay(xs, vs)}};
    const auto c = ray_jet(s, 3);
    for (int d = 0; d <= 3; ++d) CHECK(std::abs(c[d][0] - std::pow(-1.0, d)) < 1e-6);
    std::vector<double> xc, vc;
    for (int i = 0; i <= 12; ++i) {
      xc.push_back(1.5 * i);
      vc.push_back(std::exp(-xc.back()) * std::cos(xc.back()));
    }
    SpectralFunction coarse{0, {SampledRay(xc, vc)}};
    CHECK_THROWS_AS(ray_jet(coarse, 6), InsufficientResolution);
    SpectralFunction tiny{0, {SampledRay({0.0, 0.1, 0.2}, {1.0, 0.9, 0.8})}};
    CHECK_THROWS_AS(ray_jet(tiny, 2), InsufficientResolution);
  }
}

TEST_CASE("jet_solve") {
  SUBCASE("n = 1, d = 1") {
    const auto x = jet_solve(std::vector<Rational>{Rational(3), Rational(7)}, 1, 1);
    CHECK(x[0] == Rational(5));  // a_{1,0} = (c0 + c1) / 2
    CHECK(x[1] == Rational(2));  // a_{0,1} = (c1 - c0) / 2
  }
  SUBCASE("restriction then solve is the identity, exactly") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int n = 0; n <= 8; ++n)
      for (int d = 0; d <= 10; ++d) {
        std::vector<Rational> x(d + 1, Rational(0));
        for (int q = 0; q <= std::min(d, n); ++q) x[q] = Rational(coef(rng), 1 + std::abs(coef(rng)));
        CHECK(jet_solve(restrict_exact(x, n), d, n) == x);
      }
  }
  SUBCASE("inconsistent data below degree n") {
    CHECK_THROWS_AS(jet_solve(std::vector<Rational>{Rational(1), Rational(2), Rational(4)}, 0, 2),
                    InconsistentJetData);
    CHECK_THROWS_AS(jet_solve(std::vector<double>{1.0, 2.0, 4.0}, 1, 2), InconsistentJetData);
    CHECK_NOTHROW(jet_solve(std::vector<double>{1.0, 2.0, 3.0}, 1, 2));
    CHECK_THROWS_AS(jet_solve(std::vector<Rational>{Rational(1)}, 0, 2), InvalidArgument);
  }
  SUBCASE("central rows") {
    CHECK(central_rows(0, 2) == std::vector<int>{1});
    CHECK(central_rows(1, 2) == std::vector<int>{1, 2});
    CHECK(central_rows(1, 3) == std::vector<int>{1, 2});
    CHECK(central_rows(2, 4) == std::vector<int>{1, 2, 3});
    CHECK(central_rows(5, 3) == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("Cramer and cofactor bounds, exactly") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-20, 20);
  for (int n = 1; n <= 8; ++n)
    for (int d = 0; d <= 8; ++d)
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Rational> c;
        if (d >= n) {
          for (int j = 0; j <= n; ++j) c.push_back(Rational(coef(rng)));
        } else {
          std::vector<Rational> x(d + 1);
          for (auto& v : x) v = Rational(coef(rng));
          c = restrict_exact(x, n);
        }
        const auto x = jet_solve(c, d, n);
        CHECK(cramer_bound_holds(x, c, d, n));
      }
  for (int n = 0; n <= 12; ++n) CHECK(cofactor_ratio(n) <= 1);
  CHECK(cofactor_ratio(2) == 1);
}

TEST_CASE("bump functions") {
  BumpFunction phi;
  CHECK(phi(0.0) == 1);
  CHECK(phi(0.5) == 1);
  CHECK(phi(1.0) == 0);
  CHECK(phi(0.3, 0.3) == 1);
  double prev = 1;
  for (double r = 0.5; r <= 1.0; r += 0.01) {
    const double v = phi(r);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0);
    prev = v;
  }
  CHECK(std::abs(phi(0.75) - 0.5) < 1e-15);
  CHECK_THROWS_AS((BumpFunction{0.5, 0.5}).validate(), InvalidArgument);
}

TEST_CASE("Borel sums") {
  SUBCASE("zero jet") {
    Jet z{3, {{0}, {0, 0}, {0, 0, 0}, {0, 0, 0, 0}}};
    auto h = borel_sum(z, BumpFunction{}, BorelSchedule{3});
    CHECK(h(0.2, 0.1) == 0);
    CHECK(h(2.0, 0.0) == 0);
  }
  SUBCASE("degree-2 polynomial reproduced on the plateau") {
    Poly2 p;
    p.c[{0, 0}] = 1.5;
    p.c[{1, 0}] = -2;
    p.c[{1, 1}] = 0.75;
    p.c[{0, 2}] = 3;
    PlaneClosedForm g;
    g.terms.push_back({p, Poly2{}});
    auto h = borel_sum(jet_of(g, 2), BumpFunction{}, BorelSchedule{2});
    for (double a : {-0.2, 0.0, 0.1, 0.24})
      for (double b : {-0.1, 0.05, 0.17}) CHECK(std::abs(h(a, b) - g(a, b)) < 1e-14);
    CHECK(h(2.0, 0.0) == 0);
  }
  SUBCASE("partial derivatives at 0 reproduce the jet") {
    const auto g = test_plane();
    const Jet jet = jet_of(g, 8);
    auto h = borel_sum(jet, BumpFunction{}, BorelSchedule{8});
    std::function<double(double, double)> hf = [&](double a, double b) { return h(a, b); };
    for (int d = 0; d <= 4; ++d)
      for (int q = 0; q <= d; ++q) CHECK(std::abs(fd_partial(hf, 0, 0, d - q, q) - jet.a(d - q, q)) < 1e-5);
  }
  SUBCASE("shrinking schedule") {
    const Jet jet = jet_of(test_plane(), 6);
    auto h = borel_sum(jet, BumpFunction{}, BorelSchedule{2});
    const auto& s = h.schedule();
    for (int d = 0; d <= 2; ++d) CHECK(s.eps[d] == 1);
    for (int d = 3; d <= 6; ++d) {
      CHECK(s.sizes[d] > 0);
      CHECK(s.eps[d] <= std::pow(2.0, -d) / (1 + s.sizes[d]) * (1 + 1e-15));
    }
    // Inside every plateau the sum is the Taylor polynomial.
    const double x1 = 0.4 * s.eps[6], x2 = -0.3 * s.eps[6];
    double taylor = 0;
    for (int d = 0; d <= 6; ++d) taylor += jet.homogeneous(d, x1, x2);
    CHECK(std::abs(h(x1, x2) - taylor) < 1e-15);
  }
}

TEST_CASE("spectral size of a summand") {
  // phi times the constant 1 has sup 1 and first derivatives of order 1 / (support - plateau).
  Jet one{0, {{1.0}}};
  CHECK(std::abs(summand_size(one, 0, BumpFunction{}, 0) - 1) < 1e-6);
  CHECK(summand_size(one, 0, BumpFunction{}, 1) > 1);
}

TEST_CASE("vanishing extension") {
  const int n = 2;
  const BumpFunction eta = default_eta();
  SUBCASE("zero residuals") {
    std::vector<RayResidual> r(n + 1, [](double) { return 0.0; });
    auto v = vanishing_extend(n, r, eta);
    CHECK(v(0.3, 0.1) == 0);
    CHECK(v(0.3, -0.6) == 0);
  }
  SUBCASE("restriction identity and support") {
    std::vector<RayResidual> r;
    for (int j = 0; j <= n; ++j) r.push_back([j](double x) { return (1.0 + j) * std::pow(x, 10) * std::exp(-x); });
    auto v = vanishing_extend(n, r, eta);
    for (int j = 0; j <= n; ++j)
      for (double x : {0.1, 0.7, 2.0}) CHECK(v(x, (-n + 2 * j) * x) == r[j](x));
    for (double x : {0.2, 1.0})
      for (double s : {-2.6, -1.4, -0.55, 0.51, 1.3, 2.7}) CHECK(v(x, s * x) == 0);
    CHECK(v(-0.5, 0.0) == 0);
    CHECK(v(0.0, 0.3) == 0);
  }
  SUBCASE("slow residual is rejected") {
    std::vector<RayResidual> r(n + 1, [](double) { return 0.0; });
    r[1] = [](double x) { return x * x * x; };
    VanishingOptions o;
    o.order = 8;
    CHECK_THROWS_AS(vanishing_extend(n, r, eta, o), OrderViolation);
    o.order = 2;
    CHECK_NOTHROW(vanishing_extend(n, r, eta, o));
  }
  CHECK_THROWS_AS(vanishing_extend(1, {}, eta), InvalidArgument);
  CHECK_THROWS_AS(vanishing_extend(0, {[](double) { return 0.0; }}, BumpFunction{1.0, 0.5}), InvalidArgument);
}

TEST_CASE("Schwartz extension of a known global function") {
  for (int n = 0; n <= 3; ++n) {
    const auto g = testing_support::normal_form_plane(n);
    const auto rays = SpectralFunction::from_plane(g, n);
    const auto ext = schwartz_extend(rays, n);
    CHECK(ext.report.restriction_error < 1e-6);
    CHECK(ext.report.smoothness_order == 3);
    double near = 0;
    for (int a = 0; a <= 10; ++a)
      for (int b = 0; b < 16; ++b) {
        const double r = 0.25 * a / 10, th = 2 * kPi * b / 16;
        near = std::max(near, std::abs(ext.u(r * std::cos(th), r * std::sin(th)) - g(r * std::cos(th), r * std::sin(th))));
      }
    CHECK(near < 1e-4);
    for (int d = 0; d <= 4; ++d)
      for (int q = 0; q <= d; ++q)
        CHECK(std::abs(fd_partial(ext.u, 0, 0, d - q, q) - g.derivative(d - q, q)(0, 0)) < 1e-5);
  }
}

TEST_CASE("Schwartz extension restricts back for data outside the normal form") {
  // Not unique off the rays, but the restriction identity always holds.
  const auto ext = schwartz_extend(SpectralFunction::from_plane(test_plane(), 2), 2);
  CHECK(ext.report.restriction_error < 1e-6);
}

TEST_CASE("Schwartz extension of transform data") {
  const int n = 2;
  const auto rays = forward_transform_exact(gaussian_identity(n, 0.5));
  const auto ext = schwartz_extend(rays, n);
  CHECK(ext.report.restriction_error < 1e-5);
  CHECK(ext.report.decay.size() == 3);
  CHECK(ext.report.decay[0] > 0);

  SpectralFunction zero{1, {ClosedForm{}, ClosedForm{}}};
  const auto z = schwartz_extend(zero, 1);
  CHECK(z.u(0.3, 0.2) == 0);
  CHECK(z.u(-1.0, 2.0) == 0);
  CHECK(z.jet.is_zero());

  // Rays disagreeing at the tip are not the restriction of anything smooth.
  ClosedForm a, b;
  a.terms.push_back({1.0, 0, 1.0});
  b.terms.push_back({2.0, 0, 1.0});
  CHECK_THROWS_AS(schwartz_extend(SpectralFunction{1, {a, b}}, 1), InconsistentJetData);
}

TEST_CASE("central stencil weights") {
  // First derivative weights of the 9-point stencil.
  const auto w = central_weights(1);
  const double want[9] = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0, 4.0 / 5, -1.0 / 5, 4.0 / 105, -1.0 / 280};
  for (int i = 0; i < 9; ++i) CHECK(std::abs(w[i] - want[i]) < 1e-14);
  std::function<double(double, double)> f = [](double a, double b) { return std::sin(a) * std::exp(b); };
  CHECK(std::abs(fd_partial(f, 0.3, 0.2, 2, 1, 0.05) + std::sin(0.3) * std::exp(0.2)) < 1e-9);
}

TEST_CASE("plane form of transform data") {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 3; ++n) {
    const auto f = testing_support::random_closed_form(rng, n);
    const auto g = transform_plane_exact(f);
    const auto rays = forward_transform_exact(f);
    for (int j = 0; j <= n; ++j)
      for (double xi : {0.0, 0.4, 2.0, 7.0}) CHECK(std::abs(g(xi, (-n + 2 * j) * xi) - rays(j, xi)) < 1e-12);
  }
}

TEST_CASE("inverse of transform data returns the original function") {
  std::mt19937_64 rng(9);
  const int n = 2;
  const auto f = testing_support::random_closed_form(rng, n);
  InverseTransform inv(transform_plane_exact(f), n);
  for (double r : {0.0, 0.6, 1.5, 3.0}) {
    const auto a = inv.space_diagonal(r), b = f.diagonal_values(r);
    for (int j = 0; j <= n; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-9);
  }
}
