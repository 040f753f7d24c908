#include <doctest.h>

#include <cmath>

#include "gelfand/bessel.hpp"
#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spherical.hpp"
#include "gelfand/su2_reps.hpp"

using namespace gelfand;

TEST_CASE("phi1 against high-precision reference values") {
  // 2 J_1(r) / r computed with mpmath at 30 digits.
  const std::pair<double, double> ref[] = {
      {0.5, 0.96907383069949554554},   {1, 0.88010117148986703192},
      {2.5, 0.39767528197141923041},   {8, 0.058659086713478656095},
      {12, -0.037241184081771268728},  {12.5, -0.026477408738361554953},
      {15, 0.027347205148469701486},   {20, 0.0066833124175850045579},
      {24.9, -0.01083178309489227928}, {25, -0.010028019966423192372},
      {30, -0.0079167375077748624347}, {50, -0.0039004731250070055065},
      {100, -0.0015429070402822431607}};
  for (auto [r, v] : ref) CHECK(std::abs(phi1(r) - v) < 2e-15);
  CHECK(phi1(0) == 1.0);
  CHECK_THROWS_AS(phi1(-1), InvalidArgument);
}

TEST_CASE("bessel_j1 against the standard library on a dense sweep") {
  double worst = 0;
  for (double x = 0; x < 80; x += 0.013) worst = std::max(worst, std::abs(bessel_j1(x) - std::cyl_bessel_j(1.0, x)));
  CHECK(worst < 1e-13);
}

TEST_CASE("Gauss-Legendre integrates polynomials") {
  GaussRule g = gauss_legendre(7, 0, 2);
  double s = 0;
  for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 13);
  CHECK(std::abs(s - std::pow(2.0, 14) / 14) < 1e-10);
}

TEST_CASE("sphere quadrature moments") {
  for (int p = 1; p <= 6; ++p) {
    SphereQuadrature q = sphere_quadrature(p);
    double total = 0;
    for (double w : q.weights) total += w;
    CHECK(std::abs(total - 1) < 1e-14);
    double worst = 0;
    for (int a = 0; a <= p; ++a)
      for (int b = 0; a + b <= p; ++b)
        for (int c = 0; c <= p; ++c)
          for (int d = 0; c + d <= p; ++d) {
            cdouble s = 0;
            for (std::size_t i = 0; i < q.size(); ++i) {
              const C2& z = q.nodes[i];
              s += q.weights[i] * std::pow(z[0], a) * std::pow(z[1], b) * std::pow(std::conj(z[0]), c) *
                   std::pow(std::conj(z[1]), d);
            }
            worst = std::max(worst, std::abs(s - sphere_moment(a, b, c, d)));
          }
    CHECK(worst < 1e-14);
  }
  CHECK(sphere_moment(1, 0, 1, 0) == doctest::Approx(0.5));
}

TEST_CASE("Schur normalization of Q^n_{E_jj}") {
  const int n = 2;
  SphereQuadrature q = sphere_quadrature(2 * n);
  for (int j = 0; j <= n; ++j) {
    EndMatrix s = EndMatrix::Zero(n + 1, n + 1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      Eigen::VectorXcd v = sphere_column(q.nodes[i], j, n);
      s += (n + 1) * q.weights[i] * v * v.adjoint();
    }
    CHECK((s - EndMatrix::Identity(n + 1, n + 1)).norm() < 1e-12);
  }
}

TEST_CASE("sphere_column matches rep_matrix") {
  std::mt19937_64 rng(1);
  for (int n = 0; n <= 5; ++n) {
    Mat2 k = random_su2(rng);
    C2 z = {k(0, 1), k(1, 1)};
    EndMatrix t = rep_matrix(sphere_element(z), {n, n});
    for (int j = 0; j <= n; ++j) CHECK((sphere_column(z, j, n) - t.col(j)).norm() < 1e-13);
  }
}

TEST_CASE("phi1 equals the sphere average of a plane wave") {
  for (double r : {0.5, 1.0, 2.5, 8.0}) {
    SphereQuadrature q = sphere_quadrature(40);
    cdouble s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) s += q.weights[i] * std::polar(1.0, -r * q.nodes[i][1].real());
    CHECK(std::abs(s - phi1(r)) < 1e-10);
  }
}

TEST_CASE("matrix spherical functions") {
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= n; ++j)
      CHECK((matrix_spherical(n, j, 2.0, {0.0, 0.0}) - EndMatrix::Identity(n + 1, n + 1)).norm() < 1e-12);
  std::mt19937_64 rng(2);
  for (int s = 0; s < 3; ++s) {
    C2 z = random_point(rng);
    EndMatrix p = matrix_spherical(0, 0, 1.7, z);
    CHECK(std::abs(p(0, 0) - phi1(std::sqrt(1.7) * norm(z))) < 1e-10);
  }
  CHECK_THROWS_AS(matrix_spherical(1, 0, -1.0, {0.0, 1.0}), InvalidSpectralParameter);
  // Equivariance, quadrature on both sides.
  const int n = 2;
  for (int s = 0; s < 3; ++s) {
    Mat2 k = random_u2(rng);
    C2 z = random_point(rng);
    C2 kz = {k(0, 0) * z[0] + k(0, 1) * z[1], k(1, 0) * z[0] + k(1, 1) * z[1]};
    EndMatrix t = rep_matrix(k, {n, n});
    for (int j = 0; j <= n; ++j)
      CHECK((matrix_spherical(n, j, 1.3, kz) - t * matrix_spherical(n, j, 1.3, z) * t.adjoint()).norm() < 1e-8);
  }
}

TEST_CASE("base-line rule agrees with the isotropic rule") {
  const int n = 2;
  C2 z = {0.0, cdouble(1.2, -0.7)};
  C2 zp = {1e-300, z[1]};  // forces the isotropic rule
  auto a = matrix_spherical_all(n, 2.0, z), b = matrix_spherical_all(n, 2.0, zp);
  for (int j = 0; j <= n; ++j) CHECK((a[j] - b[j]).norm() < 1e-10);
}

TEST_CASE("spectrum rays and embedding") {
  CHECK(spectrum_rays(0).size() == 1);
  CHECK(spectrum_rays(0)[0].slope == 0);
  auto r2 = spectrum_rays(2);
  CHECK(r2[0].slope == -2);
  CHECK(r2[1].slope == 0);
  CHECK(r2[2].slope == 2);
  SpectrumPoint4 p = embed4(1, 1, 2.0, 1);
  CHECK(p.xi1 == 2.0);
  CHECK(p.xi2 == 2.0);
  CHECK(p.xi3 == 3.0);
  CHECK(p.xi4 == 1.0);
  CHECK_THROWS_AS(embed4(0, 1, 1.0, 0), InvalidRepIndex);
}

namespace {
EndMatrix fd_laplacian(const std::function<EndMatrix(const C2&)>& f, const C2& z, double h) {
  EndMatrix c = f(z);
  EndMatrix acc = -8.0 * c;
  for (int k = 0; k < 4; ++k) {
    C2 zp = z, zm = z;
    const cdouble step = (k % 2 == 0) ? cdouble(h, 0) : cdouble(0, h);
    zp[k / 2] += step;
    zm[k / 2] -= step;
    acc += f(zp) + f(zm);
  }
  return -acc / (h * h);  // Delta_z = -Delta_{R^4}
}
}  // namespace

TEST_CASE("Laplacian on profiles: examples") {
  // Constant identity.
  auto one = EquivariantFunction::from_profiles(2, {ClosedForm{{{1.0, 0, 0.0}}}});
  for (double v : laplacian_profiles(one, 0.7)) CHECK(std::abs(v) < 1e-14);
  // n = 1, f0 = f1 = r^2 gives -8.
  auto r2 = EquivariantFunction::from_profiles(1, {ClosedForm{{{1.0, 1, 0.0}}}});
  for (double r : {0.0, 0.3, 1.5})
    for (double v : laplacian_profiles(r2, r)) CHECK(std::abs(v + 8) < 1e-12);
  // Q^l is harmonic.
  for (int n = 1; n <= 3; ++n) {
    std::vector<ClosedForm> g(n + 1);
    g[n] = ClosedForm{{{1.0, 0, 0.0}}};
    auto q = EquivariantFunction::from_profiles(n, g);
    for (double v : laplacian_profiles(q, 1.1)) CHECK(std::abs(v) < 1e-11);
  }
}

TEST_CASE("Laplacian on profiles agrees with finite differences") {
  std::mt19937_64 rng(4);
  for (int n = 0; n <= 3; ++n) {
    std::vector<ClosedForm> g;
    for (int l = 0; l <= n; ++l) g.push_back(ClosedForm{{{1.0 - 0.3 * l, l % 2, 0.3 + 0.1 * l}, {0.4, 1, 0.5}}});
    auto f = EquivariantFunction::from_profiles(n, g);
    auto lap = laplacian(f);
    auto lap2 = laplacian_of_profiles(f);
    for (int s = 0; s < 3; ++s) {
      C2 z = random_point(rng, 0.6);
      // Richardson step removes the h^2 term of the stencil.
      auto fw = [&](const C2& w) { return f(w); };
      EndMatrix fd = (4.0 * fd_laplacian(fw, z, 5e-3) - fd_laplacian(fw, z, 1e-2)) / 3.0;
      EndMatrix ex = lap(z);
      CHECK((fd - ex).norm() < 1e-4 * ex.norm());
      CHECK((lap2(z) - ex).norm() < 1e-11 * (1 + ex.norm()));
    }
    auto at0 = laplacian_profiles(f, 0.0);
    auto near0 = laplacian_profiles(f, 1e-4);
    for (int j = 0; j <= n; ++j) CHECK(std::abs(at0[j] - near0[j]) < 1e-6);
  }
}

TEST_CASE("Laplacian of sampled profiles") {
  const int n = 1;
  std::vector<ClosedForm> g = {ClosedForm{{{1.0, 0, 1.0}}}, ClosedForm{{{0.5, 0, 1.5}}}};
  auto f = EquivariantFunction::from_profiles(n, g);
  GaussRule rule = radial_rule(7, 40, 10);
  std::vector<std::vector<double>> vals(n + 1);
  for (double r : rule.x) {
    auto a = f.amplitude_values(r);
    for (int l = 0; l <= n; ++l) vals[l].push_back(a[l]);
  }
  auto fs = EquivariantFunction::sampled(n, rule, vals);
  for (double r : {0.0, 0.5, 1.3}) {
    auto a = laplacian_profiles(f, r), b = laplacian_profiles(fs, r);
    for (int j = 0; j <= n; ++j) CHECK(std::abs(a[j] - b[j]) < 2e-3);
  }
  auto once = laplacian(fs);
  CHECK_THROWS_AS(laplacian(once), InvalidProfile);
}

TEST_CASE("Taylor vanishing of the l-th component") {
  for (int n = 1; n <= 3; ++n)
    for (int l = 0; l <= n; ++l) {
      std::vector<ClosedForm> g(n + 1);
      g[l] = ClosedForm{{{1.0, 0, 1.0}}};
      auto f = EquivariantFunction::from_profiles(n, g);
      const C2 dir = {cdouble(0.3, 0.5), cdouble(-0.6, 0.2)};
      const double dn = norm(dir);
      auto at = [&](double r) { return f({dir[0] * (r / dn), dir[1] * (r / dn)}).norm(); };
      const double slope = std::log(at(1e-2) / at(1e-3)) / std::log(10.0);
      CHECK(std::abs(slope - 2 * l) < 1e-3);
    }
}

TEST_CASE("equivariance of EquivariantFunction evaluation") {
  std::mt19937_64 rng(6);
  const int n = 3;
  std::vector<ClosedForm> g;
  for (int l = 0; l <= n; ++l) g.push_back(ClosedForm{{{1.0 + l, l, 1.0}}});
  auto f = EquivariantFunction::from_profiles(n, g);
  for (int s = 0; s < 5; ++s) {
    Mat2 k = random_u2(rng);
    C2 z = random_point(rng);
    C2 kz = {k(0, 0) * z[0] + k(0, 1) * z[1], k(1, 0) * z[0] + k(1, 1) * z[1]};
    EndMatrix t = rep_matrix(k, {n, n});
    CHECK((f(kz) - t * f(z) * t.adjoint()).norm() < 1e-12 * (1 + f(z).norm()));
  }
  // F(0) = g_0(0) I.
  CHECK((f({0.0, 0.0}) - EndMatrix::Identity(n + 1, n + 1)).norm() < 1e-15);
  // F is the Q^l sum.
  C2 z = random_point(rng);
  EndMatrix sum = EndMatrix::Zero(n + 1, n + 1);
  const double s2 = std::pow(norm(z), 2);
  for (int l = 0; l <= n; ++l) sum += g[l](s2) * q_equivariant_poly(b_diagonal(n, l), l, n).evaluate(z);
  CHECK((sum - f(z)).norm() < 1e-11 * sum.norm());
}

TEST_CASE("symbol-side D_n acts on Phi_{xi,j} by t_j xi") {
  const C2 z{cdouble(0.4, 0.1), cdouble(-0.3, 0.6)};
  for (int n = 0; n <= 2; ++n) {
    const auto d = dn_spherical_symbol_side(n, 1.5, z);
    const auto d2 = dn_spherical_symbol_side(n, 1.5, z, 60);
    for (int j = 0; j <= n; ++j) {
      const EndMatrix phi = matrix_spherical(n, j, 1.5, z);
      CHECK((d[j] - (-n + 2 * j) * 1.5 * phi).norm() < 1e-10);
      CHECK((d[j] - d2[j]).norm() < 1e-12);
    }
  }
  CHECK(dn_spherical_symbol_side(1, 0.0, z)[1].norm() == 0);
  CHECK_THROWS_AS(dn_spherical_symbol_side(1, -1.0, z), InvalidSpectralParameter);
}
