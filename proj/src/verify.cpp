#include "gelfand/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "gelfand/bessel.hpp"
#include "gelfand/convolution.hpp"
#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/extension.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spherical.hpp"
#include "gelfand/su2_reps.hpp"
#include "gelfand/transform.hpp"

namespace gelfand {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Suite {
  std::vector<CheckResult> out;
  double scale;

  // body returns the achieved error; passes when error <= tol.
  void run(std::string name, std::string module, std::string ref, double tol, const std::function<double()>& body,
           bool exact = false) {
    CheckResult r{std::move(name), std::move(module), std::move(ref), false, 0, exact ? 0.0 : tol * scale, {}};
    try {
      r.error = body();
      r.passed = r.error <= r.tolerance;
    } catch (const std::exception& e) {
      r.error = std::numeric_limits<double>::infinity();
      r.message = e.what();
    }
    out.push_back(std::move(r));
  }
};

EquivariantFunction profiles(int n, double base) {
  std::vector<ClosedForm> g;
  for (int l = 0; l <= n; ++l) g.push_back(ClosedForm{{{1.0 - 0.2 * l, l % 2, base + 0.1 * l}, {0.3, 1, base + 0.3}}});
  return EquivariantFunction::from_profiles(n, g);
}

EquivariantFunction gaussian(int n, double b) {
  std::vector<ClosedForm> g(n + 1);
  g[0].terms.push_back({1.0, 0, b});
  return EquivariantFunction::from_profiles(n, g);
}

EndMatrix fd_laplacian(const std::function<EndMatrix(const C2&)>& f, const C2& z, double h) {
  EndMatrix acc = -8.0 * f(z);
  for (int k = 0; k < 4; ++k) {
    C2 zp = z, zm = z;
    const cdouble step = k % 2 == 0 ? cdouble(h, 0) : cdouble(0, h);
    zp[k / 2] += step;
    zm[k / 2] -= step;
    acc += f(zp) + f(zm);
  }
  return -acc / (h * h);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  if (opt.n_max < 0) throw InvalidArgument("n_max must be >= 0");
  if (!(opt.tolerance_scale > 0)) throw InvalidArgument("tolerance scale must be > 0");
  Suite s{{}, opt.tolerance_scale};
  const int N = opt.n_max;
  const int N2 = std::min(N, 2);

  // ---- su2_reps
  s.run("casimir_identity", "su2_reps", "Casimir of tau_n acts by n(n+2), exact", 0, [&] {
    double bad = 0;
    for (int n = 0; n <= std::max(N, 0); ++n) bad += casimir_exact(n) ? 0 : 1;
    return bad;
  }, true);
  s.run("ladder_relations", "su2_reps", "ladder operator raises weights with 2 sqrt((j+1)(n-j)), exact", 0, [&] {
    double bad = 0;
    for (int n = 0; n <= N; ++n) bad += ladder_exact(n) ? 0 : 1;
    return bad;
  }, true);
  s.run("representation_homomorphism", "su2_reps", "tau_{m,n} is a unitary representation of U(2)", 1e-12, [&] {
    std::mt19937_64 rng(1);
    double e = 0;
    for (int n = 0; n <= N; ++n)
      for (int m = -n; m <= n; m += 2) {
        const Mat2 a = random_u2(rng), b = random_u2(rng);
        const EndMatrix ta = rep_matrix(a, {m, n}), tb = rep_matrix(b, {m, n});
        e = std::max(e, (rep_matrix(a * b, {m, n}) - ta * tb).norm());
        e = std::max(e, (ta * ta.adjoint() - EndMatrix::Identity(n + 1, n + 1)).norm());
      }
    return e;
  });

  // ---- endvn
  s.run("q_polys_orthogonal", "endvn", "q_n^l orthogonal on the nodes t_j, exact", 0, [&] {
    double bad = 0;
    for (int n = 0; n <= N; ++n)
      for (int l = 0; l <= n; ++l)
        for (int k = 0; k < l; ++k) {
          Rational d(0);
          const auto bl = b_diagonal(n, l), bk = b_diagonal(n, k);
          for (int j = 0; j <= n; ++j) d += bl[j] * bk[j];
          bad += d == 0 ? 0 : 1;
        }
    return bad;
  }, true);
  s.run("isotypic_projection_exact", "endvn", "B_n^l is the W_n^l component of diag(t_j^l), exact", 0, [&] {
    double bad = 0;
    for (int n = 0; n <= N; ++n)
      for (int l = 0; l <= n; ++l) {
        ExactMatrix m(n + 1, n + 1);
        const auto t = ray_slopes(n);
        for (int j = 0; j <= n; ++j) {
          Rational p(1);
          for (int i = 0; i < l; ++i) p *= t[j];
          m(j, j) = GaussRational(p);
        }
        const ExactMatrix proj = isotypic_project_exact(m, l, n);
        const auto b = b_diagonal(n, l);
        for (int j = 0; j <= n; ++j) bad += proj(j, j) == GaussRational(b[j]) ? 0 : 1;
      }
    return bad;
  }, true);
  s.run("isotypic_projection_numeric", "endvn", "Casimir filter reproduces B_n^l", 1e-12, [&] {
    double e = 0;
    for (int n = 0; n <= N; ++n)
      for (int l = 0; l <= n; ++l) {
        EndMatrix m = EndMatrix::Zero(n + 1, n + 1);
        for (int j = 0; j <= n; ++j) m(j, j) = std::pow(double(-n + 2 * j), l);
        const EndMatrix b = b_matrix(n, l);
        e = std::max(e, (isotypic_project(m, l, n) - b).norm() / std::max(1.0, b.norm()));
      }
    return e;
  });
  s.run("polynomiality_gate", "endvn", "Q_B^d is polynomial iff d >= d(B)", 0, [&] {
    double bad = 0;
    for (int n = 0; n <= std::min(N, 4); ++n)
      for (int l = 0; l <= n; ++l)
        for (int d = 0; d <= n; ++d) {
          bool threw = false;
          try {
            q_equivariant_poly(b_diagonal(n, l), d, n);
          } catch (const NotPolynomial&) {
            threw = true;
          }
          bad += threw == (d < l) ? 0 : 1;
        }
    return bad;
  }, true);
  s.run("dn_characteristic_radial", "endvn", "characteristic polynomial of D_n depends on |zeta|^2 only", 1e-10, [&] {
    std::mt19937_64 rng(2);
    double e = 0;
    for (int n = 0; n <= N; ++n) {
      const auto c = dn_characteristic(n);
      const C2 z = random_point(rng);
      const double r2 = std::norm(z[0]) + std::norm(z[1]);
      const EndMatrix d = dn_symbol_numeric(z, n);
      EndMatrix p = EndMatrix::Identity(n + 1, n + 1), acc = EndMatrix::Zero(n + 1, n + 1);
      for (int k = 0; k <= n; ++k) {
        acc += to_double(c[k]) * std::pow(r2, n + 1 - k) * p;
        p = p * d;
      }
      acc += p;
      e = std::max(e, acc.norm() / std::pow(1 + r2, n + 1));
    }
    return e;
  });

  // ---- spherical
  s.run("phi1_quadrature", "spherical", "phi_1(r) = 2 J_1(r)/r is the sphere average of a plane wave", 1e-10, [&] {
    double e = 0;
    const SphereQuadrature q = sphere_quadrature(40);
    for (double r : {0.5, 1.0, 2.5, 8.0}) {
      cdouble acc = 0;
      for (std::size_t i = 0; i < q.size(); ++i) acc += q.weights[i] * std::polar(1.0, -r * q.nodes[i][1].real());
      e = std::max(e, std::abs(acc - phi1(r)));
    }
    return e;
  });
  s.run("spherical_normalization", "spherical", "Phi_{xi,j}(0) = I", 1e-10, [&] {
    double e = 0;
    for (int n = 0; n <= N; ++n)
      for (int j = 0; j <= n; ++j)
        for (double xi : {0.5, 2.0})
          e = std::max(e, (matrix_spherical(n, j, xi, {0.0, 0.0}) - EndMatrix::Identity(n + 1, n + 1)).norm());
    return e;
  });
  s.run("spherical_laplacian_eigen", "spherical", "Delta_z Phi_{xi,j} = xi Phi_{xi,j} (finite differences)", 1e-3, [&] {
    double e = 0;
    const C2 z{cdouble(0.3, -0.2), cdouble(0.5, 0.4)};
    for (int n = 0; n <= N; ++n)
      for (int j : {0, n}) {
        const double xi = 1.0;
        auto f = [&](const C2& w) { return matrix_spherical(n, j, xi, w); };
        const EndMatrix phi = f(z);
        e = std::max(e, (fd_laplacian(f, z, 1e-2) - xi * phi).norm() / phi.norm());
      }
    return e;
  });
  s.run("spherical_dn_eigen", "spherical", "D_n Phi_{xi,j} = t_j xi Phi_{xi,j} (symbol side)", 1e-8, [&] {
    double e = 0;
    const C2 z{cdouble(0.3, -0.2), cdouble(0.5, 0.4)};
    for (int n = 0; n <= N; ++n)
      for (int j = 0; j <= n; ++j) {
        const double xi = 2.0;
        const EndMatrix phi = matrix_spherical(n, j, xi, z);
        e = std::max(e, (dn_spherical_symbol_side(n, xi, z)[j] - (-n + 2 * j) * xi * phi).norm());
      }
    return e;
  });
  s.run("spherical_equivariance", "spherical", "Phi_{xi,j}(k z) = tau(k) Phi_{xi,j}(z) tau(k)^*", 1e-8, [&] {
    std::mt19937_64 rng(3);
    double e = 0;
    for (int n = 1; n <= N; ++n) {
      const Mat2 k = random_u2(rng);
      const C2 z = random_point(rng);
      const C2 kz{k(0, 0) * z[0] + k(0, 1) * z[1], k(1, 0) * z[0] + k(1, 1) * z[1]};
      const EndMatrix t = rep_matrix(k, {n, n});
      e = std::max(e, (matrix_spherical(n, 0, 1.3, kz) - t * matrix_spherical(n, 0, 1.3, z) * t.adjoint()).norm());
    }
    return e;
  });

  // ---- transform
  s.run("scalar_gaussian_round_trip", "transform",
        "n = 0: e^{-|z|^2/2} and (2 pi)^2 e^{-xi/2} form a Fourier-Bessel pair", 1e-9, [&] {
          const auto f = gaussian(0, 0.5);
          double e = 0;
          for (double xi : {0.0, 0.5, 2.0, 6.0})
            e = std::max(e, std::abs(fourier_diagonals(f, {std::sqrt(xi)})[0][0] - 4 * kPi * kPi * std::exp(-xi / 2)));
          InverseTransform inv(plane_gaussian(Poly2::constant(4 * kPi * kPi), 0.5, 0, 0, 0, 0), 0);
          for (double r : {0.0, 1.0, 2.5}) e = std::max(e, std::abs(inv.space_diagonal(r)[0] - std::exp(-r * r / 2)));
          return e;
        });
  s.run("transform_numeric_vs_closed_form", "transform", "ray transform agrees with its Laguerre closed form", 1e-10,
        [&] {
          double e = 0;
          for (int n = 0; n <= N; ++n) {
            const auto f = profiles(n, 0.7);
            const auto ex = forward_transform_exact(f);
            for (double xi : {0.0, 1.0, 4.0}) {
              const auto d = fourier_diagonals(f, {std::sqrt(xi)})[0];
              for (int j = 0; j <= n; ++j) e = std::max(e, std::abs(d[j] - ex(j, xi)) / (1 + std::abs(ex(j, xi))));
            }
          }
          return e;
        });
  s.run("transform_vs_trace_oracle", "transform", "diagonal of Fhat on the ray equals the trace against Phi", 1e-6,
        [&] {
          double e = 0;
          for (int n = 0; n <= N2; ++n) {
            const auto f = profiles(n, 0.8);
            const auto ex = forward_transform_exact(f);
            for (double xi : {0.5, 2.0}) {
              const auto o = trace_transform_oracle_all(f, xi);
              for (int j = 0; j <= n; ++j) e = std::max(e, std::abs(o[j] - ex(j, xi)));
            }
          }
          return e;
        });
  if (N >= 1)
    s.run("transform_diagonal", "transform", "Fhat of an equivariant F is diagonal on the ray (no symmetry assumed)",
        1e-8, [&] {
          double e = 0;
          for (int n = 1; n <= N2; ++n) {
            const auto f = profiles(n, 0.8);
            MatrixField mf{n, [f](const C2& z) { return f(z); }, 9.0};
            e = std::max(e, off_diagonal_mass(fourier_on_ray_full(mf, 1.0)));
          }
          return e;
        });
  s.run("laplacian_intertwining", "transform", "G_n(Delta_z F) = xi G_n F", 1e-8, [&] {
    double e = 0;
    for (int n = 0; n <= N; ++n) {
      const auto f = profiles(n, 0.9);
      const auto a = forward_transform_exact(laplacian_of_profiles(f)), b = forward_transform_exact(f);
      for (double xi : {0.3, 1.5, 4.0})
        for (int j = 0; j <= n; ++j) e = std::max(e, std::abs(a(j, xi) - xi * b(j, xi)) / (1 + std::abs(b(j, xi))));
    }
    return e;
  });
  if (N >= 1)
    s.run("higher_isotypes_vanish_at_tip", "transform", "components with l >= 1 have transforms vanishing at xi = 0",
          1e-12, [&] {
            double e = 0;
            for (int n = 1; n <= N; ++n) {
              std::vector<ClosedForm> g(n + 1);
              g[n].terms.push_back({1.0, 0, 1.0});
              const auto d = fourier_diagonals(EquivariantFunction::from_profiles(n, g), {0.0})[0];
              for (double v : d) e = std::max(e, std::abs(v));
            }
            return e;
          });
  if (N >= 1)
    s.run("convolution_multiplicative", "transform", "G_1(F1 * F2) = G_1 F1 G_1 F2 on a 17^4 grid", 1e-4, [&] {
      const auto f1 = profiles(1, 0.9), f2 = profiles(1, 1.1);
      const GridFunction c = convolve(f1, f2, GridSpec{17, 4.5});
      const auto e1 = forward_transform_exact(f1), e2 = forward_transform_exact(f2);
      double sc = 0, e = 0;
      for (int j = 0; j <= 1; ++j) sc = std::max(sc, std::abs(e1(j, 0) * e2(j, 0)));
      for (double xi : {0.0, 1.0, 2.0}) {
        const EndMatrix m = discrete_fourier_on_ray(c, std::sqrt(xi));
        for (int j = 0; j <= 1; ++j) e = std::max(e, std::abs(m(j, j) - e1(j, xi) * e2(j, xi)) / sc);
      }
      return e;
    });

  // ---- extension
  s.run("hermite_genocchi_vs_divided_differences", "extension",
        "Newton coefficients: divided differences equal the simplex integral", 1e-8, [&] {
          PlaneClosedForm g = plane_gaussian(Poly2::constant(1.0), 1.0, 0.3, 0.5, 0.1, 0.25);
          double e = 0;
          for (int n = 0; n <= std::min(N, 4); ++n)
            for (int l = 0; l <= n; ++l)
              for (double xi : {0.05, 0.7, 2.0})
                e = std::max(e, std::abs(mu_divided(g, n, l, xi) - mu_hermite_genocchi(g, n, l, xi)));
          return e;
        });
  s.run("inverse_round_trip", "extension", "forward transform of the inverse transform restores the ray data", 1e-5,
        [&] {
          double e = 0;
          for (int n = 0; n <= N2; ++n) {
            const auto g = transform_plane_exact(profiles(n, 0.8));
            const auto back = forward_transform(InverseTransform(g, n).sampled(), {0.0, 1.0, 3.0});
            for (int j = 0; j <= n; ++j)
              for (double xi : {0.0, 1.0, 3.0}) e = std::max(e, std::abs(back(j, xi) - g(xi, (-n + 2 * j) * xi)));
          }
          return e;
        });
  s.run("jet_solve_identity", "extension", "solving restricted polynomial jets recovers them, exact", 0, [&] {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> c(-9, 9);
    double bad = 0;
    for (int n = 0; n <= N; ++n)
      for (int d = 0; d <= 10; ++d) {
        std::vector<Rational> x(d + 1, Rational(0));
        for (int q = 0; q <= std::min(d, n); ++q) x[q] = Rational(c(rng));
        std::vector<Rational> cd;
        for (int j = 0; j <= n; ++j) {
          Rational t(-n + 2 * j), p(1), acc(0);
          for (const auto& v : x) {
            acc += v * p;
            p *= t;
          }
          cd.push_back(acc);
        }
        bad += jet_solve(cd, d, n) == x ? 0 : 1;
      }
    return bad;
  }, true);
  s.run("cramer_bound", "extension", "jet solutions bounded by n^{1+d/2} max |c|, exact", 0, [&] {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-20, 20);
    double bad = 0;
    for (int n = 1; n <= std::max(N, 1); ++n)
      for (int d = n; d <= 8; ++d) {
        std::vector<Rational> cd;
        for (int j = 0; j <= n; ++j) cd.push_back(Rational(c(rng)));
        bad += cramer_bound_holds(jet_solve(cd, d, n), cd, d, n) ? 0 : 1;
      }
    return bad;
  }, true);
  s.run("vandermonde_cofactor_bound", "extension", "|inverse(V)(q,j)| <= C(n,q) for the ray nodes, n <= 12, exact", 0,
        [&] {
          double bad = 0;
          for (int n = 0; n <= 12; ++n) bad += cofactor_ratio(n) <= 1 ? 0 : 1;
          return bad;
        }, true);
  s.run("borel_derivatives", "extension", "Borel sum has the prescribed partial derivatives at 0", 1e-5, [&] {
    PlaneClosedForm g = plane_gaussian(Poly2::constant(1.0), 1.0, 0.3, 0.5, 0.1, 0.25);
    const Jet jet = jet_of(g, 8);
    BorelSchedule schedule;
    schedule.m0 = 8;
    const BorelSum h = borel_sum(jet, BumpFunction{}, schedule);
    std::function<double(double, double)> hf = [&](double a, double b) { return h(a, b); };
    double e = 0;
    for (int d = 0; d <= 4; ++d)
      for (int q = 0; q <= d; ++q) e = std::max(e, std::abs(fd_partial(hf, 0, 0, d - q, q) - jet.a(d - q, q)));
    return e;
  });
  s.run("extension_restriction", "extension", "Schwartz extension of transform data restricts to the data", 1e-5, [&] {
    double e = 0;
    for (int n = 0; n <= N2; ++n)
      e = std::max(e, schwartz_extend(forward_transform_exact(gaussian(n, 0.5)), n).report.restriction_error);
    return e;
  });
  return s.out;
}

}  // namespace gelfand
