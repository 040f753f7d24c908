#include "gelfand/extension.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>

#include "gelfand/endvn.hpp"
#include "gelfand/equivariant.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/su2_reps.hpp"

namespace gelfand {

namespace {

constexpr double kPi = 3.14159265358979323846;

double slope(int n, int j) { return double(-n + 2 * j); }

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binom(int n, int k) { return to_double(Rational(binomial(n, k))); }

void check_l(int n, int l) {
  if (n < 0) throw InvalidRepIndex("n must be >= 0");
  if (l < 0 || l > n) throw InvalidIsotypicIndex("l = " + std::to_string(l) + " outside 0.." + std::to_string(n));
}

// Tensor Gauss points per simplex dimension: 16 while affordable, fewer for
// high l (the integrand is nearly polynomial of low degree for small xi).
int simplex_points(int l) {
  int m = 16;
  while (m > 4 && std::pow(double(m), l) > 2e6) --m;
  return m;
}

std::mutex fftw_mutex;

}  // namespace

double mu_divided(const PlaneClosedForm& g, int n, int l, double xi) {
  check_l(n, l);
  if (!(xi > 0)) throw InvalidSpectralParameter("divided differences need xi > 0");
  // Nodes t_i - t_k = 2 (i - k), so the denominators are exact integers.
  double s = 0;
  for (int i = 0; i <= l; ++i) {
    double den = 1;
    for (int k = 0; k <= l; ++k)
      if (k != i) den *= 2.0 * (i - k);
    s += g(xi, xi * slope(n, i)) / den;
  }
  return s / std::pow(xi, l);
}

double mu_hermite_genocchi(const PlaneClosedForm& g, int n, int l, double xi) {
  check_l(n, l);
  if (!(xi >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
  if (l == 0) return g(xi, xi * slope(n, 0));
  const PlaneClosedForm dg = g.derivative(0, l);
  const GaussRule gl = gauss_legendre(simplex_points(l), 0.0, 1.0);
  // Collapsed coordinates: lambda_k = u_k prod_{m<k} (1 - u_m), Jacobian
  // prod_k (1 - u_k)^{l-k}.  The integrand only sees sum_k lambda_k (t_k - t_0).
  double total = 0;
  auto rec = [&](auto&& self, int k, double remaining, double sigma, double w) -> void {
    if (k > l) {
      total += w * dg(xi, xi * (slope(n, 0) + sigma));
      return;
    }
    for (std::size_t a = 0; a < gl.x.size(); ++a) {
      const double u = gl.x[a];
      const double lam = remaining * u;
      self(self, k + 1, remaining * (1 - u), sigma + lam * 2.0 * k, w * gl.w[a] * std::pow(1 - u, l - k));
    }
  };
  rec(rec, 1, 1.0, 0.0, 1.0);
  return total;
}

double mu(const PlaneClosedForm& g, int n, int l, double xi) {
  return xi > kSmallXi ? mu_divided(g, n, l, xi) : mu_hermite_genocchi(g, n, l, xi);
}

std::vector<std::vector<double>> ray_profiles_from_plane(const PlaneClosedForm& g, int n,
                                                         const std::vector<double>& xi_list) {
  std::vector<std::vector<double>> out(n + 1, std::vector<double>(xi_list.size()));
  for (int l = 0; l <= n; ++l)
    for (std::size_t i = 0; i < xi_list.size(); ++i) out[l][i] = mu(g, n, l, xi_list[i]);
  return out;
}

std::vector<std::vector<Integer>> newton_basis_coefficients(int n) {
  std::vector<std::vector<Integer>> b;
  std::vector<Integer> p{1};
  for (int l = 0; l <= n; ++l) {
    b.push_back(p);
    // p <- p (t - t_l)
    std::vector<Integer> next(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * (-n + 2 * l);
    }
    p = std::move(next);
  }
  return b;
}

// ---- inverse transform ----------------------------------------------------

PlaneClosedForm transform_plane_exact(const EquivariantFunction& f) {
  const int n = f.n();
  const auto gamma = transform_amplitudes_exact(f);
  const auto q = discrete_q_polys(n);
  PlaneClosedForm g;
  for (int l = 0; l <= n; ++l)
    for (const auto& term : gamma[l].terms) {
      if (term.c == 0) continue;
      if (term.a < l) throw InvalidProfile("transform amplitude lacks its xi^l factor");
      Poly2 p, e;
      for (int k = 0; k <= l; ++k) {
        const double qk = to_double(q[l].coeffs[k]);
        if (qk != 0) p.c[{term.a - k, k}] += term.c * qk;
      }
      if (term.b != 0) e.c[{1, 0}] = -term.b;
      g.terms.push_back({std::move(p), std::move(e)});
    }
  return g;
}

InverseTransform::InverseTransform(PlaneClosedForm g, int n, const InverseOptions& opt) : g_(std::move(g)), n_(n) {
  if (n < 0) throw InvalidRepIndex("n must be >= 0");
  for (const auto& row : newton_basis_coefficients(n)) {
    std::vector<double> r;
    for (const auto& v : row) r.push_back(to_double(Rational(v)));
    b_.push_back(std::move(r));
  }
  auto ray_size = [&](double rho) {
    double m = 0;
    for (int j = 0; j <= n_; ++j) m = std::max(m, std::abs(g_(rho * rho, slope(n_, j) * rho * rho)));
    return m * rho * rho * rho;
  };
  fourier_radius_ = opt.fourier_radius;
  if (fourier_radius_ <= 0) {
    double peak = 0, last = 0;
    std::vector<double> vals;
    for (double rho = 0.25; rho <= 60; rho += 0.25) vals.push_back(ray_size(rho));
    for (double v : vals) peak = std::max(peak, v);
    for (std::size_t i = 0; i < vals.size(); ++i)
      if (vals[i] > 1e-16 * peak) last = 0.25 * (i + 1);
    if (peak == 0) last = 1;
    if (last >= 59) throw InvalidProfile("ray data does not decay");
    fourier_radius_ = last + 0.5;
  }
  const double P = fourier_radius_;
  const auto M = diagonal_to_amplitude_matrix(n_);
  auto build_rule = [&](int panels) {
    fourier_rule_ = radial_rule(P, panels);
    fourier_amp_.assign(n_ + 1, std::vector<double>(fourier_rule_.x.size(), 0.0));
    for (std::size_t i = 0; i < fourier_rule_.x.size(); ++i) {
      const double xi = fourier_rule_.x[i] * fourier_rule_.x[i];
      for (int j = 0; j <= n_; ++j) {
        const double v = g_(xi, slope(n_, j) * xi);
        for (int l = 0; l <= n_; ++l) fourier_amp_[l][i] += M[l][j] * v;
      }
    }
  };
  auto panels_for = [&](double R) { return std::max(2, int(std::ceil(P * (R + 1) / 8))); };
  space_radius_ = opt.space_radius;
  if (space_radius_ <= 0) {
    // Probe F(r b) outwards until r^3 |F| stays below the tolerance.  Ray data
    // with quadratic exponents in xi give Fhat ~ exp(-rho^4), hence a slow
    // exp(-r^{4/3}) tail in space, so the cap is generous.
    double peak = 0;
    int quiet = 0;
    double r = 0;
    while (quiet < 2) {
      r += 1;
      if (r > 60) throw InvalidProfile("inverse transform does not decay in space");
      build_rule(panels_for(r));
      double m = 0;
      for (double v : space_diagonal(r)) m = std::max(m, std::abs(v));
      m *= r * r * r;
      peak = std::max(peak, m);
      quiet = m <= opt.space_tolerance * peak ? quiet + 1 : 0;
    }
    space_radius_ = r;
  }
  build_rule(opt.fourier_panels > 0 ? opt.fourier_panels : panels_for(space_radius_));
  space_panels_ = opt.space_panels > 0 ? opt.space_panels : std::max(2, int(std::ceil(space_radius_ * (P + 1) / 8)));
}

EndMatrix InverseTransform::evaluate_fourier(const C2& zeta) const {
  const double xi = std::norm(zeta[0]) + std::norm(zeta[1]);
  const EndMatrix d = dn_symbol_numeric(zeta, n_);
  const int dim = n_ + 1;
  std::vector<EndMatrix> pw{EndMatrix::Identity(dim, dim)};
  for (int k = 1; k <= n_; ++k) pw.push_back(pw.back() * d);
  EndMatrix out = EndMatrix::Zero(dim, dim);
  for (int l = 0; l <= n_; ++l) {
    EndMatrix s = EndMatrix::Zero(dim, dim);
    for (int k = 0; k <= l; ++k)
      if (b_[l][k] != 0) s += b_[l][k] * std::pow(xi, l - k) * pw[k];
    out += mu(g_, n_, l, xi) * s;
  }
  return out;
}

std::vector<double> InverseTransform::space_diagonal(double r) const {
  auto v = ray_integral(n_, fourier_rule_, fourier_amp_, r);
  const double c = std::pow(2 * kPi, -4);
  for (auto& x : v) x *= c;
  return v;
}

EndMatrix InverseTransform::evaluate_space(const C2& z) const {
  const double r = norm(z);
  auto f = space_diagonal(r);
  EndMatrix d = EndMatrix::Zero(n_ + 1, n_ + 1);
  for (int j = 0; j <= n_; ++j) d(j, j) = f[j];
  if (r == 0) return d;
  const EndMatrix t = rep_matrix(sphere_element({z[0] / r, z[1] / r}), {n_, n_});
  return t * d * t.adjoint();
}

EquivariantFunction InverseTransform::sampled() const {
  const GaussRule rule = radial_rule(space_radius_, space_panels_);
  const auto M = diagonal_to_amplitude_matrix(n_);
  std::vector<std::vector<double>> amp(n_ + 1, std::vector<double>(rule.x.size(), 0.0));
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const auto f = space_diagonal(rule.x[i]);
    for (int l = 0; l <= n_; ++l)
      for (int j = 0; j <= n_; ++j) amp[l][i] += M[l][j] * f[j];
  }
  return EquivariantFunction::sampled(n_, rule, amp);
}

InverseTransform inverse_transform(const PlaneClosedForm& g, int n, const InverseOptions& opt) {
  return InverseTransform(g, n, opt);
}

// ---- jets -------------------------------------------------------------------

double Jet::a(int p, int q) const {
  const int d = p + q;
  if (p < 0 || q < 0 || d > degree) throw InvalidArgument("jet index out of range");
  return x[d][q] / binom(d, q);
}

double Jet::ray_derivative(int d, double t) const {
  double s = 0, tq = 1;
  for (int q = 0; q <= d; ++q, tq *= t) s += x[d][q] * tq;
  return s;
}

double Jet::homogeneous(int d, double x1, double x2) const {
  double s = 0;
  for (int q = 0; q <= d; ++q)
    if (x[d][q] != 0) s += x[d][q] * std::pow(x1, d - q) * std::pow(x2, q);
  return s / factorial(d);
}

bool Jet::is_zero() const {
  for (const auto& row : x)
    for (double v : row)
      if (v != 0) return false;
  return true;
}

Jet jet_of(const PlaneClosedForm& g, int degree) {
  Jet j{degree, {}};
  for (int d = 0; d <= degree; ++d) {
    std::vector<double> row;
    for (int q = 0; q <= d; ++q) row.push_back(binom(d, q) * g.derivative(d - q, q)(0.0, 0.0));
    j.x.push_back(std::move(row));
  }
  return j;
}

namespace {

std::vector<double> sampled_jet(const SampledRay& ray, int degree) {
  const auto& xs = ray.xi();
  const auto& vs = ray.values();
  const int need = degree + 5;
  if (int(xs.size()) < need || xs.front() != 0.0)
    throw InsufficientResolution("sampled ray needs >= " + std::to_string(need) + " points starting at 0");
  const int m = std::min<int>(xs.size(), degree + 10);
  const double s = xs[m - 1];
  double vmax = 0;
  for (int i = 0; i < m; ++i) vmax = std::max(vmax, std::abs(vs[i]));
  auto fit = [&](int deg) {
    Eigen::MatrixXd a(m, deg + 1);
    Eigen::VectorXd b(m);
    for (int i = 0; i < m; ++i) {
      const double x = xs[i] / s;
      double p = 1;
      for (int k = 0; k <= deg; ++k, p *= x) a(i, k) = p;
      b(i) = vs[i];
    }
    return Eigen::VectorXd(a.colPivHouseholderQr().solve(b));
  };
  const Eigen::VectorXd lo = fit(degree + 2), hi = fit(degree + 3);
  std::vector<double> c(degree + 1);
  for (int d = 0; d <= degree; ++d) {
    const double scale = factorial(d) / std::pow(s, d);
    const double c1 = lo(d) * scale, c2 = hi(d) * scale;
    // The lower fit's truncation error bounds the gap; the higher fit is kept.
    if (std::abs(c1 - c2) > 1e-4 * (std::abs(c2) + factorial(d) * vmax))
      throw InsufficientResolution("sampled ray too coarse near 0 for derivative " + std::to_string(d));
    c[d] = c2;
  }
  return c;
}

}  // namespace

std::vector<std::vector<double>> ray_jet(const SpectralFunction& rays, int degree) {
  if (degree < 0) throw InvalidArgument("jet degree must be >= 0");
  if (int(rays.rays.size()) != rays.n + 1) throw InvalidArgument("need n + 1 rays");
  std::vector<std::vector<double>> c(degree + 1, std::vector<double>(rays.n + 1));
  for (int j = 0; j <= rays.n; ++j) {
    const RayData& r = rays.rays[j];
    if (r.is_sampled()) {
      auto s = sampled_jet(r.sampled(), degree);
      for (int d = 0; d <= degree; ++d) c[d][j] = s[d];
    } else {
      for (int d = 0; d <= degree; ++d) c[d][j] = r.derivative(0.0, d);
    }
  }
  return c;
}

std::vector<int> central_rows(int d, int n) {
  std::vector<int> rows;
  if (d >= n) {
    for (int j = 0; j <= n; ++j) rows.push_back(j);
    return rows;
  }
  const int first = (n - d) % 2 == 0 ? (n - d) / 2 : (n - d - 1) / 2 + 1;
  for (int j = first; j <= first + d; ++j) rows.push_back(j);
  return rows;
}

namespace {

std::vector<Rational> solve_central(const std::vector<Rational>& c, int d, int n) {
  if (int(c.size()) != n + 1) throw InvalidArgument("jet data needs n + 1 entries");
  if (d < 0) throw InvalidArgument("degree must be >= 0");
  const auto rows = central_rows(d, n);
  const int k = int(rows.size());
  RationalMatrix a(k, k);
  for (int i = 0; i < k; ++i) {
    Rational t(-n + 2 * rows[i]), p(1);
    for (int q = 0; q < k; ++q, p *= t) a(i, q) = p;
  }
  const RationalMatrix inv = inverse(a);
  std::vector<Rational> x(d + 1, Rational(0));
  for (int q = 0; q < k; ++q)
    for (int i = 0; i < k; ++i) x[q] += inv(q, i) * c[rows[i]];
  return x;
}

}  // namespace

std::vector<Rational> jet_solve(const std::vector<Rational>& c, int d, int n) {
  auto x = solve_central(c, d, n);
  if (d < n) {
    for (int j = 0; j <= n; ++j) {
      Rational t(-n + 2 * j), p(1), s(0);
      for (int q = 0; q <= d; ++q, p *= t) s += x[q] * p;
      if (s != c[j]) throw InconsistentJetData("degree " + std::to_string(d) + " data not a polynomial restriction");
    }
  }
  return x;
}

std::vector<double> jet_solve(const std::vector<double>& c, int d, int n, double tolerance) {
  std::vector<Rational> cr;
  double cmax = 1;
  for (double v : c) {
    cr.push_back(exact_rational(v));
    cmax = std::max(cmax, std::abs(v));
  }
  auto x = solve_central(cr, d, n);
  std::vector<double> out;
  for (const auto& v : x) out.push_back(to_double(v));
  if (d < n) {
    for (int j = 0; j <= n; ++j) {
      double s = 0, p = 1;
      for (int q = 0; q <= d; ++q, p *= slope(n, j)) s += out[q] * p;
      if (std::abs(s - c[j]) > tolerance * cmax)
        throw InconsistentJetData("degree " + std::to_string(d) + " residual " + std::to_string(std::abs(s - c[j])));
    }
  }
  return out;
}

Jet jet_from_rays(const std::vector<std::vector<double>>& c, int n, double tolerance) {
  Jet j{int(c.size()) - 1, {}};
  for (int d = 0; d <= j.degree; ++d) j.x.push_back(jet_solve(c[d], d, n, tolerance));
  return j;
}

bool cramer_bound_holds(const std::vector<Rational>& x, const std::vector<Rational>& c, int d, int n) {
  Rational cmax2(0);
  for (const auto& v : c) cmax2 = std::max(cmax2, Rational(v * v));
  Integer p(1);
  for (int i = 0; i < 2 + d; ++i) p *= n;
  const Rational bound = Rational(p) * cmax2;
  for (const auto& v : x)
    if (v * v > bound) return false;
  return true;
}

RationalMatrix vandermonde(int n) {
  RationalMatrix v(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    Rational t(-n + 2 * j), p(1);
    for (int q = 0; q <= n; ++q, p *= t) v(j, q) = p;
  }
  return v;
}

Rational cofactor_ratio(int n) {
  const RationalMatrix inv = inverse(vandermonde(n));
  Rational worst(0);
  for (int q = 0; q <= n; ++q)
    for (int j = 0; j <= n; ++j) worst = std::max(worst, Rational(abs(inv(q, j)) / Rational(binomial(n, q))));
  return worst;
}

// ---- bumps and Borel sums ---------------------------------------------------

void BumpFunction::validate() const {
  if (!(plateau >= 0 && support > plateau)) throw InvalidArgument("bump needs 0 <= plateau < support");
}

double BumpFunction::operator()(double r) const {
  r = std::abs(r);
  if (r <= plateau) return 1;
  if (r >= support) return 0;
  const double t = (support - r) / (support - plateau);
  const double a = std::exp(-1 / t), b = std::exp(-1 / (1 - t));
  return a / (a + b);
}

double BumpFunction::operator()(double x1, double x2) const { return (*this)(std::hypot(x1, x2)); }

double summand_size(const Jet& jet, int d, const BumpFunction& phi, int m) {
  const int N = 128;
  const double L = 1.5 * phi.support, h = 2 * L / N;
  std::vector<std::complex<double>> f(N * N), g(N * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const double x1 = -L + a * h, x2 = -L + b * h;
      f[a * N + b] = phi(x1, x2) * jet.homogeneous(d, x1, x2);
    }
  fftw_plan fwd, bwd;
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    auto* pf = reinterpret_cast<fftw_complex*>(f.data());
    auto* pg = reinterpret_cast<fftw_complex*>(g.data());
    fwd = fftw_plan_dft_2d(N, N, pf, pf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(N, N, pg, pg, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(fwd);
  auto wave = [&](int i) { return (i == N / 2 ? 0.0 : double(i < N / 2 ? i : i - N)) * kPi / L; };
  double best = 0;
  for (int k = 0; k <= m; ++k)
    for (int q = 0; q <= k; ++q) {
      for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
          const std::complex<double> i1(0, wave(a)), i2(0, wave(b));
          g[a * N + b] = f[a * N + b] * std::pow(i1, k - q) * std::pow(i2, q) / double(N * N);
        }
      fftw_execute(bwd);
      for (const auto& v : g) best = std::max(best, std::abs(v.real()));
    }
  {
    std::lock_guard<std::mutex> lock(fftw_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
  return best;
}

BorelSum::BorelSum(Jet jet, BumpFunction phi, BorelSchedule schedule)
    : jet_(std::move(jet)), phi_(phi), schedule_(std::move(schedule)) {}

double BorelSum::operator()(double x1, double x2) const {
  double s = 0;
  for (int d = 0; d <= jet_.degree; ++d) {
    const double e = schedule_.eps[d];
    const double w = phi_(x1 / e, x2 / e);
    if (w != 0) s += w * jet_.homogeneous(d, x1, x2);
  }
  return s;
}

BorelSum borel_sum(const Jet& jet, const BumpFunction& phi, BorelSchedule schedule) {
  phi.validate();
  schedule.eps.assign(jet.degree + 1, 1.0);
  schedule.sizes.assign(jet.degree + 1, 0.0);
  for (int d = schedule.m0 + 1; d <= jet.degree; ++d) {
    if (d < 1) continue;
    const double a = summand_size(jet, d, phi, d - 1);
    schedule.sizes[d] = a;
    schedule.eps[d] = std::min(1.0, std::pow(2.0, -d) / (1 + a));
  }
  return BorelSum(jet, phi, std::move(schedule));
}

// ---- vanishing extension ----------------------------------------------------

VanishingExtension::VanishingExtension(int n, std::vector<RayResidual> r, BumpFunction eta)
    : n_(n), r_(std::move(r)), eta_(eta) {}

double VanishingExtension::operator()(double x1, double x2) const {
  if (x1 <= 0) return 0;
  const double s = x2 / x1;
  double v = 0;
  for (int j = 0; j <= n_; ++j) {
    const double w = eta_(s - slope(n_, j));
    if (w != 0) v += r_[j](x1) * w;
  }
  return v;
}

VanishingExtension vanishing_extend(int n, std::vector<RayResidual> residuals, const BumpFunction& eta,
                                    const VanishingOptions& opt) {
  eta.validate();
  if (eta.support > 0.5) throw InvalidArgument("eta must be supported in [-1/2, 1/2]");
  if (int(residuals.size()) != n + 1) throw InvalidArgument("need n + 1 residuals");
  for (int j = 0; j <= n; ++j) {
    std::vector<double> v;
    for (int k = 0; k <= 10; ++k) v.push_back(std::abs(residuals[j](opt.check_radius * std::pow(2.0, -k))));
    for (int k = 0; k < 10; ++k) {
      if (v[k] <= 100 * opt.noise_floor || v[k + 1] <= 100 * opt.noise_floor) continue;
      const double sl = std::log2(v[k] / v[k + 1]);
      if (sl < opt.order + 0.5)
        throw OrderViolation("residual on ray " + std::to_string(j) + " decays like xi^" + std::to_string(sl) +
                             ", need order " + std::to_string(opt.order + 1));
    }
  }
  return VanishingExtension(n, std::move(residuals), eta);
}

// ---- pipeline ---------------------------------------------------------------

SchwartzExtension schwartz_extend(const SpectralFunction& rays, int n, const ExtensionOptions& opt) {
  if (rays.n != n || int(rays.rays.size()) != n + 1) throw InvalidArgument("ray data does not match n");
  const int D = opt.max_degree;
  if (D < 0 || D > 16) throw InvalidArgument("jet degree must be in 0..16");
  SchwartzExtension out;
  out.report.ray_jet = ray_jet(rays, D);
  out.jet = jet_from_rays(out.report.ray_jet, n, opt.jet_tolerance);
  BorelSchedule sched;
  sched.m0 = opt.m0 < 0 ? D : opt.m0;
  auto h = std::make_shared<const BorelSum>(borel_sum(out.jet, opt.phi, sched));

  double scale = 1;
  for (const auto& r : rays.rays) scale = std::max(scale, std::abs(r(0.0)));
  std::vector<RayResidual> res;
  for (int j = 0; j <= n; ++j) {
    const RayData ray = rays.rays[j];
    const double t = slope(n, j);
    res.push_back([ray, h, t](double x) { return ray(x) - (*h)(x, t * x); });
  }
  VanishingOptions vo = opt.vanishing;
  vo.order = D;
  vo.noise_floor *= scale;
  auto v = std::make_shared<const VanishingExtension>(vanishing_extend(n, std::move(res), opt.eta, vo));
  out.h = h;
  out.v = v;
  out.u = [h, v](double x1, double x2) { return (*h)(x1, x2) + (*v)(x1, x2); };

  auto& rep = out.report;
  rep.max_degree = D;
  rep.smoothness_order = std::max(0, (D - 1) / 2);
  rep.decay_orders = opt.decay_orders;
  double radius = opt.decay_radius;
  for (const auto& r : rays.rays)
    if (r.is_sampled()) radius = std::min(radius, r.sampled().xi().back());
  rep.decay.assign(opt.decay_orders.size(), 0.0);
  const int nr = 80, na = 64;
  for (int a = 0; a <= nr; ++a)
    for (int b = 0; b < na; ++b) {
      const double rr = radius * a / nr, th = 2 * kPi * b / na;
      const double x1 = rr * std::cos(th), x2 = rr * std::sin(th);
      const double val = std::abs(out.u(x1, x2));
      for (std::size_t m = 0; m < opt.decay_orders.size(); ++m)
        rep.decay[m] = std::max(rep.decay[m], std::pow(1 + rr * rr, opt.decay_orders[m]) * val);
    }
  for (int j = 0; j <= n; ++j)
    for (int a = 1; a <= nr; ++a) {
      const double x = radius * a / nr / std::sqrt(1 + slope(n, j) * slope(n, j));
      rep.restriction_error = std::max(rep.restriction_error, std::abs(out.u(x, slope(n, j) * x) - rays.rays[j](x)));
    }
  return out;
}

// ---- finite differences -----------------------------------------------------

std::vector<double> central_weights(int k) {
  // Fornberg's recursion on the offsets 0, -1, 1, -2, 2, ... reordered to -4..4.
  const int m = 9;
  if (k < 0 || k >= m) throw InvalidArgument("derivative order must be in 0..8");
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) x[i] = i - 4;
  std::vector<std::vector<std::vector<double>>> c(m, std::vector<std::vector<double>>(m, std::vector<double>(k + 1, 0.0)));
  c[0][0][0] = 1;
  double c1 = 1;
  for (int i = 1; i < m; ++i) {
    double c2 = 1;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      for (int d = 0; d <= std::min(i, k); ++d) {
        c[i][j][d] = (x[i] * c[i - 1][j][d] - (d > 0 ? d * c[i - 1][j][d - 1] : 0.0)) / c3;
      }
    }
    for (int d = 0; d <= std::min(i, k); ++d)
      c[i][i][d] = c1 / c2 * ((d > 0 ? d * c[i - 1][i - 1][d - 1] : 0.0) - x[i - 1] * c[i - 1][i - 1][d]);
    c1 = c2;
  }
  std::vector<double> w(m);
  for (int j = 0; j < m; ++j) w[j] = c[m - 1][j][k];
  return w;
}

double fd_partial(const std::function<double(double, double)>& f, double x1, double x2, int p, int q, double h) {
  const auto wp = central_weights(p), wq = central_weights(q);
  double s = 0;
  for (int a = 0; a < 9; ++a) {
    if (wp[a] == 0) continue;
    for (int b = 0; b < 9; ++b)
      if (wq[b] != 0) s += wp[a] * wq[b] * f(x1 + (a - 4) * h, x2 + (b - 4) * h);
  }
  return s / std::pow(h, p + q);
}

}  // namespace gelfand
