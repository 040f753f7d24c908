#include "gelfand/transform.hpp"

#include <algorithm>
#include <boost/math/interpolators/barycentric_rational.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <map>
#include <mutex>

#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/kernels.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/spherical.hpp"

namespace gelfand {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSphereArea = 2 * kPi * kPi;

}  // namespace

SampledRay::SampledRay(std::vector<double> xi, std::vector<double> values) : xi_(std::move(xi)), v_(std::move(values)) {
  if (xi_.empty() || xi_.size() != v_.size()) throw InvalidArgument("sampled ray needs matching nonempty grids");
  for (std::size_t i = 1; i < xi_.size(); ++i)
    if (!(xi_[i] > xi_[i - 1])) throw InvalidArgument("sampled ray grid must be increasing");
  if (xi_.size() == 1) return;
  auto br = std::make_shared<boost::math::barycentric_rational<double>>(
      xi_.begin(), xi_.end(), v_.begin(), std::min<std::size_t>(3, xi_.size() - 1));
  interp_ = std::make_shared<const std::function<double(double)>>([br](double x) { return (*br)(x); });
}

double SampledRay::operator()(double xi) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(xi_.back()));
  if (xi < xi_.front() - slack || xi > xi_.back() + slack)
    throw InvalidArgument("xi = " + std::to_string(xi) + " outside the sampled ray grid");
  if (!interp_) return v_[0];
  return (*interp_)(std::clamp(xi, xi_.front(), xi_.back()));
}

double RayData::operator()(double xi) const {
  if (const auto* c = std::get_if<ClosedForm>(&v_)) return (*c)(xi);
  if (const auto* p = std::get_if<PlaneRay>(&v_)) return (*p->g)(xi, p->t * xi);
  return std::get<SampledRay>(v_)(xi);
}

double RayData::derivative(double xi, int k) const {
  if (const auto* c = std::get_if<ClosedForm>(&v_)) return c->derivative(xi, k);
  if (const auto* p = std::get_if<PlaneRay>(&v_)) return p->g->ray_derivative(p->t, xi, k);
  throw InsufficientResolution("sampled ray has no exact derivatives");
}

SpectralFunction SpectralFunction::from_plane(const PlaneClosedForm& g, int n) {
  auto shared = std::make_shared<const PlaneClosedForm>(g);
  SpectralFunction s{n, {}};
  for (int j = 0; j <= n; ++j) s.rays.emplace_back(PlaneRay{shared, double(-n + 2 * j)});
  return s;
}

double SpectralFunction::tip_mismatch() const {
  double d = 0;
  for (const auto& r : rays) d = std::max(d, std::abs(r(0.0) - rays[0](0.0)));
  return d;
}

namespace {

// D_lj(u) at the Gauss nodes of [0, 1], [node][l * (n+1) + j].
struct RayKernel {
  int n;
  GaussRule u;
  std::vector<std::vector<double>> d;
  std::vector<double> root;  // sqrt(1 - u)
};

RayKernel make_kernel(int n, int nu) {
  RayKernel k{n, gauss_legendre(nu, 0.0, 1.0), {}, {}};
  std::vector<std::vector<double>> qv(n + 1, std::vector<double>(n + 1));
  auto polys = discrete_q_polys(n);
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= n; ++j) qv[l][j] = polys[l](double(-n + 2 * j));
  for (double u : k.u.x) {
    const C2 w{std::sqrt(u), std::sqrt(1 - u)};
    const EndMatrix t = rep_matrix(sphere_element(w), {n, n});
    std::vector<double> row((n + 1) * (n + 1), 0.0);
    for (int l = 0; l <= n; ++l)
      for (int j = 0; j <= n; ++j) {
        double s = 0;
        for (int c = 0; c <= n; ++c) s += std::norm(t(j, c)) * qv[l][c];
        row[l * (n + 1) + j] = s;
      }
    k.d.push_back(std::move(row));
    k.root.push_back(std::sqrt(1 - u));
  }
  return k;
}

int kernel_points(int n, double x_max) { return int(std::ceil(0.75 * x_max)) + n + 20; }

// Sum over a radial rule of r^3 sum_l A_l(r) K_lj(r rho); the last entry
// carries the L^1 mass used as the scale for convergence tests.
Eigen::VectorXd ray_sum(const RayKernel& k, const GaussRule& rule,
                        const std::vector<std::vector<double>>& amp, double rho) {
  const int n = k.n;
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(n + 2);
  return kernels::chunked_sum_omp(rule.x.size(), zero, [&](std::size_t i, Eigen::VectorXd& acc) {
    const double r = rule.x[i], w = rule.w[i] * r * r * r * kSphereArea;
    double mass = 0;
    for (int l = 0; l <= n; ++l) mass += std::abs(amp[l][i]);
    acc(n + 1) += w * mass;
    if (mass == 0) return;
    for (std::size_t a = 0; a < k.u.x.size(); ++a) {
      const double bes = boost::math::cyl_bessel_j(0, r * rho * k.root[a]) * k.u.w[a] * w;
      const auto& d = k.d[a];
      for (int l = 0; l <= n; ++l) {
        if (amp[l][i] == 0) continue;
        const double c = bes * amp[l][i];
        for (int j = 0; j <= n; ++j) acc(j) += c * d[l * (n + 1) + j];
      }
    }
  });
}

std::vector<std::vector<double>> amplitudes_on(const EquivariantFunction& f, const GaussRule& rule) {
  std::vector<std::vector<double>> a(f.n() + 1, std::vector<double>(rule.x.size()));
  for (int l = 0; l <= f.n(); ++l)
    for (std::size_t i = 0; i < rule.x.size(); ++i) a[l][i] = f.amplitudes()[l](rule.x[i]);
  return a;
}

std::vector<double> diagonal_at(const EquivariantFunction& f, double rho, const TransformOptions& opt) {
  if (!(rho >= 0)) throw InvalidSpectralParameter("radius must be >= 0");
  const int n = f.n();
  for (const auto& a : f.amplitudes())
    if (!a.integrable()) throw InvalidProfile("profile does not decay");
  auto finish = [&](const Eigen::VectorXd& v) { return std::vector<double>(v.data(), v.data() + n + 1); };
  if (f.own_rule()) {
    const GaussRule& rule = *f.own_rule();
    const double rmax = rule.x.empty() ? 0.0 : rule.x.back();
    RayKernel k = make_kernel(n, kernel_points(n, rmax * rho));
    return finish(ray_sum(k, rule, f.rule_values(), rho));
  }
  const double R = f.tail_radius(opt.truncation, 3);
  RayKernel k = make_kernel(n, kernel_points(n, R * rho));
  int panels = std::max(2, int(std::ceil(R * (rho + 1) / 4)));
  GaussRule rule = radial_rule(R, panels);
  Eigen::VectorXd prev = ray_sum(k, rule, amplitudes_on(f, rule), rho);
  while (panels * 2 <= opt.max_panels) {
    panels *= 2;
    rule = radial_rule(R, panels);
    Eigen::VectorXd next = ray_sum(k, rule, amplitudes_on(f, rule), rho);
    const double scale = std::max(next(n + 1), 1e-300);
    if ((next.head(n + 1) - prev.head(n + 1)).cwiseAbs().maxCoeff() <= opt.tolerance * scale) return finish(next);
    prev = std::move(next);
  }
  throw QuadratureNotConverged("radial transform did not converge");
}

}  // namespace

std::vector<double> ray_integral(int n, const GaussRule& rule, const std::vector<std::vector<double>>& amp,
                                 double rho) {
  const double rmax = rule.x.empty() ? 0.0 : rule.x.back();
  RayKernel k = make_kernel(n, kernel_points(n, rmax * rho));
  Eigen::VectorXd v = ray_sum(k, rule, amp, rho);
  return std::vector<double>(v.data(), v.data() + n + 1);
}

std::vector<std::vector<double>> fourier_diagonals(const EquivariantFunction& f, const std::vector<double>& r,
                                                   const TransformOptions& opt) {
  std::vector<std::vector<double>> out;
  for (double x : r) out.push_back(diagonal_at(f, x, opt));
  return out;
}

EndMatrix fourier_on_ray(const EquivariantFunction& f, double r, const TransformOptions& opt) {
  auto d = diagonal_at(f, r, opt);
  EndMatrix m = EndMatrix::Zero(f.n() + 1, f.n() + 1);
  for (int j = 0; j <= f.n(); ++j) m(j, j) = d[j];
  return m;
}

double off_diagonal_mass(const EndMatrix& m) {
  double s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k)
      if (i != k) s += std::norm(m(i, k));
  return std::sqrt(s);
}

EndMatrix fourier_on_ray_full(const MatrixField& f, double rho, const FieldOptions& opt) {
  if (!(rho >= 0)) throw InvalidSpectralParameter("radius must be >= 0");
  const int n = f.n;
  const double R = f.radius;
  const int panels = opt.radial_panels > 0 ? opt.radial_panels : std::max(2, int(std::ceil(R * (rho + 1) / 8)));
  const int order = opt.sphere_order > 0 ? opt.sphere_order : int(std::ceil(R * rho)) + 2 * n + 16;
  const GaussRule rule = radial_rule(R, panels);
  const SphereQuadrature sq = sphere_quadrature(order);
  const std::size_t ns = sq.size();
  EndMatrix zero = EndMatrix::Zero(n + 1, n + 1);
  return kernels::chunked_sum_omp(rule.x.size() * ns, zero, [&](std::size_t idx, EndMatrix& acc) {
    const std::size_t i = idx / ns, s = idx % ns;
    const double r = rule.x[i];
    const C2& w = sq.nodes[s];
    const C2 z{r * w[0], r * w[1]};
    const double weight = rule.w[i] * r * r * r * kSphereArea * sq.weights[s];
    acc.noalias() += std::polar(weight, -r * rho * w[1].real()) * f.f(z);
  });
}

EndMatrix fourier_on_ray(const MatrixField& f, double r, const FieldOptions& opt) {
  EndMatrix m = fourier_on_ray_full(f, r, opt);
  if (off_diagonal_mass(m) > 1e-6 * std::max(1.0, m.norm()))
    throw EquivarianceViolation("transform on the base ray is not diagonal (off-diagonal mass " +
                                std::to_string(off_diagonal_mass(m)) + ")");
  return m;
}

SpectralFunction forward_transform(const EquivariantFunction& f, const std::vector<double>& xi_list,
                                   const TransformOptions& opt) {
  std::vector<double> xi = xi_list;
  std::sort(xi.begin(), xi.end());
  xi.erase(std::unique(xi.begin(), xi.end()), xi.end());
  std::vector<double> rho;
  for (double x : xi) {
    if (!(x >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
    rho.push_back(std::sqrt(x));
  }
  auto d = fourier_diagonals(f, rho, opt);
  SpectralFunction g{f.n(), {}};
  for (int j = 0; j <= f.n(); ++j) {
    std::vector<double> v;
    for (const auto& row : d) v.push_back(row[j]);
    g.rays.emplace_back(SampledRay(xi, v));
  }
  return g;
}

std::vector<ClosedForm> transform_amplitudes_exact(const EquivariantFunction& f) {
  if (!f.profiles()) throw InvalidProfile("closed-form transform needs profile data");
  const int n = f.n();
  std::vector<ClosedForm> gamma(n + 1);
  for (int l = 0; l <= n; ++l) {
    for (const auto& t : (*f.profiles())[l].terms) {
      if (t.c == 0) continue;
      if (!(t.b > 0)) throw InvalidProfile("profile term does not decay");
      const int a = t.a, alpha = 2 * l + 1;
      // (2 pi)^2 (-1)^l a! / (4^{l+1} b^{2l+a+2})
      const double lead = t.c * 4 * kPi * kPi * (l % 2 ? -1.0 : 1.0) * std::tgamma(a + 1.0) /
                          (std::pow(4.0, l + 1) * std::pow(t.b, 2 * l + a + 2));
      for (int i = 0; i <= a; ++i) {
        // L_a^alpha(x) = sum_i (-1)^i C(a+alpha, a-i) x^i / i!, x = xi / 4b
        const double binom = to_double(Rational(binomial(a + alpha, a - i)));
        const double c = lead * (i % 2 ? -1.0 : 1.0) * binom / (std::tgamma(i + 1.0) * std::pow(4 * t.b, i));
        gamma[l].terms.push_back({c, l + i, 1.0 / (4 * t.b)});
      }
    }
    gamma[l].simplify();
  }
  return gamma;
}

SpectralFunction forward_transform_exact(const EquivariantFunction& f) {
  const int n = f.n();
  auto gamma = transform_amplitudes_exact(f);
  auto polys = discrete_q_polys(n);
  SpectralFunction g{n, {}};
  for (int j = 0; j <= n; ++j) {
    ClosedForm ray;
    for (int l = 0; l <= n; ++l) ray = ray + gamma[l] * polys[l](double(-n + 2 * j));
    ray.simplify();
    g.rays.emplace_back(std::move(ray));
  }
  return g;
}

std::vector<double> trace_transform_oracle_all(const EquivariantFunction& f, double xi, double tolerance) {
  if (!(xi >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
  const int n = f.n();
  const double R = f.tail_radius(1e-14, 3);
  auto sum_on = [&](const GaussRule& rule) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(n + 2);
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double s = rule.x[i];
      const auto fd = f.diagonal_values(s);
      const double w = rule.w[i] * s * s * s * kSphereArea / (n + 1);
      double mass = 0;
      for (double v : fd) mass += std::abs(v);
      acc(n + 1) += w * mass;
      if (mass == 0) continue;
      const auto phi = matrix_spherical_all(n, xi, C2{0.0, -s});
      for (int j = 0; j <= n; ++j) {
        cdouble tr = 0;
        for (int c = 0; c <= n; ++c) tr += fd[c] * phi[j](c, c);
        acc(j) += w * tr.real();
      }
    }
    return acc;
  };
  int panels = std::max(2, int(std::ceil(R * (std::sqrt(xi) + 1) / 10)));
  Eigen::VectorXd prev = sum_on(radial_rule(R, panels));
  while (panels < 1024) {
    panels *= 2;
    Eigen::VectorXd next = sum_on(radial_rule(R, panels));
    if ((next.head(n + 1) - prev.head(n + 1)).cwiseAbs().maxCoeff() <= tolerance * std::max(next(n + 1), 1e-300))
      return std::vector<double>(next.data(), next.data() + n + 1);
    prev = std::move(next);
  }
  throw QuadratureNotConverged("trace oracle radial integral did not converge");
}

double trace_transform_oracle(const EquivariantFunction& f, double xi, int j, double tolerance) {
  if (j < 0 || j > f.n()) throw InvalidArgument("j outside 0..n");
  return trace_transform_oracle_all(f, xi, tolerance)[j];
}

namespace {

double weighted_l2(const EquivariantFunction& f, int m) {
  const double R = f.tail_radius(1e-10, 2 * m + 2);
  auto sum_on = [&](const GaussRule& rule) {
    double s = 0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double r = rule.x[i];
      double h = 0;
      for (double v : f.diagonal_values(r)) h += v * v;
      s += rule.w[i] * r * r * r * std::pow(1 + r * r, 2 * m) * h;
    }
    return kSphereArea * s;
  };
  if (f.own_rule()) return std::sqrt(sum_on(*f.own_rule()));
  int panels = 4;
  double prev = sum_on(radial_rule(R, panels));
  while (panels < 4096) {
    panels *= 2;
    const double next = sum_on(radial_rule(R, panels));
    if (std::abs(next - prev) <= 1e-12 * std::max(next, 1e-300)) return std::sqrt(next);
    prev = next;
  }
  throw QuadratureNotConverged("L2 norm did not converge");
}

}  // namespace

double l2_norm(const EquivariantFunction& f) { return weighted_l2(f, 0); }

double schwartz_norm(const EquivariantFunction& f, int m) {
  if (m < 0) throw InvalidArgument("norm index must be >= 0");
  double best = weighted_l2(f, m);
  EquivariantFunction g = f;
  for (int q = 1; q <= m; ++q) {
    g = laplacian(g);
    best = std::max(best, weighted_l2(g, m));
  }
  return best;
}

std::function<cdouble(const Mat2&, const C2&)> scalar_lift(const EquivariantFunction& f, int m) {
  const RepIndex idx{m, f.n()};
  validate(idx);
  return [f, idx](const Mat2& k, const C2& z) {
    return double(idx.n + 1) * (rep_matrix(k.adjoint(), idx) * f(z)).trace();
  };
}

namespace {

C2 shifted(C2 z, int coord, double h) {
  const cdouble step = coord % 2 == 0 ? cdouble(h, 0) : cdouble(0, h);
  z[coord / 2] += step;
  return z;
}

// Real Hessian H[c][d] in the coordinates (x1, y1, x2, y2).
std::vector<std::vector<EndMatrix>> hessian(const std::function<EndMatrix(const C2&)>& f, const C2& z, double h) {
  const EndMatrix c = f(z);
  std::vector<std::vector<EndMatrix>> H(4, std::vector<EndMatrix>(4));
  for (int a = 0; a < 4; ++a) {
    H[a][a] = (f(shifted(z, a, h)) - 2.0 * c + f(shifted(z, a, -h))) / (h * h);
    for (int b = a + 1; b < 4; ++b) {
      H[a][b] = (f(shifted(shifted(z, a, h), b, h)) - f(shifted(shifted(z, a, h), b, -h)) -
                 f(shifted(shifted(z, a, -h), b, h)) + f(shifted(shifted(z, a, -h), b, -h))) /
                (4 * h * h);
      H[b][a] = H[a][b];
    }
  }
  return H;
}

const EquivariantPolynomial& cached_dn_symbol(int n) {
  static std::mutex mu;
  static std::map<int, EquivariantPolynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, dn_symbol(n)).first;
  return it->second;
}

}  // namespace

EndMatrix apply_dn(const std::function<EndMatrix(const C2&)>& f, const C2& z, int n, double h) {
  const auto& sym = cached_dn_symbol(n);
  auto H1 = hessian(f, z, h), H2 = hessian(f, z, h / 2);
  std::vector<std::vector<EndMatrix>> H(4, std::vector<EndMatrix>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) H[a][b] = (4.0 * H2[a][b] - H1[a][b]) / 3.0;
  const cdouble I(0, 1);
  EndMatrix out = EndMatrix::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      const double norm_ik = std::sqrt(to_double(Rational(binomial(n, i) * binomial(n, k))));
      for (const auto& [e, c] : sym.r(i, k).terms()) {
        const int a = e[0] == 1 ? 0 : 1, b = e[2] == 1 ? 0 : 1;
        // zeta_a conj(zeta_b) -> -4 d/dzbar_a d/dz_b
        const int xa = 2 * a, ya = 2 * a + 1, xb = 2 * b, yb = 2 * b + 1;
        const EndMatrix op = -(H[xa][xb] + H[ya][yb] + I * (H[ya][xb] - H[xa][yb]));
        out.row(i) += (to_complex(c) / norm_ik) * op.row(k);
      }
    }
  return out;
}

}  // namespace gelfand
