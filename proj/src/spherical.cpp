#include "gelfand/spherical.hpp"

#include <algorithm>
#include <cmath>

#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/kernels.hpp"
#include "gelfand/su2_reps.hpp"

namespace gelfand {

std::vector<SpectrumRay> spectrum_rays(int n) {
  std::vector<SpectrumRay> rays;
  for (int t : ray_slopes(n)) rays.push_back({int(rays.size()), t});
  return rays;
}

SpectrumPoint4 embed4(int m, int n, double xi, int j) {
  validate({m, n});
  if (j < 0 || j > n) throw InvalidArgument("ray index outside 0..n");
  if (!(xi >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
  return {xi, (-n + 2 * j) * xi, double(n * n + 2 * n), double(m)};
}

Eigen::VectorXcd sphere_column(const C2& zeta, int j, int n) {
  // Column j of tau(k_zeta): (a w1 + b w2)^j (c w1 + d w2)^(n-j) with
  // k_zeta^* = [[z2, -z1], [conj z1, conj z2]], in the normalized basis.
  const cdouble a = zeta[1], b = -zeta[0], c = std::conj(zeta[0]), d = std::conj(zeta[1]);
  std::vector<double> binom(n + 1, 1.0);
  for (int k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (n - k + 1) / k;
  auto bc = [](int nn, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (nn - k + i) / i;
    return r;
  };
  Eigen::VectorXcd col = Eigen::VectorXcd::Zero(n + 1);
  for (int p = 0; p <= j; ++p) {
    const cdouble first = bc(j, p) * std::pow(a, p) * std::pow(b, j - p);
    for (int q = 0; q <= n - j; ++q)
      col(p + q) += first * bc(n - j, q) * std::pow(c, q) * std::pow(d, n - j - q);
  }
  for (int i = 0; i <= n; ++i) col(i) *= std::sqrt(binom[j] / binom[i]);
  return col;
}

namespace {

struct MatrixList {
  std::vector<EndMatrix> m;
  std::vector<cdouble> cols;  // scratch, (n+1)^2, column-major
  MatrixList& operator+=(const MatrixList& o) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.m[i];
    return *this;
  }
};

// All columns of tau(k_zeta) at once, same expansion as sphere_column, with
// no allocation: bc is Pascal's triangle, norm[j][i] = sqrt(C(n,j)/C(n,i)).
void sphere_columns(const C2& zeta, int n, const std::vector<std::vector<double>>& bc,
                    const std::vector<std::vector<double>>& norm, cdouble* out) {
  cdouble pa[17], pb[17], pc[17], pd[17];
  const cdouble a = zeta[1], b = -zeta[0], c = std::conj(zeta[0]), d = std::conj(zeta[1]);
  pa[0] = pb[0] = pc[0] = pd[0] = 1;
  for (int k = 1; k <= n; ++k) {
    pa[k] = pa[k - 1] * a;
    pb[k] = pb[k - 1] * b;
    pc[k] = pc[k - 1] * c;
    pd[k] = pd[k - 1] * d;
  }
  for (int j = 0; j <= n; ++j) {
    cdouble* col = out + j * (n + 1);
    std::fill(col, col + n + 1, cdouble(0));
    for (int p = 0; p <= j; ++p) {
      const cdouble first = bc[j][p] * pa[p] * pb[j - p];
      for (int q = 0; q <= n - j; ++q) col[p + q] += first * (bc[n - j][q] * pc[q] * pd[n - j - q]);
    }
    for (int i = 0; i <= n; ++i) col[i] *= norm[j][i];
  }
}

std::vector<EndMatrix> spherical_on_rule(int n, double sqrt_xi, const C2& z, const SphereQuadrature& q) {
  if (n > 16) {
    MatrixList zero{std::vector<EndMatrix>(n + 1, EndMatrix::Zero(n + 1, n + 1)), {}};
    return kernels::chunked_sum_omp(q.size(), zero, [&](std::size_t i, MatrixList& acc) {
             const C2& zeta = q.nodes[i];
             const cdouble phase = std::polar(q.weights[i] * (n + 1), -sqrt_xi * pairing(z, zeta));
             const EndMatrix t = rep_matrix(sphere_element(zeta), {n, n});
             for (int j = 0; j <= n; ++j) acc.m[j].noalias() += (phase * t.col(j)) * t.col(j).adjoint();
           }).m;
  }
  std::vector<std::vector<double>> bc(n + 1), norm(n + 1, std::vector<double>(n + 1));
  for (int k = 0; k <= n; ++k) {
    bc[k].assign(k + 1, 1.0);
    for (int i = 1; i < k; ++i) bc[k][i] = bc[k - 1][i - 1] + bc[k - 1][i];
  }
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) norm[j][i] = std::sqrt(bc[n][j] / bc[n][i]);
  const std::size_t dim = n + 1;
  MatrixList zero{std::vector<EndMatrix>(dim, EndMatrix::Zero(dim, dim)), std::vector<cdouble>(dim * dim)};
  MatrixList s = kernels::chunked_sum_omp(q.size(), zero, [&](std::size_t i, MatrixList& acc) {
    const C2& zeta = q.nodes[i];
    const cdouble phase = std::polar(q.weights[i] * (n + 1), -sqrt_xi * pairing(z, zeta));
    cdouble* t = acc.cols.data();
    sphere_columns(zeta, n, bc, norm, t);
    for (std::size_t j = 0; j < dim; ++j) {
      const cdouble* v = t + j * dim;
      cdouble* m = acc.m[j].data();
      for (std::size_t c2 = 0; c2 < dim; ++c2) {
        const cdouble w = phase * std::conj(v[c2]);
        for (std::size_t c = 0; c < dim; ++c) m[c2 * dim + c] += v[c] * w;
      }
    }
  });
  return s.m;
}

double max_difference(const std::vector<EndMatrix>& a, const std::vector<EndMatrix>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

std::vector<EndMatrix> matrix_spherical_all(int n, double xi, const C2& z, const SphericalOptions& opt) {
  if (!(xi >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
  if (n < 0) throw InvalidRepIndex("n must be nonnegative");
  const double x = std::sqrt(xi) * norm(z);
  if (x == 0) return std::vector<EndMatrix>(n + 1, EndMatrix::Identity(n + 1, n + 1));
  const bool on_base_line = z[0] == cdouble(0);
  // On the line z1 = 0 the phase does not involve the first angle and the
  // integrand has modes |k| <= n in it, so 2n + 2 points there are exact.
  // Trapezoid error in an angle is about |J_N(x)|, below 1e-14 once
  // N >= x + 11 x^{1/3}; start there and grow by 5/4 until two rules agree.
  int level_b = int(std::ceil(x + 11 * std::cbrt(x))) + n + 4, level_u = level_b / 2 + 4;
  auto rule = [&](int lu, int lb) {
    return on_base_line ? sphere_quadrature(lu, 2 * n + 2, lb) : sphere_quadrature(std::max(lu * 2, lb));
  };
  std::vector<EndMatrix> prev = spherical_on_rule(n, std::sqrt(xi), z, rule(level_u, level_b));
  while (std::max(level_u * 2, level_b) <= opt.max_order) {
    level_u = std::max(level_u + 2, (5 * level_u + 3) / 4);
    level_b = std::max(level_b + 4, (5 * level_b + 3) / 4);
    std::vector<EndMatrix> next = spherical_on_rule(n, std::sqrt(xi), z, rule(level_u, level_b));
    if (max_difference(prev, next) <= opt.tolerance) return next;
    prev = std::move(next);
  }
  throw QuadratureNotConverged("spherical function did not settle below order " +
                               std::to_string(opt.max_order));
}

std::vector<EndMatrix> dn_spherical_symbol_side(int n, double xi, const C2& z, int order) {
  if (!(xi >= 0)) throw InvalidSpectralParameter("xi must be >= 0");
  if (n < 0) throw InvalidRepIndex("n must be nonnegative");
  const double x = std::sqrt(xi) * norm(z);
  if (order <= 0) order = int(std::ceil(x + 11 * std::cbrt(x))) + 2 * n + 6;
  const SphereQuadrature q = sphere_quadrature(order);
  const EquivariantPolynomial symbol = dn_symbol(n);
  const std::size_t dim = n + 1;
  MatrixList zero{std::vector<EndMatrix>(dim, EndMatrix::Zero(dim, dim)), {}};
  // The symbol is homogeneous of degree 2.
  return kernels::chunked_sum_omp(q.size(), zero, [&](std::size_t i, MatrixList& acc) {
           const C2& w = q.nodes[i];
           const cdouble phase = std::polar(q.weights[i] * (n + 1) * xi, -std::sqrt(xi) * pairing(z, w));
           const EndMatrix d = symbol.evaluate(w);
           for (int j = 0; j <= n; ++j) {
             const Eigen::VectorXcd v = sphere_column(w, j, n);
             acc.m[j].noalias() += (phase * (d * v)) * v.adjoint();
           }
         }).m;
}

EndMatrix matrix_spherical(int n, int j, double xi, const C2& z, const SphericalOptions& opt) {
  if (j < 0 || j > n) throw InvalidArgument("j outside 0..n");
  return matrix_spherical_all(n, xi, z, opt)[j];
}

namespace {

// Coefficients of the conjugation Casimir on the diagonal:
//   (Cas F)_jj = (t_j^2 - n^2 - 2n)(f_{j+1} - 2 f_j + f_{j-1}) + 2 t_j (f_{j+1} - f_{j-1})
struct CasRow {
  double prev, self, next;
};
CasRow cas_row(int n, int j) {
  const double t = -n + 2 * j, c = t * t - n * n - 2.0 * n;
  return {c - 2 * t, -2 * c, c + 2 * t};
}

}  // namespace

std::vector<double> laplacian_profiles(const EquivariantFunction& f, double r) {
  if (!(r >= 0)) throw InvalidArgument("r must be >= 0");
  const int n = f.n();
  if (f.is_closed_form()) {
    EquivariantFunction lap = laplacian(f);
    return lap.diagonal_values(r);
  }
  const auto d = f.diagonal();
  std::vector<double> out(n + 1);
  for (int j = 0; j <= n; ++j) {
    const CasRow c = cas_row(n, j);
    auto comb = [&](int k) {
      double v = c.self * d[j].derivative(r, k);
      if (j > 0) v += c.prev * d[j - 1].derivative(r, k);
      if (j < n) v += c.next * d[j + 1].derivative(r, k);
      return v;
    };
    if (r == 0) {
      // -f'' - 3 f' / r -> -4 f''(0); Cas / r^2 -> (Cas)''(0) / 2.
      out[j] = -4 * d[j].derivative(0, 2) + 0.5 * comb(2);
    } else {
      out[j] = -d[j].derivative(r, 2) - 3 / r * d[j].derivative(r, 1) + comb(0) / (r * r);
    }
  }
  return out;
}

EquivariantFunction laplacian(const EquivariantFunction& f) {
  const int n = f.n();
  if (f.is_closed_form()) {
    const auto d = f.diagonal();
    std::vector<RadialFunction> out;
    for (int j = 0; j <= n; ++j) {
      const CasRow c = cas_row(n, j);
      RadialExpr cas = d[j].expr() * c.self;
      if (j > 0) cas = cas + d[j - 1].expr() * c.prev;
      if (j < n) cas = cas + d[j + 1].expr() * c.next;
      RadialExpr d1 = d[j].expr().derivative();
      RadialExpr e = d1.derivative() * -1.0 + d1.times_power(-1) * -3.0 + cas.times_power(-2);
      out.emplace_back(e);
    }
    return EquivariantFunction::from_diagonal(n, out);
  }
  for (const auto& a : f.amplitudes())
    if (a.smoothness() < 2) throw InvalidProfile("sampled profile has no second derivative left");
  // Sampled: evaluate at the grid nodes; the result has no usable derivatives.
  const std::vector<double>& nodes =
      f.own_rule() ? f.own_rule()->x : f.amplitudes()[0].spline().nodes();
  auto to_amp = diagonal_to_amplitude_matrix(n);
  std::vector<std::vector<double>> values(n + 1, std::vector<double>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto lap = laplacian_profiles(f, nodes[k]);
    for (int l = 0; l <= n; ++l) {
      double s = 0;
      for (int j = 0; j <= n; ++j) s += to_amp[l][j] * lap[j];
      values[l][k] = s;
    }
  }
  GaussRule rule;
  if (f.own_rule()) {
    rule = *f.own_rule();
  } else {
    rule.x = nodes;
    rule.w.assign(nodes.size(), 0.0);
  }
  return EquivariantFunction::sampled(n, rule, values, 0);
}

EquivariantFunction laplacian_of_profiles(const EquivariantFunction& f) {
  if (!f.profiles()) throw InvalidProfile("profile Laplacian needs closed-form profiles");
  const ClosedForm s{{{1.0, 1, 0.0}}};
  std::vector<ClosedForm> out;
  int l = 0;
  for (const auto& g : *f.profiles()) {
    ClosedForm d1 = g.derivative();
    out.push_back((s * d1.derivative()) * -4.0 + d1 * (-8.0 * (l + 1)));
    ++l;
  }
  return EquivariantFunction::from_profiles(f.n(), std::move(out));
}

}  // namespace gelfand
