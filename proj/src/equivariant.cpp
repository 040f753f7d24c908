#include "gelfand/equivariant.hpp"

#include <algorithm>

#include "gelfand/endvn.hpp"
#include "gelfand/errors.hpp"
#include "gelfand/su2_reps.hpp"

namespace gelfand {

namespace {

// q^l(t_j) as doubles, [l][j].
std::vector<std::vector<double>> q_values(int n) {
  auto q = discrete_q_polys(n);
  std::vector<std::vector<double>> v(n + 1, std::vector<double>(n + 1));
  for (int l = 0; l <= n; ++l)
    for (int j = 0; j <= n; ++j) v[l][j] = to_double(q[l](Rational(-n + 2 * j)));
  return v;
}

RadialFunction combine(const std::vector<RadialFunction>& fs, const std::vector<double>& w) {
  const bool closed = std::all_of(fs.begin(), fs.end(), [](const RadialFunction& f) { return f.is_closed_form(); });
  if (closed) {
    RadialExpr e;
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (w[i] != 0) e = e + fs[i].expr() * w[i];
    return e;
  }
  const bool sampled = std::none_of(fs.begin(), fs.end(), [](const RadialFunction& f) { return f.is_closed_form(); });
  if (!sampled) throw InvalidProfile("cannot mix closed-form and sampled amplitudes");
  const auto& nodes = fs[0].spline().nodes();
  std::vector<double> vals(nodes.size(), 0.0);
  int smooth = 1 << 20;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].spline().nodes() != nodes) throw InvalidProfile("sampled amplitudes on different grids");
    smooth = std::min(smooth, fs[i].smoothness());
    for (std::size_t k = 0; k < nodes.size(); ++k) vals[k] += w[i] * fs[i].spline().values()[k];
  }
  return RadialFunction(EvenSpline(nodes, vals), smooth);
}

}  // namespace

std::vector<std::vector<double>> diagonal_to_amplitude_matrix(int n) {
  auto q = q_values(n);
  std::vector<std::vector<double>> m(n + 1, std::vector<double>(n + 1));
  for (int l = 0; l <= n; ++l) {
    double norm = 0;
    for (int j = 0; j <= n; ++j) norm += q[l][j] * q[l][j];
    for (int j = 0; j <= n; ++j) m[l][j] = q[l][j] / norm;
  }
  return m;
}

EquivariantFunction EquivariantFunction::from_profiles(int n, std::vector<ClosedForm> g) {
  if (n < 0) throw InvalidRepIndex("n must be nonnegative");
  if (int(g.size()) > n + 1) throw InvalidIsotypicIndex("more profiles than isotypic components");
  g.resize(n + 1);
  EquivariantFunction f;
  f.n_ = n;
  f.q_ = q_values(n);
  for (int l = 0; l <= n; ++l) f.a_.emplace_back(amplitude_from_profile(g[l], l));
  f.g_ = std::move(g);
  return f;
}

EquivariantFunction EquivariantFunction::from_amplitudes(int n, std::vector<RadialFunction> a) {
  if (n < 0) throw InvalidRepIndex("n must be nonnegative");
  if (int(a.size()) != n + 1) throw InvalidArgument("need n + 1 amplitudes");
  EquivariantFunction f;
  f.n_ = n;
  f.q_ = q_values(n);
  f.a_ = std::move(a);
  return f;
}

EquivariantFunction EquivariantFunction::from_diagonal(int n, const std::vector<RadialFunction>& d) {
  if (int(d.size()) != n + 1) throw InvalidArgument("need n + 1 diagonal functions");
  auto m = diagonal_to_amplitude_matrix(n);
  std::vector<RadialFunction> a;
  for (int l = 0; l <= n; ++l) a.push_back(combine(d, m[l]));
  return from_amplitudes(n, std::move(a));
}

EquivariantFunction EquivariantFunction::sampled(int n, const GaussRule& rule,
                                                 const std::vector<std::vector<double>>& values,
                                                 int smoothness) {
  if (int(values.size()) != n + 1) throw InvalidArgument("need n + 1 amplitude rows");
  std::vector<RadialFunction> a;
  for (const auto& v : values) {
    if (v.size() != rule.x.size()) throw InvalidArgument("amplitude row does not match the rule");
    a.emplace_back(EvenSpline(rule.x, v), smoothness);
  }
  EquivariantFunction f = from_amplitudes(n, std::move(a));
  f.rule_ = rule;
  f.rule_values_ = values;
  return f;
}

bool EquivariantFunction::is_closed_form() const {
  return std::all_of(a_.begin(), a_.end(), [](const RadialFunction& f) { return f.is_closed_form(); });
}

std::vector<double> EquivariantFunction::amplitude_values(double r) const {
  std::vector<double> v(n_ + 1);
  for (int l = 0; l <= n_; ++l) v[l] = a_[l](r);
  return v;
}

std::vector<double> EquivariantFunction::diagonal_values(double r) const {
  const auto& q = q_;
  auto a = amplitude_values(r);
  std::vector<double> f(n_ + 1, 0.0);
  for (int l = 0; l <= n_; ++l)
    for (int j = 0; j <= n_; ++j) f[j] += q[l][j] * a[l];
  return f;
}

std::vector<RadialFunction> EquivariantFunction::diagonal() const {
  const auto& q = q_;
  std::vector<RadialFunction> d;
  for (int j = 0; j <= n_; ++j) {
    std::vector<double> w(n_ + 1);
    for (int l = 0; l <= n_; ++l) w[l] = q[l][j];
    d.push_back(combine(a_, w));
  }
  return d;
}

EndMatrix EquivariantFunction::operator()(const C2& z) const {
  const double r = norm(z);
  auto f = diagonal_values(r);
  EndMatrix d = EndMatrix::Zero(n_ + 1, n_ + 1);
  for (int j = 0; j <= n_; ++j) d(j, j) = f[j];
  if (r == 0) return d;
  const EndMatrix t = rep_matrix(sphere_element({z[0] / r, z[1] / r}), {n_, n_});
  return t * d * t.adjoint();
}

EquivariantFunction EquivariantFunction::operator+(const EquivariantFunction& o) const {
  if (o.n_ != n_) throw InvalidArgument("adding functions of different n");
  std::vector<RadialFunction> a;
  for (int l = 0; l <= n_; ++l) a.push_back(combine({a_[l], o.a_[l]}, {1.0, 1.0}));
  EquivariantFunction r = from_amplitudes(n_, std::move(a));
  if (g_ && o.g_) {
    std::vector<ClosedForm> g;
    for (int l = 0; l <= n_; ++l) g.push_back((*g_)[l] + (*o.g_)[l]);
    r.g_ = std::move(g);
  }
  return r;
}

EquivariantFunction EquivariantFunction::operator*(double s) const {
  std::vector<RadialFunction> a;
  for (int l = 0; l <= n_; ++l) a.push_back(combine({a_[l]}, {s}));
  EquivariantFunction r = from_amplitudes(n_, std::move(a));
  if (g_) {
    std::vector<ClosedForm> g;
    for (const auto& p : *g_) g.push_back(p * s);
    r.g_ = std::move(g);
  }
  if (rule_) {
    r.rule_ = rule_;
    r.rule_values_ = rule_values_;
    for (auto& row : r.rule_values_)
      for (auto& v : row) v *= s;
  }
  return r;
}

double EquivariantFunction::tail_radius(double tol, int extra_power) const {
  double R = 1.0;
  for (const auto& a : a_) R = std::max(R, a.tail_radius(tol, extra_power));
  return R;
}

}  // namespace gelfand
