#include "gelfand/radial.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gelfand/errors.hpp"

namespace gelfand {

// ---- ClosedForm ------------------------------------------------------------

double ClosedForm::operator()(double x) const {
  double s = 0;
  for (const auto& t : terms) s += t.c * std::pow(x, t.a) * std::exp(-t.b * x);
  return s;
}

ClosedForm ClosedForm::derivative() const {
  ClosedForm d;
  for (const auto& t : terms) {
    if (t.a > 0) d.terms.push_back({t.c * t.a, t.a - 1, t.b});
    if (t.b != 0) d.terms.push_back({-t.c * t.b, t.a, t.b});
  }
  d.simplify();
  return d;
}

double ClosedForm::derivative(double x, int k) const {
  ClosedForm d = *this;
  for (int i = 0; i < k; ++i) d = d.derivative();
  return d(x);
}

void ClosedForm::simplify() {
  std::map<std::pair<int, double>, double> acc;
  for (const auto& t : terms) acc[{t.a, t.b}] += t.c;
  terms.clear();
  for (const auto& [k, c] : acc)
    if (c != 0) terms.push_back({c, k.first, k.second});
}

bool ClosedForm::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.c == 0; });
}

ClosedForm ClosedForm::operator+(const ClosedForm& o) const {
  ClosedForm r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  r.simplify();
  return r;
}

ClosedForm ClosedForm::operator*(double s) const {
  ClosedForm r = *this;
  for (auto& t : r.terms) t.c *= s;
  r.simplify();
  return r;
}

ClosedForm ClosedForm::operator*(const ClosedForm& o) const {
  ClosedForm r;
  for (const auto& x : terms)
    for (const auto& y : o.terms) r.terms.push_back({x.c * y.c, x.a + y.a, x.b + y.b});
  r.simplify();
  return r;
}

// ---- RadialExpr --------------------------------------------------------------

double RadialExpr::operator()(double r) const {
  const bool singular = std::any_of(terms.begin(), terms.end(), [](const Term& t) { return t.a < 0; });
  if (!singular || r >= 1e-2) {
    double s = 0;
    for (const auto& t : terms) s += t.c * std::pow(r, t.a) * std::exp(-t.b * r * r);
    return s;
  }
  // Near 0 the negative powers cancel; sum the regular part of the Laurent
  // expansion instead of the individual terms.
  std::map<int, double> coeff;
  for (const auto& t : terms) {
    double c = t.c;
    for (int k = 0; k <= 14; ++k) {
      coeff[t.a + 2 * k] += c;
      c *= -t.b / (k + 1);
    }
  }
  double s = 0;
  for (const auto& [p, c] : coeff)
    if (p >= 0) s += c * std::pow(r, p);
  return s;
}

RadialExpr RadialExpr::derivative() const {
  RadialExpr d;
  for (const auto& t : terms) {
    if (t.a != 0) d.terms.push_back({t.c * t.a, t.a - 1, t.b});
    if (t.b != 0) d.terms.push_back({-2 * t.c * t.b, t.a + 1, t.b});
  }
  d.simplify();
  return d;
}

RadialExpr RadialExpr::times_power(int p) const {
  RadialExpr r = *this;
  for (auto& t : r.terms) t.a += p;
  return r;
}

RadialExpr RadialExpr::operator+(const RadialExpr& o) const {
  RadialExpr r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  r.simplify();
  return r;
}

RadialExpr RadialExpr::operator*(double s) const {
  RadialExpr r = *this;
  for (auto& t : r.terms) t.c *= s;
  r.simplify();
  return r;
}

void RadialExpr::simplify() {
  std::map<std::pair<int, double>, double> acc;
  double scale = 0;
  for (const auto& t : terms) {
    acc[{t.a, t.b}] += t.c;
    scale = std::max(scale, std::abs(t.c));
  }
  terms.clear();
  for (const auto& [k, c] : acc)
    if (std::abs(c) > 1e-15 * scale) terms.push_back({c, k.first, k.second});
}

bool RadialExpr::integrable() const {
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.b > 0 || t.c == 0; });
}

double RadialExpr::tail_radius(double tol, int extra_power) const {
  double R = 1.0;
  const double log_tol = std::log(tol);
  for (const auto& t : terms) {
    if (t.c == 0) continue;
    if (t.b <= 0) throw InvalidProfile("profile term does not decay");
    const double p = std::max(0, t.a + extra_power);
    const double peak = std::sqrt(p / (2 * t.b));
    auto logf = [&](double r) { return (p > 0 ? p * std::log(r) : 0.0) - t.b * r * r; };
    const double ref = peak > 0 ? logf(peak) : 0.0;
    double lo = std::max(peak, 1e-3), hi = lo + 1;
    while (logf(hi) - ref > log_tol) hi *= 2;
    for (int it = 0; it < 100; ++it) {
      double mid = 0.5 * (lo + hi);
      (logf(mid) - ref > log_tol ? lo : hi) = mid;
    }
    R = std::max(R, hi);
  }
  return R;
}

RadialExpr amplitude_from_profile(const ClosedForm& g, int l) {
  RadialExpr e;
  for (const auto& t : g.terms) e.terms.push_back({t.c, 2 * t.a + 2 * l, t.b});
  e.simplify();
  return e;
}

// ---- EvenSpline --------------------------------------------------------------

EvenSpline::EvenSpline(std::vector<double> r, std::vector<double> f) : r_(std::move(r)), f_(std::move(f)) {
  if (r_.size() != f_.size() || r_.size() < 2) throw InvalidProfile("spline needs matching data, >= 2 nodes");
  for (std::size_t i = 1; i < r_.size(); ++i)
    if (!(r_[i] > r_[i - 1])) throw InvalidProfile("spline nodes must increase");
  if (r_[0] < 0) throw InvalidProfile("radial nodes must be nonnegative");
  const std::size_t n = r_.size();
  const bool has_zero = r_[0] == 0;
  for (std::size_t i = n; i-- > (has_zero ? 1 : 0);) {
    x_.push_back(-r_[i]);
    y_.push_back(f_[i]);
  }
  x_.insert(x_.end(), r_.begin(), r_.end());
  y_.insert(y_.end(), f_.begin(), f_.end());
  // Natural cubic spline: tridiagonal system for the second derivatives.
  const std::size_t m = x_.size();
  m_.assign(m, 0.0);
  std::vector<double> diag(m, 1.0), upper(m, 0.0), rhs(m, 0.0), lower(m, 0.0);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double h0 = x_[i] - x_[i - 1], h1 = x_[i + 1] - x_[i];
    lower[i] = h0 / 6;
    diag[i] = (h0 + h1) / 3;
    upper[i] = h1 / 6;
    rhs[i] = (y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0;
  }
  for (std::size_t i = 1; i < m; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_[m - 1] = rhs[m - 1] / diag[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
}

double EvenSpline::eval(double r, int k) const {
  const double x = std::abs(r);
  if (x > x_.back()) return 0.0;  // sampled data are truncated at the last node
  std::size_t i = std::upper_bound(x_.begin(), x_.end(), r) - x_.begin();
  i = std::clamp<std::size_t>(i, 1, x_.size() - 1);
  const double h = x_[i] - x_[i - 1];
  const double a = (x_[i] - r) / h, b = (r - x_[i - 1]) / h;
  switch (k) {
    case 0:
      return a * y_[i - 1] + b * y_[i] + ((a * a * a - a) * m_[i - 1] + (b * b * b - b) * m_[i]) * h * h / 6;
    case 1:
      return (y_[i] - y_[i - 1]) / h - (3 * a * a - 1) / 6 * h * m_[i - 1] + (3 * b * b - 1) / 6 * h * m_[i];
    case 2:
      return a * m_[i - 1] + b * m_[i];
    default:
      throw InvalidProfile("spline has only two derivatives");
  }
}

// ---- RadialFunction ----------------------------------------------------------

double RadialFunction::operator()(double r) const {
  if (auto e = std::get_if<RadialExpr>(&v_)) return (*e)(r);
  return std::get<Sampled>(v_).spline.value(r);
}

double RadialFunction::derivative(double r, int k) const {
  if (auto e = std::get_if<RadialExpr>(&v_)) {
    RadialExpr d = *e;
    for (int i = 0; i < k; ++i) d = d.derivative();
    return d(r);
  }
  const auto& s = std::get<Sampled>(v_);
  if (k > s.smoothness) throw InvalidProfile("sampled profile is not smooth enough for this derivative");
  return s.spline.derivative(r, k);
}

int RadialFunction::smoothness() const {
  if (is_closed_form()) return 1 << 20;
  return std::get<Sampled>(v_).smoothness;
}

double RadialFunction::tail_radius(double tol, int extra_power) const {
  if (auto e = std::get_if<RadialExpr>(&v_)) return e->tail_radius(tol, extra_power);
  return std::get<Sampled>(v_).spline.nodes().back();
}

bool RadialFunction::integrable() const {
  if (auto e = std::get_if<RadialExpr>(&v_)) return e->integrable();
  return true;
}

}  // namespace gelfand
