#include "gelfand/plane.hpp"

#include <cmath>

namespace gelfand {

Poly2 Poly2::constant(double v) {
  Poly2 p;
  if (v != 0) p.c[{0, 0}] = v;
  return p;
}

double Poly2::operator()(double x1, double x2) const {
  double s = 0;
  for (const auto& [e, v] : c) s += v * std::pow(x1, e.first) * std::pow(x2, e.second);
  return s;
}

Poly2 Poly2::derivative(int axis) const {
  Poly2 d;
  for (const auto& [e, v] : c) {
    const int k = axis == 0 ? e.first : e.second;
    if (k == 0) continue;
    const std::pair<int, int> ne = axis == 0 ? std::pair{e.first - 1, e.second} : std::pair{e.first, e.second - 1};
    d.c[ne] += v * k;
  }
  return d;
}

Poly2 Poly2::operator+(const Poly2& o) const {
  Poly2 r = *this;
  for (const auto& [e, v] : o.c) r.c[e] += v;
  return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
  Poly2 r;
  for (const auto& [a, u] : c)
    for (const auto& [b, v] : o.c) r.c[{a.first + b.first, a.second + b.second}] += u * v;
  return r;
}

Poly2 Poly2::operator*(double s) const {
  Poly2 r = *this;
  for (auto& [e, v] : r.c) v *= s;
  return r;
}

int Poly2::degree() const {
  int d = -1;
  for (const auto& [e, v] : c)
    if (v != 0) d = std::max(d, e.first + e.second);
  return d;
}

double PlaneClosedForm::operator()(double x1, double x2) const {
  double s = 0;
  for (const auto& t : terms) s += t.p(x1, x2) * std::exp(t.e(x1, x2));
  return s;
}

PlaneClosedForm PlaneClosedForm::derivative(int axis) const {
  PlaneClosedForm d;
  for (const auto& t : terms) {
    Poly2 p = t.p.derivative(axis) + t.p * t.e.derivative(axis);
    if (p.degree() >= 0) d.terms.push_back({std::move(p), t.e});
  }
  return d;
}

PlaneClosedForm PlaneClosedForm::derivative(int k1, int k2) const {
  PlaneClosedForm d = *this;
  for (int i = 0; i < k1; ++i) d = d.derivative(0);
  for (int i = 0; i < k2; ++i) d = d.derivative(1);
  return d;
}

double PlaneClosedForm::ray_derivative(double t, double x, int k) const {
  // (d/dx)^k g(x, t x) = sum_q C(k,q) t^q d1^{k-q} d2^q g
  double s = 0, binom = 1;
  for (int q = 0; q <= k; ++q) {
    if (q > 0) binom = binom * (k - q + 1) / q;
    s += binom * std::pow(t, q) * derivative(k - q, q)(x, t * x);
  }
  return s;
}

PlaneClosedForm plane_gaussian(const Poly2& poly, double a1, double a2, double q11, double q12, double q22) {
  Poly2 e;
  if (a1 != 0) e.c[{1, 0}] = -a1;
  if (a2 != 0) e.c[{0, 1}] = -a2;
  if (q11 != 0) e.c[{2, 0}] = -q11;
  if (q12 != 0) e.c[{1, 1}] = -q12;
  if (q22 != 0) e.c[{0, 2}] = -q22;
  PlaneClosedForm g;
  g.terms.push_back({poly, e});
  return g;
}

}  // namespace gelfand
