#pragma once

#include <map>
#include <utility>
#include <vector>

namespace gelfand {

// Real polynomial in (x1, x2); key (p, q) is the exponent of x1^p x2^q.
struct Poly2 {
  std::map<std::pair<int, int>, double> c;

  static Poly2 constant(double v);
  double operator()(double x1, double x2) const;
  Poly2 derivative(int axis) const;  // axis 0 -> d/dx1, 1 -> d/dx2
  Poly2 operator+(const Poly2& o) const;
  Poly2 operator*(const Poly2& o) const;
  Poly2 operator*(double s) const;
  int degree() const;
};

// sum_i P_i(x) exp(E_i(x)) with polynomial P_i and exponent E_i of degree <= 2:
// the two-variable counterpart of ClosedForm, closed under differentiation.
struct PlaneClosedForm {
  struct Term {
    Poly2 p;
    Poly2 e;
  };
  std::vector<Term> terms;

  double operator()(double x1, double x2) const;
  PlaneClosedForm derivative(int axis) const;
  PlaneClosedForm derivative(int k1, int k2) const;
  // d^k/dx^k of x -> g(x, t x) at x.
  double ray_derivative(double t, double x, int k) const;
  bool is_zero() const { return terms.empty(); }
};

// Convenience: poly(x1, x2) * exp(-(a1 x1 + a2 x2 + q11 x1^2 + q12 x1 x2 + q22 x2^2)).
PlaneClosedForm plane_gaussian(const Poly2& poly, double a1, double a2, double q11, double q12, double q22);

}  // namespace gelfand
