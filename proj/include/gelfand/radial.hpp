#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "gelfand/quadrature.hpp"

namespace gelfand {

// sum_i c_i x^{a_i} e^{-b_i x}, a_i >= 0: profile in s = |z|^2 (or in xi on
// the Fourier side).  Closed under differentiation.
struct ClosedForm {
  struct Term {
    double c;
    int a;
    double b;
  };
  std::vector<Term> terms;

  double operator()(double x) const;
  double derivative(double x, int k) const;
  ClosedForm derivative() const;
  bool is_zero() const;
  void simplify();
  ClosedForm operator+(const ClosedForm& o) const;
  ClosedForm operator*(double s) const;
  ClosedForm operator*(const ClosedForm& o) const;
};

// sum_i c_i r^{a_i} e^{-b_i r^2} with integer a_i of any sign: what radial
// amplitudes and their Laplacians look like in the r variable.
struct RadialExpr {
  struct Term {
    double c;
    int a;
    double b;
  };
  std::vector<Term> terms;

  double operator()(double r) const;  // r = 0 through the Laurent-Taylor limit
  RadialExpr derivative() const;
  RadialExpr times_power(int p) const;
  RadialExpr operator+(const RadialExpr& o) const;
  RadialExpr operator*(double s) const;
  void simplify();
  bool integrable() const;  // every term decays
  // Radius beyond which |r^extra * term| <= tol * its peak, for every term.
  double tail_radius(double tol, int extra_power) const;
};

// Natural cubic spline through the mirrored data (-r_i, f_i), (r_i, f_i) so
// the interpolant is even and smooth through r = 0.  Twice differentiable.
class EvenSpline {
 public:
  EvenSpline() = default;
  EvenSpline(std::vector<double> r, std::vector<double> f);
  double value(double r) const { return eval(r, 0); }
  double derivative(double r, int k) const { return eval(r, k); }
  const std::vector<double>& nodes() const { return r_; }
  const std::vector<double>& values() const { return f_; }

 private:
  double eval(double r, int k) const;
  std::vector<double> r_, f_;   // original positive nodes
  std::vector<double> x_, y_, m_;  // mirrored nodes and second derivatives
};

// One radial amplitude: closed form in r or a sampled even spline.
class RadialFunction {
 public:
  RadialFunction() : RadialFunction(RadialExpr{}) {}
  RadialFunction(RadialExpr e) : v_(std::move(e)) {}  // NOLINT
  RadialFunction(EvenSpline s, int smoothness = 2) : v_(Sampled{std::move(s), smoothness}) {}

  double operator()(double r) const;
  // k-th derivative; Sampled supports k <= smoothness and throws InvalidProfile beyond.
  double derivative(double r, int k) const;
  bool is_closed_form() const { return std::holds_alternative<RadialExpr>(v_); }
  const RadialExpr& expr() const { return std::get<RadialExpr>(v_); }
  const EvenSpline& spline() const { return std::get<Sampled>(v_).spline; }
  int smoothness() const;  // derivatives available (large for closed form)
  double tail_radius(double tol, int extra_power) const;
  bool integrable() const;

 private:
  struct Sampled {
    EvenSpline spline;
    int smoothness;
  };
  std::variant<RadialExpr, Sampled> v_;
};

// Profile g(s) in s = |z|^2 multiplied by r^{2l}: the amplitude r^{2l} g(r^2).
RadialExpr amplitude_from_profile(const ClosedForm& g, int l);

}  // namespace gelfand
