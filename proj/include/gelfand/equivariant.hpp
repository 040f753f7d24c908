#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gelfand/radial.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// F(z) = sum_l g_l(|z|^2) Q^l_{B^l}(z), stored through the amplitudes
// A_l(r) = r^{2l} g_l(r^2) so that F(r b) = sum_l A_l(r) B^l and
// F(z) = tau(k_z') F(|z| b) tau(k_z')^*.
class EquivariantFunction {
 public:
  EquivariantFunction() = default;

  static EquivariantFunction from_profiles(int n, std::vector<ClosedForm> g);
  static EquivariantFunction from_amplitudes(int n, std::vector<RadialFunction> a);
  // From the diagonal values f_j(r) = F(r b)_jj; closed forms stay closed.
  static EquivariantFunction from_diagonal(int n, const std::vector<RadialFunction>& f);
  // Amplitudes sampled at the nodes of a composite Gauss rule on [0, R]; the
  // rule is kept and reused by forward transforms.
  static EquivariantFunction sampled(int n, const GaussRule& rule,
                                     const std::vector<std::vector<double>>& values,
                                     int smoothness = 2);

  int n() const { return n_; }
  const std::vector<RadialFunction>& amplitudes() const { return a_; }
  const std::optional<std::vector<ClosedForm>>& profiles() const { return g_; }
  const std::optional<GaussRule>& own_rule() const { return rule_; }
  const std::vector<std::vector<double>>& rule_values() const { return rule_values_; }
  bool is_closed_form() const;

  std::vector<double> amplitude_values(double r) const;
  // f_j(r) for j = 0..n.
  std::vector<double> diagonal_values(double r) const;
  std::vector<RadialFunction> diagonal() const;

  EndMatrix operator()(const C2& z) const;

  EquivariantFunction operator+(const EquivariantFunction& o) const;
  EquivariantFunction operator*(double s) const;

  // Radius where every amplitude times r^extra has decayed to tol of its peak.
  double tail_radius(double tol = 1e-14, int extra_power = 3) const;

 private:
  int n_ = 0;
  std::vector<RadialFunction> a_;
  std::optional<std::vector<ClosedForm>> g_;
  std::optional<GaussRule> rule_;
  std::vector<std::vector<double>> rule_values_;  // [l][node]
  std::vector<std::vector<double>> q_;            // q^l(t_j), [l][j]
};

// A general End(V_n)-valued function on C^2, e.g. to probe equivariance.
struct MatrixField {
  int n = 0;
  std::function<EndMatrix(const C2&)> f;
  double radius = 8.0;  // essential support
};

// Linear map f_j -> A_l between diagonal values and amplitudes:
// A_l = sum_j f_j q^l(t_j) / ||q^l||^2.
std::vector<std::vector<double>> diagonal_to_amplitude_matrix(int n);

}  // namespace gelfand
