#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "gelfand/equivariant.hpp"
#include "gelfand/plane.hpp"
#include "gelfand/radial.hpp"
#include "gelfand/su2_reps.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// Ray data sampled on a xi grid, interpolated by a barycentric rational.
class SampledRay {
 public:
  SampledRay() = default;
  SampledRay(std::vector<double> xi, std::vector<double> values);
  double operator()(double xi) const;
  const std::vector<double>& xi() const { return xi_; }
  const std::vector<double>& values() const { return v_; }

 private:
  std::vector<double> xi_, v_;
  std::shared_ptr<const std::function<double(double)>> interp_;
};

// Restriction xi -> g(xi, t xi) of a two-variable closed form.
struct PlaneRay {
  std::shared_ptr<const PlaneClosedForm> g;
  double t = 0;
};

// One ray g_j(xi), xi >= 0.
class RayData {
 public:
  RayData() : v_(ClosedForm{}) {}
  RayData(ClosedForm c) : v_(std::move(c)) {}  // NOLINT
  RayData(SampledRay s) : v_(std::move(s)) {}  // NOLINT
  RayData(PlaneRay p) : v_(std::move(p)) {}    // NOLINT
  double operator()(double xi) const;
  // Exact k-th derivative; sampled rays have none and throw InsufficientResolution.
  double derivative(double xi, int k) const;
  bool is_sampled() const { return std::holds_alternative<SampledRay>(v_); }
  const SampledRay& sampled() const { return std::get<SampledRay>(v_); }

 private:
  std::variant<ClosedForm, SampledRay, PlaneRay> v_;
};

// G_n F restricted to the n+1 rays: rays[j](xi) = G_n F(xi, t_j xi).
struct SpectralFunction {
  int n = 0;
  std::vector<RayData> rays;

  static SpectralFunction from_plane(const PlaneClosedForm& g, int n);

  double operator()(int j, double xi) const { return rays.at(j)(xi); }
  // max_j |g_j(0) - g_0(0)|; zero for consistent data.
  double tip_mismatch() const;
};

struct TransformOptions {
  double tolerance = 1e-12;    // relative agreement of successive radial refinements
  double truncation = 1e-14;   // profile tail cut
  int max_panels = 2048;
};

// Fhat(r b) for an equivariant F.  The sphere integral is reduced by the
// torus invariance of the diagonal to
//   int_0^1 D_lj(u) J0(x sqrt(1-u)) du,  D_lj(u) = Q^l(sqrt u, sqrt(1-u))_jj,
// and the radial integral is composite Gauss-Legendre, refined until stable.
// The result is diagonal by construction.
EndMatrix fourier_on_ray(const EquivariantFunction& f, double r, const TransformOptions& opt = {});
// The diagonal only, for several radii at once.
std::vector<std::vector<double>> fourier_diagonals(const EquivariantFunction& f,
                                                   const std::vector<double>& r,
                                                   const TransformOptions& opt = {});

// Generic route for any End(V_n)-valued field: radial panels times a full
// isotropic S^3 rule, no symmetry assumed.  fourier_on_ray_full returns the
// whole matrix; fourier_on_ray throws EquivarianceViolation when the
// off-diagonal mass exceeds 1e-6 max(1, |Fhat|).
struct FieldOptions {
  int radial_panels = 0;  // 0: chosen from the support radius
  int sphere_order = 0;   // 0: chosen from r times the radius
};
EndMatrix fourier_on_ray_full(const MatrixField& f, double r, const FieldOptions& opt = {});
EndMatrix fourier_on_ray(const MatrixField& f, double r, const FieldOptions& opt = {});
double off_diagonal_mass(const EndMatrix& m);

// g_j(xi) = Fhat(sqrt(xi) b)_jj sampled on xi_list.
SpectralFunction forward_transform(const EquivariantFunction& f, const std::vector<double>& xi_list,
                                   const TransformOptions& opt = {});
// Closed-form transform of profile data: each term c s^a e^{-bs} of g_l maps to
//   c (2 pi)^2 (-1)^l a! xi^l / (4^{l+1} b^{2l+a+2}) e^{-xi/4b} L_a^{(2l+1)}(xi/4b)
// times B^l.  Requires profiles.
SpectralFunction forward_transform_exact(const EquivariantFunction& f);
// Coefficients gamma_l(xi) of B^l in Fhat(sqrt(xi) b), from the profiles.
std::vector<ClosedForm> transform_amplitudes_exact(const EquivariantFunction& f);

// (1/(n+1)) int tr(F(z) Phi_{xi,j}(-z)) dz for all j.  The integrand is
// K-invariant, so it reduces to 2 pi^2 int s^3 tr(F(s b) Phi(-s b)) ds, with
// Phi from its own sphere quadrature.
std::vector<double> trace_transform_oracle_all(const EquivariantFunction& f, double xi,
                                               double tolerance = 1e-8);
double trace_transform_oracle(const EquivariantFunction& f, double xi, int j, double tolerance = 1e-8);

// 2 pi^2 sum_i w_i r_i^3 sum_l A_l(r_i) K_lj(r_i rho) over a radial rule, with
// K_lj the torus-reduced sphere kernel; amp is [l][node].  The building block
// of both the forward and the inverse radial transforms.
std::vector<double> ray_integral(int n, const GaussRule& rule, const std::vector<std::vector<double>>& amp,
                                 double rho);

// L^2 norm: ||F||_2^2 = 2 pi^2 int r^3 sum_j f_j(r)^2 dr.
double l2_norm(const EquivariantFunction& f);
// max_{q <= M} ||(1 + |z|^2)^M Delta_z^q F||_2.
double schwartz_norm(const EquivariantFunction& f, int m);

// f(k, z) = (n+1) tr(tau_{m,n}(k^{-1}) F(z)).
std::function<cdouble(const Mat2&, const C2&)> scalar_lift(const EquivariantFunction& f, int m);

// D_n applied in real space: the symbol Q^1_{B^1}(zeta) with zeta_k -> -2i d/dzbar_k
// and conj(zeta_k) -> -2i d/dz_k, derivatives by Richardson-extrapolated
// central differences of step h.
EndMatrix apply_dn(const std::function<EndMatrix(const C2&)>& f, const C2& z, int n, double h = 1e-3);

}  // namespace gelfand
