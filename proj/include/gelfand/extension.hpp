#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "gelfand/exact.hpp"
#include "gelfand/plane.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/transform.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// ---- Newton coefficients along the rays ----------------------------------

// mu_l(xi) = divided difference of s -> g(xi, s) over the nodes xi t_0..xi t_l,
// so that g(xi, t xi) = sum_l mu_l(xi) xi^l prod_{i<l} (t - t_i).
// Divided differences for xi > kSmallXi, Hermite-Genocchi below.
inline constexpr double kSmallXi = 0.1;
double mu_divided(const PlaneClosedForm& g, int n, int l, double xi);
// int over the l-simplex of d2^l g(xi, xi sum_i lambda_i t_i); regular at xi = 0.
double mu_hermite_genocchi(const PlaneClosedForm& g, int n, int l, double xi);
double mu(const PlaneClosedForm& g, int n, int l, double xi);
// [l][i] = mu_l(xi_list[i]), l = 0..n.
std::vector<std::vector<double>> ray_profiles_from_plane(const PlaneClosedForm& g, int n,
                                                         const std::vector<double>& xi_list);

// b[l][k]: coefficient of t^k in prod_{i<l} (t - t_i).
std::vector<std::vector<Integer>> newton_basis_coefficients(int n);

// ---- Inverse transform ---------------------------------------------------

// The two-variable closed form g with G_n F = g on every ray, for F given by
// profiles: g(xi1, xi2) = sum_l gamma_l(xi1) q^l(xi2 / xi1), where gamma_l
// carries the factor xi1^l that makes each term polynomial in xi2.
PlaneClosedForm transform_plane_exact(const EquivariantFunction& f);

struct InverseOptions {
  double fourier_radius = 0;  // 0: where the ray data has decayed to 1e-16
  double space_radius = 0;    // 0: where r^3 |F(r b)| has decayed to space_tolerance of its peak
  double space_tolerance = 1e-11;
  int fourier_panels = 0;     // 0: from both radii
  int space_panels = 0;
};

// The F with G_n F = g on the rays.  On the Fourier side
//   Fhat(zeta) = sum_{k <= l} b_{k,l} Dhat_n(zeta)^k |zeta|^{2(l-k)} mu_l(|zeta|^2);
// in space F(r b) is the (2 pi)^{-4} ray integral of the Fourier amplitudes.
class InverseTransform {
 public:
  InverseTransform(PlaneClosedForm g, int n, const InverseOptions& opt = {});

  int n() const { return n_; }
  const PlaneClosedForm& symbol() const { return g_; }
  double fourier_radius() const { return fourier_radius_; }
  double space_radius() const { return space_radius_; }

  EndMatrix evaluate_fourier(const C2& zeta) const;
  // Diagonal of F(r b).
  std::vector<double> space_diagonal(double r) const;
  EndMatrix evaluate_space(const C2& z) const;
  // F sampled on a composite Gauss rule over [0, space_radius], ready for
  // forward_transform.
  EquivariantFunction sampled() const;

 private:
  PlaneClosedForm g_;
  int n_;
  std::vector<std::vector<double>> b_;
  double fourier_radius_ = 0, space_radius_ = 0;
  int space_panels_ = 0;
  GaussRule fourier_rule_;
  std::vector<std::vector<double>> fourier_amp_;  // [l][node]
};

InverseTransform inverse_transform(const PlaneClosedForm& g, int n, const InverseOptions& opt = {});

// ---- Jets ----------------------------------------------------------------

// Taylor data sum_{p+q <= D} a_{p,q} xi1^p xi2^q / (p! q!), stored per degree
// as x[d][q] = C(d,q) a_{d-q,q}, which is what the ray derivatives see:
//   c_{d,j} = sum_q x[d][q] t_j^q.
struct Jet {
  int degree = 0;
  std::vector<std::vector<double>> x;

  double a(int p, int q) const;
  // d-th derivative along the ray of slope t at 0.
  double ray_derivative(int d, double t) const;
  // Degree-d homogeneous part divided by d!.
  double homogeneous(int d, double x1, double x2) const;
  bool is_zero() const;
};

// a_{p,q} = d1^p d2^q g(0, 0), exactly from the closed form.
Jet jet_of(const PlaneClosedForm& g, int degree);

// c[d][j] = d-th derivative at 0+ of ray j.  Closed-form rays are
// differentiated exactly; sampled rays by comparing polynomial fits of two
// degrees near 0, throwing InsufficientResolution when they disagree or the
// grid has too few points.
std::vector<std::vector<double>> ray_jet(const SpectralFunction& rays, int degree);

// Solve sum_q x_q t_j^q = c_j.  d >= n: x_q = 0 for q > n, square system.
// d < n: the d+1 central rows, with the remaining rows checked (exactly for
// rational input, to tolerance * max(1, max|c|) for floating input);
// InconsistentJetData on failure.  Returns x_0..x_d.
std::vector<Rational> jet_solve(const std::vector<Rational>& c, int d, int n);
std::vector<double> jet_solve(const std::vector<double>& c, int d, int n, double tolerance = 1e-8);
// Row indices used for d < n.
std::vector<int> central_rows(int d, int n);

Jet jet_from_rays(const std::vector<std::vector<double>>& c, int n, double tolerance = 1e-8);

// x_q^2 <= n^{2+d} max_j c_j^2, exactly.
bool cramer_bound_holds(const std::vector<Rational>& x, const std::vector<Rational>& c, int d, int n);
// (t_j^q), rows j, columns q.
RationalMatrix vandermonde(int n);
// Largest |inverse(V)(q, j)| / C(n, q); at most 1 when the cofactor bound holds.
Rational cofactor_ratio(int n);

// ---- Bumps, Borel sums, vanishing extension --------------------------------

// Radial smooth step: 1 for |x| <= plateau, 0 for |x| >= support, built from
// psi(t) = exp(-1/t) as S(t) = psi(t) / (psi(t) + psi(1 - t)).
struct BumpFunction {
  double support = 1.0;
  double plateau = 0.5;

  double operator()(double r) const;  // r = |x|
  double operator()(double x1, double x2) const;
  void validate() const;
};

inline BumpFunction default_eta() { return {0.5, 0.25}; }

struct BorelSchedule {
  int m0 = 8;  // eps_d = 1 for d <= m0
  std::vector<double> eps;   // filled by borel_sum
  std::vector<double> sizes; // A_d where computed, else 0
};

// sup over |alpha| <= m of |d^alpha (phi P_d / d!)|, by spectral
// differentiation on a periodic grid.
double summand_size(const Jet& jet, int d, const BumpFunction& phi, int m);

class BorelSum {
 public:
  BorelSum(Jet jet, BumpFunction phi, BorelSchedule schedule);
  double operator()(double x1, double x2) const;
  const BorelSchedule& schedule() const { return schedule_; }
  const Jet& jet() const { return jet_; }

 private:
  Jet jet_;
  BumpFunction phi_;
  BorelSchedule schedule_;
};

BorelSum borel_sum(const Jet& jet, const BumpFunction& phi, BorelSchedule schedule);

using RayResidual = std::function<double(double)>;

struct VanishingOptions {
  int order = 8;             // residuals must vanish to this order at 0
  double check_radius = 0.2; // sampled at check_radius 2^{-k}, k = 0..10
  double noise_floor = 1e-13;
};

class VanishingExtension {
 public:
  VanishingExtension(int n, std::vector<RayResidual> r, BumpFunction eta);
  double operator()(double x1, double x2) const;

 private:
  int n_;
  std::vector<RayResidual> r_;
  BumpFunction eta_;
};

// Throws OrderViolation when a residual's log-slope near 0 is below
// order + 1/2 while it is clearly above the noise floor.
VanishingExtension vanishing_extend(int n, std::vector<RayResidual> residuals, const BumpFunction& eta,
                                    const VanishingOptions& opt = {});

// ---- Pipeline ------------------------------------------------------------

struct ExtensionOptions {
  int max_degree = 8;
  int m0 = -1;  // -1: equal to max_degree
  BumpFunction phi{};
  BumpFunction eta = default_eta();
  double jet_tolerance = 1e-8;
  std::vector<int> decay_orders{0, 1, 2};
  double decay_radius = 8.0;
  VanishingOptions vanishing{};
};

struct ExtensionReport {
  int max_degree = 0;
  int smoothness_order = 0;  // floor((max_degree - 1) / 2)
  std::vector<int> decay_orders;
  std::vector<double> decay;  // sup (1 + |xi|^2)^M |u| on a disk grid
  double restriction_error = 0;
  std::vector<std::vector<double>> ray_jet;
};

struct SchwartzExtension {
  std::function<double(double, double)> u;
  std::shared_ptr<const BorelSum> h;
  std::shared_ptr<const VanishingExtension> v;
  Jet jet;
  ExtensionReport report;
};

SchwartzExtension schwartz_extend(const SpectralFunction& rays, int n, const ExtensionOptions& opt = {});

// ---- Finite differences --------------------------------------------------

// d1^p d2^q f at (x1, x2) by a tensor 9-point central stencil of step h.
double fd_partial(const std::function<double(double, double)>& f, double x1, double x2, int p, int q,
                  double h = 0.02);
// Weights of the 9-point central stencil (offsets -4..4) for the k-th derivative.
std::vector<double> central_weights(int k);

}  // namespace gelfand
