#pragma once

#include <vector>

#include "gelfand/equivariant.hpp"
#include "gelfand/quadrature.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

struct SpectrumRay {
  int j;
  int slope;  // t_j = -n + 2j
};

struct SpectrumPoint {
  int n, j;
  double xi;
  double xi2() const { return (-n + 2 * j) * xi; }
};

struct SpectrumPoint4 {
  double xi1, xi2, xi3, xi4;
};

std::vector<SpectrumRay> spectrum_rays(int n);
// (xi, t_j xi, n^2 + 2n, m); throws InvalidRepIndex for (m, n) outside E.
SpectrumPoint4 embed4(int m, int n, double xi, int j);

struct SphericalOptions {
  double tolerance = 1e-10;  // agreement of successive orders
  int max_order = 256;
};

// Phi_{xi,j}(z) = (n+1) int e^{-i sqrt(xi) <z, zeta>} Q^n_{E_jj}(zeta) d sigma(zeta),
// with the order doubled until two successive rules agree.  Points with
// z1 = 0 use a rule that is exact in the first angle.
EndMatrix matrix_spherical(int n, int j, double xi, const C2& z,
                           const SphericalOptions& opt = {});
// All j at once for the same z (one sweep over the nodes).
std::vector<EndMatrix> matrix_spherical_all(int n, double xi, const C2& z,
                                            const SphericalOptions& opt = {});

// D_n applied to Phi_{xi,j} for all j, computed on the symbol side: the
// exact polynomial symbol of D_n inserted under the defining sphere
// integral, (n+1) int e^{-i sqrt(xi) <z, zeta>} Dhat_n(sqrt(xi) zeta) Q^n_{E_jj}(zeta) d sigma.
// Should equal t_j xi Phi_{xi,j}(z).  order = 0 picks the rule from sqrt(xi) |z|.
std::vector<EndMatrix> dn_spherical_symbol_side(int n, double xi, const C2& z, int order = 0);

// tau(k_zeta) e_j for zeta on S^3: the vector whose outer product is Q^n_{E_jj}(zeta).
Eigen::VectorXcd sphere_column(const C2& zeta, int j, int n);

// Diagonal values of (Delta_z F)(r b) with Delta_z = -Delta_{R^4}, from the
// diagonal data f_j(r) = F(r b)_jj.  At r = 0 the even-extension limit is used.
std::vector<double> laplacian_profiles(const EquivariantFunction& f, double r);
// The whole function Delta_z F.  Closed forms stay closed; sampled inputs give
// sampled output with no further derivatives (a second application throws
// InvalidProfile).
EquivariantFunction laplacian(const EquivariantFunction& f);

// Same operator acting on profiles: Delta_z(g(s) Q^l) = -(4 s g'' + 8 (l+1) g') Q^l.
EquivariantFunction laplacian_of_profiles(const EquivariantFunction& f);

}  // namespace gelfand
