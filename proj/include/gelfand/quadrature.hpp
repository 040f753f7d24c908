#pragma once

#include <vector>

#include "gelfand/types.hpp"

namespace gelfand {

struct GaussRule {
  std::vector<double> x, w;
};

// n-point Gauss-Legendre on [a, b] (Newton iteration on P_n).
GaussRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

// Composite Gauss-Legendre on [0, R] with equal panels.
GaussRule radial_rule(double R, int panels, int per_panel = 20);

// Product rule for the normalized measure on S^3 in the coordinates
//   zeta1 = sqrt(u) e^{i alpha}, zeta2 = sqrt(1-u) e^{i beta},  d sigma = du d alpha d beta / 4 pi^2
// with Gauss-Legendre in u and trapezoid in the two angles.
struct SphereQuadrature {
  int order = 0;  // exact through bidegree (order, order); 0 for anisotropic rules
  int n_u = 0, n_alpha = 0, n_beta = 0;
  std::vector<C2> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

SphereQuadrature sphere_quadrature(int order);
SphereQuadrature sphere_quadrature(int n_u, int n_alpha, int n_beta);

// Closed-form moment of zeta1^a zeta2^b conj(zeta1)^c conj(zeta2)^d over S^3.
double sphere_moment(int a, int b, int c, int d);

}  // namespace gelfand
