#pragma once

#include <random>
#include <vector>

#include "gelfand/equivariant.hpp"
#include "gelfand/plane.hpp"

namespace testing_support {

// Profiles c s^a e^{-b s} with a few terms per isotypic component; decay rates
// kept moderate so grids and radial rules stay small.
inline gelfand::EquivariantFunction random_closed_form(std::mt19937_64& rng, int n, double bmin = 0.6,
                                                       double bmax = 1.2) {
  std::uniform_real_distribution<double> c(-1.0, 1.0), b(bmin, bmax);
  std::uniform_int_distribution<int> a(0, 1);
  std::vector<gelfand::ClosedForm> g;
  for (int l = 0; l <= n; ++l) {
    gelfand::ClosedForm p;
    for (int t = 0; t < 2; ++t) p.terms.push_back({c(rng), a(rng), b(rng)});
    g.push_back(p);
  }
  return gelfand::EquivariantFunction::from_profiles(n, g);
}

inline gelfand::EquivariantFunction gaussian_identity(int n, double b) {
  std::vector<gelfand::ClosedForm> g(n + 1);
  g[0].terms.push_back({1.0, 0, b});
  return gelfand::EquivariantFunction::from_profiles(n, g);
}

// (1 + 0.3 x2 + 0.2 x1 x2 - 0.1 x2^2) exp(-(x1 + 0.3 x2 + 0.5 x1^2 + 0.1 x1 x2 + 0.25 x2^2)):
// no symmetry, decays along every ray x2 = t x1, x1 >= 0.
inline gelfand::PlaneClosedForm test_plane() {
  gelfand::Poly2 p;
  p.c[{0, 0}] = 1.0;
  p.c[{0, 1}] = 0.3;
  p.c[{1, 1}] = 0.2;
  p.c[{0, 2}] = -0.1;
  return gelfand::plane_gaussian(p, 1.0, 0.3, 0.5, 0.1, 0.25);
}

// A global function already in the normal form the jet solver picks: degree
// <= n in x2 and an exponent in x1 only, so every d2^q derivative with q > n
// vanishes at 0 and the rays determine its whole jet.
inline gelfand::PlaneClosedForm normal_form_plane(int n) {
  gelfand::Poly2 p;
  p.c[{0, 0}] = 1.0;
  p.c[{1, 0}] = 0.4;
  const double c[] = {0.3, -0.2, 0.15, -0.1, 0.05};
  for (int q = 1; q <= n && q <= 5; ++q) {
    p.c[{0, q}] += c[q - 1];
    p.c[{1, q}] += 0.5 * c[q - 1];
  }
  return gelfand::plane_gaussian(p, 1.0, 0, 0.5, 0, 0);
}

}  // namespace testing_support
