#pragma once

#include <array>
#include <vector>

#include "gelfand/equivariant.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// Uniform tensor grid on [-L, L]^4 in the real coordinates (x1, y1, x2, y2),
// z_a = x_a + i y_a, with `points` nodes per axis.
struct GridSpec {
  int points = 17;
  double half_width = 5.0;
  // A posteriori check: on rho in [0, pi/(4h)] the discrete Fourier sums of
  // the inputs must match their closed-form transforms to verify_tol
  // relative to |Fhat(0)|.
  bool verify = true;
  double verify_tol = 1e-6;
};

// Matrix-valued samples on a grid, stored entrywise.
struct GridFunction {
  int n = 0;
  int points = 0;   // per axis
  double h = 0;     // spacing
  double x0 = 0;    // first coordinate on every axis
  std::vector<std::vector<cdouble>> entries;  // [i * (n+1) + k][flat index]

  std::size_t size() const { return entries.empty() ? 0 : entries[0].size(); }
  std::size_t flat(const std::array<int, 4>& i) const {
    return ((std::size_t(i[0]) * points + i[1]) * points + i[2]) * points + i[3];
  }
  C2 point(const std::array<int, 4>& i) const {
    return {cdouble(x0 + h * i[0], x0 + h * i[1]), cdouble(x0 + h * i[2], x0 + h * i[3])};
  }
  EndMatrix at(const std::array<int, 4>& i) const;
  EndMatrix at(std::size_t flat_index) const;
};

GridFunction sample_on_grid(const EquivariantFunction& f, const GridSpec& spec);

// (F1 * F2)(x) = int F2(x - w) F1(w) dw, with the matrix product in that
// order.  Returned on the full support grid of 2N - 1 nodes per axis over
// [-2L, 2L].  Throws GridResolutionError when the a posteriori check fails.
GridFunction convolve(const EquivariantFunction& f1, const EquivariantFunction& f2, const GridSpec& spec);

// Discrete convolution of two grid functions with the same spacing and size.
GridFunction convolve_grids_fft(const GridFunction& g1, const GridFunction& g2);
// Direct O(N^8) sums; reference kernels for small grids.
GridFunction convolve_grids_direct_serial(const GridFunction& g1, const GridFunction& g2);
GridFunction convolve_grids_direct_omp(const GridFunction& g1, const GridFunction& g2);

// h^4 sum_x G(x) e^{-i rho x2}: the trapezoidal Fourier transform at rho b.
EndMatrix discrete_fourier_on_ray(const GridFunction& g, double rho);

// Smallest size >= m whose only prime factors are 2, 3, 5, 7.
int fft_friendly_size(int m);

}  // namespace gelfand
