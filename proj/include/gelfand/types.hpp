#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace gelfand {

using cdouble = std::complex<double>;
using EndMatrix = Eigen::MatrixXcd;   // basis e_j = sqrt(C(n,j)) z1^j z2^(n-j), j ascending
using Mat2 = Eigen::Matrix2cd;
using C2 = std::array<cdouble, 2>;    // point (z1, z2) of C^2

struct RepIndex {
  int m = 0;
  int n = 0;
};

// Coefficients over X1 = diag(i,-i), X2 = [[0,1],[-1,0]], X3 = [[0,i],[i,0]],
// X4 = iI.
struct AlgebraElement {
  double x1 = 0, x2 = 0, x3 = 0, x4 = 0;
};

inline double norm(const C2& z) { return std::sqrt(std::norm(z[0]) + std::norm(z[1])); }

// The real inner product <z, w> = Re(z1 conj(w1) + z2 conj(w2)) identifying C^2 with R^4.
inline double pairing(const C2& z, const C2& w) {
  return (z[0] * std::conj(w[0]) + z[1] * std::conj(w[1])).real();
}

}  // namespace gelfand
