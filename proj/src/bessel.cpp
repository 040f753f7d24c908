#include "gelfand/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

double j1_series(double x) {
  const double h = 0.5 * x, h2 = h * h;
  double term = h, sum = h;
  for (int k = 1; k < 200; ++k) {
    term *= -h2 / (double(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

// Backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from far above the
// turning point, normalized with J_0 + 2 sum J_{2k} = 1.
double j1_miller(double x) {
  const int start = 2 * (int(x) + 30);
  double jp1 = 0, j = 1e-300, j1 = 0, norm = 0;
  for (int k = start; k >= 1; --k) {
    double jm1 = 2.0 * k / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {  // rescale to avoid overflow
      j *= 1e-250;
      jp1 *= 1e-250;
      j1 *= 1e-250;
      norm *= 1e-250;
    }
    // now j = J_{k-1}
    if (k - 1 == 1) j1 = j;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2 * j;
  }
  norm += j;  // J_0
  return j1 / norm;
}

double j1_asymptotic(double x) {
  // Hankel: J_1 = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - 3 pi / 4, mu = 4.
  const double mu = 4.0, z8 = 8.0 * x;
  double p = 1, q = 0, term = 1;
  for (int k = 1; k < 60; ++k) {
    term *= (mu - double(2 * k - 1) * (2 * k - 1)) / (k * z8);
    if (k % 2 == 1)
      q += (k % 4 == 1 ? 1 : -1) * term;
    else
      p += (k % 4 == 2 ? -1 : 1) * term;
    if (std::abs(term) < 1e-17) break;
  }
  const double chi = x - 0.75 * M_PI;
  return std::sqrt(2.0 / (M_PI * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j1(double x) {
  if (x < 0) return -bessel_j1(-x);
  if (x <= 6) return j1_series(x);
  if (x < 25) return j1_miller(x);
  return j1_asymptotic(x);
}

double phi1(double r) {
  if (!(r >= 0)) throw InvalidArgument("phi1 needs r >= 0");
  if (r < 1e-8) return 1 - r * r / 8;
  return 2 * bessel_j1(r) / r;
}

}  // namespace gelfand
