#include "gelfand/exact.hpp"

#include <cmath>

#include "gelfand/errors.hpp"

namespace gelfand {

GaussRational inverse(const GaussRational& a) {
  Rational d = norm2(a);
  if (d == 0) throw InvalidArgument("division by zero Gaussian rational");
  return {a.re / d, -a.im / d};
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::complex<double> to_complex(const GaussRational& a) {
  return {to_double(a.re), to_double(a.im)};
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw InvalidArgument("non-finite value has no rational form");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // 53 significant bits fit exactly into an int64 after scaling.
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rational r{Integer(scaled)};
  exp -= 53;
  Integer pow2 = Integer(1) << std::abs(exp);
  return exp >= 0 ? r * Rational(pow2) : r / Rational(pow2);
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExactMatrix adjoint(const ExactMatrix& m) {
  ExactMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = conj(m(i, j));
  return r;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw InvalidArgument("inverse of a non-square matrix");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("singular matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    Rational p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace gelfand
