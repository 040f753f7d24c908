#include "gelfand/su2_reps.hpp"

#include <cmath>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

// Column j of p -> p(Az): m_j(Az) = (a z1 + b z2)^j (c z1 + d z2)^(n-j),
// expanded; entry (i, j) is the coefficient of m_i.
template <class T, class Binom>
void expand_substitution(const T& a, const T& b, const T& c, const T& d, int n, Binom binom,
                         DenseMatrix<T>& out) {
  std::vector<T> pa(n + 1, T(1)), pb(n + 1, T(1)), pc(n + 1, T(1)), pd(n + 1, T(1));
  for (int k = 1; k <= n; ++k) {
    pa[k] = pa[k - 1] * a;
    pb[k] = pb[k - 1] * b;
    pc[k] = pc[k - 1] * c;
    pd[k] = pd[k - 1] * d;
  }
  out = DenseMatrix<T>(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int p = 0; p <= j; ++p) {
      T first = binom(j, p) * pa[p] * pb[j - p];
      for (int q = 0; q <= n - j; ++q)
        out(p + q, j) += first * binom(n - j, q) * pc[q] * pd[n - j - q];
    }
}

double binom_d(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_unitary(const Mat2& k) {
  if (!k.allFinite() || (k * k.adjoint() - Mat2::Identity()).norm() > 1e-12)
    throw InvalidGroupElement("matrix is not unitary to 1e-12");
}

cdouble int_power(cdouble z, int e) {
  if (e < 0) return int_power(std::conj(z), -e);  // |z| = 1
  cdouble r = 1;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

}  // namespace

void validate(const RepIndex& idx) {
  if (idx.n < 0 || (idx.n - idx.m) % 2 != 0)
    throw InvalidRepIndex("(m, n) = (" + std::to_string(idx.m) + ", " + std::to_string(idx.n) +
                          ") requires n >= 0 and n - m even");
}

Mat2 sphere_element(const C2& z) {
  Mat2 k;
  k << std::conj(z[1]), z[0], -std::conj(z[0]), z[1];
  return k;
}

EndMatrix substitution_matrix(const Mat2& a, int n) {
  DenseMatrix<cdouble> t;
  expand_substitution<cdouble>(a(0, 0), a(0, 1), a(1, 0), a(1, 1), n,
                               [](int nn, int k) { return cdouble(binom_d(nn, k)); }, t);
  std::vector<double> s(n + 1);
  for (int j = 0; j <= n; ++j) s[j] = std::sqrt(binom_d(n, j));
  EndMatrix r(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) r(i, j) = t(i, j) * (s[j] / s[i]);
  return r;
}

EndMatrix rep_matrix(const Mat2& k, const RepIndex& idx) {
  validate(idx);
  check_unitary(k);
  EndMatrix r = substitution_matrix(k.adjoint(), idx.n);
  const int e = (idx.n - idx.m) / 2;
  if (e != 0) r *= int_power(k.determinant(), e);
  return r;
}

ExactMatrix rep_matrix_monomial(const DenseMatrix<GaussRational>& k, const RepIndex& idx) {
  validate(idx);
  if (k.rows() != 2 || k.cols() != 2 || !(k * adjoint(k) == ExactMatrix::identity(2)))
    throw InvalidGroupElement("matrix is not exactly unitary");
  ExactMatrix kinv = adjoint(k);
  ExactMatrix t;
  expand_substitution<GaussRational>(kinv(0, 0), kinv(0, 1), kinv(1, 0), kinv(1, 1), idx.n,
                                     [](int nn, int kk) { return GaussRational(Rational(binomial(nn, kk))); },
                                     t);
  GaussRational det = k(0, 0) * k(1, 1) - k(0, 1) * k(1, 0);
  int e = (idx.n - idx.m) / 2;
  GaussRational f = 1;
  GaussRational base = e < 0 ? conj(det) : det;
  for (int i = 0; i < std::abs(e); ++i) f *= base;
  return t.scaled(f);
}

DenseMatrix<GaussRational> algebra_basis(int i) {
  DenseMatrix<GaussRational> x(2, 2);
  const GaussRational I{0, 1};
  switch (i) {
    case 1: x(0, 0) = I; x(1, 1) = -I; break;
    case 2: x(0, 1) = 1; x(1, 0) = -1; break;
    case 3: x(0, 1) = I; x(1, 0) = I; break;
    case 4: x(0, 0) = I; x(1, 1) = I; break;
    default: throw InvalidArgument("algebra basis index must be 1..4");
  }
  return x;
}

// d tau(X) p = -sum_a (X z)_a d_a p on monomials:
//   m_j -> -(x11 j + x22 (n-j)) m_j - x12 j m_{j-1} - x21 (n-j) m_{j+1}.
ExactMatrix dtau_monomial(const DenseMatrix<GaussRational>& x, int n) {
  ExactMatrix r(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    r(j, j) = -(x(0, 0) * j + x(1, 1) * (n - j));
    if (j > 0) r(j - 1, j) = -(x(0, 1) * j);
    if (j < n) r(j + 1, j) = -(x(1, 0) * (n - j));
  }
  return r;
}

EndMatrix dtau(const AlgebraElement& x, int n) {
  const cdouble I{0, 1};
  // su(2) part only; x4 is handled by dtau_center.
  const cdouble x11 = I * x.x1, x22 = -I * x.x1;
  const cdouble x12 = x.x2 + I * x.x3, x21 = -x.x2 + I * x.x3;
  EndMatrix r = EndMatrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    r(j, j) = -(x11 * double(j) + x22 * double(n - j));
    if (j > 0) r(j - 1, j) = -x12 * std::sqrt(double(j) * (n - j + 1));
    if (j < n) r(j + 1, j) = -x21 * std::sqrt(double(j + 1) * (n - j));
  }
  return r;
}

Ladder ladder(int n) {
  Ladder l;
  l.raise = EndMatrix::Zero(n + 1, n + 1);
  l.lower = EndMatrix::Zero(n + 1, n + 1);
  l.weight = EndMatrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    l.weight(j, j) = double(2 * j - n);
    if (j < n) l.raise(j + 1, j) = 2 * std::sqrt(double(j + 1) * (n - j));
    if (j > 0) l.lower(j - 1, j) = 2 * std::sqrt(double(j) * (n - j + 1));
  }
  return l;
}

bool casimir_exact(int n) {
  ExactMatrix sum(n + 1, n + 1);
  for (int i = 1; i <= 3; ++i) {
    ExactMatrix d = dtau_monomial(algebra_basis(i), n);
    sum = sum - d * d;
  }
  return sum == ExactMatrix::identity(n + 1).scaled(GaussRational(n * (n + 2)));
}

bool ladder_exact(int n) {
  const GaussRational I{0, 1};
  ExactMatrix x2 = algebra_basis(2), x3 = algebra_basis(3);
  ExactMatrix raise = dtau_monomial(x2 + x3.scaled(I), n);
  ExactMatrix lower = dtau_monomial(x2 - x3.scaled(I), n).scaled(GaussRational(-1));
  // Normalized entry (i, j) is T(i, j) sqrt(C(n,j) / C(n,i)); compare squares
  // and require a nonnegative real entry so the sign is pinned too.
  auto normalized_is = [&](const ExactMatrix& t, int i, int j, const Rational& square) {
    const GaussRational& v = t(i, j);
    if (v.im != 0 || v.re < 0) return false;
    return v.re * v.re * Rational(binomial(n, j)) / Rational(binomial(n, i)) == square;
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rational up = (i == j + 1) ? Rational(4 * (j + 1) * (n - j)) : Rational(0);
      Rational down = (i == j - 1) ? Rational(4 * j * (n - j + 1)) : Rational(0);
      if (!normalized_is(raise, i, j, up) || !normalized_is(lower, i, j, down)) return false;
    }
  return true;
}

Mat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
  double r = std::sqrt(a * a + b * b + c * c + d * d);
  return sphere_element({cdouble(a / r, b / r), cdouble(c / r, d / r)});
}

Mat2 random_u2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 2 * M_PI);
  return std::polar(1.0, u(rng)) * random_su2(rng);
}

C2 random_point(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g;
  return {cdouble(g(rng), g(rng)) * scale, cdouble(g(rng), g(rng)) * scale};
}

}  // namespace gelfand
