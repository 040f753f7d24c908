#include "gelfand/endvn.hpp"

#include <cmath>

#include "gelfand/errors.hpp"
#include "gelfand/su2_reps.hpp"

namespace gelfand {

Rational MonicPolynomial::operator()(const Rational& t) const {
  Rational r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + *it;
  return r;
}

double MonicPolynomial::operator()(double t) const {
  double r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * t + to_double(*it);
  return r;
}

std::vector<int> ray_slopes(int n) {
  if (n < 0) throw InvalidRepIndex("n must be nonnegative");
  std::vector<int> t(n + 1);
  for (int j = 0; j <= n; ++j) t[j] = -n + 2 * j;
  return t;
}

EndMatrix weight_matrix(int n) {
  EndMatrix w = EndMatrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) w(j, j) = double(2 * j - n);
  return w;
}

std::vector<MonicPolynomial> discrete_q_polys(int n) {
  const auto nodes = ray_slopes(n);
  auto inner = [&](const MonicPolynomial& p, const MonicPolynomial& q, int tpow) {
    Rational s = 0;
    for (int t : nodes) {
      Rational tr(t), w = 1;
      for (int i = 0; i < tpow; ++i) w *= tr;
      s += p(tr) * q(tr) * w;
    }
    return s;
  };
  std::vector<MonicPolynomial> q;
  q.push_back({{Rational(1)}});
  for (int l = 0; l < n; ++l) {
    const MonicPolynomial& cur = q[l];
    Rational norm_cur = inner(cur, cur, 0);
    Rational alpha = inner(cur, cur, 1) / norm_cur;
    MonicPolynomial next;
    next.coeffs.assign(l + 2, Rational(0));
    for (int i = 0; i <= l; ++i) {
      next.coeffs[i + 1] += cur.coeffs[i];
      next.coeffs[i] -= alpha * cur.coeffs[i];
    }
    if (l > 0) {
      Rational beta = norm_cur / inner(q[l - 1], q[l - 1], 0);
      for (int i = 0; i < l; ++i) next.coeffs[i] -= beta * q[l - 1].coeffs[i];
    }
    q.push_back(std::move(next));
  }
  return q;
}

std::vector<Rational> b_diagonal(int n, int l) {
  if (l < 0 || l > n) throw InvalidIsotypicIndex("l = " + std::to_string(l) + " outside 0..n");
  const auto q = discrete_q_polys(n)[l];
  std::vector<Rational> d;
  for (int t : ray_slopes(n)) d.push_back(q(Rational(t)));
  return d;
}

EndMatrix b_matrix(int n, int l) {
  const auto d = b_diagonal(n, l);
  EndMatrix b = EndMatrix::Zero(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) b(j, j) = to_double(d[j]);
  return b;
}

namespace {

template <class Mat, class Scalar>
Mat casimir_filter(const Mat& m, int l, int n, const std::array<Mat, 3>& gens,
                   Scalar (*from_int)(long long)) {
  if (l < 0 || l > n) throw InvalidIsotypicIndex("l = " + std::to_string(l) + " outside 0..n");
  Mat cur = m;
  // Largest eigenvalues first keeps intermediate growth small.
  for (int k = n; k >= 0; --k) {
    if (k == l) continue;
    Mat c = cur * Scalar(from_int(0));
    for (const Mat& a : gens) {
      Mat inner = a * cur - cur * a;
      c = c - (a * inner - inner * a);
    }
    const long long lk = 4LL * k * (k + 1), ll = 4LL * l * (l + 1);
    cur = (c - cur * from_int(lk)) * (Scalar(1) / from_int(ll - lk));
  }
  return cur;
}

}  // namespace

EndMatrix isotypic_project(const EndMatrix& m, int l, int n) {
  if (m.rows() != n + 1 || m.cols() != n + 1) throw InvalidArgument("matrix size does not match n");
  std::array<EndMatrix, 3> gens = {dtau({1, 0, 0, 0}, n), dtau({0, 1, 0, 0}, n),
                                   dtau({0, 0, 1, 0}, n)};
  return casimir_filter<EndMatrix, cdouble>(m, l, n, gens,
                                            [](long long v) { return cdouble(double(v)); });
}

namespace {
// Thin wrapper so the exact matrix type supports the operations used by the
// filter template.
struct ExactOps {
  ExactMatrix v;
  ExactOps operator*(const ExactOps& o) const { return {v * o.v}; }
  ExactOps operator-(const ExactOps& o) const { return {v - o.v}; }
  ExactOps operator*(const GaussRational& s) const { return {v.scaled(s)}; }
};
}  // namespace

ExactMatrix isotypic_project_exact(const ExactMatrix& m, int l, int n) {
  if (m.rows() != n + 1 || m.cols() != n + 1) throw InvalidArgument("matrix size does not match n");
  std::array<ExactOps, 3> gens = {ExactOps{dtau_monomial(algebra_basis(1), n)},
                                  ExactOps{dtau_monomial(algebra_basis(2), n)},
                                  ExactOps{dtau_monomial(algebra_basis(3), n)}};
  return casimir_filter<ExactOps, GaussRational>(
             ExactOps{m}, l, n, gens,
             [](long long v) { return GaussRational(Rational(Integer(v))); })
      .v;
}

int interpolation_degree(const std::vector<Rational>& b) {
  const int n = int(b.size()) - 1;
  const auto t = ray_slopes(n);
  std::vector<Rational> dd = b;
  int degree = -1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0)
      for (int i = n; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(t[i] - t[i - k]);
    if (dd[k] != 0) degree = k;
  }
  return degree;
}

namespace {

// Monomial-frame matrix of tau(k_z) scaled by |z|^n: p -> p(z2 w1 - z1 w2,
// zb1 w1 + zb2 w2), entries polynomial in (z, zb).
PolyMatrix tau_polynomial(int n) {
  const Poly4 a = Poly4::var(1), b = Poly4::var(0).scaled(-1), c = Poly4::var(2), d = Poly4::var(3);
  PolyMatrix t(n + 1, n + 1);
  for (int j = 0; j <= n; ++j)
    for (int p = 0; p <= j; ++p) {
      Poly4 first = (a.power(p) * b.power(j - p)).scaled(Rational(binomial(j, p)));
      for (int q = 0; q <= n - j; ++q)
        t(p + q, j) += first * (c.power(q) * d.power(n - j - q)).scaled(Rational(binomial(n - j, q)));
    }
  return t;
}

}  // namespace

EquivariantPolynomial q_equivariant_poly(const std::vector<Rational>& b, int d, int n) {
  if (int(b.size()) != n + 1) throw InvalidArgument("diagonal length must be n + 1");
  if (d < 0) throw InvalidArgument("degree must be nonnegative");
  PolyMatrix t = tau_polynomial(n);
  PolyMatrix tb = t;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) tb(i, j) = t(i, j).scaled(b[j] * Rational(binomial(n, j)));
  EquivariantPolynomial q{n, d, PolyMatrix(n + 1, n + 1)};
  const Poly4 lift = Poly4::norm2().power(std::max(0, d - n));
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) {
      Poly4 entry;
      for (int j = 0; j <= n; ++j) entry += tb(i, j) * t(k, j).conjugate();
      if (d >= n) {
        q.r(i, k) = entry * lift;
      } else {
        auto divided = entry.divide_by_norm2(n - d);
        if (!divided)
          throw NotPolynomial("|z|^" + std::to_string(2 * d) +
                              " tau B tau^* is not a polynomial for this B");
        q.r(i, k) = std::move(*divided);
      }
    }
  return q;
}

EndMatrix EquivariantPolynomial::evaluate(const C2& z) const {
  EndMatrix m(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k)
      m(i, k) = r(i, k).evaluate(z) /
                std::sqrt(to_double(Rational(binomial(n, i) * binomial(n, k))));
  return m;
}

Poly4 EquivariantPolynomial::trace() const {
  Poly4 tr;
  for (int i = 0; i <= n; ++i) tr += r(i, i).scaled(Rational(1) / Rational(binomial(n, i)));
  return tr;
}

PolyMatrix EquivariantPolynomial::similar_rational() const {
  PolyMatrix m = r;
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k) m(i, k) = r(i, k).scaled(Rational(1) / Rational(binomial(n, k)));
  return m;
}

EquivariantPolynomial dn_symbol(int n) {
  std::vector<Rational> weights;
  for (int t : ray_slopes(n)) weights.emplace_back(t);
  return q_equivariant_poly(weights, 1, n);
}

std::vector<Rational> dn_characteristic(int n) {
  const PolyMatrix m = dn_symbol(n).similar_rational();
  const Poly4 s = Poly4::norm2();
  // Power sums p_k = tr M^k, then elementary symmetric e_k by Newton.
  std::vector<Poly4> p(n + 2);
  PolyMatrix power = m;
  for (int k = 1; k <= n + 1; ++k) {
    if (k > 1) power = power * m;
    Poly4 tr;
    for (int i = 0; i <= n; ++i) tr += power(i, i);
    p[k] = tr;
  }
  std::vector<Poly4> e(n + 2);
  e[0] = Poly4(GaussRational(1));
  for (int k = 1; k <= n + 1; ++k) {
    Poly4 acc;
    for (int i = 1; i <= k; ++i) {
      Poly4 term = e[k - i] * p[i];
      acc += (i % 2 == 1) ? term : term.scaled(-1);
    }
    e[k] = acc.scaled(Rational(1, k));
  }
  // Expected e_k = e_k(t_0..t_n) s^k.
  const auto t = ray_slopes(n);
  std::vector<Rational> esym(n + 2, Rational(0));
  esym[0] = 1;
  for (int tj : t)
    for (int k = n + 1; k >= 1; --k) esym[k] += esym[k - 1] * tj;
  std::vector<Rational> c(n + 1);
  for (int k = 1; k <= n + 1; ++k) {
    if (!(e[k] == s.power(k).scaled(esym[k])))
      throw Error("characteristic coefficient e_" + std::to_string(k) +
                  " is not a multiple of |zeta|^" + std::to_string(2 * k));
  }
  // lambda^{n+1} + sum_k c_k lambda^k with c_k = (-1)^{n+1-k} e_{n+1-k}.
  for (int k = 0; k <= n; ++k) {
    int i = n + 1 - k;
    c[k] = (i % 2 == 0) ? esym[i] : -esym[i];
  }
  return c;
}

EndMatrix dn_symbol_numeric(const C2& zeta, int n) {
  const double r = norm(zeta);
  if (r == 0) return EndMatrix::Zero(n + 1, n + 1);
  const EndMatrix tau = rep_matrix(sphere_element({zeta[0] / r, zeta[1] / r}), {n, n});
  return (r * r) * tau * weight_matrix(n) * tau.adjoint();
}

}  // namespace gelfand
