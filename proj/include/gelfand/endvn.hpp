#pragma once

#include <vector>

#include "gelfand/exact.hpp"
#include "gelfand/poly4.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// Monic polynomial with rational coefficients, lowest degree first.
struct MonicPolynomial {
  std::vector<Rational> coeffs;
  int degree() const { return int(coeffs.size()) - 1; }
  Rational operator()(const Rational& t) const;
  double operator()(double t) const;
};

// Weights t_j = -n + 2j.
std::vector<int> ray_slopes(int n);
// diag(t_0, ..., t_n); equals B_n^1 for n >= 1 and is [0] for n = 0.
EndMatrix weight_matrix(int n);

// q_n^l for l = 0..n: monic orthogonal polynomials for the uniform measure
// on the nodes t_j, by the three-term recurrence.
std::vector<MonicPolynomial> discrete_q_polys(int n);

// diag(q_n^l(t_0), ..., q_n^l(t_n)).
EndMatrix b_matrix(int n, int l);
std::vector<Rational> b_diagonal(int n, int l);

// Projection onto W_n^l by the spectral filter of the conjugation Casimir.
EndMatrix isotypic_project(const EndMatrix& m, int l, int n);
// Exact variant working in the monomial frame (diagonal matrices are the
// same in both frames).
ExactMatrix isotypic_project_exact(const ExactMatrix& m_monomial, int l, int n);

// Degree of the polynomial p with p(t_j) = b_j, by Newton divided differences
// (-1 for the zero vector).
int interpolation_degree(const std::vector<Rational>& b);

// Q_B^d(z) = |z|^{2d} tau(k_z') B tau(k_z')^*, held as
//   Q_{ii'} = R_{ii'} / sqrt(C(n,i) C(n,i'))
// with R a polynomial matrix of bidegree (d, d).
struct EquivariantPolynomial {
  int n = 0;
  int d = 0;
  PolyMatrix r;

  EndMatrix evaluate(const C2& z) const;
  // tr Q = sum_i R_ii / C(n,i), an exact polynomial.
  Poly4 trace() const;
  // M = R diag(1 / C(n,i)); similar to Q, so tr Q^k = tr M^k.
  PolyMatrix similar_rational() const;
};

// Throws NotPolynomial when the required exact division by |z|^2 leaves a
// remainder (which happens iff d < interpolation_degree(B)).
EquivariantPolynomial q_equivariant_poly(const std::vector<Rational>& b_diag, int d, int n);

// Symbol of D_n: Q^1_{B^1}.  The symbol of Delta_z is |zeta|^2.
EquivariantPolynomial dn_symbol(int n);

// det(lambda - D_n(zeta)) = lambda^{n+1} + sum_k c_k |zeta|^{2(n+1-k)} lambda^k.
// Returns c_0..c_n, after checking symbolically (Newton identities on traces
// of powers) that the coefficients depend on zeta only through |zeta|^2.
// Throws Error if the symbolic check fails.
std::vector<Rational> dn_characteristic(int n);

// Numeric value of D_n(zeta) without the symbolic machinery:
// |zeta|^2 tau(k_zeta') B^1 tau(k_zeta')^*.
EndMatrix dn_symbol_numeric(const C2& zeta, int n);

}  // namespace gelfand
