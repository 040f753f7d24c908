#pragma once

#include <random>
#include <tuple>

#include "gelfand/exact.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// Throws InvalidRepIndex unless n >= 0 and n - m is even.
void validate(const RepIndex& idx);

// The SU(2) element k_z = [[conj z2, z1], [-conj z1, z2]] with k_z b = z for
// the base point b = (0, 1).  Requires |z| = 1 up to rounding.
Mat2 sphere_element(const C2& z);

// Matrix of tau_{m,n}(k) on the orthonormal basis e_j.  k must be unitary
// (1e-12); the inverse in p(k^{-1} z) is taken as k^*.
EndMatrix rep_matrix(const Mat2& k, const RepIndex& idx);

// Same representation in the monomial frame m_j = z1^j z2^(n-j), over the
// Gaussian rationals.  k must be exactly unitary.
ExactMatrix rep_matrix_monomial(const DenseMatrix<GaussRational>& k, const RepIndex& idx);

// Numeric monomial-frame matrix of p -> p(A z) for an arbitrary 2x2 A.
// The orthonormal-frame matrix is S^{-1} T S with S = diag(sqrt C(n,j)).
EndMatrix substitution_matrix(const Mat2& a, int n);

// d tau_n(X) for the su(2) part of X.  The centre acts separately by the
// scalar dtau_center(m) = -i m.
EndMatrix dtau(const AlgebraElement& x, int n);
inline cdouble dtau_center(int m) { return {0.0, -double(m)}; }

// Exact monomial-frame d tau_n(X) for any complex 2x2 X (no trace part).
ExactMatrix dtau_monomial(const DenseMatrix<GaussRational>& x, int n);
// Basis element X_i (i = 1..4) as an exact 2x2 matrix.
DenseMatrix<GaussRational> algebra_basis(int i);

struct Ladder {
  EndMatrix raise;   // Lambda = d tau(X2 + i X3)
  EndMatrix lower;   // Lambda^* = -d tau(X2 - i X3)
  EndMatrix weight;  // B^1 = i d tau(X1) = diag(-n, ..., n)
};
Ladder ladder(int n);

// Exact checks in rational arithmetic.
bool casimir_exact(int n);   // -sum_i dtau(X_i)^2 == n(n+2) I
bool ladder_exact(int n);    // Lambda e_j == 2 sqrt((j+1)(n-j)) e_{j+1}, both directions

// Random elements for property tests.
Mat2 random_su2(std::mt19937_64& rng);
Mat2 random_u2(std::mt19937_64& rng);
C2 random_point(std::mt19937_64& rng, double scale = 1.0);

}  // namespace gelfand
