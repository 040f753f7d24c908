#pragma once

#include <array>
#include <map>
#include <optional>

#include "gelfand/exact.hpp"
#include "gelfand/types.hpp"

namespace gelfand {

// Polynomial in four commuting indeterminates (z1, z2, zb1, zb2) with
// Gaussian-rational coefficients.  zb_a stands for conj(z_a); conjugation is
// the formal involution swapping barred and unbarred variables.
class Poly4 {
 public:
  using Exponent = std::array<int, 4>;

  Poly4() = default;
  Poly4(const GaussRational& c);  // NOLINT constant polynomial
  static Poly4 monomial(const Exponent& e, const GaussRational& c = 1);
  static Poly4 var(int which) {
    Exponent e{0, 0, 0, 0};
    e[which] = 1;
    return monomial(e);
  }
  // s = z1 zb1 + z2 zb2 = |z|^2
  static Poly4 norm2();

  const std::map<Exponent, GaussRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly4& operator+=(const Poly4& o);
  Poly4& operator-=(const Poly4& o);
  Poly4 operator+(const Poly4& o) const { return Poly4(*this) += o; }
  Poly4 operator-(const Poly4& o) const { return Poly4(*this) -= o; }
  Poly4 operator*(const Poly4& o) const;
  Poly4 scaled(const GaussRational& c) const;
  bool operator==(const Poly4& o) const { return terms_ == o.terms_; }

  Poly4 conjugate() const;
  Poly4 power(int k) const;

  // True when every term has bidegree (p, q) in (unbarred, barred).
  bool homogeneous(int p, int q) const;

  // Exact division by s^k; nullopt when s^k does not divide.
  std::optional<Poly4> divide_by_norm2(int k) const;

  cdouble evaluate(const C2& z) const;

 private:
  void add_term(const Exponent& e, const GaussRational& c);
  std::map<Exponent, GaussRational> terms_;
};

using PolyMatrix = DenseMatrix<Poly4>;

}  // namespace gelfand
