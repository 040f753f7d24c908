#include "gelfand/poly4.hpp"

#include <algorithm>

namespace gelfand {

Poly4::Poly4(const GaussRational& c) {
  if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
}

Poly4 Poly4::monomial(const Exponent& e, const GaussRational& c) {
  Poly4 p;
  p.add_term(e, c);
  return p;
}

Poly4 Poly4::norm2() {
  return monomial({1, 0, 1, 0}) + monomial({0, 1, 0, 1});
}

void Poly4::add_term(const Exponent& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly4& Poly4::operator+=(const Poly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly4& Poly4::operator-=(const Poly4& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly4 Poly4::operator*(const Poly4& o) const {
  Poly4 r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
  return r;
}

Poly4 Poly4::scaled(const GaussRational& c) const {
  Poly4 r;
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  return r;
}

Poly4 Poly4::conjugate() const {
  Poly4 r;
  for (const auto& [e, c] : terms_) r.add_term({e[2], e[3], e[0], e[1]}, gelfand::conj(c));
  return r;
}

Poly4 Poly4::power(int k) const {
  Poly4 r(GaussRational(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Poly4::homogeneous(int p, int q) const {
  for (const auto& [e, c] : terms_)
    if (e[0] + e[1] != p || e[2] + e[3] != q) return false;
  return true;
}

// Division by s uses z1 zb1 = s - z2 zb2: monomials without the factor
// z1 zb1 form a basis of the quotient by (s), so the remainder is unique.
std::optional<Poly4> Poly4::divide_by_norm2(int k) const {
  Poly4 current = *this;
  for (int step = 0; step < k; ++step) {
    Poly4 quotient, rest = current;
    while (true) {
      auto it = std::find_if(rest.terms_.begin(), rest.terms_.end(),
                             [](const auto& t) { return t.first[0] > 0 && t.first[2] > 0; });
      if (it == rest.terms_.end()) break;
      Exponent e = it->first;
      GaussRational c = it->second;
      e[0] -= 1;
      e[2] -= 1;
      Poly4 q = monomial(e, c);
      quotient += q;
      rest -= q * norm2();
    }
    if (!rest.is_zero()) return std::nullopt;
    current = std::move(quotient);
  }
  return current;
}

cdouble Poly4::evaluate(const C2& z) const {
  const cdouble v[4] = {z[0], z[1], std::conj(z[0]), std::conj(z[1])};
  cdouble sum = 0;
  for (const auto& [e, c] : terms_) {
    cdouble m = to_complex(c);
    for (int a = 0; a < 4; ++a)
      for (int p = 0; p < e[a]; ++p) m *= v[a];
    sum += m;
  }
  return sum;
}

}  // namespace gelfand
