#pragma once

// Moebius transformations z -> (a z + b) / (c z + d), ad - bc != 0, stored
// with the first nonzero entry of (a, b, c, d) scaled to 1.

#include "ratdec/rational_function.hpp"

#include <array>
#include <compare>
#include <optional>

namespace ratdec {

template <class K>
class MoebiusMap {
 public:
  MoebiusMap() : m_{K(1), K(0), K(0), K(1)} {}
  MoebiusMap(K a, K b, K c, K d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (a_() * d_() - b_() * c_() == K(0)) throw std::domain_error("singular Moebius matrix");
    normalize();
  }

  static MoebiusMap identity() { return MoebiusMap(); }
  static MoebiusMap translation(const K& t) { return MoebiusMap(K(1), t, K(0), K(1)); }
  static MoebiusMap scaling(const K& s) { return MoebiusMap(s, K(0), K(0), K(1)); }
  static MoebiusMap inversion() { return MoebiusMap(K(0), K(1), K(1), K(0)); }

  /// Degree-1 rational function to matrix; nullopt if deg f != 1.
  static std::optional<MoebiusMap> from_ratfun(const RationalFunction<K>& f) {
    if (f.degree() != 1) return std::nullopt;
    return MoebiusMap(f.num().coefficient(1), f.num().coefficient(0), f.den().coefficient(1), f.den().coefficient(0));
  }

  const K& a() const { return m_[0]; }
  const K& b() const { return m_[1]; }
  const K& c() const { return m_[2]; }
  const K& d() const { return m_[3]; }

  bool is_identity() const { return *this == MoebiusMap(); }

  RationalFunction<K> as_ratfun() const {
    using P = Polynomial<K>;
    return RationalFunction<K>::from_coprime(P(std::vector<K>{b(), a()}), P(std::vector<K>{d(), c()}));
  }

  /// Adjugate.
  MoebiusMap inverse() const { return MoebiusMap(d(), -b(), -c(), a()); }

  Projective<K> operator()(const Projective<K>& z) const {
    if (is_infinity(z)) {
      if (c() == K(0)) return Infinity{};
      return K(a() / c());
    }
    const K& x = std::get<K>(z);
    K den = c() * x + d();
    if (den == K(0)) return Infinity{};
    return K((a() * x + b()) / den);
  }

  friend bool operator==(const MoebiusMap& x, const MoebiusMap& y) { return x.m_ == y.m_; }

 private:
  const K& a_() const { return m_[0]; }
  const K& b_() const { return m_[1]; }
  const K& c_() const { return m_[2]; }
  const K& d_() const { return m_[3]; }

  void normalize() {
    for (const K& e : m_) {
      if (e == K(0)) continue;
      const K inv = K(1) / e;
      for (K& x : m_) x *= inv;
      return;
    }
  }

  std::array<K, 4> m_;
};

using Moebius = MoebiusMap<Rational>;
using NfMoebius = MoebiusMap<NfElem>;

/// Matrix product: (f ∘ g)(z) = f(g(z)).
template <class K>
MoebiusMap<K> compose(const MoebiusMap<K>& f, const MoebiusMap<K>& g) {
  return MoebiusMap<K>(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(), f.c() * g.a() + f.d() * g.c(),
                       f.c() * g.b() + f.d() * g.d());
}

/// ν ∘ F = (aP + bQ) / (cP + dQ); coprime since ad - bc != 0.
template <class K>
RationalFunction<K> compose(const MoebiusMap<K>& nu, const RationalFunction<K>& f) {
  const auto& p = f.num();
  const auto& q = f.den();
  return RationalFunction<K>::from_coprime(p * nu.a() + q * nu.b(), p * nu.c() + q * nu.d());
}

/// F ∘ μ.
template <class K>
RationalFunction<K> compose(const RationalFunction<K>& f, const MoebiusMap<K>& mu) {
  return compose(f, mu.as_ratfun());
}

/// μ⁻¹ ∘ F ∘ μ.
template <class K>
RationalFunction<K> conjugate(const RationalFunction<K>& f, const MoebiusMap<K>& mu) {
  return compose(mu.inverse(), compose(f, mu));
}

/// Lexicographic order on (a, b, c, d); used for canonical group listings.
std::strong_ordering operator<=>(const Moebius& x, const Moebius& y);

std::string to_string(const Moebius& m);

}  // namespace ratdec
