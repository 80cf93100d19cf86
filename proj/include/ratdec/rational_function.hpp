#pragma once

// Rational functions num/den over a field K, kept in canonical form so that
// equality is equality of coefficient vectors.
//
// Over Q the canonical form is: num and den coprime, coefficients cleared to
// coprime integers, leading coefficient of den positive (of num when den is
// constant); the zero function is 0/1. Over a number field den is made monic
// (num when den is constant).

#include "ratdec/number_field.hpp"
#include "ratdec/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <variant>

namespace ratdec {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of P^1(K): a finite value or the point at infinity.
template <class K>
using Projective = std::variant<K, Infinity>;

using QPoint = Projective<Rational>;

template <class K>
bool is_infinity(const Projective<K>& p) {
  return std::holds_alternative<Infinity>(p);
}

std::string to_string(const QPoint& p);

namespace detail {
// Scales (num, den) into canonical form; cancels the gcd first when asked.
void normalize(Poly& num, Poly& den, bool cancel_gcd);
void normalize(NfPoly& num, NfPoly& den, bool cancel_gcd);
}  // namespace detail

template <class K>
class RationalFunction {
 public:
  using PolyK = Polynomial<K>;

  /// The identity map z.
  RationalFunction() : num_(PolyK::x()), den_(PolyK::constant(K(1))) {}

  RationalFunction(PolyK num, PolyK den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    detail::normalize(num_, den_, true);
  }

  static RationalFunction polynomial(PolyK p) { return RationalFunction(std::move(p), PolyK::constant(K(1))); }
  static RationalFunction constant(const K& c) { return polynomial(PolyK::constant(c)); }
  static RationalFunction identity() { return RationalFunction(); }

  /// Skips the gcd; the caller guarantees gcd(num, den) = 1.
  static RationalFunction from_coprime(PolyK num, PolyK den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction f(std::move(num), std::move(den), CoprimeTag{});
    return f;
  }

  const PolyK& num() const { return num_; }
  const PolyK& den() const { return den_; }
  int degree() const { return std::max(std::max(num_.degree(), den_.degree()), 0); }
  bool is_constant() const { return degree() == 0; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct CoprimeTag {};
  RationalFunction(PolyK num, PolyK den, CoprimeTag) : num_(std::move(num)), den_(std::move(den)) {
    detail::normalize(num_, den_, false);
  }

  PolyK num_;
  PolyK den_;
};

using RatFun = RationalFunction<Rational>;
using NfRatFun = RationalFunction<NfElem>;

/// F(x) on P^1; infinity handled through leading coefficients.
template <class K>
Projective<K> eval(const RationalFunction<K>& f, const Projective<K>& x) {
  if (is_infinity(x)) {
    const int dn = f.num().degree(), dd = f.den().degree();
    if (dn > dd) return Infinity{};
    if (dn < dd) return K(0);
    return K(f.num().leading() / f.den().leading());
  }
  const K& v = std::get<K>(x);
  K d = f.den()(v);
  if (d == K(0)) return Infinity{};
  return K(f.num()(v) / d);
}

/// F(G(z)). The homogenized substitution keeps numerator and denominator
/// coprime, so no gcd is needed.
template <class K>
RationalFunction<K> compose(const RationalFunction<K>& f, const RationalFunction<K>& g) {
  using PolyK = Polynomial<K>;
  const int m = f.degree();
  const PolyK& a = g.num();
  const PolyK& b = g.den();
  std::vector<PolyK> bpow(static_cast<std::size_t>(m) + 1);
  bpow[0] = PolyK::constant(K(1));
  for (int k = 1; k <= m; ++k) bpow[k] = bpow[k - 1] * b;
  // Homogeneous Horner: h = sum_i c_i a^i b^(m-i).
  auto horner = [&](const PolyK& c) {
    PolyK h = PolyK::constant(c.coefficient(static_cast<std::size_t>(m)));
    for (int i = m - 1; i >= 0; --i) {
      h = h * a;
      const K ci = c.coefficient(static_cast<std::size_t>(i));
      if (!(ci == K(0))) h += bpow[m - i] * ci;
    }
    return h;
  };
  PolyK num = horner(f.num());
  PolyK den = horner(f.den());
  if (den.is_zero()) throw std::domain_error("composition with a constant at a pole");
  return RationalFunction<K>::from_coprime(std::move(num), std::move(den));
}

/// l-fold self-composition, l >= 1.
template <class K>
RationalFunction<K> iterate(const RationalFunction<K>& f, unsigned l) {
  if (l == 0) throw std::invalid_argument("iterate: l must be >= 1");
  RationalFunction<K> acc = f;
  for (unsigned i = 1; i < l; ++i) acc = compose(f, acc);
  return acc;
}

/// F^{∘l} for l >= 0 (l = 0 gives the identity).
template <class K>
RationalFunction<K> iterate0(const RationalFunction<K>& f, unsigned l) {
  return l == 0 ? RationalFunction<K>::identity() : iterate(f, l);
}

/// P'Q - PQ' of the canonical pair; throws for constants.
template <class K>
Polynomial<K> wronskian(const RationalFunction<K>& f) {
  if (f.is_constant()) throw std::domain_error("wronskian of a constant function");
  return derivative(f.num()) * f.den() - f.num() * derivative(f.den());
}

std::string to_string(const RatFun& f, char var = 'z');
std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace ratdec
