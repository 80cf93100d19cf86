#pragma once

// Dense univariate polynomials over an exact field K.
//
// K is Rational for almost everything; NfElem (number_field.hpp) is used
// where coefficients live in a finite extension of Q. The only requirements
// on K are field arithmetic, equality, construction from int, and a
// default-constructed zero.

#include "ratdec/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace ratdec {

template <class K>
class Polynomial;

using Poly = Polynomial<Rational>;

namespace detail {
// Integer product kernel: schoolbook below kKaratsubaThreshold, Karatsuba above.
inline constexpr std::size_t kKaratsubaThreshold = 24;
std::vector<Integer> mul_integer(std::span<const Integer> a, std::span<const Integer> b);
Poly mul_rational(const Poly& a, const Poly& b);
}  // namespace detail

template <class K>
class Polynomial {
 public:
  /// Degree reported for the zero polynomial; compares below every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }
  static Polynomial monomial(const K& c, std::size_t power) {
    std::vector<K> v(power + 1, K(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(K(1), 1); }
  static Polynomial from_ints(std::initializer_list<long> c) {
    std::vector<K> v;
    v.reserve(c.size());
    for (long x : c) v.emplace_back(K(x));
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<K>& coeffs() const { return coeffs_; }
  K coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : K(0); }
  const K& operator[](std::size_t i) const { return coeffs_[i]; }
  const K& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <class U>
  U operator()(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }
  K operator()(const K& x) const {
    K acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial operator-() const {
    std::vector<K> v(coeffs_);
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), K(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const K& s) {
    if (s == K(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
  friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if constexpr (std::is_same_v<K, Rational>) {
      return detail::mul_rational(a, b);
    } else {
      if (a.is_zero() || b.is_zero()) return {};
      std::vector<K> v(a.size() + b.size() - 1, K(0));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
      return Polynomial(std::move(v));
    }
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> divmod(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<K>{}, a};
  std::vector<K> rem(a.coeffs());
  const std::size_t db = b.size() - 1;
  std::vector<K> quot(rem.size() - db, K(0));
  const K inv_lead = K(1) / b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == K(0)) continue;
    K f = rem[i] * inv_lead;
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  rem.resize(db);
  return {Polynomial<K>(std::move(quot)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> operator/(const Polynomial<K>& a, const Polynomial<K>& b) {
  return divmod(a, b).first;
}
template <class K>
Polynomial<K> operator%(const Polynomial<K>& a, const Polynomial<K>& b) {
  return divmod(a, b).second;
}

template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  return p * (K(1) / p.leading());
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& p) {
  if (p.size() <= 1) return {};
  std::vector<K> v(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * K(static_cast<long>(i));
  return Polynomial<K>(std::move(v));
}

/// Monic gcd by Euclid's algorithm. Throws if both inputs are zero.
template <class K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Monic gcd over Q via a primitive remainder sequence on integer polynomials.
Poly gcd(Poly a, Poly b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> gcdext(Polynomial<K> a, Polynomial<K> b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  Polynomial<K> s0 = Polynomial<K>::constant(K(1)), s1{};
  Polynomial<K> t0{}, t1 = Polynomial<K>::constant(K(1));
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    Polynomial<K> s2 = s0 - q * s1;
    Polynomial<K> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  K inv = K(1) / a.leading();
  return {a * inv, s0 * inv, t0 * inv};
}

/// p(q(z)).
template <class K>
Polynomial<K> compose(const Polynomial<K>& p, const Polynomial<K>& q) {
  Polynomial<K> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Polynomial<K>::constant(p[i]);
  return acc;
}

/// z^n p(1/z) for a declared formal degree n >= deg p.
template <class K>
Polynomial<K> reversed(const Polynomial<K>& p, std::size_t n) {
  if (p.degree() > static_cast<int>(n)) throw std::invalid_argument("formal degree below actual degree");
  std::vector<K> v(n + 1, K(0));
  for (std::size_t i = 0; i < p.size(); ++i) v[n - i] = p[i];
  return Polynomial<K>(std::move(v));
}

/// p(z + a).
template <class K>
Polynomial<K> shifted(const Polynomial<K>& p, const K& a) {
  return compose(p, Polynomial<K>(std::vector<K>{a, K(1)}));
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& p, unsigned e) {
  Polynomial<K> result = Polynomial<K>::constant(K(1));
  Polynomial<K> base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

// Integer-coefficient helpers for Q[z].

/// Smallest positive integer d with d*p integral.
Integer denominator_lcm(const Poly& p);
/// gcd of the numerators of the (integral) coefficients of p; 0 for p = 0.
Integer integer_content(const Poly& p);
/// Primitive integer polynomial with positive leading coefficient; zero stays zero.
Poly primitive_part(const Poly& p);
std::vector<Integer> to_integer_coeffs(const Poly& p);
Poly from_integer_coeffs(std::vector<Integer> v);

std::string to_string(const Poly& p, char var = 'z');
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace ratdec
