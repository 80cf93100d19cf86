#include "ratdec/moebius.hpp"
#include "ratdec/rational_function.hpp"

#include <sstream>

namespace ratdec {

namespace detail {

void normalize(Poly& num, Poly& den, bool cancel_gcd) {
  if (num.is_zero()) {
    den = Poly::constant(Rational(1));
    return;
  }
  if (cancel_gcd && num.degree() > 0 && den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
  }
  // Clear denominators jointly, then divide out the joint content.
  const Integer l = integer_lcm(denominator_lcm(num), denominator_lcm(den));
  std::vector<Integer> n(num.size()), d(den.size());
  Integer g = 0;
  for (std::size_t i = 0; i < num.size(); ++i) {
    n[i] = num[i].get_num() * (l / num[i].get_den());
    g = integer_gcd(g, n[i]);
  }
  for (std::size_t i = 0; i < den.size(); ++i) {
    d[i] = den[i].get_num() * (l / den[i].get_den());
    g = integer_gcd(g, d[i]);
  }
  const bool flip = den.degree() > 0 ? d.back() < 0 : n.back() < 0;
  if (flip) g = -g;
  if (g != 1) {
    for (auto& c : n) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (auto& c : d) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  num = from_integer_coeffs(std::move(n));
  den = from_integer_coeffs(std::move(d));
}

void normalize(NfPoly& num, NfPoly& den, bool cancel_gcd) {
  if (num.is_zero()) {
    den = NfPoly::constant(NfElem(1));
    return;
  }
  if (cancel_gcd && num.degree() > 0 && den.degree() > 0) {
    NfPoly g = gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
  }
  const NfElem inv = (den.degree() > 0 ? den.leading() : num.leading()).inverse();
  num *= inv;
  den *= inv;
}

}  // namespace detail

std::string to_string(const QPoint& p) {
  if (is_infinity(p)) return "inf";
  return to_string(std::get<Rational>(p));
}

std::string to_string(const RatFun& f, char var) {
  if (f.den().degree() == 0) return to_string(f.num() * (Rational(1) / f.den()[0]), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

std::strong_ordering operator<=>(const Moebius& x, const Moebius& y) {
  for (auto [p, q] : {std::pair{&x.a(), &y.a()}, std::pair{&x.b(), &y.b()}, std::pair{&x.c(), &y.c()},
                      std::pair{&x.d(), &y.d()}}) {
    auto o = compare(*p, *q);
    if (o != 0) return o;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Moebius& m) {
  auto r = m.as_ratfun();
  return to_string(r);
}

}  // namespace ratdec
