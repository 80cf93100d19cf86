#include "ratdec/polynomial.hpp"

#include <sstream>

namespace ratdec {

namespace detail {

namespace {

void schoolbook(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
}

// out += a*b, with |out| >= |a| + |b| - 1 and |a| == |b|.
void karatsuba(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
  const std::size_t n = a.size();
  if (n < kKaratsubaThreshold) {
    schoolbook(a, b, out);
    return;
  }
  const std::size_t h = n / 2;
  auto a0 = a.subspan(0, h), a1 = a.subspan(h);
  auto b0 = b.subspan(0, h), b1 = b.subspan(h);
  const std::size_t hi = n - h;

  std::vector<Integer> z0(2 * h - 1), z2(2 * hi - 1);
  karatsuba(a0, b0, z0);
  karatsuba(a1, b1, z2);

  std::vector<Integer> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a1[i];
    sb[i] = b1[i];
    if (i < h) {
      sa[i] += a0[i];
      sb[i] += b0[i];
    }
  }
  std::vector<Integer> z1(2 * hi - 1);
  karatsuba(sa, sb, z1);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
}

}  // namespace

std::vector<Integer> mul_integer(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  if (std::min(a.size(), b.size()) < kKaratsubaThreshold) {
    schoolbook(a, b, out);
    return out;
  }
  // Unbalanced operands are cut into square blocks of the shorter length.
  if (a.size() < b.size()) std::swap(a, b);
  const std::size_t n = b.size();
  std::vector<Integer> block(n), partial(2 * n - 1);
  for (std::size_t off = 0; off < a.size(); off += n) {
    const std::size_t len = std::min(n, a.size() - off);
    for (std::size_t i = 0; i < n; ++i) block[i] = i < len ? a[off + i] : Integer(0);
    for (auto& p : partial) p = 0;
    karatsuba(block, b, partial);
    for (std::size_t i = 0; i < partial.size() && off + i < out.size(); ++i) out[off + i] += partial[i];
  }
  return out;
}

Poly mul_rational(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Integer da = denominator_lcm(a), db = denominator_lcm(b);
  std::vector<Integer> ia(a.size()), ib(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ia[i] = a[i].get_num() * (da / a[i].get_den());
  for (std::size_t i = 0; i < b.size(); ++i) ib[i] = b[i].get_num() * (db / b[i].get_den());
  std::vector<Integer> prod = mul_integer(ia, ib);
  const Integer d = da * db;
  std::vector<Rational> out(prod.size());
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out[i] = Rational(prod[i], d);
    if (d != 1) out[i].canonicalize();
  }
  return Poly(std::move(out));
}

}  // namespace detail

Integer denominator_lcm(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs())
    if (c.get_den() != 1) l = integer_lcm(l, c.get_den());
  return l;
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    g = integer_gcd(g, c.get_num());
    if (g == 1) break;
  }
  return g;
}

std::vector<Integer> to_integer_coeffs(const Poly& p) {
  std::vector<Integer> v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) throw std::domain_error("polynomial has non-integer coefficients");
    v[i] = p[i].get_num();
  }
  return v;
}

Poly from_integer_coeffs(std::vector<Integer> v) {
  std::vector<Rational> q(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
  return Poly(std::move(q));
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  const Integer d = denominator_lcm(p);
  std::vector<Integer> v(p.size());
  Integer g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    v[i] = p[i].get_num() * (d / p[i].get_den());
    g = integer_gcd(g, v[i]);
  }
  if (v.back() < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return from_integer_coeffs(std::move(v));
}

namespace {

// Pseudo-remainder of integer polynomials: lc(b)^(da-db+1) * a mod b.
std::vector<Integer> pseudo_remainder(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) g = integer_gcd(g, c);
  if (g == 0) return;
  if (v.back() < 0) g = -g;
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  std::vector<Integer> x = to_integer_coeffs(primitive_part(a));
  std::vector<Integer> y = to_integer_coeffs(primitive_part(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly::constant(Rational(1));
    std::vector<Integer> r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(from_integer_coeffs(std::move(x)));
}

std::string to_string(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << to_string(mag);
      if (i > 0) os << "*";
    }
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace ratdec
