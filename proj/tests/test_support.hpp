#pragma once

// Shared helpers for the test suites: literal builders and seeded random
// generators for polynomials, rational functions and Moebius maps.

#include "ratdec/moebius.hpp"
#include "ratdec/poly_algorithms.hpp"
#include "ratdec/ramification.hpp"
#include "ratdec/rational_function.hpp"

#include <algorithm>
#include <random>

namespace ratdec::testing {

inline Rational q(long n, long d = 1) { return make_rational(n, d); }

inline Poly poly(std::initializer_list<long> c) { return Poly::from_ints(c); }

inline RatFun rf(std::initializer_list<long> num, std::initializer_list<long> den = {1}) {
  return RatFun(poly(num), poly(den));
}

inline Moebius mob(long a, long b, long c, long d) { return Moebius(q(a), q(b), q(c), q(d)); }

/// Odd (F(-z) = -F(z)) simple quartic with six rational critical values.
inline RatFun odd_simple_quartic() { return rf({0, 81, 0, 27}, {100, 0, 1029, 0, 27}); }

/// Simple quartic with six rational critical values and trivial G(F).
inline RatFun rigid_simple_quartic() { return rf({-8, -12, 9, 4}, {0, 0, -8, 8, 4}); }

/// The degree-2 example: P o P = Q o R = -2z^2 / (z^4 + 1).
inline RatFun example_p() { return rf({-1, 0, 1}, {1, 0, 1}); }
inline RatFun example_q() { return rf({-1}, {-1, 0, 2}); }
inline RatFun example_r() { return rf({1, 0, 1}, {0, 2}); }

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

  Poly polynomial(int degree, long bound) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = Rational(integer(-bound, bound));
    while (c.back() == 0) c.back() = Rational(integer(-bound, bound));
    return Poly(std::move(c));
  }

  /// Random rational function of exact degree m with |coefficients| <= bound.
  RatFun ratfun(int m, long bound) {
    for (;;) {
      int dn = static_cast<int>(integer(0, m)), dd = static_cast<int>(integer(0, m));
      if (integer(0, 1) == 0) dn = m; else dd = m;
      RatFun f(polynomial(dn, bound), polynomial(dd, bound));
      if (f.degree() == m) return f;
    }
  }

  /// Both numerator and denominator of full degree m.
  RatFun full_ratfun(int m, long bound) {
    for (;;) {
      RatFun f(polynomial(m, bound), polynomial(m, bound));
      if (f.degree() == m) return f;
    }
  }

  /// Random simple function of degree m (simplicity checked exactly).
  RatFun simple_ratfun(int m, long bound) {
    for (;;) {
      RatFun f = ratfun(m, bound);
      if (is_simple(f)) return f;
    }
  }

  Moebius moebius(long bound) {
    for (;;) {
      long a = integer(-bound, bound), b = integer(-bound, bound), c = integer(-bound, bound),
           d = integer(-bound, bound);
      if (a * d - b * c != 0) return mob(a, b, c, d);
    }
  }

  /// r partitions of n with total ramification 2n - 2, built by merging
  /// random pairs of parts; consistent with Riemann-Hurwitz but not
  /// necessarily realizable.
  std::vector<std::vector<unsigned>> portraits(int n, int r) {
    std::vector<std::vector<unsigned>> out(static_cast<std::size_t>(r), std::vector<unsigned>(static_cast<std::size_t>(n), 1));
    for (int merges = 0; merges < 2 * n - 2;) {
      auto& m = out[static_cast<std::size_t>(integer(0, r - 1))];
      if (m.size() < 2) continue;
      const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(m.size()) - 1));
      auto j = static_cast<std::size_t>(integer(0, static_cast<long>(m.size()) - 2));
      if (j >= i) ++j;
      m[i] += m[j];
      m.erase(m.begin() + static_cast<long>(j));
      ++merges;
    }
    for (auto& m : out) std::sort(m.begin(), m.end(), std::greater<>());
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ratdec::testing
