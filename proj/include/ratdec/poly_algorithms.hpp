#pragma once

#include "ratdec/linear_algebra.hpp"
#include "ratdec/polynomial.hpp"

#include <vector>

namespace ratdec {

/// Resultant for caller-declared formal degrees (dp >= deg p, dq >= deg q),
/// the determinant of the (dp+dq)-square Sylvester matrix.
template <class K>
K resultant(const Polynomial<K>& p, const Polynomial<K>& q, std::size_t dp, std::size_t dq) {
  if (p.degree() > static_cast<int>(dp) || q.degree() > static_cast<int>(dq))
    throw std::invalid_argument("resultant: formal degree below actual degree");
  const std::size_t n = dp + dq;
  if (n == 0) return K(1);
  Matrix<K> s(n, n);
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) s(r, r + i) = p.coefficient(dp - i);
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) s(dq + r, r + i) = q.coefficient(dq - i);
  return determinant(std::move(s));
}

/// Resultant at the actual degrees; zero iff p and q share a root.
template <class K>
K resultant(const Polynomial<K>& p, const Polynomial<K>& q) {
  if (p.is_zero() || q.is_zero()) return K(0);
  return resultant(p, q, static_cast<std::size_t>(p.degree()), static_cast<std::size_t>(q.degree()));
}

template <class K>
struct SquarefreeFactor {
  Polynomial<K> factor;  // monic, squarefree
  unsigned multiplicity;
};

/// Yun's algorithm. Factors are monic, squarefree, pairwise coprime, in
/// increasing multiplicity; their product equals p up to a scalar.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const Polynomial<K>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<SquarefreeFactor<K>> out;
  if (p.degree() == 0) return out;
  Polynomial<K> f = monic(p);
  Polynomial<K> df = derivative(f);
  Polynomial<K> a = gcd(f, df);
  Polynomial<K> b = f / a;
  Polynomial<K> c = df / a;
  Polynomial<K> d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    Polynomial<K> g = gcd(b, d);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = d / g;
    d = c - derivative(b);
  }
  return out;
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
  Polynomial<K> out = Polynomial<K>::constant(K(1));
  for (const auto& f : squarefree_decomposition(p)) out *= f.factor;
  return out;
}

template <class K>
bool is_squarefree(const Polynomial<K>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Res_{da,db}(a, b - t*c) as a polynomial in t, by evaluation at
/// da+1 points and interpolation (its t-degree is at most da).
Poly resultant_pencil(const Poly& a, const Poly& b, const Poly& c, std::size_t da, std::size_t db);

}  // namespace ratdec
