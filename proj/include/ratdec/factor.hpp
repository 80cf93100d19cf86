#pragma once

// Factorization of univariate polynomials over Q (Zassenhaus: factor modulo
// a prime, Hensel-lift, recombine).

#include "ratdec/polynomial.hpp"

#include <vector>

namespace ratdec {

struct IrreducibleFactor {
  Poly factor;  // primitive integer polynomial, positive leading coefficient
  unsigned multiplicity;
};

/// Irreducible factors of p over Q, sorted by (degree, coefficients).
/// Throws std::domain_error for p = 0; constants have no factors.
std::vector<IrreducibleFactor> factor(const Poly& p);

/// Distinct rational roots of p in increasing order.
std::vector<Rational> rational_roots(const Poly& p);

/// True iff p has degree >= 1 and no nontrivial factorization over Q.
bool is_irreducible(const Poly& p);

}  // namespace ratdec
