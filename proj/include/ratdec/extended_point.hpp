#pragma once

// Points of the Riemann sphere as they arise from rational data: rationals,
// infinity, and algebraic numbers given by an irreducible polynomial plus a
// certified isolating box.

#include "ratdec/numeric_roots.hpp"
#include "ratdec/rational_function.hpp"

#include <compare>
#include <string>
#include <variant>

namespace ratdec {

struct AlgebraicPoint {
  Poly minpoly;       // primitive, irreducible over Q, degree >= 2
  std::size_t index;  // position among the canonically ordered roots of minpoly
  RationalBox box;    // isolates this root
  std::string label;  // e.g. "a2"; opaque, for display
  double re_approx = 0;
  double im_approx = 0;
};

using ExtendedPoint = std::variant<Rational, Infinity, AlgebraicPoint>;

inline bool is_rational(const ExtendedPoint& p) { return std::holds_alternative<Rational>(p); }
inline bool is_infinity(const ExtendedPoint& p) { return std::holds_alternative<Infinity>(p); }
inline bool is_algebraic(const ExtendedPoint& p) { return std::holds_alternative<AlgebraicPoint>(p); }

ExtendedPoint to_extended(const QPoint& p);
/// Throws std::invalid_argument for algebraic points.
QPoint to_qpoint(const ExtendedPoint& p);

/// Rationals (ascending), then algebraic points (by minimal polynomial, then
/// root index), then infinity.
std::strong_ordering compare(const ExtendedPoint& a, const ExtendedPoint& b);

/// Algebraic points are equal iff their minimal polynomials agree and their
/// isolating boxes overlap.
bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);

inline bool canonical_less(const ExtendedPoint& a, const ExtendedPoint& b) { return compare(a, b) < 0; }

/// All roots of an irreducible polynomial of degree >= 2 as algebraic points.
std::vector<AlgebraicPoint> algebraic_roots(const Poly& minpoly, unsigned bits);

std::string to_string(const ExtendedPoint& p);

}  // namespace ratdec
