#pragma once

// Complex root isolation with MPFR-backed Aberth iteration. Results are
// certified by Weierstrass-correction inclusion discs and reported as
// rational boxes; the floating-point layer never leaks into exact code.

#include "ratdec/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace ratdec {

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Axis-parallel box [re_lo, re_hi] x [im_lo, im_hi] in the complex plane.
struct RationalBox {
  Rational re_lo, re_hi, im_lo, im_hi;

  bool overlaps(const RationalBox& o) const {
    return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
  }
  bool contains(const Rational& re, const Rational& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
  }
  friend bool operator==(const RationalBox&, const RationalBox&) = default;
};

struct IsolatedRoot {
  RationalBox box;   // contains exactly one root
  Rational re, im;   // dyadic center approximation
  double re_approx;  // for display only
  double im_approx;
};

/// Working precision in bits: RATDEC_PRECISION if set and >= 53, else 256.
unsigned default_precision_bits();

/// Isolates all complex roots of a squarefree p (deg p >= 1). The order is
/// canonical: by real part, ties (overlapping real projections) by imaginary
/// part. Precision is doubled up to twice on certification failure before
/// PrecisionExhausted is thrown.
std::vector<IsolatedRoot> isolate_roots(const Poly& p, unsigned bits);

/// Multiplicities of the roots of P - cQ, where c is the root of `minpoly`
/// whose isolating box is `c_box`; by clustering numerical roots at `bits`.
/// Throws PrecisionExhausted when the cluster structure is ambiguous.
std::vector<unsigned> numeric_fiber_multiplicities(const Poly& P, const Poly& Q, const Poly& minpoly,
                                                   const RationalBox& c_box, unsigned bits);

}  // namespace ratdec
