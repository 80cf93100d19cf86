#pragma once

// Critical points and values, simplicity, ramification portraits, and the
// orbifold checks built on them.

#include "ratdec/extended_point.hpp"
#include "ratdec/moebius.hpp"

#include <stdexcept>
#include <vector>

namespace ratdec {

/// Infinity is a critical point or value, so R(t) at formal degree 2m-2
/// would not see all critical values.
class DegenerateAtInfinity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedAlgebraicPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Local multiplicities, sorted in decreasing order.
using Multiset = std::vector<unsigned>;

struct PortraitEntry {
  ExtendedPoint value;
  Multiset multiplicities;
};

struct Portrait {
  int degree = 0;
  std::vector<PortraitEntry> entries;  // canonical point order
};

struct Orbifold {
  std::vector<std::pair<ExtendedPoint, unsigned>> singular_points;  // nu >= 2, distinct points

  /// Throws std::invalid_argument if a nu is < 2 or a point repeats.
  void validate() const;
  unsigned nu(const ExtendedPoint& z) const;
};

enum class PortraitMode { Exact, Numeric };

/// Local degree of F at a rational point or infinity.
int degree_at(const RatFun& F, const QPoint& z);

/// R(t) = Res_{2m-2, m}(W, P - tQ). Throws DegenerateAtInfinity if deg W < 2m - 2.
Poly critical_value_poly(const RatFun& F);

/// Res_{deg W, m}(W, P - tQ): vanishes exactly at the images of the finite
/// critical points with finite value; defined for every F of degree >= 2.
Poly finite_critical_value_poly(const RatFun& F);

struct Normalized {
  RatFun f;      // post ∘ F ∘ pre
  Moebius pre;
  Moebius post;
};

/// Moves infinity off the critical locus: infinity is neither a critical
/// point nor a critical value of the result, and f(inf) != inf. Candidates
/// are tried in the fixed order inf, 0, 1, -1, 2, -2, ...
Normalized normalize_infinity(const RatFun& F);

/// Exactly 2m - 2 distinct critical values; decided without root finding.
bool is_simple(const RatFun& F);

/// True iff infinity is a critical point of F.
bool infinity_is_critical_point(const RatFun& F);
/// True iff infinity is a critical value of F.
bool infinity_is_critical_value(const RatFun& F);
/// True iff the rational value c is a critical value of F.
bool is_critical_value(const RatFun& F, const QPoint& c);

/// All critical values in canonical order. Irrational values come back as
/// algebraic points isolated at `bits`.
std::vector<ExtendedPoint> critical_values(const RatFun& F, unsigned bits = default_precision_bits());

/// Multiplicities of F over c, summing to deg F.
Multiset portrait_over(const RatFun& F, const ExtendedPoint& c, PortraitMode mode = PortraitMode::Exact,
                       unsigned bits = default_precision_bits());

Portrait full_portrait(const RatFun& F, PortraitMode mode = PortraitMode::Exact,
                       unsigned bits = default_precision_bits());

/// Sum over entries of sum (b - 1); equals 2m - 2 for a complete portrait.
int riemann_hurwitz_sum(const Portrait& p);

struct JointSupport {
  std::vector<ExtendedPoint> support;
  std::vector<Multiset> h_portraits;
  std::vector<Multiset> f_portraits;
};

/// Union S of the critical values of H and F, with both portraits over every
/// point of S (regular values carry {1, ..., 1}).
JointSupport joint_support(const RatFun& H, const RatFun& F, unsigned bits = default_precision_bits());

/// 2 + sum (1/nu - 1).
Rational orbifold_euler(const Orbifold& o);

/// nu2(A(z)) = nu1(z) * gcd(deg_z A, nu2(A(z))) for every z. Orbifold points
/// must be rational or infinity (UnsupportedAlgebraicPoint otherwise).
bool check_minimal_holomorphic(const RatFun& A, const Orbifold& o1, const Orbifold& o2);

struct LattesCheck {
  int count;  // unramified preimages of the point set
  int bound;  // k (m - 2)
  bool pass;
};

/// Requires F simple of degree >= 4 and distinct rational-or-infinity points.
LattesCheck lattes_obstruction(const RatFun& F, const std::vector<ExtendedPoint>& points);

std::string to_string(const Multiset& m);

}  // namespace ratdec
