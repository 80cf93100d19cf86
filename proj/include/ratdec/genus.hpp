#pragma once

// Genus of the fiber-product curves H1(x)F2(y) - H2(x)F1(y) = 0 and of the
// diagonal quotient for H = F, computed from ramification portraits.

#include "ratdec/ramification.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ratdec {

class PortraitMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GenusReport {
  enum class Curve { FiberProduct, Diagonal };
  Curve curve = Curve::FiberProduct;
  /// 2 - 2g for the fiber product, 4 - 2g for the diagonal quotient.
  Rational raw;
  std::optional<long> genus;  // set iff the raw value gives an integer g >= 0
  bool non_integer_genus = false;
  bool negative_genus = false;
  /// Sum of p_i equals (r - 2) deg + 2 on every supplied portrait list.
  bool riemann_hurwitz_consistent = true;
  /// The formulas are genus formulas only for irreducible curves; this is
  /// never verified.
  bool assumes_irreducibility = true;
};

/// 2 - 2g = sum_i sum_{j1,j2} gcd(a_{i,j1}, b_{i,j2}) - mn(r - 2), over a
/// common support of size r (H-multisets sum to n, F-multisets to m).
GenusReport genus_fiber_product(const std::vector<Multiset>& h_portraits, const std::vector<Multiset>& f_portraits,
                                int n, int m);

/// 4 - 2g = sum_i sum_{j1,j2} gcd(b_{i,j1}, b_{i,j2}) - (r - 2) m^2.
GenusReport genus_diagonal(const std::vector<Multiset>& f_portraits, int m);

/// Portrait of any simple function of degree m: 2m - 2 copies of {2, 1^(m-2)}.
std::vector<Multiset> simple_portrait(int m);

/// 2m - 2 + sum (l_i - p_i) over the 2m - 2 critical values of a simple F of
/// degree m, where p_i = |H-multiset| and l_i = number of its even entries.
Rational goo_genus_zero_criterion(const std::vector<Multiset>& h_portraits_over_f_critical_values, int m);

/// sum_i p_i == (r - 2) n + 2.
bool portraits_riemann_hurwitz(const std::vector<Multiset>& portraits, int n);

}  // namespace ratdec
