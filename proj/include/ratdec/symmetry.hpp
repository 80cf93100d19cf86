#pragma once

// Finite Moebius symmetry groups of a rational function: G(F) = {sigma :
// F ∘ sigma = nu ∘ F}, the subgroup G0(F), Aut(F^{∘s}), and the map
// gamma : sigma -> nu.

#include "ratdec/moebius.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratdec {

class IrrationalCriticalValues : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FewCriticalValues : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAMember : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SymmetryPair {
  Moebius sigma;
  Moebius nu;
  friend bool operator==(const SymmetryPair&, const SymmetryPair&) = default;
};

struct SymmetryGroup {
  RatFun base;
  std::vector<SymmetryPair> pairs;  // sorted by (sigma, nu)
  bool closed = false;
};

/// The Moebius map sending from[i] to to[i]; the points of each triple must
/// be distinct.
Moebius moebius_through(const std::array<QPoint, 3>& from, const std::array<QPoint, 3>& to);

/// Rational critical values of F^{∘s} via CV(F^s) = CV(F) ∪ F(CV(F^{s-1})),
/// sorted with infinity last. Throws IrrationalCriticalValues.
std::vector<QPoint> iterate_critical_values(const RatFun& F, unsigned s);

SymmetryGroup compute_G(const RatFun& F);

/// nu with F ∘ sigma = nu ∘ F. Throws NotAMember.
Moebius gamma(const SymmetryGroup& group, const Moebius& sigma);

/// Largest subset whose nu-components all lie among its sigma-components.
SymmetryGroup compute_G0(const SymmetryGroup& group);

/// Moebius sigma commuting with F^{∘s} (pairs with sigma = nu).
SymmetryGroup compute_Aut(const RatFun& F, unsigned s);

/// Exact closure under composition and inverse, identity included.
bool check_closed(const SymmetryGroup& group);

/// Order of the automorphism group of the abstract group formed by the
/// sigma-components of `group`.
std::size_t automorphism_group_order(const SymmetryGroup& group);

struct Theorem32Report {
  std::size_t g_order = 0;
  std::size_t g0_order = 0;
  std::size_t aut_g0_order = 0;         // s = |Aut(G0)|
  bool gamma_injective = false;         // on G0
  bool gamma_bijective_on_g0 = false;   // gamma(G0) = G0 as sigma-sets
  bool g0_in_aut_checked = false;       // s <= smax
  bool g0_in_aut = false;               // every sigma in G0 commutes with F^{∘s}
  std::vector<std::string> verified;    // inclusions machine-checked
  std::vector<std::string> not_computed;
};

/// F simple of degree >= 4 with rational critical values.
Theorem32Report verify_theorem32_chain(const RatFun& F, unsigned smax);

std::string to_string(const SymmetryPair& p);

}  // namespace ratdec
