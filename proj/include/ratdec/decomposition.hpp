#pragma once

// Decomposition chains and their Moebius equivalence, left and right
// Moebius factors, peeling a known left factor, semiconjugacy normal forms,
// shared iterates, and the binomial degree filters for left factors.

#include "ratdec/moebius.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ratdec {

/// F = F_r ∘ ... ∘ F_1, stored innermost first: factors[0] = F_1.
struct Chain {
  std::vector<RatFun> factors;
};

/// (mu_1, ..., mu_{r-1}) carrying a chain F to a chain G:
/// G_1 = mu_1^{-1} ∘ F_1, G_i = mu_i^{-1} ∘ F_i ∘ mu_{i-1} (1 < i < r) and
/// G_r = F_r ∘ mu_{r-1}. Empty for r = 1.
struct EquivalenceWitness {
  std::vector<Moebius> mus;
};

/// found / certified-absent / search-incomplete.
enum class SearchStatus { Found, CertifiedAbsent, SearchIncomplete };

const char* to_string(SearchStatus s);

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::CertifiedAbsent;
  std::optional<T> value;
};

RatFun chain_compose(const Chain& c);

/// nu with G = nu ∘ F, by exact linear algebra on (a, b, c, d).
std::optional<Moebius> solve_post_moebius(const RatFun& G, const RatFun& F);

/// All Y with X = F ∘ Y, deg Y = deg X / deg F. Candidates for Y(z0) are the
/// rational points of the fiber of F over X(z0); each extends uniquely to a
/// power series, and its (k, k) Pade approximant is checked exactly. The list
/// is complete, so an empty result certifies absence over Q.
std::vector<RatFun> peel_left_all(const RatFun& X, const RatFun& F);
SearchResult<RatFun> peel_left(const RatFun& X, const RatFun& F);

/// mu with G = F ∘ mu.
std::vector<Moebius> solve_pre_moebius_all(const RatFun& G, const RatFun& F);
SearchResult<Moebius> solve_pre_moebius(const RatFun& G, const RatFun& F);

std::optional<EquivalenceWitness> chains_equivalent(const Chain& c1, const Chain& c2);

/// Exact check of the relations defining w as a witness for c1 ~ c2.
bool verify_witness(const Chain& c1, const Chain& c2, const EquivalenceWitness& w);

struct DegreeVerdict {
  enum class Kind { MoebiusTwist, BinomialDegree, Excluded };
  Kind kind = Kind::Excluded;
  std::vector<int> ks;  // every k, 1 < k < m - 1, with C(m, k) = n
};

const char* to_string(DegreeVerdict::Kind k);

/// Possible degrees n of an indecomposable H with F ∘ X = H ∘ Y, F simple of
/// degree m >= 4.
DegreeVerdict left_factor_degree_filter(int m, int n);

Integer binomial(unsigned long m, unsigned long k);

/// Smallest prime p with p | C(m, k) and p ∤ m; 4 <= m, 1 < k < m - 1.
unsigned long binomial_prime_witness(unsigned long m, unsigned long k);

/// Largest prime factor by trial division; x >= 2.
Integer greatest_prime_factor(const Integer& x);

struct BinomialScan {
  unsigned long pairs_checked = 0;
  std::vector<std::pair<unsigned long, unsigned long>> failures;  // (m, k), increasing
};

/// binomial_prime_witness for 1 < k < m - 1 and m_lo <= m <= m_hi, each
/// witness confirmed by big-integer divisibility of C(m, k). Rows are split
/// over threads; failures are reported in (m, k) order.
BinomialScan scan_binomial_witnesses(unsigned long m_lo, unsigned long m_hi);

struct Lemma73Check {
  bool hypothesis = false;  // (sigma ∘ F)^{∘l} = F^{∘l}
  bool conclusion = false;  // sigma ∘ F^{∘l} = F^{∘l} ∘ sigma
};

Lemma73Check verify_lemma73(const RatFun& F, const Moebius& sigma, unsigned l);

struct SemiconjugacyResult {
  enum class Status { Found, SquareFails, PeelFailure };
  Status status = Status::PeelFailure;
  unsigned l = 0;
  Moebius nu;
};

const char* to_string(SemiconjugacyResult::Status s);

/// For F^{∘r} ∘ X = X ∘ G with F simple of degree >= 4: X = F^{∘l} ∘ nu and
/// G = nu^{-1} ∘ F^{∘r} ∘ nu, both verified exactly before returning Found.
SemiconjugacyResult semiconjugacy_normal_form(const RatFun& F, unsigned r, const RatFun& X, const RatFun& G);

struct SharedIterate {
  unsigned k = 0, l = 0, s = 0;  // F^{∘k} = G^{∘l}, deg G = (deg F)^s, k = s l
  std::optional<Moebius> mu;     // G = mu ∘ F^{∘s}
  bool mu_commutes = false;      // mu ∘ F^{∘sl} = F^{∘sl} ∘ mu
};

/// Smallest l <= max_l with F^{∘sl} = G^{∘l}; none if no relation in range.
std::optional<SharedIterate> classify_shared_iterate(const RatFun& F, const RatFun& G, unsigned max_l);

/// F^{∘k1} = F^{∘k2} ∘ G^{∘l}, with a degree gate before composing.
bool verify_eq_uu(const RatFun& F, const RatFun& G, unsigned k1, unsigned k2, unsigned l);

enum class CurveOrientation { GraphOverX, GraphOverY };

struct InvariantCurveCheck {
  bool conjugacy = false;        // F2^{∘d} = alpha ∘ F1^{∘d} ∘ alpha^{-1}
  bool nu_in_aut = false;        // nu ∘ F1^{∘d} = F1^{∘d} ∘ nu
  bool parametrization = false;  // the curve's parametrization is carried to itself
  bool holds() const { return conjugacy && nu_in_aut && parametrization; }
};

/// Graph over x: X1 = t, X2 = alpha ∘ nu ∘ F1^{∘s}. Graph over y:
/// X1 = nu ∘ F1^{∘s} ∘ alpha^{-1}, X2 = t.
InvariantCurveCheck invariant_curve_check(const RatFun& F1, const RatFun& F2, const Moebius& alpha, const Moebius& nu,
                                          unsigned s, unsigned d, CurveOrientation orientation);

}  // namespace ratdec
