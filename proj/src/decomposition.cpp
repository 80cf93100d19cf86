#include "ratdec/decomposition.hpp"

#include "ratdec/factor.hpp"
#include "ratdec/linear_algebra.hpp"
#include "ratdec/poly_algorithms.hpp"
#include "ratdec/ramification.hpp"

#include <algorithm>
#include <thread>

namespace ratdec {

namespace {

using Series = std::vector<Rational>;

// 0, 1, -1, 2, -2, ...
Rational sample_point(long i) { return Rational(i % 2 == 1 ? (i + 1) / 2 : -i / 2); }

Series mul_trunc(const Series& a, const Series& b, std::size_t n) {
  Series c(n, Rational(0));
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series compose_trunc(const Poly& p, const Series& s, std::size_t n) {
  Series acc(n, Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul_trunc(acc, s, n);
    acc[0] += p[static_cast<std::size_t>(i)];
  }
  return acc;
}

struct PeelSetup {
  Rational z0;
  Poly fiber;  // Xden(z0) P - Xnum(z0) Q: degree m, squarefree
};

// A sample point where X is finite, X(z0) is not F(inf) and not a critical
// value of F. All but finitely many points qualify; the bound below exceeds
// the number of bad ones.
std::optional<PeelSetup> choose_sample(const RatFun& X, const RatFun& F) {
  const int m = F.degree();
  const long limit = (2L * m + 2) * X.degree() + 2;
  for (long i = 0; i < limit; ++i) {
    const Rational z0 = sample_point(i);
    const Rational a = X.den()(z0);
    if (a == 0) continue;
    const Rational b = X.num()(z0);
    Poly h = F.num() * a - F.den() * b;
    if (h.degree() != m || !is_squarefree(h)) continue;
    return PeelSetup{z0, std::move(h)};
  }
  return std::nullopt;
}

// The unique Y with Y(z0) = w0 and F(Y) = X as power series in t = z - z0,
// to n terms; the fiber root w0 must be simple.
Series lift_branch(const RatFun& X, const RatFun& F, const Rational& z0, const Rational& w0, std::size_t n) {
  const Poly a = shifted(X.den(), z0), b = shifted(X.num(), z0);
  const Rational hw = a.coefficient(0) * derivative(F.num())(w0) - b.coefficient(0) * derivative(F.den())(w0);
  Series s(n, Rational(0));
  s[0] = w0;
  for (std::size_t i = 1; i < n; ++i) {
    const Series ps = compose_trunc(F.num(), s, i + 1), qs = compose_trunc(F.den(), s, i + 1);
    Rational e = 0;
    for (std::size_t j = 0; j <= i; ++j) e += a.coefficient(j) * ps[i - j] - b.coefficient(j) * qs[i - j];
    s[i] = -e / hw;
  }
  return s;
}

// (k, k) Pade approximant of s (2k + 1 terms), if any.
std::optional<std::pair<Poly, Poly>> pade(const Series& s, int k) {
  const auto ku = static_cast<std::size_t>(k);
  Matrix<Rational> mat(2 * ku + 1, 2 * ku + 2);
  for (std::size_t j = 0; j <= 2 * ku; ++j) {
    if (j <= ku) mat(j, j) = 1;
    for (std::size_t i = 0; i <= std::min(j, ku); ++i) mat(j, ku + 1 + i) = -s[j - i];
  }
  auto basis = nullspace(std::move(mat));
  if (basis.empty()) return std::nullopt;
  const auto& v = basis.front();
  Poly num(std::vector<Rational>(v.begin(), v.begin() + static_cast<long>(ku) + 1));
  Poly den(std::vector<Rational>(v.begin() + static_cast<long>(ku) + 1, v.end()));
  if (den.is_zero()) return std::nullopt;
  return std::make_pair(std::move(num), std::move(den));
}

void require_nonconstant(const RatFun& f, const char* what) {
  if (f.is_constant()) throw std::invalid_argument(std::string(what) + ": function must be nonconstant");
}

Integer upow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

std::vector<unsigned long> primes_up_to(unsigned long n) {
  std::vector<bool> sieve(n + 1, true);
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p <= n; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (unsigned long q = p * p; q <= n; q += p) sieve[q] = false;
  }
  return out;
}

// Exponent of p in C(m, k) by Legendre's formula.
unsigned long binomial_valuation(unsigned long m, unsigned long k, unsigned long p) {
  unsigned long v = 0;
  for (unsigned long pp = p; pp <= m; pp *= p) {
    v += m / pp - k / pp - (m - k) / pp;
    if (pp > m / p) break;
  }
  return v;
}

}  // namespace

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::CertifiedAbsent: return "certified-absent";
    case SearchStatus::SearchIncomplete: return "search-incomplete";
  }
  return "?";
}

const char* to_string(DegreeVerdict::Kind k) {
  switch (k) {
    case DegreeVerdict::Kind::MoebiusTwist: return "MoebiusTwist";
    case DegreeVerdict::Kind::BinomialDegree: return "BinomialDegree";
    case DegreeVerdict::Kind::Excluded: return "Excluded";
  }
  return "?";
}

const char* to_string(SemiconjugacyResult::Status s) {
  switch (s) {
    case SemiconjugacyResult::Status::Found: return "found";
    case SemiconjugacyResult::Status::SquareFails: return "commutation-square-fails";
    case SemiconjugacyResult::Status::PeelFailure: return "peel-failure";
  }
  return "?";
}

RatFun chain_compose(const Chain& c) {
  if (c.factors.empty()) throw std::invalid_argument("chain_compose: empty chain");
  RatFun acc = c.factors.front();
  for (std::size_t i = 1; i < c.factors.size(); ++i) acc = compose(c.factors[i], acc);
  return acc;
}

std::optional<Moebius> solve_post_moebius(const RatFun& G, const RatFun& F) {
  if (F.is_constant() || G.degree() != F.degree()) return std::nullopt;
  // G_num (cP + dQ) - G_den (aP + bQ) = 0, linear in (a, b, c, d).
  const Poly cols[4] = {-(G.den() * F.num()), -(G.den() * F.den()), G.num() * F.num(), G.num() * F.den()};
  std::size_t rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.size());
  Matrix<Rational> mat(rows, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) mat(i, j) = cols[j][i];
  for (const auto& v : nullspace(std::move(mat))) {
    if (v[0] * v[3] - v[1] * v[2] == 0) continue;
    Moebius nu(v[0], v[1], v[2], v[3]);
    if (compose(nu, F) == G) return nu;
  }
  return std::nullopt;
}

std::vector<RatFun> peel_left_all(const RatFun& X, const RatFun& F) {
  require_nonconstant(X, "peel_left");
  require_nonconstant(F, "peel_left");
  const int m = F.degree();
  if (X.degree() % m != 0) return {};
  const int k = X.degree() / m;
  auto setup = choose_sample(X, F);
  if (!setup) throw std::logic_error("peel_left: no admissible sample point");
  // Candidates in the order 0, 1, -1, 2, -2, ...: by |w0|, positive first.
  auto roots = rational_roots(setup->fiber);
  std::stable_sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
    const int c = cmp(abs(x), abs(y));
    return c != 0 ? c < 0 : x > y;
  });
  std::vector<RatFun> out;
  for (const Rational& w0 : roots) {
    const Series s = lift_branch(X, F, setup->z0, w0, static_cast<std::size_t>(2 * k + 1));
    auto pq = pade(s, k);
    if (!pq) continue;
    RatFun y(shifted(pq->first, Rational(-setup->z0)), shifted(pq->second, Rational(-setup->z0)));
    if (y.degree() != k || !(compose(F, y) == X)) continue;
    out.push_back(std::move(y));
  }
  return out;
}

SearchResult<RatFun> peel_left(const RatFun& X, const RatFun& F) {
  auto all = peel_left_all(X, F);
  if (all.empty()) return {SearchStatus::CertifiedAbsent, std::nullopt};
  return {SearchStatus::Found, std::move(all.front())};
}

std::vector<Moebius> solve_pre_moebius_all(const RatFun& G, const RatFun& F) {
  if (G.degree() != F.degree()) return {};
  std::vector<Moebius> out;
  for (const auto& y : peel_left_all(G, F)) out.push_back(*Moebius::from_ratfun(y));
  return out;
}

SearchResult<Moebius> solve_pre_moebius(const RatFun& G, const RatFun& F) {
  auto all = solve_pre_moebius_all(G, F);
  if (all.empty()) return {SearchStatus::CertifiedAbsent, std::nullopt};
  return {SearchStatus::Found, all.front()};
}

std::optional<EquivalenceWitness> chains_equivalent(const Chain& c1, const Chain& c2) {
  const auto& f = c1.factors;
  const auto& g = c2.factors;
  if (f.empty() || f.size() != g.size()) return std::nullopt;
  const std::size_t r = f.size();
  EquivalenceWitness w;
  if (r == 1) {
    if (f[0] == g[0]) return w;
    return std::nullopt;
  }
  // mu_i ∘ G_i = F_i ∘ mu_{i-1}, so each mu_i is a post-composition factor.
  auto mu = solve_post_moebius(f[0], g[0]);
  if (!mu) return std::nullopt;
  w.mus.push_back(*mu);
  for (std::size_t i = 1; i + 1 < r; ++i) {
    mu = solve_post_moebius(compose(f[i], w.mus.back()), g[i]);
    if (!mu) return std::nullopt;
    w.mus.push_back(*mu);
  }
  if (!(g[r - 1] == compose(f[r - 1], w.mus.back()))) return std::nullopt;
  return w;
}

bool verify_witness(const Chain& c1, const Chain& c2, const EquivalenceWitness& w) {
  const auto& f = c1.factors;
  const auto& g = c2.factors;
  if (f.empty() || f.size() != g.size() || w.mus.size() + 1 != f.size()) return false;
  const std::size_t r = f.size();
  if (r == 1) return f[0] == g[0];
  if (!(g[0] == compose(w.mus[0].inverse(), f[0]))) return false;
  for (std::size_t i = 1; i + 1 < r; ++i)
    if (!(g[i] == compose(w.mus[i].inverse(), compose(f[i], w.mus[i - 1])))) return false;
  return g[r - 1] == compose(f[r - 1], w.mus[r - 2]);
}

DegreeVerdict left_factor_degree_filter(int m, int n) {
  if (m < 4 || n < 2) throw std::invalid_argument("left_factor_degree_filter: need m >= 4 and n >= 2");
  DegreeVerdict v;
  if (n == m) {
    v.kind = DegreeVerdict::Kind::MoebiusTwist;
    return v;
  }
  for (int k = 2; k < m - 1; ++k)
    if (binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k)) == n) v.ks.push_back(k);
  v.kind = v.ks.empty() ? DegreeVerdict::Kind::Excluded : DegreeVerdict::Kind::BinomialDegree;
  return v;
}

Integer binomial(unsigned long m, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), m, k);
  return r;
}

unsigned long binomial_prime_witness(unsigned long m, unsigned long k) {
  if (m < 4 || k < 2 || k + 2 > m) throw std::invalid_argument("binomial_prime_witness: need m >= 4, 1 < k < m-1");
  for (unsigned long p : primes_up_to(m))
    if (m % p != 0 && binomial_valuation(m, k, p) > 0) return p;
  throw std::logic_error("binomial_prime_witness: no witness for C(" + std::to_string(m) + "," + std::to_string(k) +
                         ")");
}

Integer greatest_prime_factor(const Integer& x) {
  if (x < 2) throw std::invalid_argument("greatest_prime_factor: x must be at least 2");
  Integer y = x, best = 1;
  for (unsigned long d = 2; Integer(d) * d <= y; ++d) {
    if (mpz_divisible_ui_p(y.get_mpz_t(), d) == 0) continue;
    best = d;
    do {
      mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), d);
    } while (mpz_divisible_ui_p(y.get_mpz_t(), d) != 0);
  }
  return y > 1 ? y : best;
}

BinomialScan scan_binomial_witnesses(unsigned long m_lo, unsigned long m_hi) {
  m_lo = std::max(m_lo, 4UL);
  if (m_hi < m_lo) return {};
  const unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::vector<BinomialScan> parts(threads);
  auto work = [&](unsigned t) {
    BinomialScan& out = parts[t];
    for (unsigned long m = m_lo + t; m <= m_hi; m += threads) {
      Integer c = 1;
      for (unsigned long k = 1; k + 2 <= m; ++k) {
        c *= m - k + 1;
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k);
        if (k < 2) continue;
        ++out.pairs_checked;
        bool ok = false;
        try {
          const unsigned long p = binomial_prime_witness(m, k);
          ok = m % p != 0 && mpz_divisible_ui_p(c.get_mpz_t(), p) != 0;
        } catch (const std::logic_error&) {
        }
        if (!ok) out.failures.emplace_back(m, k);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  BinomialScan total;
  for (auto& p : parts) {
    total.pairs_checked += p.pairs_checked;
    total.failures.insert(total.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::sort(total.failures.begin(), total.failures.end());
  return total;
}

Lemma73Check verify_lemma73(const RatFun& F, const Moebius& sigma, unsigned l) {
  if (l < 1) throw std::invalid_argument("verify_lemma73: l must be >= 1");
  const RatFun fl = iterate(F, l);
  Lemma73Check c;
  c.hypothesis = iterate(compose(sigma, F), l) == fl;
  c.conclusion = compose(sigma, fl) == compose(fl, sigma);
  return c;
}

SemiconjugacyResult semiconjugacy_normal_form(const RatFun& F, unsigned r, const RatFun& X, const RatFun& G) {
  if (r < 1) throw std::invalid_argument("semiconjugacy_normal_form: r must be >= 1");
  if (X.degree() < 2 || G.degree() < 2) throw std::invalid_argument("semiconjugacy_normal_form: deg X, deg G >= 2");
  if (F.degree() < 4 || !is_simple(F))
    throw std::invalid_argument("semiconjugacy_normal_form: F must be simple of degree >= 4");
  SemiconjugacyResult res;
  const RatFun fr = iterate(F, r);
  if (!(compose(fr, X) == compose(X, G))) {
    res.status = SemiconjugacyResult::Status::SquareFails;
    return res;
  }
  RatFun y = X;
  unsigned l = 0;
  while (y.degree() > 1) {
    auto p = peel_left(y, F);
    if (!p.value) return res;
    y = std::move(*p.value);
    ++l;
  }
  auto nu = Moebius::from_ratfun(y);
  if (!nu) return res;
  if (!(compose(iterate(F, l), *nu) == X) || !(compose(nu->inverse(), compose(fr, *nu)) == G)) return res;
  res.status = SemiconjugacyResult::Status::Found;
  res.l = l;
  res.nu = *nu;
  return res;
}

std::optional<SharedIterate> classify_shared_iterate(const RatFun& F, const RatFun& G, unsigned max_l) {
  if (F.degree() < 4 || !is_simple(F))
    throw std::invalid_argument("classify_shared_iterate: F must be simple of degree >= 4");
  if (G.degree() < 2) throw std::invalid_argument("classify_shared_iterate: deg G must be >= 2");
  const auto m = static_cast<unsigned long>(F.degree());
  unsigned s = 0;
  Integer d = 1;
  while (d < G.degree()) {
    d *= m;
    ++s;
  }
  if (d != G.degree()) return std::nullopt;
  const RatFun fs = iterate(F, s);
  RatFun fk = fs, gl = G;
  for (unsigned l = 1; l <= max_l; ++l) {
    if (l > 1) {
      fk = compose(fs, fk);
      gl = compose(G, gl);
    }
    if (!(fk == gl)) continue;
    SharedIterate out{s * l, l, s, solve_post_moebius(G, fs), false};
    if (out.mu) out.mu_commutes = compose(*out.mu, fk) == compose(fk, *out.mu);
    return out;
  }
  return std::nullopt;
}

bool verify_eq_uu(const RatFun& F, const RatFun& G, unsigned k1, unsigned k2, unsigned l) {
  if (k1 < 1 || l < 1) throw std::invalid_argument("verify_eq_uu: k1, l must be >= 1");
  const auto m = static_cast<unsigned long>(F.degree()), g = static_cast<unsigned long>(G.degree());
  if (upow(m, k1) != upow(m, k2) * upow(g, l)) return false;
  return iterate(F, k1) == compose(iterate0(F, k2), iterate(G, l));
}

InvariantCurveCheck invariant_curve_check(const RatFun& F1, const RatFun& F2, const Moebius& alpha, const Moebius& nu,
                                          unsigned s, unsigned d, CurveOrientation orientation) {
  if (d < 1) throw std::invalid_argument("invariant_curve_check: d must be >= 1");
  InvariantCurveCheck c;
  if (F1.degree() != F2.degree()) return c;
  const RatFun f1 = iterate(F1, d), f2 = iterate(F2, d);
  c.conjugacy = f2 == compose(alpha, compose(f1, alpha.inverse()));
  c.nu_in_aut = compose(nu, f1) == compose(f1, nu);
  const RatFun tail = compose(nu, iterate0(F1, s));
  if (orientation == CurveOrientation::GraphOverX) {
    const RatFun x2 = compose(alpha, tail);
    c.parametrization = compose(f2, x2) == compose(x2, f1);
  } else {
    const RatFun x1 = compose(tail, alpha.inverse());
    c.parametrization = compose(f1, x1) == compose(x1, f2);
  }
  return c;
}

}  // namespace ratdec
