#include "ratdec/factor.hpp"

#include "ratdec/poly_algorithms.hpp"

#include <algorithm>
#include <random>

namespace ratdec {

namespace {

// ---- arithmetic in F_p[x], p < 2^32, coefficients low-first ----

using FpPoly = std::vector<std::uint64_t>;

struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }

  static void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  FpPoly reduce(const std::vector<Integer>& f) const {
    FpPoly out(f.size());
    Integer r;
    for (std::size_t i = 0; i < f.size(); ++i) {
      mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
      out[i] = r.get_ui();
    }
    trim(out);
    return out;
  }

  FpPoly mul(const FpPoly& a, const FpPoly& b) const {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
  }

  FpPoly sub(FpPoly a, const FpPoly& b) const {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }

  std::pair<FpPoly, FpPoly> divmod(FpPoly a, const FpPoly& b) const {
    if (a.size() < b.size()) return {{}, a};
    const std::size_t db = b.size() - 1;
    FpPoly q(a.size() - db, 0);
    const std::uint64_t il = inv(b.back());
    for (std::size_t i = a.size(); i-- > db;) {
      if (!a[i]) continue;
      const std::uint64_t f = mul(a[i], il);
      q[i - db] = f;
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = sub(a[i - db + j], mul(f, b[j]));
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }

  FpPoly rem(const FpPoly& a, const FpPoly& b) const { return divmod(a, b).second; }

  FpPoly monic(FpPoly a) const {
    if (a.empty()) return a;
    const std::uint64_t il = inv(a.back());
    for (auto& c : a) c = mul(c, il);
    return a;
  }

  FpPoly gcd(FpPoly a, FpPoly b) const {
    while (!b.empty()) {
      FpPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// s with s*a = 1 mod b (a, b coprime).
  FpPoly inverse_mod(const FpPoly& a, const FpPoly& b) const {
    FpPoly r0 = b, r1 = rem(a, b), s0, s1{1};
    while (r1.size() > 1) {
      auto [q, r] = divmod(r0, r1);
      FpPoly s2 = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    const std::uint64_t il = inv(r1.at(0));
    for (auto& c : s1) c = mul(c, il);
    return rem(s1, b);
  }

  FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
    FpPoly r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }

  FpPoly derivative(const FpPoly& a) const {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p);
    trim(d);
    return d;
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree factorization of a monic squarefree f: pairs (product, degree).
std::vector<std::pair<FpPoly, int>> distinct_degree(const Fp& F, FpPoly f) {
  std::vector<std::pair<FpPoly, int>> out;
  const FpPoly x{0, 1};
  FpPoly w = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    w = F.powmod(w, Integer(static_cast<unsigned long>(F.p)), f);
    FpPoly g = F.gcd(f, F.sub(w, x));
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = F.divmod(f, g).first;
      w = F.rem(w, f);
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
void equal_degree(const Fp& F, const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coef(0, F.p - 1);
  for (;;) {
    FpPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    Fp::trim(a);
    if (a.size() <= 1) continue;
    FpPoly b = F.powmod(a, e, f);
    if (b.empty()) continue;
    b[0] = F.sub(b[0], 1);
    Fp::trim(b);
    FpPoly g = F.gcd(f, b);
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// ---- arithmetic in (Z/M)[x] for Hensel lifting ----

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmod(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  return zmod(detail::mul_integer(a, b), m);
}

ZPoly zadd(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return zmod(std::move(a), m);
}

ZPoly zsub(ZPoly a, const ZPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zmod(std::move(a), m);
}

// Division by a monic b modulo m.
std::pair<ZPoly, ZPoly> zdivmod(ZPoly a, const ZPoly& b, const Integer& m) {
  if (a.size() < b.size()) return {{}, a};
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_fdiv_r(a[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (a[i] == 0) continue;
    q[i - db] = a[i];
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= q[i - db] * b[j];
  }
  a.resize(db);
  return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

ZPoly lift_fp(const FpPoly& a) {
  ZPoly z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = static_cast<unsigned long>(a[i]);
  return z;
}

// Lifts f = lc * prod(factors) from mod p to mod `target` (a power of p
// reached by repeated squaring). Returns monic lifted factors in input order.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, const Fp& F,
                               const Integer& target) {
  if (factors.size() == 1) {
    // f = lc * u with u monic: u = f / lc mod target.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), target.get_mpz_t());
    ZPoly u = f;
    for (auto& c : u) c *= inv;
    return {zmod(std::move(u), target)};
  }
  const std::size_t half = factors.size() / 2;
  FpPoly g_p{F.reduce({f.back()})[0]}, h_p{1};
  for (std::size_t i = 0; i < half; ++i) g_p = F.mul(g_p, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) h_p = F.mul(h_p, factors[i]);
  FpPoly s_p = F.inverse_mod(g_p, h_p);
  FpPoly t_p = F.divmod(F.sub(FpPoly{1}, F.mul(s_p, g_p)), h_p).first;

  ZPoly g = lift_fp(g_p), h = lift_fp(h_p), s = lift_fp(s_p), t = lift_fp(t_p);
  Integer m = static_cast<unsigned long>(F.p);
  while (m < target) {
    const Integer m2 = m * m;
    ZPoly e = zsub(zmod(f, m2), zmul(g, h, m2), m2);
    auto [q, r] = zdivmod(zmul(s, e, m2), h, m2);
    ZPoly g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
    ZPoly h2 = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{Integer(1)}, m2);
    auto [c, d] = zdivmod(zmul(s, b, m2), h2, m2);
    s = zsub(s, d, m2);
    t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  std::vector<ZPoly> out = hensel_lift(g, left, F, target);
  std::vector<ZPoly> rest = hensel_lift(h, right, F, target);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

Poly to_poly(const ZPoly& z) { return from_integer_coeffs(z); }

// Symmetric residue in (-m/2, m/2].
ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

// Primitive squarefree f with positive leading coefficient, degree >= 1.
std::vector<Poly> factor_squarefree(const Poly& fq) {
  if (fq.degree() == 1) return {fq};
  ZPoly f = to_integer_coeffs(fq);

  // Pick the prime (among a few good ones) giving the fewest modular factors.
  std::vector<std::pair<FpPoly, int>> best_ddf;
  std::uint64_t best_p = 0;
  std::size_t best_count = SIZE_MAX;
  int tried = 0;
  for (std::uint64_t p = 101; tried < 5; p += 2) {
    if (!is_prime(p)) continue;
    Fp F{p};
    FpPoly fp = F.reduce(f);
    if (fp.size() != f.size()) continue;
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    ++tried;
    auto ddf = distinct_degree(F, F.monic(fp));
    std::size_t count = 0;
    for (const auto& [g, d] : ddf) count += (g.size() - 1) / static_cast<std::size_t>(d);
    if (count < best_count) {
      best_count = count;
      best_ddf = std::move(ddf);
      best_p = p;
    }
    if (count == 1) return {fq};
  }
  Fp F{best_p};
  std::mt19937_64 rng(0x5eed);
  std::vector<FpPoly> modular;
  for (const auto& [g, d] : best_ddf) equal_degree(F, g, d, rng, modular);

  // Coefficient bound for lc * (any factor): |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  const Integer lc = f.back();
  Integer bound = 2 * abs(lc) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);
  Integer target = static_cast<unsigned long>(best_p);
  while (target <= bound) target *= target;

  std::vector<ZPoly> lifted = hensel_lift(f, modular, F, target);

  // Recombination over subsets of increasing size.
  std::vector<Poly> out;
  Poly rest = fq;
  std::vector<ZPoly> pool = std::move(lifted);
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      ZPoly g{rest.leading().get_num()};
      for (std::size_t i : idx) g = zmul(g, pool[i], target);
      Poly cand = primitive_part(to_poly(symmetric(g, target)));
      if (cand.degree() > 0) {
        auto [quo, rem] = divmod(rest, cand);
        if (rem.is_zero()) {
          out.push_back(cand);
          rest = primitive_part(quo);
          std::vector<ZPoly> keep;
          for (std::size_t i = 0, k = 0; i < pool.size(); ++i) {
            if (k < size && idx[k] == i) {
              ++k;
              continue;
            }
            keep.push_back(pool[i]);
          }
          pool = std::move(keep);
          found = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) out.push_back(primitive_part(rest));
  return out;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<IrreducibleFactor> factor(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  std::vector<IrreducibleFactor> out;
  for (const auto& sf : squarefree_decomposition(p))
    for (Poly& g : factor_squarefree(primitive_part(sf.factor))) out.push_back({std::move(g), sf.multiplicity});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.factor, b.factor); });
  return out;
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  Poly sq = squarefree_part(p);
  for (Poly& g : factor_squarefree(primitive_part(sq)))
    if (g.degree() == 1) roots.push_back(-g[0] / g[1]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool is_irreducible(const Poly& p) {
  if (p.degree() < 1) return false;
  if (!is_squarefree(p)) return false;
  return factor_squarefree(primitive_part(p)).size() == 1;
}

}  // namespace ratdec
