#include "ratdec/numeric_roots.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace ratdec {

namespace {

// Minimal RAII wrapper around mpfr_t. Precision is explicit per value, so
// concurrent callers never share state.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(mpfr_prec_t prec, const Rational& q) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  Real(mpfr_prec_t prec, long x) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(a.prec());
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real scaled(long e) const {
    Real r(prec());
    mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }
  /// Exact value as a rational.
  Rational to_rational() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b) {
  Real n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

Real abs(const Complex& z) {
  Real r(z.re.prec());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }

// p(z) and p'(z) by Horner.
std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& c, const Complex& z) {
  const mpfr_prec_t prec = z.re.prec();
  Complex p = c.back(), dp(prec);
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

// Aberth-Ehrlich iteration for all roots of sum c_i z^i (c.back() != 0).
std::vector<Complex> aberth(const std::vector<Complex>& c, mpfr_prec_t prec, int max_iter) {
  const std::size_t n = c.size() - 1;
  // Initial points on a circle of radius given by the Fujiwara-style bound.
  Real lead = abs(c.back());
  Real radius(prec, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Real ratio = abs(c[i]) / lead;
    if (ratio.is_zero()) continue;
    Real root(prec);
    mpfr_rootn_ui(root.get(), ratio.get(), static_cast<unsigned long>(n - i), MPFR_RNDN);
    radius = max(radius, root);
  }
  if (radius.is_zero()) radius = Real(prec, 1);
  std::vector<Complex> z;
  z.reserve(n);
  Real pi(prec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  for (std::size_t k = 0; k < n; ++k) {
    Real angle = pi * Real(prec, 2 * static_cast<long>(k) + 1) / Real(prec, static_cast<long>(n)) + Real(prec, Rational(2, 5));
    Real cs(prec), sn(prec);
    mpfr_sin_cos(sn.get(), cs.get(), angle.get(), MPFR_RNDN);
    z.emplace_back(radius * cs, radius * sn);
  }
  const long stop_exp = -static_cast<long>(prec) + 8;
  const Real one(prec, 1);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (is_zero(p)) continue;
      Complex ratio = p / dp;
      Complex sum(prec);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum = sum + Complex(one, Real(prec)) / (z[i] - z[j]);
      Complex w = ratio / (Complex(one, Real(prec)) - ratio * sum);
      z[i] = z[i] - w;
      Real scale = max(one, abs(z[i]));
      if (abs(w) > scale.scaled(stop_exp)) converged = false;
    }
    if (converged) break;
  }
  return z;
}

std::vector<Complex> to_complex(const Poly& p, mpfr_prec_t prec) {
  std::vector<Complex> c;
  c.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) c.emplace_back(Real(prec, p[i]), Real(prec));
  return c;
}

Rational pow2(long k) {
  Integer m = 1;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  return k >= 0 ? Rational(m) : Rational(1) / Rational(m);
}

// Rounds x down (or up) onto the grid 2^-k.
Rational round_to_grid(const Real& x, long k, bool up) {
  Real s = x.scaled(k);
  Integer zi;
  mpfr_get_z(zi.get_mpz_t(), s.get(), up ? MPFR_RNDU : MPFR_RNDD);
  return Rational(zi) / pow2(k);
}

std::optional<std::vector<IsolatedRoot>> try_isolate(const Poly& p, mpfr_prec_t prec) {
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<Complex> c = to_complex(p, prec);
  std::vector<Complex> z = aberth(c, prec, 200 + 20 * static_cast<int>(n));

  // Inclusion radii: n * |p(z_i)| / |lc * prod (z_i - z_j)|, with |p(z_i)|
  // inflated by a bound on the Horner rounding error.
  const Real unit = Real(prec, 1).scaled(-static_cast<long>(prec) + 2);
  std::vector<Real> radius;
  for (std::size_t i = 0; i < n; ++i) {
    auto [val, dv] = eval_with_derivative(c, z[i]);
    Real az = abs(z[i]);
    Real mag(prec), zpow(prec, 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      mag = mag + abs(c[k]) * zpow;
      zpow = zpow * az;
    }
    Real err = mag * unit * Real(prec, 2 * static_cast<long>(n) + 4);
    Real denom = abs(c.back());
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * abs(z[i] - z[j]);
    if (denom.is_zero()) return std::nullopt;
    radius.push_back(Real(prec, static_cast<long>(n)) * (abs(val) + err) / denom * Real(prec, Rational(9, 8)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(abs(z[i] - z[j]) > (radius[i] + radius[j]).scaled(1))) return std::nullopt;

  std::vector<IsolatedRoot> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Real& r = radius[i];
    const long k = 4 - static_cast<long>(mpfr_get_exp(r.get()));
    Real h = r * Real(prec, Rational(5, 4));
    IsolatedRoot root;
    root.box.re_lo = round_to_grid(z[i].re - h, k, false);
    root.box.re_hi = round_to_grid(z[i].re + h, k, true);
    root.box.im_lo = round_to_grid(z[i].im - h, k, false);
    root.box.im_hi = round_to_grid(z[i].im + h, k, true);
    root.re = z[i].re.to_rational();
    root.im = z[i].im.to_rational();
    root.re_approx = z[i].re.to_double();
    root.im_approx = z[i].im.to_double();
    out.push_back(std::move(root));
  }
  // Canonical order: by real part; runs with overlapping real projections
  // (e.g. conjugate pairs) are ordered by imaginary part.
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.re < b.re; });
  for (std::size_t i = 0; i < out.size();) {
    std::size_t j = i + 1;
    Rational hi = out[i].box.re_hi;
    while (j < out.size() && out[j].box.re_lo <= hi) {
      hi = std::max(hi, out[j].box.re_hi);
      ++j;
    }
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(i), out.begin() + static_cast<std::ptrdiff_t>(j),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.im < b.im; });
    i = j;
  }
  return out;
}

}  // namespace

unsigned default_precision_bits() {
  if (const char* env = std::getenv("RATDEC_PRECISION")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 53 && v <= 1u << 20) return static_cast<unsigned>(v);
  }
  return 256;
}

std::vector<IsolatedRoot> isolate_roots(const Poly& p, unsigned bits) {
  if (p.degree() < 1) throw std::invalid_argument("isolate_roots: degree must be at least 1");
  for (unsigned b = bits, attempt = 0; attempt < 3; ++attempt, b *= 2)
    if (auto roots = try_isolate(p, static_cast<mpfr_prec_t>(b))) return *std::move(roots);
  throw PrecisionExhausted("root isolation failed up to " + std::to_string(bits * 4) +
                           " bits; raise RATDEC_PRECISION");
}

std::vector<unsigned> numeric_fiber_multiplicities(const Poly& P, const Poly& Q, const Poly& minpoly,
                                                   const RationalBox& c_box, unsigned bits) {
  const mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits);
  // High-precision value of c: the isolated root of minpoly whose center lies in c_box.
  const IsolatedRoot* chosen = nullptr;
  auto roots = isolate_roots(minpoly, bits);
  for (const auto& r : roots)
    if (c_box.contains(r.re, r.im)) {
      if (chosen) throw PrecisionExhausted("algebraic value box is not isolating");
      chosen = &r;
    }
  if (!chosen) throw PrecisionExhausted("no root of the minimal polynomial in the given box");
  const Complex cval(Real(prec, chosen->re), Real(prec, chosen->im));

  const std::size_t m = std::max(P.size(), Q.size());
  std::vector<Complex> coeffs;
  for (std::size_t i = 0; i < m; ++i)
    coeffs.push_back(Complex(Real(prec, P.coefficient(i)), Real(prec)) -
                     cval * Complex(Real(prec, Q.coefficient(i)), Real(prec)));
  while (!coeffs.empty() && is_zero(coeffs.back())) coeffs.pop_back();
  if (coeffs.size() < 2) throw PrecisionExhausted("degenerate fiber polynomial");
  const std::size_t n = coeffs.size() - 1;
  std::vector<Complex> z = aberth(coeffs, prec, 400 + 40 * static_cast<int>(n));

  // Single-linkage clustering below `tight`; anything between tight and
  // loose is ambiguous.
  const long tight_exp = -static_cast<long>(bits / (2 * n + 2));
  const long loose_exp = -static_cast<long>(bits / (8 * n + 8));
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Real one(prec, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Real scale = max(one, max(abs(z[i]), abs(z[j])));
      Real d = abs(z[i] - z[j]);
      if (d < scale.scaled(tight_exp)) parent[find(i)] = find(j);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      Real scale = max(one, max(abs(z[i]), abs(z[j])));
      if (abs(z[i] - z[j]) < scale.scaled(loose_exp))
        throw PrecisionExhausted("ambiguous root clusters at " + std::to_string(bits) + " bits; raise RATDEC_PRECISION");
    }
  std::vector<unsigned> count(n, 0);
  for (std::size_t i = 0; i < n; ++i) ++count[find(i)];
  std::vector<unsigned> out;
  for (unsigned c : count)
    if (c > 0) out.push_back(c);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace ratdec
