#include "ratdec/ramification.hpp"

#include "ratdec/factor.hpp"
#include "ratdec/poly_algorithms.hpp"

#include <algorithm>
#include <numeric>

namespace ratdec {

namespace {

void require_degree(const RatFun& F, int min_degree, const char* what) {
  if (F.degree() < min_degree)
    throw std::invalid_argument(std::string(what) + ": degree must be at least " + std::to_string(min_degree));
}

// Order of vanishing of h at z0.
int root_order(const Poly& h, const Rational& z0) {
  Poly s = shifted(h, z0);
  int k = 0;
  while (static_cast<std::size_t>(k) < s.size() && s[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

// Multiplicities of F over a rational value or infinity.
Multiset rational_fiber(const RatFun& F, const QPoint& c) {
  const int m = F.degree();
  Poly h = is_infinity(c) ? F.den() : F.num() - F.den() * std::get<Rational>(c);
  Multiset out;
  for (const auto& sf : squarefree_decomposition(h))
    for (int i = 0; i < sf.factor.degree(); ++i) out.push_back(sf.multiplicity);
  const int deficit = m - std::max(h.degree(), 0);
  if (deficit > 0) out.push_back(static_cast<unsigned>(deficit));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Multiset algebraic_fiber_exact(const RatFun& F, const AlgebraicPoint& c) {
  auto field = std::make_shared<const NumberField>(c.minpoly, "t");
  const NfElem t = NfElem::generator(field);
  NfPoly h = to_nf(F.num(), field) - to_nf(F.den(), field) * t;
  Multiset out;
  for (const auto& sf : squarefree_decomposition(h))
    for (int i = 0; i < sf.factor.degree(); ++i) out.push_back(sf.multiplicity);
  const int deficit = F.degree() - std::max(h.degree(), 0);
  if (deficit > 0) out.push_back(static_cast<unsigned>(deficit));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool has_ramification(const Multiset& m) { return !m.empty() && m.front() >= 2; }

QPoint candidate(int k) {
  if (k == 0) return Infinity{};
  const long j = k - 1;
  return Rational(j % 2 == 1 ? (j + 1) / 2 : -j / 2);
}

void require_rational_points(const std::vector<std::pair<ExtendedPoint, unsigned>>& pts) {
  for (const auto& [z, nu] : pts)
    if (is_algebraic(z)) throw UnsupportedAlgebraicPoint("orbifold points must be rational or infinity");
}

}  // namespace

void Orbifold::validate() const {
  for (std::size_t i = 0; i < singular_points.size(); ++i) {
    if (singular_points[i].second < 2) throw std::invalid_argument("orbifold: nu must be at least 2");
    for (std::size_t j = i + 1; j < singular_points.size(); ++j)
      if (singular_points[i].first == singular_points[j].first)
        throw std::invalid_argument("orbifold: repeated point");
  }
}

unsigned Orbifold::nu(const ExtendedPoint& z) const {
  for (const auto& [p, n] : singular_points)
    if (p == z) return n;
  return 1;
}

int degree_at(const RatFun& F, const QPoint& z) {
  require_degree(F, 1, "degree_at");
  if (is_infinity(z)) return degree_at(compose(F, Moebius::inversion().as_ratfun()), QPoint(Rational(0)));
  const Rational& z0 = std::get<Rational>(z);
  QPoint v = eval(F, z);
  if (is_infinity(v)) return root_order(F.den(), z0);
  return root_order(F.num() - F.den() * std::get<Rational>(v), z0);
}

Poly critical_value_poly(const RatFun& F) {
  require_degree(F, 2, "critical_value_poly");
  const int m = F.degree();
  Poly w = wronskian(F);
  if (w.degree() < 2 * m - 2)
    throw DegenerateAtInfinity("Wronskian has degree " + std::to_string(w.degree()) + " < 2m-2 = " +
                               std::to_string(2 * m - 2) + "; apply normalize_infinity first");
  return resultant_pencil(w, F.num(), F.den(), static_cast<std::size_t>(2 * m - 2), static_cast<std::size_t>(m));
}

Poly finite_critical_value_poly(const RatFun& F) {
  require_degree(F, 2, "finite_critical_value_poly");
  Poly w = wronskian(F);
  return resultant_pencil(w, F.num(), F.den(), static_cast<std::size_t>(w.degree()),
                          static_cast<std::size_t>(F.degree()));
}

bool infinity_is_critical_point(const RatFun& F) { return degree_at(F, Infinity{}) >= 2; }

bool infinity_is_critical_value(const RatFun& F) {
  return has_ramification(rational_fiber(F, Infinity{}));
}

bool is_critical_value(const RatFun& F, const QPoint& c) { return has_ramification(rational_fiber(F, c)); }

Normalized normalize_infinity(const RatFun& F) {
  require_degree(F, 2, "normalize_infinity");
  QPoint p;
  for (int k = 0;; ++k) {
    p = candidate(k);
    if (degree_at(F, p) == 1) break;
  }
  const Moebius pre = is_infinity(p) ? Moebius() : Moebius(std::get<Rational>(p), Rational(1), Rational(1), Rational(0));
  const RatFun g = compose(F, pre);
  const QPoint v = eval(F, p);
  QPoint q;
  for (int k = 0;; ++k) {
    q = candidate(k);
    if (q == v) continue;
    if (!is_critical_value(g, q)) break;
  }
  const Moebius post =
      is_infinity(q) ? Moebius() : Moebius(Rational(0), Rational(1), Rational(1), -std::get<Rational>(q));
  return {compose(post, g), pre, post};
}

bool is_simple(const RatFun& F) {
  require_degree(F, 2, "is_simple");
  const int m = F.degree();
  Normalized n = normalize_infinity(F);
  if (wronskian(n.f).degree() != 2 * m - 2) return false;
  Poly r = critical_value_poly(n.f);
  return r.degree() == 2 * m - 2 && is_squarefree(r);
}

std::vector<ExtendedPoint> critical_values(const RatFun& F, unsigned bits) {
  require_degree(F, 2, "critical_values");
  std::vector<ExtendedPoint> out;
  Poly r = finite_critical_value_poly(F);
  if (r.degree() >= 1) {
    for (const auto& f : factor(r)) {
      if (f.factor.degree() == 1) {
        out.emplace_back(Rational(-f.factor[0] / f.factor[1]));
      } else {
        for (auto& a : algebraic_roots(f.factor, bits)) out.emplace_back(std::move(a));
      }
    }
  }
  if (infinity_is_critical_point(F)) out.push_back(to_extended(eval(F, QPoint(Infinity{}))));
  if (infinity_is_critical_value(F)) out.emplace_back(Infinity{});
  std::sort(out.begin(), out.end(), canonical_less);
  out.erase(std::unique(out.begin(), out.end(), [](const auto& a, const auto& b) { return a == b; }), out.end());
  return out;
}

Multiset portrait_over(const RatFun& F, const ExtendedPoint& c, PortraitMode mode, unsigned bits) {
  require_degree(F, 1, "portrait_over");
  if (!is_algebraic(c)) return rational_fiber(F, to_qpoint(c));
  const auto& a = std::get<AlgebraicPoint>(c);
  if (mode == PortraitMode::Exact) return algebraic_fiber_exact(F, a);
  return numeric_fiber_multiplicities(F.num(), F.den(), a.minpoly, a.box, bits);
}

Portrait full_portrait(const RatFun& F, PortraitMode mode, unsigned bits) {
  Portrait p;
  p.degree = F.degree();
  for (auto& c : critical_values(F, bits)) {
    Multiset m = portrait_over(F, c, mode, bits);
    p.entries.push_back({std::move(c), std::move(m)});
  }
  return p;
}

int riemann_hurwitz_sum(const Portrait& p) {
  int s = 0;
  for (const auto& e : p.entries)
    for (unsigned b : e.multiplicities) s += static_cast<int>(b) - 1;
  return s;
}

JointSupport joint_support(const RatFun& H, const RatFun& F, unsigned bits) {
  JointSupport js;
  js.support = critical_values(H, bits);
  for (auto& c : critical_values(F, bits)) js.support.push_back(std::move(c));
  std::sort(js.support.begin(), js.support.end(), canonical_less);
  js.support.erase(
      std::unique(js.support.begin(), js.support.end(), [](const auto& a, const auto& b) { return a == b; }),
      js.support.end());
  for (const auto& c : js.support) {
    js.h_portraits.push_back(portrait_over(H, c, PortraitMode::Exact, bits));
    js.f_portraits.push_back(portrait_over(F, c, PortraitMode::Exact, bits));
  }
  return js;
}

Rational orbifold_euler(const Orbifold& o) {
  o.validate();
  Rational chi = 2;
  for (const auto& [z, nu] : o.singular_points) chi += Rational(1, nu) - 1;
  return chi;
}

bool check_minimal_holomorphic(const RatFun& A, const Orbifold& o1, const Orbifold& o2) {
  require_degree(A, 1, "check_minimal_holomorphic");
  o1.validate();
  o2.validate();
  require_rational_points(o1.singular_points);
  require_rational_points(o2.singular_points);
  auto holds = [](unsigned nu2, unsigned nu1, unsigned d) { return nu2 == nu1 * std::gcd(d, nu2); };

  for (const auto& [z, nu1] : o1.singular_points) {
    const QPoint zq = to_qpoint(z);
    const unsigned nu2 = o2.nu(to_extended(eval(A, zq)));
    if (!holds(nu2, nu1, static_cast<unsigned>(degree_at(A, zq)))) return false;
  }
  // Preimages of the singular points of O2; irrational preimages carry nu1 = 1.
  for (const auto& [w, nu2] : o2.singular_points) {
    const QPoint wq = to_qpoint(w);
    Poly h = is_infinity(wq) ? A.den() : A.num() - A.den() * std::get<Rational>(wq);
    for (const auto& sf : squarefree_decomposition(h)) {
      auto roots = rational_roots(sf.factor);
      for (const auto& r : roots)
        if (!holds(nu2, o1.nu(r), sf.multiplicity)) return false;
      if (sf.factor.degree() > static_cast<int>(roots.size()) && !holds(nu2, 1, sf.multiplicity)) return false;
    }
    const int deficit = A.degree() - std::max(h.degree(), 0);
    if (deficit > 0 && !holds(nu2, o1.nu(Infinity{}), static_cast<unsigned>(deficit))) return false;
  }
  return true;
}

LattesCheck lattes_obstruction(const RatFun& F, const std::vector<ExtendedPoint>& points) {
  const int m = F.degree();
  if (m < 4 || !is_simple(F)) throw std::invalid_argument("lattes_obstruction: F must be simple of degree >= 4");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (is_algebraic(points[i])) throw UnsupportedAlgebraicPoint("lattes_obstruction: points must be rational or inf");
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("lattes_obstruction: points must be distinct");
  }
  int count = 0;
  for (const auto& c : points) {
    Multiset fiber = rational_fiber(F, to_qpoint(c));
    count += static_cast<int>(std::count(fiber.begin(), fiber.end(), 1u));
  }
  const int bound = static_cast<int>(points.size()) * (m - 2);
  return {count, bound, count >= bound};
}

std::string to_string(const Multiset& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + "}";
}

}  // namespace ratdec
