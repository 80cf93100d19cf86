#include "ratdec/extended_point.hpp"

#include <cstdio>

namespace ratdec {

ExtendedPoint to_extended(const QPoint& p) {
  if (is_infinity(p)) return Infinity{};
  return std::get<Rational>(p);
}

QPoint to_qpoint(const ExtendedPoint& p) {
  if (is_infinity(p)) return Infinity{};
  if (is_rational(p)) return std::get<Rational>(p);
  throw std::invalid_argument("algebraic point where a rational point or infinity is required");
}

namespace {

int rank(const ExtendedPoint& p) { return is_rational(p) ? 0 : (is_algebraic(p) ? 1 : 2); }

std::strong_ordering compare_polys(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    auto o = compare(a[i], b[i]);
    if (o != 0) return o;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const ExtendedPoint& a, const ExtendedPoint& b) {
  const int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra <=> rb;
  if (ra == 0) return compare(std::get<Rational>(a), std::get<Rational>(b));
  if (ra == 2) return std::strong_ordering::equal;
  const auto& x = std::get<AlgebraicPoint>(a);
  const auto& y = std::get<AlgebraicPoint>(b);
  auto o = compare_polys(x.minpoly, y.minpoly);
  if (o != 0) return o;
  if (x.box.overlaps(y.box)) return std::strong_ordering::equal;
  return x.index <=> y.index;
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) { return compare(a, b) == 0; }

std::vector<AlgebraicPoint> algebraic_roots(const Poly& minpoly, unsigned bits) {
  std::vector<AlgebraicPoint> out;
  const Poly f = primitive_part(minpoly);
  auto roots = isolate_roots(f, bits);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    AlgebraicPoint p;
    p.minpoly = f;
    p.index = i;
    p.box = roots[i].box;
    p.label = "root " + std::to_string(i + 1) + " of " + to_string(f, 't');
    p.re_approx = roots[i].re_approx;
    p.im_approx = roots[i].im_approx;
    out.push_back(std::move(p));
  }
  return out;
}

std::string to_string(const ExtendedPoint& p) {
  if (is_infinity(p)) return "inf";
  if (is_rational(p)) return to_string(std::get<Rational>(p));
  const auto& a = std::get<AlgebraicPoint>(p);
  char buf[96];
  std::snprintf(buf, sizeof buf, " ~ %.12g%+.12gi", a.re_approx, a.im_approx);
  return a.label + buf;
}

}  // namespace ratdec
