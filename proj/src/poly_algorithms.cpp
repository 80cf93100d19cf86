#include "ratdec/poly_algorithms.hpp"

namespace ratdec {

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return {};
  std::vector<Rational> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      if (xs[i] == xs[i - k]) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
    }
  Poly out;
  for (std::size_t i = n; i-- > 0;) {
    out = out * Poly(std::vector<Rational>{-xs[i], Rational(1)}) + Poly::constant(dd[i]);
  }
  return out;
}

Poly resultant_pencil(const Poly& a, const Poly& b, const Poly& c, std::size_t da, std::size_t db) {
  std::vector<Rational> xs, ys;
  xs.reserve(da + 1);
  ys.reserve(da + 1);
  for (std::size_t i = 0; i <= da; ++i) {
    Rational t(static_cast<long>(i));
    xs.push_back(t);
    ys.push_back(resultant(a, b - c * t, da, db));
  }
  return interpolate(xs, ys);
}

}  // namespace ratdec
