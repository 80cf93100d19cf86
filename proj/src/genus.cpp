#include "ratdec/genus.hpp"

#include <numeric>

namespace ratdec {

namespace {

void check_sums(const std::vector<Multiset>& portraits, int degree, const char* side) {
  if (degree < 1) throw PortraitMismatch(std::string(side) + " degree must be positive");
  for (const auto& m : portraits) {
    long s = 0;
    for (unsigned b : m) {
      if (b == 0) throw PortraitMismatch(std::string(side) + " multiplicities must be positive");
      s += b;
    }
    if (s != degree)
      throw PortraitMismatch(std::string(side) + " multiset " + to_string(m) + " does not sum to " +
                             std::to_string(degree));
  }
}

long gcd_sum(const Multiset& a, const Multiset& b) {
  long s = 0;
  for (unsigned x : a)
    for (unsigned y : b) s += std::gcd(x, y);
  return s;
}

void interpret(GenusReport& r, long constant) {
  // constant - 2g = raw
  const Rational twice_g = Rational(constant) - r.raw;
  if (twice_g.get_den() != 1 || twice_g.get_num() % 2 != 0) {
    r.non_integer_genus = true;
    return;
  }
  const Integer g = twice_g.get_num() / 2;
  if (g < 0) {
    r.negative_genus = true;
    return;
  }
  r.genus = g.get_si();
}

}  // namespace

bool portraits_riemann_hurwitz(const std::vector<Multiset>& portraits, int n) {
  long total = 0;
  for (const auto& m : portraits) total += static_cast<long>(m.size());
  return total == (static_cast<long>(portraits.size()) - 2) * n + 2;
}

GenusReport genus_fiber_product(const std::vector<Multiset>& h_portraits, const std::vector<Multiset>& f_portraits,
                                int n, int m) {
  if (h_portraits.size() != f_portraits.size())
    throw PortraitMismatch("H and F portraits must share the same support (" + std::to_string(h_portraits.size()) +
                           " vs " + std::to_string(f_portraits.size()) + " points)");
  check_sums(h_portraits, n, "H");
  check_sums(f_portraits, m, "F");
  const long r = static_cast<long>(h_portraits.size());
  long s = 0;
  for (std::size_t i = 0; i < h_portraits.size(); ++i) s += gcd_sum(h_portraits[i], f_portraits[i]);
  GenusReport rep;
  rep.curve = GenusReport::Curve::FiberProduct;
  rep.raw = Rational(s - static_cast<long>(m) * n * (r - 2));
  rep.riemann_hurwitz_consistent = portraits_riemann_hurwitz(h_portraits, n) && portraits_riemann_hurwitz(f_portraits, m);
  interpret(rep, 2);
  return rep;
}

GenusReport genus_diagonal(const std::vector<Multiset>& f_portraits, int m) {
  check_sums(f_portraits, m, "F");
  const long r = static_cast<long>(f_portraits.size());
  long s = 0;
  for (const auto& b : f_portraits) s += gcd_sum(b, b);
  GenusReport rep;
  rep.curve = GenusReport::Curve::Diagonal;
  rep.raw = Rational(s - (r - 2) * m * m);
  rep.riemann_hurwitz_consistent = portraits_riemann_hurwitz(f_portraits, m);
  interpret(rep, 4);
  return rep;
}

std::vector<Multiset> simple_portrait(int m) {
  if (m < 2) throw std::invalid_argument("simple_portrait: m must be at least 2");
  Multiset one(static_cast<std::size_t>(m - 1), 1);
  one[0] = 2;
  return std::vector<Multiset>(static_cast<std::size_t>(2 * m - 2), one);
}

Rational goo_genus_zero_criterion(const std::vector<Multiset>& h_portraits, int m) {
  if (m < 2) throw std::invalid_argument("goo_genus_zero_criterion: m must be at least 2");
  if (h_portraits.size() != static_cast<std::size_t>(2 * m - 2))
    throw PortraitMismatch("expected H-portraits over the " + std::to_string(2 * m - 2) +
                           " critical values of F, got " + std::to_string(h_portraits.size()));
  long v = 2L * m - 2;
  for (const auto& a : h_portraits) {
    long l = 0;
    for (unsigned x : a) l += (x % 2 == 0);
    v += l - static_cast<long>(a.size());
  }
  return Rational(v);
}

}  // namespace ratdec
