#include "doctest.h"
#include "test_support.hpp"

#include "ratdec/genus.hpp"

using namespace ratdec;
using namespace ratdec::testing;

namespace {

Multiset ms(std::initializer_list<unsigned> v) { return Multiset(v); }

long genus_of(const GenusReport& r) {
  REQUIRE(r.genus.has_value());
  return *r.genus;
}

}  // namespace

TEST_CASE("conic fiber product has genus zero") {
  const RatFun H = rf({0, 0, 1}), F = rf({1, 0, 1});
  JointSupport js = joint_support(H, F);
  REQUIRE(js.support.size() == 3);
  GenusReport r = genus_fiber_product(js.h_portraits, js.f_portraits, 2, 2);
  CHECK(r.raw == 2);
  CHECK(genus_of(r) == 0);
  CHECK(r.riemann_hurwitz_consistent);
  CHECK(r.assumes_irreducibility);

  // Independent oracle: x^2 - y^2 - 1 = 0 is parametrized by
  // x = (t^2 + 1) / 2t, y = (t^2 - 1) / 2t, so the curve is rational.
  for (long t = 1; t < 20; ++t) {
    const Rational x = q(t * t + 1, 2 * t), y = q(t * t - 1, 2 * t);
    CHECK(x * x - y * y - 1 == 0);
  }
}

TEST_CASE("reducible diagonal fiber product is flagged") {
  GenusReport r = genus_fiber_product({ms({2}), ms({2})}, {ms({2}), ms({2})}, 2, 2);
  CHECK(r.raw == 4);
  CHECK_FALSE(r.genus.has_value());
  CHECK(r.negative_genus);
  CHECK_FALSE(r.non_integer_genus);
}

TEST_CASE("diagonal genus") {
  GenusReport r = genus_diagonal({ms({2}), ms({2})}, 2);
  CHECK(r.curve == GenusReport::Curve::Diagonal);
  CHECK(r.raw == 4);
  CHECK(genus_of(r) == 0);
  // h_F for z^2 is (x^2 - y^2) / (x - y) = x + y, a line.

  CHECK(genus_of(genus_diagonal(simple_portrait(4), 4)) == 4);
  for (int m = 3; m <= 30; ++m) {
    GenusReport d = genus_diagonal(simple_portrait(m), m);
    CHECK(genus_of(d) == static_cast<long>(m - 2) * (m - 2));
    CHECK(d.riemann_hurwitz_consistent);
  }
}

TEST_CASE("simple portraits") {
  CHECK(simple_portrait(2) == std::vector<Multiset>{ms({2}), ms({2})});
  CHECK(simple_portrait(3) == std::vector<Multiset>(4, ms({2, 1})));
  CHECK(simple_portrait(4) == std::vector<Multiset>(6, ms({2, 1, 1})));
  CHECK_THROWS(simple_portrait(1));
  for (int m = 2; m < 12; ++m) CHECK(portraits_riemann_hurwitz(simple_portrait(m), m));
}

TEST_CASE("genus-zero criterion values") {
  for (int m = 2; m < 10; ++m) {
    CHECK(goo_genus_zero_criterion(std::vector<Multiset>(2 * m - 2, ms({1})), m) == 0);
    for (int n = 2; n < 6; ++n) {
      const Multiset unramified(static_cast<std::size_t>(n), 1);
      CHECK(goo_genus_zero_criterion(std::vector<Multiset>(2 * m - 2, unramified), m) == (2 * m - 2) * (1 - n));
    }
  }
  CHECK(goo_genus_zero_criterion(std::vector<Multiset>(6, ms({2, 1, 1})), 4) == -6);
  CHECK_THROWS_AS(goo_genus_zero_criterion(std::vector<Multiset>(5, ms({1})), 4), PortraitMismatch);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(genus_fiber_product({ms({2})}, {ms({2}), ms({2})}, 2, 2), PortraitMismatch);
  CHECK_THROWS_AS(genus_fiber_product({ms({2}), ms({1})}, {ms({2}), ms({2})}, 2, 2), PortraitMismatch);
  CHECK_THROWS_AS(genus_diagonal({ms({2, 1}), ms({3})}, 2), PortraitMismatch);
  CHECK_THROWS_AS(genus_diagonal({ms({2, 0}), ms({2})}, 2), PortraitMismatch);
}

TEST_CASE("parity flags") {
  // Inconsistent data: too little ramification for Riemann-Hurwitz.
  GenusReport r = genus_fiber_product({ms({2}), ms({1, 1})}, {ms({3}), ms({2, 1})}, 2, 3);
  CHECK(r.raw == 5);
  CHECK_FALSE(r.riemann_hurwitz_consistent);
  CHECK(r.non_integer_genus);
  CHECK_FALSE(r.genus.has_value());
}

TEST_CASE("fiber product over a simple F specializes") {
  Random rnd(41);
  for (int m = 4; m <= 10; ++m) {
    for (int trial = 0; trial < 25; ++trial) {
      const int n = static_cast<int>(rnd.integer(1, 9));
      const int extra = static_cast<int>(rnd.integer(0, 3));
      const int r = 2 * m - 2 + extra;
      auto h = rnd.portraits(n, r);
      std::vector<Multiset> f = simple_portrait(m);
      f.resize(static_cast<std::size_t>(r), Multiset(static_cast<std::size_t>(m), 1));
      std::vector<Multiset> h_over_cv(h.begin(), h.begin() + (2 * m - 2));
      REQUIRE(portraits_riemann_hurwitz(h, n));

      GenusReport g = genus_fiber_product(h, f, n, m);
      long sigma = 0;
      for (const auto& a : h_over_cv) {
        long l = 0;
        for (unsigned x : a) l += x % 2 == 0;
        sigma += l - static_cast<long>(a.size());
      }
      CHECK(g.raw == 2 * m + sigma);
      CHECK(g.raw - 2 == goo_genus_zero_criterion(h_over_cv, m));
    }
  }
}

TEST_CASE("fiber product is symmetric") {
  Random rnd(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rnd.integer(1, 8)), m = static_cast<int>(rnd.integer(1, 8));
    const int r = static_cast<int>(rnd.integer(2, 7));
    auto h = rnd.portraits(n, r), f = rnd.portraits(m, r);
    GenusReport a = genus_fiber_product(h, f, n, m), b = genus_fiber_product(f, h, m, n);
    CHECK(a.raw == b.raw);
    CHECK(a.genus == b.genus);
    CHECK(a.riemann_hurwitz_consistent);
    // Riemann-Hurwitz consistent data always gives an even raw value.
    CHECK_FALSE(a.non_integer_genus);
  }
}

TEST_CASE("portraits from actual functions") {
  // F simple cubic: the diagonal genus must be (3-2)^2 = 1.
  const RatFun F = rf({0, 6}, {-2, 0, 0, 1});
  JointSupport js = joint_support(F, F);
  CHECK(genus_of(genus_diagonal(js.f_portraits, 3)) == 1);
}
