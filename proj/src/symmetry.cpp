#include "ratdec/symmetry.hpp"

#include "ratdec/decomposition.hpp"
#include "ratdec/ramification.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ratdec {

namespace {

bool qless(const QPoint& a, const QPoint& b) {
  if (is_infinity(a)) return false;
  if (is_infinity(b)) return true;
  return std::get<Rational>(a) < std::get<Rational>(b);
}

void sort_unique(std::vector<QPoint>& v) {
  std::sort(v.begin(), v.end(), qless);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// z1 -> 0, z2 -> inf, z3 -> 1.
Moebius to_standard(const std::array<QPoint, 3>& z) {
  const auto r = [&](int i) { return std::get<Rational>(z[static_cast<std::size_t>(i)]); };
  if (is_infinity(z[0])) return Moebius(0, r(2) - r(1), 1, -r(1));
  if (is_infinity(z[1])) return Moebius(1, -r(0), 0, r(2) - r(0));
  if (is_infinity(z[2])) return Moebius(1, -r(0), 1, -r(1));
  return Moebius(r(2) - r(1), -r(0) * (r(2) - r(1)), r(2) - r(0), -r(1) * (r(2) - r(0)));
}

std::vector<QPoint> rational_critical_values(const RatFun& F) {
  std::vector<QPoint> out;
  for (const auto& c : critical_values(F)) {
    if (is_algebraic(c))
      throw IrrationalCriticalValues("critical value " + to_string(c) + " is irrational; exact symmetry needs rational critical values");
    out.push_back(to_qpoint(c));
  }
  sort_unique(out);
  return out;
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned threads = std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(n)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

// All pairs (sigma, nu) for F with nu permuting cv. A Moebius map is fixed by
// the images of three points, so trying every injection of the first three
// critical values into cv is exhaustive.
std::vector<SymmetryPair> enumerate_pairs(const RatFun& F, const std::vector<QPoint>& cv, bool commuting_only) {
  if (cv.size() < 3)
    throw FewCriticalValues("only " + std::to_string(cv.size()) +
                            " critical values; the symmetry group is infinite or not finitely enumerable here");
  const std::array<QPoint, 3> base{cv[0], cv[1], cv[2]};
  std::vector<Moebius> candidates;
  for (std::size_t i = 0; i < cv.size(); ++i)
    for (std::size_t j = 0; j < cv.size(); ++j)
      for (std::size_t k = 0; k < cv.size(); ++k) {
        if (i == j || j == k || i == k) continue;
        const Moebius nu = moebius_through(base, {cv[i], cv[j], cv[k]});
        std::vector<QPoint> image;
        for (const auto& c : cv) image.push_back(nu(c));
        sort_unique(image);
        if (image == cv) candidates.push_back(nu);
      }
  std::vector<std::vector<SymmetryPair>> found(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    const Moebius& nu = candidates[i];
    const RatFun g = compose(nu, F);
    if (commuting_only) {
      if (g == compose(F, nu)) found[i].push_back({nu, nu});
      return;
    }
    for (const auto& sigma : solve_pre_moebius_all(g, F)) found[i].push_back({sigma, nu});
  });
  std::vector<SymmetryPair> pairs;
  for (auto& f : found) pairs.insert(pairs.end(), f.begin(), f.end());
  std::sort(pairs.begin(), pairs.end(), [](const SymmetryPair& a, const SymmetryPair& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    return a.nu < b.nu;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

bool contains(const SymmetryGroup& g, const SymmetryPair& p) {
  return std::find(g.pairs.begin(), g.pairs.end(), p) != g.pairs.end();
}

std::vector<Moebius> sigma_set(const SymmetryGroup& g) {
  std::vector<Moebius> s;
  for (const auto& p : g.pairs) s.push_back(p.sigma);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Moebius moebius_through(const std::array<QPoint, 3>& from, const std::array<QPoint, 3>& to) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (from[static_cast<std::size_t>(i)] == from[static_cast<std::size_t>(j)] ||
          to[static_cast<std::size_t>(i)] == to[static_cast<std::size_t>(j)])
        throw std::invalid_argument("moebius_through: points must be distinct");
  return compose(to_standard(to).inverse(), to_standard(from));
}

std::vector<QPoint> iterate_critical_values(const RatFun& F, unsigned s) {
  if (s < 1) throw std::invalid_argument("iterate_critical_values: s must be >= 1");
  const std::vector<QPoint> base = rational_critical_values(F);
  std::vector<QPoint> cur = base;
  for (unsigned i = 1; i < s; ++i) {
    std::vector<QPoint> next = base;
    for (const auto& c : cur) next.push_back(eval(F, c));
    sort_unique(next);
    cur = std::move(next);
  }
  return cur;
}

SymmetryGroup compute_G(const RatFun& F) {
  if (F.degree() < 2) throw std::invalid_argument("compute_G: degree must be at least 2");
  SymmetryGroup g;
  g.base = F;
  g.pairs = enumerate_pairs(F, rational_critical_values(F), false);
  g.closed = check_closed(g);
  return g;
}

Moebius gamma(const SymmetryGroup& group, const Moebius& sigma) {
  const Moebius* nu = nullptr;
  for (const auto& p : group.pairs) {
    if (p.sigma != sigma) continue;
    if (nu && *nu != p.nu) throw std::logic_error("gamma: sigma has two distinct nu");
    nu = &p.nu;
  }
  if (!nu) throw NotAMember("gamma: " + to_string(sigma) + " is not in the group");
  return *nu;
}

SymmetryGroup compute_G0(const SymmetryGroup& group) {
  SymmetryGroup g0 = group;
  for (;;) {
    const std::vector<Moebius> sigmas = sigma_set(g0);
    const auto before = g0.pairs.size();
    std::erase_if(g0.pairs, [&](const SymmetryPair& p) { return !std::binary_search(sigmas.begin(), sigmas.end(), p.nu); });
    if (g0.pairs.size() == before) break;
  }
  g0.closed = check_closed(g0);
  return g0;
}

SymmetryGroup compute_Aut(const RatFun& F, unsigned s) {
  if (s < 1) throw std::invalid_argument("compute_Aut: s must be >= 1");
  if (F.degree() < 2) throw std::invalid_argument("compute_Aut: degree must be at least 2");
  SymmetryGroup g;
  g.base = iterate(F, s);
  g.pairs = enumerate_pairs(g.base, iterate_critical_values(F, s), true);
  g.closed = check_closed(g);
  return g;
}

bool check_closed(const SymmetryGroup& group) {
  if (!contains(group, {Moebius(), Moebius()})) return false;
  for (const auto& a : group.pairs) {
    if (!(compose(group.base, a.sigma) == compose(a.nu, group.base))) return false;
    if (!contains(group, {a.sigma.inverse(), a.nu.inverse()})) return false;
    for (const auto& b : group.pairs)
      if (!contains(group, {compose(a.sigma, b.sigma), compose(a.nu, b.nu)})) return false;
  }
  return true;
}

std::size_t automorphism_group_order(const SymmetryGroup& group) {
  const std::vector<Moebius> el = sigma_set(group);
  const std::size_t n = el.size();
  auto index = [&](const Moebius& m) -> std::size_t {
    auto it = std::lower_bound(el.begin(), el.end(), m);
    if (it == el.end() || *it != m) throw std::logic_error("automorphism_group_order: sigma-set is not closed");
    return static_cast<std::size_t>(it - el.begin());
  };
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[i][j] = index(compose(el[i], el[j]));
  const std::size_t id = index(Moebius());
  std::vector<std::size_t> order(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t x = i; x != id; x = mul[x][i]) ++order[i];

  // Greedy generating set.
  std::vector<std::size_t> gens;
  std::vector<bool> in_span(n, false);
  in_span[id] = true;
  auto span = [&] {
    std::vector<std::size_t> stack{id};
    std::fill(in_span.begin(), in_span.end(), false);
    in_span[id] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t g : gens)
        if (!in_span[mul[x][g]]) {
          in_span[mul[x][g]] = true;
          stack.push_back(mul[x][g]);
        }
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    if (!in_span[i]) {
      gens.push_back(i);
      span();
    }

  // Each automorphism is fixed by the images of the generators.
  std::size_t count = 0;
  std::vector<std::size_t> images(gens.size());
  auto try_assignment = [&] {
    std::vector<std::size_t> phi(n, n);
    phi[id] = id;
    std::vector<std::size_t> stack{id};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::size_t y = mul[x][gens[k]], fy = mul[phi[x]][images[k]];
        if (phi[y] == n) {
          phi[y] = fy;
          stack.push_back(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    std::vector<bool> hit(n, false);
    for (std::size_t v : phi) {
      if (v == n || hit[v]) return false;
      hit[v] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (phi[mul[i][j]] != mul[phi[i]][phi[j]]) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      count += try_assignment();
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (order[c] != order[gens[k]]) continue;
      images[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

Theorem32Report verify_theorem32_chain(const RatFun& F, unsigned smax) {
  if (F.degree() < 4 || !is_simple(F))
    throw std::invalid_argument("verify_theorem32_chain: F must be simple of degree >= 4");
  Theorem32Report r;
  const SymmetryGroup g = compute_G(F);
  const SymmetryGroup g0 = compute_G0(g);
  r.g_order = g.pairs.size();
  r.g0_order = g0.pairs.size();

  const std::vector<Moebius> sigmas = sigma_set(g0);
  std::vector<Moebius> nus;
  for (const auto& p : g0.pairs) nus.push_back(p.nu);
  std::sort(nus.begin(), nus.end());
  r.gamma_injective = std::adjacent_find(nus.begin(), nus.end()) == nus.end() && sigmas.size() == g0.pairs.size();
  r.gamma_bijective_on_g0 = r.gamma_injective && nus == sigmas;
  r.verified.push_back("gamma restricted to G0 is injective and maps G0 onto G0");

  r.aut_g0_order = automorphism_group_order(g0);
  if (r.aut_g0_order <= smax) {
    r.g0_in_aut_checked = true;
    const RatFun fs = iterate(F, static_cast<unsigned>(r.aut_g0_order));
    r.g0_in_aut = std::all_of(sigmas.begin(), sigmas.end(),
                              [&](const Moebius& s) { return compose(s, fs) == compose(fs, s); });
    r.verified.push_back("G0 is contained in Aut(F^s) for s = |Aut(G0)| = " + std::to_string(r.aut_g0_order));
  } else {
    r.not_computed.push_back("G0 in Aut(F^s): s = " + std::to_string(r.aut_g0_order) + " exceeds smax");
  }
  r.not_computed.push_back("E0(F) and Aut_inf(F) are analytic objects and are not computed");
  return r;
}

std::string to_string(const SymmetryPair& p) { return "(" + to_string(p.sigma) + ", " + to_string(p.nu) + ")"; }

}  // namespace ratdec
