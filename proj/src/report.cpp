#include "ratdec/report.hpp"

#include "ratdec/genus.hpp"
#include "ratdec/symmetry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <map>

#include "corpus_data.hpp"

namespace ratdec {

Json to_json(const Report& r, bool with_timing) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  if (!r.error.is_null()) j["error"] = r.error;
  j["flags"] = r.flags;
  j["exit_code"] = r.exit_code;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

std::string render(const Report& r, bool with_timing) { return to_json(r, with_timing).dump(2) + "\n"; }

RunConfig read_run_config() {
  RunConfig cfg;
  if (const char* p = std::getenv("RATDEC_PRECISION"); p && *p) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(p, &end, 10);
    if (*end != '\0' || v < 53 || v > (1UL << 20))
      throw InputError(std::string("RATDEC_PRECISION must be an integer in [53, 1048576], got '") + p + "'");
    cfg.precision_bits = static_cast<unsigned>(v);
  }
  if (const char* p = std::getenv("RATDEC_DENOM_BOUND"); p && *p) {
    Integer v;
    if (v.set_str(p, 10) != 0 || v < 1)
      throw InputError(std::string("RATDEC_DENOM_BOUND must be a positive integer, got '") + p + "'");
    cfg.denom_bound = v;
  }
  return cfg;
}

namespace {

Json error_json(const char* kind, const std::string& message) {
  Json j;
  j["kind"] = kind;
  j["message"] = message;
  return j;
}

template <class Body>
Report run_command(const std::string& command, Json inputs, Body&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = command;
  r.inputs = std::move(inputs);
  try {
    const RunConfig cfg = read_run_config();
    r.flags["precision_bits"] = cfg.precision_bits;
    r.flags["denom_bound"] = to_string(cfg.denom_bound);
    body(r, cfg);
  } catch (const InputError& e) {
    r.results = Json::object();
    r.error = e.to_json();
    r.exit_code = kExitInputError;
  } catch (const PortraitMismatch& e) {
    r.results = Json::object();
    r.error = error_json("portrait-mismatch", e.what());
    r.exit_code = kExitInputError;
  } catch (const PrecisionExhausted& e) {
    r.results = Json::object();
    r.results["status"] = to_string(SearchStatus::SearchIncomplete);
    r.error = error_json("precision-exhausted", e.what());
    r.exit_code = kExitIncomplete;
  } catch (const std::invalid_argument& e) {
    r.results = Json::object();
    r.error = error_json("invalid-input", e.what());
    r.exit_code = kExitInputError;
  } catch (const std::domain_error& e) {
    r.results = Json::object();
    r.error = error_json("invalid-input", e.what());
    r.exit_code = kExitInputError;
  }
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

RatFun function_arg(const Json& j, int min_degree, const char* what) {
  RatFun f = ratfun_from_json(j);
  if (f.degree() < min_degree)
    throw InputError(std::string(what) + " has degree " + std::to_string(f.degree()) + "; degree >= " +
                     std::to_string(min_degree) + " is required");
  return f;
}

Json points_json(const std::vector<ExtendedPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

Json portraits_json(const std::vector<Multiset>& ps) {
  Json a = Json::array();
  for (const auto& m : ps) a.push_back(to_json(m));
  return a;
}

Json genus_json(const GenusReport& g) {
  Json j;
  j["curve"] = g.curve == GenusReport::Curve::FiberProduct ? "fiber-product" : "diagonal";
  j[g.curve == GenusReport::Curve::FiberProduct ? "two_minus_2g" : "four_minus_2g"] = to_string(g.raw);
  j["genus"] = g.genus ? Json(*g.genus) : Json();
  j["non_integer_genus"] = g.non_integer_genus;
  j["negative_genus"] = g.negative_genus;
  j["riemann_hurwitz_consistent"] = g.riemann_hurwitz_consistent;
  j["assumes_irreducibility"] = g.assumes_irreducibility;
  return j;
}

Json group_json(const SymmetryGroup& g) {
  Json j;
  j["order"] = g.pairs.size();
  j["closed"] = g.closed;
  j["pairs"] = Json::array();
  for (const auto& p : g.pairs) j["pairs"].push_back({{"sigma", to_json(p.sigma)}, {"nu", to_json(p.nu)}});
  return j;
}

std::size_t kernel_size(const SymmetryGroup& g) {
  return static_cast<std::size_t>(std::count_if(g.pairs.begin(), g.pairs.end(), [](const SymmetryPair& p) { return p.nu.is_identity(); }));
}

}  // namespace

Report error_report(const std::string& command, const InputError& e) {
  Report r;
  r.command = command;
  r.error = e.to_json();
  r.exit_code = kExitInputError;
  return r;
}

Report cmd_analyze(const Json& fj) {
  return run_command("analyze", {{"f", fj}}, [&](Report& r, const RunConfig& cfg) {
    const RatFun F = function_arg(fj, 2, "f");
    const int m = F.degree();
    const Portrait p = full_portrait(F, PortraitMode::Exact, cfg.precision_bits);
    std::vector<ExtendedPoint> cvs;
    Json portrait = Json::array();
    bool all_rational = true;
    for (const auto& e : p.entries) {
      cvs.push_back(e.value);
      all_rational = all_rational && !is_algebraic(e.value);
      portrait.push_back({{"value", to_json(e.value)}, {"multiplicities", to_json(e.multiplicities)}});
    }
    const int rh = riemann_hurwitz_sum(p);
    r.results["function"] = to_json(F);
    r.results["degree"] = m;
    r.results["simple"] = is_simple(F);
    r.results["critical_values"] = points_json(cvs);
    r.results["critical_values_all_rational"] = all_rational;
    r.results["infinity_is_critical_point"] = infinity_is_critical_point(F);
    r.results["portrait"] = std::move(portrait);
    r.results["riemann_hurwitz"] = {{"sum", rh}, {"expected", 2 * m - 2}, {"ok", rh == 2 * m - 2}};
  });
}

Report cmd_genus_pair(const Json& hj, const Json& fj) {
  return run_command("genus", {{"h", hj}, {"f", fj}}, [&](Report& r, const RunConfig& cfg) {
    const RatFun H = function_arg(hj, 1, "h");
    const RatFun F = function_arg(fj, 1, "f");
    const JointSupport js = joint_support(H, F, cfg.precision_bits);
    r.results["mode"] = "pair";
    r.results["n"] = H.degree();
    r.results["m"] = F.degree();
    r.results["support"] = points_json(js.support);
    r.results["h_portraits"] = portraits_json(js.h_portraits);
    r.results["f_portraits"] = portraits_json(js.f_portraits);
    if (js.support.size() < 2) {
      // Both maps are Moebius: the fiber product is the graph of a Moebius map.
      r.results["genus_report"] = {{"curve", "fiber-product"}, {"genus", 0}, {"note", "both maps have degree 1"}};
      return;
    }
    r.results["genus_report"] = genus_json(genus_fiber_product(js.h_portraits, js.f_portraits, H.degree(), F.degree()));
  });
}

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw InputError(std::string("portraits: integer field \"") + key + "\" required");
  return static_cast<int>(j[key].get<long long>());
}

std::vector<Multiset> portrait_list(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("portraits: field \"") + key + "\" required");
  const Json& v = j[key];
  if (v.is_object() && v.contains("simple_portrait")) {
    if (!v["simple_portrait"].is_number_integer()) throw InputError("simple_portrait expects an integer degree");
    return simple_portrait(static_cast<int>(v["simple_portrait"].get<long long>()));
  }
  if (!v.is_array()) throw InputError(std::string("portraits: \"") + key + "\" must be a list of multiplicity lists");
  std::vector<Multiset> out;
  for (const auto& x : v) out.push_back(multiset_from_json(x));
  return out;
}

}  // namespace

Report cmd_genus_portraits(const Json& pj) {
  return run_command("genus", {{"portraits", pj}}, [&](Report& r, const RunConfig&) {
    if (!pj.is_object() || !pj.contains("curve") || !pj["curve"].is_string())
      throw InputError("portraits: field \"curve\" (\"fiber-product\" or \"diagonal\") required");
    const std::string curve = pj["curve"].get<std::string>();
    r.results["mode"] = "portraits";
    if (curve == "fiber-product") {
      const int n = int_field(pj, "n"), m = int_field(pj, "m");
      r.results["genus_report"] = genus_json(genus_fiber_product(portrait_list(pj, "h"), portrait_list(pj, "f"), n, m));
    } else if (curve == "diagonal") {
      const int m = int_field(pj, "m");
      r.results["genus_report"] = genus_json(genus_diagonal(portrait_list(pj, "f"), m));
    } else {
      throw InputError("portraits: unknown curve \"" + curve + "\"");
    }
  });
}

Report cmd_equiv(const Json& c1j, const Json& c2j) {
  return run_command("equiv", {{"chain1", c1j}, {"chain2", c2j}}, [&](Report& r, const RunConfig&) {
    const Chain c1 = chain_from_json(c1j), c2 = chain_from_json(c2j);
    for (const Chain* c : {&c1, &c2})
      for (const auto& f : c->factors)
        if (f.degree() < 1) throw InputError("chain factors must be nonconstant");
    const auto w = chains_equivalent(c1, c2);
    r.results["equivalent"] = w.has_value();
    r.results["status"] = to_string(w ? SearchStatus::Found : SearchStatus::CertifiedAbsent);
    r.results["compositions_equal"] = chain_compose(c1) == chain_compose(c2);
    if (w) {
      Json mus = Json::array();
      for (const auto& mu : w->mus) mus.push_back(to_json(mu));
      r.results["witness"] = std::move(mus);
      r.results["witness_verified"] = verify_witness(c1, c2, *w);
    }
    r.exit_code = w ? kExitOk : kExitNegative;
  });
}

Report cmd_peel(const Json& xj, const Json& fj) {
  return run_command("peel", {{"x", xj}, {"f", fj}}, [&](Report& r, const RunConfig&) {
    const RatFun X = function_arg(xj, 1, "x");
    const RatFun F = function_arg(fj, 1, "f");
    const auto all = peel_left_all(X, F);
    r.results["status"] = to_string(all.empty() ? SearchStatus::CertifiedAbsent : SearchStatus::Found);
    if (!all.empty()) r.results["y"] = to_json(all.front());
    Json a = Json::array();
    for (const auto& y : all) a.push_back(to_json(y));
    r.results["all_solutions"] = std::move(a);
    r.exit_code = all.empty() ? kExitNegative : kExitOk;
  });
}

Report cmd_semiconj(const Json& fj, long rr, const Json& xj, const Json& gj) {
  return run_command("semiconj", {{"f", fj}, {"r", rr}, {"x", xj}, {"g", gj}}, [&](Report& r, const RunConfig&) {
    if (rr < 1) throw InputError("r must be >= 1");
    const RatFun F = function_arg(fj, 4, "f");
    const RatFun X = function_arg(xj, 2, "x");
    const RatFun G = function_arg(gj, 2, "g");
    const auto res = semiconjugacy_normal_form(F, static_cast<unsigned>(rr), X, G);
    r.results["status"] = to_string(res.status);
    if (res.status == SemiconjugacyResult::Status::Found) {
      r.results["l"] = res.l;
      r.results["nu"] = to_json(res.nu);
      r.results["verified"] = {{"x_equals_f_l_nu", true}, {"g_equals_conjugate", true}};
    }
    r.exit_code = res.status == SemiconjugacyResult::Status::Found ? kExitOk : kExitNegative;
  });
}

Report cmd_symmetry(const Json& fj, std::optional<long> s) {
  Json inputs{{"f", fj}};
  if (s) inputs["iterate"] = *s;
  return run_command("symmetry", std::move(inputs), [&](Report& r, const RunConfig&) {
    const RatFun F = function_arg(fj, 2, "f");
    if (s && *s < 1) throw InputError("--iterate must be >= 1");
    try {
      const SymmetryGroup g = compute_G(F);
      const SymmetryGroup g0 = compute_G0(g);
      r.results["status"] = to_string(SearchStatus::Found);
      r.results["critical_values"] = [&] {
        Json a = Json::array();
        for (const auto& c : iterate_critical_values(F, 1)) a.push_back(to_json(c));
        return a;
      }();
      r.results["G"] = group_json(g);
      r.results["gamma_kernel_order"] = kernel_size(g);
      r.results["gamma_injective"] = kernel_size(g) == 1;
      r.results["G0"] = group_json(g0);
      if (s) {
        Json a = group_json(compute_Aut(F, static_cast<unsigned>(*s)));
        a["s"] = *s;
        r.results["Aut"] = std::move(a);
      }
    } catch (const IrrationalCriticalValues& e) {
      r.results = Json::object();
      r.results["status"] = to_string(SearchStatus::SearchIncomplete);
      r.results["reason"] = e.what();
      r.exit_code = kExitIncomplete;
    }
  });
}

Report cmd_binomial(long m, long k) {
  return run_command("binomial", {{"m", m}, {"k", k}}, [&](Report& r, const RunConfig&) {
    if (m < 4 || k < 2 || k > m - 2) throw InputError("binomial requires 4 <= m and 1 < k < m - 1");
    const auto um = static_cast<unsigned long>(m), uk = static_cast<unsigned long>(k);
    const Integer c = binomial(um, uk);
    unsigned long p = 0;
    try {
      p = binomial_prime_witness(um, uk);
    } catch (const std::logic_error&) {
      // No prime p <= m divides C(m, k) without dividing m.
    }
    r.results["witness"] = p;
    r.results["binomial"] = to_string(c);
    r.results["divides_binomial"] = p != 0 && c % p == 0;
    r.results["coprime_to_m"] = p != 0 && um % p != 0;
    if (p == 0) r.exit_code = kExitNegative;
  });
}

Report cmd_compose(const Json& fj, const Json& gj) {
  return run_command("compose", {{"f", fj}, {"g", gj}}, [&](Report& r, const RunConfig&) {
    const RatFun F = ratfun_from_json(fj), G = ratfun_from_json(gj);
    const RatFun h = compose(F, G);
    r.results["result"] = to_json(h);
    r.results["degree"] = h.degree();
  });
}

Report cmd_iterate(const Json& fj, long l) {
  return run_command("iterate", {{"f", fj}, {"l", l}}, [&](Report& r, const RunConfig&) {
    if (l < 1) throw InputError("l must be >= 1");
    const RatFun F = ratfun_from_json(fj);
    const RatFun h = iterate(F, static_cast<unsigned>(l));
    r.results["result"] = to_json(h);
    r.results["degree"] = h.degree();
  });
}

// ---------------------------------------------------------------------------
// Corpus

const std::string& bundled_corpus_text() {
  static const std::string text(kBundledCorpus);
  return text;
}

namespace {

template <class K>
bool infinity_is_critical(const RationalFunction<K>& f) {
  const auto& p = f.num();
  const auto& q = f.den();
  const int dp = p.degree(), dq = q.degree();
  if (dp != dq) return std::abs(dp - dq) >= 2;
  const K c = p.leading() / q.leading();
  return dq - (p - q * c).degree() >= 2;
}

// Post-composition with a Moebius map scales the Wronskian by the
// determinant and keeps the critical points, so differing critical points
// certify that no mu exists.
template <class K>
Json no_post_moebius_certificate(const RationalFunction<K>& target, const RationalFunction<K>& source, bool& pass) {
  Json j;
  const bool degree_differs = target.degree() != source.degree();
  const bool finite_differ = !degree_differs && !(monic(wronskian(target)) == monic(wronskian(source)));
  const bool inf_t = infinity_is_critical(target), inf_s = infinity_is_critical(source);
  j["degrees_differ"] = degree_differs;
  j["finite_critical_points_differ"] = finite_differ;
  j["infinity_critical_in_target"] = inf_t;
  j["infinity_critical_in_source"] = inf_s;
  pass = degree_differs || finite_differ || inf_t != inf_s;
  return j;
}

struct ItemOutcome {
  bool pass = false;
  Json detail = Json::object();
  std::string reason;
};

bool is_cube_root_two(const std::string& field) {
  if (field == "Q") return false;
  if (field == "Q(t), t^3 = 2") return true;
  throw InputError("unsupported field \"" + field + "\"");
}

template <class Fn>
Fn compose_named(const Json& names, const std::map<std::string, Fn>& fns) {
  if (!names.is_array() || names.empty()) throw InputError("composition must be a non-empty list of names");
  std::optional<Fn> acc;
  for (auto it = names.rbegin(); it != names.rend(); ++it) {
    const std::string n = it->get<std::string>();
    auto f = fns.find(n);
    if (f == fns.end()) throw InputError("unknown function \"" + n + "\"");
    acc = acc ? compose(f->second, *acc) : f->second;
  }
  return *acc;
}

template <class Fn, class Parse>
ItemOutcome run_composition_identity(const Json& item, Parse&& parse) {
  std::map<std::string, Fn> fns;
  for (const auto& [name, spec] : item.at("functions").items()) fns.emplace(name, parse(spec));
  const Fn lhs = compose_named(item.at("lhs"), fns);
  const Fn rhs = compose_named(item.at("rhs"), fns);
  ItemOutcome out;
  out.detail["lhs"] = to_json(lhs);
  out.detail["lhs_equals_rhs"] = lhs == rhs;
  bool value_ok = true;
  if (item.contains("value")) {
    value_ok = lhs == parse(item["value"]);
    out.detail["lhs_equals_value"] = value_ok;
  }
  out.pass = lhs == rhs && value_ok;
  if (!(lhs == rhs)) out.reason = "lhs and rhs compositions differ";
  else if (!value_ok) out.reason = "composition differs from the stated value";
  return out;
}

template <class Fn, class Parse>
ItemOutcome run_no_post_moebius(const Json& item, Parse&& parse) {
  const Json& fns = item.at("functions");
  const Fn target = parse(fns.at(item.at("target").template get<std::string>()));
  const Fn source = parse(fns.at(item.at("source").template get<std::string>()));
  ItemOutcome out;
  out.detail["certificate"] = no_post_moebius_certificate(target, source, out.pass);
  if constexpr (std::is_same_v<Fn, RatFun>) {
    const bool none = !solve_post_moebius(target, source).has_value();
    out.detail["linear_solve_finds_none"] = none;
    out.pass = out.pass && none;
  }
  out.detail["status"] = out.pass ? to_string(SearchStatus::CertifiedAbsent) : "no-certificate";
  if (!out.pass) out.reason = "critical points agree; no certificate of absence";
  return out;
}

ItemOutcome run_item(const Json& item) {
  const std::string kind = item.at("kind").get<std::string>();
  if (kind == "composition-identity" || kind == "no-post-moebius") {
    const bool nf = is_cube_root_two(item.at("field").get<std::string>());
    const bool identity = kind == "composition-identity";
    if (nf) {
      auto parse = [field = cube_root_two_field()](const Json& j) { return nf_ratfun_from_json(j, field); };
      return identity ? run_composition_identity<NfRatFun>(item, parse) : run_no_post_moebius<NfRatFun>(item, parse);
    }
    auto parse = [](const Json& j) { return ratfun_from_json(j); };
    return identity ? run_composition_identity<RatFun>(item, parse) : run_no_post_moebius<RatFun>(item, parse);
  }
  ItemOutcome out;
  if (kind == "simple-portrait-genus") {
    out.pass = true;
    Json rows = Json::array();
    for (const auto& v : item.at("values")) {
      const int m = v.at("m").get<int>();
      const long want = v.at("genus").get<long>();
      const GenusReport g = genus_diagonal(simple_portrait(m), m);
      const bool ok = g.genus && *g.genus == want;
      rows.push_back({{"m", m}, {"genus", g.genus ? Json(*g.genus) : Json()}, {"ok", ok}});
      if (!ok && out.pass) {
        out.pass = false;
        out.reason = "genus mismatch at m = " + std::to_string(m);
      }
    }
    out.detail["values"] = std::move(rows);
    return out;
  }
  if (kind == "binomial-witness") {
    const auto m = item.at("m").get<unsigned long>(), k = item.at("k").get<unsigned long>();
    const unsigned long p = binomial_prime_witness(m, k);
    out.detail["witness"] = p;
    out.pass = p == item.at("witness").get<unsigned long>();
    if (!out.pass) out.reason = "witness " + std::to_string(p) + " differs from the stated value";
    return out;
  }
  if (kind == "binomial-scan") {
    const auto lo = item.at("m_min").get<unsigned long>(), hi = item.at("m_max").get<unsigned long>();
    if (lo < 4 || hi < lo) throw InputError("binomial-scan requires 4 <= m_min <= m_max");
    const BinomialScan s = scan_binomial_witnesses(lo, hi);
    out.detail["pairs_checked"] = s.pairs_checked;
    out.detail["failures"] = s.failures.size();
    out.pass = s.failures.empty();
    if (!out.pass)
      out.reason = "no witness for (m, k) = (" + std::to_string(s.failures.front().first) + ", " +
                   std::to_string(s.failures.front().second) + ")";
    return out;
  }
  throw InputError("unknown corpus item kind \"" + kind + "\"");
}

ItemOutcome run_item_guarded(const Json& item) {
  try {
    return run_item(item);
  } catch (const std::exception& e) {
    ItemOutcome out;
    out.reason = std::string("malformed item: ") + e.what();
    return out;
  }
}

}  // namespace

Report cmd_verify_paper(const Json& corpus) {
  return run_command("verify-paper", Json::object(), [&](Report& r, const RunConfig&) {
    if (!corpus.is_object() || !corpus.contains("items") || !corpus["items"].is_array())
      throw InputError("corpus: top-level object with an \"items\" array required");
    const Json& items = corpus["items"];
    r.inputs["corpus_items"] = items.size();
    std::vector<std::future<ItemOutcome>> jobs;
    for (const auto& item : items) jobs.push_back(std::async(std::launch::async, run_item_guarded, std::cref(item)));
    Json rows = Json::array();
    std::size_t passed = 0;
    std::optional<std::string> first_failure;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      ItemOutcome o = jobs[i].get();
      const std::string name =
          items[i].contains("name") && items[i]["name"].is_string() ? items[i]["name"].get<std::string>() : "item " + std::to_string(i);
      Json row;
      row["name"] = name;
      row["pass"] = o.pass;
      if (!o.pass) row["reason"] = o.reason;
      row["detail"] = std::move(o.detail);
      rows.push_back(std::move(row));
      if (o.pass) ++passed;
      else if (!first_failure) first_failure = name;
    }
    r.results["items"] = std::move(rows);
    r.results["passed"] = passed;
    r.results["total"] = items.size();
    r.results["all_passed"] = passed == items.size();
    if (first_failure) {
      r.results["first_failure"] = *first_failure;
      r.exit_code = kExitNegative;
    }
  });
}

}  // namespace ratdec
