#include "doctest.h"
#include "test_support.hpp"

#include "ratdec/report.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>

using namespace ratdec;
using namespace ratdec::testing;

namespace {

Json jf(const RatFun& f) { return to_json(f); }

RatFun result_function(const Report& r) { return ratfun_from_json(r.results.at("result")); }

// No JSON floating-point value anywhere in the document.
bool float_free(const Json& j) {
  if (j.is_number_float()) return false;
  if (j.is_structured())
    for (const auto& x : j) if (!float_free(x)) return false;
  return true;
}

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(RATDEC_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string strip_timing(const std::string& s) {
  return std::regex_replace(s, std::regex("\"timing_ms\": [0-9]+"), "\"timing_ms\": 0");
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(RATDEC_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("function round-trip is exact for random functions of degree <= 6") {
  Random rnd(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rnd.integer(0, 6));
    auto coeffs = [&](int d) {
      std::vector<Rational> c;
      for (int i = 0; i <= d; ++i) {
        Rational x(Integer(rnd.integer(-1000000, 1000000)), Integer(rnd.integer(1, 999)));
        x.canonicalize();
        c.push_back(x);
      }
      if (c.back() == 0) c.back() = 1;
      return Poly(std::move(c));
    };
    const RatFun f(coeffs(m), coeffs(static_cast<int>(rnd.integer(0, 6))));
    const std::string text = to_json(f).dump();
    const RatFun g = ratfun_from_json(parse_json_text(text));
    CHECK(g == f);
    CHECK(to_json(g).dump() == text);
  }
}

TEST_CASE("rationals are strings on output and exact on input") {
  CHECK(to_json(q(-3, 7)) == "-3/7");
  CHECK(rational_from_json(Json("10/4")) == q(5, 2));
  CHECK(rational_from_json(Json(12)) == 12);
  CHECK(rational_from_json(Json("123456789012345678901234567890")) == Rational(Integer("123456789012345678901234567890")));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), InputError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);
  CHECK_THROWS_AS(rational_from_json(Json("x")), InputError);
  CHECK_THROWS_AS(ratfun_from_json(Json::parse(R"({"den": ["1"]})")), InputError);
  CHECK_THROWS_AS(ratfun_from_json(Json::parse(R"({"num": ["1"], "den": ["0"]})")), InputError);

  const Report r = cmd_analyze(jf(example_p()));
  CHECK(float_free(to_json(r)));
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json_text("{\n  \"num\": [\"1\",, \"2\"]\n}", "f.json");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(e.source() == "f.json");
    REQUIRE(e.line());
    CHECK(*e.line() == 2);
    REQUIRE(e.column());
    CHECK(*e.column() == 15);
    CHECK(e.to_json()["kind"] == "parse-error");
  }
  try {
    parse_json_text("[1, 2", "g.json");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(*e.line() == 1);
  }
}

TEST_CASE("chains accept both orders") {
  const Json inner = Json::array({jf(example_r()), jf(example_q())});
  const Chain a = chain_from_json(inner);
  const Chain b = chain_from_json(Json{{"order", "outermost-first"}, {"factors", Json::array({jf(example_q()), jf(example_r())})}});
  REQUIRE(a.factors.size() == 2);
  CHECK(a.factors[0] == example_r());
  CHECK(b.factors[0] == example_r());
  CHECK(chain_from_json(to_json(a)).factors == a.factors);
  CHECK_THROWS_AS(chain_from_json(Json{{"order", "sideways"}, {"factors", inner}}), InputError);
  CHECK_THROWS_AS(chain_from_json(Json::array()), InputError);
}

TEST_CASE("number field coefficients") {
  const auto K = cube_root_two_field();
  const NfElem t = nf_from_json(Json::parse(R"(["0", "1", "0"])"), K);
  CHECK(t * t * t == NfElem(2));
  CHECK(to_json(t) == Json::parse(R"(["0", "1", "0"])"));
  CHECK(to_json(nf_from_json(Json("3/2"), K)) == "3/2");
  CHECK_THROWS_AS(nf_from_json(Json::parse(R"(["0", "1", "0", "1"])"), K), InputError);
  const Json spec = Json::parse(R"({"num": ["0", ["0", "72", "0"], "-144", ["0", "0", "36"]], "den": [["0", "2", "0"], "2", ["0", "0", "1"]]})");
  const NfRatFun R = nf_ratfun_from_json(spec, K);
  CHECK(R.degree() == 3);
  CHECK(nf_ratfun_from_json(to_json(R), K) == R);
}

TEST_CASE("analyze") {
  const Report p = cmd_analyze(jf(example_p()));
  CHECK(p.exit_code == kExitOk);
  CHECK(p.results["simple"] == true);
  CHECK(p.results["degree"] == 2);
  CHECK(p.results["critical_values"] == Json::parse(R"(["-1", "1"])"));
  CHECK(p.results["riemann_hurwitz"]["ok"] == true);

  const Report z3 = cmd_analyze(jf(rf({0, 0, 0, 1})));
  CHECK(z3.results["simple"] == false);
  CHECK(z3.results["portrait"][0]["multiplicities"] == Json::parse("[3]"));

  const Report deg1 = cmd_analyze(jf(rf({1, 1})));
  CHECK(deg1.exit_code == kExitInputError);
  CHECK(deg1.error["message"].get<std::string>().find("degree") != std::string::npos);

  // Irrational critical values are reported as isolated algebraic points.
  const Report irr = cmd_analyze(Json::parse(R"({"num": ["0", "6"], "den": ["-2", "0", "0", "1"]})"));
  CHECK(irr.exit_code == kExitOk);
  CHECK(irr.results["simple"] == true);
  CHECK(irr.results["critical_values_all_rational"] == false);
  CHECK(irr.results["riemann_hurwitz"]["ok"] == true);
}

TEST_CASE("genus commands") {
  const Report conic = cmd_genus_pair(jf(rf({0, 0, 1})), jf(rf({1, 0, 1})));
  CHECK(conic.exit_code == kExitOk);
  CHECK(conic.results["genus_report"]["genus"] == 0);

  const Report diag = cmd_genus_portraits(Json::parse(R"({"curve": "diagonal", "m": 5, "f": {"simple_portrait": 5}})"));
  CHECK(diag.results["genus_report"]["genus"] == 9);

  const Report fp = cmd_genus_portraits(
      Json::parse(R"({"curve": "fiber-product", "n": 2, "m": 2, "h": [[2], [1, 1], [2]], "f": [[1, 1], [2], [2]]})"));
  CHECK(fp.results["genus_report"]["genus"] == 0);

  const Report bad = cmd_genus_portraits(
      Json::parse(R"({"curve": "fiber-product", "n": 2, "m": 2, "h": [[2], [2]], "f": [[2], [1, 1], [2]]})"));
  CHECK(bad.exit_code == kExitInputError);
  CHECK(bad.error["kind"] == "portrait-mismatch");

  CHECK(cmd_genus_portraits(Json::parse(R"({"curve": "torus"})")).exit_code == kExitInputError);
  CHECK(cmd_genus_portraits(Json::parse(R"({"curve": "diagonal", "f": [[2]]})")).exit_code == kExitInputError);
}

TEST_CASE("decomposition wrappers") {
  const Json c1 = Json::array({jf(example_p()), jf(example_p())});
  const Json c2 = Json::array({jf(example_r()), jf(example_q())});
  const Report neg = cmd_equiv(c1, c2);
  CHECK(neg.results["equivalent"] == false);
  CHECK(neg.results["status"] == "certified-absent");
  CHECK(neg.results["compositions_equal"] == true);
  CHECK(neg.exit_code == kExitNegative);

  const Moebius mu = mob(1, 2, 0, 1);
  const Json c3 = Json::array({jf(compose(mu.inverse(), example_p())), jf(compose(example_p(), mu))});
  const Report pos = cmd_equiv(c1, c3);
  CHECK(pos.results["equivalent"] == true);
  CHECK(pos.results["witness_verified"] == true);
  CHECK(moebius_from_json(pos.results["witness"][0]) == mu);
  CHECK(pos.exit_code == kExitOk);

  const Report peel = cmd_peel(jf(rf({0, 0, 0, 0, 1})), jf(rf({0, 0, 1})));
  CHECK(peel.results["status"] == "found");
  CHECK(ratfun_from_json(peel.results["y"]) == rf({0, 0, 1}));
  const Report absent = cmd_peel(jf(example_p()), jf(rf({0, 0, 0, 1})));
  CHECK(absent.results["status"] == "certified-absent");
  CHECK(absent.exit_code == kExitNegative);

  const RatFun F = rigid_simple_quartic();
  const Moebius nu = mob(2, 1, 0, 1);
  const RatFun X = compose(F, nu.as_ratfun());
  const RatFun G = conjugate(F, nu);
  const Report sc = cmd_semiconj(jf(F), 1, jf(X), jf(G));
  CHECK(sc.results["status"] == "found");
  CHECK(sc.results["l"] == 1);
  CHECK(moebius_from_json(sc.results["nu"]) == nu);
  const Report sq = cmd_semiconj(jf(F), 1, jf(X), jf(F));
  CHECK(sq.exit_code == kExitNegative);
  CHECK(cmd_semiconj(jf(rf({0, 0, 0, 0, 1})), 1, jf(X), jf(G)).exit_code == kExitInputError);
}

TEST_CASE("binomial, compose and iterate") {
  const Report b = cmd_binomial(7, 3);
  CHECK(b.results["witness"] == 5);
  CHECK(b.results.begin().key() == "witness");
  CHECK(cmd_binomial(7, 1).exit_code == kExitInputError);
  CHECK(cmd_binomial(3, 1).exit_code == kExitInputError);

  CHECK(result_function(cmd_compose(jf(example_q()), jf(example_r()))) == rf({0, 0, -2}, {1, 0, 0, 0, 1}));
  CHECK(result_function(cmd_iterate(jf(example_p()), 2)) == rf({0, 0, -2}, {1, 0, 0, 0, 1}));
  CHECK(cmd_iterate(jf(example_p()), 0).exit_code == kExitInputError);

  // -18 x (x^3 - 2)^2 / (x^9 - 6x^6 - 96x^3 - 8), assembled from its factors.
  const Poly x3m2 = poly({-2, 0, 0, 1});
  const RatFun want(poly({0, -18}) * x3m2 * x3m2, poly({-8, 0, 0, -96, 0, 0, -6, 0, 0, 1}));
  const Report it = cmd_iterate(jf(rf({0, 6}, {-2, 0, 0, 1})), 2);
  CHECK(result_function(it) == want);
  CHECK(it.results["degree"] == 9);
}

TEST_CASE("symmetry wrapper") {
  const Report odd = cmd_symmetry(jf(odd_simple_quartic()), 2);
  CHECK(odd.exit_code == kExitOk);
  CHECK(odd.results["G"]["order"] == 2);
  CHECK(odd.results["G"]["closed"] == true);
  CHECK(odd.results["gamma_injective"] == true);
  CHECK(odd.results["Aut"]["s"] == 2);

  const Report irr = cmd_symmetry(Json::parse(R"({"num": ["0", "6"], "den": ["-2", "0", "0", "1"]})"), std::nullopt);
  CHECK(irr.exit_code == kExitIncomplete);
  CHECK(irr.results["status"] == "search-incomplete");
  CHECK(cmd_symmetry(jf(rf({0, 0, 1})), std::nullopt).exit_code == kExitInputError);
}

TEST_CASE("reports are deterministic apart from timing") {
  const Json f = jf(odd_simple_quartic());
  CHECK(render(cmd_analyze(f), false) == render(cmd_analyze(f), false));
  CHECK(render(cmd_symmetry(f, 2), false) == render(cmd_symmetry(f, 2), false));
  const Json corpus = parse_json_text(bundled_corpus_text());
  CHECK(render(cmd_verify_paper(corpus), false) == render(cmd_verify_paper(corpus), false));
  const std::string keys = to_json(cmd_analyze(f)).dump();
  CHECK(keys.find("\"command\"") < keys.find("\"inputs\""));
  CHECK(keys.find("\"inputs\"") < keys.find("\"results\""));
  CHECK(keys.find("\"results\"") < keys.find("\"flags\""));
  CHECK(keys.find("\"flags\"") < keys.find("\"timing_ms\""));
}

TEST_CASE("bundled corpus passes and tampering is detected") {
  const Json corpus = parse_json_text(bundled_corpus_text());
  const Report ok = cmd_verify_paper(corpus);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.results["all_passed"] == true);
  REQUIRE(ok.results["items"].size() == corpus["items"].size());
  for (std::size_t i = 0; i < corpus["items"].size(); ++i) CHECK(ok.results["items"][i]["name"] == corpus["items"][i]["name"]);

  Json bad = corpus;
  bad["items"][2]["functions"]["Q"]["den"][1] = Json::parse(R"(["0", "0", "3887"])");
  const Report t = cmd_verify_paper(bad);
  CHECK(t.exit_code == kExitNegative);
  CHECK(t.results["first_failure"] == corpus["items"][2]["name"]);

  Json bad2 = corpus;
  bad2["items"][0]["value"]["num"][2] = "-3";
  bad2["items"][4]["values"][1]["genus"] = 5;
  const Report t2 = cmd_verify_paper(bad2);
  CHECK(t2.results["first_failure"] == corpus["items"][0]["name"]);
  CHECK(t2.results["passed"] == corpus["items"].size() - 2);

  Json bad3 = corpus;
  bad3["items"][5]["kind"] = "mystery";
  CHECK(cmd_verify_paper(bad3).results["first_failure"] == corpus["items"][5]["name"]);
  CHECK(cmd_verify_paper(Json::parse("[]")).exit_code == kExitInputError);
}

TEST_CASE("environment settings are echoed and validated") {
  ::setenv("RATDEC_DENOM_BOUND", "12345", 1);
  ::setenv("RATDEC_PRECISION", "128", 1);
  const Report r = cmd_binomial(7, 3);
  CHECK(r.flags["denom_bound"] == "12345");
  CHECK(r.flags["precision_bits"] == 128);
  ::setenv("RATDEC_PRECISION", "12", 1);
  CHECK(cmd_binomial(7, 3).exit_code == kExitInputError);
  ::setenv("RATDEC_PRECISION", "256", 1);
  ::setenv("RATDEC_DENOM_BOUND", "-4", 1);
  CHECK(cmd_binomial(7, 3).exit_code == kExitInputError);
  ::unsetenv("RATDEC_DENOM_BOUND");
  ::unsetenv("RATDEC_PRECISION");
  const Report d = cmd_binomial(7, 3);
  CHECK(d.flags["denom_bound"] == "1000000");
  CHECK(d.flags["precision_bits"] == 256);
}

TEST_CASE("command-line tool") {
  const std::string p = write_temp("p.json", to_json(example_p()).dump());
  const std::string z3 = write_temp("z3.json", to_json(rf({0, 0, 0, 1})).dump());
  const std::string broken = write_temp("broken.json", "{\"num\": [\"1\"\n  \"den\": []}");
  const std::string c1 = write_temp("c1.json", Json::array({jf(example_p()), jf(example_p())}).dump());
  const std::string c2 = write_temp("c2.json", Json::array({jf(example_r()), jf(example_q())}).dump());

  const Run a = run_cli("analyze " + p);
  CHECK(a.status == 0);
  CHECK(Json::parse(a.out)["results"]["simple"] == true);
  CHECK(strip_timing(run_cli("analyze " + p).out) == strip_timing(a.out));
  CHECK(Json::parse(run_cli("analyze " + z3).out)["results"]["simple"] == false);

  const Run e = run_cli("analyze " + broken);
  CHECK(e.status == 3);
  const Json ej = Json::parse(e.out);
  CHECK(ej["error"]["kind"] == "parse-error");
  CHECK(ej["error"]["line"] == 2);

  CHECK(run_cli("analyze " + std::string(RATDEC_TEST_TMP) + "/does-not-exist.json").status == 3);
  CHECK(run_cli("equiv " + c1 + " " + c2).status == 1);
  CHECK(Json::parse(run_cli("binomial 7 3").out)["results"]["witness"] == 5);
  CHECK(run_cli("binomial 7").status == 3);
  CHECK(run_cli("frobnicate").status == 3);

  const Run v = run_cli("verify-paper");
  CHECK(v.status == 0);
  CHECK(v.out.find("7/7 corpus items passed") != std::string::npos);
  const Run vj = run_cli("verify-paper --json");
  CHECK(vj.status == 0);
  CHECK(Json::parse(vj.out)["results"]["all_passed"] == true);

  Json tampered = parse_json_text(bundled_corpus_text());
  tampered["items"][0]["rhs"] = Json::array({"R", "Q"});
  const std::string tp = write_temp("tampered.json", tampered.dump(2));
  const Run tv = run_cli("verify-paper --corpus " + tp);
  CHECK(tv.status == 1);
  CHECK(tv.out.find("first failure: degree-2 identity P o P = Q o R") != std::string::npos);
}
