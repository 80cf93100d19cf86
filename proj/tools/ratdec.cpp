// ratdec: JSON in, JSON report out. Exit codes: 0 success, 1 negative result
// with certificate, 2 search incomplete, 3 input error.

#include "ratdec/report.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace ratdec;

namespace {

int emit(const Report& r) {
  std::cout << render(r);
  return r.exit_code;
}

// Loads each file, then runs `body`; unreadable or malformed files produce
// an input-error report for `command`.
int with_files(const std::string& command, const std::vector<std::string>& paths,
               const std::function<Report(const std::vector<Json>&)>& body) {
  std::vector<Json> docs;
  try {
    for (const auto& p : paths) docs.push_back(load_json_file(p));
  } catch (const InputError& e) {
    return emit(error_report(command, e));
  }
  return emit(body(docs));
}

int print_corpus_summary(const Report& r) {
  if (!r.error.is_null()) {
    std::cout << "error: " << r.error.value("message", "") << "\n";
    return r.exit_code;
  }
  for (const auto& item : r.results["items"]) {
    const bool ok = item["pass"].get<bool>();
    std::cout << (ok ? "PASS  " : "FAIL  ") << item["name"].get<std::string>();
    if (!ok) std::cout << ": " << item["reason"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << r.results["passed"].get<std::size_t>() << "/" << r.results["total"].get<std::size_t>()
            << " corpus items passed";
  if (r.results.contains("first_failure")) std::cout << "; first failure: " << r.results["first_failure"].get<std::string>();
  std::cout << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of rational functions over Q: ramification, genus, decompositions, symmetry."};
  app.require_subcommand(1);
  int code = kExitOk;

  std::string f_path, g_path, h_path, x_path, c1_path, c2_path, p_path, corpus_path;
  long r_arg = 0, l_arg = 0, m_arg = 0, k_arg = 0, s_arg = 0;
  bool json_out = false;
  std::vector<std::string> pair;

  auto* analyze = app.add_subcommand("analyze", "Degree, simplicity, critical values and ramification portrait");
  analyze->add_option("f", f_path, "Function file")->required();
  analyze->callback([&] { code = with_files("analyze", {f_path}, [](auto& d) { return cmd_analyze(d[0]); }); });

  auto* genus = app.add_subcommand("genus", "Genus of a fiber-product curve");
  auto* pair_opt = genus->add_option("--pair", pair, "H and F function files")->expected(2);
  auto* port_opt = genus->add_option("--portraits", p_path, "Hand-entered portrait file");
  pair_opt->excludes(port_opt);
  genus->callback([&] {
    if (!pair.empty()) {
      code = with_files("genus", pair, [](auto& d) { return cmd_genus_pair(d[0], d[1]); });
    } else if (!p_path.empty()) {
      code = with_files("genus", {p_path}, [](auto& d) { return cmd_genus_portraits(d[0]); });
    } else {
      code = emit(error_report("genus", InputError("one of --pair or --portraits is required")));
    }
  });

  auto* equiv = app.add_subcommand("equiv", "Moebius equivalence of two decomposition chains");
  equiv->add_option("chain1", c1_path)->required();
  equiv->add_option("chain2", c2_path)->required();
  equiv->callback([&] { code = with_files("equiv", {c1_path, c2_path}, [](auto& d) { return cmd_equiv(d[0], d[1]); }); });

  auto* peel = app.add_subcommand("peel", "Solve X = F o Y for Y");
  peel->add_option("x", x_path)->required();
  peel->add_option("f", f_path)->required();
  peel->callback([&] { code = with_files("peel", {x_path, f_path}, [](auto& d) { return cmd_peel(d[0], d[1]); }); });

  auto* semiconj = app.add_subcommand("semiconj", "Normal form of F^r o X = X o G for simple F");
  semiconj->add_option("f", f_path)->required();
  semiconj->add_option("r", r_arg)->required();
  semiconj->add_option("x", x_path)->required();
  semiconj->add_option("g", g_path)->required();
  semiconj->callback([&] {
    code = with_files("semiconj", {f_path, x_path, g_path},
                      [&](auto& d) { return cmd_semiconj(d[0], r_arg, d[1], d[2]); });
  });

  auto* symmetry = app.add_subcommand("symmetry", "Groups G(F), G0(F) and optionally Aut(F^s)");
  symmetry->add_option("f", f_path)->required();
  auto* iter_opt = symmetry->add_option("--iterate", s_arg, "Also compute Moebius maps commuting with F^s");
  symmetry->callback([&] {
    std::optional<long> s;
    if (*iter_opt) s = s_arg;
    code = with_files("symmetry", {f_path}, [&](auto& d) { return cmd_symmetry(d[0], s); });
  });

  auto* binom = app.add_subcommand("binomial", "Prime p dividing C(m, k) but not m");
  binom->add_option("m", m_arg)->required();
  binom->add_option("k", k_arg)->required();
  binom->callback([&] { code = emit(cmd_binomial(m_arg, k_arg)); });

  auto* comp = app.add_subcommand("compose", "f o g");
  comp->add_option("f", f_path)->required();
  comp->add_option("g", g_path)->required();
  comp->callback([&] { code = with_files("compose", {f_path, g_path}, [](auto& d) { return cmd_compose(d[0], d[1]); }); });

  auto* iter = app.add_subcommand("iterate", "l-fold composition of f with itself");
  iter->add_option("f", f_path)->required();
  iter->add_option("l", l_arg)->required();
  iter->callback([&] { code = with_files("iterate", {f_path}, [&](auto& d) { return cmd_iterate(d[0], l_arg); }); });

  auto* verify = app.add_subcommand("verify-paper", "Check the bundled example corpus");
  verify->add_flag("--json", json_out, "Print the full JSON report");
  verify->add_option("--corpus", corpus_path, "Use this corpus file instead of the bundled one");
  verify->callback([&] {
    Report r;
    try {
      const Json corpus = corpus_path.empty() ? parse_json_text(bundled_corpus_text(), "<bundled corpus>")
                                              : load_json_file(corpus_path);
      r = cmd_verify_paper(corpus);
    } catch (const InputError& e) {
      r = error_report("verify-paper", e);
    }
    code = json_out ? emit(r) : print_corpus_summary(r);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }
  return code;
}
