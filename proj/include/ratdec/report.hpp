#pragma once

// Command implementations behind the ratdec CLI. Each takes already-parsed
// JSON inputs and returns a Report; reading files and printing are left to
// the tool. Reports are deterministic except for timing_ms. Failures never
// throw: input errors come back as exit code 3 with an "error" object, and
// precision exhaustion as exit code 2.

#include "ratdec/serialization.hpp"

#include <optional>
#include <string>

namespace ratdec {

enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitIncomplete = 2, kExitInputError = 3 };

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json flags = Json::object();
  Json error;  // null unless the command failed
  int exit_code = kExitOk;
  long long timing_ms = 0;
};

/// Field order: command, inputs, results, [error], flags, exit_code, timing_ms.
Json to_json(const Report& r, bool with_timing = true);
std::string render(const Report& r, bool with_timing = true);

/// RATDEC_PRECISION (bits, default 256) and RATDEC_DENOM_BOUND (default
/// 10^6), as echoed in every report. Throws InputError on malformed values.
struct RunConfig {
  unsigned precision_bits = 256;
  Integer denom_bound = 1000000;
};
RunConfig read_run_config();

/// Report for input that failed before a command could run (unreadable
/// file, JSON syntax error); exit code 3.
Report error_report(const std::string& command, const InputError& e);

Report cmd_analyze(const Json& f);
Report cmd_genus_pair(const Json& h, const Json& f);
/// {"curve": "fiber-product", "n", "m", "h": [...], "f": [...]} or
/// {"curve": "diagonal", "m", "f": [...]}; a portrait list may be replaced
/// by {"simple_portrait": m}.
Report cmd_genus_portraits(const Json& p);
Report cmd_equiv(const Json& c1, const Json& c2);
Report cmd_peel(const Json& x, const Json& f);
Report cmd_semiconj(const Json& f, long r, const Json& x, const Json& g);
Report cmd_symmetry(const Json& f, std::optional<long> iterate);
Report cmd_binomial(long m, long k);
Report cmd_compose(const Json& f, const Json& g);
Report cmd_iterate(const Json& f, long l);

/// The corpus compiled into the binary.
const std::string& bundled_corpus_text();
/// Items run concurrently; results keep corpus order. Exit 1 naming the
/// first failing item.
Report cmd_verify_paper(const Json& corpus);

}  // namespace ratdec
