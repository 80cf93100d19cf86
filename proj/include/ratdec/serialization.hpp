#pragma once

// JSON wire formats. Exact rationals travel as strings ("p" or "p/q"),
// never as JSON numbers; a rational function is {"num": [...], "den": [...]}
// with index = power.

#include "ratdec/decomposition.hpp"
#include "ratdec/extended_point.hpp"
#include "ratdec/ramification.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ratdec {

using Json = nlohmann::ordered_json;

/// Malformed or invalid input. `line`/`column` are 1-based and set for JSON
/// syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::string source = {}, std::optional<std::size_t> line = std::nullopt,
             std::optional<std::size_t> column = std::nullopt)
      : std::runtime_error(what), source_(std::move(source)), line_(line), column_(column) {}
  const std::string& source() const { return source_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }
  Json to_json() const;

 private:
  std::string source_;
  std::optional<std::size_t> line_, column_;
};

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json_text(std::string_view text, const std::string& source = "<input>");
Json load_json_file(const std::string& path);

Json to_json(const Rational& q);
Json to_json(const Poly& p);
Json to_json(const RatFun& f);
Json to_json(const Moebius& m);
Json to_json(const QPoint& p);
Json to_json(const ExtendedPoint& p);
Json to_json(const Multiset& m);
Json to_json(const Chain& c);  // innermost first

/// Accepts strings "p", "-p", "p/q" and JSON integers; rejects floats.
Rational rational_from_json(const Json& j);
Poly poly_from_json(const Json& j);
/// {"num": [...], "den": [...]}; "den" defaults to ["1"].
RatFun ratfun_from_json(const Json& j);
/// {"a", "b", "c", "d"}.
Moebius moebius_from_json(const Json& j);
/// A bare array (innermost first) or {"order": "innermost-first" |
/// "outermost-first", "factors": [...]}.
Chain chain_from_json(const Json& j);
Multiset multiset_from_json(const Json& j);

/// Q(t) with t^3 = 2; elements are triples [a, b, c] meaning a + b t + c t^2,
/// rational elements may also be plain rational strings (and print that way).
NumberFieldPtr cube_root_two_field();
NfElem nf_from_json(const Json& j, const NumberFieldPtr& field);
Json to_json(const NfElem& e);
/// Coefficients may be rationals or triples.
NfRatFun nf_ratfun_from_json(const Json& j, const NumberFieldPtr& field);
Json to_json(const NfRatFun& f);

}  // namespace ratdec
