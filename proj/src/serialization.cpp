#include "ratdec/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ratdec {

Json InputError::to_json() const {
  Json j;
  j["kind"] = line_ ? "parse-error" : "input-error";
  j["message"] = what();
  if (!source_.empty()) j["source"] = source_;
  if (line_) j["line"] = *line_;
  if (column_) j["column"] = *column_;
  return j;
}

Json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(msg, source, line, column);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  if (a.empty()) a.push_back("0");
  return a;
}

Json to_json(const RatFun& f) {
  Json j;
  j["num"] = to_json(f.num());
  j["den"] = to_json(f.den());
  return j;
}

Json to_json(const Moebius& m) {
  Json j;
  j["a"] = to_string(m.a());
  j["b"] = to_string(m.b());
  j["c"] = to_string(m.c());
  j["d"] = to_string(m.d());
  return j;
}

Json to_json(const QPoint& p) { return to_string(p); }

Json to_json(const ExtendedPoint& p) {
  if (!is_algebraic(p)) return to_string(p);
  const auto& a = std::get<AlgebraicPoint>(p);
  Json j;
  j["minpoly"] = to_json(a.minpoly);
  j["root_index"] = a.index;
  j["box"] = {{"re", {to_string(a.box.re_lo), to_string(a.box.re_hi)}},
              {"im", {to_string(a.box.im_lo), to_string(a.box.im_hi)}}};
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g%+.15gi", a.re_approx, a.im_approx);
  j["approx"] = buf;
  return j;
}

Json to_json(const Multiset& m) {
  Json a = Json::array();
  for (unsigned x : m) a.push_back(x);
  return a;
}

Json to_json(const Chain& c) {
  Json j;
  j["order"] = "innermost-first";
  j["factors"] = Json::array();
  for (const auto& f : c.factors) j["factors"].push_back(to_json(f));
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad rational: ") + e.what());
    }
  }
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>())));
    return Rational(Integer(std::to_string(j.get<long long>())));
  }
  if (j.is_number_float()) throw InputError("floating-point number where an exact rational string was expected: " + j.dump());
  throw InputError("expected a rational string, got " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return Poly(std::move(c));
}

namespace {

const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string("expected an object for ") + what);
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace

RatFun ratfun_from_json(const Json& j) {
  Poly num = poly_from_json(member(j, "num", "rational function"));
  Poly den = j.contains("den") ? poly_from_json(j["den"]) : Poly::constant(Rational(1));
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  return RatFun(std::move(num), std::move(den));
}

Moebius moebius_from_json(const Json& j) {
  try {
    return Moebius(rational_from_json(member(j, "a", "Moebius map")), rational_from_json(member(j, "b", "Moebius map")),
                   rational_from_json(member(j, "c", "Moebius map")), rational_from_json(member(j, "d", "Moebius map")));
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

Chain chain_from_json(const Json& j) {
  const Json* factors = &j;
  bool outer_first = false;
  if (j.is_object()) {
    factors = &member(j, "factors", "chain");
    if (j.contains("order")) {
      const std::string o = j["order"].is_string() ? j["order"].get<std::string>() : "";
      if (o == "outermost-first") {
        outer_first = true;
      } else if (o != "innermost-first") {
        throw InputError("chain order must be \"innermost-first\" or \"outermost-first\"");
      }
    }
  }
  if (!factors->is_array() || factors->empty()) throw InputError("chain: expected a non-empty factor array");
  Chain c;
  for (const auto& f : *factors) c.factors.push_back(ratfun_from_json(f));
  if (outer_first) std::reverse(c.factors.begin(), c.factors.end());
  return c;
}

Multiset multiset_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("expected a non-empty multiplicity array, got " + j.dump());
  Multiset m;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1) throw InputError("multiplicities must be positive integers");
    m.push_back(static_cast<unsigned>(x.get<long long>()));
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

NumberFieldPtr cube_root_two_field() {
  static const NumberFieldPtr field = std::make_shared<NumberField>(Poly::from_ints({-2, 0, 0, 1}), "t");
  return field;
}

NfElem nf_from_json(const Json& j, const NumberFieldPtr& field) {
  if (!j.is_array()) return NfElem(field, Poly::constant(rational_from_json(j)));
  if (static_cast<int>(j.size()) > field->degree())
    throw InputError("number field element has too many coordinates: " + j.dump());
  return NfElem(field, poly_from_json(j));
}

Json to_json(const NfElem& e) {
  if (e.is_rational()) return to_string(e.rep().coefficient(0));
  Json a = Json::array();
  const int d = e.field()->degree();
  for (int i = 0; i < d; ++i) a.push_back(to_string(e.rep().coefficient(static_cast<std::size_t>(i))));
  return a;
}

NfRatFun nf_ratfun_from_json(const Json& j, const NumberFieldPtr& field) {
  auto side = [&](const Json& a) {
    if (!a.is_array()) throw InputError("expected a coefficient array, got " + a.dump());
    std::vector<NfElem> c;
    for (const auto& x : a) c.push_back(nf_from_json(x, field));
    return NfPoly(std::move(c));
  };
  NfPoly num = side(member(j, "num", "rational function"));
  NfPoly den = j.contains("den") ? side(j["den"]) : NfPoly::constant(NfElem(1));
  if (den.is_zero()) throw InputError("rational function with zero denominator");
  return NfRatFun(std::move(num), std::move(den));
}

Json to_json(const NfRatFun& f) {
  auto side = [](const NfPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_json(c));
    return a;
  };
  Json j;
  j["num"] = side(f.num());
  j["den"] = side(f.den());
  return j;
}

}  // namespace ratdec
