#pragma once

// Elements of Q[t]/(f) for an irreducible f. An element with no field
// attached is a plain rational; it adopts the field of the other operand
// in mixed arithmetic, so K(0) and K(1) work as generic constants.

#include "ratdec/polynomial.hpp"

#include <memory>
#include <string>

namespace ratdec {

class NumberField {
 public:
  /// `modulus` must be irreducible over Q (not checked here; see factor.hpp).
  NumberField(Poly modulus, std::string generator_name);

  const Poly& modulus() const { return modulus_; }
  const std::string& generator_name() const { return name_; }
  int degree() const { return modulus_.degree(); }

 private:
  Poly modulus_;
  std::string name_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NfElem {
 public:
  NfElem() = default;
  NfElem(long c) : rep_(Poly::constant(Rational(c))) {}  // NOLINT(google-explicit-constructor)
  NfElem(const Rational& c) : rep_(Poly::constant(c)) {}  // NOLINT(google-explicit-constructor)
  NfElem(NumberFieldPtr field, Poly rep);

  static NfElem generator(NumberFieldPtr field);

  const NumberFieldPtr& field() const { return field_; }
  /// Canonical representative of degree < [K:Q].
  const Poly& rep() const { return rep_; }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;

  NfElem operator-() const { return NfElem(field_, -rep_); }
  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o);
  NfElem inverse() const;

  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
  friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
  friend bool operator==(const NfElem& a, const NfElem& b) { return a.rep_ == b.rep_; }

 private:
  void adopt(const NfElem& o);
  void reduce();

  NumberFieldPtr field_;
  Poly rep_;
};

std::string to_string(const NfElem& e);

using NfPoly = Polynomial<NfElem>;

/// Lifts a rational polynomial into K[z].
NfPoly to_nf(const Poly& p, const NumberFieldPtr& field);

}  // namespace ratdec
