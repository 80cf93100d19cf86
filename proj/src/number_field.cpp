#include "ratdec/number_field.hpp"

#include <stdexcept>

namespace ratdec {

NumberField::NumberField(Poly modulus, std::string generator_name)
    : modulus_(monic(modulus)), name_(std::move(generator_name)) {
  if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
}

NfElem::NfElem(NumberFieldPtr field, Poly rep) : field_(std::move(field)), rep_(std::move(rep)) { reduce(); }

NfElem NfElem::generator(NumberFieldPtr field) { return NfElem(std::move(field), Poly::x()); }

Rational NfElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("number field element is not rational");
  return rep_.coefficient(0);
}

void NfElem::adopt(const NfElem& o) {
  if (!field_) {
    field_ = o.field_;
  } else if (o.field_ && o.field_ != field_ && !(o.field_->modulus() == field_->modulus())) {
    throw std::domain_error("arithmetic between different number fields");
  }
}

void NfElem::reduce() {
  if (field_ && rep_.degree() >= field_->degree()) rep_ = rep_ % field_->modulus();
}

NfElem& NfElem::operator+=(const NfElem& o) {
  adopt(o);
  rep_ += o.rep_;
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  adopt(o);
  rep_ -= o.rep_;
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
  adopt(o);
  rep_ *= o.rep_;
  reduce();
  return *this;
}

NfElem NfElem::inverse() const {
  if (rep_.is_zero()) throw std::domain_error("division by zero in number field");
  if (!field_ || rep_.degree() == 0) return NfElem(field_, Poly::constant(Rational(1) / rep_[0]));
  auto [g, s, t] = gcdext(rep_, field_->modulus());
  if (g.degree() != 0) throw std::domain_error("zero divisor: number field modulus is reducible");
  return NfElem(field_, s);
}

NfElem& NfElem::operator/=(const NfElem& o) {
  adopt(o);
  NfElem inv = o;
  inv.field_ = field_;
  return *this *= inv.inverse();
}

std::string to_string(const NfElem& e) {
  if (!e.field()) return to_string(e.rep().coefficient(0));
  return to_string(e.rep(), e.field()->generator_name().empty() ? 't' : e.field()->generator_name()[0]);
}

NfPoly to_nf(const Poly& p, const NumberFieldPtr& field) {
  std::vector<NfElem> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(field, Poly::constant(c));
  return NfPoly(std::move(v));
}

}  // namespace ratdec
