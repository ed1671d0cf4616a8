#include "halphen/number_field.hpp"

#include "halphen/errors.hpp"
#include "halphen/factor.hpp"

namespace halphen {

FieldPtr NumberField::create(const QPoly& minimal_polynomial, std::string generator) {
  if (minimal_polynomial.degree() < 1)
    fail("ReducibleModulus", "number field modulus must have positive degree");
  QPoly m = minimal_polynomial.monic();
  if (m.degree() > 1 && !is_irreducible(m))
    fail("ReducibleModulus", "modulus " + m.to_string(generator) + " is reducible over Q");
  return FieldPtr(new NumberField(std::move(m), std::move(generator)));
}

NfElem NfElem::inverse() const {
  if (value_.is_zero()) fail("DivisionByZero", "inverse of zero in a number field");
  if (is_rational()) return NfElem(Rational(1) / rational_value());
  auto [g, s, t] = xgcd(value_, field_->modulus());
  // g is 1 because the modulus is irreducible and value_ is nonzero mod it
  return NfElem(field_, s);
}

NfElem NfElem::conjugate() const {
  if (is_rational()) return *this;
  if (field_->degree() != 2) fail("UnsupportedDegree", "conjugate needs a quadratic field");
  const Rational a1 = field_->modulus().coeff(1);
  // w -> -w - a1
  const Rational c0 = value_.coeff(0), c1 = value_.coeff(1);
  return NfElem(field_, QPoly(std::vector<Rational>{Rational(c0 - c1 * a1), Rational(-c1)}));
}

std::string to_string(const NfElem& v) {
  if (v.is_rational()) return v.rational_value().get_str();
  return v.poly().to_string(v.field() ? v.field()->generator() : "w");
}

}  // namespace halphen
