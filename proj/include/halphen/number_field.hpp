#pragma once

#include <memory>
#include <string>
#include <vector>

#include "halphen/rational.hpp"
#include "halphen/upoly.hpp"

namespace halphen {

/// Q[w]/(m(w)) for a monic irreducible m.  Degree 1 is allowed and means Q.
class NumberField {
public:
  /// Normalizes m to monic; throws HalphenError(ReducibleModulus) if m is
  /// not irreducible over Q.
  static std::shared_ptr<const NumberField> create(const QPoly& minimal_polynomial,
                                                   std::string generator = "w");

  int degree() const { return modulus_.degree(); }
  const QPoly& modulus() const { return modulus_; }
  const std::string& generator() const { return generator_; }

  /// Reduce a polynomial in w modulo the minimal polynomial.
  QPoly reduce(const QPoly& p) const { return p % modulus_; }

private:
  NumberField(QPoly m, std::string g) : modulus_(std::move(m)), generator_(std::move(g)) {}
  QPoly modulus_;
  std::string generator_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field.  Rationals carry no field pointer and mix
/// freely with elements of any field; two elements of different fields
/// must not be combined.
class NfElem {
public:
  NfElem() = default;
  NfElem(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  NfElem(const Rational& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  NfElem(FieldPtr field, QPoly value) : field_(std::move(field)), value_(std::move(value)) {
    if (field_) value_ = field_->reduce(value_);
    if (value_.degree() <= 0) field_.reset();
  }

  /// The generator w of `field`.
  static NfElem generator(const FieldPtr& field) { return NfElem(field, QPoly::x()); }

  const FieldPtr& field() const { return field_; }
  const QPoly& poly() const { return value_; }
  bool is_rational() const { return value_.degree() <= 0; }
  Rational rational_value() const { return value_.coeff(0); }
  /// Coordinate i in the power basis 1, w, w^2, ...
  Rational coord(std::size_t i) const { return value_.coeff(i); }

  NfElem& operator+=(const NfElem& o) { return *this = *this + o; }
  NfElem& operator-=(const NfElem& o) { return *this = *this - o; }
  NfElem& operator*=(const NfElem& o) { return *this = *this * o; }
  NfElem& operator/=(const NfElem& o) { return *this = *this / o; }

  friend NfElem operator+(const NfElem& a, const NfElem& b) {
    return NfElem(pick(a, b), a.value_ + b.value_);
  }
  friend NfElem operator-(const NfElem& a, const NfElem& b) {
    return NfElem(pick(a, b), a.value_ - b.value_);
  }
  friend NfElem operator-(const NfElem& a) { return NfElem(a.field_, -a.value_); }
  friend NfElem operator*(const NfElem& a, const NfElem& b) {
    if (a.is_rational() && b.is_rational()) return NfElem(a.rational_value() * b.rational_value());
    return NfElem(pick(a, b), a.value_ * b.value_);
  }
  friend NfElem operator/(const NfElem& a, const NfElem& b) { return a * b.inverse(); }
  friend bool operator==(const NfElem& a, const NfElem& b) { return a.value_ == b.value_; }
  friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

  NfElem inverse() const;

  /// Image under w -> other root; only meaningful for quadratic fields
  /// (w -> -w - a1 where m = w^2 + a1 w + a0).
  NfElem conjugate() const;

private:
  static FieldPtr pick(const NfElem& a, const NfElem& b) { return a.field_ ? a.field_ : b.field_; }

  FieldPtr field_;
  QPoly value_;
};

inline bool is_zero(const NfElem& v) { return v.poly().is_zero(); }
std::string to_string(const NfElem& v);

}  // namespace halphen
