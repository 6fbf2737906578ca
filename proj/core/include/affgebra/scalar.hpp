#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "affgebra/errors.hpp"

namespace affgebra {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, canonical by construction: numerator and
/// denominator coprime, denominator positive, zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// The two ground fields: Q, and the Eisenstein field Q(w) with w a primitive
/// cube root of unity (w^2 = -1 - w).
enum class Field { rationals, eisenstein };

std::string_view field_name(Field field);

/// Accepts the CLI spellings "q" and "qw".
Field parse_field(std::string_view name);

/// Throws DomainError on a zero denominator.
Rational make_rational(const Int& num, const Int& den);

/// Grammar: ['-'] digits ['/' digits].
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// An exact element of Q or Q(w), stored as unit + omega*w on the basis
/// {1, w}. The invariant for Field::rationals is omega == 0. Every constant
/// of the Eisenstein field used by this library (w, w^2, sqrt(3)*i = 2w + 1)
/// is expressible on this basis. Values are immutable once constructed and
/// safe to share across threads.
class Scalar {
 public:
  Scalar() : field_(Field::rationals) {}
  explicit Scalar(Rational unit, Field field = Field::rationals)
      : field_(field), unit_(std::move(unit)) {}
  /// Element unit + omega*w of Q(w).
  Scalar(Rational unit, Rational omega)
      : field_(Field::eisenstein), unit_(std::move(unit)), omega_(std::move(omega)) {}

  static Scalar zero(Field field) { return Scalar(Rational(0), field); }
  static Scalar one(Field field) { return Scalar(Rational(1), field); }
  static Scalar of_int(long long value, Field field) {
    return Scalar(Rational(value), field);
  }
  /// The primitive cube root of unity itself.
  static Scalar omega() { return Scalar(Rational(0), Rational(1)); }

  Field field() const noexcept { return field_; }
  const Rational& unit_part() const noexcept { return unit_; }
  const Rational& omega_part() const noexcept { return omega_; }

  bool is_zero() const noexcept { return unit_ == 0 && omega_ == 0; }
  bool is_rational_valued() const noexcept { return omega_ == 0; }

  /// Widens Q -> Q(w) freely; narrowing requires a zero omega part.
  Scalar to_field(Field target) const;

  /// Field norm u^2 - u*v + v^2 of u + v*w; multiplicative, zero only at zero.
  Rational norm() const;
  /// Galois conjugate w -> w^2, i.e. u + v*w -> (u - v) - v*w.
  Scalar conjugate() const;
  /// Throws DomainError at zero.
  Scalar inverse() const;

  Scalar operator-() const { return with_parts(-unit_, -omega_); }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
  Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

  /// Value equality on canonical forms; the field tag is not compared, so the
  /// rational 1/2 equals the Q(w) element 1/2 + 0*w.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.unit_ == y.unit_ && x.omega_ == y.omega_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  Scalar with_parts(Rational u, Rational v) const {
    Scalar r;
    r.field_ = field_;
    r.unit_ = std::move(u);
    r.omega_ = std::move(v);
    return r;
  }

  Field field_;
  Rational unit_;
  Rational omega_;  // zero whenever field_ == Field::rationals
};

/// Grammar: rational | [rational ('+'|'-')] [rational] 'w'. Examples:
/// "5", "-1/2", "w", "-w", "2/3w", "1/3+2/3w", "1-w". The 'w' forms are
/// rejected under Field::rationals.
Scalar parse_scalar(std::string_view text, Field field);

/// Emits the same grammar with minimal terms; parse_scalar(format_scalar(x))
/// recovers x in the same field.
std::string format_scalar(const Scalar& value);

}  // namespace affgebra
