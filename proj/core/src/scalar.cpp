#include "affgebra/scalar.hpp"

#include <cctype>
#include <utility>

namespace affgebra {

namespace {

void require_same_field(const Scalar& x, const Scalar& y, const char* op) {
  if (x.field() != y.field()) {
    throw DomainError(std::string("field mismatch in '") + op + "': " +
                      std::string(field_name(x.field())) + " vs " +
                      std::string(field_name(y.field())));
  }
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string_view field_name(Field field) {
  return field == Field::rationals ? "Q" : "Q(w)";
}

Field parse_field(std::string_view name) {
  if (name == "q" || name == "Q") return Field::rationals;
  if (name == "qw" || name == "QW" || name == "Qw") return Field::eisenstein;
  throw ParseError("unknown field '" + std::string(name) + "' (expected 'q' or 'qw')");
}

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  // cpp_rational's two-argument constructor insists on a positive denominator
  if (den < 0) return Rational(-num, -den);
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Int n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in literal '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Scalar Scalar::to_field(Field target) const {
  if (target == field_) return *this;
  if (target == Field::rationals && omega_ != 0) {
    throw DomainError("cannot narrow " + format_scalar(*this) + " to Q");
  }
  Scalar r = *this;
  r.field_ = target;
  return r;
}

Rational Scalar::norm() const {
  return unit_ * unit_ - unit_ * omega_ + omega_ * omega_;
}

Scalar Scalar::conjugate() const {
  return with_parts(unit_ - omega_, -omega_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_ == Field::rationals) return with_parts(Rational(1) / unit_, Rational(0));
  const Rational n = norm();
  Scalar c = conjugate();
  return with_parts(c.unit_ / n, c.omega_ / n);
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  require_same_field(x, y, "+");
  return x.with_parts(x.unit_ + y.unit_, x.omega_ + y.omega_);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  require_same_field(x, y, "-");
  return x.with_parts(x.unit_ - y.unit_, x.omega_ - y.omega_);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  require_same_field(x, y, "*");
  if (x.field_ == Field::rationals) {
    return x.with_parts(x.unit_ * y.unit_, Rational(0));
  }
  // (a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd)*w, reducing w^2 = -1 - w
  const Rational ac = x.unit_ * y.unit_;
  const Rational bd = x.omega_ * y.omega_;
  return x.with_parts(ac - bd, x.unit_ * y.omega_ + x.omega_ * y.unit_ - bd);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  require_same_field(x, y, "/");
  return x * y.inverse();
}

namespace {

// One additive term of the scalar grammar: an optionally signed rational with
// an optional trailing 'w'. An absent coefficient in front of 'w' means 1.
struct Term {
  Rational coefficient;
  bool has_omega = false;
};

Term parse_term(std::string_view term, std::string_view whole) {
  Term out;
  std::string_view s = term;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!s.empty() && s.back() == 'w') {
    out.has_omega = true;
    s.remove_suffix(1);
  }
  if (s.empty()) {
    if (!out.has_omega) {
      throw ParseError("malformed scalar literal '" + std::string(whole) + "'");
    }
    out.coefficient = 1;
  } else {
    out.coefficient = parse_rational(s);
  }
  if (negative) out.coefficient = -out.coefficient;
  return out;
}

}  // namespace

Scalar parse_scalar(std::string_view text, Field field) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty scalar literal");

  // Split at the first interior sign: at most two terms, rational then w-term.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }

  Rational unit(0), omega(0);
  if (split == std::string_view::npos) {
    Term t = parse_term(s, text);
    (t.has_omega ? omega : unit) = t.coefficient;
  } else {
    Term first = parse_term(s.substr(0, split), text);
    Term second = parse_term(s.substr(split), text);
    if (first.has_omega || !second.has_omega) {
      throw ParseError("malformed scalar literal '" + std::string(text) + "'");
    }
    unit = first.coefficient;
    omega = second.coefficient;
  }

  if (field == Field::rationals) {
    if (omega != 0) {
      throw ParseError("'w' term not valid over Q: '" + std::string(text) + "'");
    }
    return Scalar(std::move(unit));
  }
  return Scalar(std::move(unit), std::move(omega));
}

std::string format_scalar(const Scalar& value) {
  const Rational& u = value.unit_part();
  const Rational& v = value.omega_part();
  if (v == 0) return format_rational(u);

  std::string omega_term;
  if (v == 1) {
    omega_term = "w";
  } else if (v == -1) {
    omega_term = "-w";
  } else {
    omega_term = format_rational(v) + "w";
  }
  if (u == 0) return omega_term;

  std::string out = format_rational(u);
  if (v > 0) out += '+';
  out += omega_term;
  return out;
}

}  // namespace affgebra
