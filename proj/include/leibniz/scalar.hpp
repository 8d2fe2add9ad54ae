#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "leibniz/error.hpp"

namespace leibniz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Ground field of a value: the rationals, or the Gaussian rationals Q(i).
enum class Field { Rational, Gaussian };

inline Field join(Field a, Field b) { return (a == Field::Gaussian || b == Field::Gaussian) ? Field::Gaussian : Field::Rational; }

inline std::string_view to_string(Field f) { return f == Field::Rational ? "Q" : "Q(i)"; }

/// Exact element of Q or Q(i). Both components are kept in lowest terms with a
/// positive denominator (Boost normalizes on every operation). A Rational-tagged
/// value always has a zero imaginary part; mixing tags promotes to Gaussian.
///
/// Equality compares values only. The tag records which field a value was
/// declared in, and two equal numbers from different fields compare equal.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const BigInt& num, const BigInt& den) {
    require(den != 0, ErrorCode::DivisionByZero, "zero denominator");
    re_ = Rational(num, den);
  }

  static Scalar gaussian(Rational re, Rational im) {
    Scalar s;
    s.re_ = std::move(re);
    s.im_ = std::move(im);
    s.field_ = Field::Gaussian;
    return s;
  }
  static Scalar i() { return gaussian(0, 1); }
  static Scalar zero(Field f = Field::Rational) { return Scalar().promoted(f); }
  static Scalar one(Field f = Field::Rational) { return Scalar(1).promoted(f); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  Field field() const { return field_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  /// Same value, tagged with the join of the current field and `f`.
  Scalar promoted(Field f) const {
    Scalar s = *this;
    s.field_ = join(field_, f);
    return s;
  }

  /// Reinterprets in field `f`; demotion requires a zero imaginary part.
  Scalar in_field(Field f) const {
    if (f == Field::Rational) require(im_.is_zero(), ErrorCode::WrongField, "imaginary part in rational field");
    Scalar s = *this;
    s.field_ = f;
    return s;
  }

  Scalar conjugate() const {
    Scalar s = *this;
    s.im_ = -s.im_;
    return s;
  }

  Scalar operator-() const {
    Scalar s = *this;
    s.re_ = -s.re_;
    s.im_ = -s.im_;
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    field_ = join(field_, o.field_);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    field_ = join(field_, o.field_);
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
      re_ *= o.re_;
    } else {
      Rational re = re_ * o.re_ - im_ * o.im_;
      Rational im = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(re);
      im_ = std::move(im);
    }
    field_ = join(field_, o.field_);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    require(!o.is_zero(), ErrorCode::DivisionByZero, "division by zero scalar");
    if (o.im_.is_zero()) {
      re_ /= o.re_;
      im_ /= o.re_;
    } else {
      // Multiply through by the conjugate of the divisor.
      Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
      Rational re = (re_ * o.re_ + im_ * o.im_) / norm;
      Rational im = (im_ * o.re_ - re_ * o.im_) / norm;
      re_ = std::move(re);
      im_ = std::move(im);
    }
    field_ = join(field_, o.field_);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
  Field field_ = Field::Rational;
};

enum class ArithOp { Add, Sub, Mul, Div };

inline Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return {};
}

inline Scalar conjugate(const Scalar& a) { return a.conjugate(); }

namespace detail {

inline std::string format_rational(const Rational& r) {
  // Boost prints integers without a "/1" suffix.
  return r.str();
}

inline std::string format_imag_magnitude(const Rational& mag) {
  if (mag == 1) return "i";
  return format_rational(mag) + "*i";
}

}  // namespace detail

/// "p/q" for rationals; "p/q+r/s*i" for Gaussian values, omitting a zero
/// component and writing a unit imaginary coefficient as a bare "i".
inline std::string Scalar::str() const {
  if (im_.is_zero()) return detail::format_rational(re_);
  std::string out;
  if (!re_.is_zero()) {
    out = detail::format_rational(re_);
    out += im_ > 0 ? "+" : "-";
  } else if (im_ < 0) {
    out = "-";
  }
  out += detail::format_imag_magnitude(boost::multiprecision::abs(im_));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse(Field field) {
    if (text_.empty()) error("empty scalar");
    Rational re = 0;
    Rational im = 0;
    bool negative = consume('-');
    if (peek() == 'i') {
      ++pos_;
      im = negative ? -1 : 1;
    } else {
      Rational first = unsigned_rational();
      if (negative) first = -first;
      if (consume('*')) {
        expect('i');
        im = first;
      } else {
        re = first;
        if (pos_ < text_.size()) {
          bool minus = false;
          if (consume('-')) {
            minus = true;
          } else if (!consume('+')) {
            error("unexpected character");
          }
          Rational mag = 1;
          if (peek() != 'i') {
            mag = unsigned_rational();
            expect('*');
          }
          expect('i');
          im = minus ? -mag : mag;
        }
      }
    }
    if (pos_ != text_.size()) error("trailing characters");
    if (!im.is_zero() && field == Field::Rational) error("imaginary part in a rational document");
    Scalar s = Scalar::gaussian(re, im);
    return field == Field::Rational ? s.in_field(Field::Rational) : s;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) error(std::string("expected '") + c + "'");
  }
  BigInt digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (start == pos_) error("expected digits");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }
  Rational unsigned_rational() {
    BigInt num = digits();
    if (consume('/')) {
      BigInt den = digits();
      if (den == 0) error("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, "scalar \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of `Scalar::str`. Non-reduced fractions are accepted and normalized.
inline Scalar parse_scalar(std::string_view text, Field field = Field::Gaussian) {
  return detail::ScalarParser(text).parse(field);
}

}  // namespace leibniz
