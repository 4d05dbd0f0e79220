#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace nlsa {

/// Exact element of the rationals, always stored in lowest terms with a
/// positive denominator. This is the only scalar field the library ships;
/// everything above it is written against the operations declared here.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}        // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}       // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws ParseError on anything else or on q == 0.
  static Rational parse(std::string_view text);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  /// "p" when the denominator is one, "p/q" otherwise.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  [[nodiscard]] int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  [[nodiscard]] bool is_integer() const;

  /// Square root inside the field, if the value is a square of a rational.
  [[nodiscard]] std::optional<Rational> sqrt() const;

  [[nodiscard]] const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace nlsa
