#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace unitrep {

using BigInt = mpz_class;

// Exact rational number, always kept in canonical form.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : v_(v) {}         // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p/q", integers and finite decimals ("1.5").
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  BigInt floor() const;
  BigInt ceil() const;
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// floor(a / b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Converts to int64, throwing std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& v);

// A rational extended with -inf and +inf. The infinities only take part in
// comparisons, never in arithmetic.
class Bound {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  Bound() : kind_(Kind::kNegInf) {}
  Bound(Rational v) : kind_(Kind::kFinite), v_(std::move(v)) {}  // NOLINT
  template <std::integral T>
  Bound(T v) : Bound(Rational(v)) {}  // NOLINT

  static Bound neg_inf() { return Bound(); }
  static Bound pos_inf() {
    Bound b;
    b.kind_ = Kind::kPosInf;
    return b;
  }
  // Accepts everything Rational::parse does plus "-inf", "+inf", "inf".
  static Bound parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const Bound& a, const Bound& b);
  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b);

 private:
  Kind kind_;
  Rational v_;
};

std::ostream& operator<<(std::ostream& os, const Bound& b);

Bound max(const Bound& a, const Bound& b);
Bound min(const Bound& a, const Bound& b);

}  // namespace unitrep
