#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "robustcover/errors.hpp"

namespace robustcover {

/// Exact rational number over a 64-bit numerator / denominator.
///
/// Values are kept reduced with a positive denominator. Intermediate
/// products are computed in 128 bits; a result whose reduced form does not
/// fit back into 64 bits throws ArithmeticOverflow instead of wrapping.
class Rational {
 public:
  static constexpr bool kExact = true;

  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "7", "-3/4" and decimal forms like "0.25". Conversion is
  /// exact; anything else yields nullopt.
  static std::optional<Rational> parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool isZero() const { return num_ == 0; }
  bool isNegative() const { return num_ < 0; }
  bool isInteger() const { return den_ == 1; }

  std::int64_t floorToInt() const;
  std::int64_t ceilToInt() const;
  double toDouble() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", or just "p" for integers.
  std::string str() const;

  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static Rational reduced(__int128 numerator, __int128 denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// base^exponent for exponent >= 0.
Rational pow(const Rational& base, int exponent);

/// H_n = sum_{k=1..n} 1/k; H_0 = 0.
Rational harmonicNumber(int n);

#ifdef ROBUSTCOVER_FLOAT_COST

/// Double-backed cost with an absolute comparison tolerance of 1e-9.
/// Opt-in replacement for Rational behind the same interface; exactness
/// guarantees of the test suite only hold in the rational build.
class FloatCost {
 public:
  static constexpr bool kExact = false;
  static constexpr double kTolerance = 1e-9;

  constexpr FloatCost() = default;
  FloatCost(std::int64_t value) : value_(static_cast<double>(value)) {}  // NOLINT
  FloatCost(std::int64_t numerator, std::int64_t denominator);

  static std::optional<FloatCost> parse(std::string_view text);

  bool isZero() const { return value_ > -kTolerance && value_ < kTolerance; }
  bool isNegative() const { return value_ < -kTolerance; }
  bool isInteger() const;

  std::int64_t floorToInt() const;
  std::int64_t ceilToInt() const;
  double toDouble() const { return value_; }
  std::string str() const;

  FloatCost operator-() const;

  friend FloatCost operator+(const FloatCost& a, const FloatCost& b) { return make(a.value_ + b.value_); }
  friend FloatCost operator-(const FloatCost& a, const FloatCost& b) { return make(a.value_ - b.value_); }
  friend FloatCost operator*(const FloatCost& a, const FloatCost& b) { return make(a.value_ * b.value_); }
  friend FloatCost operator/(const FloatCost& a, const FloatCost& b);

  FloatCost& operator+=(const FloatCost& o) { return *this = *this + o; }
  FloatCost& operator-=(const FloatCost& o) { return *this = *this - o; }
  FloatCost& operator*=(const FloatCost& o) { return *this = *this * o; }
  FloatCost& operator/=(const FloatCost& o) { return *this = *this / o; }

  friend bool operator==(const FloatCost& a, const FloatCost& b) {
    double d = a.value_ - b.value_;
    return d > -kTolerance && d < kTolerance;
  }
  friend bool operator!=(const FloatCost& a, const FloatCost& b) { return !(a == b); }
  friend bool operator<(const FloatCost& a, const FloatCost& b) { return a.value_ < b.value_ - kTolerance; }
  friend bool operator>(const FloatCost& a, const FloatCost& b) { return b < a; }
  friend bool operator<=(const FloatCost& a, const FloatCost& b) { return !(b < a); }
  friend bool operator>=(const FloatCost& a, const FloatCost& b) { return !(a < b); }

 private:
  static FloatCost make(double v) {
    FloatCost c;
    c.value_ = v;
    return c;
  }
  double value_ = 0.0;
};

FloatCost pow(const FloatCost& base, int exponent);

using Cost = FloatCost;

/// H_n in the active cost type.
FloatCost harmonicCost(int n);

#else

using Cost = Rational;

inline Rational harmonicCost(int n) { return harmonicNumber(n); }

#endif

}  // namespace robustcover
