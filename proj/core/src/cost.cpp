#include "robustcover/cost.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace robustcover {

namespace {

constexpr std::int64_t kMaxInt64 = std::numeric_limits<std::int64_t>::max();

__int128 absInt128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcdInt128(__int128 a, __int128 b) {
  a = absInt128(a);
  b = absInt128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool parseDigits(std::string_view text, __int128& out) {
  if (text.empty() || text.size() > 18) return false;
  __int128 v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

}  // namespace

Rational Rational::reduced(__int128 numerator, __int128 denominator) {
  if (denominator == 0) throw ArithmeticOverflow("rational with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  __int128 g = gcdInt128(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (absInt128(numerator) > kMaxInt64 || denominator > kMaxInt64) {
    throw ArithmeticOverflow("rational value exceeds the 64-bit exact range");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = reduced(numerator, denominator);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  auto dot = text.find('.');
  try {
    if (slash != std::string_view::npos) {
      if (dot != std::string_view::npos) return std::nullopt;
      __int128 num = 0, den = 0;
      if (!parseDigits(text.substr(0, slash), num)) return std::nullopt;
      if (!parseDigits(text.substr(slash + 1), den)) return std::nullopt;
      if (den == 0) return std::nullopt;
      return reduced(negative ? -num : num, den);
    }
    if (dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      if (whole.empty() || frac.empty()) return std::nullopt;
      __int128 w = 0, f = 0;
      if (!parseDigits(whole, w) || !parseDigits(frac, f)) return std::nullopt;
      __int128 scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      __int128 num = w * scale + f;
      return reduced(negative ? -num : num, scale);
    }
    __int128 v = 0;
    if (!parseDigits(text, v)) return std::nullopt;
    return reduced(negative ? -v : v, 1);
  } catch (const ArithmeticOverflow&) {
    return std::nullopt;
  }
}

std::int64_t Rational::floorToInt() const {
  std::int64_t q = num_ / den_;
  if (num_ < 0 && num_ % den_ != 0) --q;
  return q;
}

std::int64_t Rational::ceilToInt() const {
  std::int64_t q = num_ / den_;
  if (num_ > 0 && num_ % den_ != 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  std::int64_t g = std::gcd(a.den_, b.den_);
  __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                 static_cast<__int128>(b.num_) * (a.den_ / g);
  __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
  return Rational::reduced(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  __int128 num = static_cast<__int128>(a.num_) * b.num_;
  __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return Rational::reduced(num, den);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ArithmeticOverflow("rational division by zero");
  __int128 num = static_cast<__int128>(a.num_) * b.den_;
  __int128 den = static_cast<__int128>(a.den_) * b.num_;
  return Rational::reduced(num, den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) throw PreconditionError("pow expects a nonnegative exponent");
  Rational result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational harmonicNumber(int n) {
  Rational h(0);
  for (int k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

#ifdef ROBUSTCOVER_FLOAT_COST

FloatCost::FloatCost(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ArithmeticOverflow("cost with zero denominator");
  value_ = static_cast<double>(numerator) / static_cast<double>(denominator);
}

std::optional<FloatCost> FloatCost::parse(std::string_view text) {
  if (auto r = Rational::parse(text)) return FloatCost(r->numerator(), r->denominator());
  return std::nullopt;
}

bool FloatCost::isInteger() const {
  return *this == FloatCost(floorToInt());
}

std::int64_t FloatCost::floorToInt() const {
  return static_cast<std::int64_t>(std::floor(value_ + kTolerance));
}

std::int64_t FloatCost::ceilToInt() const {
  return static_cast<std::int64_t>(std::ceil(value_ - kTolerance));
}

std::string FloatCost::str() const {
  if (isInteger()) return std::to_string(floorToInt());
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", value_);
  return buf;
}

FloatCost FloatCost::operator-() const { return make(-value_); }

FloatCost operator/(const FloatCost& a, const FloatCost& b) {
  if (b.isZero()) throw ArithmeticOverflow("cost division by zero");
  return FloatCost::make(a.value_ / b.value_);
}

FloatCost pow(const FloatCost& base, int exponent) {
  if (exponent < 0) throw PreconditionError("pow expects a nonnegative exponent");
  FloatCost result(1);
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

FloatCost harmonicCost(int n) {
  FloatCost h(0);
  for (int k = 1; k <= n; ++k) h += FloatCost(1, k);
  return h;
}

#endif

}  // namespace robustcover
