#pragma once

// Exact rational and tolerance-compared floating scalars.

#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drht {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Rational {
 public:
  using Int = std::int64_t;

  constexpr Rational() = default;
  constexpr Rational(Int value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  Rational(Int num, Int den) {
    if (den == 0) throw Error("rational with zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Largest integer not exceeding the value.
  Int floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational out;
    out.assign(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
               static_cast<__int128>(a.den_) * b.den_);
    return out;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational out;
    out.assign(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
               static_cast<__int128>(a.den_) * b.den_);
    return out;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational out;
    out.assign(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    return out;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    Rational out;
    out.assign(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    return out;
  }
  Rational operator-() const {
    Rational out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  static __int128 abs128(__int128 v) { return v < 0 ? -v : v; }
  static __int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void assign(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);
    if (abs128(num) > kMax || den > kMax) throw Error("rational overflow");
    if (num == 0) den = 1;
    num_ = static_cast<Int>(num);
    den_ = static_cast<Int>(den);
  }

  Int num_ = 0;
  Int den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Parses an integer, a "p/q" fraction or a decimal literal such as "-0.125".
inline Rational parse_scalar(std::string_view text) {
  auto fail = [&]() -> Rational { throw Error("malformed scalar literal '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Rational::Int {
    if (s.empty()) fail();
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) fail();
    __int128 v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') fail();
      v = v * 10 + (s[i] - '0');
      if (v > static_cast<__int128>(INT64_MAX)) throw Error("scalar literal out of range '" + std::string(text) + "'");
    }
    return static_cast<Rational::Int>(neg ? -v : v);
  };

  if (text.empty()) fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto p = parse_int(text.substr(0, slash), true);
    const auto q = parse_int(text.substr(slash + 1), false);
    if (q == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    return {p, q};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      neg = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || frac.size() > 18) fail();
    const Rational::Int w = whole.empty() ? 0 : parse_int(whole, false);
    const Rational::Int f = frac.empty() ? 0 : parse_int(frac, false);
    Rational::Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational out = Rational(w) + Rational(f, scale);
    return neg ? -out : out;
  }
  return {parse_int(text, true)};
}

/// Binary floating value compared with an absolute tolerance.
class ApproxFloat {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  ApproxFloat() = default;
  explicit ApproxFloat(double value, double tolerance = kDefaultTolerance)
      : value_(value), tol_(tolerance) {
    if (!(tolerance > 0.0)) throw Error("ApproxFloat tolerance must be positive");
  }

  double value() const { return value_; }
  double tolerance() const { return tol_; }

  friend ApproxFloat operator+(ApproxFloat a, ApproxFloat b) { return ApproxFloat(a.value_ + b.value_, a.tol_); }
  friend ApproxFloat operator-(ApproxFloat a, ApproxFloat b) { return ApproxFloat(a.value_ - b.value_, a.tol_); }
  friend ApproxFloat operator*(ApproxFloat a, ApproxFloat b) { return ApproxFloat(a.value_ * b.value_, a.tol_); }
  friend ApproxFloat operator/(ApproxFloat a, ApproxFloat b) {
    if (b.value_ == 0.0) throw Error("ApproxFloat division by zero");
    return ApproxFloat(a.value_ / b.value_, a.tol_);
  }

  friend bool operator==(ApproxFloat a, ApproxFloat b) { return std::abs(a.value_ - b.value_) <= a.tol_; }
  friend std::partial_ordering operator<=>(ApproxFloat a, ApproxFloat b) {
    if (a == b) return std::partial_ordering::equivalent;
    return a.value_ < b.value_ ? std::partial_ordering::less : std::partial_ordering::greater;
  }

 private:
  double value_ = 0.0;
  double tol_ = kDefaultTolerance;
};

}  // namespace drht

template <>
struct std::hash<drht::Rational> {
  std::size_t operator()(const drht::Rational& q) const noexcept {
    return std::hash<std::int64_t>{}(q.num()) * 1000003u ^ std::hash<std::int64_t>{}(q.den());
  }
};
