#pragma once
/// @file rational.hpp
/// @brief Exact rational scalar type for root-space coordinates.
///
/// Every coordinate that appears in the standard realizations of the
/// finite root systems is an integer or a half-integer, and all linear
/// algebra performed by this library (Gram solves, projections,
/// reflections) stays inside the rationals.  A reduced fraction over
/// 64-bit integers is therefore exact for the whole computation;
/// magnitudes stay tiny (coordinates live in [-2, 2], Weyl-group orders
/// fit comfortably below 2^63).

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "minorb/errors.hpp"

namespace minorb {

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr long long numerator() const { return num_; }
  [[nodiscard]] constexpr long long denominator() const { return den_; }
  [[nodiscard]] constexpr bool is_zero() const { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const { return den_ == 1; }

  /// Integer value; throws unless the fraction is integral.
  [[nodiscard]] constexpr long long as_integer() const {
    if (den_ != 1) throw DomainError("Rational: not an integer");
    return num_;
  }

  friend constexpr Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend constexpr Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  constexpr Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
  constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
  constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
  constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend constexpr bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  /// Renders "3", "-1/2", "0".
  [[nodiscard]] std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

[[nodiscard]] constexpr Rational abs(const Rational& r) {
  return r < Rational(0) ? -r : r;
}

}  // namespace minorb
