#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * A Rational is always held in canonical form: the denominator is positive,
 * numerator and denominator are coprime, and zero is 0/1. Canonical form
 * makes structural equality coincide with numeric equality.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ratdist {

using BigInt = mpz_class;

/// Raised when a divisor is zero. Kept apart from std::domain_error so the
/// identity engine can turn it into an UNDEFINED verdict.
class DivisionByZero : public std::runtime_error {
 public:
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// gcd of the absolute values; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const BigInt& n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(long n) : num_(n), den_(1) {}           // NOLINT(implicit)
  Rational(int n) : num_(n), den_(1) {}            // NOLINT(implicit)

  /// Canonicalizes num/den. Throws std::domain_error if den == 0.
  static Rational make(const BigInt& num, const BigInt& den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return sgn(num_) == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  /// Always "n/d", including "/1" for integers.
  std::string str() const;
  /// "n" for integers, "n/d" otherwise.
  std::string short_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& y);
  Rational& operator-=(const Rational& y);
  Rational& operator*=(const Rational& y);
  Rational& operator/=(const Rational& y);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  /// Throws DivisionByZero when y is zero.
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  struct Canonical {};
  Rational(BigInt n, BigInt d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Absolute value.
Rational abs(const Rational& r);

}  // namespace ratdist
