#include "ratdist/rational.hpp"

#include <ostream>

namespace ratdist {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = ::abs(a);
  BigInt y = ::abs(b);
  while (y != 0) {
    BigInt r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Rational Rational::make(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den, Canonical{});
  r.canonicalize();
  return r;
}

void Rational::canonicalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

std::string Rational::str() const { return num_.get_str() + "/" + den_.get_str(); }

std::string Rational::short_str() const {
  return is_integer() ? num_.get_str() : str();
}

Rational Rational::operator-() const { return Rational(BigInt(-num_), den_, Canonical{}); }

Rational& Rational::operator+=(const Rational& y) {
  if (den_ == y.den_) {
    num_ += y.num_;
  } else {
    num_ = num_ * y.den_ + y.num_ * den_;
    den_ *= y.den_;
  }
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& y) { return *this += -y; }

Rational& Rational::operator*=(const Rational& y) {
  num_ *= y.num_;
  den_ *= y.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& y) {
  if (y.is_zero()) throw DivisionByZero();
  // Copy first: y may alias *this.
  BigInt yn = y.num_;
  BigInt yd = y.den_;
  num_ *= yd;
  den_ *= yn;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  int c = cmp(x.num_ * y.den_, y.num_ * x.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.short_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace ratdist
