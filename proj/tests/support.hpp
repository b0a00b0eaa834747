#pragma once

// Test-only helpers. The reference evaluator here uses GMP's mpq_class and
// never touches ratdist::Rational arithmetic, so it checks the library from
// an independent route.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "ratdist/identity.hpp"
#include "ratdist/rational.hpp"

namespace ratdist::testing {

inline mpq_class to_mpq(const Rational& r) {
  mpq_class q(r.num(), r.den());
  q.canonicalize();
  return q;
}

inline std::optional<mpq_class> ref_apply(BinOp op, const mpq_class& x, const mpq_class& y) {
  switch (op) {
    case BinOp::Add: return mpq_class(x + y);
    case BinOp::Sub: return mpq_class(x - y);
    case BinOp::Mul: return mpq_class(x * y);
    case BinOp::Div:
      if (y == 0) return std::nullopt;
      return mpq_class(x / y);
  }
  return std::nullopt;
}

/// Reference verdict for r1 o (r2 * r3) == (r1 o r2) * (r1 o r3).
inline Verdict ref_verdict(const CaseId& c, const Triple& t) {
  mpq_class a = to_mpq(t.r1), b = to_mpq(t.r2), d = to_mpq(t.r3);
  auto in = ref_apply(c.inner, b, d);
  auto l = in ? ref_apply(c.outer, a, *in) : std::nullopt;
  auto x = ref_apply(c.outer, a, b);
  auto y = ref_apply(c.outer, a, d);
  auto r = (x && y) ? ref_apply(c.inner, *x, *y) : std::nullopt;
  if (!l || !r) return Verdict::Undefined;
  return *l == *r ? Verdict::Holds : Verdict::Fails;
}

/// Grid of canonical n/d, |n| <= nb, 1 <= d <= db, built without Rational
/// arithmetic (mpq canonicalization is the reference).
inline std::vector<Rational> ref_grid(long nb, long db) {
  std::vector<mpq_class> qs;
  for (long d = 1; d <= db; ++d)
    for (long n = -nb; n <= nb; ++n) {
      mpq_class q(n, d);
      q.canonicalize();
      if (q.get_num() == n && q.get_den() == d) qs.push_back(q);
    }
  std::sort(qs.begin(), qs.end());
  std::vector<Rational> out;
  for (const auto& q : qs) out.push_back(Rational::make(q.get_num(), q.get_den()));
  return out;
}

class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed, long num_range = 50, long den_range = 20)
      : gen_(seed), num_(-num_range, num_range), den_(1, den_range) {}

  Rational next() { return Rational::make(num_(gen_), den_(gen_)); }
  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (!r.is_zero()) return r;
    }
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Triple triple() { return {next(), next(), next()}; }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<long> num_;
  std::uniform_int_distribution<long> den_;
};

inline Rational Q(long n, long d = 1) { return Rational::make(n, d); }

inline bool is_canonical(const Rational& r) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return r.den() >= 1 && g == 1 && (!r.is_zero() || r.den() == 1);
}

}  // namespace ratdist::testing
