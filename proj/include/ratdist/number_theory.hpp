#pragma once

// Integer tools behind the constructive families: extended Euclid, linear
// Diophantine equations in two unknowns, exact square roots, and the integer
// constructions for subtraction over multiplication (d1 = d2 = d3 = 1) and
// addition over division (b = d = 1).

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ratdist/identity.hpp"
#include "ratdist/rational.hpp"

namespace ratdist {

/// a*x + b*y == g with g == gcd(|a|, |b|) >= 0.
struct ExtGcdResult {
  BigInt g;
  BigInt x;
  BigInt y;
};

ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b);

/// All integer solutions of p*x + q*y == t as base + k*step, k in Z.
struct DiophantineSolutionSet {
  bool empty = true;
  BigInt x0, y0;
  BigInt dx, dy;

  std::pair<BigInt, BigInt> at(const BigInt& k) const { return {x0 + k * dx, y0 + k * dy}; }
};

/// Throws std::domain_error when p == q == 0. When nonempty, step is
/// (q/g, -p/g) and the base x0 is normalized into [1, |dx|] (unless dx == 0).
DiophantineSolutionSet solve_linear_diophantine(const BigInt& p, const BigInt& q,
                                                 const BigInt& t);

/// Exact integer square root of a perfect square; nullopt otherwise.
std::optional<BigInt> is_perfect_square(const BigInt& n);

/// floor(sqrt(n)) by Newton iteration; n must be nonnegative.
BigInt isqrt(const BigInt& n);

/// Parameters of an integer solution of the subtraction-over-multiplication
/// equation with n1 = delta*N1, n2 = delta*N2, n3 = N1*N3.
struct Case12Params {
  BigInt N1;
  BigInt N2;
  BigInt delta;
  BigInt N3;

  Triple triple() const;
};

/// Solves delta*(N1 - N2) + N3*(2*N2 - N1) == 1 for N3 and returns
/// (delta*N1, delta*N2, N1*N3). nullopt if no integral N3 exists, or if
/// n3 == 0 and degenerate output was not allowed.
/// Throws std::domain_error unless N1 is odd, N2 != 0, gcd(N1, N2) == 1 and
/// delta >= 1.
std::optional<Triple> case12_construct(const BigInt& N1, const BigInt& N2, const BigInt& delta,
                                       bool allow_degenerate = false);

/// Walks the Diophantine solution set for (delta, N3) with
/// 1 <= delta <= delta_max, in increasing delta. Same preconditions as
/// case12_construct; degenerate (n3 == 0) solutions are skipped unless allowed.
std::vector<Case12Params> case12_enumerate(const BigInt& N1, const BigInt& N2,
                                           const BigInt& delta_max,
                                           bool allow_degenerate = false);

struct Rejection {
  std::string constraint;
};

/// The discriminant construction for addition over division with integer r1 = a
/// and integer r2 = c: c = ((f(a-1))^2 - K^2) / (4f^2), e = (-f(a-1) + sign*K) / 2,
/// triple (a, c, e/f). Returns the first violated constraint on rejection.
std::variant<Triple, Rejection> case13_family5(const BigInt& a, const BigInt& f, const BigInt& K,
                                               int sign);

}  // namespace ratdist
