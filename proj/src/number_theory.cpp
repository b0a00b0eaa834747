#include "ratdist/number_theory.hpp"

#include <stdexcept>

namespace ratdist {

namespace {

// Floor division toward negative infinity.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

void require_case12_pre(const BigInt& N1, const BigInt& N2) {
  if (N1 == 0) throw std::domain_error("N1 must be nonzero");
  if (!mpz_odd_p(N1.get_mpz_t())) throw std::domain_error("N1 must be odd");
  if (N2 == 0) throw std::domain_error("N2 must be nonzero");
  if (gcd(N1, N2) != 1) throw std::domain_error("gcd(N1, N2) must be 1");
}

}  // namespace

ExtGcdResult ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = ::abs(a), r = ::abs(b);
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r == 0) return {0, 0, 0};
  if (sgn(a) < 0) old_s = -old_s;
  if (sgn(b) < 0) old_t = -old_t;
  return {old_r, old_s, old_t};
}

DiophantineSolutionSet solve_linear_diophantine(const BigInt& p, const BigInt& q,
                                                 const BigInt& t) {
  if (p == 0 && q == 0) throw std::domain_error("p and q must not both be zero");
  DiophantineSolutionSet out;
  auto [g, x, y] = ext_gcd(p, q);
  if (!divides(g, t)) return out;
  BigInt scale = t / g;
  out.empty = false;
  out.x0 = x * scale;
  out.y0 = y * scale;
  out.dx = q / g;
  out.dy = -(p / g);
  if (out.dx != 0) {
    // Shift k so that x0 lands in [1, |dx|].
    BigInt m = ::abs(out.dx);
    BigInt k = floor_div(out.x0 - 1, m);
    if (sgn(out.dx) > 0) {
      out.x0 -= k * out.dx;
      out.y0 -= k * out.dy;
    } else {
      out.x0 += k * out.dx;
      out.y0 += k * out.dy;
    }
  }
  return out;
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative number");
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2) > sqrt(n).
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  BigInt x = 1;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), (bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) / 2;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<BigInt> is_perfect_square(const BigInt& n) {
  if (sgn(n) < 0) return std::nullopt;
  BigInt r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Triple Case12Params::triple() const {
  return {Rational(BigInt(delta * N1)), Rational(BigInt(delta * N2)), Rational(BigInt(N1 * N3))};
}

std::optional<Triple> case12_construct(const BigInt& N1, const BigInt& N2, const BigInt& delta,
                                       bool allow_degenerate) {
  require_case12_pre(N1, N2);
  if (delta < 1) throw std::domain_error("delta must be >= 1");
  BigInt coeff = 2 * N2 - N1;  // never zero: N1 is odd
  BigInt rhs = 1 - delta * (N1 - N2);
  if (!divides(coeff, rhs)) return std::nullopt;
  Case12Params p{N1, N2, delta, rhs / coeff};
  if (p.N3 == 0 && !allow_degenerate) return std::nullopt;
  return p.triple();
}

std::vector<Case12Params> case12_enumerate(const BigInt& N1, const BigInt& N2,
                                           const BigInt& delta_max, bool allow_degenerate) {
  require_case12_pre(N1, N2);
  std::vector<Case12Params> out;
  auto sols = solve_linear_diophantine(N1 - N2, 2 * N2 - N1, 1);
  if (sols.empty || delta_max < 1) return out;
  // dx = (2*N2 - N1)/g is nonzero, and x0 is normalized into [1, |dx|],
  // so walking k >= 0 in the direction of |dx| visits every delta >= 1.
  BigInt k = 0;
  BigInt k_step = sgn(sols.dx) > 0 ? 1 : -1;
  for (;;) {
    auto [delta, N3] = sols.at(k);
    if (delta > delta_max) break;
    if (N3 != 0 || allow_degenerate) out.push_back({N1, N2, delta, N3});
    k += k_step;
  }
  return out;
}

std::variant<Triple, Rejection> case13_family5(const BigInt& a, const BigInt& f, const BigInt& K,
                                               int sign) {
  if (sign != 1 && sign != -1) return Rejection{"sign must be +1 or -1"};
  if (a == 0) return Rejection{"a != 0"};
  if (f <= 0) return Rejection{"f > 0"};
  if (sgn(K) < 0) return Rejection{"K >= 0"};

  BigInt fa = f * (a - 1);
  BigInt e_twice = -fa + sign * K;
  if (!divides(BigInt(2), e_twice)) return Rejection{"e integral (f(a-1) and K of equal parity)"};
  BigInt c_num = fa * fa - K * K;
  BigInt c_den = 4 * f * f;
  if (!divides(c_den, c_num)) return Rejection{"c integral (4f^2 divides (f(a-1))^2 - K^2)"};
  BigInt c = c_num / c_den;
  BigInt e = e_twice / 2;
  if (c == 0) return Rejection{"c != 0 (ace != 0)"};
  if (e == 0) return Rejection{"e != 0 (-f(a-1) +/- K != 0)"};
  if (gcd(e, f) != 1) return Rejection{"gcd(e, f) = 1"};
  // r1 + r3 == 0  <=>  a*f + e == 0
  if (a * f + e == 0) return Rejection{"r1 != -r3"};
  return Triple{Rational(a), Rational(c), Rational::make(e, f)};
}

}  // namespace ratdist
