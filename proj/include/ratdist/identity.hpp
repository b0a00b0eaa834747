#pragma once

// Evaluation of the generalized distributive identity
//     r1 o (r2 * r3) == (r1 o r2) * (r1 o r3)
// for every ordered pair (o, *) of the four rational operations.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ratdist/rational.hpp"

namespace ratdist {

enum class BinOp { Add, Sub, Mul, Div };

inline constexpr std::array<BinOp, 4> kAllOps = {BinOp::Add, BinOp::Sub, BinOp::Mul,
                                                 BinOp::Div};

/// "add", "sub", "mul", "div".
std::string_view op_name(BinOp op);
/// "+", "-", "*", "/".
std::string_view op_symbol(BinOp op);
/// Accepts names ("add"), long names ("plus") and symbols ("+").
std::optional<BinOp> parse_op(std::string_view text);

/// An ordered (outer, inner) operation pair: outer distributes over inner.
struct CaseId {
  BinOp outer = BinOp::Mul;
  BinOp inner = BinOp::Add;

  /// Numbered cases 1..14; empty for the two base laws.
  std::optional<int> case_number() const;
  /// "1".."14", or "L1"/"L2" for multiplication over addition/subtraction.
  std::string label() const;
  /// "sub/mul" style: outer name, slash, inner name.
  std::string op_pair() const;

  /// Accepts a label ("12", "L1") or op-pair syntax ("sub/mul").
  static std::optional<CaseId> parse(std::string_view text);
  /// Throws std::domain_error for numbers outside 1..14.
  static CaseId numbered(int n);
  static CaseId base_law(int which);

  friend auto operator<=>(const CaseId&, const CaseId&) = default;
};

/// All 16 pairs, ordered L1, L2, 1, 2, ..., 14.
const std::array<CaseId, 16>& all_cases();

struct Triple {
  Rational r1, r2, r3;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class Verdict { Holds, Fails, Undefined };
std::string_view verdict_name(Verdict v);

/// Sub-operations in the fixed order used to report undefinedness.
enum class EvalSite { LhsInner, LhsOuter, RhsFirstOuter, RhsSecondOuter, RhsInner };
std::string_view site_name(EvalSite s);

struct CheckResult {
  Verdict verdict = Verdict::Undefined;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<EvalSite> undefined_site;

  bool holds() const { return verdict == Verdict::Holds; }
};

/// x op y; division by zero yields nullopt rather than throwing.
std::optional<Rational> apply(BinOp op, const Rational& x, const Rational& y);

/// Evaluates both sides. HOLDS iff both are defined and equal; UNDEFINED iff
/// any sub-operation divides by zero; FAILS otherwise. Side values that could
/// be computed are reported even when the verdict is UNDEFINED.
CheckResult check(const CaseId& c, const Triple& t);

}  // namespace ratdist
