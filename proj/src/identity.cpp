#include "ratdist/identity.hpp"

#include <charconv>
#include <stdexcept>

namespace ratdist {

namespace {

struct NumberedCase {
  int number;
  BinOp outer;
  BinOp inner;
};

constexpr std::array<NumberedCase, 14> kNumbered = {{
    {1, BinOp::Add, BinOp::Add},
    {2, BinOp::Add, BinOp::Sub},
    {3, BinOp::Mul, BinOp::Mul},
    {4, BinOp::Mul, BinOp::Div},
    {5, BinOp::Sub, BinOp::Sub},
    {6, BinOp::Sub, BinOp::Add},
    {7, BinOp::Div, BinOp::Div},
    {8, BinOp::Div, BinOp::Mul},
    {9, BinOp::Div, BinOp::Add},
    {10, BinOp::Div, BinOp::Sub},
    {11, BinOp::Add, BinOp::Mul},
    {12, BinOp::Sub, BinOp::Mul},
    {13, BinOp::Add, BinOp::Div},
    {14, BinOp::Sub, BinOp::Div},
}};

}  // namespace

std::string_view op_name(BinOp op) {
  switch (op) {
    case BinOp::Add: return "add";
    case BinOp::Sub: return "sub";
    case BinOp::Mul: return "mul";
    case BinOp::Div: return "div";
  }
  return "?";
}

std::string_view op_symbol(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
  }
  return "?";
}

std::optional<BinOp> parse_op(std::string_view text) {
  if (text == "add" || text == "plus" || text == "+") return BinOp::Add;
  if (text == "sub" || text == "minus" || text == "-") return BinOp::Sub;
  if (text == "mul" || text == "times" || text == "*") return BinOp::Mul;
  if (text == "div" || text == "divide" || text == "/") return BinOp::Div;
  return std::nullopt;
}

std::optional<int> CaseId::case_number() const {
  for (const auto& n : kNumbered)
    if (n.outer == outer && n.inner == inner) return n.number;
  return std::nullopt;
}

std::string CaseId::label() const {
  if (auto n = case_number()) return std::to_string(*n);
  return inner == BinOp::Add ? "L1" : "L2";
}

std::string CaseId::op_pair() const {
  std::string s(op_name(outer));
  s += '/';
  s += op_name(inner);
  return s;
}

CaseId CaseId::numbered(int n) {
  if (n < 1 || n > 14) throw std::domain_error("case number must be in 1..14");
  const auto& e = kNumbered[static_cast<std::size_t>(n - 1)];
  return {e.outer, e.inner};
}

CaseId CaseId::base_law(int which) {
  if (which != 1 && which != 2) throw std::domain_error("base law must be L1 or L2");
  return {BinOp::Mul, which == 1 ? BinOp::Add : BinOp::Sub};
}

std::optional<CaseId> CaseId::parse(std::string_view text) {
  if (text == "L1" || text == "l1") return base_law(1);
  if (text == "L2" || text == "l2") return base_law(2);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto outer = parse_op(text.substr(0, slash));
    auto inner = parse_op(text.substr(slash + 1));
    if (!outer || !inner) return std::nullopt;
    return CaseId{*outer, *inner};
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || ptr != text.data() + text.size() || n < 1 || n > 14)
    return std::nullopt;
  return numbered(n);
}

const std::array<CaseId, 16>& all_cases() {
  static const std::array<CaseId, 16> cases = [] {
    std::array<CaseId, 16> a{};
    a[0] = CaseId::base_law(1);
    a[1] = CaseId::base_law(2);
    for (int n = 1; n <= 14; ++n) a[static_cast<std::size_t>(n + 1)] = CaseId::numbered(n);
    return a;
  }();
  return cases;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Undefined: return "UNDEFINED";
  }
  return "?";
}

std::string_view site_name(EvalSite s) {
  switch (s) {
    case EvalSite::LhsInner: return "lhs inner (r2 * r3)";
    case EvalSite::LhsOuter: return "lhs outer (r1 o (r2 * r3))";
    case EvalSite::RhsFirstOuter: return "rhs first outer (r1 o r2)";
    case EvalSite::RhsSecondOuter: return "rhs second outer (r1 o r3)";
    case EvalSite::RhsInner: return "rhs inner ((r1 o r2) * (r1 o r3))";
  }
  return "?";
}

std::optional<Rational> apply(BinOp op, const Rational& x, const Rational& y) {
  switch (op) {
    case BinOp::Add: return x + y;
    case BinOp::Sub: return x - y;
    case BinOp::Mul: return x * y;
    case BinOp::Div:
      if (y.is_zero()) return std::nullopt;
      return x / y;
  }
  return std::nullopt;
}

CheckResult check(const CaseId& c, const Triple& t) {
  CheckResult res;
  auto note = [&res](EvalSite s) {
    if (!res.undefined_site) res.undefined_site = s;
  };

  auto inner_l = apply(c.inner, t.r2, t.r3);
  if (!inner_l) note(EvalSite::LhsInner);
  if (inner_l) {
    res.lhs = apply(c.outer, t.r1, *inner_l);
    if (!res.lhs) note(EvalSite::LhsOuter);
  }

  auto first = apply(c.outer, t.r1, t.r2);
  if (!first) note(EvalSite::RhsFirstOuter);
  auto second = apply(c.outer, t.r1, t.r3);
  if (!second) note(EvalSite::RhsSecondOuter);
  if (first && second) {
    res.rhs = apply(c.inner, *first, *second);
    if (!res.rhs) note(EvalSite::RhsInner);
  }

  if (res.undefined_site)
    res.verdict = Verdict::Undefined;
  else
    res.verdict = (*res.lhs == *res.rhs) ? Verdict::Holds : Verdict::Fails;
  return res;
}

}  // namespace ratdist
