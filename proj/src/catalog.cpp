#include "ratdist/catalog.hpp"

#include <algorithm>
#include <functional>

#include "ratdist/number_theory.hpp"

namespace ratdist {

namespace {

using Gen = std::function<Triple(const FamilyParams&, FamilyForm)>;
using Shape = std::function<bool(const Triple&)>;

struct FamilyDef {
  FamilyId id;
  std::vector<std::string> params;
  Gen gen;
  Shape shape;
};

void require(bool ok, const char* constraint) {
  if (!ok) throw ConstraintViolation(std::string("constraint violated: ") + constraint);
}

const Rational kOne(1);

Triple zero_first(const FamilyParams& p) { return {0, p.rational("r2"), p.rational("r3")}; }
Triple one_first(const FamilyParams& p) { return {1, p.rational("r2"), p.rational("r3")}; }

bool nonzero23(const Triple& t) { return !t.r2.is_zero() && !t.r3.is_zero(); }

// Family 5 of addition over division, recognized by reconstructing its
// parameters: a = r1, c = r2 integers, r3 = e/f, K from the discriminant.
bool in_case13_family5(const Triple& t) {
  if (!t.r1.is_integer() || !t.r2.is_integer() || t.r3.is_zero()) return false;
  const BigInt& a = t.r1.num();
  const BigInt& c = t.r2.num();
  const BigInt& f = t.r3.den();
  BigInt fa = f * (a - 1);
  auto K = is_perfect_square(BigInt(fa * fa - 4 * c * f * f));
  if (!K) return false;
  for (int sign : {1, -1}) {
    auto r = case13_family5(a, f, *K, sign);
    if (auto* tri = std::get_if<Triple>(&r); tri && *tri == t) return true;
  }
  return false;
}

bool in_case14_family3(const Triple& t) {
  if (t.r1 != kOne || t.r3.is_zero()) return false;
  const BigInt& E = t.r3.num();
  const BigInt& F = t.r3.den();
  if (2 * E == F || E == F) return false;
  return t.r2 == Rational::make(E * E, F * (2 * E - F));
}

std::vector<FamilyDef> build_registry() {
  std::vector<FamilyDef> reg;
  auto add = [&reg](CaseId c, int index, std::vector<std::string> params, Gen gen, Shape shape) {
    reg.push_back({{c, index}, std::move(params), std::move(gen), std::move(shape)});
  };
  auto num = [](int n) { return CaseId::numbered(n); };

  for (int law : {1, 2}) {
    add(CaseId::base_law(law), 1, {"r1", "r2", "r3"},
        [](const FamilyParams& p, FamilyForm) {
          return Triple{p.rational("r1"), p.rational("r2"), p.rational("r3")};
        },
        [](const Triple&) { return true; });
  }

  // r1 = 0 is the whole solution set for these four.
  for (int n : {1, 2, 5, 6}) {
    add(num(n), 1, {"r2", "r3"},
        [](const FamilyParams& p, FamilyForm) { return zero_first(p); },
        [](const Triple& t) { return t.r1.is_zero(); });
  }

  add(num(3), 1, {"r1", "r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t{p.rational("r1"), p.rational("r2"), p.rational("r3")};
        require((t.r1 * t.r2 * t.r3).is_zero(), "r1*r2*r3 = 0");
        return t;
      },
      [](const Triple& t) { return (t.r1 * t.r2 * t.r3).is_zero(); });
  add(num(3), 2, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) { return one_first(p); },
      [](const Triple& t) { return t.r1 == kOne; });

  add(num(4), 1, {"r1", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t{p.rational("r1"), 0, p.rational("r3")};
        require(!(t.r1 * t.r3).is_zero(), "r1*r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r2.is_zero() && !(t.r1 * t.r3).is_zero(); });
  add(num(4), 2, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = one_first(p);
        require(!t.r3.is_zero(), "r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r1 == kOne && !t.r3.is_zero(); });

  add(num(7), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = one_first(p);
        require(nonzero23(t), "r2*r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r1 == kOne && nonzero23(t); });

  add(num(8), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = zero_first(p);
        require(nonzero23(t), "r2*r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r1.is_zero() && nonzero23(t); });
  add(num(8), 2, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = one_first(p);
        require(nonzero23(t), "r2*r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r1 == kOne && nonzero23(t); });

  add(num(9), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = zero_first(p);
        require(nonzero23(t), "r2*r3 != 0");
        require(!(t.r2 + t.r3).is_zero(), "r2 + r3 != 0");
        return t;
      },
      [](const Triple& t) {
        return t.r1.is_zero() && nonzero23(t) && !(t.r2 + t.r3).is_zero();
      });
  add(num(10), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = zero_first(p);
        require(nonzero23(t), "r2*r3 != 0");
        require(t.r2 != t.r3, "r2 != r3");
        return t;
      },
      [](const Triple& t) { return t.r1.is_zero() && nonzero23(t) && t.r2 != t.r3; });

  add(num(11), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) { return zero_first(p); },
      [](const Triple& t) { return t.r1.is_zero(); });
  add(num(11), 2, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Rational r2 = p.rational("r2"), r3 = p.rational("r3");
        return Triple{kOne - (r2 + r3), r2, r3};
      },
      [](const Triple& t) { return t.r1 + t.r2 + t.r3 == kOne; });

  // Subtraction over multiplication.
  add(num(12), 1, {"branch", "value"},
      [](const FamilyParams& p, FamilyForm) {
        BigInt branch = p.integer("branch");
        require(branch == 2 || branch == 3, "branch in {2, 3}");
        const Rational& v = p.rational("value");
        return branch == 2 ? Triple{0, v, 0} : Triple{0, 0, v};
      },
      [](const Triple& t) { return t.r1.is_zero() && (t.r2 * t.r3).is_zero(); });
  add(num(12), 2, {"r3"},
      [](const FamilyParams& p, FamilyForm) {
        Rational r3 = p.rational("r3");
        require(r3 != Rational(-1), "r3 != -1");
        return Triple{r3 + kOne, 0, r3};
      },
      [](const Triple& t) {
        return t.r2.is_zero() && t.r3 != Rational(-1) && t.r1 == t.r3 + kOne;
      });
  add(num(12), 3, {"r2"},
      [](const FamilyParams& p, FamilyForm) {
        Rational r2 = p.rational("r2");
        require(r2 != Rational(-1), "r2 != -1");
        return Triple{r2 + kOne, r2, 0};
      },
      [](const Triple& t) {
        return t.r3.is_zero() && t.r2 != Rational(-1) && t.r1 == t.r2 + kOne;
      });
  add(num(12), 4, {"delta"},
      [](const FamilyParams& p, FamilyForm) {
        BigInt d = p.integer("delta");
        require(d >= 2, "delta >= 2");
        return Triple{Rational(BigInt(3 * d)), Rational(BigInt(2 * d)),
                      Rational(BigInt(3 * (1 - d)))};
      },
      [](const Triple& t) {
        if (!t.r1.is_integer() || !mpz_divisible_ui_p(t.r1.num().get_mpz_t(), 3)) return false;
        BigInt d = t.r1.num() / 3;
        return d >= 2 && t.r2 == Rational(BigInt(2 * d)) && t.r3 == Rational(BigInt(3 * (1 - d)));
      });

  // Addition over division.
  add(num(13), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm) {
        Triple t = zero_first(p);
        require(!t.r3.is_zero(), "r3 != 0");
        return t;
      },
      [](const Triple& t) { return t.r1.is_zero() && !t.r3.is_zero(); });
  add(num(13), 2, {"r3"},
      [](const FamilyParams& p, FamilyForm) {
        Rational r3 = p.rational("r3");
        require(!r3.is_zero(), "r3 != 0");
        require(r3 != kOne, "r3 != 1");
        return Triple{kOne - r3, 0, r3};
      },
      [](const Triple& t) {
        return t.r2.is_zero() && !t.r3.is_zero() && t.r3 != kOne && t.r1 == kOne - t.r3;
      });
  add(num(13), 3, {"a"},
      [](const FamilyParams& p, FamilyForm) {
        BigInt a = p.integer("a");
        require(a != 0, "a != 0");
        require(a != -1, "a != -1 (r1 != -r3)");
        return Triple{Rational(a), Rational(BigInt(-a)), kOne};
      },
      [](const Triple& t) {
        return t.r3 == kOne && t.r1.is_integer() && !t.r1.is_zero() && t.r1 != Rational(-1) &&
               t.r2 == -t.r1;
      });
  add(num(13), 4, {"c", "d"},
      [](const FamilyParams& p, FamilyForm) {
        BigInt c = p.integer("c");
        BigInt d = p.integer("d");
        require(c != 0, "c != 0");
        require(d >= 1, "d >= 1");
        Rational q = Rational::make(c, d);
        require(q != Rational(-1), "c/d != -1 (r1 != -r3)");
        return Triple{q, -q, kOne};
      },
      [](const Triple& t) {
        return t.r3 == kOne && !t.r1.is_zero() && t.r1 != Rational(-1) && t.r2 == -t.r1;
      });
  add(num(13), 5, {"a", "f", "K", "sign"},
      [](const FamilyParams& p, FamilyForm) {
        BigInt sign = p.integer("sign");
        require(sign == 1 || sign == -1, "sign in {+1, -1}");
        auto r = case13_family5(p.integer("a"), p.integer("f"), p.integer("K"),
                                static_cast<int>(sign.get_si()));
        if (auto* rej = std::get_if<Rejection>(&r)) require(false, rej->constraint.c_str());
        return std::get<Triple>(r);
      },
      in_case13_family5);

  // Subtraction over division.
  add(num(14), 1, {"r2", "r3"},
      [](const FamilyParams& p, FamilyForm form) {
        Rational r3 = p.rational("r3");
        require(!r3.is_zero(), "r3 != 0");
        if (form == FamilyForm::AsPrinted) return Triple{0, p.rational("r2"), r3};
        // With r1 = 0 the identity reads -r2/r3 = r2/r3, forcing r2 = 0.
        if (p.has("r2")) require(p.rational("r2").is_zero(), "r2 = 0");
        return Triple{0, 0, r3};
      },
      [](const Triple& t) { return t.r1.is_zero() && t.r2.is_zero() && !t.r3.is_zero(); });
  add(num(14), 2, {"r3"},
      [](const FamilyParams& p, FamilyForm) {
        Rational r3 = p.rational("r3");
        require(!r3.is_zero(), "r3 != 0");
        require(r3 != Rational(-1), "r3 != -1");
        return Triple{r3 + kOne, 0, r3};
      },
      [](const Triple& t) {
        return t.r2.is_zero() && !t.r3.is_zero() && t.r3 != Rational(-1) &&
               t.r1 == t.r3 + kOne;
      });
  add(num(14), 3, {"E", "F"},
      [](const FamilyParams& p, FamilyForm form) {
        BigInt E = p.integer("E");
        BigInt F = p.integer("F");
        require(F > 0, "F > 0");
        require(E != 0, "E != 0");
        require(gcd(E, F) == 1, "gcd(E, F) = 1");
        if (form == FamilyForm::AsPrinted) {
          require(F > 2 * E, "F > 2E");
          return Triple{kOne, Rational::make(E * E, F * (F - 2 * E)), Rational::make(E, F)};
        }
        require(2 * E != F, "2E != F");
        require(E != F, "E != F (r1 != r3)");
        return Triple{kOne, Rational::make(E * E, F * (2 * E - F)), Rational::make(E, F)};
      },
      in_case14_family3);

  return reg;
}

const std::vector<FamilyDef>& registry() {
  static const std::vector<FamilyDef> reg = build_registry();
  return reg;
}

const FamilyDef* find_family(const FamilyId& id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

}  // namespace

const Rational& FamilyParams::rational(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConstraintViolation("missing parameter: " + key);
  return it->second;
}

BigInt FamilyParams::integer(const std::string& key) const {
  const Rational& v = rational(key);
  if (!v.is_integer()) throw ConstraintViolation("parameter must be an integer: " + key);
  return v.num();
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

bool is_registered(const FamilyId& id) { return find_family(id) != nullptr; }

int family_count(const CaseId& c) {
  return static_cast<int>(std::count_if(registry().begin(), registry().end(),
                                        [&](const FamilyDef& d) { return d.id.case_id == c; }));
}

std::vector<std::string> family_param_names(const FamilyId& id) {
  const FamilyDef* d = find_family(id);
  if (!d) throw ConstraintViolation("unknown family");
  return d->params;
}

Rational case12_polynomial(const Triple& t) {
  const auto& [r1, r2, r3] = t;
  return r1 * r1 - r1 * r3 - r1 * r2 + Rational(2) * r2 * r3 - r1;
}

Rational case13_polynomial(const Triple& t) {
  const auto& [r1, r2, r3] = t;
  return r1 * r3 + r3 * r3 + r2 - r3;
}

Rational case14_polynomial(const Triple& t) {
  const auto& [r1, r2, r3] = t;
  return r1 * r3 * r3 + r1 * r2 - Rational(2) * r2 * r3 + r1 * r3 - r3 * r1 * r1;
}

bool member(const CaseId& c, const Triple& t) {
  const auto& [r1, r2, r3] = t;
  auto n = c.case_number();
  if (!n) return true;
  switch (*n) {
    case 1:
    case 2:
    case 5:
    case 6: return r1.is_zero();
    case 3: return (r1 * r2 * r3).is_zero() || r1 == kOne;
    case 4: return (r2.is_zero() || r1 == kOne) && !r1.is_zero() && !r3.is_zero();
    case 7: return r1 == kOne && nonzero23(t);
    case 8: return (r1.is_zero() || r1 == kOne) && nonzero23(t);
    case 9: return r1.is_zero() && nonzero23(t) && !(r2 + r3).is_zero();
    case 10: return r1.is_zero() && nonzero23(t) && r2 != r3;
    case 11: return r1.is_zero() || r1 + r2 + r3 == kOne;
    case 12: return case12_polynomial(t).is_zero();
    case 13:
      return !r3.is_zero() && !(r1 + r3).is_zero() &&
             (r1.is_zero() || case13_polynomial(t).is_zero());
    case 14:
      // The polynomial already forces r2 = 0 when r1 = 0.
      return !r3.is_zero() && r1 != r3 && case14_polynomial(t).is_zero();
  }
  return false;
}

Triple generate(const FamilyId& family, const FamilyParams& params, FamilyForm form) {
  const FamilyDef* d = find_family(family);
  if (!d)
    throw ConstraintViolation("no family " + std::to_string(family.index) + " for case " +
                              family.case_id.label());
  return d->gen(params, form);
}

bool in_family(const FamilyId& family, const Triple& t) {
  const FamilyDef* d = find_family(family);
  return d && d->shape(t);
}

bool family_union_member(const CaseId& c, const Triple& t) {
  for (const auto& d : registry())
    if (d.id.case_id == c && d.shape(t)) return true;
  return false;
}

std::string_view r2_kind_name(R2Solution::Kind k) {
  switch (k) {
    case R2Solution::Kind::Unique: return "UNIQUE";
    case R2Solution::Kind::All: return "ALL";
    case R2Solution::Kind::None: return "NONE";
  }
  return "?";
}

namespace {

// r2 * coeff == rhs, solved over the rationals.
R2Solution solve_linear(const Rational& coeff, const Rational& rhs) {
  if (!coeff.is_zero()) return {R2Solution::Kind::Unique, rhs / coeff};
  return {rhs.is_zero() ? R2Solution::Kind::All : R2Solution::Kind::None, std::nullopt};
}

}  // namespace

R2Solution solve_r2(const CaseId& c, const Rational& r1, const Rational& r3) {
  auto n = c.case_number();
  const Rational two(2);
  if (n == 12) return solve_linear(two * r3 - r1, r1 * (r3 + kOne - r1));
  if (n == 13) {
    if (r3.is_zero()) throw std::domain_error("r3 != 0 required");
    if ((r1 + r3).is_zero()) throw std::domain_error("r1 != -r3 required");
    if (r1.is_zero()) return {R2Solution::Kind::All, std::nullopt};
    return {R2Solution::Kind::Unique, r3 * (kOne - r1 - r3)};
  }
  if (n == 14) {
    if (r3.is_zero()) throw std::domain_error("r3 != 0 required");
    if (r1 == r3) throw std::domain_error("r1 != r3 required");
    return solve_linear(two * r3 - r1, r1 * r3 * (r3 + kOne - r1));
  }
  throw std::domain_error("solve_r2 supports cases 12, 13 and 14 only");
}

}  // namespace ratdist
