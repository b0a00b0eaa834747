#pragma once

// Exact characterizations of every distributive case, generators for the
// listed parametric families, and closed-form solving for r2 in the three
// polynomial cases.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratdist/identity.hpp"
#include "ratdist/rational.hpp"

namespace ratdist {

/// A family parameter violated its constraint. The message names it.
class ConstraintViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FamilyId {
  CaseId case_id;
  int index = 1;

  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// All registered families, in case order then index order.
const std::vector<FamilyId>& all_families();
bool is_registered(const FamilyId& id);
/// Number of families registered for a case.
int family_count(const CaseId& c);
/// Parameter names the generator reads, e.g. {"delta"}.
std::vector<std::string> family_param_names(const FamilyId& id);

/// Named parameters of one family instance.
class FamilyParams {
 public:
  FamilyParams() = default;
  FamilyParams(std::initializer_list<std::pair<const std::string, Rational>> init)
      : values_(init) {}

  void set(const std::string& key, Rational v) { values_[key] = std::move(v); }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, Rational>& values() const { return values_; }

  /// Throws ConstraintViolation when missing.
  const Rational& rational(const std::string& key) const;
  /// Throws ConstraintViolation when missing or not an integer.
  BigInt integer(const std::string& key) const;

 private:
  std::map<std::string, Rational> values_;
};

/// Selects between the corrected generators and the literal printed forms.
/// The two differ only for subtraction over division (case 14), Families 1
/// and 3, whose printed forms do not satisfy the identity.
enum class FamilyForm { Corrected, AsPrinted };

/// Exact characterization, definedness constraints included:
/// member(c, t) == (check(c, t).verdict == HOLDS).
bool member(const CaseId& c, const Triple& t);

/// Builds the family's triple. Throws ConstraintViolation naming the first
/// violated parameter constraint, or for an unregistered family.
Triple generate(const FamilyId& family, const FamilyParams& params,
                FamilyForm form = FamilyForm::Corrected);

/// Whether t has the shape of the given family (corrected forms).
bool in_family(const FamilyId& family, const Triple& t);

/// t lies in at least one listed family of its case.
bool family_union_member(const CaseId& c, const Triple& t);

struct R2Solution {
  enum class Kind { Unique, All, None };
  Kind kind = Kind::None;
  std::optional<Rational> value;  // set iff kind == Unique
};
std::string_view r2_kind_name(R2Solution::Kind k);

/// Solves the case's linear-in-r2 characterization for r2 given r1 and r3.
/// Only cases 12, 13 and 14 are accepted. Throws std::domain_error for other
/// cases, or when (r1, r3) leaves the identity undefined (cases 13, 14).
R2Solution solve_r2(const CaseId& c, const Rational& r1, const Rational& r3);

/// Left-hand sides of the polynomial characterizations (zero iff satisfied).
Rational case12_polynomial(const Triple& t);
Rational case13_polynomial(const Triple& t);
Rational case14_polynomial(const Triple& t);

}  // namespace ratdist
