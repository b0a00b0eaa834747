#pragma once

// Bounded exhaustive search over canonical rationals n/d with |n| <= num_bound
// and 1 <= d <= den_bound. Work is split by r1; partial results are merged in
// r1 order, so output never depends on the number of workers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ratdist/identity.hpp"
#include "ratdist/rational.hpp"

namespace ratdist {

struct SearchBounds {
  std::int64_t num_bound = 1;
  std::int64_t den_bound = 1;
};

struct SearchOptions {
  unsigned jobs = 1;
  /// Cap on listed triples per report list; 0 lists everything.
  std::size_t list_limit = 100;
};

struct VerificationReport {
  CaseId case_id;
  SearchBounds bounds;
  std::uint64_t total_triples = 0;
  std::uint64_t holds = 0;
  // Counts are exact; the lists may be truncated at list_limit.
  std::uint64_t missing_count = 0;
  std::uint64_t spurious_count = 0;
  std::uint64_t coverage_gap_count = 0;
  std::vector<Triple> missing;       // check HOLDS, member false
  std::vector<Triple> spurious;      // member true, check not HOLDS
  std::vector<Triple> coverage_gap;  // check HOLDS, in no listed family
  std::vector<std::string> notes;

  bool exact() const { return missing_count == 0 && spurious_count == 0; }
};

/// Ascending by value. Throws std::domain_error if a bound is below 1.
std::vector<Rational> enumerate_rationals(const SearchBounds& b);

VerificationReport verify_characterization(const CaseId& c, const SearchBounds& b,
                                           const SearchOptions& opts = {});

/// All grid triples with check == HOLDS, in lexicographic order.
std::vector<Triple> search_solutions(const CaseId& c, const SearchBounds& b, unsigned jobs = 1);

}  // namespace ratdist
