#include "ratdist/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

#include "ratdist/catalog.hpp"

namespace ratdist {

namespace {

// Runs work(i) for i in [0, n) on up to `jobs` threads. Each index owns its
// output slot, so no synchronization beyond the index counter is needed.
void for_each_partition(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& work) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) work(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct Partial {
  std::uint64_t holds = 0;
  std::uint64_t missing = 0, spurious = 0, gap = 0;
  std::vector<Triple> missing_list, spurious_list, gap_list;
};

void append_capped(std::vector<Triple>& dst, const std::vector<Triple>& src, std::size_t limit) {
  for (const auto& t : src) {
    if (limit != 0 && dst.size() >= limit) return;
    dst.push_back(t);
  }
}

void push_capped(std::vector<Triple>& dst, const Triple& t, std::size_t limit) {
  if (limit == 0 || dst.size() < limit) dst.push_back(t);
}

std::string describe(const Triple& t, const CheckResult& r) {
  std::string s = "(" + t.r1.short_str() + ", " + t.r2.short_str() + ", " + t.r3.short_str() +
                  "): " + std::string(verdict_name(r.verdict));
  if (r.lhs && r.rhs) s += " (lhs " + r.lhs->short_str() + ", rhs " + r.rhs->short_str() + ")";
  return s;
}

// Printed and corrected forms of the subtraction-over-division families
// disagree; record one instance of each so reports carry the evidence.
std::vector<std::string> case14_notes() {
  const CaseId c = CaseId::numbered(14);
  std::vector<std::string> notes;
  FamilyParams ef{{"E", 1}, {"F", 3}};
  Triple printed3 = generate({c, 3}, ef, FamilyForm::AsPrinted);
  Triple fixed3 = generate({c, 3}, ef, FamilyForm::Corrected);
  notes.push_back("family 3 printed form r2 = E^2/(F(F-2E)) at E=1, F=3: " +
                  describe(printed3, check(c, printed3)));
  notes.push_back("family 3 corrected form r2 = E^2/(F(2E-F)) at E=1, F=3: " +
                  describe(fixed3, check(c, fixed3)));
  FamilyParams p1{{"r2", 1}, {"r3", 2}};
  Triple printed1 = generate({c, 1}, p1, FamilyForm::AsPrinted);
  notes.push_back("family 1 printed form (0, r2, r3) at r2=1, r3=2: " +
                  describe(printed1, check(c, printed1)) +
                  "; with r1 = 0 the identity forces r2 = 0");
  return notes;
}

}  // namespace

std::vector<Rational> enumerate_rationals(const SearchBounds& b) {
  if (b.num_bound < 1 || b.den_bound < 1) throw std::domain_error("search bounds must be >= 1");
  std::vector<Rational> out;
  for (std::int64_t d = 1; d <= b.den_bound; ++d) {
    for (std::int64_t n = -b.num_bound; n <= b.num_bound; ++n) {
      if (gcd(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d))) != 1) continue;
      out.push_back(Rational::make(static_cast<long>(n), static_cast<long>(d)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport verify_characterization(const CaseId& c, const SearchBounds& b,
                                           const SearchOptions& opts) {
  const auto grid = enumerate_rationals(b);
  const std::size_t limit = opts.list_limit;
  std::vector<Partial> parts(grid.size());

  for_each_partition(grid.size(), opts.jobs, [&](std::size_t i) {
    Partial& p = parts[i];
    Triple t{grid[i], 0, 0};
    for (const auto& r2 : grid) {
      t.r2 = r2;
      for (const auto& r3 : grid) {
        t.r3 = r3;
        bool holds = check(c, t).holds();
        bool mem = member(c, t);
        if (holds) ++p.holds;
        if (holds && !mem) {
          ++p.missing;
          push_capped(p.missing_list, t, limit);
        }
        if (mem && !holds) {
          ++p.spurious;
          push_capped(p.spurious_list, t, limit);
        }
        if (holds && !family_union_member(c, t)) {
          ++p.gap;
          push_capped(p.gap_list, t, limit);
        }
      }
    }
  });

  VerificationReport rep;
  rep.case_id = c;
  rep.bounds = b;
  rep.total_triples = static_cast<std::uint64_t>(grid.size()) * grid.size() * grid.size();
  for (const auto& p : parts) {
    rep.holds += p.holds;
    rep.missing_count += p.missing;
    rep.spurious_count += p.spurious;
    rep.coverage_gap_count += p.gap;
    append_capped(rep.missing, p.missing_list, limit);
    append_capped(rep.spurious, p.spurious_list, limit);
    append_capped(rep.coverage_gap, p.gap_list, limit);
  }
  if (c.case_number() == 14) rep.notes = case14_notes();
  return rep;
}

std::vector<Triple> search_solutions(const CaseId& c, const SearchBounds& b, unsigned jobs) {
  const auto grid = enumerate_rationals(b);
  std::vector<std::vector<Triple>> parts(grid.size());
  for_each_partition(grid.size(), jobs, [&](std::size_t i) {
    Triple t{grid[i], 0, 0};
    for (const auto& r2 : grid) {
      t.r2 = r2;
      for (const auto& r3 : grid) {
        t.r3 = r3;
        if (check(c, t).holds()) parts[i].push_back(t);
      }
    }
  });
  std::vector<Triple> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                   std::make_move_iterator(p.end()));
  return out;
}

}  // namespace ratdist
