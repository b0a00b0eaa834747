#include "ratdist/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratdist/catalog.hpp"
#include "ratdist/number_theory.hpp"
#include "ratdist/oracle.hpp"

namespace ratdist::cli {

using Json = nlohmann::ordered_json;

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

CaseId parse_case(std::string_view text) {
  auto c = CaseId::parse(text);
  if (!c) throw UsageError("unknown case: " + std::string(text));
  return *c;
}

BinOp parse_op_arg(std::string_view text) {
  auto op = parse_op(text);
  if (!op) throw UsageError("unknown operation: " + std::string(text));
  return *op;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : ""; }

Json jopt(const std::optional<Rational>& r) { return r ? Json(r->str()) : Json(nullptr); }

Json jcase(const CaseId& c) { return {{"label", c.label()}, {"ops", c.op_pair()}}; }

Json jtriple(const Triple& t) { return Json::array({t.r1.str(), t.r2.str(), t.r3.str()}); }

std::string plain_triple(const Triple& t) {
  return t.r1.short_str() + "," + t.r2.short_str() + "," + t.r3.short_str();
}

std::string csv_triple(const Triple& t) { return t.r1.str() + "," + t.r2.str() + "," + t.r3.str(); }

Json jcheck(const CheckResult& r) {
  return {{"verdict", verdict_name(r.verdict)},
          {"lhs", jopt(r.lhs)},
          {"rhs", jopt(r.rhs)},
          {"undefined_site", r.undefined_site ? Json(site_name(*r.undefined_site)) : Json(nullptr)}};
}

std::string site_str(const CheckResult& r) {
  return r.undefined_site ? std::string(site_name(*r.undefined_site)) : "";
}

constexpr const char* kCheckCsvHeader = "case,ops,r1,r2,r3,verdict,lhs,rhs,undefined_site";

void csv_check_row(std::ostream& os, const CaseId& c, const Triple& t, const CheckResult& r) {
  os << c.label() << ',' << c.op_pair() << ',' << csv_triple(t) << ',' << verdict_name(r.verdict)
     << ',' << opt_str(r.lhs) << ',' << opt_str(r.rhs) << ',' << csv_field(site_str(r)) << '\n';
}

std::string plain_check(const CheckResult& r) {
  std::string s(verdict_name(r.verdict));
  if (r.lhs) s += " lhs=" + r.lhs->short_str();
  if (r.rhs) s += " rhs=" + r.rhs->short_str();
  if (r.undefined_site) s += " undefined at " + std::string(site_name(*r.undefined_site));
  return s;
}

FamilyParams parse_params(const std::string& text) {
  FamilyParams p;
  if (text.empty()) return p;
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw UsageError("malformed parameter (expected key=value): " + std::string(item));
    std::string key(item.substr(0, eq));
    std::string_view val = item.substr(eq + 1);
    if (val == "+") {
      p.set(key, 1);
    } else {
      p.set(key, parse_rational(val));
    }
  }
  return p;
}

int sign_of(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("sign must be + or -");
}

void write_report(std::ostream& os, OutputFormat fmt, const VerificationReport& r) {
  if (fmt == OutputFormat::Json) {
    auto list = [](const std::vector<Triple>& v) {
      Json a = Json::array();
      for (const auto& t : v) a.push_back(jtriple(t));
      return a;
    };
    Json j = {{"command", "verify"},
              {"case", jcase(r.case_id)},
              {"bounds", {{"num_bound", r.bounds.num_bound}, {"den_bound", r.bounds.den_bound}}},
              {"total_triples", r.total_triples},
              {"holds", r.holds},
              {"exact", r.exact()},
              {"missing_count", r.missing_count},
              {"missing", list(r.missing)},
              {"spurious_count", r.spurious_count},
              {"spurious", list(r.spurious)},
              {"coverage_gap_count", r.coverage_gap_count},
              {"coverage_gap", list(r.coverage_gap)},
              {"notes", r.notes}};
    os << j.dump(2) << '\n';
  } else if (fmt == OutputFormat::Csv) {
    os << "case,ops,num_bound,den_bound,total_triples,holds,missing,spurious,coverage_gap\n"
       << r.case_id.label() << ',' << r.case_id.op_pair() << ',' << r.bounds.num_bound << ','
       << r.bounds.den_bound << ',' << r.total_triples << ',' << r.holds << ','
       << r.missing_count << ',' << r.spurious_count << ',' << r.coverage_gap_count << '\n';
  } else {
    os << "case " << r.case_id.label() << " (" << r.case_id.op_pair() << ")"
       << " num_bound=" << r.bounds.num_bound << " den_bound=" << r.bounds.den_bound << '\n'
       << "total_triples=" << r.total_triples << " holds=" << r.holds << '\n'
       << "missing=" << r.missing_count << " spurious=" << r.spurious_count
       << " coverage_gap=" << r.coverage_gap_count << '\n';
    auto list = [&os](const char* name, const std::vector<Triple>& v, std::uint64_t total) {
      if (v.empty()) return;
      os << name << (v.size() < total ? " (truncated)" : "") << ":\n";
      for (const auto& t : v) os << "  " << plain_triple(t) << '\n';
    };
    list("missing", r.missing, r.missing_count);
    list("spurious", r.spurious, r.spurious_count);
    list("coverage_gap", r.coverage_gap, r.coverage_gap_count);
    for (const auto& n : r.notes) os << "note: " << n << '\n';
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view n = body.substr(0, slash);
  std::string_view d = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(n) || !all_digits(d))
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  BigInt num(std::string(n), 10);
  BigInt den(std::string(d), 10);
  if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
  if (neg) num = -num;
  return Rational::make(num, den);
}

BigInt parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (!all_digits(body)) throw UsageError("malformed integer: '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

Triple parse_triple(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("triple must be r1,r2,r3: '" + std::string(text) + "'");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributive identities over the rationals", "ratdist"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "plain";
  std::string output_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("--output", output_path, "Write data to this file instead of stdout");

  // Each subcommand registers a handler writing data to the stream it's given.
  using Handler = std::function<int(std::ostream&, OutputFormat)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  // check
  std::string outer, inner, triple_text;
  {
    auto* sub = app.add_subcommand("check", "Evaluate both sides of the identity for one case");
    sub->add_option("--outer", outer, "Outer operation (add|sub|mul|div)")->required();
    sub->add_option("--inner", inner, "Inner operation (add|sub|mul|div)")->required();
    sub->add_option("--triple", triple_text, "r1,r2,r3")->required();
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c{parse_op_arg(outer), parse_op_arg(inner)};
      Triple t = parse_triple(triple_text);
      CheckResult r = check(c, t);
      if (fmt == OutputFormat::Json) {
        Json j = {{"command", "check"}, {"case", jcase(c)}, {"triple", jtriple(t)}};
        j.update(jcheck(r));
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << kCheckCsvHeader << '\n';
        csv_check_row(os, c, t, r);
      } else {
        os << plain_check(r) << '\n';
      }
      return r.holds() ? kSuccess : kNegative;
    });
  }

  // classify
  std::string classify_triple;
  {
    auto* sub = app.add_subcommand("classify", "Evaluate all 16 cases for one triple");
    sub->add_option("--triple", classify_triple, "r1,r2,r3")->required();
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      Triple t = parse_triple(classify_triple);
      if (fmt == OutputFormat::Json) {
        Json cases = Json::array();
        for (const auto& c : all_cases()) {
          Json e = {{"case", jcase(c)}};
          e.update(jcheck(check(c, t)));
          cases.push_back(e);
        }
        Json j = {{"command", "classify"}, {"triple", jtriple(t)}, {"cases", cases}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << kCheckCsvHeader << '\n';
        for (const auto& c : all_cases()) csv_check_row(os, c, t, check(c, t));
      } else {
        for (const auto& c : all_cases())
          os << c.label() << '\t' << c.op_pair() << '\t' << plain_check(check(c, t)) << '\n';
      }
      return kSuccess;
    });
  }

  // member
  std::string member_case, member_triple;
  {
    auto* sub = app.add_subcommand("member", "Test a triple against a case's characterization");
    sub->add_option("--case", member_case, "1..14, L1, L2 or outer/inner")->required();
    sub->add_option("--triple", member_triple, "r1,r2,r3")->required();
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c = parse_case(member_case);
      Triple t = parse_triple(member_triple);
      bool m = member(c, t);
      bool fam = family_union_member(c, t);
      if (fmt == OutputFormat::Json) {
        Json j = {{"command", "member"}, {"case", jcase(c)},        {"triple", jtriple(t)},
                  {"member", m},         {"in_listed_family", fam}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "case,ops,r1,r2,r3,member,in_listed_family\n"
           << c.label() << ',' << c.op_pair() << ',' << csv_triple(t) << ','
           << (m ? "true" : "false") << ',' << (fam ? "true" : "false") << '\n';
      } else {
        os << (m ? "true" : "false") << '\n';
      }
      return m ? kSuccess : kNegative;
    });
  }

  // generate
  std::string gen_case, gen_params;
  int gen_family = 1;
  bool gen_printed = false;
  {
    auto* sub = app.add_subcommand("generate", "Build a triple from a parametric family");
    sub->add_option("--case", gen_case, "Case label")->required();
    sub->add_option("--family", gen_family, "Family index within the case")->required();
    sub->add_option("--params", gen_params, "key=value,... (values are rationals)");
    sub->add_flag("--as-printed", gen_printed,
                  "Use the literal printed form where it differs from the corrected one");
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c = parse_case(gen_case);
      FamilyParams p = parse_params(gen_params);
      FamilyId id{c, gen_family};
      Triple t = generate(id, p, gen_printed ? FamilyForm::AsPrinted : FamilyForm::Corrected);
      if (fmt == OutputFormat::Json) {
        Json params = Json::object();
        for (const auto& [k, v] : p.values()) params[k] = v.str();
        Json j = {{"command", "generate"},
                  {"case", jcase(c)},
                  {"family", gen_family},
                  {"form", gen_printed ? "as-printed" : "corrected"},
                  {"params", params},
                  {"triple", jtriple(t)}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "case,ops,family,r1,r2,r3\n"
           << c.label() << ',' << c.op_pair() << ',' << gen_family << ',' << csv_triple(t) << '\n';
      } else {
        os << plain_triple(t) << '\n';
      }
      return kSuccess;
    });
  }

  // solve
  std::string solve_case, solve_r1, solve_r3;
  {
    auto* sub = app.add_subcommand("solve", "Solve for r2 given r1 and r3 (cases 12, 13, 14)");
    sub->add_option("--case", solve_case, "12, 13 or 14")->required();
    sub->add_option("--r1", solve_r1, "r1")->required();
    sub->add_option("--r3", solve_r3, "r3")->required();
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c = parse_case(solve_case);
      Rational r1 = parse_rational(solve_r1);
      Rational r3 = parse_rational(solve_r3);
      R2Solution s = solve_r2(c, r1, r3);
      if (fmt == OutputFormat::Json) {
        Json j = {{"command", "solve"},  {"case", jcase(c)},
                  {"r1", r1.str()},      {"r3", r3.str()},
                  {"kind", r2_kind_name(s.kind)}, {"r2", jopt(s.value)}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "case,ops,r1,r3,kind,r2\n"
           << c.label() << ',' << c.op_pair() << ',' << r1.str() << ',' << r3.str() << ','
           << r2_kind_name(s.kind) << ',' << opt_str(s.value) << '\n';
      } else {
        os << (s.value ? s.value->short_str() : std::string(r2_kind_name(s.kind))) << '\n';
      }
      return kSuccess;
    });
  }

  // diophantine
  std::string dio_p, dio_q, dio_t;
  {
    auto* sub = app.add_subcommand("diophantine", "Solve p*x + q*y = t over the integers");
    sub->add_option("--p", dio_p, "p")->required();
    sub->add_option("--q", dio_q, "q")->required();
    sub->add_option("--t", dio_t, "t")->required();
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      BigInt p = parse_integer(dio_p), q = parse_integer(dio_q), t = parse_integer(dio_t);
      auto s = solve_linear_diophantine(p, q, t);
      if (fmt == OutputFormat::Json) {
        Json j = {{"command", "diophantine"},
                  {"p", p.get_str()},
                  {"q", q.get_str()},
                  {"t", t.get_str()},
                  {"empty", s.empty}};
        if (s.empty) {
          j["base"] = nullptr;
          j["step"] = nullptr;
        } else {
          j["base"] = Json::array({s.x0.get_str(), s.y0.get_str()});
          j["step"] = Json::array({s.dx.get_str(), s.dy.get_str()});
        }
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "p,q,t,empty,x0,y0,dx,dy\n"
           << p << ',' << q << ',' << t << ',' << (s.empty ? "true" : "false");
        if (s.empty)
          os << ",,,,\n";
        else
          os << ',' << s.x0 << ',' << s.y0 << ',' << s.dx << ',' << s.dy << '\n';
      } else if (s.empty) {
        os << "empty\n";
      } else {
        os << "base=(" << s.x0 << ',' << s.y0 << ") step=(" << s.dx << ',' << s.dy << ")\n";
      }
      return s.empty ? kNegative : kSuccess;
    });
  }

  // construct12
  std::string c12_n1, c12_n2, c12_delta, c12_delta_max;
  bool c12_degenerate = false;
  {
    auto* sub = app.add_subcommand(
        "construct12", "Integer solutions of subtraction over multiplication from (N1, N2)");
    sub->add_option("--n1", c12_n1, "N1 (odd, nonzero)")->required();
    sub->add_option("--n2", c12_n2, "N2 (nonzero, coprime to N1)")->required();
    auto* d = sub->add_option("--delta", c12_delta, "Solve for N3 at this delta");
    auto* dm = sub->add_option("--delta-max", c12_delta_max,
                               "Enumerate all solutions with 1 <= delta <= this bound");
    d->excludes(dm);
    sub->add_flag("--allow-degenerate", c12_degenerate, "Also emit solutions with n3 = 0");
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      BigInt N1 = parse_integer(c12_n1), N2 = parse_integer(c12_n2);
      std::vector<Case12Params> sols;
      if (!c12_delta_max.empty()) {
        sols = case12_enumerate(N1, N2, parse_integer(c12_delta_max), c12_degenerate);
      } else {
        if (c12_delta.empty()) throw UsageError("one of --delta or --delta-max is required");
        BigInt delta = parse_integer(c12_delta);
        if (auto t = case12_construct(N1, N2, delta, c12_degenerate))
          sols.push_back({N1, N2, delta, t->r3.num() / N1});
      }
      if (fmt == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& s : sols)
          arr.push_back({{"delta", s.delta.get_str()},
                         {"N3", s.N3.get_str()},
                         {"triple", jtriple(s.triple())}});
        Json j = {{"command", "construct12"},
                  {"N1", N1.get_str()},
                  {"N2", N2.get_str()},
                  {"solutions", arr}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "N1,N2,delta,N3,r1,r2,r3\n";
        for (const auto& s : sols)
          os << N1 << ',' << N2 << ',' << s.delta << ',' << s.N3 << ',' << csv_triple(s.triple())
             << '\n';
      } else if (sols.empty()) {
        os << "NONE\n";
      } else {
        for (const auto& s : sols) os << plain_triple(s.triple()) << '\n';
      }
      return sols.empty() ? kNegative : kSuccess;
    });
  }

  // family5
  std::string f5_a, f5_f, f5_k, f5_sign = "both";
  {
    auto* sub = app.add_subcommand(
        "family5", "Discriminant construction for addition over division");
    sub->add_option("--a", f5_a, "a = r1 (nonzero integer)")->required();
    sub->add_option("--f", f5_f, "f = denominator of r3 (positive)")->required();
    sub->add_option("--k", f5_k, "K = square root of the discriminant")->required();
    sub->add_option("--sign", f5_sign, "+, - or both")->default_str("both");
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      BigInt a = parse_integer(f5_a), f = parse_integer(f5_f), K = parse_integer(f5_k);
      std::vector<int> signs;
      if (f5_sign == "both")
        signs = {1, -1};
      else
        signs = {sign_of(f5_sign)};
      struct Row {
        int sign;
        std::variant<Triple, Rejection> result;
      };
      std::vector<Row> rows;
      bool any = false;
      for (int s : signs) {
        rows.push_back({s, case13_family5(a, f, K, s)});
        any = any || std::holds_alternative<Triple>(rows.back().result);
      }
      if (fmt == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json e = {{"sign", r.sign > 0 ? "+" : "-"}};
          if (auto* t = std::get_if<Triple>(&r.result)) {
            e["triple"] = jtriple(*t);
            e["rejected"] = nullptr;
          } else {
            e["triple"] = nullptr;
            e["rejected"] = std::get<Rejection>(r.result).constraint;
          }
          arr.push_back(e);
        }
        Json j = {{"command", "family5"},
                  {"a", a.get_str()},
                  {"f", f.get_str()},
                  {"K", K.get_str()},
                  {"results", arr}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "a,f,K,sign,r1,r2,r3,rejected\n";
        for (const auto& r : rows) {
          os << a << ',' << f << ',' << K << ',' << (r.sign > 0 ? "+" : "-") << ',';
          if (auto* t = std::get_if<Triple>(&r.result))
            os << csv_triple(*t) << ",\n";
          else
            os << ",,," << csv_field(std::get<Rejection>(r.result).constraint) << '\n';
        }
      } else {
        for (const auto& r : rows) {
          os << (r.sign > 0 ? "+ " : "- ");
          if (auto* t = std::get_if<Triple>(&r.result))
            os << plain_triple(*t) << '\n';
          else
            os << "rejected: " << std::get<Rejection>(r.result).constraint << '\n';
        }
      }
      return any ? kSuccess : kDomain;
    });
  }

  // search / verify share bounds
  std::string search_case;
  std::int64_t num_bound = 0, den_bound = 0;
  unsigned jobs = 1;
  {
    auto* sub = app.add_subcommand("search", "List all grid triples for which the identity holds");
    sub->add_option("--case", search_case, "Case label")->required();
    sub->add_option("--num-bound", num_bound, "Max |numerator|")->required()->check(CLI::PositiveNumber);
    sub->add_option("--den-bound", den_bound, "Max denominator")->required()->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c = parse_case(search_case);
      SearchBounds b{num_bound, den_bound};
      auto sols = search_solutions(c, b, jobs);
      if (fmt == OutputFormat::Json) {
        Json arr = Json::array();
        for (const auto& t : sols) arr.push_back(jtriple(t));
        Json j = {{"command", "search"},
                  {"case", jcase(c)},
                  {"bounds", {{"num_bound", num_bound}, {"den_bound", den_bound}}},
                  {"count", sols.size()},
                  {"solutions", arr}};
        os << j.dump(2) << '\n';
      } else if (fmt == OutputFormat::Csv) {
        os << "r1,r2,r3\n";
        for (const auto& t : sols) os << csv_triple(t) << '\n';
      } else {
        for (const auto& t : sols) os << plain_triple(t) << '\n';
      }
      return kSuccess;
    });
  }

  std::string verify_case;
  std::int64_t v_num = 0, v_den = 0;
  unsigned v_jobs = 1;
  std::size_t v_limit = 100;
  {
    auto* sub = app.add_subcommand(
        "verify", "Compare the characterization and listed families against exhaustive search");
    sub->add_option("--case", verify_case, "Case label")->required();
    sub->add_option("--num-bound", v_num, "Max |numerator|")->required()->check(CLI::PositiveNumber);
    sub->add_option("--den-bound", v_den, "Max denominator")->required()->check(CLI::PositiveNumber);
    sub->add_option("--jobs", v_jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--limit", v_limit, "Max listed triples per list (0 = all)");
    commands.emplace_back(sub, [&](std::ostream& os, OutputFormat fmt) {
      CaseId c = parse_case(verify_case);
      auto rep = verify_characterization(c, {v_num, v_den}, {v_jobs, v_limit});
      write_report(os, fmt, rep);
      return rep.exact() ? kSuccess : kNegative;
    });
  }

  std::vector<const char*> argv;
  argv.push_back("ratdist");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  OutputFormat fmt = format == "json" ? OutputFormat::Json
                     : format == "csv" ? OutputFormat::Csv
                                       : OutputFormat::Plain;
  std::ofstream file;
  std::ostream* data = &out;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      err << "error: cannot open output file " << output_path << '\n';
      return kUsage;
    }
    data = &file;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    // Buffer so that a failing command emits no partial document.
    std::ostringstream buf;
    try {
      int code = handler(buf, fmt);
      *data << buf.str();
      return code;
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n" << sub->help();
      return kUsage;
    } catch (const std::domain_error& e) {
      err << "error: " << e.what() << '\n';
      return kDomain;
    }
  }
  err << app.help();
  return kUsage;
}

}  // namespace ratdist::cli
