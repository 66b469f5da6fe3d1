#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dtwin/errors.hpp"
#include "dtwin/parallel.hpp"
#include "report_json.hpp"

namespace dtwin::cli {

namespace {

struct GlobalFlags {
  std::string format = "text";
  std::uint64_t factor_budget = kDefaultFactorBudget;
  unsigned threads = 1;
};

struct Outcome {
  bool violation = false;
  Json payload;
};

BigInt parse_int(const std::string& s, const std::string& what) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  if (s.size() == start ||
      !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                   [](char c) { return c >= '0' && c <= '9'; }))
    throw DomainError(what + ": '" + s + "' is not an integer");
  return BigInt(s, 10);
}

WeierstrassModel parse_ainvs(const std::string& text) {
  std::array<BigInt, 5> a;
  std::stringstream ss(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (n == 5) throw DomainError("--ainvs takes exactly five integers");
    a[n++] = parse_int(item, "ainvs");
  }
  if (n != 5) throw DomainError("--ainvs takes exactly five integers");
  return WeierstrassModel::from_array(a);
}

void check_range(const BigInt& from, const BigInt& to) {
  if (from < 1) throw DomainError("--from must be >= 1");
  if (to < from) throw DomainError("--to must be >= --from");
}

std::vector<BigInt> range(const BigInt& from, const BigInt& to) {
  std::vector<BigInt> ts;
  for (BigInt t = from; t <= to; ++t) ts.push_back(t);
  return ts;
}

// Indented "key: value" rendering of a payload for --format text.
void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v))
           << '\n';
      }
    }
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(),
                                   [](const Json& v) { return v.is_structured(); });
    if (flat) {
      os << pad;
      for (std::size_t i = 0; i < j.size(); ++i)
        os << (i ? ", " : "") << scalar(j[i]);
      os << '\n';
      return;
    }
    for (const auto& v : j) {
      os << pad << "-\n";
      render_text(v, os, indent + 2);
    }
  } else {
    os << pad << scalar(j) << '\n';
  }
}

Outcome cmd_family(const BigInt& t) {
  return {false, to_json(family_params(t))};
}

Outcome cmd_family_verify(const BigInt& from, const BigInt& to,
                          const GlobalFlags& g) {
  check_range(from, to);
  const std::vector<BigInt> ts = range(from, to);
  struct One {
    std::optional<FamilyInstanceReport> report;
    std::string step, detail;
  };
  auto results = parallel_map(ts.size(), g.threads, [&](std::size_t i) {
    One o;
    try {
      o.report = verify_family_instance(ts[i], g.factor_budget);
    } catch (const TheoremViolation& v) {
      o.step = v.step();
      o.detail = v.what();
    }
    return o;
  });
  Json instances = Json::array(), failures = Json::array();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (results[i].report) {
      const auto& r = *results[i].report;
      const CoprimalityReport cop = coprimality_case_analysis(r.params);
      instances.push_back(Json{
          {"t", to_json(ts[i])},
          {"conditions", to_json(r.conditions)},
          {"coprimality_replay", cop.ok()},
          {"delta_min", to_json(r.delta.value)},
          {"delta_min_factorization", r.delta.factorization.to_string()},
          {"conductor", to_json(r.twin.first.conductor.value())},
          {"both_semistable", r.twin.both_semistable},
          {"j", Json::array({to_json(r.twin.j_first), to_json(r.twin.j_second)})},
          {"isogeny", to_string(r.twin.isogeny)},
          {"pass", true}});
    } else {
      failures.push_back(Json{{"t", to_json(ts[i])},
                              {"step", results[i].step},
                              {"detail", results[i].detail}});
    }
  }
  const bool ok = failures.empty();
  return {!ok, Json{{"from", to_json(from)},
                    {"to", to_json(to)},
                    {"all_passed", ok},
                    {"instances", std::move(instances)},
                    {"failures", std::move(failures)}}};
}

Outcome cmd_symbolic() {
  const SymbolicReport rep = symbolic_checks();
  return {!rep.ok(), to_json(rep)};
}

Outcome cmd_invariants(const WeierstrassModel& m) {
  return {false, Json{{"ainvs", to_json(m)}, {"invariants", to_json(invariants(m))}}};
}

Outcome cmd_local(const WeierstrassModel& m, const BigInt& p) {
  return {false, Json{{"ainvs", to_json(m)}, {"local", to_json(tate_local(m, p))}}};
}

Outcome cmd_minimal(const WeierstrassModel& m, const GlobalFlags& g) {
  ReductionOptions ro;
  ro.factor_budget = g.factor_budget;
  return {false,
          Json{{"ainvs", to_json(m)}, {"global", to_json(global_minimal_model(m, ro))}}};
}

Outcome cmd_classify(const WeierstrassModel& m1, const WeierstrassModel& m2,
                     const GlobalFlags& g) {
  ReductionOptions ro;
  ro.factor_budget = g.factor_budget;
  const TwinReport r = classify_pair(m1, m2, ro, ro);
  Json payload = to_json(r);
  payload["verdict"] = r.is_twin() ? "twins" : "not twins";
  return {false, std::move(payload)};
}

Outcome cmd_search(std::uint64_t max_a, std::uint64_t max_b,
                   std::size_t max_entries, const GlobalFlags& g) {
  SearchOptions so;
  so.threads = g.threads;
  so.factor_budget = g.factor_budget;
  so.max_entries = max_entries;
  const FreySearchResult r = brute_force_frey_search(max_a, max_b, so);
  return {!r.agreement(), to_json(r)};
}

Outcome cmd_scan(const std::string& path, const GlobalFlags& g) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open curve file '" + path + "'");
  const auto records = parse_curve_records(in);
  ScanOptions so;
  so.threads = g.threads;
  so.factor_budget = g.factor_budget;
  return {false, to_json(scan_curve_file(records, so), records)};
}

Outcome cmd_jsample(const BigInt& from, const BigInt& to) {
  check_range(from, to);
  const JSample s = j_distinctness_sample(range(from, to));
  return {!s.distinct, to_json(s)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Discriminant-twin toolkit: exact invariants, local reduction "
               "and family verification for elliptic curves over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--factor-budget", g.factor_budget,
                 "Rho iterations allowed per factorization");
  app.add_option("--threads", g.threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  std::string t_text, from_text, to_text, ainvs, ainvs2, p_text, file;
  std::uint64_t max_a = 0, max_b = 0;
  std::size_t max_entries = SearchOptions{}.max_entries;

  auto* family = app.add_subcommand("family", "Print the family parameters at t");
  family->add_option("--t", t_text, "Family parameter t >= 1")->required();

  auto* fverify = app.add_subcommand(
      "family-verify", "Verify the twin theorem for every t in a range");
  fverify->add_option("--from", from_text)->required();
  fverify->add_option("--to", to_text)->required();

  auto* symbolic = app.add_subcommand(
      "symbolic-verify", "Check the family identities as polynomials in t");

  auto* inv = app.add_subcommand("invariants", "b-, c-invariants, disc and j");
  inv->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();

  auto* local = app.add_subcommand("local", "Tate's algorithm at one prime");
  local->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();
  local->add_option("--p", p_text, "Prime")->required();

  auto* minimal = app.add_subcommand(
      "minimal", "Global minimal model, minimal discriminant and conductor");
  minimal->add_option("--ainvs", ainvs, "a1,a2,a3,a4,a6")->required();

  auto* classify = app.add_subcommand(
      "classify", "Decide whether two curves are discriminant twins");
  classify->add_option("--ainvs1", ainvs, "a1,a2,a3,a4,a6")->required();
  classify->add_option("--ainvs2", ainvs2, "a1,a2,a3,a4,a6")->required();

  auto* search = app.add_subcommand(
      "search", "Brute-force collision search over normalized Frey curves");
  search->add_option("--max-a", max_a)->required();
  search->add_option("--max-b", max_b)->required();
  search->add_option("--max-entries", max_entries,
                     "Grouping entries held in memory (32 bytes each)")
      ->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand(
      "scan", "Group the curves of a JSON-lines file into discriminant twins");
  scan->add_option("--file", file)->required();

  auto* jsample = app.add_subcommand(
      "jsample", "Check that the family j-invariants are pairwise distinct");
  jsample->add_option("--from", from_text)->required();
  jsample->add_option("--to", to_text)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  int code = kExitOk;
  std::string status = "ok";
  try {
    if (family->parsed()) {
      result = cmd_family(parse_int(t_text, "--t"));
    } else if (fverify->parsed()) {
      result = cmd_family_verify(parse_int(from_text, "--from"),
                                 parse_int(to_text, "--to"), g);
    } else if (symbolic->parsed()) {
      result = cmd_symbolic();
    } else if (inv->parsed()) {
      result = cmd_invariants(parse_ainvs(ainvs));
    } else if (local->parsed()) {
      result = cmd_local(parse_ainvs(ainvs), parse_int(p_text, "--p"));
    } else if (minimal->parsed()) {
      result = cmd_minimal(parse_ainvs(ainvs), g);
    } else if (classify->parsed()) {
      result = cmd_classify(parse_ainvs(ainvs), parse_ainvs(ainvs2), g);
    } else if (search->parsed()) {
      result = cmd_search(max_a, max_b, max_entries, g);
    } else if (scan->parsed()) {
      result = cmd_scan(file, g);
    } else if (jsample->parsed()) {
      result = cmd_jsample(parse_int(from_text, "--from"),
                           parse_int(to_text, "--to"));
    }
    if (result.violation) {
      code = kExitViolation;
      status = "violation";
    }
  } catch (const TheoremViolation& e) {
    code = kExitViolation;
    status = "violation";
    result.payload = Json{{"error", e.what()}, {"step", e.step()}};
  } catch (const FactorizationBudgetExceeded& e) {
    code = kExitBudget;
    status = "error";
    result.payload = Json{{"error", e.what()}};
  } catch (const std::exception& e) {
    // DomainError, SingularCurve, NonIntegralTransform, ParseError.
    code = kExitUsage;
    status = "error";
    result.payload = Json{{"error", e.what()}};
  }
  if (code == kExitUsage || code == kExitBudget)
    err << "error: " << result.payload["error"].get<std::string>() << '\n';

  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  if (g.format == "json") {
    Json env{{"command", command},
             {"status", status},
             {"payload", std::move(result.payload)},
             {"timing_ms", ms}};
    out << env.dump(2) << '\n';
  } else {
    out << command << ": " << status << '\n';
    render_text(result.payload, out, 2);
    out << "  elapsed: " << ms << " ms\n";
  }
  return code;
}

}  // namespace dtwin::cli
