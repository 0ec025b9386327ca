#include "kncross/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "kncross/duality.hpp"
#include "kncross/enumerate.hpp"
#include "kncross/error.hpp"
#include "kncross/verify.hpp"
#include "kncross/walks.hpp"

namespace kncross {
namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

// Beyond this the exact value is not computed by `asympt`.
constexpr int kExactAsymptLimit = 5000;

struct Options {
  std::string class_name = "partitions";
  int k = 3;
  std::optional<int> n;
  std::optional<int> n_max;
  std::string route;
  std::string suite = "all";
  std::string in;
  std::string format;
  int jobs = 1;
};

// What a command produced: a JSON payload, or raw text for text/svg/csv output.
struct Output {
  json payload = json::object();
  std::optional<std::string> raw;
  int status = kExitOk;
};

json counts_json(const std::map<int, BigInt>& entries) {
  json counts = json::object();
  for (const auto& [n, v] : entries) counts[std::to_string(n)] = v.get_str();
  return counts;
}

std::string read_input(const std::string& in) {
  if (in != "-") return in;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

Output count_command(const Options& o) {
  const ClassTag tag = parse_class_tag(o.class_name);
  const Route route = parse_route(o.route.empty() ? "brute" : o.route);
  CountTable table{tag, o.k, route, {}};
  if (o.n) {
    if (route == Route::brute) {
      table.entries[*o.n] = brute_count(tag, o.k, *o.n, o.jobs);
    } else {
      const CountTable full = count_table(tag, o.k, *o.n, route, o.jobs);
      table.entries[*o.n] = full.entries.at(*o.n);
    }
  } else {
    table = count_table(tag, o.k, o.n_max.value_or(8), route, o.jobs);
  }
  Output out;
  if (o.format == "csv") {
    std::string csv = "class,k,route,n,count\n";
    for (const auto& [n, v] : table.entries) {
      csv += std::string(to_string(tag)) + "," + std::to_string(o.k) + "," + std::string(to_string(route)) + "," +
             std::to_string(n) + "," + v.get_str() + "\n";
    }
    out.raw = csv;
    return out;
  }
  out.payload["class"] = to_string(tag);
  out.payload["k"] = o.k;
  out.payload["route"] = to_string(route);
  out.payload["counts"] = counts_json(table.entries);
  return out;
}

Output enum_command(const Options& o) {
  const ClassTag tag = parse_class_tag(o.class_name);
  const int n = o.n.value_or(4);
  if (n < 0) throw Error(ErrorCode::precondition, "n must be nonnegative");
  if (o.k < 2) throw Error(ErrorCode::precondition, "k must be at least 2");
  if (bell_number(n) > kBruteForceLimit) throw Error(ErrorCode::range_guard, "enumeration refused: Bell(n) too large");
  std::vector<std::string> lines;
  auto keep = [&](const auto& d) { lines.push_back(to_string(d)); };
  switch (tag) {
    case ClassTag::partitions_k: for_each_partition_k(n, o.k, keep); break;
    case ClassTag::two_regular_k: for_each_two_regular_k(n, o.k, keep); break;
    case ClassTag::braids_k: for_each_braid(n, o.k, keep); break;
    case ClassTag::braids_k_no_isolated: for_each_braid_no_isolated(n, o.k, keep); break;
  }
  Output out;
  if (o.format == "text") {
    std::string text;
    for (const auto& l : lines) text += l + "\n";
    out.raw = text;
    return out;
  }
  out.payload["class"] = to_string(tag);
  out.payload["k"] = o.k;
  out.payload["n"] = n;
  out.payload["count"] = lines.size();
  out.payload["diagrams"] = lines;
  return out;
}

Output map_command(const Options& o) {
  const ArcDiagram input = parse_diagram(trim(read_input(o.in)));
  const ClassTag tag = parse_class_tag(o.class_name);
  const std::string route = o.route.empty() ? "direct" : o.route;
  if (route != "direct" && route != "tableau") throw Error(ErrorCode::parse, "map route must be direct or tableau");
  std::string source;
  std::string image;
  std::string direction = "forward";
  switch (tag) {
    case ClassTag::partitions_k: {
      const PartitionDiagram p(input);
      source = to_string(p);
      image = to_string(route == "tableau" ? theta_tableau(p) : theta_direct(p));
      break;
    }
    case ClassTag::two_regular_k: {
      const PartitionDiagram p(input);
      source = to_string(p);
      image = to_string(theta_restricted(p, o.k));
      break;
    }
    case ClassTag::braids_k: {
      const BraidDiagram b(input);
      source = to_string(b);
      image = to_string(theta_inverse_direct(b));
      direction = "inverse";
      break;
    }
    case ClassTag::braids_k_no_isolated: {
      const BraidDiagram b(input);
      source = to_string(b);
      image = to_string(theta_restricted_inverse(b, o.k));
      direction = "inverse";
      break;
    }
  }
  Output out;
  if (o.format.empty() || o.format == "text") {
    out.raw = image + "\n";
    return out;
  }
  out.payload["class"] = to_string(tag);
  out.payload["direction"] = direction;
  out.payload["route"] = route;
  out.payload["source"] = source;
  out.payload["image"] = image;
  return out;
}

Output verify_command(const Options& o) {
  VerifyOptions v;
  v.n_max = o.n_max.value_or(7);
  v.k = o.k;
  v.jobs = o.jobs;
  const auto reports = run_suites(o.suite, v);
  Output out;
  bool all_passed = true;
  json suites = json::array();
  for (const SuiteReport& r : reports) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
      json entry{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      if (c.counterexample) entry["counterexample"] = *c.counterexample;
      checks.push_back(entry);
    }
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    all_passed = all_passed && r.passed();
  }
  out.payload["suite"] = o.suite;
  out.payload["n_max"] = v.n_max;
  out.payload["k"] = v.k;
  out.payload["passed"] = all_passed;
  out.payload["suites"] = suites;
  out.status = all_passed ? kExitOk : kExitFailed;
  return out;
}

Output rho3_command(const Options& o) {
  const int n_max = o.n_max.value_or(10);
  if (n_max < 1) throw Error(ErrorCode::precondition, "rho3 needs n_max >= 1");
  const std::string route_name = o.route.empty() ? "all" : o.route;
  Output out;
  if (route_name != "all") {
    const Route route = parse_route(route_name);
    const CountTable t = rho3_table(route, n_max);
    if (o.format == "csv") {
      std::string csv = "n," + std::string(to_string(route)) + "\n";
      for (const auto& [n, v] : t.entries) csv += std::to_string(n) + "," + v.get_str() + "\n";
      out.raw = csv;
      return out;
    }
    out.payload["n_max"] = n_max;
    out.payload["route"] = to_string(route);
    out.payload["counts"] = counts_json(t.entries);
    return out;
  }
  // Brute force joins on its feasible range only.
  const int brute_top = std::min(n_max, 10);
  std::vector<CountTable> tables;
  for (Route r : {Route::brute, Route::walk_dp, Route::kernel_ct, Route::closed_form, Route::recurrence}) {
    tables.push_back(rho3_table(r, r == Route::brute ? brute_top : n_max));
  }
  bool agreement = true;
  for (const CountTable& t : tables) {
    for (const auto& [n, v] : t.entries) agreement = agreement && tables.back().entries.at(n) == v;
  }
  if (o.format == "csv") {
    std::string csv = "n";
    for (const CountTable& t : tables) csv += "," + std::string(to_string(t.route));
    csv += "\n";
    for (int n = 1; n <= n_max; ++n) {
      csv += std::to_string(n);
      for (const CountTable& t : tables) {
        auto it = t.entries.find(n);
        csv += "," + (it == t.entries.end() ? std::string() : it->second.get_str());
      }
      csv += "\n";
    }
    out.raw = csv;
  } else {
    out.payload["n_max"] = n_max;
    out.payload["route"] = "all";
    json routes = json::object();
    for (const CountTable& t : tables) routes[std::string(to_string(t.route))] = counts_json(t.entries);
    out.payload["routes"] = routes;
    out.payload["agreement"] = agreement;
  }
  out.status = agreement ? kExitOk : kExitFailed;
  return out;
}

Output asympt_command(const Options& o) {
  const int n = o.n.value_or(200);
  const AsymptoticParams params = characteristic_analysis();
  const BigFloat estimate = asymptotic_estimate(n, params);
  Output out;
  out.payload["n"] = n;
  out.payload["lambda"] = to_fraction(params.lambda);
  out.payload["theta"] = to_fraction(params.theta);
  out.payload["c1"] = to_fraction(params.c1);
  out.payload["c2"] = to_fraction(params.c2);
  out.payload["c3"] = to_fraction(params.c3);
  out.payload["c2_decimal"] = to_fixed(params.c2, 5);
  out.payload["c3_decimal"] = to_fixed(params.c3, 6);
  out.payload["K"] = std::string(kQuotedK);
  out.payload["estimate"] = to_decimal(estimate, 30);
  if (n <= kExactAsymptLimit) {
    const BigInt exact = rho3_recurrence(n).entries.at(n);
    out.payload["exact"] = exact.get_str();
    out.payload["relative_error"] = to_decimal(relative_error(estimate, exact), 12);
    if (n >= 50) out.payload["fit_K"] = to_decimal(fit_K(n, params), 15);
  }
  return out;
}

Output render_command(const Options& o) {
  Output out;
  out.raw = render_svg(parse_diagram(trim(read_input(o.in))));
  return out;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

void report_error(std::ostream& err, std::string_view reason, const std::string& message) {
  err << json{{"error", reason}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting and duality for k-noncrossing partitions and braids", "kncross"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;

  auto add_k = [&](CLI::App* s) { s->add_option("--k", o.k, "crossing bound")->check(CLI::Range(2, 64)); };
  auto add_jobs = [&](CLI::App* s) { s->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256)); };
  const std::vector<std::string> classes{"partitions", "2regular", "braids", "braids-noiso"};

  CLI::App* count = app.add_subcommand("count", "count a diagram class");
  count->add_option("--class", o.class_name)->required()->check(CLI::IsMember(classes));
  add_k(count);
  auto* count_n = count->add_option("--n", o.n, "single size")->check(CLI::NonNegativeNumber);
  count->add_option("--n-max", o.n_max, "table up to this size")->check(CLI::NonNegativeNumber)->excludes(count_n);
  count->add_option("--route", o.route)->check(CLI::IsMember({"brute", "closed", "recurrence", "kernel", "walk"}));
  count->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  add_jobs(count);

  CLI::App* enumerate = app.add_subcommand("enum", "list every diagram of a class");
  enumerate->add_option("--class", o.class_name)->required()->check(CLI::IsMember(classes));
  add_k(enumerate);
  enumerate->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* map = app.add_subcommand("map", "apply the duality (or its inverse) to one diagram");
  map->add_option("--in", o.in, "diagram text, or - for stdin")->required();
  map->add_option("--class", o.class_name, "class of the input")->check(CLI::IsMember(classes));
  add_k(map);
  map->add_option("--route", o.route)->check(CLI::IsMember({"direct", "tableau"}));
  map->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites{"all"};
  for (const SuiteEntry& e : suite_registry()) suites.emplace_back(e.name);
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suites));
  verify->add_option("--n-max", o.n_max)->check(CLI::Range(0, 12));
  add_k(verify);
  add_jobs(verify);
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  CLI::App* rho3 = app.add_subcommand("rho3", "3-noncrossing braids without isolated points");
  rho3->add_option("--n-max", o.n_max)->check(CLI::Range(1, 100000));
  rho3->add_option("--route", o.route)
      ->check(CLI::IsMember({"brute", "kernel", "closed", "recurrence", "walk", "all"}));
  rho3->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* asympt = app.add_subcommand("asympt", "asymptotic estimate against the exact value");
  asympt->add_option("--n", o.n)->check(CLI::Range(1, 1000000));
  asympt->add_option("--format", o.format)->check(CLI::IsMember({"json"}));

  CLI::App* render = app.add_subcommand("render", "SVG drawing of one diagram");
  render->add_option("--in", o.in, "diagram text, or - for stdin")->required();
  render->add_option("--format", o.format)->check(CLI::IsMember({"svg"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "usage", e.what());
    return kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Output result;
  CLI::App* chosen = app.get_subcommands().front();
  try {
    if (chosen == count) result = count_command(o);
    else if (chosen == enumerate) result = enum_command(o);
    else if (chosen == map) result = map_command(o);
    else if (chosen == verify) result = verify_command(o);
    else if (chosen == rho3) result = rho3_command(o);
    else if (chosen == asympt) result = asympt_command(o);
    else result = render_command(o);
  } catch (const Error& e) {
    report_error(err, error_code_name(e.code()), e.what());
    const bool falsified = e.code() == ErrorCode::inexact_division || e.code() == ErrorCode::seed_mismatch;
    return falsified ? kExitFailed : kExitUsage;
  }
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  if (result.raw) {
    out << *result.raw;
  } else {
    json report;
    report["command"] = joined(args);
    report["version"] = kVersion;
    for (auto& [key, value] : result.payload.items()) report[key] = value;
    report["elapsed_ms"] = static_cast<long>(elapsed);
    out << report.dump(2) << "\n";
  }
  if (result.status == kExitFailed) report_error(err, "verification_failed", "see report");
  return result.status;
}

}  // namespace kncross
