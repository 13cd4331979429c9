#include "cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcp/io.hpp"
#include "qcp/qcp.hpp"

namespace qcp::cli {
namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string format = "json";
  std::int64_t q = 0;
  std::string kind;
  std::int64_t m = 0, p = 0, s = 1, a = 1;
  std::string type;
  std::int64_t rank = 0;
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::string exclude_root;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::int64_t entry_bound = 5;
  std::uint64_t budget = 100'000'000;
  std::int64_t q_window = 10;
  bool have_q = false;
};

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    const bool scalar_array =
        v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
    if (v.is_primitive()) {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else if (scalar_array) {
      out << indent << key << ":";
      for (const auto& x : v) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
      out << '\n';
    } else {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    }
  }
}

void emit(const json& j, const Config& cfg, std::ostream& out) {
  if (cfg.format == "text") render_text(j, out, "");
  else out << j.dump(2) << '\n';
}

ArrangementInput load_input(const std::string& path) {
  if (path.empty()) throw ValidationError("--input is required");
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open --input file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("--input file '" + path + "' is not valid JSON: " + e.what());
  }
  try {
    return io::arrangement_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError("--input file '" + path + "': " + e.what());
  }
}

json report_with_input(const ArrangementInput& a, const CollapseReport& r) {
  json j = io::to_json(r);
  j["arrangement"] = io::to_json(a);
  return j;
}

RootType parse_type(const std::string& t) {
  static const std::map<std::string, RootType> names = {
      {"A", RootType::A}, {"B", RootType::B}, {"C", RootType::C}, {"D", RootType::D}, {"G2", RootType::G2}};
  auto it = names.find(t);
  if (it == names.end()) throw ValidationError("--type '" + t + "' is not one of A, B, C, D, G2");
  return it->second;
}

FamilyKind parse_kind(const std::string& k) {
  static const std::map<std::string, FamilyKind> names = {
      {"A", FamilyKind::A}, {"B", FamilyKind::B}, {"Aprime", FamilyKind::Aprime}, {"D", FamilyKind::D}};
  auto it = names.find(k);
  if (it == names.end()) throw ValidationError("--kind '" + k + "' is not one of A, B, Aprime, D");
  return it->second;
}

RootVector parse_root(const std::string& csv) {
  RootVector v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("--exclude-root '" + csv + "' is not a comma-separated integer vector");
    }
  }
  return v;
}

RootSystem root_system(const Config& cfg) {
  if (cfg.rank < 1) throw ValidationError("--rank must be >= 1");
  return positive_roots(parse_type(cfg.type), static_cast<std::size_t>(cfg.rank));
}

RootSubset root_subset(const RootSystem& r, const std::string& exclude) {
  if (exclude.empty()) return RootSubset::full(r);
  const RootVector delta = parse_root(exclude);
  if (delta.size() != r.rank)
    throw ValidationError("--exclude-root '" + exclude + "' must have " + std::to_string(r.rank) + " coordinates");
  if (!r.find(delta)) throw ValidationError("--exclude-root '" + exclude + "' is not a positive root of " + r.name());
  return RootSubset::without(r, delta);
}

json root_header(const RootSystem& r, const std::string& exclude) {
  json j = {{"root_system", r.name()}, {"coxeter_number", coxeter_number(r)}};
  if (!exclude.empty()) j["excluded_root"] = parse_root(exclude);
  return j;
}

std::uint64_t positive_q(std::int64_t q) {
  if (q < 1) throw ValidationError("--q must be >= 1, got " + std::to_string(q));
  return static_cast<std::uint64_t>(q);
}

int dispatch(const std::string& cmd, const Config& cfg, std::ostream& out) {
  OracleOptions oracle;
  oracle.budget = cfg.budget;

  if (cmd == "compute") {
    const ArrangementInput a = load_input(cfg.input);
    emit(report_with_input(a, collapse_report(a)), cfg, out);
    return 0;
  }
  if (cmd == "oracle") {
    if (!cfg.have_q) throw ValidationError("--q is required");
    const ArrangementInput a = load_input(cfg.input);
    const std::uint64_t q = positive_q(cfg.q);
    emit({{"q", q}, {"count", brute_force_count(a, q, oracle)}, {"budget", cfg.budget}}, cfg, out);
    return 0;
  }
  if (cmd == "family") {
    FamilyParams f{parse_kind(cfg.kind), cfg.m, cfg.p, cfg.s, cfg.a};
    const ArrangementInput a = family_matrix(f);
    json j = report_with_input(a, collapse_report(a));
    j["family"] = {{"kind", to_string(f.kind)}, {"m", f.m}, {"p", f.p}, {"s", f.s}, {"a", f.a}};
    emit(j, cfg, out);
    return 0;
  }
  if (cmd == "shi" || cmd == "linial") {
    const RootSystem r = root_system(cfg);
    const RootSubset psi = root_subset(r, cfg.exclude_root);
    const ArrangementInput a = cmd == "shi" ? shi_matrix(psi, cfg.k) : linial_matrix(psi, cfg.n);
    json j = report_with_input(a, collapse_report(a));
    j.update(root_header(r, cfg.exclude_root));
    if (cmd == "shi") j["k"] = cfg.k;
    else j["n"] = cfg.n;
    emit(j, cfg, out);
    return 0;
  }
  if (cmd == "scan-central") {
    if (cfg.m < 1 || cfg.n < 1) throw ValidationError("--m and --n must be >= 1");
    const ScanReport rep = central_scan(static_cast<std::size_t>(cfg.m), static_cast<std::size_t>(cfg.n),
                                        cfg.entry_bound, cfg.trials, cfg.seed, oracle);
    json j = io::to_json(rep);
    j["violation_count"] = rep.violations.size();
    emit(j, cfg, out);
    return 0;
  }
  if (cmd == "conjecture-scan") {
    const RootSystem r = root_system(cfg);
    const auto entries = conjecture_scan(r, 1, cfg.k);
    json list = json::array();
    std::size_t counter = 0;
    for (const auto& e : entries) {
      list.push_back(io::to_json(e));
      if (!e.holds) ++counter;
    }
    emit({{"root_system", r.name()}, {"k_from", 1}, {"k_to", cfg.k}, {"entries", std::move(list)},
          {"counterexamples", counter}},
         cfg, out);
    return 0;
  }
  if (cmd == "verify") {
    if (cfg.q_window < 1) throw ValidationError("--q-window must be >= 1");
    const ArrangementInput a = load_input(cfg.input);
    const CollapseReport r = collapse_report(a);
    const KttExpansion e = expand(a);
    json checks = json::array();
    bool pass = true;
    for (std::uint64_t q = r.q0 + 1; q <= r.q0 + static_cast<std::uint64_t>(cfg.q_window); ++q) {
      const BigInt formula = e.evaluate(BigInt(q));
      const BigInt quasi = evaluate(r.quasi_polynomial, BigInt(q));
      const std::uint64_t brute = brute_force_count(a, q, oracle);
      const bool ok = formula == brute && quasi == brute;
      pass = pass && ok;
      checks.push_back({{"q", q}, {"brute_force", brute}, {"ktt", formula.str()}, {"quasi_polynomial", quasi.str()},
                        {"agree", ok}});
    }
    emit({{"q0", r.q0}, {"lcm_period", r.lcm_period}, {"window", cfg.q_window}, {"checks", std::move(checks)},
          {"pass", pass}},
         cfg, out);
    return pass ? 0 : 2;
  }
  throw ValidationError("unknown subcommand '" + cmd + "'");
}

int fail(std::ostream& out, std::ostream& err, const std::string& format, const char* kind, const std::string& what,
         int code) {
  json j = {{"error", {{"kind", kind}, {"message", what}}}};
  if (format == "text") render_text(j, out, "");
  else out << j.dump(2) << '\n';
  err << "qcp: " << what << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Characteristic quasi-polynomials of integral hyperplane arrangements", "qcp"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "text"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
  };
  auto budget = [&](CLI::App* sub) { sub->add_option("--budget", cfg.budget, "Point-test or subset budget"); };

  auto* compute = app.add_subcommand("compute", "Collapse report for an arrangement file");
  compute->add_option("--input", cfg.input, "ArrangementInput JSON file")->required();
  common(compute);

  auto* oracle = app.add_subcommand("oracle", "Brute-force count over Z_q^m");
  oracle->add_option("--input", cfg.input, "ArrangementInput JSON file")->required();
  oracle->add_option("--q", cfg.q, "Modulus")->required();
  common(oracle);
  budget(oracle);

  auto* family = app.add_subcommand("family", "Explicit matrix families");
  family->add_option("--kind", cfg.kind, "A, B, Aprime or D")->required();
  family->add_option("--m", cfg.m)->required();
  family->add_option("--p", cfg.p)->required();
  family->add_option("--s", cfg.s);
  family->add_option("--a", cfg.a);
  common(family);

  auto* shi = app.add_subcommand("shi", "Extended Shi arrangement of a root system");
  auto* linial = app.add_subcommand("linial", "Extended Linial arrangement of a root system");
  for (auto* sub : {shi, linial}) {
    sub->add_option("--type", cfg.type, "A, B, C, D or G2")->required();
    sub->add_option("--rank", cfg.rank)->required();
    sub->add_option("--exclude-root", cfg.exclude_root, "Positive root to drop, e.g. 1,0");
    common(sub);
  }
  shi->add_option("--k", cfg.k);
  linial->add_option("--n", cfg.n);

  auto* scan = app.add_subcommand("scan-central", "Random central arrangements: minimum vs lcm period");
  scan->add_option("--m", cfg.m)->required();
  scan->add_option("--n", cfg.n)->required();
  scan->add_option("--trials", cfg.trials);
  scan->add_option("--seed", cfg.seed);
  scan->add_option("--entry-bound", cfg.entry_bound);
  common(scan);
  budget(scan);

  auto* conj = app.add_subcommand("conjecture-scan", "Shi arrangements with one positive root removed, k = 1..K");
  conj->add_option("--type", cfg.type)->required();
  conj->add_option("--rank", cfg.rank)->required();
  conj->add_option("--k", cfg.k, "Largest k");
  common(conj);

  auto* verify = app.add_subcommand("verify", "Compare formula and quasi-polynomial with brute force");
  verify->add_option("--input", cfg.input, "ArrangementInput JSON file")->required();
  verify->add_option("--q-window", cfg.q_window, "Checks q0 < q <= q0 + window");
  common(verify);
  budget(verify);

  std::vector<std::string> argv_store{"qcp"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) { return s->get_name() == args[0]; });
    if (!known) return fail(out, err, cfg.format, "validation", "unknown subcommand '" + args[0] + "'", 1);
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, cfg.format, "validation", e.what(), 1);
  }
  cfg.have_q = oracle->count("--q") > 0;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, cfg, out);
  } catch (const ValidationError& e) {
    return fail(out, err, cfg.format, "validation", e.what(), 1);
  } catch (const BudgetError& e) {
    return fail(out, err, cfg.format, "budget", e.what(), 1);
  } catch (const ConsistencyError& e) {
    return fail(out, err, cfg.format, "consistency", e.what(), 2);
  } catch (const OverflowError& e) {
    return fail(out, err, cfg.format, "overflow", e.what(), 2);
  } catch (const std::exception& e) {
    return fail(out, err, cfg.format, "internal", e.what(), 2);
  }
}

}  // namespace qcp::cli
