// Command-line front end: analyze, sweep, export, catalog list, import-check.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "noncyc/error.hpp"
#include "noncyc/group_builder.hpp"
#include "noncyc/group_ops.hpp"
#include "noncyc/harness.hpp"

namespace {

using nlohmann::json;
using namespace noncyc;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;

/// A path to an existing JSON group file, or spec text such as "Dihedral(4)".
GroupSpec resolve_target(const std::string& target) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(target, ec)) {
    std::ifstream in(target);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(target + ": " + e.what());
    }
    if (doc.is_object() && doc.contains("generators")) return spec::FromPermGenerators{target};
    return spec::FromCayleyFile{target};
  }
  GroupSpec s = parse_spec(target);
  validate_spec(s);
  return s;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + out_path);
  out << text;
  if (!out) throw ParseError("cannot write " + out_path);
}

std::string error_kind(const Error& e) {
  if (dynamic_cast<const CyclicGroupError*>(&e)) return "cyclic-group";
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const InvalidSpecError*>(&e)) return "invalid-spec";
  if (dynamic_cast<const ValidationError*>(&e)) return "validation";
  if (dynamic_cast<const CapExceededError*>(&e)) return "cap-exceeded";
  return "internal";
}

int report_error(const Error& e) {
  json doc{{"schema", "noncyc.error/1"}, {"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
  std::cout << doc.dump(2) << "\n";
  std::cerr << "error: " << e.what() << "\n";
  return kInputError;
}

struct Common {
  std::string out;
  std::vector<std::string> props;
  double timeout = 120.0;
  bool paranoid = false;
  bool no_timings = false;
};

void print_failures(const std::string& name, const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.outcome == Outcome::kFail) std::cerr << "FAIL " << v.property << " on " << name << ": " << v.witness.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-cyclic graphs of finite groups: invariants and property checks"};
  app.require_subcommand(1);

  Common common;
  std::string target;
  std::size_t max_order = 100;
  bool big = false;
  std::size_t jobs = 1;
  std::string format = "dot";
  std::string graph = "noncyclic";

  auto add_props = [&](CLI::App* cmd) {
    cmd->add_option("--props", common.props, "Comma-separated property ids")->delimiter(',');
  };
  auto add_catalog = [&](CLI::App* cmd) {
    cmd->add_option("--max-order", max_order, "Largest group order in the catalog")->check(CLI::Range(4, 5040));
    cmd->add_flag("--big", big, "Add A5, S5, SL2(5) and PSL2(q) for q in {4,5,7,8,9}");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse one group and print its report");
  analyze_cmd->add_option("target", target, "Group spec such as Dihedral(4), or a JSON group file")->required();
  analyze_cmd->add_option("--out", common.out, "Write the report here instead of stdout");
  add_props(analyze_cmd);
  analyze_cmd->add_option("--timeout", common.timeout, "Search time limit in seconds");
  analyze_cmd->add_flag("--paranoid", common.paranoid, "Verify associativity of constructed tables");
  analyze_cmd->add_flag("--no-timings", common.no_timings, "Leave timings out of the report");

  auto* sweep_cmd = app.add_subcommand("sweep", "Run property checks over the catalog");
  add_catalog(sweep_cmd);
  add_props(sweep_cmd);
  sweep_cmd->add_option("--jobs", jobs, "Groups analysed concurrently")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--timeout", common.timeout, "Per-group search time limit in seconds");
  sweep_cmd->add_option("--out", common.out, "Write the aggregated report here instead of stdout");
  sweep_cmd->add_flag("--paranoid", common.paranoid, "Verify associativity of constructed tables");
  sweep_cmd->add_flag("--no-timings", common.no_timings, "Leave timings out of the report");

  auto* export_cmd = app.add_subcommand("export", "Write a graph of a group, or its Cayley table");
  export_cmd->add_option("target", target, "Group spec or JSON group file")->required();
  export_cmd->add_option("--format", format, "dot, graph6 or cayley")
      ->check(CLI::IsMember({"dot", "graph6", "cayley"}));
  export_cmd->add_option("--graph", graph, "noncyclic, cyclic or noncommuting")
      ->check(CLI::IsMember({"noncyclic", "cyclic", "noncommuting"}));
  export_cmd->add_option("--out", common.out, "Output path (default stdout)");
  export_cmd->add_flag("--paranoid", common.paranoid, "Verify associativity of constructed tables");

  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog operations");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog entries");
  add_catalog(list_cmd);

  auto* import_cmd = app.add_subcommand("import-check", "Validate a JSON group file and test its round trip");
  import_cmd->add_option("path", target, "Cayley table or permutation generator file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  BuildOptions build;
  build.paranoid = common.paranoid;
  const bool timings = !common.no_timings;

  try {
    if (*analyze_cmd) {
      AnalyzeOptions o;
      o.build = build;
      o.properties = common.props;
      o.timeout_seconds = common.timeout;
      const auto report = analyze(resolve_target(target), o);
      emit(report_to_json(report, timings).dump(2) + "\n", common.out);
      print_failures(report.name, report.verdicts);
      return report.failures() == 0 ? kOk : kVerificationFailure;
    }
    if (*sweep_cmd) {
      SweepOptions o;
      o.build = build;
      o.properties = common.props;
      o.jobs = jobs;
      o.timeout_seconds = common.timeout;
      const auto catalog = default_catalog(max_order, big);
      const auto report = sweep(catalog, o, [&](const SweepGroup& g) {
        if (!g.error.empty()) std::cerr << "ERROR " << g.name << ": " << g.error << "\n";
        print_failures(g.name, g.verdicts);
      });
      emit(sweep_to_json(report, timings).dump(2) + "\n", common.out);
      const auto counts = report.counts();
      std::cerr << "sweep: " << report.groups.size() << " groups, " << counts.at(Outcome::kPass) << " pass, "
                << counts.at(Outcome::kFail) << " fail, " << counts.at(Outcome::kNotApplicable)
                << " not-applicable, " << counts.at(Outcome::kTimeout) << " timeout, " << report.errors()
                << " errors\n";
      return report.exit_code();
    }
    if (*export_cmd) {
      const GroupSpec s = resolve_target(target);
      const FiniteGroup g = build_group(s, build);
      if (format == "cayley") {
        emit(cayley_document(g), common.out);
      } else {
        emit(export_graph(g, parse_export_format(format), parse_graph_kind(graph), display_name(s)), common.out);
      }
      return kOk;
    }
    if (*list_cmd) {
      for (const auto& e : default_catalog(max_order, big).entries)
        std::cout << e.name << "\t" << to_string(e.spec) << "\t" << spec_order(e.spec) << "\n";
      return kOk;
    }
    if (*import_cmd) {
      const FiniteGroup g = load_group_file(target);
      const FiniteGroup again = parse_cayley_document(cayley_document(g));
      const bool round_trip = again == g && again.names() == g.names();
      json doc{{"path", target},
               {"order", g.order()},
               {"abelian", g.is_abelian()},
               {"cyclic", is_cyclic(g)},
               {"exponent", g.exponent()},
               {"round_trip", round_trip}};
      std::cout << doc.dump(2) << "\n";
      return round_trip ? kOk : kVerificationFailure;
    }
  } catch (const Error& e) {
    return report_error(e);
  }
  return kInputError;
}
