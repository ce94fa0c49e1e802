#include "noncyc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "noncyc/error.hpp"
#include "noncyc/graph_io.hpp"
#include "noncyc/number_theory.hpp"

namespace noncyc {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Partitions of e into non-increasing parts.
void partitions(std::size_t e, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(e, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(e - part, part, cur, out);
    cur.pop_back();
  }
}

/// Factors for one prime: parts above 1 as cyclic groups, then the ones as an elementary abelian block.
std::vector<GroupSpec> prime_component(std::size_t p, const std::vector<std::size_t>& parts) {
  std::vector<GroupSpec> out;
  std::size_t ones = 0;
  for (auto part : parts) {
    if (part == 1)
      ++ones;
    else
      out.emplace_back(spec::Cyclic{ipow(p, part)});
  }
  if (ones == 1) out.emplace_back(spec::Cyclic{p});
  if (ones > 1) out.emplace_back(spec::ElementaryAbelian{p, ones});
  return out;
}

void add_abelian(std::size_t n, std::vector<GroupSpec>& out) {
  const auto f = factorize(n);
  std::vector<std::vector<std::vector<std::size_t>>> per_prime;
  for (auto [p, e] : f) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    partitions(e, e, cur, parts);
    per_prime.push_back(std::move(parts));
  }
  std::vector<std::size_t> idx(f.size(), 0);
  while (true) {
    bool cyclic = true;
    std::vector<GroupSpec> factors;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& parts = per_prime[i][idx[i]];
      cyclic = cyclic && parts.size() == 1;
      for (auto& s : prime_component(f[i].first, parts)) factors.push_back(std::move(s));
    }
    if (!cyclic) out.push_back(factors.size() == 1 ? factors.front() : GroupSpec(spec::DirectProduct{factors}));
    std::size_t i = 0;
    while (i < f.size() && ++idx[i] == per_prime[i].size()) idx[i++] = 0;
    if (i == f.size()) break;
  }
}

void add_semidirect(std::size_t max_order, std::vector<GroupSpec>& out) {
  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    for (std::size_t m = 2; n * m <= max_order; ++m) {
      std::set<std::vector<std::size_t>> seen;
      for (std::size_t r = 2; r < n; ++r) {
        if (std::gcd(r, n) != 1 || powmod(r, m, n) != 1) continue;
        if (m == 2 && r == n - 1) continue;  // dihedral
        std::vector<std::size_t> sub{1};
        for (std::size_t x = r; x != 1; x = x * r % n) sub.push_back(x);
        std::sort(sub.begin(), sub.end());
        if (seen.insert(sub).second) out.emplace_back(spec::SemidirectCyclic{n, m, r});
      }
    }
}

std::vector<GroupSpec> product_extras() {
  using namespace spec;
  const GroupSpec s3 = Symmetric{3};
  auto prod = [](std::vector<GroupSpec> f) { return GroupSpec(DirectProduct{std::move(f)}); };
  return {
      prod({Cyclic{2}, SemidirectCyclic{7, 6, 3}}), prod({Cyclic{6}, s3}), prod({Cyclic{3}, s3}),
      prod({Cyclic{2}, Cyclic{2}, Cyclic{3}}),      prod({Cyclic{2}, Dihedral{4}}), prod({Cyclic{2}, Dicyclic{2}}),
      prod({Cyclic{3}, Dicyclic{2}}),               prod({Cyclic{3}, Dihedral{4}}), prod({Cyclic{4}, s3}),
      prod({Cyclic{5}, s3}),                        prod({s3, s3}),                 prod({s3, Dihedral{5}}),
      prod({Cyclic{2}, Alternating{4}}),            prod({Cyclic{3}, Alternating{4}}),
      prod({Cyclic{2}, Dicyclic{3}}),               prod({Cyclic{2}, Symmetric{4}}),
      prod({ElementaryAbelian{3, 2}, s3}),          prod({Dihedral{4}, ElementaryAbelian{3, 2}}),
      prod({Dicyclic{2}, ElementaryAbelian{3, 2}}),
  };
}

json distance_json(Distance d) { return d.is_finite() ? json{{"finite", d.value()}} : json{{"infinite", true}}; }

Distance distance_from_json(const json& j) {
  if (j.contains("finite")) return Distance::finite(j.at("finite").get<std::size_t>());
  if (j.value("infinite", false)) return Distance::infinite();
  throw ParseError("malformed distance");
}

std::string status_text(DominationResult::Status s) {
  switch (s) {
    case DominationResult::Status::kFound: return "found";
    case DominationResult::Status::kExceedsCap: return "exceeds-cap";
    case DominationResult::Status::kTimeout: return "timeout";
  }
  return "?";
}

DominationResult::Status status_from_text(const std::string& s) {
  for (auto st : {DominationResult::Status::kFound, DominationResult::Status::kExceedsCap,
                  DominationResult::Status::kTimeout})
    if (status_text(st) == s) return st;
  throw ParseError("unknown domination status: " + s);
}

json gamma_json(const BoundedGamma& g) {
  json j{{"status", status_text(g.status)}, {"cap", g.cap}};
  if (g.value) j["value"] = *g.value;
  return j;
}

BoundedGamma gamma_from_json(const json& j) {
  BoundedGamma g;
  g.status = status_from_text(j.at("status").get<std::string>());
  g.cap = j.at("cap").get<std::size_t>();
  if (j.contains("value")) g.value = j.at("value").get<std::size_t>();
  return g;
}

std::string tristate_text(Tristate t) {
  switch (t) {
    case Tristate::kYes: return "yes";
    case Tristate::kNo: return "no";
    case Tristate::kTimeout: return "timeout";
  }
  return "?";
}

Tristate tristate_from_text(const std::string& s) {
  for (auto t : {Tristate::kYes, Tristate::kNo, Tristate::kTimeout})
    if (tristate_text(t) == s) return t;
  throw ParseError("unknown hamiltonian flag: " + s);
}

json verdict_json(const Verdict& v, bool timings) {
  json j = v;
  if (!timings) j.erase("seconds");
  return j;
}

AnalysisOptions analysis_options(double timeout_seconds) {
  AnalysisOptions o;
  o.budget.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(timeout_seconds));
  return o;
}

std::vector<Verdict> run_selected(GroupAnalysis& a, const std::vector<std::string>& ids) {
  if (ids.empty()) return run_all_properties(a);
  std::vector<Verdict> out;
  for (const auto& id : ids) out.push_back(run_property(id, a));
  return out;
}

BoundedGamma bounded_gamma(GroupAnalysis& a, GraphKind kind, std::size_t cap) {
  BoundedGamma g;
  g.cap = cap;
  try {
    const auto& r = a.domination(kind, cap);
    g.status = r.status;
    g.value = r.value;
  } catch (const BudgetExhaustedError&) {
    g.status = DominationResult::Status::kTimeout;
  }
  return g;
}

}  // namespace

Catalog default_catalog(std::size_t max_order, bool big) {
  std::vector<GroupSpec> specs;
  for (std::size_t n = 1; n <= max_order; ++n) specs.emplace_back(spec::Cyclic{n});
  for (std::size_t n = 4; n <= max_order; ++n) add_abelian(n, specs);
  for (std::size_t m = 3; 2 * m <= max_order; ++m) specs.emplace_back(spec::Dihedral{m});
  for (std::size_t m = 2; 4 * m <= max_order; ++m) specs.emplace_back(spec::Dicyclic{m});
  for (std::size_t k = 3; k <= 5; ++k) specs.emplace_back(spec::Symmetric{k});
  for (std::size_t k = 4; k <= 5; ++k) specs.emplace_back(spec::Alternating{k});
  for (std::size_t q : {2, 3, 4, 5}) specs.emplace_back(spec::PSL2{q});
  specs.emplace_back(spec::SL2{3});
  add_semidirect(max_order, specs);
  for (auto& s : product_extras()) specs.push_back(std::move(s));

  std::vector<GroupSpec> chosen;
  for (auto& s : specs)
    if (spec_order(s) <= max_order) chosen.push_back(std::move(s));
  if (big)
    for (GroupSpec s : {GroupSpec(spec::Alternating{5}), GroupSpec(spec::Symmetric{5}), GroupSpec(spec::SL2{5}),
                        GroupSpec(spec::PSL2{4}), GroupSpec(spec::PSL2{5}), GroupSpec(spec::PSL2{7}),
                        GroupSpec(spec::PSL2{8}), GroupSpec(spec::PSL2{9})})
      if (spec_order(s) > max_order) chosen.push_back(std::move(s));

  std::stable_sort(chosen.begin(), chosen.end(),
                   [](const GroupSpec& a, const GroupSpec& b) { return spec_order(a) < spec_order(b); });
  Catalog c;
  c.max_order = max_order;
  c.big = big;
  std::set<std::string> names;
  for (auto& s : chosen) {
    std::string name = display_name(s);
    if (names.insert(name).second) c.entries.push_back({std::move(name), std::move(s)});
  }
  return c;
}

std::size_t AnalysisReport::failures() const {
  return static_cast<std::size_t>(std::count_if(verdicts.begin(), verdicts.end(),
                                                [](const Verdict& v) { return v.outcome == Outcome::kFail; }));
}

json report_to_json(const AnalysisReport& r, bool timings) {
  const auto& inv = r.invariants;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v, timings));
  json j{{"schema", kReportSchema},
         {"coverage", kCoverageNote},
         {"group", {{"name", r.name}, {"spec", r.spec}, {"order", r.order}}},
         {"cyc_order", r.cyc_order},
         {"quotient_order", r.quotient_order},
         {"invariants",
          {{"vertices", inv.vertices},
           {"edges", inv.edges},
           {"omega", inv.omega},
           {"omega_method", inv.omega_method},
           {"diam_noncyclic", distance_json(inv.diam_noncyclic)},
           {"diam_cyclic", distance_json(inv.diam_cyclic)},
           {"gamma_noncyclic", gamma_json(inv.gamma_noncyclic)},
           {"gamma_cyclic", gamma_json(inv.gamma_cyclic)},
           {"planar", inv.planar},
           {"planarity_certificate", inv.planarity_certificate},
           {"hamiltonian", tristate_text(inv.hamiltonian)}}},
         {"verdicts", verdicts}};
  if (timings) j["timings"] = r.timings;
  return j;
}

AnalysisReport report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) throw ParseError("unsupported report schema");
    AnalysisReport r;
    const auto& g = j.at("group");
    r.name = g.at("name").get<std::string>();
    r.spec = g.at("spec").get<std::string>();
    r.order = g.at("order").get<std::size_t>();
    r.cyc_order = j.at("cyc_order").get<std::size_t>();
    r.quotient_order = j.at("quotient_order").get<std::size_t>();
    const auto& inv = j.at("invariants");
    auto& out = r.invariants;
    out.vertices = inv.at("vertices").get<std::size_t>();
    out.edges = inv.at("edges").get<std::size_t>();
    out.omega = inv.at("omega").get<std::size_t>();
    out.omega_method = inv.at("omega_method").get<std::string>();
    out.diam_noncyclic = distance_from_json(inv.at("diam_noncyclic"));
    out.diam_cyclic = distance_from_json(inv.at("diam_cyclic"));
    out.gamma_noncyclic = gamma_from_json(inv.at("gamma_noncyclic"));
    out.gamma_cyclic = gamma_from_json(inv.at("gamma_cyclic"));
    out.planar = inv.at("planar").get<bool>();
    out.planarity_certificate = inv.at("planarity_certificate").get<std::string>();
    out.hamiltonian = tristate_from_text(inv.at("hamiltonian").get<std::string>());
    r.verdicts = j.at("verdicts").get<std::vector<Verdict>>();
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

AnalysisReport analyze(const GroupSpec& spec, const AnalyzeOptions& options) {
  const auto start = Clock::now();
  auto group = std::make_shared<const FiniteGroup>(build_group(spec, options.build));
  const double build_seconds = since(start);
  auto r = analyze(std::move(group), spec, display_name(spec), options);
  r.timings["build"] = build_seconds;
  r.timings["total"] += build_seconds;
  return r;
}

AnalysisReport analyze(std::shared_ptr<const FiniteGroup> group, const std::optional<GroupSpec>& spec,
                       const std::string& name, const AnalyzeOptions& options) {
  for (const auto& id : options.properties)
    if (!is_known_property(id)) throw InvalidSpecError("unknown property: " + id);
  const auto start = Clock::now();
  GroupAnalysis a(group, spec, analysis_options(options.timeout_seconds));
  if (a.is_cyclic()) throw CyclicGroupError("group is cyclic: " + name);

  AnalysisReport r;
  r.name = name;
  r.spec = a.label();
  r.order = group->order();
  r.cyc_order = a.cyclicizer().cyc.count();
  r.quotient_order = a.cyclicizer().quotient.group.order();

  auto t = Clock::now();
  const auto& graph = a.graph(GraphKind::kNoncyclic);
  r.timings["bundle"] = since(t);

  t = Clock::now();
  auto& inv = r.invariants;
  inv.vertices = graph.vertex_count();
  inv.edges = graph.edge_count();
  try {
    inv.omega = a.omega();
    inv.omega_method = a.omega_by_bnb() ? "branch-and-bound" : "maximal-cyclic-oracle";
  } catch (const BudgetExhaustedError&) {
    inv.omega = a.oracle_omega();
    inv.omega_method = "maximal-cyclic-oracle (branch-and-bound budget exhausted)";
  }
  inv.diam_noncyclic = a.distances(GraphKind::kNoncyclic).diameter();
  inv.diam_cyclic = a.distances(GraphKind::kCyclic).diameter();
  inv.gamma_noncyclic = bounded_gamma(a, GraphKind::kNoncyclic, options.gamma_cap);
  inv.gamma_cyclic = bounded_gamma(a, GraphKind::kCyclic, options.gamma_cap);
  const auto& p = a.planarity();
  inv.planar = p.planar;
  inv.planarity_certificate = p.describe();
  try {
    const auto& h = a.hamiltonian();
    inv.hamiltonian = h.status == HamiltonResult::Status::kFound  ? Tristate::kYes
                      : h.status == HamiltonResult::Status::kNone ? Tristate::kNo
                                                                  : Tristate::kTimeout;
  } catch (const BudgetExhaustedError&) {
    inv.hamiltonian = Tristate::kTimeout;
  }
  r.timings["invariants"] = since(t);

  t = Clock::now();
  r.verdicts = run_selected(a, options.properties);
  r.timings["verdicts"] = since(t);
  r.timings["total"] = since(start);
  return r;
}

std::map<Outcome, std::size_t> SweepReport::counts() const {
  std::map<Outcome, std::size_t> c{
      {Outcome::kPass, 0}, {Outcome::kFail, 0}, {Outcome::kNotApplicable, 0}, {Outcome::kTimeout, 0}};
  for (const auto& g : groups)
    for (const auto& v : g.verdicts) ++c[v.outcome];
  return c;
}

std::size_t SweepReport::failures() const { return counts().at(Outcome::kFail); }

std::size_t SweepReport::errors() const {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const SweepGroup& g) { return !g.error.empty(); }));
}

int SweepReport::exit_code() const { return failures() == 0 && errors() == 0 ? 0 : 1; }

SweepReport sweep(const Catalog& catalog, const SweepOptions& options,
                  const std::function<void(const SweepGroup&)>& progress) {
  for (const auto& id : options.properties)
    if (!is_known_property(id)) throw InvalidSpecError("unknown property: " + id);
  SweepReport report;
  report.max_order = catalog.max_order;
  report.big = catalog.big;
  report.properties = options.properties;
  report.groups.resize(catalog.entries.size());

  std::atomic<std::size_t> next{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < catalog.entries.size(); i = next++) {
      const auto& entry = catalog.entries[i];
      SweepGroup& out = report.groups[i];
      out.name = entry.name;
      out.spec = to_string(entry.spec);
      const auto start = Clock::now();
      try {
        auto g = std::make_shared<const FiniteGroup>(build_group(entry.spec, options.build));
        out.order = g->order();
        GroupAnalysis a(g, entry.spec, analysis_options(options.timeout_seconds));
        out.cyclic = a.is_cyclic();
        out.verdicts = run_selected(a, options.properties);
      } catch (const Error& e) {
        out.error = e.what();
      }
      out.seconds = since(start);
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(out);
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, catalog.entries.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  return report;
}

json sweep_to_json(const SweepReport& r, bool timings) {
  json groups = json::array();
  for (const auto& g : r.groups) {
    json verdicts = json::array();
    for (const auto& v : g.verdicts) verdicts.push_back(verdict_json(v, timings));
    json gj{{"name", g.name}, {"spec", g.spec}, {"order", g.order}, {"cyclic", g.cyclic}, {"verdicts", verdicts}};
    if (!g.error.empty()) gj["error"] = g.error;
    if (timings) gj["seconds"] = g.seconds;
    groups.push_back(std::move(gj));
  }
  json summary = json::object();
  for (auto [o, n] : r.counts()) summary[std::string(to_string(o))] = n;
  summary["groups"] = r.groups.size();
  summary["errors"] = r.errors();
  return json{{"schema", kSweepSchema},
              {"coverage", kCoverageNote},
              {"catalog", {{"max_order", r.max_order}, {"big", r.big}}},
              {"properties", r.properties},
              {"summary", summary},
              {"groups", groups}};
}

std::string export_graph(const FiniteGroup& group, ExportFormat format, GraphKind target,
                         const std::string& graph_name) {
  auto b = build_bundle(std::make_shared<const FiniteGroup>(group));
  const SimpleGraph& g = target == GraphKind::kNoncyclic ? b.noncyclic
                         : target == GraphKind::kCyclic  ? b.cyclic_graph
                                                         : b.noncommuting;
  return format == ExportFormat::kDot ? to_dot(g, graph_name) : to_graph6(g) + "\n";
}

ExportFormat parse_export_format(const std::string& text) {
  if (text == "dot") return ExportFormat::kDot;
  if (text == "graph6") return ExportFormat::kGraph6;
  throw InvalidSpecError("unknown export format: " + text);
}

GraphKind parse_graph_kind(const std::string& text) {
  if (text == "noncyclic") return GraphKind::kNoncyclic;
  if (text == "cyclic") return GraphKind::kCyclic;
  if (text == "noncommuting") return GraphKind::kNoncommuting;
  throw InvalidSpecError("unknown graph: " + text);
}

FiniteGroup load_group_file(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("table")) return parse_cayley_document(text, options);
  if (doc.is_object() && doc.contains("generators")) return parse_perm_document(text, options);
  throw ParseError(path + ": neither a Cayley table nor a permutation generator file");
}

}  // namespace noncyc
