// Acceptance checks: one PASS/FAIL line per criterion.
// Usage: noncyc_acceptance [--only N]...  Exit 0 iff every selected criterion passes.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "noncyc/cyclicizer.hpp"
#include "noncyc/group_builder.hpp"
#include "noncyc/group_ops.hpp"
#include "noncyc/harness.hpp"
#include "noncyc/noncyclic_graph.hpp"
#include "noncyc/planarity.hpp"
#include "noncyc/properties.hpp"

namespace {

using namespace noncyc;

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[x] " << what << "; ";
    }
  }
  void note(const std::string& what) { detail << what << "; "; }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

std::shared_ptr<const FiniteGroup> make(const std::string& spec) {
  return std::make_shared<const FiniteGroup>(build_group(parse_spec(spec)));
}

std::string str(std::size_t v) { return std::to_string(v); }

// Criterion 1.
void a5_clique(Check& o) {
  GroupAnalysis a(make("Alternating(5)"));
  const auto& c = a.bnb_clique();
  const auto& graph = a.graph(GraphKind::kNoncyclic);
  o.require(c.size == 31, "branch-and-bound omega = " + str(c.size));
  o.require(c.witness.size() == 31 && is_clique(graph, c.witness), "31-clique witness verifies");
  o.require(a.oracle_omega() == 31, "maximal cyclic subgroups = " + str(a.oracle_omega()));
  o.note("omega " + str(c.size) + " (witness verified), oracle " + str(a.oracle_omega()));
}

// Criterion 2.
void s5_clique(Check& o) {
  GroupAnalysis a(make("Symmetric(5)"));
  const auto& c = a.bnb_clique();
  const auto& graph = a.graph(GraphKind::kNoncyclic);
  o.require(c.size == 31 && is_clique(graph, c.witness), "branch-and-bound omega = " + str(c.size));
  o.require(a.oracle_omega() == 31, "maximal cyclic subgroups = " + str(a.oracle_omega()));
  ElementSet cover = a.group().empty_set();
  for (auto v : c.witness) cover |= a.cyclicizer().cyc_of[graph.elements()[v]];
  o.require(cover.all(), "union of Cyc(x) over the clique covers " + str(cover.count()) + " of 120");
  o.note("omega " + str(c.size) + ", union of the 31 Cyc(x) sets has " + str(cover.count()) + " elements");
}

// Criterion 3.
void sl25(Check& o) {
  auto g = make("SL2(5)");
  const auto d = CyclicizerData::compute(g);
  const auto w = clique_number_via_maximal_cyclic(*g);
  o.require(w == 31, "oracle omega = " + str(w));
  o.require(d.cyc.count() == 2, "|Cyc| = " + str(d.cyc.count()));
  o.require(d.quotient.group.order() == 60, "quotient order " + str(d.quotient.group.order()));
  o.note("oracle omega " + str(w) + ", |Cyc| " + str(d.cyc.count()) + ", |G/Cyc| " + str(d.quotient.group.order()));
}

// Criterion 4.
void elementary_abelian(Check& o) {
  GroupAnalysis d8(make("Dihedral(4)"));
  GroupAnalysis v4(make("ElementaryAbelian(2,2)"));
  o.require(d8.omega() == 5, "omega(D8) = " + str(d8.omega()));
  o.require(v4.omega() == 3, "omega(C2^2) = " + str(v4.omega()));
  std::size_t checked = 0;
  for (std::size_t p : {2, 3, 5})
    for (std::size_t n = 2; n <= 5; ++n) {
      std::size_t pn = 1;
      for (std::size_t i = 0; i < n; ++i) pn *= p;
      if (pn > 3125) continue;
      GroupAnalysis a(make("ElementaryAbelian(" + str(p) + "," + str(n) + ")"));
      const std::size_t expected = (pn - 1) / (p - 1);
      const std::size_t got = a.omega();
      o.require(got == expected, "omega(C" + str(p) + "^" + str(n) + ") = " + str(got) + ", want " + str(expected));
      if (a.omega_by_bnb())
        o.require(a.oracle_omega() == got, "oracle disagrees for C" + str(p) + "^" + str(n));
      ++checked;
      if ((p == 2 && n == 5) || (p == 5 && n == 3)) o.note("C" + str(p) + "^" + str(n) + " omega " + str(got));
    }
  o.note("D8 " + str(d8.omega()) + ", C2^2 " + str(v4.omega()) + ", " + str(checked) + " elementary abelian groups");
}

// Criterion 5.
void c2f42(Check& o) {
  GroupAnalysis a(make("DirectProduct(Cyclic(2),SemidirectCyclic(7,6,3))"));
  const auto dn = a.distances(GraphKind::kNoncyclic).diameter();
  const auto dc = a.distances(GraphKind::kCyclic).diameter();
  o.require(dn == Distance::finite(2), "diam(C) = " + dn.to_string());
  o.require(dc == Distance::finite(4), "diam(complement) = " + dc.to_string());
  o.note("diam(C) " + dn.to_string() + ", diam(complement) " + dc.to_string());
}

// Criterion 6.
void sylow_counts(Check& o) {
  auto psl7 = make("PSL2(7)");
  auto a5 = make("Alternating(5)");
  o.require(nu_p(*psl7, 3) == 28, "nu_3(PSL2(7)) = " + str(nu_p(*psl7, 3)));
  o.require(nu_p(*psl7, 7) == 8, "nu_7(PSL2(7)) = " + str(nu_p(*psl7, 7)));
  o.require(nu_p(*a5, 5) == 6, "nu_5(A5) = " + str(nu_p(*a5, 5)));
  for (std::size_t q : {4, 5, 7, 8, 9}) {
    const std::string s = "PSL2(" + str(q) + ")";
    const auto v = run_property("P-PSL2-SYLOW", make(s), parse_spec(s));
    o.require(v.outcome == noncyc::Outcome::kPass, s + " " + std::string(to_string(v.outcome)) + " " + v.witness.dump());
  }
  o.note("nu_3 28, nu_7 8, nu_5(A5) 6, P-PSL2-SYLOW on q = 4,5,7,8,9");
}

bool planar_signature(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 4) return g.exponent() == 2;
  if (n == 6) return !g.is_abelian();
  if (n == 8) {
    std::size_t involutions = 0;
    for (Element x = 0; x < n; ++x) involutions += g.element_order(x) == 2 ? 1 : 0;
    return !g.is_abelian() && involutions == 1;
  }
  return false;
}

// Criterion 7.
void planarity_sweep(Check& o) {
  std::size_t groups = 0, planar = 0, certified = 0;
  std::vector<std::string> planar_names;
  for (const auto& e : default_catalog(100).entries) {
    auto g = make(to_string(e.spec));
    if (is_cyclic(*g)) continue;
    ++groups;
    const auto b = build_bundle(g);
    const auto r = is_planar(b.noncyclic);
    const bool expected = planar_signature(*g);
    o.require(r.planar == expected, e.name + " planar=" + (r.planar ? "yes" : "no"));
    if (r.planar) {
      ++planar;
      planar_names.push_back(e.name);
      o.require(verify_rotation_system(b.noncyclic, r.rotation), e.name + " rotation system");
    } else {
      const bool ok = r.obstruction && classify_kuratowski(b.noncyclic, r.kuratowski_edges) == r.obstruction;
      o.require(ok, e.name + " lacks a verified Kuratowski certificate");
      certified += ok ? 1 : 0;
    }
  }
  std::string names;
  for (const auto& n : planar_names) names += (names.empty() ? "" : ",") + n;
  o.note(str(groups) + " groups, planar exactly {" + names + "}, " + str(certified) + " non-planar certificates verified");
}

std::string sweep_failures(const std::vector<std::string>& props, Check& o) {
  SweepOptions opts;
  opts.properties = props;
  opts.jobs = std::max(1U, std::thread::hardware_concurrency());
  const auto r = sweep(default_catalog(100), opts);
  std::map<std::string, std::vector<std::string>> failing;
  std::size_t timeouts = 0;
  for (const auto& g : r.groups) {
    o.require(g.error.empty(), g.name + " error " + g.error);
    for (const auto& v : g.verdicts) {
      if (v.outcome == noncyc::Outcome::kFail) failing[v.property].push_back(g.name);
      if (v.outcome == noncyc::Outcome::kTimeout) ++timeouts;
    }
  }
  o.require(timeouts == 0, str(timeouts) + " timeouts");
  const auto counts = r.counts();
  std::ostringstream s;
  s << r.groups.size() << " groups, " << counts.at(noncyc::Outcome::kPass) << " pass, "
    << counts.at(noncyc::Outcome::kFail) << " fail";
  for (const auto& [prop, groups] : failing) {
    std::string list;
    for (const auto& g : groups) list += (list.empty() ? "" : ",") + g;
    o.require(false, prop + " fails on " + list);
  }
  return s.str();
}

// Criterion 8.
void theorem_sweep(Check& o) {
  const std::vector<std::string> props{
      "P-CLIQUE3-CHAR",     "P-CLIQUE4-CHAR",   "P-CLIQUE-GE3",   "P-CLIQUE-QUOTIENT-EQ",
      "P-CLIQUE-QUOTIENT-MONO", "P-SYLOW-CLIQUE", "P-PELEMENT-CENTER", "P-GAMMA-COMPLEMENT",
      "P-GAMMA-ONE",        "P-PRIMEPOWER-DISCONNECTED", "P-DIAM3-IMPLIES", "P-DIST3-CHAR",
      "P-EDGE-QUOTIENT",    "P-DIAM-QUOTIENT",  "P-NONCOMM-BOUND", "P-HAM-DIRAC",
      "P-HAM-QUOTIENT",     "P-PRODUCT-CLIQUE"};
  o.note(sweep_failures(props, o));
}

// Criterion 9.
void diam3_scan(Check& o) {
  o.note(sweep_failures({"P-DIAM3-EQUIV-SCAN"}, o));
  o.note("coverage: constructible catalog, not every group of order <= 100");
}

// Criterion 10.
void order27(Check& o) {
  std::vector<std::pair<std::string, std::shared_ptr<const FiniteGroup>>> groups{
      {"C3xC9", make("DirectProduct(Cyclic(3),Cyclic(9))")},
      {"C3^3", make("ElementaryAbelian(3,3)")},
      {"C9:C3[4]", make("SemidirectCyclic(9,3,4)")},
      {"exponent-3 fixture",
       std::make_shared<const FiniteGroup>(load_cayley_file(std::string(NONCYC_FIXTURE_DIR) + "/heisenberg27.json"))}};
  std::string omegas;
  for (const auto& [name, g] : groups) {
    GroupAnalysis a(g);
    const auto w = a.omega();
    o.require(g->order() == 27 && w != 4, name + " omega " + str(w));
    omegas += name + " " + str(w) + ", ";
  }
  o.note("omega: " + omegas.substr(0, omegas.size() - 2));
  // The five words, reading d with d^-1 c d = c^4.
  auto g = groups[2].second;
  const auto c = *g->find("c");
  Element d = 0;
  for (Element y = 0; y < g->order(); ++y)
    if (g->element_order(y) == 3 && g->mul(g->mul(g->inv(y), c), y) == g->pow(c, 4) &&
        !cyclic_subgroup(*g, c).test(y)) {
      d = y;
      break;
    }
  const Element ci = g->inv(c), di = g->inv(d);
  const std::vector<Element> five{c, d, g->mul(c, d), g->mul(ci, d), g->mul(c, di)};
  const std::vector<std::string> words{"c", "d", "cd", "c^-1d", "cd^-1"};
  bool clique = true;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (five[i] == five[j] || pair_generates_cyclic(*g, five[i], five[j])) {
        clique = false;
        o.require(false, "{" + words[i] + ", " + words[j] + "} generates a cyclic group (" + g->name(five[i]) +
                             ", " + g->name(five[j]) + ")");
      }
  if (clique) o.note("five-word set is a clique");
}

// Criterion 11.
void oracle_equivalence(Check& o) {
  std::size_t compared = 0, brute = 0;
  for (const auto& e : default_catalog(100, true).entries) {
    auto g = make(to_string(e.spec));
    if (is_cyclic(*g)) continue;
    GroupAnalysis a(g);
    const auto& graph = a.graph(GraphKind::kNoncyclic);
    if (graph.vertex_count() > 200) continue;
    const auto& c = a.bnb_clique();
    o.require(c.size == a.oracle_omega(), e.name + " branch-and-bound " + str(c.size) + " vs oracle " +
                                             str(a.oracle_omega()));
    ++compared;
    if (graph.vertex_count() <= 20) {
      const std::size_t m = graph.vertex_count();
      std::size_t best = 0;
      for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
        bool ok = true;
        for (std::size_t u = 0; u < m && ok; ++u)
          for (std::size_t v = u + 1; v < m && ok; ++v)
            if ((mask >> u & 1U) && (mask >> v & 1U) && !graph.adjacent(u, v)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
      }
      o.require(best == c.size, e.name + " subset scan " + str(best) + " vs " + str(c.size));
      ++brute;
    }
  }
  o.note(str(compared) + " groups compared with the oracle, " + str(brute) + " also by subset scan");
}

// Criterion 12.
void c6s3(Check& o) {
  auto g = make("DirectProduct(Cyclic(6),Symmetric(3))");
  auto c6 = make("Cyclic(6)");
  auto s3 = make("Symmetric(3)");
  std::optional<Element> x;
  for (Element y = 0; y < c6->order(); ++y)
    if (c6->element_order(y) == 3) x = g->find("(" + c6->name(y) + "," + s3->name(0) + ")");
  o.require(x.has_value(), "order-3 element of the C6 factor");
  if (!x) return;
  const auto cyc = cyclicizer(*g).count();
  const auto cx = cyc_of_element(*g, *x).count();
  o.require(cyc == 1, "|Cyc| = " + str(cyc));
  o.require(cx == 24, "|Cyc(x)| = " + str(cx));
  o.note("|Cyc| " + str(cyc) + ", |Cyc(x)| " + str(cx) + " for x = " + g->name(*x));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "Run only these criteria")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "A5 clique number 31 with witness and oracle", 10, a5_clique},
      {2, "S5 clique number 31 and covering by Cyc sets", 60, s5_clique},
      {3, "SL2(5) oracle 31, |Cyc| 2, quotient order 60", 600, sl25},
      {4, "D8, C2^2 and elementary abelian clique numbers", 600, elementary_abelian},
      {5, "C2 x F42 diameters 2 and 4", 5, c2f42},
      {6, "Sylow counts in PSL2(q) and A5", 60, sylow_counts},
      {7, "planarity classification over the catalog", 600, planarity_sweep},
      {8, "theorem sweep over default_catalog(100)", 900, theorem_sweep},
      {9, "diameter-3 equivalence scan over default_catalog(100)", 900, diam3_scan},
      {10, "order-27 exclusion and the five-word clique", 600, order27},
      {11, "branch-and-bound equals oracle; subset scan agrees", 900, oracle_equivalence},
      {12, "C6 x S3 non-example", 600, c6s3},
  };

  const std::set<int> selected(only.begin(), only.end());
  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Check o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream limit;
    limit << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds
          << " s";
    o.require(secs < c.limit_seconds, "over the time limit");
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << limit.str()
              << ") :: " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
