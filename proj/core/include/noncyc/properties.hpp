#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "noncyc/cyclicizer.hpp"
#include "noncyc/finite_group.hpp"
#include "noncyc/graph_algorithms.hpp"
#include "noncyc/group_spec.hpp"
#include "noncyc/noncyclic_graph.hpp"
#include "noncyc/planarity.hpp"
#include "noncyc/search_budget.hpp"

namespace noncyc {

enum class Outcome { kPass, kFail, kNotApplicable, kTimeout };

std::string_view to_string(Outcome o);
/// Throws ParseError for unknown text.
Outcome parse_outcome(std::string_view text);

struct Verdict {
  std::string property;
  /// Canonical spec text, or "table:<order>" for groups without a spec.
  std::string group;
  Outcome outcome = Outcome::kNotApplicable;
  /// Always an object; non-empty for failures.
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0.0;

  bool operator==(const Verdict&) const = default;
};

void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);

struct AnalysisOptions {
  SearchBudget budget = SearchBudget::from_env();
  /// Graphs up to this many vertices get an exact branch-and-bound clique
  /// search; larger ones take ω from the maximal-cyclic-subgroup count.
  std::size_t bnb_vertex_limit = 200;
};

enum class GraphKind { kNoncyclic, kCyclic, kNoncommuting };

/// Lazily computed facts about one group, shared by all property checks.
/// Not thread-safe; use one instance per thread.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(std::shared_ptr<const FiniteGroup> group, std::optional<GroupSpec> spec = std::nullopt,
                         AnalysisOptions options = {});

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
  const std::optional<GroupSpec>& spec() const { return spec_; }
  const AnalysisOptions& options() const { return options_; }
  std::string label() const;

  const CyclicizerData& cyclicizer();
  bool is_cyclic();
  const ElementSet& center();

  /// Throws CyclicGroupError.
  const GroupGraphBundle& bundle();
  const SimpleGraph& graph(GraphKind kind);
  const DistanceMatrix& distances(GraphKind kind);

  std::size_t oracle_omega();
  /// Throws BudgetExhaustedError.
  const CliqueResult& bnb_clique();
  /// Branch and bound up to the vertex limit, the oracle above it.
  std::size_t omega();
  bool omega_by_bnb();

  const DominationResult& domination(GraphKind kind, std::size_t cap);
  const PlanarityResult& planarity();
  const HamiltonResult& hamiltonian();

  /// Analysis of G / Cyc(G), sharing this instance's options.
  GroupAnalysis& quotient();
  /// Throws CapExceededError.
  const std::vector<ElementSet>& normal_subgroups();

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::optional<GroupSpec> spec_;
  AnalysisOptions options_;

  std::shared_ptr<const CyclicizerData> cyc_;
  std::optional<ElementSet> center_;
  std::optional<GroupGraphBundle> bundle_;
  std::map<GraphKind, DistanceMatrix> distances_;
  std::optional<std::size_t> oracle_omega_;
  std::optional<CliqueResult> bnb_;
  std::map<std::pair<GraphKind, std::size_t>, DominationResult> domination_;
  std::optional<PlanarityResult> planarity_;
  std::optional<HamiltonResult> hamiltonian_;
  std::unique_ptr<GroupAnalysis> quotient_;
  std::optional<std::vector<ElementSet>> normal_;
};

struct PropertyInfo {
  std::string_view id;
  std::string_view summary;
};

/// Registry rows in their fixed evaluation order.
const std::vector<PropertyInfo>& property_registry();
bool is_known_property(std::string_view id);

/// Throws InvalidSpecError for an unknown id. Search exhaustion becomes a
/// timeout verdict; any other library error becomes a failure with the message.
Verdict run_property(std::string_view id, GroupAnalysis& analysis);
Verdict run_property(std::string_view id, std::shared_ptr<const FiniteGroup> group,
                     std::optional<GroupSpec> spec = std::nullopt);

std::vector<Verdict> run_all_properties(GroupAnalysis& analysis);
std::vector<Verdict> run_all_properties(std::shared_ptr<const FiniteGroup> group,
                                        std::optional<GroupSpec> spec = std::nullopt);

}  // namespace noncyc
