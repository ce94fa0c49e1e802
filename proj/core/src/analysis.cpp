#include "noncyc/error.hpp"
#include "noncyc/group_ops.hpp"
#include "noncyc/properties.hpp"

namespace noncyc {

GroupAnalysis::GroupAnalysis(std::shared_ptr<const FiniteGroup> group, std::optional<GroupSpec> spec,
                             AnalysisOptions options)
    : group_(std::move(group)), spec_(std::move(spec)), options_(options) {}

std::string GroupAnalysis::label() const {
  if (spec_) return to_string(*spec_);
  return "table:" + std::to_string(group_->order());
}

const CyclicizerData& GroupAnalysis::cyclicizer() {
  if (!cyc_) cyc_ = std::make_shared<const CyclicizerData>(CyclicizerData::compute(group_));
  return *cyc_;
}

bool GroupAnalysis::is_cyclic() { return cyclicizer().cyc.count() == group_->order(); }

const ElementSet& GroupAnalysis::center() {
  if (!center_) center_ = noncyc::center(*group_);
  return *center_;
}

const GroupGraphBundle& GroupAnalysis::bundle() {
  if (!bundle_) {
    cyclicizer();
    bundle_ = build_bundle(group_, cyc_);
  }
  return *bundle_;
}

const SimpleGraph& GroupAnalysis::graph(GraphKind kind) {
  const auto& b = bundle();
  switch (kind) {
    case GraphKind::kNoncyclic: return b.noncyclic;
    case GraphKind::kCyclic: return b.cyclic_graph;
    case GraphKind::kNoncommuting: return b.noncommuting;
  }
  throw InternalError("unknown graph kind");
}

const DistanceMatrix& GroupAnalysis::distances(GraphKind kind) {
  auto it = distances_.find(kind);
  if (it == distances_.end()) it = distances_.emplace(kind, DistanceMatrix(graph(kind))).first;
  return it->second;
}

std::size_t GroupAnalysis::oracle_omega() {
  if (!oracle_omega_) {
    if (is_cyclic()) throw CyclicGroupError();
    oracle_omega_ = maximal_cyclic_subgroups(*group_).size();
  }
  return *oracle_omega_;
}

const CliqueResult& GroupAnalysis::bnb_clique() {
  if (!bnb_) bnb_ = clique_number(graph(GraphKind::kNoncyclic), options_.budget);
  return *bnb_;
}

bool GroupAnalysis::omega_by_bnb() { return graph(GraphKind::kNoncyclic).vertex_count() <= options_.bnb_vertex_limit; }

std::size_t GroupAnalysis::omega() { return omega_by_bnb() ? bnb_clique().size : oracle_omega(); }

const DominationResult& GroupAnalysis::domination(GraphKind kind, std::size_t cap) {
  auto key = std::make_pair(kind, cap);
  auto it = domination_.find(key);
  if (it == domination_.end())
    it = domination_.emplace(key, domination_number_bounded(graph(kind), cap, options_.budget)).first;
  return it->second;
}

const PlanarityResult& GroupAnalysis::planarity() {
  if (!planarity_) planarity_ = is_planar(graph(GraphKind::kNoncyclic));
  return *planarity_;
}

const HamiltonResult& GroupAnalysis::hamiltonian() {
  if (!hamiltonian_) hamiltonian_ = hamiltonian_cycle(graph(GraphKind::kNoncyclic), options_.budget);
  return *hamiltonian_;
}

GroupAnalysis& GroupAnalysis::quotient() {
  if (!quotient_) {
    auto q = std::make_shared<const FiniteGroup>(cyclicizer().quotient.group);
    quotient_ = std::make_unique<GroupAnalysis>(std::move(q), std::nullopt, options_);
  }
  return *quotient_;
}

const std::vector<ElementSet>& GroupAnalysis::normal_subgroups() {
  if (!normal_) normal_ = noncyc::normal_subgroups(*group_);
  return *normal_;
}

}  // namespace noncyc
