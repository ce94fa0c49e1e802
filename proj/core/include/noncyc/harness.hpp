#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "noncyc/group_builder.hpp"
#include "noncyc/group_spec.hpp"
#include "noncyc/properties.hpp"

namespace noncyc {

inline constexpr const char* kReportSchema = "noncyc.report/1";
inline constexpr const char* kSweepSchema = "noncyc.sweep/1";
inline constexpr const char* kCoverageNote =
    "catalog of constructible families (cyclic, abelian, dihedral, dicyclic, metacyclic, symmetric, alternating, "
    "linear and selected products) plus file import; not a complete enumeration of all groups of each order";

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
};

struct Catalog {
  std::size_t max_order = 0;
  bool big = false;
  std::vector<CatalogEntry> entries;
};

/// Deterministic, names unique. With `big`, adds A5, S5, SL2(5) and PSL2(q),
/// q in {4,5,7,8,9}, whatever the order limit.
Catalog default_catalog(std::size_t max_order, bool big = false);

/// γ searched up to `cap`.
struct BoundedGamma {
  DominationResult::Status status = DominationResult::Status::kExceedsCap;
  std::optional<std::size_t> value;
  std::size_t cap = 0;
  bool operator==(const BoundedGamma&) const = default;
};

enum class Tristate { kYes, kNo, kTimeout };

struct ReportInvariants {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t omega = 0;
  std::string omega_method;
  Distance diam_noncyclic = Distance::infinite();
  Distance diam_cyclic = Distance::infinite();
  BoundedGamma gamma_noncyclic;
  BoundedGamma gamma_cyclic;
  bool planar = false;
  std::string planarity_certificate;
  Tristate hamiltonian = Tristate::kNo;
  bool operator==(const ReportInvariants&) const = default;
};

struct AnalysisReport {
  std::string name;
  std::string spec;
  std::size_t order = 0;
  std::size_t cyc_order = 0;
  std::size_t quotient_order = 0;
  ReportInvariants invariants;
  std::vector<Verdict> verdicts;
  std::map<std::string, double> timings;

  std::size_t failures() const;
  bool operator==(const AnalysisReport&) const = default;
};

/// With `timings` false, the timing map and per-verdict seconds are left out.
nlohmann::json report_to_json(const AnalysisReport& r, bool timings = true);
/// Throws ParseError on schema mismatch.
AnalysisReport report_from_json(const nlohmann::json& j);

struct AnalyzeOptions {
  BuildOptions build;
  /// Property ids to evaluate; empty means the whole registry.
  std::vector<std::string> properties;
  /// Wall-clock limit for the searches of one group.
  double timeout_seconds = 120.0;
  std::size_t gamma_cap = 2;
};

/// Throws CyclicGroupError for cyclic groups and the builder's errors otherwise.
AnalysisReport analyze(const GroupSpec& spec, const AnalyzeOptions& options = {});
AnalysisReport analyze(std::shared_ptr<const FiniteGroup> group, const std::optional<GroupSpec>& spec,
                       const std::string& name, const AnalyzeOptions& options = {});

struct SweepGroup {
  std::string name;
  std::string spec;
  std::size_t order = 0;
  bool cyclic = false;
  /// Set when the group could not be built or analysed.
  std::string error;
  std::vector<Verdict> verdicts;
  double seconds = 0.0;
};

struct SweepOptions {
  BuildOptions build;
  std::vector<std::string> properties;
  std::size_t jobs = 1;
  double timeout_seconds = 120.0;
};

struct SweepReport {
  std::size_t max_order = 0;
  bool big = false;
  std::vector<std::string> properties;
  std::vector<SweepGroup> groups;

  std::map<Outcome, std::size_t> counts() const;
  std::size_t failures() const;
  std::size_t errors() const;
  /// 0 when nothing failed and every group built, 1 otherwise.
  int exit_code() const;
};

/// Groups run concurrently up to `jobs`; results keep catalog order.
/// `progress` is called after each group (from worker threads, serialised).
SweepReport sweep(const Catalog& catalog, const SweepOptions& options = {},
                  const std::function<void(const SweepGroup&)>& progress = {});
nlohmann::json sweep_to_json(const SweepReport& r, bool timings = true);

enum class ExportFormat { kDot, kGraph6 };

/// Byte-deterministic. Throws CyclicGroupError.
std::string export_graph(const FiniteGroup& group, ExportFormat format, GraphKind target,
                         const std::string& graph_name = "G");

ExportFormat parse_export_format(const std::string& text);
GraphKind parse_graph_kind(const std::string& text);

/// Loads a JSON group file, recognising Cayley tables ("table") and
/// permutation generators ("generators"). Always fully validated.
FiniteGroup load_group_file(const std::string& path, const BuildOptions& options = {});

}  // namespace noncyc
