#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "migmeta/metamodel.hpp"
#include "migmeta/model.hpp"

namespace migmeta {

enum class ViolationCode {
  UnmatchedConcept,         // activity instantiates nothing in the metamodel
  IllegalEdge,              // uses edge with no metamodel counterpart (strict mode)
  PhaseOrderBroken,         // follows edge runs against the phase chain
  UnknownMetamodelVersion,  // conforms_to names no known version
};

[[nodiscard]] std::string_view to_string(ViolationCode code) noexcept;

struct Violation {
  ViolationCode code = ViolationCode::UnmatchedConcept;
  std::string subject;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ConformanceReport {
  std::string model_name;
  std::string metamodel_version;
  std::vector<Violation> violations;
  /// Concepts instantiated directly or through a specialization.
  std::set<ConceptId> covered_concepts;

  [[nodiscard]] bool conformant() const noexcept { return violations.empty(); }
};

/// The concept an activity instantiates after alias resolution, if any.
[[nodiscard]] std::optional<ConceptId> resolve_instance(const Metamodel& m, const Activity& a);

/// `conforms_to` must name the metamodel's own version or a built-in one.
[[nodiscard]] ConformanceReport check_conformance(const Metamodel& m, const InstanceModel& model,
                                                  bool strict_edges = false);

enum class Cell { No, Yes, NotApplicable };

struct CoverageMatrix {
  std::string row_header = "concept";
  std::vector<std::string> rows;     // concept ids or relationship descriptions
  std::vector<std::string> columns;  // model names
  std::vector<Cell> cells;           // row-major, rows.size() * columns.size()

  [[nodiscard]] Cell at(std::size_t row, std::size_t column) const {
    return cells.at(row * columns.size() + column);
  }
};

/// Throws Error(NonconformantModel) if a model has unmatched concepts or an
/// unknown metamodel version. Without a row filter every concept of `m` is
/// a row, in registration order.
[[nodiscard]] CoverageMatrix coverage_matrix(
    const Metamodel& m, const std::vector<InstanceModel>& models,
    const std::optional<std::vector<ConceptId>>& row_filter = std::nullopt);

/// A cell is Yes when the model has an edge of the same kind whose endpoint
/// concepts lift to the relationship's endpoints, and NotApplicable when an
/// endpoint concept is not covered by the model at all. Lifting walks the
/// specialization chain and, for phase endpoints, the owning phase.
/// Throws Error(UnknownRelationship) for relationships absent from `m`.
[[nodiscard]] CoverageMatrix relationship_coverage(const Metamodel& m,
                                                   const std::vector<InstanceModel>& models,
                                                   const std::vector<Relationship>& rels);

/// Concept-level edge: both endpoints replaced by their resolved concepts.
struct ConceptEdge {
  RelationshipKind kind = RelationshipKind::Uses;
  ConceptId source;
  ConceptId target;

  friend auto operator<=>(const ConceptEdge&, const ConceptEdge&) = default;
  friend bool operator==(const ConceptEdge&, const ConceptEdge&) = default;
};

struct ModelDiff {
  std::set<ConceptId> only_in_a;
  std::set<ConceptId> only_in_b;
  std::set<ConceptId> shared;
  std::set<ConceptEdge> edges_only_in_a;
  std::set<ConceptEdge> edges_only_in_b;
};

/// Throws Error(NonconformantModel) if either model fails conformance.
[[nodiscard]] ModelDiff diff_models(const InstanceModel& a, const InstanceModel& b,
                                    const Metamodel& m);

}  // namespace migmeta
