#include "migmeta/conformance.hpp"

#include <algorithm>
#include <map>

#include "migmeta/canonical.hpp"
#include "migmeta/error.hpp"

namespace migmeta {

std::string_view to_string(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::UnmatchedConcept: return "UNMATCHED_CONCEPT";
    case ViolationCode::IllegalEdge: return "ILLEGAL_EDGE";
    case ViolationCode::PhaseOrderBroken: return "PHASE_ORDER_BROKEN";
    case ViolationCode::UnknownMetamodelVersion: return "UNKNOWN_METAMODEL_VERSION";
  }
  return "UNMATCHED_CONCEPT";
}

std::optional<ConceptId> resolve_instance(const Metamodel& m, const Activity& a) {
  if (const Concept* c = m.resolve(a.instance_of)) return c->id;
  return std::nullopt;
}

namespace {

bool version_known(const Metamodel& m, const std::string& version) {
  if (version == m.version()) return true;
  const auto& names = builtin_version_names();
  return std::find(names.begin(), names.end(), version) != names.end();
}

using Resolution = std::map<ActivityId, ConceptId>;

Resolution resolve_all(const Metamodel& m, const InstanceModel& model) {
  Resolution out;
  for (const Activity& a : model.activities()) {
    if (auto c = resolve_instance(m, a)) out.emplace(a.id, *c);
  }
  return out;
}

std::optional<std::size_t> phase_index(const std::vector<ConceptId>& chain,
                                       const std::optional<ConceptId>& phase) {
  if (!phase) return std::nullopt;
  const auto it = std::find(chain.begin(), chain.end(), *phase);
  if (it == chain.end()) return std::nullopt;
  return static_cast<std::size_t>(it - chain.begin());
}

// Specialization chain plus owning phase; the lift target set for
// relationship matching.
std::set<ConceptId> lift(const Metamodel& m, const ConceptId& c) {
  std::set<ConceptId> out{c};
  for (ConceptId& a : ancestors(m, c)) out.insert(std::move(a));
  if (auto phase = owning_phase(m, c)) out.insert(*phase);
  return out;
}

void require_usable(const Metamodel& m, const InstanceModel& model) {
  const ConformanceReport report = check_conformance(m, model, false);
  for (const Violation& v : report.violations) {
    if (v.code == ViolationCode::UnmatchedConcept ||
        v.code == ViolationCode::UnknownMetamodelVersion) {
      throw Error(ErrorCode::NonconformantModel,
                  "model '" + model.name() + "': " + std::string(to_string(v.code)) + " " +
                      v.subject + " (" + v.detail + ")");
    }
  }
}

}  // namespace

ConformanceReport check_conformance(const Metamodel& m, const InstanceModel& model,
                                    bool strict_edges) {
  ConformanceReport report;
  report.model_name = model.name();
  report.metamodel_version = m.version();

  if (!version_known(m, model.conforms_to())) {
    report.violations.push_back({ViolationCode::UnknownMetamodelVersion, model.name(),
                                 "model conforms to '" + model.conforms_to() +
                                     "', which is not a known metamodel version"});
  }

  Resolution resolved;
  for (const Activity& a : model.activities()) {
    const auto c = resolve_instance(m, a);
    if (!c) {
      report.violations.push_back({ViolationCode::UnmatchedConcept, a.id.str(),
                                   "'" + a.instance_of + "' is not a concept of metamodel " +
                                       m.version()});
      continue;
    }
    resolved.emplace(a.id, *c);
    report.covered_concepts.insert(*c);
    for (ConceptId& anc : ancestors(m, *c)) report.covered_concepts.insert(std::move(anc));
  }

  const auto chain = phase_chain(m);
  for (const Edge& e : model.edges()) {
    const auto src = resolved.find(e.source);
    const auto dst = resolved.find(e.target);
    if (src == resolved.end() || dst == resolved.end()) continue;

    if (e.kind == RelationshipKind::Uses && strict_edges &&
        !relationship_exists(m, RelationshipKind::Uses, src->second, dst->second, true)) {
      report.violations.push_back({ViolationCode::IllegalEdge, describe(e),
                                   "no uses relationship from " + src->second.str() + " to " +
                                       dst->second.str() + " or their ancestors"});
    }
    if (e.kind == RelationshipKind::Follows) {
      const auto from = phase_index(chain, owning_phase(m, src->second));
      const auto to = phase_index(chain, owning_phase(m, dst->second));
      if (from && to && *from > *to) {
        report.violations.push_back(
            {ViolationCode::PhaseOrderBroken, describe(e),
             src->second.str() + " (" + chain[*from].str() + ") cannot precede " +
                 dst->second.str() + " (" + chain[*to].str() + ")"});
      }
    }
  }
  return report;
}

CoverageMatrix coverage_matrix(const Metamodel& m, const std::vector<InstanceModel>& models,
                               const std::optional<std::vector<ConceptId>>& row_filter) {
  std::vector<ConceptId> rows;
  if (row_filter) {
    for (const ConceptId& id : *row_filter) {
      if (!m.contains(id)) {
        throw Error(ErrorCode::UnknownConcept, "unknown concept '" + id.str() + "'");
      }
      rows.push_back(id);
    }
  } else {
    for (const Concept& c : m.concepts()) rows.push_back(c.id);
  }

  CoverageMatrix matrix;
  std::vector<std::set<ConceptId>> covered;
  for (const InstanceModel& model : models) {
    require_usable(m, model);
    matrix.columns.push_back(model.name());
    covered.push_back(check_conformance(m, model, false).covered_concepts);
  }
  for (const ConceptId& row : rows) {
    matrix.rows.push_back(row.str());
    for (const auto& set : covered) {
      matrix.cells.push_back(set.contains(row) ? Cell::Yes : Cell::No);
    }
  }
  return matrix;
}

CoverageMatrix relationship_coverage(const Metamodel& m, const std::vector<InstanceModel>& models,
                                     const std::vector<Relationship>& rels) {
  for (const Relationship& r : rels) {
    if (!m.contains(r)) {
      throw Error(ErrorCode::UnknownRelationship,
                  "relationship '" + describe(r) + "' is not part of metamodel " + m.version());
    }
  }

  struct ModelView {
    std::map<ActivityId, std::set<ConceptId>> lifted;
    std::set<ConceptId> covered;  // concepts, their ancestors, and phases
  };
  CoverageMatrix matrix;
  matrix.row_header = "relationship";
  std::vector<ModelView> views;
  for (const InstanceModel& model : models) {
    require_usable(m, model);
    matrix.columns.push_back(model.name());
    ModelView view;
    for (const auto& [activity, concept_id] : resolve_all(m, model)) {
      auto lifted = lift(m, concept_id);
      view.covered.insert(lifted.begin(), lifted.end());
      view.lifted.emplace(activity, std::move(lifted));
    }
    views.push_back(std::move(view));
  }

  for (std::size_t r = 0; r < rels.size(); ++r) {
    const Relationship& rel = rels[r];
    matrix.rows.push_back(describe(rel));
    for (std::size_t s = 0; s < models.size(); ++s) {
      const ModelView& view = views[s];
      if (!view.covered.contains(rel.source) || !view.covered.contains(rel.target)) {
        matrix.cells.push_back(Cell::NotApplicable);
        continue;
      }
      const bool instantiated = std::any_of(
          models[s].edges().begin(), models[s].edges().end(), [&](const Edge& e) {
            if (e.kind != rel.kind) return false;
            const auto src = view.lifted.find(e.source);
            const auto dst = view.lifted.find(e.target);
            return src != view.lifted.end() && dst != view.lifted.end() &&
                   src->second.contains(rel.source) && dst->second.contains(rel.target);
          });
      matrix.cells.push_back(instantiated ? Cell::Yes : Cell::No);
    }
  }
  return matrix;
}

ModelDiff diff_models(const InstanceModel& a, const InstanceModel& b, const Metamodel& m) {
  require_usable(m, a);
  require_usable(m, b);
  const auto covered_a = check_conformance(m, a).covered_concepts;
  const auto covered_b = check_conformance(m, b).covered_concepts;

  ModelDiff diff;
  for (const ConceptId& c : covered_a) {
    (covered_b.contains(c) ? diff.shared : diff.only_in_a).insert(c);
  }
  for (const ConceptId& c : covered_b) {
    if (!covered_a.contains(c)) diff.only_in_b.insert(c);
  }

  const auto concept_edges = [&](const InstanceModel& model) {
    const Resolution resolved = resolve_all(m, model);
    std::set<ConceptEdge> out;
    for (const Edge& e : model.edges()) {
      out.insert({e.kind, resolved.at(e.source), resolved.at(e.target)});
    }
    return out;
  };
  const auto edges_a = concept_edges(a);
  const auto edges_b = concept_edges(b);
  std::set_difference(edges_a.begin(), edges_a.end(), edges_b.begin(), edges_b.end(),
                      std::inserter(diff.edges_only_in_a, diff.edges_only_in_a.end()));
  std::set_difference(edges_b.begin(), edges_b.end(), edges_a.begin(), edges_a.end(),
                      std::inserter(diff.edges_only_in_b, diff.edges_only_in_b.end()));
  return diff;
}

}  // namespace migmeta
