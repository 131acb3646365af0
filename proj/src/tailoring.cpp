#include "migmeta/tailoring.hpp"

#include "migmeta/error.hpp"

namespace migmeta {

std::string_view to_string(TailoringOp op) noexcept {
  switch (op) {
    case TailoringOp::Extend: return "extend";
    case TailoringOp::Specialize: return "specialize";
    case TailoringOp::Subset: return "subset";
  }
  return "extend";
}

std::string format(const TailoringLogEntry& entry) {
  return std::string(to_string(entry.operation)) + " " + entry.from_version + " -> " +
         entry.to_version + ": " + entry.summary;
}

void TailoringLog::append(TailoringLogEntry entry) { entries_.push_back(std::move(entry)); }

namespace {

void require_valid(const Metamodel& result, std::string_view operation) {
  auto diagnostics = validate_metamodel(result);
  if (has_errors(diagnostics)) {
    std::string first;
    for (const Diagnostic& d : diagnostics) {
      if (d.severity == Severity::Error) {
        first = format(d);
        break;
      }
    }
    throw Error(ErrorCode::InvalidResult,
                std::string(operation) + " produced an invalid metamodel: " + first,
                std::move(diagnostics));
  }
}

void record(TailoringLog* log, TailoringOp op, const Metamodel& from, const Metamodel& to,
            std::string summary) {
  if (log != nullptr) log->append({op, from.version(), to.version(), std::move(summary)});
}

std::string join_ids(const std::vector<Concept>& concepts) {
  std::string out;
  for (const Concept& c : concepts) out += (out.empty() ? "" : ", ") + c.id.str();
  return out;
}

}  // namespace

Metamodel merge_extension(const Metamodel& m, const MetamodelExtension& e) {
  if (e.base != m.version()) {
    throw Error(ErrorCode::BaseMismatch, "extension '" + e.version + "' extends '" + e.base +
                                             "' but the metamodel is version '" + m.version() +
                                             "'");
  }
  if (e.version == m.version()) {
    throw Error(ErrorCode::ExtensionConflict,
                "extension version '" + e.version + "' equals its base version");
  }
  Metamodel result = m;
  result.set_version(e.version);
  for (const Concept& c : e.new_concepts) {
    if (!result.add_concept(c)) {
      throw Error(ErrorCode::ExtensionConflict, "concept '" + c.id.str() + "' already exists");
    }
  }
  for (const Relationship& r : e.new_relationships) {
    if (!result.add_relationship(r)) {
      throw Error(ErrorCode::ExtensionConflict,
                  "relationship '" + describe(r) + "' already exists");
    }
  }
  return result;
}

Metamodel apply_extension(const Metamodel& m, const MetamodelExtension& e, TailoringLog* log) {
  Metamodel result = merge_extension(m, e);
  require_valid(result, "extension '" + e.version + "'");
  std::string summary = "added " + std::to_string(e.new_concepts.size()) + " concept(s)";
  if (!e.new_concepts.empty()) summary += " (" + join_ids(e.new_concepts) + ")";
  summary += " and " + std::to_string(e.new_relationships.size()) + " relationship(s)";
  record(log, TailoringOp::Extend, m, result, std::move(summary));
  return result;
}

std::set<ConceptId> subset_closure(const Metamodel& m, const std::set<ConceptId>& keep) {
  std::set<ConceptId> closure;
  for (const ConceptId& id : keep) {
    closure.insert(id);
    for (ConceptId& a : ancestors(m, id)) closure.insert(std::move(a));
  }
  for (const Concept& c : m.concepts()) {
    if (c.kind == ConceptKind::Phase) closure.insert(c.id);
  }
  return closure;
}

Metamodel select_subset(const Metamodel& m, const std::set<ConceptId>& keep, TailoringLog* log) {
  if (keep.empty()) throw Error(ErrorCode::EmptySelection, "no concepts selected");
  for (const ConceptId& id : keep) {
    if (!m.contains(id)) throw Error(ErrorCode::UnknownConcept, "unknown concept '" + id.str() + "'");
  }
  const std::set<ConceptId> closure = subset_closure(m, keep);

  Metamodel result(m.version() + "+subset");
  for (const Concept& c : m.concepts()) {
    if (closure.contains(c.id)) result.add_concept(c);
  }
  for (const Relationship& r : m.relationships()) {
    if (closure.contains(r.source) && closure.contains(r.target)) result.add_relationship(r);
  }
  require_valid(result, "subset selection");
  record(log, TailoringOp::Subset, m, result,
         "kept " + std::to_string(result.concepts().size()) + " of " +
             std::to_string(m.concepts().size()) + " concepts (" + std::to_string(keep.size()) +
             " selected)");
  return result;
}

Metamodel specialize(const Metamodel& m, const ConceptId& parent, Concept child,
                     TailoringLog* log) {
  const Concept* parent_concept = m.find(parent);
  if (parent_concept == nullptr) {
    throw Error(ErrorCode::UnknownConcept, "unknown concept '" + parent.str() + "'");
  }
  if (m.contains(child.id)) {
    throw Error(ErrorCode::IdCollision, "concept '" + child.id.str() + "' already exists");
  }
  if (parent_concept->kind == ConceptKind::Phase || child.kind != parent_concept->kind) {
    throw Error(ErrorCode::KindMismatch,
                "cannot specialize " + std::string(to_string(parent_concept->kind)) + " '" +
                    parent.str() + "' with " + std::string(to_string(child.kind)) + " '" +
                    child.id.str() + "'");
  }
  child.parent = parent;
  if (!child.phase) child.phase = parent_concept->phase;
  if (child.display_name.empty()) child.display_name = display_name_from_id(child.id.str());

  Metamodel result = m;
  result.set_version(m.version() + "+" + child.id.str());
  const std::string child_id = child.id.str();
  result.add_concept(std::move(child));
  require_valid(result, "specialization");
  record(log, TailoringOp::Specialize, m, result,
         "added " + child_id + " as a specialization of " + parent.str());
  return result;
}

MetamodelExtension extension_between(const Metamodel& base, const Metamodel& derived) {
  MetamodelExtension e;
  e.version = derived.version();
  e.base = base.version();
  for (const Concept& c : base.concepts()) {
    const Concept* d = derived.find(c.id);
    if (d == nullptr || !(*d == c)) {
      throw Error(ErrorCode::ExtensionConflict,
                  "concept '" + c.id.str() + "' was removed or changed");
    }
  }
  for (const Relationship& r : base.relationships()) {
    if (!derived.contains(r)) {
      throw Error(ErrorCode::ExtensionConflict, "relationship '" + describe(r) + "' was removed");
    }
  }
  for (const Concept& c : derived.concepts()) {
    if (!base.contains(c.id)) e.new_concepts.push_back(c);
  }
  for (const Relationship& r : derived.relationships()) {
    if (!base.contains(r)) e.new_relationships.push_back(r);
  }
  return e;
}

}  // namespace migmeta
