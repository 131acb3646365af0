#include "migmeta/metamodel.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <unordered_set>

#include "migmeta/error.hpp"

namespace migmeta {

std::string_view to_string(ConceptKind kind) noexcept {
  switch (kind) {
    case ConceptKind::Task: return "task";
    case ConceptKind::WorkProduct: return "work-product";
    case ConceptKind::Principle: return "principle";
    case ConceptKind::Phase: return "phase";
  }
  return "task";
}

std::optional<ConceptKind> parse_concept_kind(std::string_view text) noexcept {
  if (text == "task") return ConceptKind::Task;
  if (text == "work-product") return ConceptKind::WorkProduct;
  if (text == "principle") return ConceptKind::Principle;
  if (text == "phase") return ConceptKind::Phase;
  return std::nullopt;
}

std::string_view to_string(RelationshipKind kind) noexcept {
  switch (kind) {
    case RelationshipKind::Uses: return "uses";
    case RelationshipKind::Follows: return "follows";
    case RelationshipKind::Specializes: return "specializes";
    case RelationshipKind::PartOf: return "part-of";
  }
  return "uses";
}

std::string describe(const Relationship& rel) {
  return rel.source.str() + " " + std::string(to_string(rel.kind)) + " " + rel.target.str();
}

std::string_view to_string(Severity severity) noexcept {
  return severity == Severity::Error ? "error" : "warning";
}

std::string_view to_string(DiagnosticCode code) noexcept {
  switch (code) {
    case DiagnosticCode::CycleInSpecialization: return "CYCLE_IN_SPECIALIZATION";
    case DiagnosticCode::DanglingReference: return "DANGLING_REFERENCE";
    case DiagnosticCode::PhaseChainBroken: return "PHASE_CHAIN_BROKEN";
    case DiagnosticCode::InvalidPhase: return "INVALID_PHASE";
    case DiagnosticCode::KindMismatch: return "KIND_MISMATCH";
    case DiagnosticCode::SelfRelationship: return "SELF_RELATIONSHIP";
    case DiagnosticCode::InvalidRelationship: return "INVALID_RELATIONSHIP";
    case DiagnosticCode::BadIdentifier: return "BAD_IDENTIFIER";
    case DiagnosticCode::EmptyDefinition: return "EMPTY_DEFINITION";
    case DiagnosticCode::DuplicateName: return "DUPLICATE_NAME";
  }
  return "DANGLING_REFERENCE";
}

std::string format(const Diagnostic& d) {
  return std::string(to_string(d.severity)) + " " + std::string(to_string(d.code)) + " [" +
         d.subject + "]: " + d.message;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool Metamodel::add_concept(Concept concept_value) {
  if (index_.contains(concept_value.id)) return false;
  index_.emplace(concept_value.id, concepts_.size());
  concepts_.push_back(std::move(concept_value));
  return true;
}

bool Metamodel::add_relationship(Relationship rel) {
  return relationships_.insert(std::move(rel)).second;
}

const Concept* Metamodel::find(const ConceptId& id) const noexcept {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &concepts_[it->second];
}

const Concept* Metamodel::resolve(std::string_view name) const noexcept {
  if (const Concept* c = find(ConceptId{std::string(name)})) return c;
  for (const Concept& c : concepts_) {
    for (const std::string& alias : c.aliases) {
      if (alias == name || to_upper_camel(alias) == name) return &c;
    }
  }
  return nullptr;
}

std::vector<ConceptId> Metamodel::children(const ConceptId& id) const {
  std::vector<ConceptId> out;
  for (const Concept& c : concepts_) {
    if (c.parent && *c.parent == id) out.push_back(c.id);
  }
  return out;
}

bool structurally_equal(const Metamodel& a, const Metamodel& b) {
  if (a.concepts().size() != b.concepts().size()) return false;
  if (a.relationships() != b.relationships()) return false;
  for (const Concept& ca : a.concepts()) {
    const Concept* cb = b.find(ca.id);
    if (cb == nullptr || ca.kind != cb->kind || ca.phase != cb->phase || ca.parent != cb->parent) {
      return false;
    }
  }
  return true;
}

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

bool is_blank(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void check_concept(const Metamodel& m, const Concept& c, std::vector<Diagnostic>& out) {
  const std::string& subject = c.id.str();
  if (!c.id.well_formed()) {
    out.push_back({Severity::Error, DiagnosticCode::BadIdentifier,
                   "concept id must match [A-Z][A-Za-z0-9]*", subject});
  }

  if (c.kind == ConceptKind::Phase) {
    if (c.phase) {
      out.push_back({Severity::Error, DiagnosticCode::InvalidPhase,
                     "phase concept must not belong to another phase", subject});
    }
    if (c.parent) {
      out.push_back({Severity::Error, DiagnosticCode::InvalidPhase,
                     "phase concept must not specialize another concept", subject});
    }
  } else if (!c.phase) {
    out.push_back({Severity::Error, DiagnosticCode::InvalidPhase,
                   "concept has no owning phase", subject});
  } else if (const Concept* phase = m.find(*c.phase); phase == nullptr) {
    out.push_back({Severity::Error, DiagnosticCode::DanglingReference,
                   "phase '" + c.phase->str() + "' is not registered", subject});
  } else if (phase->kind != ConceptKind::Phase) {
    out.push_back({Severity::Error, DiagnosticCode::InvalidPhase,
                   "'" + c.phase->str() + "' is not a phase concept", subject});
  }

  if (c.parent && c.kind != ConceptKind::Phase) {
    const Concept* parent = m.find(*c.parent);
    if (parent == nullptr) {
      out.push_back({Severity::Error, DiagnosticCode::DanglingReference,
                     "parent '" + c.parent->str() + "' is not registered", subject});
    } else if (parent->kind == ConceptKind::Phase || parent->kind != c.kind) {
      out.push_back({Severity::Error, DiagnosticCode::KindMismatch,
                     "parent '" + c.parent->str() + "' is a " +
                         std::string(to_string(parent->kind)) + ", child is a " +
                         std::string(to_string(c.kind)),
                     subject});
    }
  }

  if (is_blank(c.definition)) {
    out.push_back({Severity::Warning, DiagnosticCode::EmptyDefinition,
                   "definition is empty", subject});
  }
}

void check_cycles(const Metamodel& m, std::vector<Diagnostic>& out) {
  // 0 = unvisited, 1 = on the current path, 2 = done.
  std::unordered_map<ConceptId, int> state;
  for (const Concept& start : m.concepts()) {
    if (state[start.id] != 0) continue;
    std::vector<ConceptId> path;
    const Concept* cur = &start;
    while (cur != nullptr && state[cur->id] == 0) {
      state[cur->id] = 1;
      path.push_back(cur->id);
      cur = cur->parent ? m.find(*cur->parent) : nullptr;
    }
    if (cur != nullptr && state[cur->id] == 1) {
      const auto first = std::find(path.begin(), path.end(), cur->id);
      std::string members;
      for (auto it = first; it != path.end(); ++it) {
        members += (members.empty() ? "" : " -> ") + it->str();
      }
      members += " -> " + cur->id.str();
      out.push_back({Severity::Error, DiagnosticCode::CycleInSpecialization,
                     "specialization cycle: " + members, cur->id.str()});
    }
    for (const ConceptId& id : path) state[id] = 2;
  }
}

void check_relationships(const Metamodel& m, std::vector<Diagnostic>& out) {
  for (const Relationship& rel : m.relationships()) {
    const std::string subject = describe(rel);
    if (rel.kind != RelationshipKind::Uses && rel.kind != RelationshipKind::Follows) {
      out.push_back({Severity::Error, DiagnosticCode::InvalidRelationship,
                     "only uses and follows are stored as relationship records", subject});
    }
    if (rel.source == rel.target) {
      out.push_back({Severity::Error, DiagnosticCode::SelfRelationship,
                     "relationship source and target are the same concept", subject});
    }
    const Concept* src = m.find(rel.source);
    const Concept* dst = m.find(rel.target);
    if (src == nullptr) {
      out.push_back({Severity::Error, DiagnosticCode::DanglingReference,
                     "source '" + rel.source.str() + "' is not registered", subject});
    }
    if (dst == nullptr) {
      out.push_back({Severity::Error, DiagnosticCode::DanglingReference,
                     "target '" + rel.target.str() + "' is not registered", subject});
    }
    if (src != nullptr && dst != nullptr && rel.kind == RelationshipKind::Follows &&
        (src->kind == ConceptKind::Phase) != (dst->kind == ConceptKind::Phase)) {
      out.push_back({Severity::Error, DiagnosticCode::InvalidRelationship,
                     "follows must connect two phases or two non-phase concepts", subject});
    }
  }
}

bool is_phase(const Metamodel& m, const ConceptId& id) {
  const Concept* c = m.find(id);
  return c != nullptr && c->kind == ConceptKind::Phase;
}

}  // namespace

std::vector<ConceptId> phase_chain(const Metamodel& m) {
  std::vector<ConceptId> phases;
  for (const Concept& c : m.concepts()) {
    if (c.kind == ConceptKind::Phase) phases.push_back(c.id);
  }
  if (phases.empty()) return {};

  std::map<ConceptId, ConceptId> next;
  std::map<ConceptId, int> indegree;
  for (const Relationship& rel : m.relationships()) {
    if (rel.kind != RelationshipKind::Follows || !is_phase(m, rel.source) ||
        !is_phase(m, rel.target)) {
      continue;
    }
    if (next.contains(rel.source)) return {};
    next.emplace(rel.source, rel.target);
    if (++indegree[rel.target] > 1) return {};
  }
  if (next.size() + 1 != phases.size()) return {};

  std::vector<ConceptId> heads;
  for (const ConceptId& p : phases) {
    if (indegree[p] == 0) heads.push_back(p);
  }
  if (heads.size() != 1) return {};

  std::vector<ConceptId> chain{heads.front()};
  while (chain.size() <= phases.size()) {
    const auto it = next.find(chain.back());
    if (it == next.end()) break;
    chain.push_back(it->second);
  }
  if (chain.size() != phases.size()) return {};
  return chain;
}

std::vector<Diagnostic> validate_metamodel(const Metamodel& m) {
  std::vector<Diagnostic> out;
  for (const Concept& c : m.concepts()) check_concept(m, c, out);
  check_cycles(m, out);
  check_relationships(m, out);

  bool any_phase = std::any_of(m.concepts().begin(), m.concepts().end(),
                               [](const Concept& c) { return c.kind == ConceptKind::Phase; });
  if (any_phase && phase_chain(m).empty()) {
    out.push_back({Severity::Error, DiagnosticCode::PhaseChainBroken,
                   "phase follows edges do not form a single linear chain", "phases"});
  }

  std::map<std::string, ConceptId> seen_names;
  for (const Concept& c : m.concepts()) {
    const auto [it, inserted] = seen_names.emplace(lower(c.display_name), c.id);
    if (!inserted) {
      out.push_back({Severity::Warning, DiagnosticCode::DuplicateName,
                     "display name '" + c.display_name + "' already used by " + it->second.str(),
                     c.id.str()});
    }
  }
  return out;
}

std::vector<ConceptId> ancestors(const Metamodel& m, const ConceptId& id) {
  const Concept* c = m.find(id);
  if (c == nullptr) {
    throw Error(ErrorCode::UnknownConcept, "unknown concept '" + id.str() + "'");
  }
  std::vector<ConceptId> chain;
  std::unordered_set<ConceptId> seen{id};
  while (c->parent) {
    if (!seen.insert(*c->parent).second) break;
    chain.push_back(*c->parent);
    c = m.find(*c->parent);
    if (c == nullptr) break;
  }
  return chain;
}

bool is_instance_compatible(const Metamodel& m, const ConceptId& child,
                            const ConceptId& ancestor) {
  if (!m.contains(ancestor)) {
    throw Error(ErrorCode::UnknownConcept, "unknown concept '" + ancestor.str() + "'");
  }
  if (child == ancestor) {
    (void)ancestors(m, child);  // still reject an unknown child
    return true;
  }
  const auto chain = ancestors(m, child);
  return std::find(chain.begin(), chain.end(), ancestor) != chain.end();
}

bool relationship_exists(const Metamodel& m, RelationshipKind kind, const ConceptId& source,
                         const ConceptId& target, bool lift_to_ancestors) {
  auto sources = ancestors(m, source);
  auto targets = ancestors(m, target);
  if (!lift_to_ancestors) {
    return m.contains(Relationship{kind, source, target});
  }
  sources.insert(sources.begin(), source);
  targets.insert(targets.begin(), target);
  for (const ConceptId& s : sources) {
    for (const ConceptId& t : targets) {
      if (m.contains(Relationship{kind, s, t})) return true;
    }
  }
  return false;
}

std::optional<ConceptId> owning_phase(const Metamodel& m, const ConceptId& id) {
  const Concept* c = m.find(id);
  if (c == nullptr) return std::nullopt;
  if (c->kind == ConceptKind::Phase) return c->id;
  return c->phase;
}

}  // namespace migmeta
