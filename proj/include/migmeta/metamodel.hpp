#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "migmeta/identifier.hpp"

namespace migmeta {

enum class ConceptKind { Task, WorkProduct, Principle, Phase };

[[nodiscard]] std::string_view to_string(ConceptKind kind) noexcept;
/// Accepts the DSL spellings: task, work-product, principle, phase.
[[nodiscard]] std::optional<ConceptKind> parse_concept_kind(std::string_view text) noexcept;

struct Concept {
  ConceptId id;
  std::string display_name;
  ConceptKind kind = ConceptKind::Task;
  std::optional<ConceptId> phase;   // absent only for phase concepts
  std::optional<ConceptId> parent;  // specialization target
  std::string definition;
  std::vector<std::string> aliases;

  friend bool operator==(const Concept&, const Concept&) = default;
};

/// Specializes and PartOf are carried structurally by Concept::parent and
/// Concept::phase; explicit Relationship records are Uses or Follows only.
enum class RelationshipKind { Uses, Follows, Specializes, PartOf };

[[nodiscard]] std::string_view to_string(RelationshipKind kind) noexcept;

/// `Follows(a, b)` reads "a, then b".
struct Relationship {
  RelationshipKind kind = RelationshipKind::Uses;
  ConceptId source;
  ConceptId target;

  friend auto operator<=>(const Relationship&, const Relationship&) = default;
  friend bool operator==(const Relationship&, const Relationship&) = default;
};

[[nodiscard]] std::string describe(const Relationship& rel);

enum class Severity { Error, Warning };

[[nodiscard]] std::string_view to_string(Severity severity) noexcept;

/// Closed set of metamodel diagnostic codes.
///
///   CYCLE_IN_SPECIALIZATION  parent links loop back           (Error)
///   DANGLING_REFERENCE       phase/parent/relationship target missing (Error)
///   PHASE_CHAIN_BROKEN       phase Follows edges not one linear chain (Error)
///   INVALID_PHASE            phase field missing, misplaced or not a phase (Error)
///   KIND_MISMATCH            parent of a different kind, or a phase (Error)
///   SELF_RELATIONSHIP        relationship with source == target    (Error)
///   INVALID_RELATIONSHIP     explicit Specializes/PartOf record     (Error)
///   BAD_IDENTIFIER           id not UpperCamel                      (Error)
///   EMPTY_DEFINITION         blank definition                       (Warning)
///   DUPLICATE_NAME           display names equal ignoring case      (Warning)
enum class DiagnosticCode {
  CycleInSpecialization,
  DanglingReference,
  PhaseChainBroken,
  InvalidPhase,
  KindMismatch,
  SelfRelationship,
  InvalidRelationship,
  BadIdentifier,
  EmptyDefinition,
  DuplicateName,
};

[[nodiscard]] std::string_view to_string(DiagnosticCode code) noexcept;

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagnosticCode code = DiagnosticCode::DanglingReference;
  std::string message;
  std::string subject;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

[[nodiscard]] std::string format(const Diagnostic& diagnostic);
[[nodiscard]] bool has_errors(const std::vector<Diagnostic>& diagnostics) noexcept;

/// Versioned registry of concepts and relationships.
///
/// Concepts keep their registration order, which drives every rendered
/// output. The class does not enforce well-formedness on insertion; run
/// validate_metamodel() for that. Values are treated as immutable once
/// built: tailoring operations copy and return new metamodels.
class Metamodel {
 public:
  Metamodel() = default;
  explicit Metamodel(std::string version) : version_(std::move(version)) {}

  [[nodiscard]] const std::string& version() const noexcept { return version_; }
  void set_version(std::string version) { version_ = std::move(version); }

  /// Returns false if a concept with the same id is already registered.
  bool add_concept(Concept concept_value);
  /// Returns false if the relationship is already present.
  bool add_relationship(Relationship rel);

  [[nodiscard]] const std::vector<Concept>& concepts() const noexcept { return concepts_; }
  [[nodiscard]] const std::set<Relationship>& relationships() const noexcept {
    return relationships_;
  }

  [[nodiscard]] const Concept* find(const ConceptId& id) const noexcept;
  [[nodiscard]] bool contains(const ConceptId& id) const noexcept { return find(id) != nullptr; }
  [[nodiscard]] bool contains(const Relationship& rel) const noexcept {
    return relationships_.contains(rel);
  }

  /// Looks up by id, then by alias. Aliases match either verbatim or in
  /// their UpperCamel form, so "ChooseCloudProvider" finds the concept
  /// aliased "Choose cloud provider".
  [[nodiscard]] const Concept* resolve(std::string_view name) const noexcept;

  /// Direct specializations of `id`, in registration order.
  [[nodiscard]] std::vector<ConceptId> children(const ConceptId& id) const;

 private:
  std::string version_;
  std::vector<Concept> concepts_;
  std::unordered_map<ConceptId, std::size_t> index_;
  std::set<Relationship> relationships_;
};

/// Same concept ids with equal kind, phase and parent, and the same
/// relationship set. Version, prose, aliases and registration order are
/// ignored.
[[nodiscard]] bool structurally_equal(const Metamodel& a, const Metamodel& b);

/// Returns every invariant violation; an empty list means well-formed.
[[nodiscard]] std::vector<Diagnostic> validate_metamodel(const Metamodel& m);

/// Parent chain from the immediate parent up to the root. Throws
/// Error(UnknownConcept) if `id` is not registered. Stops at the first
/// repeated concept, so a cyclic metamodel cannot hang it.
[[nodiscard]] std::vector<ConceptId> ancestors(const Metamodel& m, const ConceptId& id);

/// Reflexive-transitive specialization test.
[[nodiscard]] bool is_instance_compatible(const Metamodel& m, const ConceptId& child,
                                          const ConceptId& ancestor);

[[nodiscard]] bool relationship_exists(const Metamodel& m, RelationshipKind kind,
                                       const ConceptId& source, const ConceptId& target,
                                       bool lift_to_ancestors);

/// Phase concepts ordered along the Follows chain. Returns an empty list
/// when the chain is not a single linear path covering every phase.
[[nodiscard]] std::vector<ConceptId> phase_chain(const Metamodel& m);

/// Owning phase of a concept; a phase concept owns itself.
[[nodiscard]] std::optional<ConceptId> owning_phase(const Metamodel& m, const ConceptId& id);

}  // namespace migmeta
