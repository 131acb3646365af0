#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "migmeta/metamodel.hpp"
#include "migmeta/model.hpp"

namespace migmeta {

enum class TailoringOp { Extend, Specialize, Subset };

[[nodiscard]] std::string_view to_string(TailoringOp op) noexcept;

struct TailoringLogEntry {
  TailoringOp operation = TailoringOp::Extend;
  std::string from_version;
  std::string to_version;
  std::string summary;
};

/// Renders `<op> <from> -> <to>: <summary>`.
[[nodiscard]] std::string format(const TailoringLogEntry& entry);

/// Append-only record of tailoring steps.
class TailoringLog {
 public:
  void append(TailoringLogEntry entry);
  [[nodiscard]] const std::vector<TailoringLogEntry>& entries() const noexcept {
    return entries_;
  }

 private:
  std::vector<TailoringLogEntry> entries_;
};

/// Adds the extension's concepts and relationships to a copy of `m`
/// without validating the result. Throws BaseMismatch when the extension
/// does not extend `m`'s version, ExtensionConflict on an id or
/// relationship that already exists or a version that does not change.
[[nodiscard]] Metamodel merge_extension(const Metamodel& m, const MetamodelExtension& e);

/// merge_extension, then validation: any Error diagnostic raises
/// InvalidResult carrying the diagnostics.
[[nodiscard]] Metamodel apply_extension(const Metamodel& m, const MetamodelExtension& e,
                                        TailoringLog* log = nullptr);

/// Keeps `keep`, every ancestor of a kept concept, and all phases; drops
/// relationships that lose an endpoint. Version becomes `<m.version>+subset`.
[[nodiscard]] Metamodel select_subset(const Metamodel& m, const std::set<ConceptId>& keep,
                                      TailoringLog* log = nullptr);

/// The closure select_subset keeps for `keep`.
[[nodiscard]] std::set<ConceptId> subset_closure(const Metamodel& m,
                                                 const std::set<ConceptId>& keep);

/// Registers `child` as a specialization of `parent`. A child without a
/// phase inherits the parent's. Version becomes `<m.version>+<child id>`.
[[nodiscard]] Metamodel specialize(const Metamodel& m, const ConceptId& parent, Concept child,
                                   TailoringLog* log = nullptr);

/// The additive delta that turns `base` into `derived`, when one exists.
/// Throws ExtensionConflict if `derived` removes or changes base elements.
[[nodiscard]] MetamodelExtension extension_between(const Metamodel& base,
                                                   const Metamodel& derived);

}  // namespace migmeta
