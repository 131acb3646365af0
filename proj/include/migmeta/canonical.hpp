#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "migmeta/metamodel.hpp"

namespace migmeta {

/// The published cloud-migration metamodel, version "final".
[[nodiscard]] Metamodel build_canonical();

/// The first published version: the final metamodel without UseLogging,
/// ResolveLicensingIssues and DefineRollBackPlan.
[[nodiscard]] Metamodel build_version_1_0();

/// Ids of the 25 concepts in the key-concept table, in table order.
[[nodiscard]] const std::vector<ConceptId>& key_concept_ids();

/// Ids of the concepts that come from the case narratives rather than the
/// key-concept table.
[[nodiscard]] const std::vector<ConceptId>& supplementary_concept_ids();

/// Built-in metamodel versions by name. Accepts "final", "1.0", and the
/// intermediate versions produced by replaying the bundled evolution
/// extensions ("1.1", "1.1+licensing").
[[nodiscard]] std::optional<Metamodel> builtin_version(std::string_view version);

[[nodiscard]] const std::vector<std::string_view>& builtin_version_names();

}  // namespace migmeta
