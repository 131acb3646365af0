#pragma once

// JSON interchange, schema "migmeta-json/1".
//
// Metamodel document:
//   { "schema": "migmeta-json/1", "type": "metamodel", "version": "...",
//     "phases": [ phase ids in chain order ],
//     "concepts": { "<id>": { "display_name", "kind", "phase"?, "parent"?,
//                             "definition", "aliases": [...] }, ... },
//     "relationships": [ { "kind": "uses"|"follows", "source", "target" }, ... ] }
//
// Instance model document:
//   { "schema": "migmeta-json/1", "type": "model", "name": "...", "conforms_to": "...",
//     "activities": { "<id>": { "instance_of", "note"? }, ... },
//     "edges": [ { "kind", "source", "target" }, ... ] }
//
// Object keys appear in a fixed order; concepts and activities keep their
// registration/declaration order; relationship and edge arrays are sorted.

#include <string>
#include <string_view>

#include "migmeta/metamodel.hpp"
#include "migmeta/model.hpp"

namespace migmeta {

inline constexpr std::string_view kJsonSchema = "migmeta-json/1";

[[nodiscard]] std::string export_json(const Metamodel& m);
[[nodiscard]] std::string export_json(const InstanceModel& model);

/// Throw Error(InvalidJson) on malformed input or a schema mismatch.
[[nodiscard]] InstanceModel import_model_json(std::string_view text);
[[nodiscard]] Metamodel import_metamodel_json(std::string_view text);

}  // namespace migmeta
