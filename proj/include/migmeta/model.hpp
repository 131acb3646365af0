#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "migmeta/metamodel.hpp"

namespace migmeta {

/// One step of a situation-specific migration process. `instance_of` is a
/// concept id or alias; it is resolved against a metamodel only during
/// conformance checking.
struct Activity {
  ActivityId id;
  std::string instance_of;
  std::optional<std::string> note;

  friend bool operator==(const Activity&, const Activity&) = default;
};

/// `kind` is Uses or Follows; `Follows(a, b)` reads "a, then b".
struct Edge {
  RelationshipKind kind = RelationshipKind::Uses;
  ActivityId source;
  ActivityId target;

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

[[nodiscard]] std::string describe(const Edge& edge);

class InstanceModel {
 public:
  InstanceModel() = default;
  InstanceModel(std::string name, std::string conforms_to)
      : name_(std::move(name)), conforms_to_(std::move(conforms_to)) {}

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::string& conforms_to() const noexcept { return conforms_to_; }

  /// Declaration order is preserved. Returns false on a duplicate id.
  bool add_activity(Activity activity);
  /// Returns false if the edge is already present.
  bool add_edge(Edge edge);
  bool remove_activity(const ActivityId& id);

  [[nodiscard]] const std::vector<Activity>& activities() const noexcept { return activities_; }
  [[nodiscard]] const std::set<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const Activity* find(const ActivityId& id) const noexcept;

  friend bool operator==(const InstanceModel&, const InstanceModel&) = default;

 private:
  std::string name_;
  std::string conforms_to_;
  std::vector<Activity> activities_;
  std::set<Edge> edges_;
};

/// Additive delta over a base metamodel version.
struct MetamodelExtension {
  std::string version;
  std::string base;
  std::vector<Concept> new_concepts;
  std::vector<Relationship> new_relationships;
};

/// Ignores relationship order.
[[nodiscard]] bool operator==(const MetamodelExtension& a, const MetamodelExtension& b);

}  // namespace migmeta
