#include "migmeta/model.hpp"

#include <algorithm>

namespace migmeta {

std::string describe(const Edge& edge) {
  return edge.source.str() + " " + std::string(to_string(edge.kind)) + " " + edge.target.str();
}

bool InstanceModel::add_activity(Activity activity) {
  if (find(activity.id) != nullptr) return false;
  activities_.push_back(std::move(activity));
  return true;
}

bool InstanceModel::add_edge(Edge edge) { return edges_.insert(std::move(edge)).second; }

bool InstanceModel::remove_activity(const ActivityId& id) {
  const auto it = std::find_if(activities_.begin(), activities_.end(),
                               [&](const Activity& a) { return a.id == id; });
  if (it == activities_.end()) return false;
  activities_.erase(it);
  std::erase_if(edges_, [&](const Edge& e) { return e.source == id || e.target == id; });
  return true;
}

const Activity* InstanceModel::find(const ActivityId& id) const noexcept {
  const auto it = std::find_if(activities_.begin(), activities_.end(),
                               [&](const Activity& a) { return a.id == id; });
  return it == activities_.end() ? nullptr : &*it;
}

bool operator==(const MetamodelExtension& a, const MetamodelExtension& b) {
  if (a.version != b.version || a.base != b.base || a.new_concepts != b.new_concepts) {
    return false;
  }
  auto ra = a.new_relationships;
  auto rb = b.new_relationships;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

}  // namespace migmeta
