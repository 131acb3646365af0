#pragma once

#include <string>

#include "migmeta/conformance.hpp"
#include "migmeta/metamodel.hpp"
#include "migmeta/model.hpp"

namespace migmeta {

enum class RenderFormat { Dot, Csv, Checklist, Json };

struct RenderOptions {
  RenderFormat format = RenderFormat::Dot;
  bool include_definitions = false;
  bool phase_clusters = true;
};

/// Graphviz digraph. Uses edges are solid, Follows edges dashed, and
/// specialization edges point from child to parent with a hollow arrow.
/// With phase_clusters each phase becomes a `cluster_<Phase>` subgraph.
[[nodiscard]] std::string to_dot(const Metamodel& m, const RenderOptions& opts = {});
[[nodiscard]] std::string to_dot(const InstanceModel& model, const RenderOptions& opts = {});

/// Markdown checklist: one `# <Phase>` section per phase in chain order and
/// one `- [ ]` line per non-phase concept, specializations indented under
/// their parent.
[[nodiscard]] std::string to_checklist(const Metamodel& m, const RenderOptions& opts = {});

/// `<row_header>,<model...>` then one line per row; cells 1, 0 or NA.
/// Fields are quoted RFC 4180 style when needed.
[[nodiscard]] std::string coverage_to_csv(const CoverageMatrix& matrix);

/// Markdown table using √, × and - for the three cell states.
[[nodiscard]] std::string coverage_to_markdown(const CoverageMatrix& matrix);

}  // namespace migmeta
