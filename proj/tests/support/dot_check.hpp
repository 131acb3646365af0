#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace migmeta::testkit {

struct DotSummary {
  std::string graph_name;
  std::set<std::string> nodes;     // declared with a node statement
  std::set<std::string> clusters;  // subgraph names
  std::size_t edges = 0;
};

/// Parses the DOT subset graphviz accepts for a single digraph: graph,
/// node and edge attribute statements, `a=b` statements, node statements,
/// `->` edge chains and nested subgraphs. Every edge endpoint must be a
/// declared node. Returns the error text on failure.
[[nodiscard]] std::optional<std::string> check_dot(std::string_view text,
                                                   DotSummary* summary = nullptr);

}  // namespace migmeta::testkit
