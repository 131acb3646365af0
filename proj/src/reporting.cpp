#include "migmeta/reporting.hpp"

#include <set>

namespace migmeta {
namespace {

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

std::string edge_attributes(RelationshipKind kind) {
  switch (kind) {
    case RelationshipKind::Uses: return "[label=\"uses\", style=solid]";
    case RelationshipKind::Follows: return "[label=\"follows\", style=dashed]";
    case RelationshipKind::Specializes: return "[arrowhead=empty, style=solid]";
    case RelationshipKind::PartOf: return "[arrowhead=odiamond, style=dotted]";
  }
  return "";
}

std::string concept_node(const Concept& c, const RenderOptions& opts, std::string_view indent) {
  std::string out = std::string(indent) + dot_quote(c.id.str()) + " [label=" +
                    dot_quote(c.display_name);
  switch (c.kind) {
    case ConceptKind::Phase: out += ", shape=tab"; break;
    case ConceptKind::WorkProduct: out += ", shape=note"; break;
    case ConceptKind::Principle: out += ", shape=box, style=rounded"; break;
    case ConceptKind::Task: out += ", shape=box"; break;
  }
  if (opts.include_definitions && !c.definition.empty()) {
    out += ", tooltip=" + dot_quote(c.definition);
  }
  return out + "];\n";
}

std::vector<ConceptId> phases_in_order(const Metamodel& m) {
  auto chain = phase_chain(m);
  if (!chain.empty()) return chain;
  for (const Concept& c : m.concepts()) {
    if (c.kind == ConceptKind::Phase) chain.push_back(c.id);
  }
  return chain;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Metamodel& m, const RenderOptions& opts) {
  std::string out = "digraph " + dot_quote("metamodel " + m.version()) + " {\n";
  out += "  rankdir=TB;\n  node [fontname=\"Helvetica\"];\n";

  std::set<ConceptId> placed;
  if (opts.phase_clusters) {
    for (const ConceptId& phase : phases_in_order(m)) {
      out += "  subgraph " + dot_quote("cluster_" + phase.str()) + " {\n";
      out += "    label=" + dot_quote(phase.str()) + ";\n";
      for (const Concept& c : m.concepts()) {
        if (c.id == phase || (c.phase && *c.phase == phase)) {
          out += concept_node(c, opts, "    ");
          placed.insert(c.id);
        }
      }
      out += "  }\n";
    }
  }
  for (const Concept& c : m.concepts()) {
    if (!placed.contains(c.id)) out += concept_node(c, opts, "  ");
  }

  for (const Concept& c : m.concepts()) {
    if (c.parent) {
      out += "  " + dot_quote(c.id.str()) + " -> " + dot_quote(c.parent->str()) + " " +
             edge_attributes(RelationshipKind::Specializes) + ";\n";
    }
  }
  for (const Relationship& r : m.relationships()) {
    out += "  " + dot_quote(r.source.str()) + " -> " + dot_quote(r.target.str()) + " " +
           edge_attributes(r.kind) + ";\n";
  }
  return out + "}\n";
}

std::string to_dot(const InstanceModel& model, const RenderOptions& opts) {
  std::string out = "digraph " + dot_quote("model " + model.name()) + " {\n";
  out += "  rankdir=TB;\n  node [fontname=\"Helvetica\", shape=box];\n";
  for (const Activity& a : model.activities()) {
    out += "  " + dot_quote(a.id.str()) + " [label=" +
           dot_quote(a.id.str() + "\n: " + a.instance_of);
    if (opts.include_definitions && a.note) out += ", tooltip=" + dot_quote(*a.note);
    out += "];\n";
  }
  for (const Edge& e : model.edges()) {
    out += "  " + dot_quote(e.source.str()) + " -> " + dot_quote(e.target.str()) + " " +
           edge_attributes(e.kind) + ";\n";
  }
  return out + "}\n";
}

std::string to_checklist(const Metamodel& m, const RenderOptions& opts) {
  std::string out;
  std::set<ConceptId> listed;

  const auto emit = [&](const auto& self, const Concept& c, int depth) -> void {
    if (!listed.insert(c.id).second) return;
    const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
    out += indent + "- [ ] " + c.display_name + "\n";
    if (opts.include_definitions && !c.definition.empty()) {
      out += indent + "      " + c.definition + "\n";
    }
    for (const ConceptId& child : m.children(c.id)) {
      if (const Concept* cc = m.find(child)) self(self, *cc, depth + 1);
    }
  };

  bool first = true;
  for (const ConceptId& phase : phases_in_order(m)) {
    const Concept* phase_concept = m.find(phase);
    out += std::string(first ? "" : "\n") + "# " + phase_concept->display_name + "\n\n";
    first = false;
    for (const Concept& c : m.concepts()) {
      const bool root = !c.parent || !m.contains(*c.parent);
      if (c.kind != ConceptKind::Phase && root && c.phase && *c.phase == phase) {
        emit(emit, c, 0);
      }
    }
  }
  return out;
}

std::string coverage_to_csv(const CoverageMatrix& matrix) {
  std::string out = csv_field(matrix.row_header);
  for (const std::string& col : matrix.columns) out += "," + csv_field(col);
  out += "\n";
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out += csv_field(matrix.rows[r]);
    for (std::size_t c = 0; c < matrix.columns.size(); ++c) {
      switch (matrix.at(r, c)) {
        case Cell::Yes: out += ",1"; break;
        case Cell::No: out += ",0"; break;
        case Cell::NotApplicable: out += ",NA"; break;
      }
    }
    out += "\n";
  }
  return out;
}

std::string coverage_to_markdown(const CoverageMatrix& matrix) {
  const auto escape = [](const std::string& text) {
    std::string out;
    for (char c : text) {
      if (c == '|') out += "\\";
      out.push_back(c);
    }
    return out;
  };
  std::string out = "| " + escape(matrix.row_header) + " |";
  std::string rule = "|---|";
  for (const std::string& col : matrix.columns) {
    out += " " + escape(col) + " |";
    rule += ":---:|";
  }
  out += "\n" + rule + "\n";
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out += "| " + escape(matrix.rows[r]) + " |";
    for (std::size_t c = 0; c < matrix.columns.size(); ++c) {
      switch (matrix.at(r, c)) {
        case Cell::Yes: out += " √ |"; break;
        case Cell::No: out += " × |"; break;
        case Cell::NotApplicable: out += " - |"; break;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace migmeta
