#include "migmeta/json_io.hpp"

#include <json.hpp>

#include "migmeta/error.hpp"

namespace migmeta {
namespace {

using Json = nlohmann::ordered_json;

Json to_json(RelationshipKind kind, const std::string& source, const std::string& target) {
  Json j;
  j["kind"] = to_string(kind);
  j["source"] = source;
  j["target"] = target;
  return j;
}

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorCode::InvalidJson, message);
}

Json parse_document(std::string_view text, std::string_view expected_type) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    invalid(e.what());
  }
  if (!doc.is_object()) invalid("document is not a JSON object");
  if (doc.value("schema", "") != kJsonSchema) {
    invalid("expected schema '" + std::string(kJsonSchema) + "'");
  }
  if (doc.value("type", "") != expected_type) {
    invalid("expected a '" + std::string(expected_type) + "' document");
  }
  return doc;
}

const Json& member(const Json& object, const char* key, Json::value_t type) {
  const auto it = object.find(key);
  if (it == object.end() || it->type() != type) {
    invalid(std::string("missing or mistyped member '") + key + "'");
  }
  return *it;
}

RelationshipKind parse_kind(const Json& j) {
  const std::string kind = member(j, "kind", Json::value_t::string).get<std::string>();
  if (kind == "uses") return RelationshipKind::Uses;
  if (kind == "follows") return RelationshipKind::Follows;
  invalid("unknown relationship kind '" + kind + "'");
}

}  // namespace

std::string export_json(const Metamodel& m) {
  Json doc;
  doc["schema"] = kJsonSchema;
  doc["type"] = "metamodel";
  doc["version"] = m.version();

  Json phases = Json::array();
  auto chain = phase_chain(m);
  if (chain.empty()) {
    for (const Concept& c : m.concepts()) {
      if (c.kind == ConceptKind::Phase) chain.push_back(c.id);
    }
  }
  for (const ConceptId& p : chain) phases.push_back(p.str());
  doc["phases"] = std::move(phases);

  Json concepts = Json::object();
  for (const Concept& c : m.concepts()) {
    Json j;
    j["display_name"] = c.display_name;
    j["kind"] = to_string(c.kind);
    if (c.phase) j["phase"] = c.phase->str();
    if (c.parent) j["parent"] = c.parent->str();
    j["definition"] = c.definition;
    j["aliases"] = c.aliases;
    concepts[c.id.str()] = std::move(j);
  }
  doc["concepts"] = std::move(concepts);

  Json rels = Json::array();
  for (const Relationship& r : m.relationships()) {
    rels.push_back(to_json(r.kind, r.source.str(), r.target.str()));
  }
  doc["relationships"] = std::move(rels);
  return doc.dump(2) + "\n";
}

std::string export_json(const InstanceModel& model) {
  Json doc;
  doc["schema"] = kJsonSchema;
  doc["type"] = "model";
  doc["name"] = model.name();
  doc["conforms_to"] = model.conforms_to();

  Json activities = Json::object();
  for (const Activity& a : model.activities()) {
    Json j;
    j["instance_of"] = a.instance_of;
    if (a.note) j["note"] = *a.note;
    activities[a.id.str()] = std::move(j);
  }
  doc["activities"] = std::move(activities);

  Json edges = Json::array();
  for (const Edge& e : model.edges()) {
    edges.push_back(to_json(e.kind, e.source.str(), e.target.str()));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

InstanceModel import_model_json(std::string_view text) {
  const Json doc = parse_document(text, "model");
  InstanceModel model(member(doc, "name", Json::value_t::string).get<std::string>(),
                      member(doc, "conforms_to", Json::value_t::string).get<std::string>());

  for (const auto& [id, j] : member(doc, "activities", Json::value_t::object).items()) {
    if (!j.is_object()) invalid("activity '" + id + "' is not an object");
    Activity a{ActivityId{id}, member(j, "instance_of", Json::value_t::string).get<std::string>(),
               std::nullopt};
    if (j.contains("note")) a.note = member(j, "note", Json::value_t::string).get<std::string>();
    model.add_activity(std::move(a));
  }
  for (const Json& j : member(doc, "edges", Json::value_t::array)) {
    Edge e{parse_kind(j),
           ActivityId{member(j, "source", Json::value_t::string).get<std::string>()},
           ActivityId{member(j, "target", Json::value_t::string).get<std::string>()}};
    if (model.find(e.source) == nullptr || model.find(e.target) == nullptr) {
      invalid("edge '" + describe(e) + "' references an undeclared activity");
    }
    model.add_edge(std::move(e));
  }
  return model;
}

Metamodel import_metamodel_json(std::string_view text) {
  const Json doc = parse_document(text, "metamodel");
  Metamodel m(member(doc, "version", Json::value_t::string).get<std::string>());

  for (const auto& [id, j] : member(doc, "concepts", Json::value_t::object).items()) {
    if (!j.is_object()) invalid("concept '" + id + "' is not an object");
    Concept c;
    c.id = ConceptId{id};
    c.display_name = member(j, "display_name", Json::value_t::string).get<std::string>();
    const std::string kind = member(j, "kind", Json::value_t::string).get<std::string>();
    const auto parsed = parse_concept_kind(kind);
    if (!parsed) invalid("concept '" + id + "' has unknown kind '" + kind + "'");
    c.kind = *parsed;
    if (j.contains("phase")) {
      c.phase = ConceptId{member(j, "phase", Json::value_t::string).get<std::string>()};
    }
    if (j.contains("parent")) {
      c.parent = ConceptId{member(j, "parent", Json::value_t::string).get<std::string>()};
    }
    c.definition = member(j, "definition", Json::value_t::string).get<std::string>();
    for (const Json& alias : member(j, "aliases", Json::value_t::array)) {
      if (!alias.is_string()) invalid("concept '" + id + "' has a non-string alias");
      c.aliases.push_back(alias.get<std::string>());
    }
    m.add_concept(std::move(c));
  }
  for (const Json& j : member(doc, "relationships", Json::value_t::array)) {
    m.add_relationship(
        {parse_kind(j), ConceptId{member(j, "source", Json::value_t::string).get<std::string>()},
         ConceptId{member(j, "target", Json::value_t::string).get<std::string>()}});
  }
  return m;
}

}  // namespace migmeta
