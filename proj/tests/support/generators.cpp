#include "generators.hpp"

#include <set>

#include "migmeta/canonical.hpp"
#include "migmeta/identifier.hpp"
#include "migmeta/tailoring.hpp"

namespace migmeta::testkit {

namespace {

const std::string kUpper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
const std::string kAlnum = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

const std::vector<std::string> kMultiByte = {"é", "ü", "√", "×", "→", "日本", "😀"};

const std::vector<std::string> kTokens = {
    "model", "metamodel", "extends", "conforms", "activity", "instance-of", "note",
    "edge", "uses", "follows", "concept", "kind", "task", "phase", "principle",
    "work-product", "specializes", "doc", "rel", "{", "}", "\"", "\\", "#", "\n",
    " ", "Plan", "Design", "DesignCloudSolution", "x", "1.0", "final"};

}  // namespace

std::string random_identifier(Rng& rng, int max_tail) {
  std::string out(1, kUpper[static_cast<std::size_t>(rng.between(0, 25))]);
  const int tail = rng.between(0, max_tail);
  for (int i = 0; i < tail; ++i) {
    out.push_back(kAlnum[static_cast<std::size_t>(rng.between(0, 61))]);
  }
  return out;
}

std::string random_text(Rng& rng, int max_length) {
  std::string out;
  const int length = rng.between(0, max_length);
  for (int i = 0; i < length; ++i) {
    const int roll = rng.between(0, 99);
    if (roll < 70) {
      out.push_back(static_cast<char>(rng.between(32, 126)));
    } else if (roll < 78) {
      out.push_back('"');
    } else if (roll < 84) {
      out.push_back('\\');
    } else if (roll < 88) {
      out.push_back('\n');
    } else if (roll < 90) {
      out.push_back('\t');
    } else {
      out += rng.pick(kMultiByte);
    }
  }
  return out;
}

InstanceModel random_model(Rng& rng, const Metamodel& m, const ModelShape& shape) {
  std::vector<std::string> names;
  for (const Concept& c : m.concepts()) {
    names.push_back(c.id.str());
    if (shape.allow_aliases) {
      for (const std::string& alias : c.aliases) names.push_back(to_upper_camel(alias));
    }
  }
  const std::vector<std::string> versions = {"final", m.version(), "1.0"};
  InstanceModel model(random_text(rng, 12), rng.pick(versions));

  std::vector<ActivityId> ids;
  std::set<std::string> used;
  const int count = rng.between(0, shape.max_activities);
  for (int i = 0; i < count; ++i) {
    std::string id = random_identifier(rng, 8);
    if (!used.insert(id).second) continue;
    Activity a;
    a.id = ActivityId(id);
    if (!shape.conformant && rng.chance(0.1)) {
      a.instance_of = "Zz" + random_identifier(rng, 6);  // never a concept id
    } else {
      a.instance_of = rng.pick(names);
    }
    if (rng.chance(0.3)) a.note = random_text(rng);
    ids.push_back(a.id);
    model.add_activity(std::move(a));
  }

  if (ids.size() >= 2) {
    const int edges = rng.between(0, static_cast<int>(ids.size()) * 2);
    for (int i = 0; i < edges; ++i) {
      const ActivityId& src = rng.pick(ids);
      const ActivityId& dst = rng.pick(ids);
      if (src == dst) continue;
      model.add_edge({rng.chance(0.6) ? RelationshipKind::Uses : RelationshipKind::Follows, src,
                      dst});
    }
  }
  return model;
}

MetamodelExtension random_extension(Rng& rng, const Metamodel& base, int max_concepts,
                                    int max_relationships) {
  MetamodelExtension ext;
  ext.base = base.version();
  ext.version = base.version() + "+x" + std::to_string(rng.between(0, 99999));

  std::vector<ConceptId> phases;
  std::vector<const Concept*> candidates;  // possible parents and endpoints
  for (const Concept& c : base.concepts()) {
    if (c.kind == ConceptKind::Phase) {
      phases.push_back(c.id);
    } else {
      candidates.push_back(&c);
    }
  }

  const std::vector<ConceptKind> kinds = {ConceptKind::Task, ConceptKind::WorkProduct,
                                          ConceptKind::Principle};
  const int count = rng.between(0, max_concepts);
  for (int i = 0; i < count; ++i) {
    Concept c;
    c.id = ConceptId("New" + random_identifier(rng, 8));
    if (base.contains(c.id) ||
        std::any_of(ext.new_concepts.begin(), ext.new_concepts.end(),
                    [&](const Concept& other) { return other.id == c.id; })) {
      continue;
    }
    c.display_name = display_name_from_id(c.id.str());
    c.kind = rng.pick(kinds);
    if (!phases.empty()) c.phase = rng.pick(phases);
    c.definition = "generated concept " + std::to_string(i);
    if (rng.chance(0.5)) {
      std::vector<ConceptId> parents;
      for (const Concept* p : candidates) {
        if (p->kind == c.kind) parents.push_back(p->id);
      }
      for (const Concept& p : ext.new_concepts) {
        if (p.kind == c.kind) parents.push_back(p.id);
      }
      if (!parents.empty()) c.parent = rng.pick(parents);
    }
    ext.new_concepts.push_back(c);
  }

  std::vector<ConceptId> endpoints;
  for (const Concept* c : candidates) endpoints.push_back(c->id);
  for (const Concept& c : ext.new_concepts) endpoints.push_back(c.id);
  if (endpoints.size() >= 2) {
    const int rels = rng.between(0, max_relationships);
    for (int i = 0; i < rels; ++i) {
      Relationship r{rng.chance(0.7) ? RelationshipKind::Uses : RelationshipKind::Follows,
                     rng.pick(endpoints), rng.pick(endpoints)};
      if (r.source == r.target || base.contains(r) ||
          std::find(ext.new_relationships.begin(), ext.new_relationships.end(), r) !=
              ext.new_relationships.end()) {
        continue;
      }
      ext.new_relationships.push_back(r);
    }
  }
  return ext;
}

Metamodel random_base(Rng& rng) {
  const auto& names = builtin_version_names();
  Metamodel m = *builtin_version(names.at(static_cast<std::size_t>(
      rng.between(0, static_cast<int>(names.size()) - 1))));
  if (rng.chance(0.4)) m = apply_extension(m, random_extension(rng, m));
  return m;
}

std::string random_bytes(Rng& rng, std::size_t length, bool text_bias) {
  std::string out;
  out.reserve(length);
  while (out.size() < length) {
    if (text_bias && rng.chance(0.5)) {
      out += rng.pick(kTokens);
      out.push_back(' ');
    } else {
      out.push_back(static_cast<char>(rng.byte()));
    }
  }
  out.resize(length);
  return out;
}

std::string mutate(Rng& rng, const std::string& text, int edits) {
  std::string out = text;
  for (int i = 0; i < edits; ++i) {
    const std::size_t pos =
        out.empty() ? 0 : static_cast<std::size_t>(rng.between(0, static_cast<int>(out.size())));
    switch (rng.between(0, 3)) {
      case 0:
        if (pos < out.size()) out[pos] = static_cast<char>(rng.byte());
        break;
      case 1:
        out.insert(pos, 1, static_cast<char>(rng.byte()));
        break;
      case 2:
        if (pos < out.size()) out.erase(pos, static_cast<std::size_t>(rng.between(1, 8)));
        break;
      default:
        out.insert(pos, rng.pick(kTokens));
        break;
    }
  }
  return out;
}

}  // namespace migmeta::testkit
