#include <gtest/gtest.h>

#include "migmeta/canonical.hpp"
#include "migmeta/dsl.hpp"
#include "migmeta/embedded.hpp"
#include "migmeta/error.hpp"
#include "migmeta/tailoring.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace migmeta;

namespace {

MetamodelExtension extension(std::string_view name) {
  return *parse_extension(*embedded::find_extension(name)).value;
}

MetamodelExtension parse(std::string_view text) {
  auto r = parse_extension(text);
  EXPECT_TRUE(r.ok());
  return *r.value;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidJson;
}

Concept child(const std::string& id, ConceptKind kind) {
  Concept c;
  c.id = ConceptId(id);
  c.kind = kind;
  c.definition = "test";
  return c;
}

}  // namespace

TEST(Extend, UseLoggingOverVersion10) {
  TailoringLog log;
  const Metamodel m = apply_extension(build_version_1_0(), extension("use-logging"), &log);
  EXPECT_EQ(m.version(), "1.1");
  EXPECT_EQ(m.find(ConceptId("UseLogging"))->parent, ConceptId("ApplyDesignPrinciples"));
  ASSERT_EQ(log.entries().size(), 1u);
  EXPECT_EQ(format(log.entries()[0]),
            "extend 1.0 -> 1.1: added 1 concept(s) (UseLogging) and 0 relationship(s)");
}

TEST(Extend, ReplayReachesCanonical) {
  Metamodel m = build_version_1_0();
  for (const embedded::File& f : embedded::evolution_extensions()) {
    m = apply_extension(m, extension(f.name));
  }
  EXPECT_TRUE(structurally_equal(m, build_canonical()));
  EXPECT_EQ(m.version(), "final");
}

TEST(Extend, EmptyExtensionOnlyChangesVersion) {
  const Metamodel base = build_canonical();
  const Metamodel m = apply_extension(base, parse(R"(metamodel "x" extends "final" { })"));
  EXPECT_EQ(m.version(), "x");
  EXPECT_TRUE(structurally_equal(m, base));
  EXPECT_EQ(m.concepts(), base.concepts());
}

TEST(Extend, Errors) {
  const Metamodel base = build_canonical();
  EXPECT_EQ(code_of([&] { (void)apply_extension(base, extension("use-logging")); }),
            ErrorCode::BaseMismatch);
  EXPECT_EQ(code_of([&] {
              (void)apply_extension(
                  base, parse(R"(metamodel "x" extends "final" { concept Plan kind phase })"));
            }),
            ErrorCode::ExtensionConflict);
  EXPECT_EQ(code_of([&] {
              (void)apply_extension(base, parse(R"(metamodel "final" extends "final" { })"));
            }),
            ErrorCode::ExtensionConflict);
  EXPECT_EQ(code_of([&] {
              (void)apply_extension(
                  base, parse(R"(metamodel "x" extends "final" { rel Plan follows Design })"));
            }),
            ErrorCode::ExtensionConflict);
  // missing phase makes the result invalid
  try {
    (void)apply_extension(base, parse(R"(metamodel "x" extends "final" { concept A kind task })"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidResult);
    EXPECT_FALSE(e.diagnostics().empty());
  }
}

TEST(Extend, DisjointExtensionsCommute) {
  testkit::Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Metamodel base = testkit::random_base(rng);
    MetamodelExtension e1 = testkit::random_extension(rng, base);
    MetamodelExtension e2 = testkit::random_extension(rng, base);
    // keep them disjoint and self-contained
    for (Concept& c : e2.new_concepts) c.id = ConceptId("Second" + c.id.str());
    e2.new_relationships.clear();
    for (Concept& c : e2.new_concepts) {
      if (c.parent && !base.contains(*c.parent)) c.parent.reset();
    }
    const Metamodel a1 = apply_extension(base, e1);
    e2.base = a1.version();
    e2.version = a1.version() + "+2";
    const Metamodel ab = apply_extension(a1, e2);

    MetamodelExtension f2 = e2;
    f2.base = base.version();
    f2.version = base.version() + "+2";
    const Metamodel b1 = apply_extension(base, f2);
    MetamodelExtension f1 = e1;
    f1.base = b1.version();
    f1.version = b1.version() + "+1";
    EXPECT_TRUE(structurally_equal(ab, apply_extension(b1, f1)));
  }
}

TEST(Subset, KeepsRelationshipBetweenSelected) {
  const Metamodel m = build_canonical();
  const Metamodel s = select_subset(
      m, {ConceptId("DesignCloudSolution"), ConceptId("IdentifyIncompatibilities")});
  EXPECT_TRUE(s.contains(Relationship{RelationshipKind::Uses, ConceptId("DesignCloudSolution"),
                                      ConceptId("IdentifyIncompatibilities")}));
  EXPECT_EQ(s.version(), "final+subset");
  EXPECT_FALSE(has_errors(validate_metamodel(s)));
}

TEST(Subset, FullSelectionIsIdentity) {
  const Metamodel m = build_canonical();
  std::set<ConceptId> all;
  for (const Concept& c : m.concepts()) all.insert(c.id);
  EXPECT_TRUE(structurally_equal(select_subset(m, all), m));
}

TEST(Subset, ClosureMatchesOracle) {
  const Metamodel m = build_canonical();
  const auto reach = testkit::oracle_reachability(m);
  for (const Concept& c : m.concepts()) {
    const Metamodel s = select_subset(m, {c.id});
    std::set<std::string> expected = reach.at(c.id.str());
    for (const Concept& p : m.concepts()) {
      if (p.kind == ConceptKind::Phase) expected.insert(p.id.str());
    }
    std::set<std::string> actual;
    for (const Concept& k : s.concepts()) actual.insert(k.id.str());
    EXPECT_EQ(actual, expected) << c.id.str();
  }
  EXPECT_TRUE(select_subset(m, {ConceptId("UseLogging")}).contains(ConceptId("ApplyDesignPrinciples")));
}

TEST(Subset, Errors) {
  const Metamodel m = build_canonical();
  EXPECT_EQ(code_of([&] { (void)select_subset(m, {}); }), ErrorCode::EmptySelection);
  EXPECT_EQ(code_of([&] { (void)select_subset(m, {ConceptId("Ghost")}); }),
            ErrorCode::UnknownConcept);
}

TEST(Subset, Idempotent) {
  testkit::Rng rng(23);
  const Metamodel m = build_canonical();
  std::vector<ConceptId> ids;
  for (const Concept& c : m.concepts()) ids.push_back(c.id);
  for (int i = 0; i < 100; ++i) {
    std::set<ConceptId> k;
    for (int j = rng.between(1, 6); j > 0; --j) k.insert(rng.pick(ids));
    const std::set<ConceptId> closure = subset_closure(m, k);
    std::set<ConceptId> k2;
    for (const ConceptId& c : closure) {
      if (rng.chance(0.5)) k2.insert(c);
    }
    if (k2.empty()) k2.insert(*closure.begin());
    EXPECT_TRUE(structurally_equal(select_subset(select_subset(m, k), k2), select_subset(m, k2)));
  }
}

TEST(Specialize, AddsChildUnderParent) {
  TailoringLog log;
  const Metamodel m = specialize(build_canonical(), ConceptId("TestSystem"),
                                 child("TestSecurity", ConceptKind::Task), &log);
  EXPECT_EQ(ancestors(m, ConceptId("TestSecurity")), std::vector<ConceptId>{ConceptId("TestSystem")});
  EXPECT_EQ(m.find(ConceptId("TestSecurity"))->phase, ConceptId("Enable"));
  EXPECT_EQ(m.version(), "final+TestSecurity");
  EXPECT_TRUE(validate_metamodel(m).empty());
  EXPECT_EQ(format(log.entries().at(0)),
            "specialize final -> final+TestSecurity: added TestSecurity as a specialization of "
            "TestSystem");
}

TEST(Specialize, SecondRollBackPlan) {
  const Metamodel m = specialize(build_canonical(), ConceptId("DefinePlan"),
                                 child("DefineRollBackPlan2", ConceptKind::Task));
  EXPECT_EQ(ancestors(m, ConceptId("DefineRollBackPlan2")),
            std::vector<ConceptId>{ConceptId("DefinePlan")});
}

TEST(Specialize, Errors) {
  const Metamodel m = build_canonical();
  EXPECT_EQ(code_of([&] {
              (void)specialize(m, ConceptId("TestSystem"), child("X", ConceptKind::Principle));
            }),
            ErrorCode::KindMismatch);
  EXPECT_EQ(code_of([&] {
              (void)specialize(m, ConceptId("Ghost"), child("X", ConceptKind::Task));
            }),
            ErrorCode::UnknownConcept);
  EXPECT_EQ(code_of([&] {
              (void)specialize(m, ConceptId("TestSystem"), child("AdaptData", ConceptKind::Task));
            }),
            ErrorCode::IdCollision);
  EXPECT_EQ(code_of([&] {
              (void)specialize(m, ConceptId("Plan"), child("X", ConceptKind::Phase));
            }),
            ErrorCode::KindMismatch);
}

TEST(ExtensionBetween, ReproducesDelta) {
  const Metamodel base = build_version_1_0();
  const Metamodel derived = apply_extension(base, extension("use-logging"));
  const MetamodelExtension e = extension_between(base, derived);
  EXPECT_EQ(e.base, "1.0");
  EXPECT_EQ(e.version, "1.1");
  EXPECT_TRUE(structurally_equal(apply_extension(base, e), derived));
  EXPECT_THROW((void)extension_between(derived, base), Error);
}

TEST(TailoringProperties, OutputsValidate) {
  const auto r = testkit::run_tailoring_validity(300, 29);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
