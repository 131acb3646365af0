#include "migmeta/canonical.hpp"

#include <algorithm>

#include "migmeta/dsl.hpp"
#include "migmeta/embedded.hpp"
#include "migmeta/tailoring.hpp"

namespace migmeta {
namespace {

constexpr ConceptKind kTask = ConceptKind::Task;
constexpr ConceptKind kWorkProduct = ConceptKind::WorkProduct;
constexpr ConceptKind kPrinciple = ConceptKind::Principle;

struct ConceptRow {
  std::string_view id;
  std::string_view display_name;
  ConceptKind kind;
  std::string_view phase;
  std::string_view parent;
  std::string_view definition;
  std::vector<std::string> aliases = {};
};

// Registration order drives checklists and DOT output: phases first, then
// each phase's concepts roughly in lifecycle order.
const std::vector<ConceptRow>& rows() {
  static const std::vector<ConceptRow> table = {
      {"Plan", "Plan", ConceptKind::Phase, "", "",
       "Assess whether and how the legacy system should move to the cloud, capture its "
       "current architecture and requirements, and lay out the migration plan.",
       {"Plan migration"}},
      {"Design", "Design", ConceptKind::Phase, "", "",
       "Produce the target cloud architecture: platform choice, distribution of legacy "
       "components over cloud servers, and the design principles the system must follow."},
      {"Enable", "Enable", ConceptKind::Phase, "", "",
       "Realise the target architecture: adapt code and data, resolve incompatibilities, "
       "deploy, configure, secure and test the migrated system."},

      // Plan
      {"AnalyseContext", "Analyse context", kTask, "Plan", "",
       "Analyse migration suitability with respect to factors such as cost of legacy system "
       "modification, installation, training, administration, license management, required "
       "expertise, pricing models of the service providers, infrastructure procurement imposed "
       "by the migration, impact of the cloud on stakeholders, organisational constraints, "
       "responsibilities, and working practices."},
      {"AnalyseMigrationFeasibility", "Analyse migration feasibility", kTask, "Plan",
       "AnalyseContext",
       "Weigh the benefits and risks of moving the system to the cloud, such as privacy, "
       "vendor lock-in and environmental limitations."},
      {"AnalyseMigrationCost", "Analyse migration cost", kTask, "Plan", "AnalyseContext",
       "Estimate the running cost of the migrated system from the provider's pricing model "
       "and compare it with the cost of the legacy deployment."},
      {"AnalyseMigrationRequirements", "Analyse migration requirements", kTask, "Plan", "",
       "Identify a set of requirements to be satisfied by the cloud such as computational "
       "requirements, data storage, security, response time, and elasticity."},
      {"DefinePlan", "Define plan", kTask, "Plan", "",
       "Define a sequence of tasks that guide the migration process by analysing feedback "
       "from stakeholders. A plan may include (i) notice of temporal unavailability of legacy "
       "systems, (ii) roll-back the system to in-house versions, (iii) migration type such as "
       "complete or partial, and (iv) legacy system retirement procedures."},
      {"DefineRollBackPlan", "Define roll-back plan", kTask, "Plan", "DefinePlan",
       "Define roll-back, as a plan B, to an in-house version of the legacy system in the "
       "case of occurrence of any significant risk or new application fails during the "
       "migration process. This reduces the risk and exposure to the business."},
      {"RecoverLegacySystemKnowledge", "Recover legacy system knowledge", kTask, "Plan", "",
       "Produce a complete representation of legacy system architecture including its data, "
       "components, dependencies among components and infrastructure, system data usage, and "
       "resource utilisation model (e.g. CPU, Network, and storage)."},

      // Design
      {"ChooseCloudPlatform", "Choose cloud platform/provider", kTask, "Design", "",
       "Define a set of suitability criteria that characterise desirable features of cloud "
       "providers including pricing model, constraints, offered QoS, electricity costs, power "
       "and cooling costs, organisation migration characteristics (migration goals, available "
       "budget), and system requirements.",
       {"Choose cloud provider"}},
      {"DesignCloudSolution", "Design cloud solution", kTask, "Design", "",
       "Identify legacy system components with respect to migration requirements and then "
       "define their distribution cloud servers."},
      {"IdentifyIncompatibilities", "Identify incompatibilities", kTask, "Design", "",
       "Identify incompatibilities between legacy system components and cloud services."},
      {"IdentifiedCompatibilityIssues", "Identified compatibility issues", kWorkProduct,
       "Design", "",
       "The recorded list of mismatches between the legacy system and the target cloud "
       "services, used to drive adaptation in the enable phase."},
      {"ApplyDesignPrinciples", "Apply design principles", kPrinciple, "Design", "",
       "Shape the target architecture with the cloud design principles specialised below."},
      {"MakeSystemStateless", "Make system stateless", kPrinciple, "Design",
       "ApplyDesignPrinciples",
       "Enable the legacy system to handle safety and traceability of tenant's session when "
       "various system instances hosted in the cloud."},
      {"DecoupleSystemComponents", "Decouple system components", kPrinciple, "Design",
       "ApplyDesignPrinciples",
       "Decouple system components from each other. Use mediator and synchronisation "
       "mechanisms to manage interaction between the loosely coupled components."},
      {"ReplicateSystemComponents", "Replicate system components", kPrinciple, "Design",
       "ApplyDesignPrinciples",
       "Partition and deploy legacy system components (e.g. database, business logic) on "
       "multiple cloud servers."},
      {"UseLogging", "Use logging", kPrinciple, "Design", "ApplyDesignPrinciples",
       "Use logging mechanism to facilitate system debug and resource monitoring when running "
       "in the cloud."},
      {"HandleTransientFaults", "Handle transient faults", kPrinciple, "Design",
       "ApplyDesignPrinciples", "Detect and handle transient faults may occur in the cloud."},
      {"SynchroniseReplicateComponents", "Synchronise/replicate system components", kPrinciple,
       "Design", "ApplyDesignPrinciples",
       "Provide support in the system to synchronise multiple components (e.g. database "
       "replica) hosted on premise network and cloud servers."},
      {"CommunicateAsynchronous", "Communicate a-synchronous", kPrinciple, "Design",
       "ApplyDesignPrinciples",
       "Enable application components to interact in an asynchronous manner."},
      {"MakeMockMigration", "Make mock migration", kTask, "Design", "",
       "Build a prototype of new cloud solution to get an understanding of how the functional "
       "and non-functional aspects of the system will work in the cloud.",
       {"Make prototype"}},
      {"ResolveLicensingIssues", "Resolve licensing issues", kTask, "Design", "",
       "Define and monitor a pay-as-you-go licensing model to handle unintended license "
       "agreement violations due to automatic scaling."},

      // Enable
      {"DevelopIntegrators", "Develop integrators", kTask, "Enable", "",
       "Develop mediators/wrappers to hide incompatibilities occurring at runtime between "
       "legacy system components and selected cloud services that are plugged to these system "
       "components."},
      {"RefactorCodes", "Refactor codes", kTask, "Enable", "",
       "Modify legacy source code so that it runs against the selected cloud services."},
      {"AdaptData", "Adapt data", kTask, "Enable", "",
       "Transform legacy data formats and data access so they fit the cloud storage services."},
      {"MigrateDatabase", "Migrate database", kTask, "Enable", "",
       "Move the legacy database onto a cloud database service."},
      {"DeploySystemComponent", "Deploy system component", kTask, "Enable", "",
       "Install system components and any required third party tools in the cloud."},
      {"EnableElasticity", "Enable elasticity", kTask, "Enable", "",
       "Define scaling rules and provide support for dynamic acquisition and release of cloud "
       "resources."},
      {"EncryptDatabase", "Encrypt database", kTask, "Enable", "",
       "Encrypt critical databases prior to hosting in the cloud."},
      {"IsolateTenant", "Isolate tenant", kTask, "Enable", "",
       "Protect tenants' data, performance, and faults from other tenants, which are running "
       "on the same cloud server."},
      {"EncryptDecryptMessages", "Encrypt/Decrypt messages", kTask, "Enable", "",
       "Secure messages transmission between the local components and those hosted in the "
       "cloud or distributed across multiple clouds using an encryption mechanism."},
      {"ObfuscateCodes", "Obfuscate codes", kTask, "Enable", "",
       "Protect unauthorised access to code blocks of components by other tenants that are "
       "running on the same cloud provider."},
      {"ReconfigureNetwork", "Re-configure network", kTask, "Enable", "",
       "Re-configure the running environment of the system including reachability policies "
       "to resources and network, connection to storages, setting ports and firewalls, and "
       "load balancer."},
      {"TestSystem", "Test system", kTask, "Enable", "",
       "Test system security, interoperability, multi-tenancy, performance, scalability, "
       "network connectivity of the system that migrated to the cloud."},
      {"TestPerformance", "Test performance", kTask, "Enable", "TestSystem",
       "Compare execution and response times of the system in the cloud against the local "
       "deployment to expose performance bottlenecks."},
  };
  return table;
}

Relationship uses(std::string_view s, std::string_view t) {
  return {RelationshipKind::Uses, ConceptId{std::string(s)}, ConceptId{std::string(t)}};
}

Relationship follows(std::string_view s, std::string_view t) {
  return {RelationshipKind::Follows, ConceptId{std::string(s)}, ConceptId{std::string(t)}};
}

// Exactly the relationship rows of the golden coverage table.
std::vector<Relationship> canonical_relationships() {
  return {
      uses("DesignCloudSolution", "AnalyseMigrationRequirements"),
      uses("DesignCloudSolution", "IdentifyIncompatibilities"),
      uses("DesignCloudSolution", "ChooseCloudPlatform"),
      uses("RefactorCodes", "IdentifyIncompatibilities"),
      uses("DesignCloudSolution", "RecoverLegacySystemKnowledge"),
      uses("RefactorCodes", "DesignCloudSolution"),
      uses("MigrateDatabase", "RefactorCodes"),
      uses("TestSystem", "DesignCloudSolution"),
      follows("Plan", "Design"),
      follows("Design", "Enable"),
      follows("ChooseCloudPlatform", "IdentifyIncompatibilities"),
  };
}

Concept to_concept(const ConceptRow& row) {
  Concept c;
  c.id = ConceptId{std::string(row.id)};
  c.display_name = std::string(row.display_name);
  c.kind = row.kind;
  if (!row.phase.empty()) c.phase = ConceptId{std::string(row.phase)};
  if (!row.parent.empty()) c.parent = ConceptId{std::string(row.parent)};
  c.definition = std::string(row.definition);
  c.aliases = row.aliases;
  return c;
}

std::vector<ConceptId> ids(std::initializer_list<std::string_view> names) {
  std::vector<ConceptId> out;
  for (std::string_view n : names) out.emplace_back(std::string(n));
  return out;
}

Metamodel replay(std::string_view target) {
  Metamodel m = build_version_1_0();
  for (const auto& [name, text] : embedded::evolution_extensions()) {
    auto parsed = parse_extension(text);
    m = apply_extension(m, *parsed.value);
    if (m.version() == target) break;
  }
  return m;
}

}  // namespace

Metamodel build_canonical() {
  Metamodel m("final");
  for (const ConceptRow& row : rows()) m.add_concept(to_concept(row));
  for (Relationship& rel : canonical_relationships()) m.add_relationship(std::move(rel));
  return m;
}

Metamodel build_version_1_0() {
  static const std::vector<ConceptId> later_additions =
      ids({"UseLogging", "ResolveLicensingIssues", "DefineRollBackPlan"});
  const auto added_later = [](const ConceptId& id) {
    return std::find(later_additions.begin(), later_additions.end(), id) !=
           later_additions.end();
  };

  const Metamodel full = build_canonical();
  Metamodel m("1.0");
  for (const Concept& c : full.concepts()) {
    if (!added_later(c.id)) m.add_concept(c);
  }
  for (const Relationship& rel : full.relationships()) {
    if (!added_later(rel.source) && !added_later(rel.target)) m.add_relationship(rel);
  }
  return m;
}

const std::vector<ConceptId>& key_concept_ids() {
  static const std::vector<ConceptId> table = ids({
      "AnalyseContext", "AnalyseMigrationRequirements", "DefinePlan",
      "RecoverLegacySystemKnowledge", "ChooseCloudPlatform", "DesignCloudSolution",
      "IdentifyIncompatibilities", "MakeSystemStateless", "DecoupleSystemComponents",
      "ReplicateSystemComponents", "MakeMockMigration", "UseLogging", "ResolveLicensingIssues",
      "DevelopIntegrators", "DeploySystemComponent", "EnableElasticity", "EncryptDatabase",
      "HandleTransientFaults", "IsolateTenant", "EncryptDecryptMessages", "ObfuscateCodes",
      "ReconfigureNetwork", "SynchroniseReplicateComponents", "CommunicateAsynchronous",
      "TestSystem",
  });
  return table;
}

const std::vector<ConceptId>& supplementary_concept_ids() {
  static const std::vector<ConceptId> table = ids({
      "ApplyDesignPrinciples", "AnalyseMigrationFeasibility", "AnalyseMigrationCost",
      "DefineRollBackPlan", "RefactorCodes", "AdaptData", "MigrateDatabase", "TestPerformance",
      "IdentifiedCompatibilityIssues",
  });
  return table;
}

const std::vector<std::string_view>& builtin_version_names() {
  static const std::vector<std::string_view> names = {"1.0", "1.1", "1.1+licensing", "final"};
  return names;
}

std::optional<Metamodel> builtin_version(std::string_view version) {
  if (version == "final") return build_canonical();
  if (version == "1.0") return build_version_1_0();
  if (version == "1.1" || version == "1.1+licensing") return replay(version);
  return std::nullopt;
}

}  // namespace migmeta
