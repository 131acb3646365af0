// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. `--criterion N` runs a single one.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "migmeta/canonical.hpp"
#include "migmeta/cli.hpp"
#include "migmeta/conformance.hpp"
#include "migmeta/dsl.hpp"
#include "migmeta/embedded.hpp"
#include "migmeta/reporting.hpp"
#include "migmeta/tailoring.hpp"
#include "support/properties.hpp"

using namespace migmeta;

namespace {

// Pinned tolerances.
constexpr int kRoundTripInputs = 1000;
constexpr int kCoverageModels = 100;
constexpr int kMonotonicityPairs = 100;
constexpr int kTailoringCases = 200;
constexpr int kFuzzInputs = 400;
constexpr std::size_t kFuzzMaxBytes = 1u << 20;
constexpr double kSuiteSeconds = 60.0;
constexpr std::uint64_t kSeed = 20261016;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string read_source_file(const std::string& relative) {
  std::ifstream in(std::string(MIGMETA_SOURCE_DIR) + "/" + relative, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + relative);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    out.push_back(fields);
  }
  return out;
}

std::vector<InstanceModel> case_models() {
  std::vector<InstanceModel> out;
  for (const embedded::File& f : embedded::case_fixtures()) out.push_back(*parse_model(f.text).value);
  return out;
}

// Compares two CSV texts cell by cell; the header must match exactly.
Outcome compare_csv(const std::string& actual, const std::string& expected) {
  const auto a = csv_rows(actual);
  const auto e = csv_rows(expected);
  if (a.empty() || e.empty() || a[0] != e[0] || a.size() != e.size()) {
    return {false, "shape or header differs"};
  }
  int total = 0;
  int matched = 0;
  std::string mismatches;
  for (std::size_t r = 1; r < e.size(); ++r) {
    for (std::size_t c = 1; c < e[r].size(); ++c) {
      ++total;
      const std::string got = c < a[r].size() ? a[r][c] : "?";
      if (a[r][0] == e[r][0] && got == e[r][c]) {
        ++matched;
      } else {
        mismatches += "\n      " + e[r][0] + " / " + e[0][c] + ": expected " + e[r][c] +
                      ", got " + got;
      }
    }
  }
  const bool identical = actual == expected;
  return {identical && matched == total,
          std::to_string(matched) + "/" + std::to_string(total) + " cells match" +
              (identical ? ", byte-identical" : "") + mismatches};
}

Outcome golden_concepts() {
  std::ostringstream out;
  std::ostringstream err;
  const auto status = cli::run({"coverage", "core", "@informait", "@toas", "@springtrader",
                                "--rows",
                                "RecoverLegacySystemKnowledge,ChooseCloudPlatform,"
                                "DesignCloudSolution,IdentifyIncompatibilities,"
                                "DecoupleSystemComponents,AdaptData,DevelopIntegrators,"
                                "RefactorCodes,ReconfigureNetwork"},
                               out, err);
  if (status != cli::ExitStatus::Success) return {false, "coverage command failed: " + err.str()};
  return compare_csv(out.str(), read_source_file("data/golden/concept-coverage.csv"));
}

Outcome golden_relationships() {
  const std::string expected = read_source_file("data/golden/relationship-coverage.csv");
  std::vector<Relationship> rels;
  const auto rows = csv_rows(expected);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::istringstream words(rows[r][0]);
    std::string src, kind, dst;
    words >> src >> kind >> dst;
    rels.push_back({kind == "uses" ? RelationshipKind::Uses : RelationshipKind::Follows,
                    ConceptId(src), ConceptId(dst)});
  }
  const CoverageMatrix matrix = relationship_coverage(build_canonical(), case_models(), rels);
  return compare_csv(coverage_to_csv(matrix), expected);
}

Outcome evolution_replay() {
  Metamodel m = build_version_1_0();
  for (const embedded::File& f : embedded::evolution_extensions()) {
    const auto ext = parse_extension(f.text);
    if (!ext.ok()) return {false, std::string(f.name) + " does not parse"};
    m = apply_extension(m, *ext.value);
  }
  if (!structurally_equal(m, build_canonical())) {
    return {false, "replayed metamodel differs from the final one"};
  }
  const InstanceModel informait = *parse_model(*embedded::find_fixture("informait")).value;
  const auto on_v1 = check_conformance(build_version_1_0(), informait);
  const bool one_unmatched = on_v1.violations.size() == 1 &&
                             on_v1.violations[0].code == ViolationCode::UnmatchedConcept &&
                             informait.find(ActivityId(on_v1.violations[0].subject)) != nullptr &&
                             informait.find(ActivityId(on_v1.violations[0].subject))->instance_of ==
                                 "UseLogging";
  if (!one_unmatched) {
    return {false, "v1.0 check gave " + std::to_string(on_v1.violations.size()) +
                       " violation(s), expected one UNMATCHED_CONCEPT(UseLogging)"};
  }
  const auto on_replayed = check_conformance(m, informait);
  if (!on_replayed.conformant()) return {false, "InformaIT fails on the replayed metamodel"};
  return {true, "1.0 + 3 extensions == final; InformaIT: 1 UNMATCHED_CONCEPT(UseLogging) on "
                "1.0, conformant on " + m.version()};
}

Outcome registry_completeness() {
  // The 25 key concepts, written out independently of the library's own list.
  static const std::array<const char*, 25> kKey = {
      "AnalyseContext", "AnalyseMigrationRequirements", "DefinePlan",
      "RecoverLegacySystemKnowledge", "ChooseCloudPlatform", "DesignCloudSolution",
      "IdentifyIncompatibilities", "MakeSystemStateless", "DecoupleSystemComponents",
      "ReplicateSystemComponents", "UseLogging", "HandleTransientFaults",
      "SynchroniseReplicateComponents", "CommunicateAsynchronous", "MakeMockMigration",
      "ResolveLicensingIssues", "DevelopIntegrators", "DeploySystemComponent",
      "EnableElasticity", "EncryptDatabase", "IsolateTenant", "EncryptDecryptMessages",
      "ObfuscateCodes", "ReconfigureNetwork", "TestSystem"};
  static const std::array<const char*, 9> kSupplementary = {
      "ApplyDesignPrinciples", "AnalyseMigrationFeasibility", "AnalyseMigrationCost",
      "DefineRollBackPlan", "RefactorCodes", "AdaptData", "MigrateDatabase", "TestPerformance",
      "IdentifiedCompatibilityIssues"};

  const Metamodel m = build_canonical();
  std::string missing;
  for (const char* id : kKey) {
    if (!m.contains(ConceptId(id))) missing += std::string(" ") + id;
  }
  for (const char* id : kSupplementary) {
    if (!m.contains(ConceptId(id))) missing += std::string(" ") + id;
  }
  if (!missing.empty()) return {false, "missing:" + missing};
  if (key_concept_ids().size() != kKey.size()) return {false, "key concept list size differs"};

  const auto chain = phase_chain(m);
  if (chain != std::vector<ConceptId>{ConceptId("Plan"), ConceptId("Design"), ConceptId("Enable")}) {
    return {false, "phase chain is not Plan -> Design -> Enable"};
  }
  int phases = 0;
  for (const Concept& c : m.concepts()) {
    phases += c.kind == ConceptKind::Phase;
    if (c.definition.empty()) return {false, c.id.str() + " has an empty definition"};
  }
  if (phases != 3) return {false, std::to_string(phases) + " phase concepts"};
  const std::size_t expected = kKey.size() + kSupplementary.size() + 3;
  if (m.concepts().size() != expected) {
    return {false, std::to_string(m.concepts().size()) + " concepts, expected " +
                       std::to_string(expected)};
  }
  return {true, "25 key concepts, 9 supplementary, 3 phases (Plan -> Design -> Enable), "
                "all defined"};
}

Outcome property_suites() {
  const std::vector<std::pair<testkit::PropertyResult, int>> runs = {
      {testkit::run_round_trip(kRoundTripInputs, kSeed), kRoundTripInputs},
      {testkit::run_coverage_equivalence(kCoverageModels, kSeed), kCoverageModels},
      {testkit::run_monotonicity(kMonotonicityPairs, kSeed), kMonotonicityPairs},
      {testkit::run_tailoring_validity(kTailoringCases, kSeed), kTailoringCases},
      {testkit::run_parser_fuzz(kFuzzInputs, kSeed, kFuzzMaxBytes), kFuzzInputs},
  };
  bool pass = true;
  std::string detail;
  for (const auto& [r, required] : runs) {
    const bool ok = r.ok() && r.cases >= required && r.seconds < kSuiteSeconds;
    pass &= ok;
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.2fs", r.seconds);
    detail += "\n      " + std::string(ok ? "ok   " : "FAIL ") + r.name + ": " +
              std::to_string(r.cases) + " cases, " + seconds;
    if (!r.first_failure.empty()) detail += ", " + r.first_failure;
  }
  return {pass, "5 suites" + detail};
}

std::string run_binary(const std::string& args) {
  const std::string command = std::string("\"") + MIGMETA_BINARY + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  const std::vector<std::string> commands = {
      "export --format dot core",
      "export --format dot --definitions core-1.0",
      "export --format dot --no-clusters core",
      "export --format json core",
      "export --format json core-1.0",
      "export --format checklist core",
      "export --format checklist --definitions core",
      "export --format dot @informait",
      "export --format json @informait",
      "export --format dot @toas",
      "export --format json @springtrader",
      "coverage core @informait @toas @springtrader",
      "coverage core @informait @toas @springtrader --format md",
      "coverage core @informait @toas @springtrader --relationships",
      "tailor core --select UseLogging,TestPerformance",
      "diff @informait @springtrader",
  };
  int identical = 0;
  std::string differing;
  for (const std::string& c : commands) {
    const std::string first = run_binary(c);
    const std::string second = run_binary(c);
    if (!first.empty() && first == second) {
      ++identical;
    } else {
      differing += "\n      " + c;
    }
  }
  return {identical == static_cast<int>(commands.size()),
          std::to_string(identical) + "/" + std::to_string(commands.size()) +
              " commands byte-identical across two runs" + differing};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::stoi(argv[2]);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden concept coverage", golden_concepts},
      {"golden relationship coverage", golden_relationships},
      {"evolution replay", evolution_replay},
      {"registry completeness", registry_completeness},
      {"property suites", property_suites},
      {"export determinism", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i) + 1) continue;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !outcome.pass;
    std::printf("[%s] %zu %s (%.2fs): %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, seconds, outcome.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
