#include "migmeta/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "migmeta/canonical.hpp"
#include "migmeta/conformance.hpp"
#include "migmeta/dsl.hpp"
#include "migmeta/embedded.hpp"
#include "migmeta/error.hpp"
#include "migmeta/json_io.hpp"
#include "migmeta/reporting.hpp"
#include "migmeta/tailoring.hpp"

namespace migmeta::cli {
namespace {

namespace fs = std::filesystem;

// Unwinds a command with a fixed status; the message goes to stderr.
struct Failure {
  ExitStatus status;
  std::string message;
};

bool ends_with(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{ExitStatus::InputError, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) throw Failure{ExitStatus::InputError, "cannot write '" + path + "'"};
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T take_parsed(ParseResult<T> result, const std::string& file, std::ostream& err) {
  if (result.ok()) return std::move(*result.value);
  for (const ParseDiagnostic& d : result.diagnostics) err << format(d, file) << "\n";
  throw Failure{ExitStatus::InputError, file + ": " + std::to_string(result.diagnostics.size()) +
                                            " parse error(s)"};
}

std::optional<Metamodel> named_metamodel(std::string_view ref) {
  if (ref == "core") return build_canonical();
  if (ref == "core-1.0") return build_version_1_0();
  if (ref.starts_with("core-")) ref.remove_prefix(5);
  return builtin_version(ref);
}

struct ExtensionInput {
  Metamodel base;
  MetamodelExtension extension;
};

ExtensionInput load_extension(const std::string& path, std::ostream& err) {
  MetamodelExtension ext = take_parsed(parse_extension(read_file(path)), path, err);
  auto base = named_metamodel(ext.base);
  if (!base) {
    throw Failure{ExitStatus::InputError,
                  path + ": base '" + ext.base + "' is not a built-in metamodel version"};
  }
  return {std::move(*base), std::move(ext)};
}

Metamodel load_metamodel(const std::string& ref, std::ostream& err) {
  if (auto named = named_metamodel(ref)) return std::move(*named);
  if (ends_with(ref, ".json")) return import_metamodel_json(read_file(ref));
  if (ends_with(ref, ".cmx")) {
    ExtensionInput input = load_extension(ref, err);
    return apply_extension(input.base, input.extension);
  }
  throw Failure{ExitStatus::InputError, "unknown metamodel '" + ref +
                                            "' (expected core, core-1.0, a version name, "
                                            "a .cmx extension or a .json metamodel)"};
}

struct LoadedModel {
  std::string label;  // file stem, used in reports
  InstanceModel model;
};

// `@name` and missing files whose stem names a bundled fixture load the
// embedded copy.
LoadedModel load_model(const std::string& path, std::ostream& err) {
  const bool embedded_ref = path.starts_with("@");
  const std::string stem = embedded_ref ? path.substr(1) : fs::path(path).stem().string();
  if (embedded_ref || !fs::exists(path)) {
    if (auto text = embedded::find_fixture(stem)) {
      return {stem, take_parsed(parse_model(*text), stem + ".cmi", err)};
    }
    if (embedded_ref) throw Failure{ExitStatus::InputError, "no bundled fixture '" + stem + "'"};
  }
  const std::string text = read_file(path);
  if (ends_with(path, ".json")) return {stem, import_model_json(text)};
  return {stem, take_parsed(parse_model(text), path, err)};
}

bool is_model_path(const std::string& target) {
  if (target.starts_with("@") || ends_with(target, ".cmi")) return true;
  if (!ends_with(target, ".json")) return false;
  std::ifstream in(target, std::ios::binary);
  if (!in) return false;
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  return doc.is_object() && doc.value("type", "") == "model";
}

ExitStatus status_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NonconformantModel:
    case ErrorCode::BaseMismatch:
    case ErrorCode::ExtensionConflict:
    case ErrorCode::InvalidResult:
    case ErrorCode::IdCollision:
    case ErrorCode::KindMismatch:
    case ErrorCode::UnknownMetamodelVersion:
      return ExitStatus::Findings;
    case ErrorCode::UnknownConcept:
    case ErrorCode::UnknownRelationship:
    case ErrorCode::EmptySelection:
    case ErrorCode::InvalidJson:
      return ExitStatus::InputError;
  }
  return ExitStatus::InternalError;
}

// Command options, filled by CLI11.
struct Options {
  std::string metamodel;
  std::vector<std::string> positionals;
  bool strict_edges = false;
  std::string rows;
  bool relationships = false;
  std::string format;
  std::string extend;
  std::string select;
  std::string specialize;
  std::string doc;
  std::string out_path;
  bool definitions = false;
  bool no_clusters = false;
};

// Splits positionals into a metamodel ref and the rest, honouring --metamodel.
std::pair<std::string, std::vector<std::string>> ref_and_models(const Options& o,
                                                                bool ref_required) {
  if (!o.metamodel.empty()) return {o.metamodel, o.positionals};
  if (o.positionals.empty()) {
    if (ref_required) throw Failure{ExitStatus::InputError, "missing metamodel reference"};
    return {"core", {}};
  }
  // a leading model means the reference was left out
  if (!ref_required && is_model_path(o.positionals.front())) return {"core", o.positionals};
  return {o.positionals.front(), {o.positionals.begin() + 1, o.positionals.end()}};
}

ExitStatus cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [ref, rest] = ref_and_models(o, true);
  if (!rest.empty()) throw Failure{ExitStatus::InputError, "validate takes one metamodel"};

  Metamodel m;
  if (ends_with(ref, ".cmx")) {
    ExtensionInput input = load_extension(ref, err);
    m = merge_extension(input.base, input.extension);
  } else {
    m = load_metamodel(ref, err);
  }
  const auto diagnostics = validate_metamodel(m);
  std::size_t errors = 0;
  for (const Diagnostic& d : diagnostics) {
    err << format(d) << "\n";
    if (d.severity == Severity::Error) ++errors;
  }
  out << "metamodel " << m.version() << ": " << m.concepts().size() << " concepts, "
      << m.relationships().size() << " relationships, " << errors << " error(s), "
      << diagnostics.size() - errors << " warning(s)\n";
  return errors == 0 ? ExitStatus::Success : ExitStatus::Findings;
}

ExitStatus cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [ref, paths] = ref_and_models(o, false);
  if (paths.empty()) throw Failure{ExitStatus::InputError, "check needs at least one model"};
  const Metamodel m = load_metamodel(ref, err);
  bool all_conformant = true;
  for (const std::string& path : paths) {
    const LoadedModel loaded = load_model(path, err);
    const ConformanceReport report = check_conformance(m, loaded.model, o.strict_edges);
    if (report.conformant()) {
      out << loaded.label << ": conformant to metamodel " << m.version() << " ("
          << loaded.model.activities().size() << " activities, "
          << report.covered_concepts.size() << " concepts covered)\n";
      continue;
    }
    all_conformant = false;
    out << loaded.label << ": " << report.violations.size() << " violation(s) against metamodel "
        << m.version() << "\n";
    for (const Violation& v : report.violations) {
      out << "  " << to_string(v.code) << " " << v.subject << ": " << v.detail << "\n";
    }
  }
  return all_conformant ? ExitStatus::Success : ExitStatus::Findings;
}

ExitStatus cmd_coverage(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [ref, paths] = ref_and_models(o, false);
  const Metamodel m = load_metamodel(ref, err);
  std::vector<InstanceModel> models;
  for (const std::string& path : paths) models.push_back(load_model(path, err).model);

  CoverageMatrix matrix;
  if (o.relationships) {
    std::vector<Relationship> rels(m.relationships().begin(), m.relationships().end());
    matrix = relationship_coverage(m, models, rels);
  } else {
    std::optional<std::vector<ConceptId>> rows;
    if (!o.rows.empty()) {
      rows.emplace();
      for (const std::string& name : split_list(o.rows)) {
        const Concept* c = m.resolve(name);
        rows->push_back(c ? c->id : ConceptId(name));
      }
    }
    matrix = coverage_matrix(m, models, rows);
  }
  if (models.empty()) matrix.rows.clear();  // header only

  if (o.format == "md") {
    out << coverage_to_markdown(matrix);
  } else {
    out << coverage_to_csv(matrix);
  }
  return ExitStatus::Success;
}

ExitStatus cmd_tailor(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [ref, rest] = ref_and_models(o, true);
  if (!rest.empty()) throw Failure{ExitStatus::InputError, "tailor takes one metamodel"};
  const int chosen = !o.extend.empty() + !o.select.empty() + !o.specialize.empty();
  if (chosen != 1) {
    throw Failure{ExitStatus::InputError,
                  "tailor needs exactly one of --extend, --select, --specialize"};
  }

  const Metamodel base = load_metamodel(ref, err);
  TailoringLog log;
  Metamodel result;
  if (!o.extend.empty()) {
    const MetamodelExtension ext = take_parsed(parse_extension(read_file(o.extend)), o.extend, err);
    result = apply_extension(base, ext, &log);
  } else if (!o.select.empty()) {
    std::set<ConceptId> keep;
    if (o.select == "ALL") {
      for (const Concept& c : base.concepts()) keep.insert(c.id);
    } else {
      for (const std::string& name : split_list(o.select)) {
        const Concept* c = base.resolve(name);
        keep.insert(c ? c->id : ConceptId(name));
      }
    }
    result = select_subset(base, keep, &log);
  } else {
    const auto eq = o.specialize.find('=');
    if (eq == std::string::npos) {
      throw Failure{ExitStatus::InputError, "--specialize expects PARENT=CHILD"};
    }
    const ConceptId parent(o.specialize.substr(0, eq));
    const Concept* parent_concept = base.find(parent);
    if (!parent_concept) {
      throw Error(ErrorCode::UnknownConcept, "unknown concept '" + parent.str() + "'");
    }
    Concept child;
    child.id = ConceptId(o.specialize.substr(eq + 1));
    child.display_name = display_name_from_id(child.id.str());
    child.kind = parent_concept->kind;
    child.definition = o.doc;
    result = specialize(base, parent, std::move(child), &log);
  }

  for (const TailoringLogEntry& entry : log.entries()) err << format(entry) << "\n";

  if (o.out_path.empty()) {
    out << export_json(result);
  } else if (ends_with(o.out_path, ".cmx")) {
    MetamodelExtension ext;
    try {
      ext = extension_between(base, result);
    } catch (const Error&) {
      throw Failure{ExitStatus::InputError,
                    "result removes base elements and cannot be written as an extension; "
                    "use a .json output"};
    }
    write_file(o.out_path, serialize(ext));
  } else {
    write_file(o.out_path, export_json(result));
  }
  return ExitStatus::Success;
}

ExitStatus cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  std::string target = o.metamodel;
  if (target.empty()) {
    if (o.positionals.size() != 1) {
      throw Failure{ExitStatus::InputError, "export takes one metamodel or model"};
    }
    target = o.positionals.front();
  }
  RenderOptions opts;
  opts.include_definitions = o.definitions;
  opts.phase_clusters = !o.no_clusters;

  if (o.metamodel.empty() && is_model_path(target)) {
    const LoadedModel loaded = load_model(target, err);
    if (o.format == "checklist") {
      throw Failure{ExitStatus::InputError, "checklist export needs a metamodel"};
    }
    out << (o.format == "json" ? export_json(loaded.model) : to_dot(loaded.model, opts));
    return ExitStatus::Success;
  }
  const Metamodel m = load_metamodel(target, err);
  if (o.format == "json") {
    out << export_json(m);
  } else if (o.format == "checklist") {
    out << to_checklist(m, opts);
  } else {
    out << to_dot(m, opts);
  }
  return ExitStatus::Success;
}

ExitStatus cmd_diff(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = o.positionals;
  std::string ref = o.metamodel.empty() ? "core" : o.metamodel;
  if (o.metamodel.empty() && args.size() == 3) {
    ref = args.back();
    args.pop_back();
  }
  if (args.size() != 2) throw Failure{ExitStatus::InputError, "diff takes two models"};

  const Metamodel m = load_metamodel(ref, err);
  const LoadedModel a = load_model(args[0], err);
  LoadedModel b = load_model(args[1], err);
  if (b.label == a.label) b.label += " (2)";
  const ModelDiff d = diff_models(a.model, b.model, m);

  const auto section = [&](const std::string& title, const auto& items, auto&& render) {
    out << title << ":\n";
    if (items.empty()) out << "  (none)\n";
    for (const auto& item : items) out << "  " << render(item) << "\n";
  };
  const auto id = [](const ConceptId& c) { return c.str(); };
  const auto edge = [](const ConceptEdge& e) {
    return e.source.str() + " " + std::string(to_string(e.kind)) + " " + e.target.str();
  };
  section("only in " + a.label, d.only_in_a, id);
  section("only in " + b.label, d.only_in_b, id);
  section("shared", d.shared, id);
  section("edges only in " + a.label, d.edges_only_in_a, edge);
  section("edges only in " + b.label, d.edges_only_in_b, edge);
  return ExitStatus::Success;
}

}  // namespace

ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cloud migration metamodel toolkit", "migmeta"};
  app.require_subcommand(1);
  Options o;

  const auto add_metamodel = [&](CLI::App* cmd) {
    cmd->add_option("--metamodel", o.metamodel,
                    "core (final), core-1.0, a version name, a .cmx extension or a .json file");
  };

  auto* validate = app.add_subcommand("validate", "Check a metamodel for structural errors");
  validate->add_option("ref", o.positionals, "Metamodel reference");
  add_metamodel(validate);

  auto* check = app.add_subcommand("check", "Check instance models against a metamodel");
  check->add_option("args", o.positionals, "Metamodel reference, then model files");
  check->add_flag("--strict-edges", o.strict_edges, "Report uses edges the metamodel lacks");
  add_metamodel(check);

  auto* coverage = app.add_subcommand("coverage", "Concept or relationship coverage matrix");
  coverage->add_option("args", o.positionals, "Metamodel reference, then model files");
  auto* rows = coverage->add_option("--rows", o.rows, "Comma-separated concept ids");
  coverage->add_flag("--relationships", o.relationships, "Rows are metamodel relationships")
      ->excludes(rows);
  coverage->add_option("--format", o.format, "csv or md")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "md"}));
  add_metamodel(coverage);

  auto* tailor = app.add_subcommand("tailor", "Extend, subset or specialize a metamodel");
  tailor->add_option("ref", o.positionals, "Metamodel reference");
  tailor->add_option("--extend", o.extend, ".cmx extension to apply");
  tailor->add_option("--select", o.select, "Comma-separated concept ids to keep, or ALL");
  tailor->add_option("--specialize", o.specialize, "PARENT=CHILD");
  tailor->add_option("--doc", o.doc, "Definition for --specialize");
  tailor->add_option("--out", o.out_path, "Output file, .json or .cmx");
  add_metamodel(tailor);

  auto* exporter = app.add_subcommand("export", "Render a metamodel or model");
  exporter->add_option("target", o.positionals, "Metamodel reference or model file");
  exporter->add_option("--format", o.format, "dot, json or checklist")
      ->default_val("dot")
      ->check(CLI::IsMember({"dot", "json", "checklist"}));
  exporter->add_flag("--definitions", o.definitions, "Include concept definitions");
  exporter->add_flag("--no-clusters", o.no_clusters, "Do not group DOT nodes by phase");
  add_metamodel(exporter);

  auto* diff = app.add_subcommand("diff", "Compare the concepts two models instantiate");
  diff->add_option("args", o.positionals, "Model A, model B, optional metamodel reference");
  add_metamodel(diff);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitStatus::Success : ExitStatus::InputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out, err);
    if (check->parsed()) return cmd_check(o, out, err);
    if (coverage->parsed()) return cmd_coverage(o, out, err);
    if (tailor->parsed()) return cmd_tailor(o, out, err);
    if (exporter->parsed()) return cmd_export(o, out, err);
    if (diff->parsed()) return cmd_diff(o, out, err);
    return ExitStatus::InputError;
  } catch (const Failure& f) {
    err << "migmeta: " << f.message << "\n";
    return f.status;
  } catch (const Error& e) {
    err << "migmeta: " << e.what() << "\n";
    for (const Diagnostic& d : e.diagnostics()) err << "  " << format(d) << "\n";
    return status_for(e);
  } catch (const std::exception& e) {
    err << "migmeta: internal error: " << e.what() << "\n";
    return ExitStatus::InternalError;
  }
}

}  // namespace migmeta::cli
