#pragma once

// Textual DSL for metamodel extensions (.cmx) and instance models (.cmi).
//
//   file           = metamodel_decl | model_decl ;
//   metamodel_decl = "metamodel" STRING "extends" STRING "{" { concept_decl | rel_decl } "}" ;
//   concept_decl   = "concept" IDENT "kind" KIND [ "phase" IDENT ]
//                    [ "specializes" IDENT ] [ "doc" STRING ] ;
//   KIND           = "task" | "work-product" | "principle" | "phase" ;
//   rel_decl       = "rel" IDENT ( "uses" | "follows" ) IDENT ;
//   model_decl     = "model" STRING "conforms" STRING "{" { activity_decl | edge_decl } "}" ;
//   activity_decl  = "activity" IDENT "instance-of" IDENT [ "note" STRING ] ;
//   edge_decl      = "edge" IDENT ( "uses" | "follows" ) IDENT ;
//   IDENT          = [A-Z][A-Za-z0-9]* ;
//
// `#` starts a comment running to end of line. Strings are double-quoted
// with `\"` and `\\` as the only escapes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "migmeta/model.hpp"

namespace migmeta {

/// 1-based line and byte column.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

/// SYNTAX_ERROR, DUPLICATE_DECL, UNKNOWN_KEYWORD and BAD_IDENTIFIER are
/// lexical or grammatical. DANGLING_REFERENCE and SELF_REFERENCE flag model
/// edges whose endpoints are undeclared or identical.
enum class ParseCode {
  SyntaxError,
  DuplicateDecl,
  UnknownKeyword,
  BadIdentifier,
  DanglingReference,
  SelfReference,
};

[[nodiscard]] std::string_view to_string(ParseCode code) noexcept;

struct ParseDiagnostic {
  SourceSpan span;
  ParseCode code = ParseCode::SyntaxError;
  std::string message;
};

[[nodiscard]] std::string format(const ParseDiagnostic& d, std::string_view file_name = {});

/// Either a value or at least one diagnostic, never both.
template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<ParseDiagnostic> diagnostics;

  [[nodiscard]] bool ok() const noexcept { return value.has_value(); }
};

[[nodiscard]] ParseResult<MetamodelExtension> parse_extension(std::string_view text);
[[nodiscard]] ParseResult<InstanceModel> parse_model(std::string_view text);

/// Canonical text: activities in declaration order, then edges sorted by
/// (source, kind, target). Extensions list concepts in declaration order,
/// then relationships sorted the same way.
[[nodiscard]] std::string serialize(const InstanceModel& model);
[[nodiscard]] std::string serialize(const MetamodelExtension& extension);

}  // namespace migmeta
