#include "migmeta/dsl.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace migmeta {

std::string_view to_string(ParseCode code) noexcept {
  switch (code) {
    case ParseCode::SyntaxError: return "SYNTAX_ERROR";
    case ParseCode::DuplicateDecl: return "DUPLICATE_DECL";
    case ParseCode::UnknownKeyword: return "UNKNOWN_KEYWORD";
    case ParseCode::BadIdentifier: return "BAD_IDENTIFIER";
    case ParseCode::DanglingReference: return "DANGLING_REFERENCE";
    case ParseCode::SelfReference: return "SELF_REFERENCE";
  }
  return "SYNTAX_ERROR";
}

std::string format(const ParseDiagnostic& d, std::string_view file_name) {
  std::string out;
  if (!file_name.empty()) out += std::string(file_name) + ":";
  out += std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " +
         std::string(to_string(d.code)) + ": " + d.message;
  return out;
}

namespace {

constexpr std::array<std::string_view, 19> kKeywords = {
    "metamodel", "extends", "concept",  "kind",     "phase",       "specializes", "doc",
    "rel",       "uses",    "follows",  "model",    "conforms",    "activity",    "instance-of",
    "note",      "edge",    "task",     "work-product", "principle",
};

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '-' || c == '_';
}

// Returns the byte offset of the first malformed sequence, if any.
std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b0 < 0x80) {
      ++i;
      continue;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return i;
    }
    if (i + len > text.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (b & 0x3F);
    }
    const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                          (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::nullopt;
}

enum class TokenKind { Word, String, LBrace, RBrace, End, Invalid };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;  // word text or decoded string value
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run(std::vector<ParseDiagnostic>& diagnostics) {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) {
        tokens.push_back({TokenKind::End, "", {line_, column_, 1}});
        return tokens;
      }
      const char c = text_[pos_];
      const SourceSpan start{line_, column_, 1};
      if (c == '{' || c == '}') {
        advance();
        tokens.push_back({c == '{' ? TokenKind::LBrace : TokenKind::RBrace, {c}, start});
      } else if (c == '"') {
        tokens.push_back(lex_string(start, diagnostics));
      } else if (is_word_char(c)) {
        std::string word;
        while (pos_ < text_.size() && is_word_char(text_[pos_])) {
          word.push_back(text_[pos_]);
          advance();
        }
        tokens.push_back({TokenKind::Word, word, {start.line, start.column,
                                                  static_cast<int>(word.size())}});
      } else {
        // Swallow a whole UTF-8 sequence so the report points at one character.
        std::size_t len = 1;
        const auto b0 = static_cast<unsigned char>(c);
        if (b0 >= 0xF0) len = 4;
        else if (b0 >= 0xE0) len = 3;
        else if (b0 >= 0xC0) len = 2;
        len = std::min(len, text_.size() - pos_);
        for (std::size_t k = 0; k < len; ++k) advance();
        diagnostics.push_back({{start.line, start.column, static_cast<int>(len)},
                               ParseCode::SyntaxError, "unexpected character"});
        tokens.push_back({TokenKind::Invalid, "", {start.line, start.column,
                                                   static_cast<int>(len)}});
      }
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token lex_string(SourceSpan start, std::vector<ParseDiagnostic>& diagnostics) {
    const std::size_t begin = pos_;
    advance();  // opening quote
    std::string value;
    bool ok = true;
    while (true) {
      if (pos_ >= text_.size()) {
        diagnostics.push_back({{start.line, start.column, 1}, ParseCode::SyntaxError,
                               "unterminated string"});
        return {TokenKind::Invalid, "", {start.line, start.column, 1}};
      }
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const SourceSpan escape{line_, column_, 2};
        advance();
        if (pos_ < text_.size() && (text_[pos_] == '"' || text_[pos_] == '\\')) {
          value.push_back(text_[pos_]);
          advance();
        } else {
          if (ok) {
            diagnostics.push_back({{escape.line, escape.column, pos_ < text_.size() ? 2 : 1},
                                   ParseCode::SyntaxError,
                                   "only \\\" and \\\\ escapes are allowed"});
          }
          ok = false;
        }
        continue;
      }
      value.push_back(c);
      advance();
    }
    // Multi-line strings report only the opening quote.
    const int length = start.line == line_ ? static_cast<int>(pos_ - begin) : 1;
    if (!ok) return {TokenKind::Invalid, "", {start.line, start.column, length}};
    return {TokenKind::String, value, {start.line, start.column, length}};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct SyntaxFailure {};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diagnostics)
      : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

  std::optional<InstanceModel> parse_model() {
    try {
      expect_keyword("model");
      std::string name = expect_string("model name");
      expect_keyword("conforms");
      InstanceModel model(std::move(name), expect_string("metamodel version"));
      expect(TokenKind::LBrace, "'{'");
      parse_body({"activity", "edge"}, [&](const std::string& keyword) {
        if (keyword == "activity") {
          parse_activity(model);
        } else {
          parse_edge();
        }
      });
      check_model_edges(model);
      if (!diagnostics_.empty()) return std::nullopt;
      return model;
    } catch (const SyntaxFailure&) {
      return std::nullopt;
    }
  }

  std::optional<MetamodelExtension> parse_extension() {
    try {
      MetamodelExtension ext;
      expect_keyword("metamodel");
      ext.version = expect_string("extension version");
      expect_keyword("extends");
      ext.base = expect_string("base version");
      expect(TokenKind::LBrace, "'{'");
      parse_body({"concept", "rel"}, [&](const std::string& keyword) {
        if (keyword == "concept") {
          parse_concept(ext);
        } else {
          parse_rel(ext);
        }
      });
      if (!diagnostics_.empty()) return std::nullopt;
      return ext;
    } catch (const SyntaxFailure&) {
      return std::nullopt;
    }
  }

 private:
  // Thrown inside a declaration; caught by parse_body, which resynchronises.
  struct DeclFailure {};

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() {
    const Token& t = tokens_[pos_];
    if (t.kind != TokenKind::End) ++pos_;
    return t;
  }

  void report(const SourceSpan& span, ParseCode code, std::string message) {
    diagnostics_.push_back({span, code, std::move(message)});
  }

  [[noreturn]] void fail_header(const Token& t, std::string expected) {
    if (t.kind != TokenKind::Invalid) {
      report(t.span, ParseCode::SyntaxError, "expected " + expected + describe_found(t));
    }
    throw SyntaxFailure{};
  }

  [[noreturn]] void fail_decl(const Token& t, ParseCode code, std::string message) {
    if (t.kind != TokenKind::Invalid) report(t.span, code, std::move(message));
    throw DeclFailure{};
  }

  static std::string describe_found(const Token& t) {
    switch (t.kind) {
      case TokenKind::Word: return ", found '" + t.text + "'";
      case TokenKind::String: return ", found a string";
      case TokenKind::LBrace: return ", found '{'";
      case TokenKind::RBrace: return ", found '}'";
      case TokenKind::End: return ", found end of input";
      case TokenKind::Invalid: return "";
    }
    return "";
  }

  void expect(TokenKind kind, const std::string& what) {
    const Token& t = peek();
    if (t.kind != kind) fail_header(t, what);
    take();
  }

  void expect_keyword(std::string_view keyword) {
    const Token& t = peek();
    if (t.kind == TokenKind::Word && t.text == keyword) {
      take();
      return;
    }
    if (t.kind == TokenKind::Word && !is_keyword(t.text)) {
      report(t.span, ParseCode::UnknownKeyword,
             "unknown keyword '" + t.text + "', expected '" + std::string(keyword) + "'");
      throw SyntaxFailure{};
    }
    fail_header(t, "'" + std::string(keyword) + "'");
  }

  std::string expect_string(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::String) fail_header(t, what + " string");
    return take().text;
  }

  // Inside declarations.
  void decl_keyword(std::string_view keyword) {
    const Token& t = peek();
    if (t.kind == TokenKind::Word && t.text == keyword) {
      take();
      return;
    }
    if (t.kind == TokenKind::Word && !is_keyword(t.text) && !is_upper_camel(t.text)) {
      fail_decl(t, ParseCode::UnknownKeyword,
                "unknown keyword '" + t.text + "', expected '" + std::string(keyword) + "'");
    }
    fail_decl(t, ParseCode::SyntaxError,
              "expected '" + std::string(keyword) + "'" + describe_found(t));
  }

  const Token& decl_ident(const std::string& what) {
    const Token& t = peek();
    if (t.kind == TokenKind::Word && is_upper_camel(t.text)) return take();
    if (t.kind == TokenKind::Word && !is_keyword(t.text)) {
      take();
      fail_decl(t, ParseCode::BadIdentifier,
                "'" + t.text + "' is not a valid identifier for " + what +
                    " (expected [A-Z][A-Za-z0-9]*)");
    }
    fail_decl(t, ParseCode::SyntaxError, "expected " + what + describe_found(t));
  }

  std::string decl_string(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::String) {
      fail_decl(t, ParseCode::SyntaxError, "expected " + what + " string" + describe_found(t));
    }
    return take().text;
  }

  RelationshipKind decl_edge_kind() {
    const Token& t = peek();
    if (t.kind == TokenKind::Word && (t.text == "uses" || t.text == "follows")) {
      take();
      return t.text == "uses" ? RelationshipKind::Uses : RelationshipKind::Follows;
    }
    if (t.kind == TokenKind::Word && !is_keyword(t.text) && !is_upper_camel(t.text)) {
      fail_decl(t, ParseCode::UnknownKeyword,
                "unknown keyword '" + t.text + "', expected 'uses' or 'follows'");
    }
    fail_decl(t, ParseCode::SyntaxError, "expected 'uses' or 'follows'" + describe_found(t));
  }

  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::Word && peek().text == word;
  }

  template <typename Handler>
  void parse_body(std::initializer_list<std::string_view> decl_keywords, Handler&& handler) {
    const auto starts_decl = [&](const Token& t) {
      return t.kind == TokenKind::Word &&
             std::find(decl_keywords.begin(), decl_keywords.end(), t.text) !=
                 decl_keywords.end();
    };
    while (true) {
      const Token& t = peek();
      if (t.kind == TokenKind::RBrace) {
        take();
        break;
      }
      if (t.kind == TokenKind::End) {
        report(t.span, ParseCode::SyntaxError, "expected '}' before end of input");
        throw SyntaxFailure{};
      }
      try {
        if (starts_decl(t)) {
          const std::string keyword = take().text;
          handler(keyword);
          continue;
        }
        if (t.kind == TokenKind::Word && !is_keyword(t.text) && !is_upper_camel(t.text)) {
          fail_decl(t, ParseCode::UnknownKeyword, "unknown keyword '" + t.text + "'");
        }
        fail_decl(t, ParseCode::SyntaxError, "expected a declaration" + describe_found(t));
      } catch (const DeclFailure&) {
        // Skip the offending token, then everything up to the next declaration.
        if (!starts_decl(peek()) && peek().kind != TokenKind::RBrace) take();
        while (!starts_decl(peek()) && peek().kind != TokenKind::RBrace &&
               peek().kind != TokenKind::End) {
          take();
        }
      }
    }
    const Token& trailing = peek();
    if (trailing.kind != TokenKind::End) {
      if (trailing.kind != TokenKind::Invalid) {
        report(trailing.span, ParseCode::SyntaxError, "unexpected content after '}'");
      }
      throw SyntaxFailure{};
    }
  }

  void parse_concept(MetamodelExtension& ext) {
    const Token& id = decl_ident("concept id");
    decl_keyword("kind");
    const Token& kind_token = peek();
    std::optional<ConceptKind> kind;
    if (kind_token.kind == TokenKind::Word) kind = parse_concept_kind(kind_token.text);
    if (!kind) {
      if (kind_token.kind == TokenKind::Word && !is_keyword(kind_token.text)) {
        take();
        fail_decl(kind_token, ParseCode::UnknownKeyword,
                  "unknown concept kind '" + kind_token.text + "'");
      }
      fail_decl(kind_token, ParseCode::SyntaxError,
                "expected task, work-product, principle or phase" + describe_found(kind_token));
    }
    take();

    Concept c;
    c.id = ConceptId{id.text};
    c.display_name = display_name_from_id(id.text);
    c.kind = *kind;
    if (at_word("phase")) {
      take();
      c.phase = ConceptId{decl_ident("phase id").text};
    }
    if (at_word("specializes")) {
      take();
      c.parent = ConceptId{decl_ident("parent concept id").text};
    }
    if (at_word("doc")) {
      take();
      c.definition = decl_string("definition");
    }

    const bool duplicate = std::any_of(ext.new_concepts.begin(), ext.new_concepts.end(),
                                       [&](const Concept& other) { return other.id == c.id; });
    if (duplicate) {
      report(id.span, ParseCode::DuplicateDecl, "concept '" + id.text + "' declared twice");
      return;
    }
    ext.new_concepts.push_back(std::move(c));
  }

  void parse_rel(MetamodelExtension& ext) {
    const Token& src = decl_ident("source concept id");
    const RelationshipKind kind = decl_edge_kind();
    const Token& dst = decl_ident("target concept id");
    if (src.text == dst.text) {
      report(dst.span, ParseCode::SelfReference, "relationship from '" + src.text + "' to itself");
      return;
    }
    Relationship rel{kind, ConceptId{src.text}, ConceptId{dst.text}};
    if (std::find(ext.new_relationships.begin(), ext.new_relationships.end(), rel) !=
        ext.new_relationships.end()) {
      report(src.span, ParseCode::DuplicateDecl, "relationship declared twice");
      return;
    }
    ext.new_relationships.push_back(rel);
  }

  void parse_activity(InstanceModel& model) {
    const Token& id = decl_ident("activity id");
    decl_keyword("instance-of");
    const Token& concept_token = decl_ident("concept id");
    Activity a{ActivityId{id.text}, concept_token.text, std::nullopt};
    if (at_word("note")) {
      take();
      a.note = decl_string("note");
    }
    if (!model.add_activity(std::move(a))) {
      report(id.span, ParseCode::DuplicateDecl, "activity '" + id.text + "' declared twice");
    }
  }

  void parse_edge() {
    const Token& src = decl_ident("source activity id");
    const RelationshipKind kind = decl_edge_kind();
    const Token& dst = decl_ident("target activity id");
    pending_edges_.push_back({kind, src, dst});
  }

  // Edges may precede the activities they mention, so endpoints are
  // checked once the whole body has been read.
  void check_model_edges(InstanceModel& model) {
    for (const PendingEdge& e : pending_edges_) {
      bool ok = true;
      for (const Token* end : {&e.source, &e.target}) {
        if (model.find(ActivityId{end->text}) == nullptr) {
          report(end->span, ParseCode::DanglingReference,
                 "edge endpoint '" + end->text + "' is not a declared activity");
          ok = false;
        }
      }
      if (!ok) continue;
      if (e.source.text == e.target.text) {
        report(e.target.span, ParseCode::SelfReference,
               "edge from '" + e.source.text + "' to itself");
        continue;
      }
      if (!model.add_edge({e.kind, ActivityId{e.source.text}, ActivityId{e.target.text}})) {
        report(e.source.span, ParseCode::DuplicateDecl, "edge declared twice");
      }
    }
  }

  struct PendingEdge {
    RelationshipKind kind;
    Token source;
    Token target;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic>& diagnostics_;
  std::vector<PendingEdge> pending_edges_;
};

SourceSpan span_at_offset(std::string_view text, std::size_t offset) {
  SourceSpan span{1, 1, 1};
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++span.line;
      span.column = 1;
    } else {
      ++span.column;
    }
  }
  return span;
}

template <typename T, typename ParseFn>
ParseResult<T> run_parser(std::string_view text, ParseFn&& parse) {
  ParseResult<T> result;
  if (const auto bad = find_invalid_utf8(text)) {
    result.diagnostics.push_back(
        {span_at_offset(text, *bad), ParseCode::SyntaxError, "input is not valid UTF-8"});
    return result;
  }
  std::vector<ParseDiagnostic> diagnostics;
  auto tokens = Lexer(text).run(diagnostics);
  Parser parser(std::move(tokens), diagnostics);
  auto value = parse(parser);
  if (diagnostics.empty() && value) {
    result.value = std::move(value);
  } else {
    if (diagnostics.empty()) {
      diagnostics.push_back({{1, 1, 1}, ParseCode::SyntaxError, "malformed input"});
    }
    result.diagnostics = std::move(diagnostics);
  }
  return result;
}

std::string quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

template <typename Item>
bool source_kind_target_less(const Item& a, const Item& b) {
  const auto key = [](const Item& x) {
    return std::make_tuple(x.source.str(), to_string(x.kind), x.target.str());
  };
  return key(a) < key(b);
}

}  // namespace

ParseResult<MetamodelExtension> parse_extension(std::string_view text) {
  return run_parser<MetamodelExtension>(text, [](Parser& p) { return p.parse_extension(); });
}

ParseResult<InstanceModel> parse_model(std::string_view text) {
  return run_parser<InstanceModel>(text, [](Parser& p) { return p.parse_model(); });
}

std::string serialize(const InstanceModel& model) {
  std::string out = "model " + quote(model.name()) + " conforms " + quote(model.conforms_to()) +
                    " {\n";
  for (const Activity& a : model.activities()) {
    out += "  activity " + a.id.str() + " instance-of " + a.instance_of;
    if (a.note) out += " note " + quote(*a.note);
    out += "\n";
  }
  std::vector<Edge> edges(model.edges().begin(), model.edges().end());
  std::sort(edges.begin(), edges.end(), source_kind_target_less<Edge>);
  for (const Edge& e : edges) out += "  edge " + describe(e) + "\n";
  out += "}\n";
  return out;
}

std::string serialize(const MetamodelExtension& extension) {
  std::string out = "metamodel " + quote(extension.version) + " extends " +
                    quote(extension.base) + " {\n";
  for (const Concept& c : extension.new_concepts) {
    out += "  concept " + c.id.str() + " kind " + std::string(to_string(c.kind));
    if (c.phase) out += " phase " + c.phase->str();
    if (c.parent) out += " specializes " + c.parent->str();
    if (!c.definition.empty()) out += " doc " + quote(c.definition);
    out += "\n";
  }
  auto rels = extension.new_relationships;
  std::sort(rels.begin(), rels.end(), source_kind_target_less<Relationship>);
  for (const Relationship& r : rels) out += "  rel " + describe(r) + "\n";
  out += "}\n";
  return out;
}

}  // namespace migmeta
