#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toulmin/dsl.hpp"

namespace toulmin {

namespace {

enum class TokenKind { identifier, string, lbrace, rbrace, semicolon, comma, greater, arrow, end };

std::string_view describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::string: return "string";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::comma: return "','";
    case TokenKind::greater: return "'>'";
    case TokenKind::arrow: return "'->'";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

struct Token {
  TokenKind kind;
  std::string text;  // identifier name or unescaped string contents
  SourceSpan span;
};

// Raised inside the parser to unwind to parse_document; never escapes it.
struct Stop {};

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<Diagnostic>& diagnostics)
      : text_(text), diagnostics_(diagnostics) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (at_end()) {
        tokens.push_back({TokenKind::end, {}, here(0)});
        return tokens;
      }
      tokens.push_back(next());
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  SourceSpan here(int length) const { return {line_, column_, length}; }

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
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(std::string_view code, std::string message, SourceSpan span) {
    diagnostics_.push_back(make_error(code, std::move(message), span));
    throw Stop{};
  }

  static bool ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  }
  static bool ident_continue(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '.';
  }

  Token single(TokenKind kind, int length) {
    Token token{kind, {}, here(length)};
    for (int i = 0; i < length; ++i) advance();
    return token;
  }

  Token next() {
    const char c = peek();
    switch (c) {
      case '{': return single(TokenKind::lbrace, 1);
      case '}': return single(TokenKind::rbrace, 1);
      case ';': return single(TokenKind::semicolon, 1);
      case ',': return single(TokenKind::comma, 1);
      case '>': return single(TokenKind::greater, 1);
      case '-':
        if (peek(1) == '>') return single(TokenKind::arrow, 2);
        break;
      case '"': return string();
      default:
        if (ident_start(c)) return identifier();
        break;
    }
    std::string shown = (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7f)
                            ? std::string(1, c)
                            : "byte " + std::to_string(static_cast<unsigned char>(c));
    fail(codes::lex_error, "unexpected character '" + shown + "'", here(1));
  }

  Token identifier() {
    const SourceSpan start = here(0);
    const std::size_t begin = pos_;
    while (!at_end() && ident_continue(peek())) advance();
    Token token{TokenKind::identifier, std::string(text_.substr(begin, pos_ - begin)), start};
    token.span.length = static_cast<int>(pos_ - begin);
    return token;
  }

  Token string() {
    SourceSpan start = here(0);
    const std::size_t begin = pos_;
    advance();  // opening quote
    std::string value;
    while (true) {
      if (at_end()) fail(codes::unterminated_string, "unterminated string", start);
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const SourceSpan escape = here(2);
        advance();
        if (at_end()) fail(codes::unterminated_string, "unterminated string", start);
        char e = peek();
        if (e != '"' && e != '\\') {
          fail(codes::bad_escape, "only \\\" and \\\\ escapes are allowed in strings", escape);
        }
        value.push_back(e);
        advance();
        continue;
      }
      value.push_back(c);
      advance();
    }
    start.length = static_cast<int>(pos_ - begin);
    return Token{TokenKind::string, std::move(value), start};
  }

  std::string_view text_;
  std::vector<Diagnostic>& diagnostics_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<Diagnostic>& diagnostics)
      : tokens_(std::move(tokens)), diagnostics_(diagnostics) {}

  DocumentDraft run() {
    while (peek().kind != TokenKind::end) item();
    return std::move(draft_);
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::identifier && peek().text == word;
  }

  [[noreturn]] void fail(std::string message, SourceSpan span) {
    diagnostics_.push_back(make_error(codes::syntax_error, std::move(message), span));
    throw Stop{};
  }

  [[noreturn]] void unexpected(std::string_view wanted) {
    const Token& token = peek();
    std::string found(describe(token.kind));
    if (token.kind == TokenKind::identifier) found = "'" + token.text + "'";
    fail("expected " + std::string(wanted) + ", found " + found, token.span);
  }

  const Token& expect(TokenKind kind) {
    if (peek().kind != kind) unexpected(describe(kind));
    return take();
  }

  Ref identifier(std::string_view what) {
    if (peek().kind != TokenKind::identifier) unexpected(what);
    const Token& token = take();
    return Ref{token.text, token.span};
  }

  void keyword(std::string_view word) {
    if (!at_word(word)) unexpected("'" + std::string(word) + "'");
    take();
  }

  void optional_semicolon() {
    if (peek().kind == TokenKind::semicolon) take();
  }

  void item() {
    if (at_word("scale")) {
      take();
      scale();
    } else if (at_word("stmt")) {
      take();
      statement();
    } else if (at_word("layout")) {
      take();
      layout();
    } else if (at_word("proof")) {
      take();
      proof();
    } else if (at_word("graph")) {
      take();
      graph();
    } else {
      unexpected("'scale', 'stmt', 'layout', 'proof' or 'graph'");
    }
    optional_semicolon();
  }

  void scale() {
    ScaleDraft scale{identifier("scale name"), {}};
    expect(TokenKind::lbrace);
    scale.levels.push_back(identifier("level name"));
    while (peek().kind == TokenKind::greater) {
      take();
      scale.levels.push_back(identifier("level name"));
    }
    expect(TokenKind::rbrace);
    draft_.scales.push_back(std::move(scale));
  }

  void statement() {
    Ref id = identifier("statement id");
    const Token& text = expect(TokenKind::string);
    draft_.statements.push_back({std::move(id), text.text});
  }

  // Reference or inline statement. Inline text is hoisted to a generated
  // statement named `<owner>__<letter><n>`.
  Ref reference(const std::string& owner, char letter, int& counter) {
    if (peek().kind == TokenKind::string) {
      const Token& token = take();
      Ref ref{owner + "__" + letter + std::to_string(++counter), token.span};
      draft_.statements.push_back({ref, token.text});
      return ref;
    }
    return identifier("statement id or string");
  }

  std::vector<Ref> references(const std::string& owner, char letter) {
    int counter = 0;
    std::vector<Ref> refs{reference(owner, letter, counter)};
    while (peek().kind == TokenKind::comma) {
      take();
      refs.push_back(reference(owner, letter, counter));
    }
    return refs;
  }

  struct SeenFields {
    std::map<std::string, bool> seen;
    int defeaters = 0;
  };

  void once(SeenFields& fields, const Token& name) {
    if (fields.seen[name.text]) {
      diagnostics_.push_back(make_error(codes::duplicate_field,
                                        "field '" + name.text + "' given twice", name.span));
      throw Stop{};
    }
    fields.seen[name.text] = true;
  }

  // Returns false if the next field is not a body field.
  bool body_field(BodyDraft& body, const std::string& owner, SeenFields& fields) {
    if (peek().kind != TokenKind::identifier) return false;
    const Token& name = peek();
    const std::string& word = name.text;
    if (word == "data" || word == "warrant" || word == "backing") {
      once(fields, name);
      take();
      auto refs = references(owner, word[0]);
      if (word == "data") body.data = std::move(refs);
      else if (word == "warrant") body.warrant = std::move(refs);
      else body.backing = std::move(refs);
    } else if (word == "qualifier") {
      once(fields, name);
      take();
      QualifierDraft q{identifier("qualifier level"), std::nullopt};
      if (at_word("on")) {
        take();
        q.scale = identifier("scale name");
      }
      body.qualifier = std::move(q);
    } else if (word == "claim") {
      once(fields, name);
      take();
      int counter = 0;
      body.claim = reference(owner, 'c', counter);
    } else if (word == "defeater") {
      take();
      Ref statement = reference(owner, 'r', fields.defeaters);
      keyword("targets");
      const Token& target = peek();
      auto parsed = target.kind == TokenKind::identifier ? parse_defeater_target(target.text)
                                                         : std::nullopt;
      if (!parsed) unexpected("'conclusion', 'inference' or 'both'");
      take();
      body.defeaters.push_back({std::move(statement), *parsed});
    } else {
      return false;
    }
    expect(TokenKind::semicolon);
    return true;
  }

  void require(const SeenFields& fields, std::initializer_list<std::string_view> names,
               const Ref& owner, std::string_view what) {
    for (auto name : names) {
      auto it = fields.seen.find(std::string(name));
      if (it == fields.seen.end() || !it->second) {
        diagnostics_.push_back(make_error(codes::missing_field,
                                          std::string(what) + " '" + owner.id +
                                              "' has no '" + std::string(name) + "' field",
                                          owner.span, owner.id));
      }
    }
  }

  void layout() {
    LayoutDraft layout{identifier("layout id"), ArgumentKind::regular, {}};
    expect(TokenKind::lbrace);
    SeenFields fields;
    while (peek().kind != TokenKind::rbrace) {
      if (at_word("kind")) {
        once(fields, peek());
        take();
        const Token& kind = peek();
        auto parsed =
            kind.kind == TokenKind::identifier ? parse_argument_kind(kind.text) : std::nullopt;
        if (!parsed) unexpected("'regular' or 'critical'");
        take();
        layout.kind = *parsed;
        expect(TokenKind::semicolon);
      } else if (!body_field(layout.body, layout.id.id, fields)) {
        unexpected("a layout field");
      }
    }
    take();
    require(fields, {"data", "warrant", "qualifier", "claim"}, layout.id, "layout");
    draft_.layouts.push_back(std::move(layout));
  }

  void proof() {
    ProofDraft proof{identifier("proof id"), std::nullopt, {}};
    expect(TokenKind::lbrace);
    bool scale_seen = false;
    while (peek().kind != TokenKind::rbrace) {
      if (at_word("scale")) {
        if (scale_seen) {
          diagnostics_.push_back(
              make_error(codes::duplicate_field, "field 'scale' given twice", peek().span));
          throw Stop{};
        }
        scale_seen = true;
        take();
        proof.scale = identifier("scale name");
        expect(TokenKind::semicolon);
      } else if (at_word("step")) {
        take();
        proof.steps.push_back(step(proof.id.id));
        optional_semicolon();
      } else {
        unexpected("'scale' or 'step'");
      }
    }
    take();
    draft_.proofs.push_back(std::move(proof));
  }

  StepDraft step(const std::string& proof_id) {
    StepDraft step{identifier("step id"), {}};
    expect(TokenKind::lbrace);
    SeenFields fields;
    const std::string owner = proof_id + "." + step.id.id;
    while (peek().kind != TokenKind::rbrace) {
      if (!body_field(step.body, owner, fields)) unexpected("a step field");
    }
    take();
    require(fields, {"data", "warrant", "qualifier", "claim"}, step.id, "step");
    return step;
  }

  void graph() {
    GraphDecl graph;
    graph.name = identifier("graph name");
    expect(TokenKind::lbrace);
    while (peek().kind != TokenKind::rbrace) {
      if (at_word("node")) {
        take();
        Ref id = identifier("node id");
        keyword("kind");
        const Token& kind = peek();
        auto parsed = kind.kind == TokenKind::identifier ? parse_node_kind(kind.text) : std::nullopt;
        if (!parsed) unexpected("'axiom', 'postulate', 'common_notion', 'definition' or 'theorem'");
        take();
        graph.nodes.push_back({std::move(id), *parsed});
      } else if (at_word("edge")) {
        take();
        Ref proved = identifier("node id");
        expect(TokenKind::arrow);
        Ref used = identifier("node id");
        graph.edges.push_back({std::move(proved), std::move(used)});
      } else {
        unexpected("'node' or 'edge'");
      }
      expect(TokenKind::semicolon);
    }
    take();
    draft_.graphs.push_back(std::move(graph));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic>& diagnostics_;
  DocumentDraft draft_;
};

// Span of the first byte that breaks UTF-8 decoding.
SourceSpan first_bad_utf8(std::string_view text) {
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t length = 1;
    const auto lead = static_cast<unsigned char>(text[i]);
    if (lead >= 0xF0) length = 4;
    else if (lead >= 0xE0) length = 3;
    else if (lead >= 0xC0) length = 2;
    if (!is_valid_utf8(text.substr(i, length))) return {line, column, 1};
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      column += static_cast<int>(length);
    }
    i += length;
  }
  return {line, column, 0};
}

}  // namespace

Outcome<Document> parse_document(std::string_view text) {
  Outcome<Document> result;
  if (std::all_of(text.begin(), text.end(), [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
      })) {
    result.diagnostics.push_back(make_error(codes::empty_document, "empty document"));
    return result;
  }
  if (!is_valid_utf8(text)) {
    result.diagnostics.push_back(
        make_error(codes::bad_utf8, "input is not valid UTF-8", first_bad_utf8(text)));
    return result;
  }
  DocumentDraft draft;
  try {
    auto tokens = Lexer(text, result.diagnostics).run();
    draft = Parser(std::move(tokens), result.diagnostics).run();
  } catch (const Stop&) {
    return result;
  }
  if (has_errors(result.diagnostics)) return result;
  return assemble(draft);
}

}  // namespace toulmin
