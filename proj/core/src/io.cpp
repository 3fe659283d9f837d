#include "ualg/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace ualg {

std::string SourceSpan::to_string() const {
  std::string s = file + ":" + std::to_string(line) + ":" + std::to_string(column_start);
  if (column_end > column_start) s += "-" + std::to_string(column_end);
  return s;
}

const FiniteAlgebra* AlgebraFile::find(std::string_view name) const {
  for (const auto& a : algebras) {
    if (a.name() == name) return &a;
  }
  return nullptr;
}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

std::optional<std::size_t> parse_natural(std::string_view s) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// Character cursor with line/column tracking, shared by the term, equation
// and s-expression readers.
class Cursor {
 public:
  Cursor(std::string_view text, std::string_view file, char comment)
      : text_(text), file_(file), comment_(comment) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == comment_) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  char peek() {
    skip_space();
    return peek_raw();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    const std::size_t col = column_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) advance();
    if (pos_ == start) fail("expected a name" + found());
    last_col_ = col;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t natural() {
    const std::size_t line = line_;
    auto word = identifier();
    auto v = parse_natural(word);
    if (!v) fail_at(line, last_col_, "expected a natural number, got '" + word + "'");
    return *v;
  }

  // term := VAR | NAME | NAME '(' [term (',' term)*] ')'
  Term term() {
    skip_space();
    if (peek_raw() == '?') {
      advance();
      if (!is_ident_char(peek_raw())) fail("expected a variable name after '?'");
      return Term::var(identifier());
    }
    if (!is_ident_char(peek_raw())) fail("expected a term" + found());
    auto name = identifier();
    if (peek_raw() != '(') return Term::app(std::move(name));
    advance();
    std::vector<Term> children;
    if (!accept(')')) {
      do {
        children.push_back(term());
      } while (accept(','));
      expect(')');
    }
    return Term::app(std::move(name), std::move(children));
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(line_, column_, msg); }

  [[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) const {
    throw ParseError(SourceSpan{std::string(file_), line, col, col}, msg);
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

  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::string_view file_;
  char comment_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::size_t last_col_ = 1;
};

struct Word {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Word> words;
};

// Splits into non-empty lines of whitespace-separated words, dropping `#`
// comments.
std::vector<Line> tokenize_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t w = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > w) l.words.push_back({line.substr(w, i - w), w + 1});
    }
    if (!l.words.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text, std::string_view file) {
  const auto lines = tokenize_lines(text);
  const std::size_t last_line = [&] {
    std::size_t n = 1;
    for (char c : text) n += c == '\n';
    if (!text.empty() && text.back() == '\n') --n;
    return n;
  }();
  auto fail = [&](std::size_t line, std::size_t col, std::size_t len, const std::string& msg) -> void {
    throw ParseError(SourceSpan{std::string(file), line, col, col + (len ? len - 1 : 0)}, msg);
  };
  auto fail_word = [&](const Line& l, const Word& w, const std::string& msg) {
    fail(l.number, w.column, w.text.size(), msg);
  };
  auto natural = [&](const Line& l, const Word& w) {
    auto v = parse_natural(w.text);
    if (!v) fail_word(l, w, "expected a natural number, got '" + std::string(w.text) + "'");
    return *v;
  };

  AlgebraFile out;
  std::size_t i = 0;
  if (lines.empty() || lines[0].words[0].text != "signature" || lines[0].words.size() != 1) {
    if (lines.empty()) fail(last_line, 1, 0, "expected 'signature'");
    fail_word(lines[0], lines[0].words[0], "expected 'signature'");
  }
  ++i;
  for (;; ++i) {
    if (i >= lines.size()) fail(last_line, 1, 0, "missing 'end' after signature");
    const auto& l = lines[i];
    if (l.words[0].text == "end" && l.words.size() == 1) break;
    if (l.words[0].text != "op" || l.words.size() != 3) {
      fail_word(l, l.words[0], "expected 'op <name> <arity>' or 'end'");
    }
    if (!is_identifier(l.words[1].text)) fail_word(l, l.words[1], "invalid symbol name");
    if (out.signature.find(l.words[1].text)) fail_word(l, l.words[1], "duplicate symbol");
    out.signature.add(std::string(l.words[1].text), natural(l, l.words[2]));
  }
  ++i;

  std::vector<Violation> violations;
  while (i < lines.size()) {
    const auto& head = lines[i];
    if (head.words[0].text != "algebra" || head.words.size() != 2) {
      fail_word(head, head.words[0], "expected 'algebra <name>'");
    }
    if (!is_identifier(head.words[1].text)) fail_word(head, head.words[1], "invalid algebra name");
    std::string name(head.words[1].text);
    if (out.find(name)) fail_word(head, head.words[1], "duplicate algebra '" + name + "'");
    ++i;
    if (i >= lines.size()) fail(last_line, 1, 0, "expected 'size <n>'");
    const auto& sz = lines[i];
    if (sz.words[0].text != "size" || sz.words.size() != 2) {
      fail_word(sz, sz.words[0], "expected 'size <n>'");
    }
    const std::size_t n = natural(sz, sz.words[1]);
    ++i;
    std::vector<std::optional<std::vector<Elem>>> tables(out.signature.size());
    for (;; ++i) {
      if (i >= lines.size()) fail(last_line, 1, 0, "missing 'end' for algebra '" + name + "'");
      const auto& l = lines[i];
      if (l.words[0].text == "end" && l.words.size() == 1) {
        for (std::size_t op = 0; op < tables.size(); ++op) {
          if (!tables[op]) {
            fail_word(l, l.words[0], "algebra '" + name + "' has no table for '" +
                                         out.signature[op].name + "'");
          }
        }
        break;
      }
      if (l.words[0].text != "op" || l.words.size() < 2) {
        fail_word(l, l.words[0], "expected 'op <name> <entries>' or 'end'");
      }
      auto op = out.signature.find(l.words[1].text);
      if (!op) fail_word(l, l.words[1], "unknown symbol '" + std::string(l.words[1].text) + "'");
      if (tables[*op]) fail_word(l, l.words[1], "duplicate table");
      std::vector<Elem> entries;
      for (std::size_t w = 2; w < l.words.size(); ++w) {
        auto v = natural(l, l.words[w]);
        if (v > std::numeric_limits<Elem>::max()) fail_word(l, l.words[w], "entry too large");
        entries.push_back(static_cast<Elem>(v));
      }
      tables[*op] = std::move(entries);
    }
    ++i;
    std::vector<std::vector<Elem>> t;
    for (auto& tab : tables) t.push_back(std::move(*tab));
    FiniteAlgebra alg(out.signature, n, std::move(t), name);
    for (auto v : validate(alg)) {
      v.symbol = name + (v.symbol.empty() ? "" : "." + v.symbol);
      violations.push_back(std::move(v));
    }
    out.algebras.push_back(std::move(alg));
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return out;
}

std::string emit_algebra_file(const Signature& sig, std::span<const FiniteAlgebra> algebras) {
  std::string s = "signature\n";
  for (const auto& op : sig.ops()) s += "op " + op.name + " " + std::to_string(op.arity) + "\n";
  s += "end\n";
  for (const auto& a : algebras) {
    s += "\nalgebra " + (a.name().empty() ? std::string("A") : a.name()) + "\n";
    s += "size " + std::to_string(a.size()) + "\n";
    for (std::size_t op = 0; op < sig.size(); ++op) {
      s += "op " + sig[op].name;
      for (Elem v : a.table(op)) s += " " + std::to_string(v);
      s += "\n";
    }
    s += "end\n";
  }
  return s;
}

Term parse_term(std::string_view text, std::string_view file) {
  Cursor c(text, file, '\0');
  auto t = c.term();
  if (!c.at_end()) c.fail("unexpected trailing input");
  return t;
}

Equation parse_equation(std::string_view text, std::string_view file) {
  Cursor c(text, file, '\0');
  auto lhs = c.term();
  c.expect('=');
  auto rhs = c.term();
  if (!c.at_end()) c.fail("unexpected trailing input");
  return {std::move(lhs), std::move(rhs)};
}

std::vector<Equation> parse_equation_file(std::string_view text, std::string_view file) {
  std::vector<Equation> out;
  std::size_t start = 0;
  std::size_t line = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view l = text.substr(start, end - start);
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    if (l.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_equation(l, file));
      } catch (const ParseError& e) {
        auto span = e.span();
        span.line = line;
        const std::string msg = e.what();
        throw ParseError(span, msg.substr(msg.find(": ") + 2));
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string emit_equation_file(std::span<const Equation> eqs) {
  std::string s;
  for (const auto& e : eqs) s += e.to_string() + "\n";
  return s;
}

namespace {

Proof read_proof(Cursor& c) {
  c.expect('(');
  const auto head = c.identifier();
  Proof p = Proof::hyp(0);
  if (head == "hyp") {
    p = Proof::hyp(c.natural());
  } else if (head == "refl") {
    p = Proof::refl(c.term());
  } else if (head == "sym") {
    p = Proof::sym(read_proof(c));
  } else if (head == "trans") {
    auto left = read_proof(c);
    p = Proof::trans(std::move(left), read_proof(c));
  } else if (head == "app") {
    auto symbol = c.identifier();
    std::vector<Proof> args;
    while (c.peek() == '(') args.push_back(read_proof(c));
    p = Proof::app(std::move(symbol), std::move(args));
  } else if (head == "sub") {
    auto inner = read_proof(c);
    Substitution sigma;
    // Either one list of bindings or several, each binding `(x term)`.
    while (c.accept('(')) {
      while (c.accept('(')) {
        c.accept('?');
        auto x = c.identifier();
        sigma.set(std::move(x), c.term());
        c.expect(')');
      }
      c.expect(')');
    }
    p = Proof::sub(std::move(inner), std::move(sigma));
  } else {
    c.fail("unknown proof constructor '" + head + "'");
  }
  c.expect(')');
  return p;
}

std::vector<Elem> read_naturals(Cursor& c) {
  std::vector<Elem> out;
  while (c.peek() != ')' && c.peek() != '\0') out.push_back(static_cast<Elem>(c.natural()));
  return out;
}

void expect_keyword(Cursor& c, std::string_view kw) {
  auto w = c.identifier();
  if (w != kw) c.fail("expected '" + std::string(kw) + "', got '" + w + "'");
}

}  // namespace

Proof parse_proof(std::string_view text, std::string_view file) {
  Cursor c(text, file, ';');
  auto p = read_proof(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return p;
}

std::string emit_proof(const Proof& p) { return p.to_string(); }

std::variant<Term, Equation, Proof> parse_term_equation_proof(std::string_view text, ParseKind kind,
                                                              std::string_view file) {
  switch (kind) {
    case ParseKind::Term: return parse_term(text, file);
    case ParseKind::Equation: return parse_equation(text, file);
    case ParseKind::Proof: return parse_proof(text, file);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown parse kind");
}

HspCertificate parse_certificate(std::string_view text, std::string_view file) {
  Cursor c(text, file, ';');
  HspCertificate cert;
  c.expect('(');
  expect_keyword(c, "hsp");
  c.expect('(');
  expect_keyword(c, "factors");
  for (Elem i : read_naturals(c)) cert.factors.push_back(i);
  c.expect(')');
  c.expect('(');
  expect_keyword(c, "gens");
  while (c.accept('(')) {
    cert.generators.push_back(read_naturals(c));
    c.expect(')');
  }
  c.expect(')');
  c.expect('(');
  expect_keyword(c, "image");
  cert.image = read_naturals(c);
  c.expect(')');
  c.expect(')');
  if (!c.at_end()) c.fail("unexpected trailing input");
  return cert;
}

std::string emit_certificate(const HspCertificate& cert) {
  std::string s = "(hsp (factors";
  for (auto i : cert.factors) s += " " + std::to_string(i);
  s += ") (gens";
  for (const auto& g : cert.generators) {
    s += " (";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? " " : "") + std::to_string(g[i]);
    s += ")";
  }
  s += ") (image";
  for (auto v : cert.image) s += " " + std::to_string(v);
  s += "))\n";
  return s;
}

std::string emit_free_sidecar(const FreeAlgebra& f) {
  std::string s;
  for (std::size_t i = 0; i < f.elements().size(); ++i) {
    const auto& e = f.elements()[i];
    s += "elem " + std::to_string(i) + " repr " + e.representative.to_string();
    if (e.generator) s += " gen " + *e.generator;
    s += "\n";
  }
  return s;
}

Caps parse_caps(std::string_view spec, Caps base) {
  std::size_t start = 0;
  while (start < spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    const auto item = spec.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::InvalidArgument, "bad cap override '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = parse_natural(item.substr(eq + 1));
    if (!value || *value == 0) {
      throw Error(ErrorKind::InvalidArgument, "bad cap value in '" + std::string(item) + "'");
    }
    if (key == "carrier") {
      base.carrier = *value;
    } else if (key == "cells") {
      base.cells = *value;
    } else if (key == "search") {
      base.search = *value;
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown cap '" + std::string(key) + "'");
    }
    start = end + 1;
  }
  return base;
}

Caps caps_from_environment() {
  const char* spec = std::getenv("UALG_CAPS");
  if (spec == nullptr || *spec == '\0') return {};
  return parse_caps(spec);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ualg
