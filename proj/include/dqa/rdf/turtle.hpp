#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dqa/rdf/graph.hpp"
#include "dqa/rdf/term.hpp"

namespace dqa::rdf {

struct ParseError : std::runtime_error {
  size_t line, column;
  ParseError(const std::string& msg, size_t line_, size_t col_)
      : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                           std::to_string(col_) + ": " + msg),
        line(line_),
        column(col_) {}
};

enum class RdfFormat { Turtle, NTriples };

namespace detail {

inline bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

inline bool is_pn_chars_base(uint32_t c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c >= 0x80;
}

inline bool is_pn_chars(uint32_t c) {
  return is_pn_chars_base(c) || c == '_' || c == '-' ||
         (c >= '0' && c <= '9') || c == 0xB7;
}

inline void append_utf8(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// RFC 3986 reference resolution, enough for RDF document bases.
struct IriParts {
  std::string scheme, authority, path, query, fragment;
  bool has_authority = false, has_query = false, has_fragment = false;
};

inline IriParts split_iri(std::string_view iri) {
  IriParts p;
  auto rest = iri;
  auto colon = rest.find(':');
  auto nonscheme = rest.find_first_of("/?#");
  if (colon != std::string_view::npos &&
      (nonscheme == std::string_view::npos || colon < nonscheme)) {
    p.scheme = std::string(rest.substr(0, colon));
    rest = rest.substr(colon + 1);
  }
  if (rest.size() >= 2 && rest[0] == '/' && rest[1] == '/') {
    rest = rest.substr(2);
    auto end = rest.find_first_of("/?#");
    p.has_authority = true;
    p.authority = std::string(rest.substr(0, end));
    rest = end == std::string_view::npos ? std::string_view() : rest.substr(end);
  }
  auto q = rest.find_first_of("?#");
  p.path = std::string(rest.substr(0, q));
  rest = q == std::string_view::npos ? std::string_view() : rest.substr(q);
  if (!rest.empty() && rest[0] == '?') {
    p.has_query = true;
    auto f = rest.find('#');
    p.query = std::string(rest.substr(1, f == std::string_view::npos
                                             ? std::string_view::npos
                                             : f - 1));
    rest = f == std::string_view::npos ? std::string_view() : rest.substr(f);
  }
  if (!rest.empty() && rest[0] == '#') {
    p.has_fragment = true;
    p.fragment = std::string(rest.substr(1));
  }
  return p;
}

inline std::string remove_dot_segments(std::string in) {
  std::string out;
  std::string_view v(in);
  while (!v.empty()) {
    if (v.rfind("../", 0) == 0) {
      v.remove_prefix(3);
    } else if (v.rfind("./", 0) == 0) {
      v.remove_prefix(2);
    } else if (v.rfind("/./", 0) == 0) {
      v.remove_prefix(2);
    } else if (v == "/.") {
      v = "/";
    } else if (v.rfind("/../", 0) == 0 || v == "/..") {
      v = v == "/.." ? std::string_view("/") : v.substr(3);
      auto slash = out.rfind('/');
      out.resize(slash == std::string::npos ? 0 : slash);
    } else if (v == "." || v == "..") {
      v = {};
    } else {
      size_t next = v.find('/', 1);
      out += v.substr(0, next);
      v = next == std::string_view::npos ? std::string_view() : v.substr(next);
    }
  }
  return out;
}

inline std::string rebuild(const IriParts& p) {
  std::string out;
  if (!p.scheme.empty()) {
    out += p.scheme;
    out += ':';
  }
  if (p.has_authority) {
    out += "//";
    out += p.authority;
  }
  out += p.path;
  if (p.has_query) {
    out += '?';
    out += p.query;
  }
  if (p.has_fragment) {
    out += '#';
    out += p.fragment;
  }
  return out;
}

inline std::string resolve_iri(const std::string& base,
                               const std::string& ref) {
  IriParts r = split_iri(ref);
  if (!r.scheme.empty()) {
    r.path = remove_dot_segments(r.path);
    return rebuild(r);
  }
  IriParts b = split_iri(base);
  IriParts t;
  t.scheme = b.scheme;
  if (r.has_authority) {
    t.has_authority = true;
    t.authority = r.authority;
    t.path = remove_dot_segments(r.path);
    t.has_query = r.has_query;
    t.query = r.query;
  } else {
    t.has_authority = b.has_authority;
    t.authority = b.authority;
    if (r.path.empty()) {
      t.path = b.path;
      t.has_query = r.has_query ? true : b.has_query;
      t.query = r.has_query ? r.query : b.query;
    } else {
      if (r.path[0] == '/') {
        t.path = remove_dot_segments(r.path);
      } else {
        std::string merged;
        if (b.has_authority && b.path.empty()) {
          merged = "/" + r.path;
        } else {
          auto slash = b.path.rfind('/');
          merged = (slash == std::string::npos
                        ? std::string()
                        : b.path.substr(0, slash + 1)) +
                   r.path;
        }
        t.path = remove_dot_segments(merged);
      }
      t.has_query = r.has_query;
      t.query = r.query;
    }
  }
  t.has_fragment = r.has_fragment;
  t.fragment = r.fragment;
  return rebuild(t);
}

}  // namespace detail

// Recursive-descent Turtle parser. N-Triples documents are a syntactic
// subset of Turtle, so both formats share this implementation; the format
// argument is kept for interface symmetry and error reporting.
class TurtleParser {
 public:
  TurtleParser(std::string_view input, Graph& out,
               std::optional<std::string> base = std::nullopt)
      : in_(input), graph_(out) {
    if (base) base_ = *base;
  }

  void parse() {
    skip_ws();
    while (!eof()) {
      parse_statement();
      skip_ws();
    }
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col());
  }

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return pos_ < in_.size() ? in_[pos_] : '\0'; }
  char peek(size_t ahead) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }

  char get() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  size_t col() const { return pos_ - line_start_ + 1; }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (detail::is_ws(c)) {
        get();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool match_keyword(std::string_view kw) {
    if (in_.size() - pos_ < kw.size()) return false;
    for (size_t i = 0; i < kw.size(); ++i) {
      char a = in_[pos_ + i], b = kw[i];
      if (std::tolower(static_cast<unsigned char>(a)) !=
          std::tolower(static_cast<unsigned char>(b)))
        return false;
    }
    char after = pos_ + kw.size() < in_.size() ? in_[pos_ + kw.size()] : ' ';
    if (!detail::is_ws(after) && after != '<' && after != '#') return false;
    pos_ += kw.size();
    return true;
  }

  void parse_statement() {
    if (peek() == '@') {
      get();
      if (match_keyword("prefix")) {
        parse_prefix_decl(true);
      } else if (match_keyword("base")) {
        parse_base_decl(true);
      } else {
        fail("unknown directive");
      }
      return;
    }
    // SPARQL-style directives (case-insensitive, no trailing dot).
    size_t save = pos_;
    if (match_keyword("PREFIX")) {
      parse_prefix_decl(false);
      return;
    }
    pos_ = save;
    if (match_keyword("BASE")) {
      parse_base_decl(false);
      return;
    }
    pos_ = save;
    parse_triples();
    skip_ws();
    expect('.');
  }

  void parse_prefix_decl(bool turtle_style) {
    skip_ws();
    std::string prefix = parse_pname_ns();
    skip_ws();
    std::string iri = parse_iri_ref();
    graph_.prefixes()[prefix] = iri;
    if (turtle_style) {
      skip_ws();
      expect('.');
    }
  }

  void parse_base_decl(bool turtle_style) {
    skip_ws();
    base_ = parse_iri_ref();
    if (turtle_style) {
      skip_ws();
      expect('.');
    }
  }

  void parse_triples() {
    Term subject;
    if (peek() == '[') {
      // Either an anonymous subject with a property list or a lone [].
      subject = parse_blank_node_property_list();
      skip_ws();
      if (peek() == '.') return;  // [ p o ] .
    } else if (peek() == '(') {
      subject = parse_collection();
    } else {
      subject = parse_term(/*as_subject=*/true);
    }
    skip_ws();
    parse_predicate_object_list(subject);
  }

  void parse_predicate_object_list(const Term& subject) {
    while (true) {
      Term predicate = parse_verb();
      skip_ws();
      parse_object_list(subject, predicate);
      skip_ws();
      if (peek() == ';') {
        get();
        skip_ws();
        // A ';' may be trailing.
        if (peek() == '.' || peek() == ']' || peek() == ';') {
          while (peek() == ';') {
            get();
            skip_ws();
          }
          return;
        }
        continue;
      }
      return;
    }
  }

  void parse_object_list(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = parse_object();
      graph_.insert(subject, predicate, object);
      skip_ws();
      if (peek() == ',') {
        get();
        skip_ws();
        continue;
      }
      return;
    }
  }

  Term parse_verb() {
    if (peek() == 'a') {
      char after = peek(1);
      if (detail::is_ws(after) || after == '<' || after == '[' ||
          after == '#') {
        get();
        return Term::iri(vocab::rdf::type);
      }
    }
    Term t = parse_term(true);
    if (!t.is_iri()) fail("predicate must be an IRI");
    return t;
  }

  Term parse_object() {
    char c = peek();
    if (c == '[') return parse_blank_node_property_list();
    if (c == '(') return parse_collection();
    return parse_term(false);
  }

  Term parse_blank_node_property_list() {
    expect('[');
    Term node = fresh_bnode();
    skip_ws();
    if (peek() == ']') {
      get();
      return node;
    }
    parse_predicate_object_list(node);
    skip_ws();
    expect(']');
    return node;
  }

  Term parse_collection() {
    expect('(');
    skip_ws();
    std::vector<Term> items;
    while (peek() != ')') {
      if (eof()) fail("unterminated collection");
      items.push_back(parse_object());
      skip_ws();
    }
    get();  // ')'
    Term head = Term::iri(vocab::rdf::nil);
    for (auto it = items.rbegin(); it != items.rend(); ++it) {
      Term cell = fresh_bnode();
      graph_.insert(cell, Term::iri(vocab::rdf::first), *it);
      graph_.insert(cell, Term::iri(vocab::rdf::rest), head);
      head = cell;
    }
    return head;
  }

  Term parse_term(bool as_subject) {
    char c = peek();
    if (c == '<') return Term::iri(parse_iri_ref());
    if (c == '_') return parse_blank_label();
    if (!as_subject) {
      if (c == '"' || c == '\'') return parse_literal();
      if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9'))
        return parse_numeric();
      if (match_bool("true")) return Term::literal("true", vocab::xsd::boolean);
      if (match_bool("false"))
        return Term::literal("false", vocab::xsd::boolean);
    }
    return parse_prefixed_name();
  }

  bool match_bool(std::string_view kw) {
    if (in_.compare(pos_, kw.size(), kw) != 0) return false;
    char after = pos_ + kw.size() < in_.size() ? in_[pos_ + kw.size()] : ' ';
    if (detail::is_pn_chars(static_cast<unsigned char>(after)) ||
        after == ':' || after == '.')
      return false;
    pos_ += kw.size();
    return true;
  }

  std::string parse_iri_ref() {
    expect('<');
    std::string raw;
    while (true) {
      if (eof()) fail("unterminated IRI");
      char c = get();
      if (c == '>') break;
      if (c == '\\') {
        char esc = get();
        if (esc == 'u') {
          detail::append_utf8(raw, parse_hex(4));
        } else if (esc == 'U') {
          detail::append_utf8(raw, parse_hex(8));
        } else {
          fail("invalid escape in IRI");
        }
      } else if (static_cast<unsigned char>(c) <= 0x20) {
        fail("whitespace in IRI");
      } else {
        raw += c;
      }
    }
    return absolutize(raw);
  }

  std::string absolutize(const std::string& raw) {
    if (raw.find(':') != std::string::npos) {
      auto colon = raw.find(':');
      auto other = raw.find_first_of("/?#");
      if (other == std::string::npos || colon < other)
        return raw;  // already absolute
    }
    if (base_.empty())
      fail("relative IRI <" + raw + "> without a base IRI");
    return detail::resolve_iri(base_, raw);
  }

  uint32_t parse_hex(int n) {
    uint32_t v = 0;
    for (int i = 0; i < n; ++i) {
      if (eof()) fail("truncated \\u escape");
      char c = get();
      v <<= 4;
      if (c >= '0' && c <= '9') v |= c - '0';
      else if (c >= 'a' && c <= 'f') v |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v |= c - 'A' + 10;
      else fail("invalid hex digit in escape");
    }
    return v;
  }

  std::string parse_pname_ns() {
    std::string prefix;
    while (!eof() && peek() != ':') {
      char c = peek();
      if (detail::is_ws(c)) fail("expected ':' in prefixed name");
      prefix += get();
    }
    expect(':');
    return prefix;
  }

  Term parse_prefixed_name() {
    std::string prefix;
    size_t start = pos_;
    while (!eof()) {
      char c = peek();
      if (c == ':') break;
      if (!detail::is_pn_chars(static_cast<unsigned char>(c)) && c != '.')
        fail("unexpected character '" + std::string(1, c) + "'");
      prefix += get();
    }
    if (eof()) {
      pos_ = start;
      fail("expected prefixed name");
    }
    get();  // ':'
    if (!prefix.empty() && prefix.back() == '.')
      fail("prefix may not end with '.'");
    auto it = graph_.prefixes().find(prefix);
    if (it == graph_.prefixes().end())
      fail("undeclared prefix '" + prefix + ":'");
    std::string local;
    while (!eof()) {
      char c = peek();
      if (detail::is_pn_chars(static_cast<unsigned char>(c)) || c == ':' ||
          c == '.') {
        local += get();
      } else if (c == '\\') {
        get();
        char esc = get();
        static const std::string allowed = "_~.-!$&'()*+,;=/?#@%";
        if (allowed.find(esc) == std::string::npos)
          fail("invalid local name escape");
        local += esc;
      } else if (c == '%') {
        // Percent triples pass through verbatim.
        local += get();
        for (int i = 0; i < 2; ++i) {
          char h = peek();
          bool hex = (h >= '0' && h <= '9') || (h >= 'a' && h <= 'f') ||
                     (h >= 'A' && h <= 'F');
          if (!hex) fail("invalid percent escape in local name");
          local += get();
        }
      } else {
        break;
      }
    }
    // Trailing dots belong to the statement terminator, not the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    return Term::iri(it->second + local);
  }

  Term parse_blank_label() {
    expect('_');
    expect(':');
    std::string label;
    while (!eof()) {
      char c = peek();
      if (detail::is_pn_chars(static_cast<unsigned char>(c)) || c == '.') {
        label += get();
      } else {
        break;
      }
    }
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (label.empty()) fail("empty blank node label");
    return Term::blank(label);
  }

  // Anonymous nodes get labels outside the typical authored-label space;
  // cross-document merges are kept apart by Graph::absorb suffixing.
  Term fresh_bnode() {
    return Term::blank("anon-" + std::to_string(anon_++));
  }

  Term parse_literal() {
    char quote = get();  // ' or "
    bool long_form = false;
    if (peek() == quote && peek(1) == quote) {
      get();
      get();
      long_form = true;
    } else if (peek() == quote) {
      // Empty short literal.
      get();
      return finish_literal("");
    }
    std::string lex;
    while (true) {
      if (eof()) fail("unterminated string literal");
      char c = get();
      if (c == quote) {
        if (!long_form) break;
        if (peek() == quote && peek(1) == quote) {
          get();
          get();
          break;
        }
        lex += c;
        continue;
      }
      if (c == '\\') {
        char esc = get();
        switch (esc) {
          case 't': lex += '\t'; break;
          case 'b': lex += '\b'; break;
          case 'n': lex += '\n'; break;
          case 'r': lex += '\r'; break;
          case 'f': lex += '\f'; break;
          case '"': lex += '"'; break;
          case '\'': lex += '\''; break;
          case '\\': lex += '\\'; break;
          case 'u': detail::append_utf8(lex, parse_hex(4)); break;
          case 'U': detail::append_utf8(lex, parse_hex(8)); break;
          default: fail("invalid string escape");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r'))
        fail("newline in single-line string");
      lex += c;
    }
    return finish_literal(lex);
  }

  Term finish_literal(std::string lex) {
    if (peek() == '@') {
      get();
      std::string tag;
      while (!eof()) {
        char c = peek();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
            (c >= '0' && c <= '9') || c == '-') {
          tag += get();
        } else {
          break;
        }
      }
      if (tag.empty()) fail("empty language tag");
      return Term::lang_literal(std::move(lex), tag);
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      Term dt = peek() == '<' ? Term::iri(parse_iri_ref())
                              : parse_prefixed_name();
      if (!dt.is_iri()) fail("datatype must be an IRI");
      return Term::literal(std::move(lex), dt.value);
    }
    return Term::plain(std::move(lex));
  }

  Term parse_numeric() {
    std::string lex;
    bool is_double = false, is_decimal = false, any_digit = false;
    if (peek() == '+' || peek() == '-') lex += get();
    while (peek() >= '0' && peek() <= '9') {
      lex += get();
      any_digit = true;
    }
    if (peek() == '.' && peek(1) >= '0' && peek(1) <= '9') {
      is_decimal = true;
      lex += get();
      while (peek() >= '0' && peek() <= '9') {
        lex += get();
        any_digit = true;
      }
    }
    if ((peek() == 'e' || peek() == 'E') && any_digit) {
      is_double = true;
      lex += get();
      if (peek() == '+' || peek() == '-') lex += get();
      if (!(peek() >= '0' && peek() <= '9')) fail("malformed exponent");
      while (peek() >= '0' && peek() <= '9') lex += get();
    }
    if (!any_digit) fail("malformed numeric literal");
    const std::string& dt = is_double    ? vocab::xsd::double_
                            : is_decimal ? vocab::xsd::decimal
                                         : vocab::xsd::integer;
    return Term::literal(std::move(lex), dt);
  }

  std::string_view in_;
  Graph& graph_;
  std::string base_;
  size_t pos_ = 0, line_ = 1, line_start_ = 0;
  size_t anon_ = 0;
};

// Parses a complete document into a fresh graph.
inline Graph load_graph(std::string_view text,
                        RdfFormat format = RdfFormat::Turtle,
                        std::optional<std::string> base = std::nullopt) {
  (void)format;  // N-Triples is a syntactic subset of Turtle
  Graph g;
  TurtleParser p(text, g, std::move(base));
  p.parse();
  return g;
}

}  // namespace dqa::rdf
