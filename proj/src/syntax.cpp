// syntax.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/syntax.hpp"

#include <cctype>
#include <vector>

namespace skc {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Parser {
 public:
  Parser(TermStore& store, std::string_view text, const ParseOptions& options)
      : store_(store), text_(text), options_(options) {}

  TermId run() {
    skip_space();
    if (at_end()) throw ParseError("empty input", 0);
    TermId t = options_.notation == Notation::Paren ? parse_paren(false) : parse_bracket();
    skip_space();
    if (!at_end()) throw ParseError(unexpected(peek()), pos_);
    return t;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  static std::string unexpected(char c) { return std::string("unexpected character '") + c + "'"; }

  // Exact name first, then the case alias onto a registered basis atom,
  // then auto-registration as inert.
  AtomId resolve(std::string_view name, std::size_t at) {
    if (options_.c_means_k && (name == "C" || name == "c")) {
      if (auto k = store_.find_atom("K"); k && store_.atom_kind(*k) == AtomKind::Basis) return *k;
    }
    if (auto exact = store_.find_atom(name)) return *exact;
    if (name.size() == 1) {
      char c = name[0];
      char other = is_lower(c) ? static_cast<char>(std::toupper(c)) : static_cast<char>(std::tolower(c));
      if (other != c && (std::string_view("SKIJskij").find(c) != std::string_view::npos)) {
        if (auto alias = store_.find_atom(std::string_view(&other, 1));
            alias && store_.atom_kind(*alias) == AtomKind::Basis)
          return *alias;
      }
    }
    if (is_upper(name[0]) || is_lower(name[0])) return store_.add_atom(name, AtomKind::Inert);
    throw ParseError(unexpected(name[0]), at);
  }

  // A maximal lowercase run is one atom only if the whole run is already
  // registered; otherwise it splits into single-letter atoms. Multi-letter
  // names therefore have to be introduced delimited (or via the API).
  void lex_lower_run(std::vector<TermId>& items) {
    std::size_t start = pos_;
    while (!at_end() && (is_lower(peek()) || is_digit(peek()))) ++pos_;
    std::string_view run = text_.substr(start, pos_ - start);
    if (run.size() > 1 && store_.find_atom(run)) {
      items.push_back(store_.leaf(store_.atom_id(run)));
      return;
    }
    for (std::size_t i = 0; i < run.size(); ++i) {
      if (is_digit(run[i]))
        throw ParseError("a name cannot start with a digit", start + i);
      items.push_back(store_.leaf(resolve(run.substr(i, 1), start + i)));
    }
  }

  TermId parse_paren(bool inside) {
    std::vector<TermId> items;
    std::size_t open_at = pos_ == 0 ? 0 : pos_ - 1;
    for (;;) {
      skip_space();
      if (at_end()) {
        if (inside) throw ParseError("unclosed '('", open_at);
        break;
      }
      char c = peek();
      if (c == ')') {
        if (!inside) throw ParseError("unmatched ')'", pos_);
        break;
      } else if (c == '(') {
        std::size_t at = pos_;
        ++pos_;
        TermId inner = parse_paren(true);
        skip_space();
        if (at_end() || peek() != ')') throw ParseError("unclosed '('", at);
        ++pos_;
        items.push_back(inner);
      } else if (is_upper(c)) {
        items.push_back(store_.leaf(resolve(text_.substr(pos_, 1), pos_)));
        ++pos_;
      } else if (is_lower(c)) {
        lex_lower_run(items);
      } else {
        throw ParseError(unexpected(c), pos_);
      }
    }
    if (items.empty())
      throw ParseError("empty expression", inside ? pos_ : 0);
    return fold_spine(store_, items.front(), std::span(items).subspan(1));
  }

  std::string lex_bracket_name() {
    std::size_t start = pos_;
    char c = peek();
    if (is_upper(c)) {
      ++pos_;
      return std::string(1, c);
    }
    if (!is_lower(c)) throw ParseError(unexpected(c), pos_);
    while (!at_end() && (is_lower(peek()) || is_digit(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  TermId parse_bracket() {
    skip_space();
    if (at_end()) throw ParseError("expected a name", pos_);
    std::size_t name_at = pos_;
    std::string name = lex_bracket_name();
    TermId t = store_.leaf(resolve(name, name_at));
    for (;;) {
      skip_space();
      if (at_end() || peek() != '[') break;
      std::size_t at = pos_;
      ++pos_;
      TermId inner = parse_bracket();
      skip_space();
      if (at_end() || peek() != ']') throw ParseError("unclosed '['", at);
      ++pos_;
      t = store_.app(t, inner);
    }
    return t;
  }

  TermStore& store_;
  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

class ParenPrinter {
 public:
  explicit ParenPrinter(const TermStore& store) : store_(store) {}

  std::string take(TermId t) {
    visit(t);
    return std::move(out_);
  }

 private:
  void visit(TermId t) {
    if (store_.is_leaf(t)) {
      emit_name(store_.atom_name(store_.leaf_atom(t)));
      return;
    }
    visit(store_.fn(t));
    TermId a = store_.arg(t);
    if (store_.is_leaf(a)) {
      emit_name(store_.atom_name(store_.leaf_atom(a)));
    } else {
      out_.push_back('(');
      last_name_len_ = 0;
      visit(a);
      out_.push_back(')');
      last_name_len_ = 0;
    }
  }

  // Two adjacent names merge into one lexer run when both sides are
  // lowercase-ish; a space is needed only if either name is multi-letter.
  void emit_name(const std::string& name) {
    if (last_name_len_ > 0 && (last_name_len_ > 1 || name.size() > 1) && !out_.empty() &&
        (is_lower(out_.back()) || is_digit(out_.back())) && (is_lower(name[0]) || is_digit(name[0])))
      out_.push_back(' ');
    out_ += name;
    last_name_len_ = name.size();
  }

  const TermStore& store_;
  std::string out_;
  std::size_t last_name_len_ = 0;
};

void print_bracket(const TermStore& store, TermId t, std::string& out) {
  if (store.is_leaf(t)) {
    const std::string& name = store.atom_name(store.leaf_atom(t));
    if (name.size() == 1 && (name[0] == 'S' || name[0] == 'K' || name[0] == 'I' || name[0] == 'J'))
      out.push_back(static_cast<char>(std::tolower(name[0])));
    else
      out += name;
    return;
  }
  print_bracket(store, store.fn(t), out);
  out.push_back('[');
  print_bracket(store, store.arg(t), out);
  out.push_back(']');
}

}  // namespace

TermId parse_term(TermStore& store, std::string_view text, const ParseOptions& options) {
  return Parser(store, text, options).run();
}

std::string print_term(const TermStore& store, TermId t, Notation notation) {
  if (notation == Notation::Paren) return ParenPrinter(store).take(t);
  std::string out;
  print_bracket(store, t, out);
  return out;
}

}  // namespace skc
