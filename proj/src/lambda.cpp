// lambda.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/lambda.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "skc/syntax.hpp"

namespace skc {

LambdaPtr lam_var(std::string name) {
  return std::make_shared<const LambdaTerm>(LambdaTerm{LambdaKind::Var, std::move(name), {}, {}, {}});
}

LambdaPtr lam_abs(std::string binder, LambdaPtr body) {
  return std::make_shared<const LambdaTerm>(
      LambdaTerm{LambdaKind::Abs, std::move(binder), std::move(body), {}, {}});
}

LambdaPtr lam_app(LambdaPtr fn, LambdaPtr arg) {
  return std::make_shared<const LambdaTerm>(
      LambdaTerm{LambdaKind::App, {}, {}, std::move(fn), std::move(arg)});
}

LambdaPtr lam_const(std::string atom) {
  return std::make_shared<const LambdaTerm>(
      LambdaTerm{LambdaKind::Const, std::move(atom), {}, {}, {}});
}

namespace {

void collect_free(const LambdaPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case LambdaKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case LambdaKind::Const:
      return;
    case LambdaKind::App:
      collect_free(t->fn, bound, out);
      collect_free(t->arg, bound, out);
      return;
    case LambdaKind::Abs: {
      auto [it, inserted] = bound.insert(t->name);
      collect_free(t->body, bound, out);
      if (inserted) bound.erase(it);
      return;
    }
  }
}

LambdaPtr subst(const LambdaPtr& t, const std::string& x, const LambdaPtr& v, int& fresh) {
  switch (t->kind) {
    case LambdaKind::Var:
      return t->name == x ? v : t;
    case LambdaKind::Const:
      return t;
    case LambdaKind::App:
      return lam_app(subst(t->fn, x, v, fresh), subst(t->arg, x, v, fresh));
    case LambdaKind::Abs: {
      if (t->name == x) return t;
      std::set<std::string> body_free = free_vars(t->body);
      if (!body_free.count(x)) return t;
      std::string binder = t->name;
      LambdaPtr body = t->body;
      std::set<std::string> value_free = free_vars(v);
      if (value_free.count(binder)) {
        std::string candidate;
        do {
          candidate = t->name + std::to_string(fresh++);
        } while (value_free.count(candidate) || body_free.count(candidate) || candidate == x);
        body = subst(body, binder, lam_var(candidate), fresh);
        binder = candidate;
      }
      return lam_abs(std::move(binder), subst(body, x, v, fresh));
    }
  }
  return t;
}

// Leftmost-outermost beta step; nullptr when t is in normal form.
LambdaPtr beta_step(const LambdaPtr& t, int& fresh) {
  switch (t->kind) {
    case LambdaKind::Var:
    case LambdaKind::Const:
      return nullptr;
    case LambdaKind::Abs:
      if (LambdaPtr b = beta_step(t->body, fresh)) return lam_abs(t->name, std::move(b));
      return nullptr;
    case LambdaKind::App:
      if (t->fn->kind == LambdaKind::Abs) return subst(t->fn->body, t->fn->name, t->arg, fresh);
      if (LambdaPtr f = beta_step(t->fn, fresh)) return lam_app(std::move(f), t->arg);
      if (LambdaPtr a = beta_step(t->arg, fresh)) return lam_app(t->fn, std::move(a));
      return nullptr;
  }
  return nullptr;
}

using BinderDepths = std::unordered_map<std::string, int>;

bool alpha_eq(const LambdaPtr& a, const LambdaPtr& b, BinderDepths& da, BinderDepths& db,
              int depth) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case LambdaKind::Const:
      return a->name == b->name;
    case LambdaKind::Var: {
      auto ia = da.find(a->name);
      auto ib = db.find(b->name);
      if ((ia == da.end()) != (ib == db.end())) return false;
      return ia == da.end() ? a->name == b->name : ia->second == ib->second;
    }
    case LambdaKind::App:
      return alpha_eq(a->fn, b->fn, da, db, depth) && alpha_eq(a->arg, b->arg, da, db, depth);
    case LambdaKind::Abs: {
      auto oa = da.find(a->name) == da.end() ? std::optional<int>{} : da[a->name];
      auto ob = db.find(b->name) == db.end() ? std::optional<int>{} : db[b->name];
      da[a->name] = depth;
      db[b->name] = depth;
      bool eq = alpha_eq(a->body, b->body, da, db, depth + 1);
      if (oa) da[a->name] = *oa; else da.erase(a->name);
      if (ob) db[b->name] = *ob; else db.erase(b->name);
      return eq;
    }
  }
  return false;
}

bool occurs_free(const LambdaPtr& t, const std::string& x) {
  switch (t->kind) {
    case LambdaKind::Var: return t->name == x;
    case LambdaKind::Const: return false;
    case LambdaKind::App: return occurs_free(t->fn, x) || occurs_free(t->arg, x);
    case LambdaKind::Abs: return t->name != x && occurs_free(t->body, x);
  }
  return false;
}

// [x]t over an abstraction-free body.
LambdaPtr bracket(const std::string& x, const LambdaPtr& t, bool optimize) {
  if (t->kind == LambdaKind::Var && t->name == x) return lam_const("I");
  if (!occurs_free(t, x)) return lam_app(lam_const("K"), t);
  // x occurs free and t is not the bare variable, so t is an application.
  if (optimize && t->arg->kind == LambdaKind::Var && t->arg->name == x &&
      !occurs_free(t->fn, x))
    return t->fn;
  return lam_app(lam_app(lam_const("S"), bracket(x, t->fn, optimize)),
                 bracket(x, t->arg, optimize));
}

// Eliminates every abstraction, innermost first.
LambdaPtr strip_abstractions(const LambdaPtr& t, bool optimize) {
  switch (t->kind) {
    case LambdaKind::Var:
    case LambdaKind::Const:
      return t;
    case LambdaKind::App:
      return lam_app(strip_abstractions(t->fn, optimize), strip_abstractions(t->arg, optimize));
    case LambdaKind::Abs:
      return bracket(t->name, strip_abstractions(t->body, optimize), optimize);
  }
  return t;
}

}  // namespace

std::set<std::string> free_vars(const LambdaPtr& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

BetaOutcome beta_normalize(const LambdaPtr& t, int max_steps) {
  BetaOutcome out{t, 0, false};
  int fresh = 0;
  for (;;) {
    LambdaPtr next = beta_step(out.term, fresh);
    if (!next) return out;
    if (out.steps >= max_steps) {
      out.hit_limit = true;
      return out;
    }
    out.term = std::move(next);
    ++out.steps;
  }
}

bool alpha_equal(const LambdaPtr& a, const LambdaPtr& b) {
  BinderDepths da, db;
  return alpha_eq(a, b, da, db, 0);
}

TermId compile_lambda(TermStore& store, const LambdaPtr& t, bool optimize) {
  if (!free_vars(t).empty()) throw std::invalid_argument("cannot compile an open term");
  store.add_atom("S", AtomKind::Basis);
  store.add_atom("K", AtomKind::Basis);
  store.add_atom("I", AtomKind::Basis);
  return lambda_to_term(store, strip_abstractions(t, optimize));
}

TermId to_pure_sk(TermStore& store, TermId t) {
  std::optional<AtomId> i = store.find_atom("I");
  if (!i) return t;
  TermId skk = store.app(store.app(store.leaf(store.add_atom("S", AtomKind::Basis)),
                                   store.leaf(store.add_atom("K", AtomKind::Basis))),
                         store.leaf(store.atom_id("K")));
  TermId i_leaf = store.leaf(*i);
  // Recursion via explicit lambda to keep the leaf/app rebuild local.
  auto rewrite = [&](auto&& self, TermId node) -> TermId {
    if (store.is_leaf(node)) return node == i_leaf ? skk : node;
    return store.app(self(self, store.fn(node)), self(self, store.arg(node)));
  };
  return rewrite(rewrite, t);
}

LambdaPtr church_encode(unsigned n) {
  LambdaPtr body = lam_var("x");
  for (unsigned i = 0; i < n; ++i) body = lam_app(lam_var("f"), body);
  return lam_abs("f", lam_abs("x", std::move(body)));
}

std::optional<unsigned> church_decode(TermStore& store, TermId t, const RuleSet& rules,
                                      const ReduceLimits& limits) {
  TermId succ = store.leaf(store.add_atom("succ", AtomKind::Inert));
  TermId zero = store.leaf(store.add_atom("zero", AtomKind::Inert));
  ReductionOutcome out = reduce(store, rules, store.app(store.app(t, succ), zero), {}, limits);
  if (out.status != ReductionStatus::NormalForm) return std::nullopt;
  unsigned n = 0;
  TermId cur = out.final_term;
  while (!store.is_leaf(cur)) {
    if (store.fn(cur) != succ) return std::nullopt;
    ++n;
    cur = store.arg(cur);
  }
  return cur == zero ? std::optional<unsigned>(n) : std::nullopt;
}

FixedPointCombinators fixed_point_combinators(TermStore& store) {
  TermId y = derived_combinator(store, "Y");
  LambdaPtr half = parse_lambda("\\x. \\y. y (x x y)");
  TermId theta = compile_lambda(store, lam_app(half, half), /*optimize=*/true);
  return {y, theta};
}

namespace {

class LambdaParser {
 public:
  explicit LambdaParser(std::string_view text) : text_(text) {}

  LambdaPtr run() {
    LambdaPtr t = parse_expr();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_lambda() {
    if (pos_ >= text_.size()) return false;
    if (text_[pos_] == '\\') return true;
    return static_cast<unsigned char>(text_[pos_]) == 0xce && pos_ + 1 < text_.size() &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0xbb;
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                   (pos_ > start && text_[pos_] >= '0' && text_[pos_] <= '9')))
      ++pos_;
    if (pos_ == start) throw ParseError("expected a name", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  LambdaPtr parse_expr() {
    skip_ws();
    if (at_lambda()) {
      pos_ += text_[pos_] == '\\' ? 1 : 2;
      std::vector<std::string> binders;
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
        binders.push_back(parse_name());
        skip_ws();
      }
      if (binders.empty()) throw ParseError("expected a binder name", pos_);
      if (pos_ >= text_.size() || text_[pos_] != '.') throw ParseError("expected '.'", pos_);
      ++pos_;
      LambdaPtr body = parse_expr();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it)
        body = lam_abs(*it, std::move(body));
      return body;
    }
    LambdaPtr t = parse_atom(true);
    for (;;) {
      if (LambdaPtr next = parse_atom(false)) t = lam_app(std::move(t), std::move(next));
      else return t;
    }
  }

  // Required atoms throw; optional ones return nullptr at expression ends.
  LambdaPtr parse_atom(bool required) {
    skip_ws();
    if (at_lambda()) {
      // `f \x. b` reads as f applied to the whole lambda, matching convention.
      return parse_expr();
    }
    if (pos_ >= text_.size() || text_[pos_] == ')' || text_[pos_] == '.') {
      if (required) throw ParseError("expected a term", pos_);
      return nullptr;
    }
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      LambdaPtr t = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("unclosed '('", open);
      ++pos_;
      return t;
    }
    if (c >= 'a' && c <= 'z') return lam_var(parse_name());
    if (c >= 'A' && c <= 'Z') {
      ++pos_;
      return lam_const(std::string(1, c));
    }
    if (c == '#') {
      std::size_t start = ++pos_;
      unsigned n = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == start) throw ParseError("expected digits after '#'", start);
      return church_encode(n);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_rec(const LambdaPtr& t, std::string& out, bool as_fn, bool as_arg) {
  switch (t->kind) {
    case LambdaKind::Var:
    case LambdaKind::Const:
      out += t->name;
      return;
    case LambdaKind::Abs: {
      bool parens = as_fn || as_arg;
      if (parens) out += '(';
      out += '\\';
      out += t->name;
      out += ". ";
      print_rec(t->body, out, false, false);
      if (parens) out += ')';
      return;
    }
    case LambdaKind::App: {
      if (as_arg) out += '(';
      print_rec(t->fn, out, true, false);
      out += ' ';
      print_rec(t->arg, out, false, true);
      if (as_arg) out += ')';
      return;
    }
  }
}

}  // namespace

LambdaPtr parse_lambda(std::string_view text) { return LambdaParser(text).run(); }

std::string print_lambda(const LambdaPtr& t) {
  std::string out;
  print_rec(t, out, false, false);
  return out;
}

TermId lambda_to_term(TermStore& store, const LambdaPtr& t) {
  switch (t->kind) {
    case LambdaKind::Abs:
      throw std::invalid_argument("an abstraction cannot embed into a combinator term");
    case LambdaKind::App:
      return store.app(lambda_to_term(store, t->fn), lambda_to_term(store, t->arg));
    case LambdaKind::Var: {
      if (std::optional<AtomId> a = store.find_atom(t->name)) return store.leaf(*a);
      return store.leaf(store.add_atom(t->name, AtomKind::Inert));
    }
    case LambdaKind::Const: {
      if (std::optional<AtomId> a = store.find_atom(t->name)) return store.leaf(*a);
      AtomKind kind = t->name.size() == 1 && t->name[0] >= 'A' && t->name[0] <= 'Z'
                          ? AtomKind::Basis
                          : AtomKind::Inert;
      return store.leaf(store.add_atom(t->name, kind));
    }
  }
  throw std::invalid_argument("malformed lambda term");
}

}  // namespace skc
