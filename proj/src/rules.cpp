// rules.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/rules.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>

#include "skc/syntax.hpp"

namespace skc {

namespace {

// Placeholder leaves are ordinary interned atoms named "$1".."$9"; the '$'
// prefix keeps them out of the parseable namespace.
int placeholder_index(const TermStore& store, TermId t) {
  if (!store.is_leaf(t)) return 0;
  const std::string& name = store.atom_name(store.leaf_atom(t));
  if (name.size() == 2 && name[0] == '$') return name[1] - '0';
  return 0;
}

int max_placeholder(const TermStore& store, TermId t) {
  if (store.is_leaf(t)) return placeholder_index(store, t);
  return std::max(max_placeholder(store, store.fn(t)), max_placeholder(store, store.arg(t)));
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Leading [A-Za-z][a-z0-9]* chunk of a rule lhs; this is the head name.
std::string lhs_head_name(const std::string& lhs) {
  std::size_t i = 0;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto tail = [](char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); };
  if (lhs.empty() || !alpha(lhs[0])) throw std::invalid_argument("rule lhs must start with an atom: " + lhs);
  if (lhs[0] >= 'A' && lhs[0] <= 'Z') return lhs.substr(0, 1);
  while (i < lhs.size() && tail(lhs[i])) ++i;
  return lhs.substr(0, i);
}

// Rewrites x1..x9 leaves into $1..$9 placeholders.
TermId to_template(TermStore& store, TermId t) {
  if (store.is_leaf(t)) {
    const std::string& name = store.atom_name(store.leaf_atom(t));
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '9')
      return placeholder(store, name[1] - '0');
    return t;
  }
  return store.app(to_template(store, store.fn(t)), to_template(store, store.arg(t)));
}

}  // namespace

TermId placeholder(TermStore& store, int index) {
  if (index < 1 || index > 9) throw std::invalid_argument("placeholder index out of range");
  char name[3] = {'$', static_cast<char>('0' + index), 0};
  return store.leaf(store.add_atom(name, AtomKind::Inert));
}

namespace {

TermId instantiate(TermStore& store, TermId tpl, std::span<const TermId> bound) {
  if (store.is_leaf(tpl)) {
    int idx = placeholder_index(store, tpl);
    return idx > 0 ? bound[idx - 1] : tpl;
  }
  return store.app(instantiate(store, store.fn(tpl), bound),
                   instantiate(store, store.arg(tpl), bound));
}

}  // namespace

TermId apply_rule(TermStore& store, const Rule& rule, std::span<const TermId> args) {
  if (static_cast<int>(args.size()) != rule.consumed())
    throw std::invalid_argument("argument count does not match the rule");
  return instantiate(store, rule.result, args.subspan(rule.guard.size()));
}

RuleSet RuleSet::sk(TermStore& store) {
  RuleSet rs("sk");
  AtomId s = store.add_atom("S", AtomKind::Basis);
  AtomId k = store.add_atom("K", AtomKind::Basis);
  TermId x1 = placeholder(store, 1), x2 = placeholder(store, 2), x3 = placeholder(store, 3);
  rs.add(store, {"S", s, {}, 3, store.app(store.app(x1, x3), store.app(x2, x3)), 0});
  rs.add(store, {"K", k, {}, 2, x1, 0});
  return rs;
}

RuleSet RuleSet::ski(TermStore& store) {
  RuleSet rs = sk(store);
  rs.name_ = "ski";
  AtomId i = store.add_atom("I", AtomKind::Basis);
  rs.add(store, {"I", i, {}, 1, placeholder(store, 1), 0});
  return rs;
}

RuleSet RuleSet::j(TermStore& store) {
  RuleSet rs("j");
  AtomId j = store.add_atom("J", AtomKind::Basis);
  TermId jl = store.leaf(j);
  TermId x1 = placeholder(store, 1), x2 = placeholder(store, 2), x3 = placeholder(store, 3);
  // The five-symbol rule must come first: J J J x y also matches the
  // four-symbol pattern, and only this order makes J J J behave like K.
  rs.add(store, {"JJJ", j, {jl, jl}, 2, x1, 0});
  rs.add(store, {"JJ", j, {jl}, 3, store.app(store.app(x1, x3), store.app(x2, x3)), 1});
  return rs;
}

RuleSet RuleSet::load(TermStore& store, std::istream& in, std::string name) {
  RuleSet rs(std::move(name));
  std::string line;
  int line_no = 0;
  int priority = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (auto hash = text.find('#'); hash != std::string::npos) text = trim(text.substr(0, hash));
    if (text.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(line_no) + ")"; };
    std::size_t arrow = text.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("rule line has no '->'" + where());
    std::string lhs = trim(text.substr(0, arrow));
    std::string rhs = trim(text.substr(arrow + 2));
    std::string rule_name;
    if (std::size_t colon = lhs.find(':'); colon != std::string::npos) {
      rule_name = trim(lhs.substr(0, colon));
      lhs = trim(lhs.substr(colon + 1));
    }
    if (lhs.empty() || rhs.empty()) throw std::invalid_argument("rule side is empty" + where());

    // The head has to be basis kind before the lhs is parsed, otherwise the
    // parser would auto-register it inert.
    std::string head_name = lhs_head_name(lhs);
    if (head_name.size() == 2 && head_name[0] == 'x' && head_name[1] >= '1' && head_name[1] <= '9')
      throw std::invalid_argument("rule head cannot be a placeholder" + where());
    AtomId head;
    if (auto existing = store.find_atom(head_name)) {
      head = *existing;
      if (store.atom_kind(head) != AtomKind::Basis)
        throw std::invalid_argument("rule head '" + head_name + "' is already an inert atom" + where());
    } else {
      head = store.add_atom(head_name, AtomKind::Basis);
    }
    for (int i = 1; i <= 9; ++i) {
      char v[3] = {'x', static_cast<char>('0' + i), 0};
      store.add_atom(v, AtomKind::Inert);
    }

    TermId lhs_term, rhs_term;
    try {
      lhs_term = parse_term(store, lhs);
      rhs_term = parse_term(store, rhs);
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string(e.what()) + where());
    }
    Spine sp = spine(store, lhs_term);
    if (sp.head != store.leaf(head)) throw std::invalid_argument("rule lhs head mismatch" + where());
    if (sp.args.empty()) throw std::invalid_argument("rule lhs consumes no arguments" + where());

    std::vector<TermId> guard;
    int arity = 0;
    bool in_placeholders = false;
    for (TermId a : sp.args) {
      TermId converted = to_template(store, a);
      int idx = placeholder_index(store, converted);
      if (idx > 0) {
        in_placeholders = true;
        ++arity;
        if (idx != arity)
          throw std::invalid_argument("placeholders must be x1..xN in order" + where());
      } else {
        if (in_placeholders)
          throw std::invalid_argument("literal arguments must precede placeholders" + where());
        if (max_placeholder(store, converted) > 0)
          throw std::invalid_argument("placeholders cannot sit inside a literal argument" + where());
        guard.push_back(a);
      }
    }
    if (rule_name.empty()) {
      int same_head = 0;
      for (const Rule& r : rs.rules_)
        if (r.head == head) ++same_head;
      rule_name = same_head == 0 ? head_name : head_name + "#" + std::to_string(same_head + 1);
    }
    rs.add(store, {rule_name, head, std::move(guard), arity, to_template(store, rhs_term), priority++});
  }
  if (rs.rules_.empty()) throw std::invalid_argument("rule set '" + rs.name_ + "' is empty");
  return rs;
}

void RuleSet::add(TermStore& store, Rule rule) {
  if (store.atom_kind(rule.head) != AtomKind::Basis)
    throw std::invalid_argument("rule head must be a basis atom");
  if (rule.arity < 0 || rule.arity > 9 || rule.consumed() < 1)
    throw std::invalid_argument("rule arity out of range");
  if (max_placeholder(store, rule.result) > rule.arity)
    throw std::invalid_argument("rule template references a placeholder beyond its arity");
  auto at = std::upper_bound(rules_.begin(), rules_.end(), rule.priority,
                             [](int p, const Rule& r) { return p < r.priority; });
  rules_.insert(at, std::move(rule));
}

const Rule* RuleSet::match(const TermStore& store, TermId node) const {
  if (store.is_leaf(node)) return nullptr;
  Spine sp = spine(store, node);
  if (!store.is_leaf(sp.head)) return nullptr;
  return match_spine(store, store.leaf_atom(sp.head), sp.args);
}

const Rule* RuleSet::match_spine(const TermStore& store, AtomId head,
                                 std::span<const TermId> args) const {
  for (const Rule& r : rules_) {
    if (r.head != head || static_cast<int>(args.size()) != r.consumed()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < r.guard.size(); ++i) {
      if (args[i] != r.guard[i]) {
        ok = false;
        break;
      }
    }
    if (ok) return &r;
  }
  (void)store;
  return nullptr;
}

bool RuleSet::has_rules_for(AtomId head) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const Rule& r) { return r.head == head; });
}

int RuleSet::max_consumed(AtomId head) const {
  int best = 0;
  for (const Rule& r : rules_)
    if (r.head == head) best = std::max(best, r.consumed());
  return best;
}

}  // namespace skc
