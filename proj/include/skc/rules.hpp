// rules.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skc/term.hpp"

namespace skc {

/// Leaf placeholder "$i" (1-based) used inside rule result templates.
TermId placeholder(TermStore& store, int index);

/// One rewrite rule. A rule applies at an application node whose spine head
/// is `head` and which consumes exactly guard.size() + arity arguments: the
/// guard arguments must equal the given literal terms, the remaining `arity`
/// arguments bind the template placeholders $1..$arity in order.
struct Rule {
  std::string name;
  AtomId head;
  std::vector<TermId> guard;
  int arity;
  TermId result;
  int priority;  // lower is tried first

  int consumed() const { return static_cast<int>(guard.size()) + arity; }
};

/// Instantiates the rule's result template. `args` is the full consumed
/// argument list (guard arguments included) of the matched node.
TermId apply_rule(TermStore& store, const Rule& rule, std::span<const TermId> args);

/// Ordered collection of rules. Where match conditions overlap, the rule
/// with the lowest priority (stable on ties) wins, so a node yields at most
/// one redex.
class RuleSet {
 public:
  explicit RuleSet(std::string name) : name_(std::move(name)) {}

  /// S, K.
  static RuleSet sk(TermStore& store);
  /// S, K, I.
  static RuleSet ski(TermStore& store);
  /// The one-combinator basis: J J J x y -> x tried before J J x y z -> x z (y z).
  static RuleSet j(TermStore& store);

  /// Line format: [name:] lhs -> rhs, with placeholders x1..x9 in the lhs
  /// after any literal guard arguments. '#' starts a comment.
  static RuleSet load(TermStore& store, std::istream& in, std::string name);

  /// Validates and inserts. Throws std::invalid_argument when the head is
  /// not a basis atom or the template references a placeholder > arity.
  void add(TermStore& store, Rule rule);

  const std::string& name() const { return name_; }
  std::span<const Rule> rules() const { return rules_; }

  /// First rule (priority order) matching at this node, or nullptr. The node
  /// must consume exactly the rule's argument count for a match.
  const Rule* match(const TermStore& store, TermId node) const;
  const Rule* match_spine(const TermStore& store, AtomId head, std::span<const TermId> args) const;

  bool has_rules_for(AtomId head) const;
  /// Largest argument count any rule for this head consumes; 0 when none.
  int max_consumed(AtomId head) const;

 private:
  std::string name_;
  std::vector<Rule> rules_;
};

}  // namespace skc
