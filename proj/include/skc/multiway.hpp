// multiway.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "skc/reduce.hpp"
#include "skc/rules.hpp"
#include "skc/term.hpp"

namespace skc {

struct MwBudgets {
  int max_depth = 12;
  std::size_t max_nodes = 20000;
  std::uint64_t max_term_size = 2000;
};

enum class Truncation : std::uint8_t { None, Depth, Nodes, TermSize };

std::string_view to_string(Truncation t);

struct MwEdge {
  TermId from = kInvalidTerm;
  TermId to = kInvalidTerm;
  SpinePath position;
  std::string rule;
};

/// All reachable one-step rewrites, breadth first. Node identity is the
/// canonical term id, so merging paths land on one node.
struct MultiwayGraph {
  std::vector<TermId> nodes;  // discovery (BFS) order; nodes[0] is the root
  std::vector<MwEdge> edges;
  std::unordered_map<TermId, int> depth;
  std::unordered_set<TermId> expanded;
  std::unordered_map<TermId, int> out_degree;
  Truncation truncated = Truncation::None;

  /// Expanded nodes with no outgoing edge, in discovery order.
  std::vector<TermId> normal_forms() const;
  /// Nodes a budget left unexpanded, in discovery order.
  std::vector<TermId> frontier() const;
};

/// Distinct one-step results of t, ordered by first producing redex.
std::vector<TermId> successors(TermStore& store, const RuleSet& rules, TermId t);

MultiwayGraph build_graph(TermStore& store, const RuleSet& rules, TermId t,
                          const MwBudgets& budgets = {});

struct ConfluenceCheck {
  enum class Status : std::uint8_t { Confluent, NonConfluentWitness, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<TermId> normal_form;                  // Confluent (when one exists)
  std::optional<std::pair<TermId, TermId>> witness;   // NonConfluentWitness
};

std::string_view to_string(ConfluenceCheck::Status s);

/// Two distinct normal forms decide NonConfluentWitness even on a truncated
/// graph; otherwise truncation is Inconclusive; a complete graph with at
/// most one normal form is Confluent.
ConfluenceCheck check_confluence(const MultiwayGraph& graph);

ConfluenceCheck check_confluence(TermStore& store, const RuleSet& rules, TermId t,
                                 const MwBudgets& budgets = {});

/// First term reachable from both sides, expanding one BFS layer per side
/// alternately; std::nullopt when the budgets end the search first.
std::optional<TermId> common_reduct(TermStore& store, const RuleSet& rules, TermId t1, TermId t2,
                                    const MwBudgets& budgets = {});

/// DOT digraph: nodes labeled with paren notation, normal forms drawn with
/// doubled borders, edges labeled "rule@path".
void write_dot(std::ostream& out, const TermStore& store, const MultiwayGraph& graph);

}  // namespace skc
