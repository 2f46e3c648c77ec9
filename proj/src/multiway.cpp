// multiway.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/multiway.hpp"

#include <ostream>

#include "skc/syntax.hpp"

namespace skc {

namespace {

std::string dot_escape(std::string s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string_view to_string(Truncation t) {
  switch (t) {
    case Truncation::None: return "none";
    case Truncation::Depth: return "depth";
    case Truncation::Nodes: return "nodes";
    case Truncation::TermSize: return "term-size";
  }
  return "none";
}

std::string_view to_string(ConfluenceCheck::Status s) {
  switch (s) {
    case ConfluenceCheck::Status::Confluent: return "confluent";
    case ConfluenceCheck::Status::NonConfluentWitness: return "non-confluent-witness";
    case ConfluenceCheck::Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<TermId> MultiwayGraph::normal_forms() const {
  std::vector<TermId> out;
  for (TermId n : nodes) {
    if (!expanded.count(n)) continue;
    auto deg = out_degree.find(n);
    if (deg == out_degree.end() || deg->second == 0) out.push_back(n);
  }
  return out;
}

std::vector<TermId> MultiwayGraph::frontier() const {
  std::vector<TermId> out;
  for (TermId n : nodes)
    if (!expanded.count(n)) out.push_back(n);
  return out;
}

std::vector<TermId> successors(TermStore& store, const RuleSet& rules, TermId t) {
  std::vector<TermId> out;
  std::unordered_set<TermId> seen;
  for (const Redex& r : find_redexes(store, rules, t)) {
    TermId v = step(store, rules, t, r);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

MultiwayGraph build_graph(TermStore& store, const RuleSet& rules, TermId t,
                          const MwBudgets& budgets) {
  MultiwayGraph g;
  g.nodes.push_back(t);
  g.depth[t] = 0;
  bool hit_depth = false, hit_nodes = false, hit_size = false;
  // BFS cursor over the discovery list; children append behind it.
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes.size() > budgets.max_nodes) {
      hit_nodes = true;
      break;
    }
    TermId u = g.nodes[i];
    int d = g.depth[u];
    if (d >= budgets.max_depth || store.size(u) > budgets.max_term_size) {
      // A normal form at the horizon is complete knowledge, not a cut.
      if (!first_redex(store, rules, u)) {
        g.expanded.insert(u);
        continue;
      }
      (d >= budgets.max_depth ? hit_depth : hit_size) = true;
      continue;
    }
    g.expanded.insert(u);
    std::unordered_set<TermId> emitted;
    for (const Redex& r : find_redexes(store, rules, u)) {
      TermId v = step(store, rules, u, r);
      if (!emitted.insert(v).second) continue;  // out-edges match successors(u)
      g.edges.push_back({u, v, r.position, r.rule->name});
      ++g.out_degree[u];
      if (!g.depth.count(v)) {
        g.depth[v] = d + 1;
        g.nodes.push_back(v);
      }
    }
  }
  if (hit_nodes) g.truncated = Truncation::Nodes;
  else if (hit_depth) g.truncated = Truncation::Depth;
  else if (hit_size) g.truncated = Truncation::TermSize;
  return g;
}

ConfluenceCheck check_confluence(TermStore& store, const RuleSet& rules, TermId t,
                                 const MwBudgets& budgets) {
  return check_confluence(build_graph(store, rules, t, budgets));
}

ConfluenceCheck check_confluence(const MultiwayGraph& g) {
  std::vector<TermId> nfs = g.normal_forms();
  ConfluenceCheck out;
  if (nfs.size() >= 2) {
    // Two distinct normal forms settle it no matter what was cut off.
    out.status = ConfluenceCheck::Status::NonConfluentWitness;
    out.witness = std::make_pair(nfs[0], nfs[1]);
    return out;
  }
  if (g.truncated != Truncation::None) {
    out.status = ConfluenceCheck::Status::Inconclusive;
    return out;
  }
  out.status = ConfluenceCheck::Status::Confluent;
  if (!nfs.empty()) out.normal_form = nfs[0];
  return out;
}

std::optional<TermId> common_reduct(TermStore& store, const RuleSet& rules, TermId t1, TermId t2,
                                    const MwBudgets& budgets) {
  if (t1 == t2) return t1;
  struct Side {
    std::unordered_set<TermId> seen;
    std::vector<TermId> frontier;
    int depth = 0;
    bool done = false;
  };
  Side a{{t1}, {t1}, 0, false};
  Side b{{t2}, {t2}, 0, false};
  auto advance = [&](Side& self, const Side& other) -> std::optional<TermId> {
    if (self.done) return std::nullopt;
    if (self.frontier.empty() || self.depth >= budgets.max_depth ||
        self.seen.size() >= budgets.max_nodes) {
      self.done = true;
      return std::nullopt;
    }
    std::vector<TermId> next;
    for (TermId u : self.frontier) {
      if (store.size(u) > budgets.max_term_size) continue;
      for (TermId v : successors(store, rules, u)) {
        if (!self.seen.insert(v).second) continue;
        if (other.seen.count(v)) return v;
        next.push_back(v);
      }
    }
    self.frontier = std::move(next);
    ++self.depth;
    return std::nullopt;
  };
  while (!a.done || !b.done) {
    if (std::optional<TermId> hit = advance(a, b)) return hit;
    if (std::optional<TermId> hit = advance(b, a)) return hit;
  }
  return std::nullopt;
}

void write_dot(std::ostream& out, const TermStore& store, const MultiwayGraph& graph) {
  std::vector<TermId> nf_list = graph.normal_forms();
  std::unordered_set<TermId> nf(nf_list.begin(), nf_list.end());
  out << "digraph multiway {\n";
  for (TermId n : graph.nodes) {
    out << "  \"" << dot_escape(print_term(store, n)) << "\"";
    if (nf.count(n)) out << " [peripheries=2]";
    out << ";\n";
  }
  for (const MwEdge& e : graph.edges) {
    out << "  \"" << dot_escape(print_term(store, e.from)) << "\" -> \""
        << dot_escape(print_term(store, e.to)) << "\" [label=\"" << e.rule << '@'
        << path_string(e.position) << "\"];\n";
  }
  out << "}\n";
}

}  // namespace skc
