// reduce.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/reduce.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "skc/syntax.hpp"

namespace skc {

namespace {

// Cycle detection stops inserting past this many distinct terms; later
// repeats then go unnoticed, which only widens StepLimit a little.
constexpr std::size_t kCycleSetCap = 100000;

void collect_redexes(const TermStore& store, const RuleSet& rules, TermId t,
                     SpinePath& path, std::vector<Redex>& out) {
  if (store.is_leaf(t)) return;
  if (const Rule* r = rules.match(store, t)) out.push_back({path, r});
  path.push_back(Dir::Fn);
  collect_redexes(store, rules, store.fn(t), path, out);
  path.back() = Dir::Arg;
  collect_redexes(store, rules, store.arg(t), path, out);
  path.pop_back();
}

bool first_redex_walk(const TermStore& store, const RuleSet& rules, TermId t,
                      SpinePath& path, Redex& out) {
  if (store.is_leaf(t)) return false;
  Spine sp = spine(store, t);
  AtomId head = store.leaf_atom(sp.head);
  std::size_t n = sp.args.size();
  // Preorder visits this spine's application nodes outermost first, then
  // descends into the arguments left to right.
  if (rules.has_rules_for(head)) {
    for (std::size_t take = n; take >= 1; --take) {
      if (const Rule* r = rules.match_spine(store, head, std::span(sp.args.data(), take))) {
        path.insert(path.end(), n - take, Dir::Fn);
        out = {path, r};
        return true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t fns = n - 1 - i;
    path.insert(path.end(), fns, Dir::Fn);
    path.push_back(Dir::Arg);
    if (first_redex_walk(store, rules, sp.args[i], path, out)) return true;
    path.resize(path.size() - fns - 1);
  }
  return false;
}

}  // namespace

std::string Strategy::describe() const {
  switch (kind) {
    case StrategyKind::LeftmostOutermost: return "leftmost-outermost";
    case StrategyKind::RightmostInnermost: return "rightmost-innermost";
    case StrategyKind::Random: return "random";
    case StrategyKind::ByIndex: return "index:" + std::to_string(index);
  }
  return "leftmost-outermost";
}

std::string_view to_string(ReductionStatus status) {
  switch (status) {
    case ReductionStatus::NormalForm: return "normal-form";
    case ReductionStatus::StepLimit: return "step-limit";
    case ReductionStatus::SizeLimit: return "size-limit";
    case ReductionStatus::Cycle: return "cycle";
  }
  return "normal-form";
}

std::vector<Redex> find_redexes(const TermStore& store, const RuleSet& rules, TermId t) {
  std::vector<Redex> out;
  SpinePath path;
  collect_redexes(store, rules, t, path, out);
  return out;
}

std::optional<Redex> first_redex(const TermStore& store, const RuleSet& rules, TermId t) {
  SpinePath path;
  Redex out;
  if (first_redex_walk(store, rules, t, path, out)) return out;
  return std::nullopt;
}

TermId step(TermStore& store, const RuleSet& rules, TermId t, const Redex& redex) {
  if (redex.rule == nullptr) throw std::invalid_argument("redex has no rule");
  TermId node = t;
  for (Dir d : redex.position) {
    if (store.is_leaf(node)) throw std::invalid_argument("stale redex: path leaves the term");
    node = d == Dir::Fn ? store.fn(node) : store.arg(node);
  }
  if (store.is_leaf(node)) throw std::invalid_argument("stale redex: path addresses a leaf");
  Spine sp = spine(store, node);
  const Rule& rule = *redex.rule;
  bool matches = store.is_leaf(sp.head) && store.leaf_atom(sp.head) == rule.head &&
                 static_cast<int>(sp.args.size()) == rule.consumed();
  for (std::size_t i = 0; matches && i < rule.guard.size(); ++i)
    matches = sp.args[i] == rule.guard[i];
  if (!matches) throw std::invalid_argument("stale redex: rule no longer matches");
  (void)rules;
  return replace_at(store, t, redex.position, apply_rule(store, rule, sp.args));
}

ReductionOutcome reduce(TermStore& store, const RuleSet& rules, TermId t,
                        const Strategy& strategy, const ReduceLimits& limits) {
  ReductionOutcome out;
  out.final_term = t;
  out.max_size_seen = store.size(t);
  std::mt19937_64 rng(strategy.seed);
  std::unordered_set<TermId> seen;
  if (limits.detect_cycles) seen.insert(t);
  for (;;) {
    std::optional<Redex> chosen;
    if (strategy.kind == StrategyKind::LeftmostOutermost) {
      chosen = first_redex(store, rules, out.final_term);
    } else {
      std::vector<Redex> all = find_redexes(store, rules, out.final_term);
      if (!all.empty()) {
        std::size_t pick = 0;
        switch (strategy.kind) {
          case StrategyKind::RightmostInnermost: pick = all.size() - 1; break;
          case StrategyKind::Random: pick = rng() % all.size(); break;
          case StrategyKind::ByIndex: pick = std::min(strategy.index, all.size() - 1); break;
          case StrategyKind::LeftmostOutermost: break;
        }
        chosen = std::move(all[pick]);
      }
    }
    if (!chosen) {
      out.status = ReductionStatus::NormalForm;
      return out;
    }
    if (out.steps >= limits.max_steps) {
      out.status = ReductionStatus::StepLimit;
      return out;
    }
    out.final_term = step(store, rules, out.final_term, *chosen);
    ++out.steps;
    std::uint64_t sz = store.size(out.final_term);
    out.max_size_seen = std::max(out.max_size_seen, sz);
    if (limits.record_trace)
      out.trace.push_back({out.steps, std::move(chosen->position), chosen->rule->name,
                           out.final_term, sz});
    if (sz > limits.max_size) {
      out.status = ReductionStatus::SizeLimit;
      return out;
    }
    if (limits.detect_cycles && seen.size() < kCycleSetCap &&
        !seen.insert(out.final_term).second) {
      out.status = ReductionStatus::Cycle;
      return out;
    }
  }
}

TermId derived_combinator(TermStore& store, std::string_view name) {
  store.add_atom("S", AtomKind::Basis);
  store.add_atom("K", AtomKind::Basis);
  std::string_view expr;
  if (name == "I") expr = "SKK";
  else if (name == "Z") expr = "S(KS)K";
  else if (name == "T") expr = "S((S(KS)K)(S(KS)K)S)(KK)";
  else if (name == "Y") expr = "SSK(S(K(SS(S(SSK))))K)";
  else throw std::invalid_argument("unknown derived combinator: " + std::string(name));
  return parse_term(store, expr);
}

void write_trace(std::ostream& out, const TermStore& store, const RuleSet& rules,
                 const Strategy& strategy, const ReduceLimits& limits,
                 const ReductionOutcome& outcome) {
  out << "# ruleset=" << rules.name() << " strategy=" << strategy.describe()
      << " seed=" << strategy.seed << " max-steps=" << limits.max_steps
      << " max-size=" << limits.max_size << "\n";
  out << "# step\trule\tposition\tterm\tsize\n";
  for (const TraceStep& ts : outcome.trace) {
    out << ts.index << '\t' << ts.rule << '\t' << path_string(ts.position) << '\t'
        << print_term(store, ts.term) << '\t' << ts.size << "\n";
  }
}

}  // namespace skc
