// reduce.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skc/rules.hpp"
#include "skc/term.hpp"

namespace skc {

/// One rewritable site: the application node at `position` consumes exactly
/// the arguments the rule needs.
struct Redex {
  SpinePath position;
  const Rule* rule = nullptr;
};

enum class StrategyKind : std::uint8_t {
  LeftmostOutermost,
  RightmostInnermost,
  Random,
  ByIndex,
};

/// Redex selection policy. Random draws uniformly over the current redex
/// list from a generator seeded once per reduction; ByIndex picks the k-th
/// redex in preorder, clamped to the last one.
struct Strategy {
  StrategyKind kind = StrategyKind::LeftmostOutermost;
  std::uint64_t seed = 0;
  std::size_t index = 0;

  static Strategy leftmost_outermost() { return {}; }
  static Strategy rightmost_innermost() { return {StrategyKind::RightmostInnermost, 0, 0}; }
  static Strategy random(std::uint64_t seed) { return {StrategyKind::Random, seed, 0}; }
  static Strategy by_index(std::size_t index) { return {StrategyKind::ByIndex, 0, index}; }

  std::string describe() const;
};

enum class ReductionStatus : std::uint8_t {
  NormalForm,
  StepLimit,
  SizeLimit,
  Cycle,
};

std::string_view to_string(ReductionStatus status);

/// One trace record; `term` and `size` are the state after the step.
struct TraceStep {
  int index = 0;  // 1-based
  SpinePath position;
  std::string rule;
  TermId term = kInvalidTerm;
  std::uint64_t size = 0;
};

struct ReduceLimits {
  int max_steps = 10000;
  std::uint64_t max_size = 10000;  // whole-term size, checked after each step
  bool detect_cycles = false;
  bool record_trace = false;
};

struct ReductionOutcome {
  ReductionStatus status = ReductionStatus::NormalForm;
  TermId final_term = kInvalidTerm;
  int steps = 0;
  std::uint64_t max_size_seen = 0;
  std::vector<TraceStep> trace;
};

/// All redexes of `t` in preorder (root first, function before argument).
/// Empty exactly when `t` is a normal form under `rules`.
std::vector<Redex> find_redexes(const TermStore& store, const RuleSet& rules, TermId t);

/// First redex in preorder; what find_redexes(...).front() would return,
/// without materializing the rest of the list.
std::optional<Redex> first_redex(const TermStore& store, const RuleSet& rules, TermId t);

/// Rewrites the addressed redex, sharing all untouched structure. Throws
/// std::invalid_argument when the redex does not match `t` (stale redex).
TermId step(TermStore& store, const RuleSet& rules, TermId t, const Redex& redex);

/// Fueled normalization. Limits are outcomes, not errors: the status says
/// which budget ended the run, if any.
ReductionOutcome reduce(TermStore& store, const RuleSet& rules, TermId t,
                        const Strategy& strategy = {}, const ReduceLimits& limits = {});

/// S/K expression for a named derived combinator: I, Z (composition),
/// T (argument swap, via Z), or Y (fixed point). Throws on other names.
TermId derived_combinator(TermStore& store, std::string_view name);

/// Tab-separated trace: '#' header lines (rule set, strategy, seed, limits,
/// column names), then one record per step.
void write_trace(std::ostream& out, const TermStore& store, const RuleSet& rules,
                 const Strategy& strategy, const ReduceLimits& limits,
                 const ReductionOutcome& outcome);

}  // namespace skc
