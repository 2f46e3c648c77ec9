// search.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skc/reduce.hpp"
#include "skc/rules.hpp"
#include "skc/term.hpp"

namespace skc {

/// Extensional test: applied to inert v1..v_arity, a conforming term
/// normalizes to `target`.
struct BehaviorSpec {
  std::string name;
  int arity = 1;
  TermId target = kInvalidTerm;
};

/// identity (v1), constant (v1 of two), compose (v1 (v2 v3)), or
/// transpose (v1 v3 v2). Throws on other names.
BehaviorSpec builtin_spec(TermStore& store, std::string_view name);

/// Two-line format: the arity, then the target term over v1..v_arity
/// (separate the names with spaces).
BehaviorSpec load_spec(TermStore& store, std::istream& in, std::string name);

/// The inert argument leaves v1..v_arity.
std::vector<TermId> spec_arguments(TermStore& store, const BehaviorSpec& spec);

enum class Verdict : std::uint8_t { Yes, No, Unknown };

std::string_view to_string(Verdict v);

/// Per-candidate budget; far above what any conforming paper-scale term
/// needs, small enough to bound a full search.
struct SearchFuel {
  int max_steps = 200;
  std::uint64_t max_size = 2000;
};

/// Applies t to the spec arguments and reduces leftmost-outermost. Yes/No on
/// a normal form; a detected cycle is No (such a term never normalizes);
/// anything hitting the fuel is Unknown.
Verdict satisfies(TermStore& store, const RuleSet& rules, TermId t, const BehaviorSpec& spec,
                  const SearchFuel& fuel = {});

/// Streams every term of a given size (leaf count) over a fixed basis:
/// shapes by recursive left-subtree split, labels in basis order. Sizes
/// below the one being streamed are materialized and memoized.
class Enumerator {
 public:
  Enumerator(TermStore& store, std::vector<AtomId> basis);

  /// Catalan(size-1) * |basis|^size; throws std::overflow_error when that
  /// leaves uint64.
  std::uint64_t count(int size) const;

  /// All terms of the size, in enumeration order.
  const std::vector<TermId>& terms(int size);

  /// The index-th term of the size in enumeration order, without
  /// materializing the size.
  TermId unrank(int size, std::uint64_t index);

  template <typename F>
  void for_each(int size, F&& f) {
    if (size == 1) {
      for (TermId t : terms(1)) f(t);
      return;
    }
    for (int s = 1; s < size; ++s) terms(s);  // keep memo references stable
    for (int left = 1; left < size; ++left) {
      const std::vector<TermId>& ls = memo_[static_cast<std::size_t>(left)];
      const std::vector<TermId>& rs = memo_[static_cast<std::size_t>(size - left)];
      for (TermId l : ls)
        for (TermId r : rs) f(store_.app(l, r));
    }
  }

 private:
  TermStore& store_;
  std::vector<AtomId> basis_;
  mutable std::vector<std::uint64_t> counts_;  // counts_[n]; lazily extended
  std::vector<std::vector<TermId>> memo_;      // memo_[n]; empty = not built
};

struct SearchResult {
  BehaviorSpec spec;
  std::optional<int> min_size;  // empty: nothing found up to the scanned max
  std::vector<TermId> witnesses;
  std::vector<std::pair<int, std::uint64_t>> scanned;  // (size, candidates)
  std::vector<TermId> unknowns;  // fuel-limited candidates, enumeration order
};

/// Ascending scan; stops after the first size with a witness, scanning that
/// size completely. Unknown verdicts never count as witnesses.
SearchResult find_minimal(TermStore& store, const RuleSet& rules, const BehaviorSpec& spec,
                          std::vector<AtomId> basis, int max_size, const SearchFuel& fuel = {});

void write_search_result(std::ostream& out, const TermStore& store, const SearchResult& result);

struct CensusRow {
  int size = 0;
  std::uint64_t total = 0;
  std::uint64_t halted = 0;
  std::uint64_t cycles = 0;
  std::uint64_t step_limit = 0;
  std::uint64_t size_limit = 0;
  double mean_steps = 0.0;  // among halted
  int max_steps = 0;        // among halted
  std::uint64_t max_size_reached = 0;
};

/// sample == 0 runs every term of each size; otherwise `sample` draws per
/// size from the seeded generator.
struct CensusMode {
  std::uint64_t sample = 0;
  std::uint64_t seed = 0;
};

/// Reduces each (or each sampled) term of sizes [size_lo, size_hi] on its
/// own — no arguments applied — and tallies outcomes. Cycle detection is
/// always on here so loops are counted rather than burning fuel.
std::vector<CensusRow> census(TermStore& store, const RuleSet& rules, std::vector<AtomId> basis,
                              int size_lo, int size_hi, const ReduceLimits& limits = {},
                              const CensusMode& mode = {});

/// Header: size,total,halted,cycles,step_limit,size_limit,mean_steps,max_steps,max_size
void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows);

}  // namespace skc
