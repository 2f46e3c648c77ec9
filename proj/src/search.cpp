// search.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/search.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

#include "skc/syntax.hpp"

namespace skc {

namespace {

TermId vleaf(TermStore& store, int i) {
  return store.leaf(store.add_atom("v" + std::to_string(i), AtomKind::Inert));
}

}  // namespace

BehaviorSpec builtin_spec(TermStore& store, std::string_view name) {
  TermId v1 = vleaf(store, 1);
  if (name == "identity") return {"identity", 1, v1};
  if (name == "constant") {
    vleaf(store, 2);
    return {"constant", 2, v1};
  }
  TermId v2 = vleaf(store, 2);
  TermId v3 = vleaf(store, 3);
  if (name == "compose") return {"compose", 3, store.app(v1, store.app(v2, v3))};
  if (name == "transpose") return {"transpose", 3, store.app(store.app(v1, v3), v2)};
  throw std::invalid_argument("unknown behavior spec: " + std::string(name));
}

BehaviorSpec load_spec(TermStore& store, std::istream& in, std::string name) {
  std::string arity_line, target_line;
  if (!std::getline(in, arity_line)) throw std::invalid_argument("spec file is empty");
  if (!std::getline(in, target_line)) throw std::invalid_argument("spec file has no target line");
  int arity = 0;
  try {
    arity = std::stoi(arity_line);
  } catch (const std::exception&) {
    throw std::invalid_argument("spec arity is not a number: " + arity_line);
  }
  if (arity < 1 || arity > 9) throw std::invalid_argument("spec arity out of range");
  for (int i = 1; i <= arity; ++i) vleaf(store, i);
  TermId target;
  try {
    target = parse_term(store, target_line);
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("spec target: ") + e.what());
  }
  return {std::move(name), arity, target};
}

std::vector<TermId> spec_arguments(TermStore& store, const BehaviorSpec& spec) {
  std::vector<TermId> args;
  args.reserve(static_cast<std::size_t>(spec.arity));
  for (int i = 1; i <= spec.arity; ++i) args.push_back(vleaf(store, i));
  return args;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Verdict satisfies(TermStore& store, const RuleSet& rules, TermId t, const BehaviorSpec& spec,
                  const SearchFuel& fuel) {
  std::vector<TermId> args = spec_arguments(store, spec);
  TermId applied = fold_spine(store, t, args);
  ReduceLimits limits{fuel.max_steps, fuel.max_size, /*detect_cycles=*/true,
                      /*record_trace=*/false};
  ReductionOutcome out = reduce(store, rules, applied, {}, limits);
  switch (out.status) {
    case ReductionStatus::NormalForm:
      return out.final_term == spec.target ? Verdict::Yes : Verdict::No;
    case ReductionStatus::Cycle:
      return Verdict::No;  // a cycling term never reaches a normal form
    case ReductionStatus::StepLimit:
    case ReductionStatus::SizeLimit:
      return Verdict::Unknown;
  }
  return Verdict::Unknown;
}

Enumerator::Enumerator(TermStore& store, std::vector<AtomId> basis)
    : store_(store), basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("enumeration basis is empty");
}

std::uint64_t Enumerator::count(int size) const {
  if (size < 1) throw std::invalid_argument("term size must be at least 1");
  std::size_t n = static_cast<std::size_t>(size);
  if (counts_.size() <= n) {
    if (counts_.empty()) counts_ = {0, static_cast<std::uint64_t>(basis_.size())};
    for (std::size_t m = counts_.size(); m <= n; ++m) {
      std::uint64_t total = 0;
      for (std::size_t left = 1; left < m; ++left) {
        std::uint64_t block;
        if (__builtin_mul_overflow(counts_[left], counts_[m - left], &block) ||
            __builtin_add_overflow(total, block, &total))
          throw std::overflow_error("term count overflows");
      }
      counts_.push_back(total);
    }
  }
  return counts_[n];
}

const std::vector<TermId>& Enumerator::terms(int size) {
  std::size_t n = static_cast<std::size_t>(size);
  std::uint64_t expect = count(size);  // validates size, warms counts_
  if (memo_.size() <= n) memo_.resize(n + 1);
  std::vector<TermId>& out = memo_[n];
  if (!out.empty()) return out;
  out.reserve(static_cast<std::size_t>(expect));
  if (size == 1) {
    for (AtomId a : basis_) out.push_back(store_.leaf(a));
    return out;
  }
  for (int left = 1; left < size; ++left) {
    const std::vector<TermId>& ls = terms(left);
    // Right side looked up by index: the recursive terms() call above may
    // grow memo_ and would invalidate a reference held across it.
    terms(size - left);
    for (TermId l : ls)
      for (TermId r : memo_[static_cast<std::size_t>(size - left)]) out.push_back(store_.app(l, r));
  }
  return out;
}

TermId Enumerator::unrank(int size, std::uint64_t index) {
  if (index >= count(size)) throw std::out_of_range("enumeration index out of range");
  if (size == 1) return store_.leaf(basis_[static_cast<std::size_t>(index)]);
  for (int left = 1; left < size; ++left) {
    std::uint64_t rights = count(size - left);
    std::uint64_t block = count(left) * rights;
    if (index < block)
      return store_.app(unrank(left, index / rights), unrank(size - left, index % rights));
    index -= block;
  }
  throw std::out_of_range("enumeration index out of range");  // unreachable
}

SearchResult find_minimal(TermStore& store, const RuleSet& rules, const BehaviorSpec& spec,
                          std::vector<AtomId> basis, int max_size, const SearchFuel& fuel) {
  SearchResult result{spec, std::nullopt, {}, {}, {}};
  spec_arguments(store, spec);  // argument leaves must predate the scratch marks
  Enumerator en(store, std::move(basis));
  for (int n = 1; n <= max_size; ++n) {
    result.scanned.emplace_back(n, en.count(n));
    en.for_each(n, [&](TermId t) {
      std::size_t scratch = store.mark();
      Verdict v = satisfies(store, rules, t, spec, fuel);
      store.release(scratch);
      if (v == Verdict::Yes) result.witnesses.push_back(t);
      else if (v == Verdict::Unknown) result.unknowns.push_back(t);
    });
    if (!result.witnesses.empty()) {
      result.min_size = n;
      break;
    }
  }
  return result;
}

void write_search_result(std::ostream& out, const TermStore& store, const SearchResult& result) {
  out << "spec: " << result.spec.name << "\n";
  out << "arity: " << result.spec.arity << "\n";
  out << "target: " << print_term(store, result.spec.target) << "\n";
  for (auto [size, candidates] : result.scanned)
    out << "scanned: size=" << size << " count=" << candidates << "\n";
  if (result.min_size) out << "min-size: " << *result.min_size << "\n";
  else out << "min-size: none\n";
  out << "witnesses: " << result.witnesses.size() << "\n";
  for (TermId w : result.witnesses) out << "witness: " << print_term(store, w) << "\n";
  out << "unknowns: " << result.unknowns.size() << "\n";
  for (TermId u : result.unknowns) out << "unknown: " << print_term(store, u) << "\n";
}

std::vector<CensusRow> census(TermStore& store, const RuleSet& rules, std::vector<AtomId> basis,
                              int size_lo, int size_hi, const ReduceLimits& limits,
                              const CensusMode& mode) {
  if (size_lo < 1 || size_hi < size_lo) throw std::invalid_argument("bad census size range");
  Enumerator en(store, std::move(basis));
  ReduceLimits fuel = limits;
  fuel.detect_cycles = true;
  fuel.record_trace = false;
  std::mt19937_64 rng(mode.seed);
  std::vector<CensusRow> rows;
  for (int n = size_lo; n <= size_hi; ++n) {
    CensusRow row;
    row.size = n;
    std::uint64_t steps_sum = 0;
    auto tally = [&](TermId t) {
      std::size_t scratch = store.mark();
      ReductionOutcome out = reduce(store, rules, t, {}, fuel);
      store.release(scratch);
      ++row.total;
      row.max_size_reached = std::max(row.max_size_reached, out.max_size_seen);
      switch (out.status) {
        case ReductionStatus::NormalForm:
          ++row.halted;
          steps_sum += static_cast<std::uint64_t>(out.steps);
          row.max_steps = std::max(row.max_steps, out.steps);
          break;
        case ReductionStatus::Cycle: ++row.cycles; break;
        case ReductionStatus::StepLimit: ++row.step_limit; break;
        case ReductionStatus::SizeLimit: ++row.size_limit; break;
      }
    };
    if (mode.sample == 0) {
      en.for_each(n, tally);
    } else {
      std::uint64_t total = en.count(n);
      for (std::uint64_t k = 0; k < mode.sample; ++k) tally(en.unrank(n, rng() % total));
    }
    if (row.halted > 0) row.mean_steps = static_cast<double>(steps_sum) / static_cast<double>(row.halted);
    rows.push_back(row);
  }
  return rows;
}

void write_census_csv(std::ostream& out, const std::vector<CensusRow>& rows) {
  out << "size,total,halted,cycles,step_limit,size_limit,mean_steps,max_steps,max_size\n";
  char mean[32];
  for (const CensusRow& r : rows) {
    std::snprintf(mean, sizeof mean, "%.4f", r.mean_steps);
    out << r.size << ',' << r.total << ',' << r.halted << ',' << r.cycles << ',' << r.step_limit
        << ',' << r.size_limit << ',' << mean << ',' << r.max_steps << ',' << r.max_size_reached
        << "\n";
  }
}

}  // namespace skc
