// lambda.hpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "skc/reduce.hpp"
#include "skc/rules.hpp"
#include "skc/term.hpp"

namespace skc {

enum class LambdaKind : std::uint8_t { Var, Abs, App, Const };

struct LambdaTerm;
using LambdaPtr = std::shared_ptr<const LambdaTerm>;

/// Immutable lambda tree. Constants carry combinator-atom names so mixed
/// lambda/combinator terms are expressible.
struct LambdaTerm {
  LambdaKind kind;
  std::string name;  // Var: variable; Abs: binder; Const: atom name
  LambdaPtr body;    // Abs
  LambdaPtr fn;      // App
  LambdaPtr arg;     // App
};

LambdaPtr lam_var(std::string name);
LambdaPtr lam_abs(std::string binder, LambdaPtr body);
LambdaPtr lam_app(LambdaPtr fn, LambdaPtr arg);
LambdaPtr lam_const(std::string atom);

std::set<std::string> free_vars(const LambdaPtr& t);

struct BetaOutcome {
  LambdaPtr term;
  int steps = 0;
  bool hit_limit = false;
};

/// Normal-order beta reduction with capture-avoiding substitution; fresh
/// binders get numeric suffixes from a per-call counter.
BetaOutcome beta_normalize(const LambdaPtr& t, int max_steps = 10000);

bool alpha_equal(const LambdaPtr& a, const LambdaPtr& b);

/// Bracket abstraction, innermost binder first: [x]x = I, [x]M = K M when x
/// is not free in M, [x](M N) = S([x]M)([x]N), plus [x](M x) = M when
/// `optimize` is set. Throws std::invalid_argument on open terms.
TermId compile_lambda(TermStore& store, const LambdaPtr& t, bool optimize = false);

/// Rewrites every I leaf to S K K.
TermId to_pure_sk(TermStore& store, TermId t);

/// λf.λx.f^n x.
LambdaPtr church_encode(unsigned n);

/// Applies t to inert atoms succ and zero, reduces, and counts the succ
/// nesting over zero. Anything else — non-normal outcome included — is
/// std::nullopt.
std::optional<unsigned> church_decode(TermStore& store, TermId t, const RuleSet& rules,
                                      const ReduceLimits& limits = {});

struct FixedPointCombinators {
  TermId y_curry;
  TermId theta_turing;
};

/// y_curry is the S/K constant also available as derived_combinator("Y");
/// theta_turing is (λx.λy.y (x x y)) applied to itself, compiled with the
/// eta rule on to keep its rejoining reductions short.
FixedPointCombinators fixed_point_combinators(TermStore& store);

/// Surface syntax: `\x. body` or `λx. body` (several binders may share one
/// lambda), application by juxtaposition, parentheses, single uppercase
/// letters as combinator constants, `#n` as a Church numeral literal.
LambdaPtr parse_lambda(std::string_view text);

std::string print_lambda(const LambdaPtr& t);

/// Embeds an abstraction-free lambda term: variables become inert atoms,
/// constants resolve to existing atoms (new single-uppercase names register
/// as basis, anything else inert). Throws on abstractions.
TermId lambda_to_term(TermStore& store, const LambdaPtr& t);

}  // namespace skc
