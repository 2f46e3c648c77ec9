// test_multiway.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skc/lambda.hpp"
#include "skc/multiway.hpp"
#include "skc/syntax.hpp"
#include "skc/term.hpp"

namespace {

using skc::AtomKind;
using skc::ConfluenceCheck;
using skc::MultiwayGraph;
using skc::MwBudgets;
using skc::RuleSet;
using skc::TermId;
using skc::TermStore;
using skc::Truncation;

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("successors lists each distinct one-step rewrite once") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);

  auto names = [&](const char* text) {
    std::vector<std::string> out;
    for (TermId v : skc::successors(store, rules, skc::parse_term(store, text)))
      out.push_back(skc::print_term(store, v));
    return out;
  };
  CHECK(names("K(Ia)b") == std::vector<std::string>{"Ia", "Kab"});
  CHECK(names("Sabc") == std::vector<std::string>{"ac(bc)"});
  CHECK(names("a") == std::vector<std::string>{});
  CHECK(names("SKK") == std::vector<std::string>{});
  // Two redexes that land on the same term produce one successor.
  CHECK(names("I(Ia)") == std::vector<std::string>{"Ia"});
}

TEST_CASE("the multiway graph of a two-step term closes at its normal form") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);
  TermId root = skc::parse_term(store, "K(Ia)b");
  MultiwayGraph g = skc::build_graph(store, rules, root);

  REQUIRE(g.nodes.size() == 4);
  CHECK(g.nodes[0] == root);
  CHECK(g.edges.size() == 4);
  CHECK(g.truncated == Truncation::None);
  CHECK(g.depth.at(root) == 0);
  CHECK(g.depth.at(skc::parse_term(store, "a")) == 2);
  CHECK(g.frontier().empty());

  auto nfs = g.normal_forms();
  REQUIRE(nfs.size() == 1);
  CHECK(skc::print_term(store, nfs[0]) == "a");

  // Both paths land on the single normal form.
  ConfluenceCheck check = skc::check_confluence(g);
  CHECK(check.status == ConfluenceCheck::Status::Confluent);
  REQUIRE(check.normal_form.has_value());
  CHECK(*check.normal_form == nfs[0]);
}

TEST_CASE("a lone rewrite gives a two-node graph") {
  TermStore store;
  RuleSet rules = RuleSet::sk(store);
  MultiwayGraph g = skc::build_graph(store, rules, skc::parse_term(store, "Kab"));
  CHECK(g.nodes.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.edges[0].rule == "K");
  CHECK(skc::path_string(g.edges[0].position) == "");
  CHECK(g.normal_forms().size() == 1);
}

TEST_CASE("graph edges agree with successors on every expanded node") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);
  TermId root = skc::parse_term(store, "S(Ia)(K(Ib))(Ic)");
  MultiwayGraph g = skc::build_graph(store, rules, root);
  CHECK(g.truncated == Truncation::None);

  std::map<TermId, std::vector<TermId>> by_from;
  for (const auto& e : g.edges) by_from[e.from].push_back(e.to);
  for (TermId u : g.nodes) {
    if (!g.expanded.count(u)) continue;
    auto succ = skc::successors(store, rules, u);
    auto it = by_from.find(u);
    std::vector<TermId> listed = it == by_from.end() ? std::vector<TermId>{} : it->second;
    CHECK(listed == succ);
    int degree = g.out_degree.count(u) ? g.out_degree.at(u) : 0;
    CHECK(static_cast<std::size_t>(degree) == succ.size());
  }
}

TEST_CASE("budgets truncate the graph with the right tag") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);
  TermId root = skc::parse_term(store, "K(Ia)b");

  MwBudgets depth1{1, 20000, 2000};
  MultiwayGraph shallow = skc::build_graph(store, rules, root, depth1);
  CHECK(shallow.truncated == Truncation::Depth);
  CHECK(!shallow.frontier().empty());
  CHECK(skc::check_confluence(shallow).status == ConfluenceCheck::Status::Inconclusive);

  // Normal forms on the horizon do not count as truncation.
  MwBudgets depth2{2, 20000, 2000};
  MultiwayGraph exact = skc::build_graph(store, rules, root, depth2);
  CHECK(exact.truncated == Truncation::None);
  CHECK(skc::check_confluence(exact).status == ConfluenceCheck::Status::Confluent);

  MwBudgets two_nodes{12, 2, 2000};
  MultiwayGraph small = skc::build_graph(store, rules, root, two_nodes);
  CHECK(small.truncated == Truncation::Nodes);

  MwBudgets tiny_terms{12, 20000, 3};
  MultiwayGraph thin = skc::build_graph(store, rules, root, tiny_terms);
  CHECK(thin.truncated == Truncation::TermSize);
}

TEST_CASE("a diverging fixed point stays inconclusive") {
  TermStore store;
  RuleSet rules = RuleSet::sk(store);
  TermId y = skc::derived_combinator(store, "Y");
  TermId yg = store.app(y, store.leaf(store.add_atom("g", AtomKind::Inert)));

  MwBudgets modest{6, 2000, 2000};
  MultiwayGraph g = skc::build_graph(store, rules, yg, modest);
  CHECK(g.truncated != Truncation::None);
  CHECK(g.normal_forms().empty());
  CHECK(!g.frontier().empty());
  CHECK(skc::check_confluence(g).status == ConfluenceCheck::Status::Inconclusive);

  ConfluenceCheck full = skc::check_confluence(store, rules, yg);
  CHECK(full.status == ConfluenceCheck::Status::Inconclusive);
}

TEST_CASE("non-confluent rule sets are caught by their normal forms") {
  TermStore store;
  // G applied to one argument and G applied to two rewrite differently, so
  // G c d branches at the outer node and at the inner one.
  std::istringstream text(
      "G x1 -> a\n"
      "G x1 x2 -> b\n");
  RuleSet rules = RuleSet::load(store, text, "amb");
  MultiwayGraph g = skc::build_graph(store, rules, skc::parse_term(store, "Gcd"));

  auto nfs = g.normal_forms();
  REQUIRE(nfs.size() == 2);
  CHECK(skc::print_term(store, nfs[0]) == "b");
  CHECK(skc::print_term(store, nfs[1]) == "ad");

  ConfluenceCheck check = skc::check_confluence(g);
  CHECK(check.status == ConfluenceCheck::Status::NonConfluentWitness);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->first == nfs[0]);
  CHECK(check.witness->second == nfs[1]);

  // Priority still keeps single-path reduction deterministic.
  CHECK(skc::print_term(store, skc::reduce(store, rules, skc::parse_term(store, "Gcd")).final_term)
        == "b");

  // A duplicating rule stays confluent: every path meets again.
  std::istringstream text2("P x1 -> x1 x1\n");
  RuleSet dup = RuleSet::load(store, text2, "dup");
  MultiwayGraph h = skc::build_graph(store, dup, skc::parse_term(store, "P(Pe)"));
  ConfluenceCheck joined = skc::check_confluence(h);
  CHECK(joined.status == ConfluenceCheck::Status::Confluent);
  REQUIRE(joined.normal_form.has_value());
  CHECK(skc::print_term(store, *joined.normal_form) == "ee(ee)");
}

TEST_CASE("common_reduct joins terms that meet") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);
  TermId a = skc::parse_term(store, "a");

  CHECK(skc::common_reduct(store, rules, a, a) == a);
  CHECK(skc::common_reduct(store, rules, skc::parse_term(store, "SKKa"),
                           skc::parse_term(store, "Ia")) == a);
  // The meet is the first shared node, not necessarily a normal form.
  CHECK(skc::common_reduct(store, rules, skc::parse_term(store, "K(Ia)b"),
                           skc::parse_term(store, "Kab")) == skc::parse_term(store, "Kab"));

  // Distinct normal forms never meet.
  MwBudgets small{6, 500, 500};
  CHECK(!skc::common_reduct(store, rules, a, skc::parse_term(store, "b"), small).has_value());
  // Exhausted budgets yield no answer rather than a wrong one.
  TermId y = skc::derived_combinator(store, "Y");
  TermId yg = store.app(y, skc::parse_term(store, "g"));
  CHECK(!skc::common_reduct(store, rules, yg, skc::parse_term(store, "b"), small).has_value());
}

TEST_CASE("the turing fixed point rejoins its unrolling") {
  TermStore store;
  auto fp = skc::fixed_point_combinators(store);
  RuleSet rules = RuleSet::ski(store);
  TermId g = store.leaf(store.add_atom("g", AtomKind::Inert));
  TermId theta_g = store.app(fp.theta_turing, g);
  TermId unrolled = store.app(g, theta_g);

  auto meet = skc::common_reduct(store, rules, theta_g, unrolled);
  REQUIRE(meet.has_value());
  // The meeting point is itself reachable from both sides; spot-check one.
  skc::Spine sp = skc::spine(store, *meet);
  CHECK(sp.head == g);
}

TEST_CASE("dot output draws every node and edge") {
  TermStore store;
  RuleSet rules = RuleSet::ski(store);
  MultiwayGraph g = skc::build_graph(store, rules, skc::parse_term(store, "K(Ia)b"));
  std::ostringstream out;
  skc::write_dot(out, store, g);
  std::string dot = out.str();

  CHECK(dot.rfind("digraph multiway {", 0) == 0);
  CHECK(dot.back() == '\n');
  CHECK(count_occurrences(dot, " -> ") == g.edges.size());
  CHECK(count_occurrences(dot, ";\n") == g.edges.size() + g.nodes.size());
  CHECK(count_occurrences(dot, "[peripheries=2]") == 1);
  CHECK(dot.find("\"K(Ia)b\"") != std::string::npos);
  CHECK(dot.find("[label=\"K@\"]") != std::string::npos);
  CHECK(dot.find("[label=\"I@FA\"]") != std::string::npos);
}

TEST_CASE("truncation reasons print as words") {
  CHECK(skc::to_string(Truncation::None) == "none");
  CHECK(skc::to_string(Truncation::Depth) == "depth");
  CHECK(skc::to_string(Truncation::Nodes) == "nodes");
  CHECK(skc::to_string(Truncation::TermSize) == "term-size");
  CHECK(skc::to_string(ConfluenceCheck::Status::Confluent) == "confluent");
  CHECK(skc::to_string(ConfluenceCheck::Status::NonConfluentWitness) == "non-confluent-witness");
  CHECK(skc::to_string(ConfluenceCheck::Status::Inconclusive) == "inconclusive");
}
