// cli.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include "skc/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "skc/lambda.hpp"
#include "skc/multiway.hpp"
#include "skc/reduce.hpp"
#include "skc/rules.hpp"
#include "skc/search.hpp"
#include "skc/syntax.hpp"
#include "skc/term.hpp"

namespace skc {

namespace {

// Flag defaults that a --config file may override; explicit flags still win.
struct Defaults {
  int max_steps = 10000;
  std::uint64_t max_size = 10000;
  int fuel_steps = 200;
  std::uint64_t fuel_size = 2000;
  int depth = 12;
  std::uint64_t max_nodes = 20000;
  std::uint64_t max_term_size = 2000;
};

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

void apply_config(Defaults& d, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string text = trim(line);
    if (auto hash = text.find('#'); hash != std::string::npos) text = trim(text.substr(0, hash));
    if (text.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(line_no) + " of " + path + ")"; };
    std::size_t eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line has no '='" + where());
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    std::uint64_t n = 0;
    try {
      n = std::stoull(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("config value for " + key + " is not a number" + where());
    }
    if (key == "max-steps") d.max_steps = static_cast<int>(n);
    else if (key == "max-size") d.max_size = n;
    else if (key == "fuel-steps") d.fuel_steps = static_cast<int>(n);
    else if (key == "fuel-size") d.fuel_size = n;
    else if (key == "depth") d.depth = static_cast<int>(n);
    else if (key == "max-nodes") d.max_nodes = n;
    else if (key == "max-term-size") d.max_term_size = n;
    else throw std::invalid_argument("unknown config key: " + key + where());
  }
}

RuleSet load_rules(TermStore& store, const std::string& value) {
  if (value == "sk") return RuleSet::sk(store);
  if (value == "ski") return RuleSet::ski(store);
  if (value == "j") return RuleSet::j(store);
  std::ifstream in(value);
  if (!in) throw std::invalid_argument("cannot open rule file: " + value);
  return RuleSet::load(store, in, value);
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string input_text(const std::string& positional, const std::string& input_file,
                       std::istream& in) {
  if (!input_file.empty()) {
    std::ifstream f(input_file);
    if (!f) throw std::invalid_argument("cannot open input file: " + input_file);
    return read_all(f);
  }
  if (positional.empty()) throw std::invalid_argument("no input given");
  if (positional == "-") return read_all(in);
  return positional;
}

Strategy make_strategy(const std::string& name, std::uint64_t seed, std::size_t index) {
  if (name == "leftmost-outermost" || name == "lo") return Strategy::leftmost_outermost();
  if (name == "rightmost-innermost" || name == "ri") return Strategy::rightmost_innermost();
  if (name == "random") return Strategy::random(seed);
  if (name == "index") return Strategy::by_index(index);
  throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<AtomId> parse_basis(TermStore& store, const std::string& text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token =
        trim(text.substr(start, comma == std::string::npos ? comma : comma - start));
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) continue;
    bool all_upper = true;
    for (char c : token) all_upper = all_upper && c >= 'A' && c <= 'Z';
    if (all_upper)
      for (char c : token) names.emplace_back(1, c);
    else
      names.push_back(token);
  }
  if (names.empty()) throw std::invalid_argument("empty basis");
  std::vector<AtomId> out;
  out.reserve(names.size());
  for (const std::string& name : names) {
    std::optional<AtomId> a = store.find_atom(name);
    if (!a) throw std::invalid_argument("unknown atom in basis: " + name);
    out.push_back(*a);
  }
  return out;
}

std::pair<int, int> parse_sizes(const std::string& text) {
  try {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size range: " + text);
  }
}

Notation to_notation(const std::string& name) {
  return name == "bracket" ? Notation::Bracket : Notation::Paren;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             std::istream& in) {
  Defaults d;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file");
      apply_config(d, args[i + 1]);
    } else if (args[i].rfind("--config=", 0) == 0) {
      apply_config(d, args[i].substr(9));
    }
  }

  CLI::App app{"combinator calculus toolkit"};
  app.name("skc");
  app.require_subcommand(1);
  std::string config_path;
  auto add_config = [&](CLI::App* a) {
    a->add_option("--config", config_path, "key=value file with default fuel and budgets");
  };
  add_config(&app);

  auto* sc_parse = app.add_subcommand("parse", "echo a term in the requested notation");
  std::string parse_text, parse_input, parse_from = "paren", parse_to = "paren";
  bool parse_cmk = false;
  sc_parse->add_option("term", parse_text, "term text; - reads standard input");
  sc_parse->add_option("--input", parse_input, "read the term from this file");
  sc_parse->add_option("--from", parse_from, "input notation")
      ->check(CLI::IsMember({"paren", "bracket"}));
  sc_parse->add_option("--to", parse_to, "output notation")
      ->check(CLI::IsMember({"paren", "bracket"}));
  sc_parse->add_flag("--c-means-k", parse_cmk, "read C as the K combinator");
  add_config(sc_parse);

  auto* sc_reduce = app.add_subcommand("reduce", "normalize a term under step and size budgets");
  std::string red_text, red_input, red_rules = "sk", red_strategy = "leftmost-outermost";
  std::uint64_t red_seed = 0, red_max_size = d.max_size;
  std::size_t red_index = 0;
  int red_max_steps = d.max_steps;
  bool red_trace = false, red_cycles = false;
  sc_reduce->add_option("term", red_text, "term text; - reads standard input");
  sc_reduce->add_option("--input", red_input, "read the term from this file");
  sc_reduce->add_option("--rules", red_rules, "sk, ski, j, or a rule file");
  sc_reduce->add_option("--strategy", red_strategy, "redex choice")
      ->check(CLI::IsMember(
          {"leftmost-outermost", "lo", "rightmost-innermost", "ri", "random", "index"}));
  sc_reduce->add_option("--seed", red_seed, "random strategy seed");
  sc_reduce->add_option("--index", red_index, "index strategy redex number (0-based)");
  sc_reduce->add_option("--max-steps", red_max_steps, "step budget");
  sc_reduce->add_option("--max-size", red_max_size, "whole-term size budget");
  sc_reduce->add_flag("--trace", red_trace, "print one record per step before the result");
  sc_reduce->add_flag("--detect-cycles", red_cycles, "stop on the first repeated term");
  add_config(sc_reduce);

  auto* sc_compile = app.add_subcommand("compile", "bracket-abstract a lambda term");
  std::string comp_text, comp_input;
  bool comp_optimize = false, comp_pure = false;
  sc_compile->add_option("lambda", comp_text, "lambda text; - reads standard input");
  sc_compile->add_option("--input", comp_input, "read the lambda from this file");
  sc_compile->add_flag("--optimize", comp_optimize, "apply the eta rule");
  sc_compile->add_flag("--pure-sk", comp_pure, "rewrite I to S K K afterwards");
  add_config(sc_compile);

  auto* sc_search = app.add_subcommand("search", "find minimal terms for a behavior spec");
  std::string srch_spec, srch_rules = "sk", srch_basis = "SK";
  int srch_max = 0, srch_fuel_steps = d.fuel_steps;
  std::uint64_t srch_fuel_size = d.fuel_size;
  sc_search->add_option("--spec", srch_spec, "identity, constant, compose, transpose, or a file")
      ->required();
  sc_search->add_option("--basis", srch_basis, "atoms to enumerate (e.g. SK or SKI)");
  sc_search->add_option("--rules", srch_rules, "sk, ski, j, or a rule file");
  sc_search->add_option("--max-size", srch_max, "largest size to scan")->required();
  sc_search->add_option("--fuel-steps", srch_fuel_steps, "per-candidate step budget");
  sc_search->add_option("--fuel-size", srch_fuel_size, "per-candidate size budget");
  add_config(sc_search);

  auto* sc_enum = app.add_subcommand("enumerate", "stream every term of one size");
  std::string enum_basis = "SK", enum_rules = "sk";
  int enum_size = 0;
  bool enum_count_only = false;
  sc_enum->add_option("--size", enum_size, "term size (leaf count)")->required();
  sc_enum->add_option("--basis", enum_basis, "atoms to enumerate");
  sc_enum->add_option("--rules", enum_rules, "rule set naming the atoms");
  sc_enum->add_flag("--count-only", enum_count_only, "print the count instead of the terms");
  add_config(sc_enum);

  auto* sc_mw = app.add_subcommand("multiway", "expand all one-step rewrites breadth first");
  std::string mw_text, mw_input, mw_rules = "sk", mw_dot;
  int mw_depth = d.depth;
  std::uint64_t mw_nodes = d.max_nodes, mw_term_size = d.max_term_size;
  bool mw_check = false;
  sc_mw->add_option("term", mw_text, "term text; - reads standard input");
  sc_mw->add_option("--input", mw_input, "read the term from this file");
  sc_mw->add_option("--rules", mw_rules, "sk, ski, j, or a rule file");
  sc_mw->add_option("--depth", mw_depth, "expansion depth budget");
  sc_mw->add_option("--max-nodes", mw_nodes, "node budget");
  sc_mw->add_option("--max-term-size", mw_term_size, "per-node size budget");
  sc_mw->add_option("--dot", mw_dot, "write the graph in DOT form to this file (- for stdout)");
  sc_mw->add_flag("--check-confluence", mw_check, "classify the normal forms");
  add_config(sc_mw);

  auto* sc_census = app.add_subcommand("census", "halting statistics by size, as CSV");
  std::string cen_sizes, cen_basis = "SK", cen_rules = "sk";
  std::uint64_t cen_sample = 0, cen_seed = 0, cen_max_size = d.max_size;
  int cen_max_steps = d.max_steps;
  sc_census->add_option("--sizes", cen_sizes, "size or range a..b")->required();
  sc_census->add_option("--sample", cen_sample, "draws per size (0 = every term)");
  sc_census->add_option("--seed", cen_seed, "sampling seed");
  sc_census->add_option("--basis", cen_basis, "atoms to enumerate");
  sc_census->add_option("--rules", cen_rules, "sk, ski, j, or a rule file");
  sc_census->add_option("--max-steps", cen_max_steps, "per-term step budget");
  sc_census->add_option("--max-size", cen_max_size, "per-term size budget");
  add_config(sc_census);

  auto* sc_church = app.add_subcommand("church", "numeral encoding demos");
  std::string ch_text, ch_input, ch_rules = "ski";
  int ch_encode = -1;
  bool ch_decode = false;
  std::vector<std::uint64_t> ch_plus, ch_times;
  auto* ch_encode_opt = sc_church->add_option("--encode", ch_encode, "compile the numeral n");
  sc_church->add_flag("--decode", ch_decode, "read a term back as a numeral");
  sc_church->add_option("--plus", ch_plus, "compiled addition of two numerals")->expected(2);
  sc_church->add_option("--times", ch_times, "compiled multiplication of two numerals")
      ->expected(2);
  sc_church->add_option("term", ch_text, "term to decode; - reads standard input");
  sc_church->add_option("--input", ch_input, "read the term to decode from this file");
  sc_church->add_option("--rules", ch_rules,
                        "rule set for decoding (the compiler targets S, K, I)");
  add_config(sc_church);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  TermStore store;

  if (sc_parse->parsed()) {
    for (const char* name : {"S", "K", "I", "J"}) store.add_atom(name, AtomKind::Basis);
    ParseOptions options{to_notation(parse_from), parse_cmk};
    TermId t = parse_term(store, input_text(parse_text, parse_input, in), options);
    out << print_term(store, t, to_notation(parse_to)) << "\n";
    return 0;
  }

  if (sc_reduce->parsed()) {
    RuleSet rules = load_rules(store, red_rules);
    TermId t = parse_term(store, input_text(red_text, red_input, in));
    Strategy strategy = make_strategy(red_strategy, red_seed, red_index);
    ReduceLimits limits{red_max_steps, red_max_size, red_cycles, red_trace};
    ReductionOutcome outcome = reduce(store, rules, t, strategy, limits);
    if (red_trace) write_trace(out, store, rules, strategy, limits, outcome);
    out << "final: " << print_term(store, outcome.final_term) << "\n";
    out << "status: " << to_string(outcome.status) << "\n";
    out << "steps: " << outcome.steps << "\n";
    return 0;
  }

  if (sc_compile->parsed()) {
    LambdaPtr t = parse_lambda(input_text(comp_text, comp_input, in));
    TermId compiled = compile_lambda(store, t, comp_optimize);
    if (comp_pure) compiled = to_pure_sk(store, compiled);
    out << print_term(store, compiled) << "\n";
    return 0;
  }

  if (sc_search->parsed()) {
    RuleSet rules = load_rules(store, srch_rules);
    BehaviorSpec spec;
    if (srch_spec == "identity" || srch_spec == "constant" || srch_spec == "compose" ||
        srch_spec == "transpose") {
      spec = builtin_spec(store, srch_spec);
    } else {
      std::ifstream f(srch_spec);
      if (!f) throw std::invalid_argument("cannot open spec file: " + srch_spec);
      spec = load_spec(store, f, srch_spec);
    }
    std::vector<AtomId> basis = parse_basis(store, srch_basis);
    SearchFuel fuel{srch_fuel_steps, srch_fuel_size};
    SearchResult result = find_minimal(store, rules, spec, std::move(basis), srch_max, fuel);
    write_search_result(out, store, result);
    return !result.min_size && !result.unknowns.empty() ? 2 : 0;
  }

  if (sc_enum->parsed()) {
    load_rules(store, enum_rules);  // names the atoms the basis refers to
    Enumerator en(store, parse_basis(store, enum_basis));
    if (enum_count_only) {
      out << en.count(enum_size) << "\n";
      return 0;
    }
    en.for_each(enum_size, [&](TermId t) { out << print_term(store, t) << "\n"; });
    return 0;
  }

  if (sc_mw->parsed()) {
    RuleSet rules = load_rules(store, mw_rules);
    TermId t = parse_term(store, input_text(mw_text, mw_input, in));
    MwBudgets budgets{mw_depth, static_cast<std::size_t>(mw_nodes), mw_term_size};
    MultiwayGraph graph = build_graph(store, rules, t, budgets);
    bool dot_to_stdout = mw_dot == "-";
    if (!mw_dot.empty()) {
      if (dot_to_stdout) {
        write_dot(out, store, graph);
      } else {
        std::ofstream f(mw_dot);
        if (!f) throw std::invalid_argument("cannot open dot file: " + mw_dot);
        write_dot(f, store, graph);
      }
    }
    if (!dot_to_stdout) {
      out << "nodes: " << graph.nodes.size() << "\n";
      out << "edges: " << graph.edges.size() << "\n";
      out << "truncated: " << to_string(graph.truncated) << "\n";
      out << "normal-forms: " << graph.normal_forms().size() << "\n";
    }
    if (!mw_check) return 0;
    ConfluenceCheck check = check_confluence(graph);
    if (!dot_to_stdout) {
      out << "confluence: " << to_string(check.status) << "\n";
      if (check.normal_form) out << "normal-form: " << print_term(store, *check.normal_form) << "\n";
      if (check.witness) {
        out << "witness: " << print_term(store, check.witness->first) << "\n";
        out << "witness: " << print_term(store, check.witness->second) << "\n";
      }
    }
    return check.status == ConfluenceCheck::Status::Inconclusive ? 2 : 0;
  }

  if (sc_census->parsed()) {
    RuleSet rules = load_rules(store, cen_rules);
    std::vector<AtomId> basis = parse_basis(store, cen_basis);
    auto [lo, hi] = parse_sizes(cen_sizes);
    ReduceLimits limits{cen_max_steps, cen_max_size, true, false};
    CensusMode mode{cen_sample, cen_seed};
    write_census_csv(out, census(store, rules, std::move(basis), lo, hi, limits, mode));
    return 0;
  }

  if (sc_church->parsed()) {
    RuleSet rules = load_rules(store, ch_rules);
    int modes = (ch_encode_opt->count() > 0 ? 1 : 0) + (ch_decode ? 1 : 0) +
                (ch_plus.empty() ? 0 : 1) + (ch_times.empty() ? 0 : 1);
    if (modes != 1)
      throw std::invalid_argument("church needs exactly one of --encode/--decode/--plus/--times");
    if (ch_encode_opt->count() > 0) {
      if (ch_encode < 0) throw std::invalid_argument("--encode needs a non-negative numeral");
      out << print_term(store, compile_lambda(store, church_encode(
                                                         static_cast<unsigned>(ch_encode))))
          << "\n";
      return 0;
    }
    if (ch_decode) {
      TermId t = parse_term(store, input_text(ch_text, ch_input, in));
      std::optional<unsigned> n = church_decode(store, t, rules);
      if (!n) {
        out << "unknown\n";
        return 2;
      }
      out << *n << "\n";
      return 0;
    }
    const std::vector<std::uint64_t>& operands = ch_plus.empty() ? ch_times : ch_plus;
    LambdaPtr op = ch_plus.empty() ? parse_lambda("\\m n f. m (n f)")
                                   : parse_lambda("\\m n f x. m f (n f x)");
    TermId compiled = compile_lambda(store, op);
    TermId lhs = compile_lambda(store, church_encode(static_cast<unsigned>(operands[0])));
    TermId rhs = compile_lambda(store, church_encode(static_cast<unsigned>(operands[1])));
    TermId applied = store.app(store.app(compiled, lhs), rhs);
    std::optional<unsigned> n = church_decode(store, applied, rules);
    if (!n) {
      out << "unknown\n";
      return 2;
    }
    out << *n << "\n";
    return 0;
  }

  err << "error: no subcommand\n";
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  try {
    return run_impl(args, out, err, in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run(args, out, err, std::cin);
}

}  // namespace skc
