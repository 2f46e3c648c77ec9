// test_cli.cpp
// Copyright (c) 2026, the skc authors
// Licensed under the Apache License Version 2.0.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "skc/cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  CliResult r;
  r.code = skc::run(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Scoped temp file in the test working directory.
struct TempFile {
  std::string path;
  TempFile(std::string name, const std::string& body) : path(std::move(name)) {
    std::ofstream f(path);
    f << body;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli reduces the size nine transposer") {
  auto r = cli({"reduce", "--rules", "sk", "S(S(KS)(S(KK)S))(KK) f g x"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("final: fxg\n") != std::string::npos);
  CHECK(r.out.find("status: normal-form\n") != std::string::npos);
}

TEST_CASE("cli reduce reports final term, status and steps") {
  auto r = cli({"reduce", "Kab"});
  CHECK(r.code == 0);
  CHECK(r.out == "final: a\nstatus: normal-form\nsteps: 1\n");

  auto traced = cli({"reduce", "--trace", "SKKa"});
  CHECK(traced.code == 0);
  CHECK(traced.out.rfind("# ruleset=sk strategy=leftmost-outermost", 0) == 0);
  CHECK(traced.out.find("1\tS\t\tKa(Ka)\t4\n") != std::string::npos);
  CHECK(traced.out.find("final: a\n") != std::string::npos);

  auto cycled = cli({"reduce", "--rules", "ski", "--strategy", "ri", "--detect-cycles",
                     "SII(SII)"});
  CHECK(cycled.code == 0);
  CHECK(cycled.out.find("status: cycle\n") != std::string::npos);
  CHECK(cycled.out.find("steps: 3\n") != std::string::npos);

  auto limited = cli({"reduce", "--max-steps", "1", "SKKa"});
  CHECK(limited.out.find("status: step-limit\n") != std::string::npos);
}

TEST_CASE("cli parse echoes and converts notation") {
  CHECK(cli({"parse", "S(KS)K"}).out == "S(KS)K\n");
  CHECK(cli({"parse", "--to", "bracket", "S(KS)K"}).out == "s[k[s]][k]\n");
  CHECK(cli({"parse", "--from", "bracket", "s[k[s]][k]"}).out == "S(KS)K\n");
  CHECK(cli({"parse", "--c-means-k", "SCC"}).out == "SKK\n");
  CHECK(cli({"parse", "((S K) K)"}).out == "SKK\n");
  // "-" pulls the term from standard input.
  CHECK(cli({"parse", "-"}, "S K K\n").out == "SKK\n");
}

TEST_CASE("cli reads terms from files") {
  TempFile term("cli_term_input.txt", "K a b\n");
  auto r = cli({"reduce", "--input", term.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("final: a\n") != std::string::npos);
}

TEST_CASE("cli compile performs bracket abstraction") {
  CHECK(cli({"compile", "\\x. x"}).out == "I\n");
  CHECK(cli({"compile", "--optimize", "\\x. \\y. x"}).out == "K\n");
  CHECK(cli({"compile", "\\x. \\y. x"}).out == "S(KK)I\n");
  CHECK(cli({"compile", "--pure-sk", "\\x. x"}).out == "SKK\n");
  auto open = cli({"compile", "\\x. x y"});
  CHECK(open.code == 1);
  CHECK(open.err.find("error:") == 0);
}

TEST_CASE("cli search reports the identity scan") {
  auto r = cli({"search", "--spec", "identity", "--max-size", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "spec: identity\n"
        "arity: 1\n"
        "target: v1\n"
        "scanned: size=1 count=2\n"
        "scanned: size=2 count=4\n"
        "scanned: size=3 count=16\n"
        "min-size: 3\n"
        "witnesses: 2\n"
        "witness: SKS\n"
        "witness: SKK\n"
        "unknowns: 0\n");
  // Identical invocations give identical bytes.
  CHECK(cli({"search", "--spec", "identity", "--max-size", "3"}).out == r.out);

  auto miss = cli({"search", "--spec", "identity", "--max-size", "2"});
  CHECK(miss.code == 0);  // a clean miss: no unknowns to blame
  CHECK(miss.out.find("min-size: none\n") != std::string::npos);

  auto starved = cli({"search", "--spec", "transpose", "--max-size", "4", "--fuel-steps", "1",
                      "--fuel-size", "10"});
  CHECK(starved.code == 2);  // nothing found and fuel-limited candidates remain
  CHECK(starved.out.find("min-size: none\n") != std::string::npos);
  CHECK(starved.out.find("unknowns: 0\n") == std::string::npos);
}

TEST_CASE("cli search loads spec files") {
  TempFile spec("cli_spec_selfapply.txt", "1\nv1 v1\n");
  auto r = cli({"search", "--spec", spec.path, "--basis", "SKI", "--rules", "ski",
                "--max-size", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("min-size: 3\n") != std::string::npos);
  CHECK(r.out.find("witness: SII\n") != std::string::npos);
}

TEST_CASE("cli enumerate streams terms or counts them") {
  CHECK(cli({"enumerate", "--size", "2"}).out == "SS\nSK\nKS\nKK\n");
  CHECK(cli({"enumerate", "--size", "9", "--count-only"}).out == "732160\n");
  CHECK(cli({"enumerate", "--size", "2", "--basis", "J", "--rules", "j"}).out == "JJ\n");
}

TEST_CASE("cli multiway summarizes the graph") {
  auto r = cli({"multiway", "--rules", "ski", "K(Ia)b"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "nodes: 4\n"
        "edges: 4\n"
        "truncated: none\n"
        "normal-forms: 1\n");

  auto checked = cli({"multiway", "--rules", "ski", "--check-confluence", "K(Ia)b"});
  CHECK(checked.code == 0);
  CHECK(checked.out.find("confluence: confluent\n") != std::string::npos);
  CHECK(checked.out.find("normal-form: a\n") != std::string::npos);

  auto stuck = cli({"multiway", "--check-confluence", "--depth", "4",
                    "SSK(S(K(SS(S(SSK))))K)g"});
  CHECK(stuck.code == 2);
  CHECK(stuck.out.find("confluence: inconclusive\n") != std::string::npos);
}

TEST_CASE("cli multiway writes dot graphs") {
  auto to_stdout = cli({"multiway", "--rules", "ski", "--dot", "-", "Kab"});
  CHECK(to_stdout.code == 0);
  CHECK(to_stdout.out.rfind("digraph multiway {", 0) == 0);
  CHECK(to_stdout.out.find(" -> ") != std::string::npos);
  CHECK(to_stdout.out.find("nodes: ") == std::string::npos);

  TempFile dot("cli_graph_out.dot", "");
  auto to_file = cli({"multiway", "--rules", "ski", "--dot", dot.path, "Kab"});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.find("nodes: 2\n") != std::string::npos);
  std::ifstream f(dot.path);
  std::stringstream content;
  content << f.rdbuf();
  CHECK(content.str().rfind("digraph multiway {", 0) == 0);
}

TEST_CASE("cli census prints csv rows") {
  auto r = cli({"census", "--sizes", "1..2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "size,total,halted,cycles,step_limit,size_limit,mean_steps,max_steps,max_size\n"
        "1,2,2,0,0,0,0.0000,0,1\n"
        "2,4,4,0,0,0,0.0000,0,2\n");

  auto sampled = cli({"census", "--sizes", "7", "--sample", "5", "--seed", "1"});
  CHECK(sampled.code == 0);
  std::istringstream lines(sampled.out);
  std::string header, row;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(row.rfind("7,5,", 0) == 0);
  CHECK(cli({"census", "--sizes", "7", "--sample", "5", "--seed", "1"}).out == sampled.out);
}

TEST_CASE("cli church encodes, decodes and computes") {
  CHECK(cli({"church", "--encode", "0"}).out == "KI\n");
  auto three = cli({"church", "--encode", "3"});
  CHECK(three.code == 0);
  std::string spelling = three.out.substr(0, three.out.size() - 1);
  auto back = cli({"church", "--decode", spelling});
  CHECK(back.code == 0);
  CHECK(back.out == "3\n");

  CHECK(cli({"church", "--plus", "2", "3"}).out == "5\n");
  CHECK(cli({"church", "--times", "2", "3"}).out == "6\n");
  CHECK(cli({"church", "--plus", "0", "0"}).out == "0\n");

  auto unknown = cli({"church", "--decode", "S"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out == "unknown\n");

  CHECK(cli({"church"}).code == 1);
  CHECK(cli({"church", "--encode", "1", "--decode", "K"}).code == 1);
}

TEST_CASE("cli config files supply defaults that flags override") {
  TempFile cfg("cli_cfg_steps.conf", "# tight budget\nmax-steps=1\n");
  auto limited = cli({"reduce", "--config", cfg.path, "SKKa"});
  CHECK(limited.out.find("status: step-limit\n") != std::string::npos);

  auto equals_form = cli({"reduce", "--config=" + cfg.path, "SKKa"});
  CHECK(equals_form.out.find("status: step-limit\n") != std::string::npos);

  auto overridden = cli({"reduce", "--config", cfg.path, "--max-steps", "50", "SKKa"});
  CHECK(overridden.out.find("status: normal-form\n") != std::string::npos);

  TempFile bad("cli_cfg_bad.conf", "no-such-key=3\n");
  auto rejected = cli({"reduce", "--config", bad.path, "SKKa"});
  CHECK(rejected.code == 1);
  CHECK(rejected.err.find("unknown config key") != std::string::npos);
}

TEST_CASE("cli loads rule files") {
  TempFile rules("cli_rules_b.txt", "B x1 x2 x3 -> x1 (x2 x3)\n");
  auto r = cli({"reduce", "--rules", rules.path, "Babc"});
  CHECK(r.code == 0);
  CHECK(r.out.find("final: a(bc)\n") != std::string::npos);
}

TEST_CASE("cli failures exit with one and explain themselves") {
  auto bad_flag = cli({"reduce", "--bogus", "x"});
  CHECK(bad_flag.code == 1);
  CHECK(!bad_flag.err.empty());

  auto bad_term = cli({"parse", "S(K"});
  CHECK(bad_term.code == 1);
  CHECK(bad_term.err.find("error:") == 0);
  CHECK(bad_term.err.find("unclosed") != std::string::npos);

  CHECK(cli({"reduce", "--input", "no_such_file_here.txt"}).code == 1);
  CHECK(cli({"reduce", "--rules", "no_such_rules.txt", "Ka"}).code == 1);
  CHECK(cli({"reduce"}).code == 1);  // no term at all
  CHECK(cli({}).code == 1);          // no subcommand
  CHECK(cli({"search", "--spec", "identity"}).code == 1);  // missing --max-size

  auto help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("skc") != std::string::npos);
}
