// Golden tests for the command-line surface: exit codes and key report
// lines, driven against the fixture structure files.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

#ifndef HSG_CLI_PATH
#error "HSG_CLI_PATH must point at the built CLI"
#endif
#ifndef HSG_DATA_DIR
#error "HSG_DATA_DIR must point at the fixture directory"
#endif

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
  std::string first_line() const {
    return output.substr(0, output.find('\n'));
  }
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  auto out_path = std::filesystem::temp_directory_path() /
                  ("hsg_cli_out_" + std::to_string(counter++) + ".txt");
  std::string cmd = std::string(HSG_CLI_PATH) + " " + args + " > " +
                    out_path.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  r.output = std::string(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
  std::error_code ec;
  std::filesystem::remove(out_path, ec);
  return r;
}

std::string data(const std::string& name) {
  return (std::filesystem::path(HSG_DATA_DIR) / name).string();
}

}  // namespace

TEST_CASE("check: exit codes partition by verdict") {
  RunResult ok = run_cli("check " + data("h2l.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.first_line() == "associative true");

  RunResult bad = run_cli("check " + data("h2m.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.contains("associative false"));
  CHECK(bad.contains("witness x=0 y=1 z=1"));
  CHECK(bad.contains("lhs {0}"));
  CHECK(bad.contains("rhs {0,1}"));

  RunResult missing = run_cli("check /no/such/file.json");
  CHECK(missing.exit_code == 2);
  CHECK(missing.contains("error:"));
}

TEST_CASE("props reports predicates and generated ideals") {
  RunResult r = run_cli("props " + data("h2l.json") + " --subset 0");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("subset {0}"));
  CHECK(r.contains("left_ideal false"));
  CHECK(r.contains("right_ideal true"));
  CHECK(r.contains("ideal false"));
  CHECK(r.contains("bi_ideal true"));
  CHECK(r.contains("quasi_ideal true"));
  CHECK(r.contains("idempotent true"));
  CHECK(r.contains("R {0}"));
  CHECK(r.contains("L {0,1}"));
  CHECK(r.contains("I {0,1}"));

  // multi-element subset on an order-3 structure
  RunResult r3 = run_cli("props " + data("h3l.json") + " --subset 0,2");
  CHECK(r3.exit_code == 0);
  CHECK(r3.contains("subset {0,2}"));
  CHECK(r3.contains("left_ideal false"));
  CHECK(r3.contains("right_ideal true"));
  CHECK(r3.contains("R {0,2}"));
  CHECK(r3.contains("L {0,1,2}"));
  CHECK(r3.contains("I {0,1,2}"));

  // non-hypersemigroup input is rejected: bi-ideals and generated ideals
  // presuppose associativity
  RunResult bad = run_cli("props " + data("h2m.json") + " --subset 0");
  CHECK(bad.exit_code == 2);
  CHECK(bad.contains("not a hypersemigroup"));

  RunResult out_of_range = run_cli("props " + data("h2l.json") + " --subset 0,5");
  CHECK(out_of_range.exit_code == 2);
  RunResult garbage = run_cli("props " + data("h2l.json") + " --subset 0,x");
  CHECK(garbage.exit_code == 2);
}

TEST_CASE("regular verdicts with evidence") {
  RunResult yes = run_cli("regular " + data("h2l.json"));
  CHECK(yes.exit_code == 0);
  CHECK(yes.first_line() == "regular true");
  CHECK(yes.contains("chain 0 {0}"));
  CHECK(yes.contains("chain 1 {1}"));

  RunResult no = run_cli("regular " + data("h2c.json"));
  CHECK(no.exit_code == 1);
  CHECK(no.first_line() == "regular false");
  CHECK(no.contains("failing_element 1"));
  CHECK(no.contains("chain 1 {0}"));

  RunResult err = run_cli("regular " + data("h2m.json"));
  CHECK(err.exit_code == 2);
}

TEST_CASE("verify subcommand") {
  RunResult t12 = run_cli("verify " + data("h2c.json") + " --theorem 12");
  CHECK(t12.exit_code == 0);
  CHECK(t12.contains("equivalence holds: both sides false"));

  RunResult t12l = run_cli("verify " + data("h2l.json") + " --theorem 12");
  CHECK(t12l.exit_code == 0);
  CHECK(t12l.contains("equivalence holds: both sides true"));

  for (int theorem : {7, 8, 9, 11}) {
    RunResult r = run_cli("verify " + data("h2l.json") + " --theorem " +
                          std::to_string(theorem));
    CHECK(r.exit_code == 0);
    CHECK(r.contains("holds"));
  }

  // theorem 8 requires a regular structure
  RunResult pre = run_cli("verify " + data("h2c.json") + " --theorem 8");
  CHECK(pre.exit_code == 2);
  CHECK(pre.contains("not regular"));

  RunResult unknown = run_cli("verify " + data("h2l.json") + " --theorem 10");
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("enumerate counts and streams") {
  RunResult count = run_cli("enumerate --order 2 --count");
  CHECK(count.exit_code == 0);
  CHECK(count.first_line() == "total 81");
  CHECK(count.contains("associative 30"));
  CHECK(count.contains("regular 28"));

  RunResult assoc = run_cli("enumerate --order 2 --associative --count");
  CHECK(assoc.exit_code == 0);
  CHECK(assoc.first_line() == "total 30");

  RunResult canon = run_cli("enumerate --order 2 --associative --canonical --count");
  CHECK(canon.exit_code == 0);
  CHECK(canon.first_line() == "total 17");

  RunResult stream = run_cli("enumerate --order 1");
  CHECK(stream.exit_code == 0);
  CHECK(stream.first_line() == "{\"order\":1,\"table\":[[[0]]]}");

  RunResult order3 = run_cli("enumerate --order 3 --associative --count");
  CHECK(order3.exit_code == 0);
  CHECK(order3.first_line() == "total 28111");

  RunResult bad = run_cli("enumerate --order 0 --count");
  CHECK(bad.exit_code == 2);
  RunResult too_big = run_cli("enumerate --order 5 --count");
  CHECK(too_big.exit_code == 2);
}

TEST_CASE("hunt refutes and exhausts") {
  RunResult refuted =
      run_cli("hunt --max-order 2 --conjecture 'forall A:right : A*A = A'");
  CHECK(refuted.exit_code == 1);
  CHECK(refuted.first_line() == "counterexample found");
  CHECK(refuted.contains(
      "structure {\"order\":2,\"table\":[[[0],[0]],[[0],[0]]]}"));
  CHECK(refuted.contains("A {0,1}"));
  CHECK(refuted.contains("lhs {0}"));
  CHECK(refuted.contains("rhs {0,1}"));

  RunResult safe = run_cli(
      "hunt --max-order 2 --conjecture "
      "'forall A:right, B:left : A*B <= A &cap B'");
  CHECK(safe.exit_code == 0);
  CHECK(safe.first_line() == "exhausted");
  CHECK(safe.contains("total 31"));

  RunResult syntax =
      run_cli("hunt --max-order 2 --conjecture 'forall A:subset : A <= A*H*'");
  CHECK(syntax.exit_code == 2);
  CHECK(syntax.contains("syntax error"));
  CHECK(syntax.contains("line 1"));

  RunResult no_conjecture = run_cli("hunt --max-order 2");
  CHECK(no_conjecture.exit_code == 2);
}

TEST_CASE("hunt reads conjecture files") {
  auto path = std::filesystem::temp_directory_path() / "hsg_conjecture.txt";
  {
    std::ofstream out(path);
    out << "forall A:right : A*A = A\n";
  }
  RunResult r = run_cli("hunt --max-order 2 --conjecture-file " +
                        path.string());
  CHECK(r.exit_code == 1);
  CHECK(r.first_line() == "counterexample found");
  std::error_code ec;
  std::filesystem::remove(path, ec);

  RunResult missing =
      run_cli("hunt --max-order 2 --conjecture-file /no/such/file.txt");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check").exit_code == 2);
  CHECK(run_cli("props " + data("h2l.json")).exit_code == 2);
  CHECK(run_cli("enumerate").exit_code == 2);
}
