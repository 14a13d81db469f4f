#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

// Runs the installed binary through the shell and returns its exit code.
int run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + " \"" + REALITY_CLI_PATH + std::string("\" ") + args +
                          " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("exit code 0 on success") {
  CHECK(run_cli("analyze Q8") == 0);
  CHECK(run_cli("analyze Q8 --json --plesken") == 0);
  CHECK(run_cli("chartable S3") == 0);
  CHECK(run_cli("count gl 2 3") == 0);
  CHECK(run_cli("count an 14") == 0);
  CHECK(run_cli("count sl2 7") == 0);
}

TEST_CASE("exit code 2 on parse and argument errors") {
  CHECK(run_cli("analyze Z9") == 2);
  CHECK(run_cli("analyze \"sdp(C3,C2)\"") == 2);
  CHECK(run_cli("count sl2 6") == 2);  // not a prime power
  CHECK(run_cli("verify paper bogus") == 2);
  CHECK(run_cli("") == 2);             // missing subcommand
  CHECK(run_cli("frobnicate") == 2);   // unknown subcommand
}

TEST_CASE("exit code 3 when budgets are exceeded") {
  CHECK(run_cli("analyze A5", "REALITY_BUDGET=10") == 3);
  CHECK(run_cli("analyze \"SL(2,7)\"", "REALITY_BUDGET=100") == 3);
}

TEST_CASE("budget override permits normally oversized work") {
  CHECK(run_cli("analyze C12", "REALITY_BUDGET=100") == 0);
}
