#include <doctest.h>

#include <sstream>

#include "spinform/cli.hpp"

using namespace spinform;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("forms command prints the reference column") {
  CliResult r = run({"forms", "3", "3", "--format", "text"});
  CHECK(r.status == 0);
  CHECK(r.out == "L(0,1,-3/2)\nL(1,0,-1/2)\nL(0,2,-3/2)\nL(0,0,1/2)\n");
}

TEST_CASE("wedge command") {
  CliResult r = run({"wedge", "3", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "F(0,0,0)\nF(0,1,0)\n");
}

TEST_CASE("tensor commands parse fractional weights") {
  CliResult spinor = run({"tensor-spinor", "3", "0,0,0"});
  CHECK(spinor.status == 0);
  CHECK(spinor.out == "L(0,0,-1/2)\n");

  CliResult defining = run({"tensor-defining", "3", "0,0,1/2"});
  CHECK(defining.status == 0);
  CHECK(defining.out == "L(0,1,-1/2)\nL(1,0,1/2)\n");

  CliResult eps = run({"tensor-defining", "3", "-1/2,-1/2,-1/2", "--epsilon"});
  CHECK(eps.status == 0);
  CHECK(eps.out == "L(0,1,-3/2)\nL(1,0,-1/2)\n");
}

TEST_CASE("diagram dot output has all sixteen nodes") {
  CliResult r = run({"diagram", "3", "--format", "dot"});
  CHECK(r.status == 0);
  size_t nodes = 0;
  for (size_t pos = r.out.find("[label=\"E["); pos != std::string::npos; pos = r.out.find("[label=\"E[", pos + 1))
    ++nodes;
  CHECK(nodes == 16);
}

TEST_CASE("verify command exits zero on success") {
  CliResult r = run({"verify", "2", "--depth", "10"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("OK") != std::string::npos);
}

TEST_CASE("identical invocations give identical bytes") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"ejtable", "3"}, std::vector<std::string>{"diagram", "2", "--format", "json"},
        std::vector<std::string>{"verify", "2", "--format", "json"}}) {
    CliResult a = run(args);
    CliResult b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("domain and usage failures exit one with a structured error") {
  CliResult bad_rank = run({"forms", "1", "0"});
  CHECK(bad_rank.status == 1);
  CHECK(bad_rank.err.find("\"error\"") != std::string::npos);

  CliResult bad_weight = run({"tensor-defining", "3", "0,0,nonsense"});
  CHECK(bad_weight.status == 1);
  CHECK(bad_weight.err.find("domain") != std::string::npos);

  CliResult bad_flag = run({"forms", "3", "3", "--format", "yaml"});
  CHECK(bad_flag.status == 1);
  CHECK(bad_flag.err.find("usage") != std::string::npos);

  CliResult not_admissible = run({"tensor-defining", "3", "1,0,0"});
  CHECK(not_admissible.status == 1);
  CHECK(not_admissible.err.find("domain") != std::string::npos);

  CliResult big_rank = run({"diagram", "12"});
  CHECK(big_rank.status == 1);
  CHECK(big_rank.err.find("resource") != std::string::npos);
}

TEST_CASE("json outputs carry the expected schema") {
  CliResult r = run({"forms", "2", "1", "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"summands\"") != std::string::npos);
  CHECK(r.out.find("\"fundamental_coords\"") != std::string::npos);

  CliResult d = run({"diagram", "2", "--format", "json"});
  CHECK(d.out.find("\"edges\"") != std::string::npos);
  CHECK(d.out.find("\"rank\": 2") != std::string::npos);
}
