#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "markoff/treewalk.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SHADOWTREE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SHADOWTREE_BIN must point at the binary");
  std::string cmd = std::string("'") + bin + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = WEXITSTATUS(rc);
  return r;
}

}  // namespace

TEST_CASE("cli path prints the visited rows") {
  auto r = run_cli("path --root 0,0,1 --word lll");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "[1, 0, 1, 0, 1, 1]\n"
        "[1, 1, 1, 0, 2, 2]\n"
        "[1, 1, 2, 2, 5, 10]\n"
        "[1, 1, 5, 10, 13, 38]\n"
        "[1, 1, 13, 38, 34, 130]\n"
        "[1, 1, 34, 130, 89, 420]\n");
}

TEST_CASE("cli path row and field selection") {
  auto r = run_cli("path --root 1,9/10,1 --word rlrlrlr --row 9 --field gamma");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("-", 0) == 0);  // negative value

  auto approx = run_cli(
      "path --root 1,9/10,1 --word rlrlrlr --row 9 --field gamma --approx");
  CHECK(approx.out.find("~= -6.98") != std::string::npos);
  CHECK(approx.out.find("e33") != std::string::npos);
}

TEST_CASE("cli tree formats") {
  auto r = run_cli("tree --root 0,0,1 --height 1");
  CHECK(r.status == 0);
  CHECK(r.out == "[[1, 1, 2, 2, 5, 10], [], []]\n");

  auto empty = run_cli("tree --root 0,0,1 --height 0");
  CHECK(empty.out == "[]\n");

  auto vertex = run_cli("tree --root 0,2,1 --height 1");
  CHECK(vertex.out.find("16") != std::string::npos);

  // json round-trips through the library parser
  auto json = run_cli("tree --root 0,0,1 --height 3 --format json");
  CHECK(json.status == 0);
  auto tree = markoff::parse_tree_json(json.out);
  CHECK(markoff::serialize_json(tree.get()) + "\n" == json.out);
}

TEST_CASE("cli verify and witness exit codes") {
  auto ok = run_cli("verify --root 0,0,1 --depth 8");
  CHECK(ok.status == 0);
  CHECK(ok.out.rfind("ok:", 0) == 0);

  auto w = run_cli("witness --point 11/10,1 --max-depth 8");
  CHECK(w.status == 0);
  CHECK(w.out.rfind("witness word=", 0) == 0);
  CHECK(w.out.find("value=-") != std::string::npos);

  auto none = run_cli("witness --point 1/4,1/4 --max-depth 6");
  CHECK(none.out.rfind("no witness", 0) == 0);

  auto usage = run_cli("path --root not-a-number");
  CHECK(usage.status == 2);
}

TEST_CASE("cli region csv") {
  auto r = run_cli("region --bbox 0,1,0,1 --spacing 1/2 --depth 6");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("alpha,beta,", 0) == 0);
  // deterministic under parallelism
  auto r4 = run_cli("region --bbox 0,1,0,1 --spacing 1/2 --depth 6 --jobs 4");
  CHECK(r4.out == r.out);
}

TEST_CASE("cli constraints") {
  auto r = run_cli("constraints --depth 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("u,v,w\n", 0) == 0);

  auto m = run_cli("constraints --matrix-word \"\"");
  CHECK(m.out == "0,0,1\n-2,2,2\n-8,3,10\n");
}
