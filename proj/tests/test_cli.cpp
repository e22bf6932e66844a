#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cgwc/cli.hpp"
#include "cgwc/instance_io.hpp"
#include "support.hpp"

using namespace cgwc;
using namespace testsupport;

namespace {

std::string fixture(const std::string& name) { return std::string(CGWC_FIXTURE_DIR) + "/" + name; }

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args, const CommandHooks& hooks = {}) {
  std::ostringstream out, err;
  int code = run_command(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::string run_binary(const std::string& args) {
  std::string cmd = std::string(CGWC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[256];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, got);
  pclose(pipe);
  return output;
}

}  // namespace

TEST_CASE("instance parsing accepts the documented forms") {
  auto tri = parse_instance("3 3\n0 1 1\n1 2 1\n0 2 1\nspec 2\nk 0\n");
  CHECK(tri.graph.vertex_count() == 3);
  CHECK(tri.graph.edge_count() == 3);
  CHECK(tri.spec == ConnSpec({2}));
  CHECK(tri.k == 0);

  auto lone = parse_instance("1 0\nspec inf\nk 0\n");
  CHECK(lone.graph.vertex_count() == 1);
  CHECK(lone.spec == ConnSpec({kInfWeight}));

  auto commented = parse_instance("# header\n2 1 # counts\n0 1 3\n\nspec 1 1\nk 5\n");
  CHECK(commented.graph.weight(0, 1) == 3);
}

TEST_CASE("instance parsing rejects malformed input with line positions") {
  auto expect_error = [](const std::string& text, int line) {
    try {
      parse_instance(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("2 1\n0 1 1\nspec 2 1\nk 0\n", 3);       // unsorted spec
  expect_error("2 2\n0 1 1\n0 1 2\nspec 1\nk 0\n", 3);  // duplicate edge
  expect_error("2 1\n0 0 1\nspec 1\nk 0\n", 2);         // loop
  expect_error("2 1\n0 5 1\nspec 1\nk 0\n", 2);         // vertex out of range
  expect_error("2 1\n0 1 0\nspec 1\nk 0\n", 2);         // zero weight
  expect_error("2 1\n0 1 1\nspec inf 1\nk 0\n", 3);     // inf before an integer
  expect_error("2 1\n0 1 1\nspec 1\n", 3);              // missing budget line
  expect_error("2 1\n0 1 1\nspec 1\nk -1\n", 4);        // negative budget
}

TEST_CASE("render and parse round-trip") {
  for (const char* name : {"triangle.cgwc", "two_k4_bridge.cgwc", "star_leaf.cgwc"}) {
    std::ifstream in(fixture(name));
    std::stringstream buffer;
    buffer << in.rdbuf();
    Instance inst = parse_instance(buffer.str());
    std::string rendered = render_instance(inst);
    Instance again = parse_instance(rendered);
    CHECK(again == inst);
    CHECK(render_instance(again) == rendered);
  }
}

TEST_CASE("solve command answers and exit codes") {
  auto yes = run({"solve", fixture("triangle.cgwc")});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("answer YES") != std::string::npos);
  CHECK(yes.out.find("weight 0") != std::string::npos);

  auto no = run({"solve", fixture("path4_no.cgwc")});
  CHECK(no.code == 1);
  CHECK(no.out.find("answer NO") != std::string::npos);

  auto bridge = run({"solve", fixture("two_k4_bridge.cgwc")});
  CHECK(bridge.code == 0);
  CHECK(bridge.out.find("edge 3 4 1") != std::string::npos);
}

TEST_CASE("oracle and solve agree on every fixture") {
  for (const char* name : {"triangle.cgwc", "single_vertex.cgwc", "two_k4_bridge.cgwc",
                           "c6_split.cgwc", "star_leaf.cgwc", "tri_k4_disjoint.cgwc",
                           "two_triangles_bridge.cgwc", "path4_no.cgwc"}) {
    auto solved = run({"solve", fixture(name)});
    auto oracled = run({"oracle", fixture(name)});
    CHECK(solved.code == oracled.code);
    auto answer_of = [](const std::string& text) {
      auto pos = text.find("answer ");
      return text.substr(pos, text.find('\n', pos) - pos);
    };
    CHECK(answer_of(solved.out) == answer_of(oracled.out));
  }
}

TEST_CASE("mincut, sep, goodsep, cutreduce, family commands") {
  auto mc = run({"mincut", fixture("triangle.cgwc")});
  CHECK(mc.code == 0);
  CHECK(mc.out.find("lambda 2") != std::string::npos);

  auto lone = run({"mincut", fixture("single_vertex.cgwc")});
  CHECK(lone.out.find("lambda inf") != std::string::npos);

  auto sep = run({"sep", fixture("two_k4_bridge.cgwc"), "--a", "0", "--b", "7"});
  CHECK(sep.code == 0);
  CHECK(sep.out.find("weight 1") != std::string::npos);
  CHECK(sep.out.find("cut 3 4") != std::string::npos);

  auto gs = run({"goodsep", "3", "1", fixture("two_k4_bridge.cgwc")});
  CHECK(gs.code == 0);
  CHECK(gs.out.find("verdict good") != std::string::npos);
  CHECK(gs.out.find("side_a 0 1 2 3") != std::string::npos);

  auto ub = run({"goodsep", "2", "2", fixture("triangle.cgwc")});
  CHECK(ub.out.find("verdict unbreakable") != std::string::npos);

  auto cr = run({"cutreduce", "inf", fixture("two_k4_bridge.cgwc"), "--boundary", "0"});
  CHECK(cr.code == 0);
  CHECK(cr.out.find("vertices") != std::string::npos);

  auto fam = run({"family", "1", "1"});
  CHECK(fam.code == 0);
  CHECK(fam.out.find("members 4") != std::string::npos);
}

TEST_CASE("solver honors config overrides from file and flags") {
  std::string config_path = fixture("override.conf");
  {
    std::ofstream conf(config_path);
    conf << "# exercise the separation branch\nq=3\np=2\n";
  }
  auto with_file = run({"solve", fixture("two_k4_bridge.cgwc"), "--config", config_path});
  CHECK(with_file.code == 0);
  CHECK(with_file.out.find("config p 2 q 3") != std::string::npos);
  auto with_flags = run({"solve", fixture("two_k4_bridge.cgwc"), "--q", "3", "--p", "2"});
  CHECK(with_flags.out.find("answer YES") != std::string::npos);
  std::remove(config_path.c_str());
}

TEST_CASE("errors surface with exit code 2") {
  auto missing = run({"solve", fixture("nope.cgwc")});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);

  std::string bad_path = fixture("bad.cgwc");
  {
    std::ofstream bad(bad_path);
    bad << "2 1\n0 1 1\nspec 2 1\nk 0\n";
  }
  auto bad_run = run({"solve", bad_path});
  CHECK(bad_run.code == 2);
  CHECK(bad_run.err.find("line 3") != std::string::npos);
  std::remove(bad_path.c_str());

  auto big_family = run({"family", "3", "1"});
  CHECK(big_family.code == 2);
  CHECK(big_family.err.find("cap") != std::string::npos);

  auto no_selftest = run({"selftest"});
  CHECK(no_selftest.code == 2);
}

TEST_CASE("selftest hook is forwarded") {
  CommandHooks hooks;
  hooks.selftest = [](const std::vector<std::string>& args, std::ostream& out) {
    out << "criteria " << args.size() << "\n";
    return 0;
  };
  auto res = run({"selftest", "1", "9"}, hooks);
  CHECK(res.code == 0);
  CHECK(res.out == "criteria 2\n");
}

TEST_CASE("repeated in-process runs are byte-identical") {
  std::vector<std::vector<std::string>> commands = {
      {"solve", fixture("two_k4_bridge.cgwc")},
      {"oracle", fixture("c6_split.cgwc")},
      {"mincut", fixture("tri_k4_disjoint.cgwc")},
      {"sep", fixture("two_triangles_bridge.cgwc"), "--a", "0", "--b", "5"},
      {"goodsep", "2", "2", fixture("two_k4_bridge.cgwc")},
      {"cutreduce", "2", fixture("two_triangles_bridge.cgwc"), "--boundary", "0"},
      {"family", "1", "2"},
  };
  for (const auto& cmd : commands) {
    auto first = run(cmd);
    auto second = run(cmd);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("repeated binary runs are byte-identical") {
  std::string args = "solve " + fixture("two_k4_bridge.cgwc");
  CHECK(run_binary(args) == run_binary(args));
}
