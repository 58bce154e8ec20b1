#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SKEWLINES_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

json run_json(const std::string& args) {
  const Run r = run(args);
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "skewlines_cli_test";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST_CASE("census q=2") {
  const json j = run_json("census --q 2 --algorithm bk");
  CHECK(j["schema_version"] == 1);
  CHECK(j["histogram"] == json({{"5", 216}, {"6", 72}}));
  CHECK(run_json("census --q 2 --algorithm bk --jobs 4")["histogram"] == j["histogram"]);
  const Run csv = run("census --q 2 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out == "size,count\n5,216\n6,72\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").status == 2);
  CHECK(run("census").status == 2);
  CHECK(run("census --q 2 --algorithm nope").status == 2);
  CHECK(run("census --q 6").status == 2);
  CHECK(run("orbit-census --q 4").status == 2);
  CHECK(run("construct --q 3 --all-quadrics").status == 2);
  CHECK(run("field-info --p 4 --e 1").status == 2);
  CHECK(run("construct --q 3 --signs 01").status == 2);
}

TEST_CASE("verify exits 0") {
  for (int q : {2, 3}) {
    const json j = run_json("verify --q " + std::to_string(q));
    CHECK(j["all_passed"] == true);
  }
}

TEST_CASE("DIMACS export and import") {
  const auto path = scratch("q2.dimacs");
  const Run r = run("graph --q 2 --format dimacs");
  REQUIRE(r.status == 0);
  std::ofstream(path) << r.out;
  const json j = run_json("census --dimacs " + path.string());
  CHECK(j["histogram"] == json({{"5", 216}, {"6", 72}}));
  CHECK(run("graph --q 2 --format dimacs").out == r.out);
}

TEST_CASE("stabilizer file feeds the orbit census") {
  const auto path = scratch("stab3.txt");
  const json s = run_json("stabilizer --q 3 --out " + path.string());
  CHECK(s["stabilizer_order"] == 48);
  CHECK(s["group_order"] == 26127360);
  const json a = run_json("orbit-census --q 3");
  const json b = run_json("orbit-census --q 3 --group " + path.string());
  CHECK(a["histogram"] == b["histogram"]);
  CHECK(a["complete"] == true);
}

TEST_CASE("checkpoint resume gives the same histogram") {
  const auto ck = scratch("census.ck");
  const json first = run_json("census --q 3 --checkpoint " + ck.string());
  std::ifstream in(ck);
  std::string head;
  std::getline(in, head);
  CHECK_NOTHROW(json::parse(head));
  int ids = 0;
  for (std::string line; std::getline(in, line);) ids += !line.empty();
  CHECK(ids == first["tasks"]);
  const json second = run_json("census --q 3 --checkpoint " + ck.string());
  CHECK(second["resumed_tasks"] == first["tasks"]);
  CHECK(second["histogram"] == first["histogram"]);

  // an interrupted run resumes to the full answer
  std::filesystem::remove(ck);
  const json cut = run_json("census --q 3 --budget-seconds 0.3 --checkpoint " + ck.string());
  CHECK(cut["complete"] == (cut["completed_tasks"] == cut["tasks"]));
  const json resumed = run_json("census --q 3 --checkpoint " + ck.string());
  CHECK(resumed["histogram"] == first["histogram"]);
  CHECK(resumed["complete"] == true);
}

TEST_CASE("construct output") {
  const json j = run_json("construct --q 3 --format json");
  CHECK(j["size"] == 13);
  CHECK(j["lines"].size() == 13);
  CHECK(j["extension"]["size"] == 13);
  CHECK(j["triple"] == json({0, 5, 10}));
  const json k = run_json("construct --q 3 --signs 101");
  CHECK(k["signs"] == json({true, false, true}));
  const json all = run_json("construct --q 2 --all-quadrics");
  CHECK(all["census"]["configurations"] == 360);
  CHECK(all["census"]["multiplicity"] == json({{"20", 72}}));
}

TEST_CASE("field info") {
  const json j = run_json("field-info --p 2 --e 2");
  CHECK(j["modulus"] == json({1, 0, 0, 1, 1}));
  CHECK(j["mu_order"] == 15);
  CHECK(j["nu_norm_is_minus_one"] == true);
  CHECK(run_json("field-info --p 3 --e 1 --modulus 2,2,1")["mu_order"] == 8);
}

TEST_CASE("lines listing") {
  const json j = run_json("lines --q 3");
  CHECK(j["count"] == 112);
  CHECK(j["lines"].size() == 112);
  CHECK(j["lines"][100]["family"] == 3);
  const Run csv = run("lines --q 2 --format csv");
  CHECK(csv.status == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 28);
}

TEST_CASE("emitted cliques") {
  const auto path = scratch("cliques.txt");
  run_json("census --q 2 --emit-cliques " + path.string());
  std::ifstream in(path);
  int n = 0;
  for (std::string line; std::getline(in, line);) ++n;
  CHECK(n == 288);
}
