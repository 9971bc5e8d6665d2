#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "symj/io.hpp"
#include "symj/sweep.hpp"

using namespace symj;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string records_json(const std::vector<InstanceRecord>& rs, Mode m) {
  std::string out;
  for (const auto& r : rs) out += record_to_json(r, m).dump() + "\n";
  return out;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("tiny sweep over z4 agrees everywhere") {
  SweepConfig cfg;
  cfg.max_order = 4;
  cfg.rings = {"z4"};
  cfg.mode = Mode::Classify;
  auto recs = serial::evaluate(enumerate_instances(cfg), cfg.mode);
  CHECK(!recs.empty());
  for (const auto& r : recs) CHECK(r.agreement);
  auto sum = summarize(recs);
  CHECK(sum.mismatches == 0);
  CHECK(sum.instances == recs.size());
}

TEST_CASE("z3 up to order 8 never holds") {
  SweepConfig cfg;
  cfg.max_order = 8;
  cfg.rings = {"z3"};
  auto recs = serial::evaluate(enumerate_instances(cfg), Mode::Verify);
  CHECK(summarize(recs).holds == 0);
}

TEST_CASE("z8 with a nonidentity involution never holds") {
  SweepConfig cfg;
  cfg.max_order = 8;
  cfg.rings = {"z8"};
  for (const auto& inst : enumerate_instances(cfg))
    if (!inst.tau.is_identity()) CHECK_FALSE(evaluate_instance(inst, Mode::Verify).direct);
}

TEST_CASE("parallel records equal serial records") {
  SweepConfig cfg;
  cfg.max_order = 10;
  cfg.rings = {"z4", "z8", "z4xz2"};
  for (Mode m : {Mode::Verify, Mode::Classify, Mode::Lemmas}) {
    auto inst = enumerate_instances(cfg);
    const auto a = records_json(serial::evaluate(inst, m), m);
    const auto b = records_json(omp::evaluate(inst, m, 4), m);
    CHECK(a == b);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  SweepConfig cfg;
  cfg.max_order = 8;
  cfg.rings = {"z4", "dual-z4"};
  cfg.mode = Mode::Classify;
  std::ostringstream log;
  cfg.out_path = "sweep_a.json";
  CHECK(run_sweep(cfg, log) == 0);
  cfg.out_path = "sweep_b.json";
  cfg.jobs = 3;
  CHECK(run_sweep(cfg, log) == 0);
  const std::string a = read_file("sweep_a.json"), b = read_file("sweep_b.json");
  CHECK(!a.empty());
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == "symj-report/1");
  CHECK(j["records"].size() == j["summary"]["instances"].get<std::size_t>());
  CHECK_FALSE(j["summary"].contains("elapsed_seconds"));
  std::remove("sweep_a.json");
  std::remove("sweep_b.json");
}

TEST_CASE("csv output") {
  SweepConfig cfg;
  cfg.max_order = 4;
  cfg.rings = {"z4"};
  auto recs = serial::evaluate(enumerate_instances(cfg), Mode::Classify);
  const std::string csv = report_csv(recs, Mode::Classify);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("structure.tag") != std::string::npos);
  CHECK(header.find("ring_conditions.mixed_pairs") != std::string::npos);
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == recs.size());
}

TEST_CASE("char two rings are recorded, not evaluated") {
  const std::string path = "f4_sweep_test.json";
  {
    std::ofstream f(path);
    f << R"({"size": 4,
      "add": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
      "mul": [[0,0,0,0],[0,1,2,3],[0,2,3,1],[0,3,1,2]]})";
  }
  SweepConfig cfg;
  cfg.max_order = 3;
  cfg.rings = {path};
  auto recs = serial::evaluate(enumerate_instances(cfg), Mode::Verify);
  REQUIRE_FALSE(recs.empty());
  for (const auto& r : recs) CHECK(r.rejected_char_two);
  CHECK(summarize(recs).rejected == recs.size());
  std::remove(path.c_str());
}

TEST_CASE("config validation") {
  SweepConfig cfg;
  cfg.max_order = 17;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.allow_large = true;
  CHECK_NOTHROW(validate(cfg));
  cfg.max_order = 33;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.rings.clear();
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = {};
  cfg.use_catalog = false;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("group files") {
  const std::string path = "klein_test.json";
  {
    std::ofstream f(path);
    f << R"({"name": "V4", "order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
             "names": ["e","x","y","z"]})";
  }
  Group g = load_group_file(path);
  CHECK(g.label() == "V4");
  CHECK(g.name(3) == "z");
  CHECK(group_from_json(group_to_json(g), "copy").table() == g.table());

  SweepConfig cfg;
  cfg.use_catalog = false;
  cfg.group_files = {path};
  cfg.rings = {"z4"};
  auto inst = enumerate_instances(cfg);
  CHECK(!inst.empty());
  for (const auto& i : inst) CHECK(i.group->label() == "V4");
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_group_file("does_not_exist.json"), std::invalid_argument);
}

TEST_CASE("explain") {
  SweepConfig cfg;
  cfg.max_order = 2;
  cfg.rings = {"z4"};
  auto inst = enumerate_instances(cfg);
  REQUIRE(inst.size() == 1);
  const std::string text = explain_instance(inst[0]);
  CHECK(text.find("structure case: IA") != std::string::npos);
  CHECK(text.find("direct verdict: anticommutative") != std::string::npos);
}

}  // TEST_SUITE
