#include <doctest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lieindex/error.hpp"
#include "lieindex/suites.hpp"

using namespace lieindex;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("lieindex-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  c.max_rank = 2;
  return c;
}

}  // namespace

TEST_CASE("suite config validation") {
  SuiteConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(c.validate(), Error);
  c.suite = "all";
  c.type = "X";
  CHECK_THROWS_AS(c.validate(), Error);
  c.type = "D4";
  CHECK_NOTHROW(c.validate());
  c.cfg.trials = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK(suite_names().size() == 8);
}

TEST_CASE("filters select algebras") {
  SuiteConfig c = small("reductive-index");
  c.type = "B";
  SuiteResult r = run_suite(c);
  REQUIRE(r.items.size() == 2);
  CHECK(r.items[0].label == "B2 matrix");
  CHECK(r.items[1].label == "B2 chevalley");
  c.type = "A2";
  CHECK(run_suite(c).items.size() == 2);
  c.type.clear();
  c.rank = 1;
  c.max_rank.reset();
  CHECK(run_suite(c).items.size() == 1);
}

TEST_CASE("elashvili suite on small algebras") {
  SuiteResult r = run_suite(small("elashvili"));
  CHECK(r.exit_code() == 0);
  std::size_t expected = 0;
  for (auto t : {ClassicalType{'A', 1}, ClassicalType{'A', 2}, ClassicalType{'B', 2}, ClassicalType{'C', 2}})
    expected += admissible_partitions(t).size();
  CHECK(r.items.size() == expected + 4);  // plus the G2 searches
  for (const auto& it : r.items) {
    CAPTURE(it.label);
    CHECK(it.json["ind_z"] == it.json["rank"]);
  }
}

TEST_CASE("JSONL output carries the configuration") {
  SuiteConfig c = small("frobenius");
  c.cfg.seed = 7;
  SuiteResult r = run_suite(c);
  const std::string text = r.to_jsonl();
  std::istringstream in(text);
  std::string line;
  std::vector<Json> lines;
  while (std::getline(in, line)) lines.push_back(Json::parse(line));
  REQUIRE(lines.size() == r.items.size() + 2);
  CHECK(lines.front()["kind"] == "header");
  CHECK(lines.front()["seed"] == 7);
  CHECK(lines.front()["trials"] == 3);
  CHECK(lines.front()["coeff_bound"] == 1000);
  CHECK(lines.back()["kind"] == "summary");
  CHECK(lines.back()["items"] == r.items.size());
  CHECK(r.passed + r.failed + r.reported + r.skipped + r.errors == r.items.size());
}

TEST_CASE("parallel runs match serial runs") {
  SuiteConfig c = small("all");
  const std::string serial = run_suite(c).to_jsonl();
  c.jobs = 3;
  CHECK(run_suite(c).to_jsonl() == serial);
}

TEST_CASE("cache") {
  const fs::path dir = fresh_dir("cache");
  SuiteConfig c = small("all");
  c.cache_dir = dir.string();
  SuiteResult first = run_suite(c);
  CHECK(first.cache_hits == 0);
  SuiteResult second = run_suite(c);
  CHECK(second.cache_hits > 0);
  CHECK(second.to_jsonl() == first.to_jsonl());

  SuiteConfig uncached = small("all");
  CHECK(run_suite(uncached).to_jsonl() == first.to_jsonl());

  SuiteConfig other = c;
  other.cfg.coeff_bound = 999;
  CHECK(run_suite(other).cache_hits == 0);

  // corrupt every entry: recomputed, same bytes
  for (const auto& f : fs::directory_iterator(dir)) std::ofstream(f.path(), std::ios::trunc) << "{not json";
  SuiteResult repaired = run_suite(c);
  CHECK(repaired.cache_hits == 0);
  CHECK(repaired.to_jsonl() == first.to_jsonl());
  CHECK(run_suite(c).cache_hits == second.cache_hits);

  fs::remove_all(dir);
  SuiteResult again = run_suite(c);
  CHECK(again.cache_hits == 0);
  CHECK(again.to_jsonl() == first.to_jsonl());
  for (const auto& f : fs::directory_iterator(dir)) CHECK(f.path().string().find(".tmp.") == std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("cache entries are keyed by configuration") {
  RandomCfg a, b;
  b.certify = true;
  CHECK(cache_key("orbit", "A1 2", a) != cache_key("orbit", "A1 2", b));
  const ResultCache cache(fresh_dir("keys").string());
  CHECK(cache.path_for(cache_key("orbit", "A1 2", a)) != cache.path_for(cache_key("orbit", "A1 2", b)));
  CHECK_FALSE(cache.load(cache_key("orbit", "A1 2", a)));
  cache.store(cache_key("orbit", "A1 2", a), Json{{"x", 1}});
  CHECK(cache.load(cache_key("orbit", "A1 2", a)) == Json{{"x", 1}});
  CHECK_FALSE(cache.load(cache_key("orbit", "A1 2", b)));
}

TEST_CASE("algebra info") {
  Json a3 = algebra_info("A3", RandomCfg{});
  CHECK(a3["dim"] == 15);
  CHECK(a3["rank"] == 3);
  CHECK(a3["exponents"] == Json::array({1, 2, 3}));
  CHECK(a3["killing_nondegenerate"] == true);
  CHECK(a3["index_equals_rank"] == true);
  Json g2 = algebra_info("G2", RandomCfg{});
  CHECK(g2["dim"] == 14);
  CHECK(g2["exponents"] == Json::array({1, 5}));
  CHECK(algebra_info("D4", RandomCfg{})["exponents"] == Json::array({1, 3, 3, 5}));
  CHECK(algebra_info("B3", RandomCfg{})["exponents"] == Json::array({1, 3, 5}));
  CHECK_THROWS_AS(algebra_info("D2", RandomCfg{}), Error);
}

TEST_CASE("orbit selectors") {
  OrbitReport r = orbit_by_selector("D4", "5,3", RandomCfg{});
  CHECK(r.json["dim_z"] == 6);
  CHECK(r.json["dim_d"] == 3);
  CHECK(r.json["dim_n"] == 9);
  CHECK(r.json["heart2"] == false);
  CHECK(orbit_by_selector("G2", "search:4", RandomCfg{}).json["dim_d"] == 2);
  CHECK_THROWS_AS(orbit_by_selector("A1", "3", RandomCfg{}), Error);
  CHECK_THROWS_AS(orbit_by_selector("G2", "2,1", RandomCfg{}), Error);
  CHECK_THROWS_AS(orbit_by_selector("G2", "search:x", RandomCfg{}), Error);
}
