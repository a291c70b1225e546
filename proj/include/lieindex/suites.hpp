#pragma once

// Theorem suites over the test algebras and their nilpotent orbits, with a
// worker pool, an on-disk cache of per-item payloads and JSONL output.

#include <optional>
#include <string>
#include <vector>

#include "lieindex/nilanalysis.hpp"

namespace lieindex {

struct SuiteConfig {
  std::string suite = "all";
  std::string type;  // "", a family letter ("D") or an algebra ("D4")
  std::optional<std::size_t> rank;
  std::optional<std::size_t> max_rank;
  RandomCfg cfg;
  std::string cache_dir;  // empty: no cache
  std::size_t jobs = 1;   // 0: hardware concurrency

  // Throws InvalidSpec.
  void validate() const;
};

const std::vector<std::string>& suite_names();

struct SuiteItem {
  std::string suite;
  std::string label;
  Status status = Status::Pass;
  Json json;  // full line, including suite/item/status
};

struct SuiteResult {
  SuiteConfig config;
  std::vector<SuiteItem> items;
  std::size_t passed = 0, failed = 0, reported = 0, skipped = 0, errors = 0;
  std::size_t cache_hits = 0;

  Json header() const;
  Json summary() const;
  // Header line, one line per item, summary line.
  std::string to_jsonl() const;
  std::string to_table() const;
  // 0 all asserted checks hold, 1 some check failed, 3 an item raised an
  // internal error.
  int exit_code() const;
};

SuiteResult run_suite(const SuiteConfig& config);

// "A3", "D4": matrix realization; "G2", "F4", "E6": Chevalley basis.
bool is_classical_name(const std::string& type);
// dim, rank, exponents with multiplicity, Killing nondegeneracy, index.
Json algebra_info(const std::string& type, const RandomCfg& cfg);
// selector: a partition "5,3" for classical types, or "search:<dim z>".
OrbitReport orbit_by_selector(const std::string& type, const std::string& selector, const RandomCfg& cfg);

// Per-item cache. Files hold {"key": ..., "payload": ...}; writes go to a
// temporary file that is then renamed into place.
class ResultCache {
 public:
  explicit ResultCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& key) const;
  void store(const std::string& key, const Json& payload) const;
  std::string path_for(const std::string& key) const;

 private:
  std::string dir_;
};

// Key for one item under a randomness configuration.
std::string cache_key(const std::string& kind, const std::string& label, const RandomCfg& cfg);

}  // namespace lieindex
