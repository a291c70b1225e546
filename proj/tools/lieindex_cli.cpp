// Command-line driver over the C API.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "lieindex/lieindex.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string type;
  std::size_t rank = 0;
  std::string partition;
  std::size_t max_rank = 0;
  std::string suite = "all";
  std::uint64_t seed = 20020801;
  std::uint32_t trials = 3;
  std::uint32_t coeff_bound = 1000;
  bool certify = false;
  std::string format = "json";
  std::string cache_dir;
  std::size_t jobs = 1;
};

using ConfigPtr = std::unique_ptr<lieindex_config, decltype(&lieindex_config_free)>;
using ResultPtr = std::unique_ptr<lieindex_result, decltype(&lieindex_result_free)>;

int exit_for(lieindex_status s) {
  switch (s) {
    case LIEINDEX_OK: return kExitOk;
    case LIEINDEX_ERR_ARGUMENT:
    case LIEINDEX_ERR_SPEC: return kExitUsage;
    default: return kExitInternal;
  }
}

int report_error(lieindex_status s) {
  std::cerr << "error: " << lieindex_status_string(s) << ": " << lieindex_last_error() << "\n";
  return exit_for(s);
}

// "D" + --rank 4 -> "D4"; "D4" stays.
std::string algebra_name(const Options& o) {
  if (o.type.size() == 1 && o.rank > 0) return o.type + std::to_string(o.rank);
  return o.type;
}

lieindex_status configure(lieindex_config* c, const Options& o, bool suite_filters) {
  lieindex_status s = LIEINDEX_OK;
  auto step = [&](lieindex_status r) {
    if (s == LIEINDEX_OK) s = r;
  };
  step(lieindex_config_set_seed(c, o.seed));
  step(lieindex_config_set_trials(c, o.trials));
  step(lieindex_config_set_coeff_bound(c, o.coeff_bound));
  step(lieindex_config_set_certify(c, o.certify ? 1 : 0));
  step(lieindex_config_set_jobs(c, o.jobs));
  if (!o.cache_dir.empty()) step(lieindex_config_set_cache_dir(c, o.cache_dir.c_str()));
  if (suite_filters) {
    if (!o.type.empty()) step(lieindex_config_set_type(c, o.type.c_str()));
    if (o.rank > 0) step(lieindex_config_set_rank(c, o.rank));
    if (o.max_rank > 0) step(lieindex_config_set_max_rank(c, o.max_rank));
  }
  return s;
}

int emit(lieindex_result* r, const Options& o) {
  if (o.format == "table")
    std::cout << lieindex_result_table(r);
  else {
    std::string text = lieindex_result_json(r);
    if (text.empty() || text.back() != '\n') text += '\n';
    std::cout << text;
  }
  return lieindex_result_exit_code(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index computations for Lie algebras, centralisers and normalisers of nilpotent elements"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", o.trials, "Random trials per rank computation")->capture_default_str();
  app.add_option("--coeff-bound", o.coeff_bound, "Bound on random coefficients")->capture_default_str();
  app.add_flag("--certify", o.certify, "Confirm randomized ranks exactly where feasible");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "Directory for cached suite items");
  app.add_option("--jobs", o.jobs, "Worker threads (0: all cores)")->capture_default_str();

  auto* info = app.add_subcommand("algebra-info", "Dimension, rank, exponents and index of a simple algebra");
  info->add_option("--type", o.type, "Algebra, e.g. A3, D4, G2, or a family letter with --rank")->required();
  info->add_option("--rank", o.rank, "Rank when --type is a family letter");

  auto* orbit = app.add_subcommand("orbit", "Full report for one nilpotent orbit");
  orbit->add_option("--type", o.type, "Algebra, e.g. D4 or G2")->required();
  orbit->add_option("--rank", o.rank, "Rank when --type is a family letter");
  orbit->add_option("--partition", o.partition, "Partition like 5,3, or search:<dim z> for Chevalley types")->required();

  auto* verify = app.add_subcommand("verify", "Run a theorem suite");
  verify->add_option("--suite", o.suite, "Suite name")
      ->check(CLI::IsMember({"reductive-index", "elashvili", "structure", "normaliser", "frobenius", "parabolic", "rais",
                             "all"}))
      ->capture_default_str();
  verify->add_option("--type", o.type, "Restrict to a family letter or an algebra such as D4");
  verify->add_option("--rank", o.rank, "Restrict to one rank");
  verify->add_option("--max-rank", o.max_rank, "Restrict to ranks up to this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  ConfigPtr cfg(lieindex_config_new(), &lieindex_config_free);
  if (!cfg) return kExitInternal;
  if (lieindex_status s = configure(cfg.get(), o, verify->parsed()); s != LIEINDEX_OK) return report_error(s);

  lieindex_result* raw = nullptr;
  lieindex_status s = LIEINDEX_OK;
  if (info->parsed())
    s = lieindex_algebra_info(algebra_name(o).c_str(), cfg.get(), &raw);
  else if (orbit->parsed())
    s = lieindex_orbit(algebra_name(o).c_str(), o.partition.c_str(), cfg.get(), &raw);
  else
    s = lieindex_verify(o.suite.c_str(), cfg.get(), &raw);
  if (s != LIEINDEX_OK) return report_error(s);
  ResultPtr result(raw, &lieindex_result_free);
  const int code = emit(result.get(), o);

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "elapsed " << secs << " s\n";
  return code;
}
