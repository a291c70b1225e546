#include "lieindex/lieindex.h"

#include <sstream>
#include <string>

#include "lieindex/error.hpp"
#include "lieindex/suites.hpp"

using namespace lieindex;

struct lieindex_config {
  SuiteConfig suite;
};

struct lieindex_result {
  std::string json;
  std::string table;
  int exit_code = 0;
};

namespace {

thread_local std::string last_error;

lieindex_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidSpec:
    case ErrorKind::RankOutOfBounds:
    case ErrorKind::InadmissiblePartition:
    case ErrorKind::InvalidCartanMatrix:
    case ErrorKind::Parse:
    case ErrorKind::NotNilpotent:
      return LIEINDEX_ERR_SPEC;
    case ErrorKind::CertifyBudgetExceeded:
      return LIEINDEX_ERR_BUDGET;
    case ErrorKind::Io:
      return LIEINDEX_ERR_IO;
    default:
      return LIEINDEX_ERR_CROSS_CHECK;
  }
}

template <typename F>
lieindex_status guarded(F f) {
  try {
    last_error.clear();
    f();
    return LIEINDEX_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = e.what();
    return LIEINDEX_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return LIEINDEX_ERR_INTERNAL;
  }
}

lieindex_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return LIEINDEX_ERR_ARGUMENT;
}

std::string orbit_table(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items())
    if (k != "checks") os << k << ": " << v.dump() << "\n";
  for (const auto& [name, c] : j["checks"].items()) {
    os << "check " << name << ": " << c.value("status", "");
    const std::string d = c.value("detail", "");
    if (!d.empty()) os << " (" << d << ")";
    os << "\n";
  }
  return os.str();
}

std::string info_table(const Json& j) {
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << ": " << v.dump() << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* lieindex_status_string(lieindex_status s) {
  switch (s) {
    case LIEINDEX_OK: return "ok";
    case LIEINDEX_ERR_ARGUMENT: return "invalid argument";
    case LIEINDEX_ERR_SPEC: return "invalid specification";
    case LIEINDEX_ERR_CROSS_CHECK: return "cross-check failed";
    case LIEINDEX_ERR_BUDGET: return "certification budget exceeded";
    case LIEINDEX_ERR_IO: return "i/o error";
    case LIEINDEX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lieindex_last_error(void) { return last_error.c_str(); }

lieindex_config* lieindex_config_new(void) {
  try {
    return new lieindex_config{};
  } catch (...) {
    return nullptr;
  }
}

void lieindex_config_free(lieindex_config* c) { delete c; }

lieindex_status lieindex_config_set_seed(lieindex_config* c, uint64_t seed) {
  if (!c) return null_arg("config");
  c->suite.cfg.seed = seed;
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_trials(lieindex_config* c, uint32_t trials) {
  if (!c) return null_arg("config");
  c->suite.cfg.trials = trials;
  return guarded([&] { c->suite.cfg.validate(); });
}

lieindex_status lieindex_config_set_coeff_bound(lieindex_config* c, uint32_t bound) {
  if (!c) return null_arg("config");
  c->suite.cfg.coeff_bound = bound;
  return guarded([&] { c->suite.cfg.validate(); });
}

lieindex_status lieindex_config_set_certify(lieindex_config* c, int on) {
  if (!c) return null_arg("config");
  c->suite.cfg.certify = on != 0;
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_type(lieindex_config* c, const char* type) {
  if (!c) return null_arg("config");
  if (!type) return null_arg("type");
  c->suite.type = type;
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_rank(lieindex_config* c, size_t rank) {
  if (!c) return null_arg("config");
  c->suite.rank = rank;
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_max_rank(lieindex_config* c, size_t max_rank) {
  if (!c) return null_arg("config");
  c->suite.max_rank = max_rank;
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_cache_dir(lieindex_config* c, const char* dir) {
  if (!c) return null_arg("config");
  c->suite.cache_dir = dir ? dir : "";
  return LIEINDEX_OK;
}

lieindex_status lieindex_config_set_jobs(lieindex_config* c, size_t jobs) {
  if (!c) return null_arg("config");
  c->suite.jobs = jobs;
  return LIEINDEX_OK;
}

lieindex_status lieindex_algebra_info(const char* type, const lieindex_config* c, lieindex_result** out) {
  if (!type) return null_arg("type");
  if (!c) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    const Json j = algebra_info(type, c->suite.cfg);
    *out = new lieindex_result{j.dump(), info_table(j), j["index_equals_rank"].get<bool>() ? 0 : 1};
  });
}

lieindex_status lieindex_orbit(const char* type, const char* selector, const lieindex_config* c,
                               lieindex_result** out) {
  if (!type) return null_arg("type");
  if (!selector) return null_arg("selector");
  if (!c) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    c->suite.cfg.validate();
    const OrbitReport r = orbit_by_selector(type, selector, c->suite.cfg);
    *out = new lieindex_result{r.json.dump(), orbit_table(r.json), r.failed ? 1 : 0};
  });
}

lieindex_status lieindex_verify(const char* suite, const lieindex_config* c, lieindex_result** out) {
  if (!suite) return null_arg("suite");
  if (!c) return null_arg("config");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    SuiteConfig sc = c->suite;
    sc.suite = suite;
    const SuiteResult r = run_suite(sc);
    *out = new lieindex_result{r.to_jsonl(), r.to_table(), r.exit_code()};
  });
}

const char* lieindex_result_json(const lieindex_result* r) { return r ? r->json.c_str() : ""; }

const char* lieindex_result_table(const lieindex_result* r) { return r ? r->table.c_str() : ""; }

int lieindex_result_exit_code(const lieindex_result* r) { return r ? r->exit_code : 3; }

void lieindex_result_free(lieindex_result* r) { delete r; }

void lieindex_parity_stats(uint64_t* checked, uint64_t* violations) {
  ParityStats& s = parity_stats();
  if (checked) *checked = s.checked.load();
  if (violations) *violations = s.violations.load();
}

}  // extern "C"
