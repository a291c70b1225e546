#include "lieindex/suites.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "lieindex/error.hpp"

namespace lieindex {

namespace fs = std::filesystem;

namespace {

constexpr int kFormatVersion = 1;

const std::vector<std::string> kSuites{"reductive-index", "elashvili", "structure", "normaliser",
                                       "frobenius",       "parabolic", "rais",      "all"};

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "reported") return Status::Reported;
  return Status::Skipped;
}

// fail > pass > reported > skipped
Status combine(const Json& checks) {
  bool any_pass = false, any_reported = false;
  for (const auto& [name, c] : checks.items()) {
    const Status s = parse_status(c.value("status", "skipped"));
    if (s == Status::Fail) return Status::Fail;
    any_pass = any_pass || s == Status::Pass;
    any_reported = any_reported || s == Status::Reported;
  }
  if (any_pass) return Status::Pass;
  return any_reported ? Status::Reported : Status::Skipped;
}

struct AlgebraSpec {
  std::string name;  // "D4"
  char family;
  std::size_t rank;
};

AlgebraSpec spec_of(const std::string& name) {
  return {name, name[0], static_cast<std::size_t>(std::stoul(name.substr(1)))};
}

class Filter {
 public:
  explicit Filter(const SuiteConfig& c) : c_(c) {}

  bool operator()(const AlgebraSpec& a) const {
    if (!c_.type.empty()) {
      if (c_.type.size() == 1 ? c_.type[0] != a.family : c_.type != a.name) return false;
    }
    if (c_.rank && *c_.rank != a.rank) return false;
    if (c_.max_rank && a.rank > *c_.max_rank) return false;
    return true;
  }

 private:
  const SuiteConfig& c_;
};

// Immutable algebras shared by all workers; built before the pool starts.
struct Context {
  std::deque<ClassicalAlgebra> classical;
  std::deque<ChevalleyAlgebra> chevalley;

  const ClassicalAlgebra& get_classical(const std::string& name) {
    for (const auto& g : classical)
      if (g.type.name() == name) return g;
    classical.push_back(lieindex::classical(ClassicalType::parse(name)));
    return classical.back();
  }
  const ChevalleyAlgebra& get_chevalley(const std::string& name) {
    for (const auto& g : chevalley)
      if (g.datum.label == name) return g;
    chevalley.push_back(lieindex::chevalley(name));
    return chevalley.back();
  }
};

struct Task {
  std::string kind;   // cache namespace and view selector
  std::string label;  // "D4 5,3"
  std::function<Json()> compute;
};

Json check_json(const CheckReport& r) { return r.to_json(); }

// Retries with a larger coefficient bound when sampling finds no regular
// element.
template <typename F>
CheckReport with_retry(const RandomCfg& cfg, F f) {
  RandomCfg c = cfg;
  for (int attempt = 0;; ++attempt) {
    try {
      CheckReport r = f(c);
      if (attempt > 0) r.values["coeff_bound_used"] = c.coeff_bound;
      return r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RegularElementNotFound || attempt == 2) throw;
      c.coeff_bound *= 10;
    }
  }
}

Json payload_from_checks(Json fields, const std::vector<CheckReport>& checks) {
  Json cs = Json::object();
  for (const auto& c : checks) cs[c.name] = check_json(c);
  fields["checks"] = cs;
  return fields;
}

// ---- task builders ----

const std::vector<std::string> kOrbitAlgebras{"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"};
const std::vector<std::size_t> kG2Targets{8, 6, 4, 2};

void orbit_tasks(Context& ctx, const Filter& keep, const RandomCfg& cfg, std::vector<Task>& out) {
  for (const auto& name : kOrbitAlgebras) {
    if (!keep(spec_of(name))) continue;
    const ClassicalAlgebra& g = ctx.get_classical(name);
    for (const auto& p : admissible_partitions(g.type)) {
      const ClassicalAlgebra* gp = &g;
      out.push_back({"orbit", name + " " + to_string(p), [gp, p, cfg] {
                       return orbit_report(orbit_input(*gp, p), cfg).json;
                     }});
    }
  }
  if (!keep(spec_of("G2"))) return;
  const ChevalleyAlgebra& g2 = ctx.get_chevalley("G2");
  for (std::size_t target : kG2Targets) {
    const std::string label = "G2 search:" + std::to_string(target);
    out.push_back({"orbit", label, [&g2, target, cfg, label] {
                     return orbit_report(orbit_input_search(g2, target, derive_seed(cfg.seed, label)), cfg).json;
                   }});
  }
}

void reductive_tasks(Context& ctx, const Filter& keep, const RandomCfg& cfg, std::vector<Task>& out) {
  const std::vector<std::string> matrix{"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"};
  const std::vector<std::string> chev{"A2", "B2", "G2"};
  auto task = [&](AlgebraPtr L, std::size_t rank, const std::string& label, const std::string& realization) {
    out.push_back({"reductive", label, [L, rank, cfg, label, realization] {
                     RandomCfg c = cfg.with_seed(derive_seed(cfg.seed, label));
                     c.certify = cfg.certify && L->dim() <= 64;
                     const IndexResult r = index_of(*L, c);
                     CheckReport rep("reductive_index");
                     rep.values = r.to_json();
                     rep.values["rank"] = rank;
                     rep.expect(r.index == rank, "ind g != rk g");
                     return payload_from_checks(Json{{"realization", realization}, {"dim", r.dim}, {"rank", rank},
                                                     {"index", r.index}},
                                                {rep});
                   }});
  };
  for (const auto& name : matrix)
    if (keep(spec_of(name))) {
      const ClassicalAlgebra& g = ctx.get_classical(name);
      task(g.algebra, g.type.rank, name + " matrix", "matrix");
    }
  for (const auto& name : chev)
    if (keep(spec_of(name))) {
      const ChevalleyAlgebra& g = ctx.get_chevalley(name);
      task(g.algebra, g.datum.rank(), name + " chevalley", "chevalley");
    }
}

void frobenius_tasks(Context& ctx, const Filter& keep, const RandomCfg& cfg, std::vector<Task>& out) {
  for (const std::string name : {"A2", "A3", "A4", "B2", "C3", "D4", "G2"}) {
    if (!keep(spec_of(name))) continue;
    const ChevalleyAlgebra* g = &ctx.get_chevalley(name);
    out.push_back({"frobenius", name + " regular", [g, cfg, name] {
                     const RandomCfg c = cfg.with_seed(derive_seed(cfg.seed, name + " regular"));
                     const CheckReport rs = regular_suite(*g, c.with_seed(derive_seed(c.seed, "regular_suite")));
                     const CheckReport dm = d_matrix_checks(*g, c.with_seed(derive_seed(c.seed, "dmatrix")));
                     return payload_from_checks(Json{{"dim_g", g->algebra->dim()},
                                                     {"rank", g->datum.rank()},
                                                     {"ind_n", rs.values["ind_n"]},
                                                     {"exponents", dm.values["exponents"]}},
                                                {rs, dm});
                   }});
  }
}

std::string comp_label(const std::vector<int>& c) {
  std::string s;
  for (int x : c) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void parabolic_tasks(Context& ctx, const Filter& keep, const RandomCfg& cfg, std::vector<Task>& out) {
  // Every parabolic of sl4 and sp4.
  for (const std::string name : {"A3", "C2"}) {
    if (!keep(spec_of(name))) continue;
    const ClassicalAlgebra* g = &ctx.get_classical(name);
    const auto comps = g->type.family == 'A' ? compositions(g->type.n()) : palindromic_compositions(g->type.n());
    for (const auto& comp : comps) {
      const std::string label = name + " parabolic " + comp_label(comp);
      out.push_back({"parabolic", label, [g, comp, cfg, label] {
                       const RandomCfg c = cfg.with_seed(derive_seed(cfg.seed, label));
                       const LieAlgebra& L = *g->algebra;
                       const Parabolic p = parabolic(*g, comp);
                       const Parabolic b = parabolic(*g, std::vector<int>(g->type.n(), 1));
                       CheckReport t14 = check_ideal_inequality(L, p.p, p.pu, c.with_seed(derive_seed(c.seed, "thm14")));
                       t14.name = "thm14";
                       CheckReport c15("cor15");
                       const std::size_t ind_p = t14.values["ind_outer"], ind_pu = t14.values["ind_inner"];
                       c15.values["ind_p"] = ind_p;
                       c15.values["ind_pu"] = ind_pu;
                       c15.values["dim_l"] = p.l.dim();
                       c15.expect(t14.values["ind_pair"] == 0, "ind(p, p^u) != 0");
                       c15.expect(ind_p + ind_pu <= p.l.dim(), "ind p + ind p^u > dim l");
                       CheckReport t15b = check_ideal_inequality(L, b.p, p.pu, c.with_seed(derive_seed(c.seed, "cor15b")));
                       const std::size_t ind_b = t15b.values["ind_outer"];
                       c15.values["ind_b"] = ind_b;
                       c15.values["dim_b_mod_pu"] = b.p.dim() - p.pu.dim();
                       c15.expect(ind_b + ind_pu <= b.p.dim() - p.pu.dim(), "ind b + ind p^u > dim(b/p^u)");
                       const InducedAlgebra bq = induced_subalgebra(L, b.p);
                       const IndexResult bpu =
                           index_of_rep(induced_rep(L, bq, p.pu), c.with_seed(derive_seed(c.seed, "b-on-pu")));
                       c15.values["ind_b_on_pu"] = bpu.index;
                       c15.expect(bpu.index == 0, "ind(b, p^u) != 0");
                       CheckReport lower("parabolic_lower_bound");
                       lower.status = Status::Reported;
                       lower.values["slack"] = static_cast<long>(ind_p + ind_pu) - static_cast<long>(g->type.rank);
                       lower.report("holds", ind_p + ind_pu >= g->type.rank);
                       return payload_from_checks(Json{{"composition", comp_label(comp)}, {"dim_p", p.p.dim()}}, {t14, c15, lower});
                     }});
    }
  }
  // Borel subalgebras: ind b + ind b^u = rk, Vinberg, stabilizer indices.
  for (const std::string name : {"A2", "A3", "A4", "B2", "C2"}) {
    if (!keep(spec_of(name))) continue;
    const ClassicalAlgebra* g = &ctx.get_classical(name);
    const std::string label = name + " borel";
    out.push_back({"parabolic", label, [g, cfg, label] {
                     const RandomCfg c = cfg.with_seed(derive_seed(cfg.seed, label));
                     const LieAlgebra& L = *g->algebra;
                     const Parabolic b = parabolic(*g, std::vector<int>(g->type.n(), 1));
                     auto bq = std::make_shared<const LieAlgebra>(induced_subalgebra(L, b.p).algebra);
                     const InducedAlgebra bu = induced_subalgebra(L, b.pu);
                     CheckReport rem("borel_sum");
                     const std::size_t ib = index_of(*bq, c.with_seed(derive_seed(c.seed, "b"))).index;
                     const std::size_t ibu = index_of(bu.algebra, c.with_seed(derive_seed(c.seed, "bu"))).index;
                     rem.values["ind_b"] = ib;
                     rem.values["ind_bu"] = ibu;
                     rem.expect(ib + ibu == g->type.rank, "ind b + ind b^u != rk g");

                     CheckReport vin("vinberg");
                     SeededRng rng(derive_seed(c.seed, "vinberg-w"));
                     const auto bound = static_cast<std::int64_t>(c.coeff_bound);
                     Json slacks = Json::array();
                     auto adj_b = adjoint_rep(bq);
                     auto adj_g = adjoint_rep(g->algebra);
                     for (const Representation* rho : {&adj_b, &adj_g})
                       for (int k = 0; k < 5; ++k) {
                         Vec w(rho->module_dim);
                         for (auto& x : w) x = Rational(rng.uniform(-bound, bound));
                         const CheckReport r = check_vinberg(*rho, w, c.with_seed(derive_seed(c.seed, "vinberg" + std::to_string(slacks.size()))));
                         slacks.push_back(r.values["slack"]);
                         vin.expect(!r.failed(), r.detail);
                       }
                     vin.values["slacks"] = slacks;

                     std::vector<Vec> extra;
                     Json fields{{"dim_b", b.p.dim()}, {"ind_b", ib}, {"ind_bu", ibu}};
                     if (ib == 0)
                       if (auto w = abelian_stabilizer_witness(*bq, 2)) {
                         const Subspace st = coadjoint_stabilizer(*bq, *w);
                         const InducedAlgebra sa = induced_subalgebra(*bq, st);
                         Json xi = Json::array();
                         for (const auto& x : *w) xi.push_back(to_string(x));
                         fields["abelian_stabilizer_witness"] =
                             Json{{"xi", xi}, {"dim", st.dim()}, {"abelian", sa.algebra.is_abelian()},
                                  {"ind", index_of(sa.algebra, c.with_seed(derive_seed(c.seed, "witness"))).index}};
                         extra.push_back(*w);
                       }
                     CheckReport stab = check_stabilizer_index(*bq, c.with_seed(derive_seed(c.seed, "stabilizers")), extra);
                     return payload_from_checks(fields, {rem, vin, stab});
                   }});
  }
  // Normaliser/centraliser pairs.
  for (const std::string name : {"A3", "C2"}) {
    if (!keep(spec_of(name))) continue;
    const ClassicalAlgebra* g = &ctx.get_classical(name);
    for (const auto& p : admissible_partitions(g->type)) {
      if (p == Partition(g->type.n(), 1)) continue;
      const std::string label = name + " n(e)/z(e) " + to_string(p);
      out.push_back({"parabolic", label, [g, p, cfg, label] {
                       const LieAlgebra& L = *g->algebra;
                       const SL2Triple t = sl2_complete(L, nilpotent_from_partition(*g, p));
                       const CentralizerChain ch = centralizer_chain(L, t);
                       CheckReport r = check_ideal_inequality(L, ch.n, ch.z, cfg.with_seed(derive_seed(cfg.seed, label)));
                       r.name = "thm14";
                       return payload_from_checks(Json{{"partition", to_string(p)}}, {r});
                     }});
    }
  }
}

void rais_tasks(Context& ctx, const Filter& keep, const RandomCfg& cfg, std::vector<Task>& out) {
  auto add = [&](const std::string& label, std::function<Representation()> make) {
    out.push_back({"rais", label, [make, cfg, label] {
                     const Representation rho = make();
                     CheckReport r = with_retry(cfg.with_seed(derive_seed(cfg.seed, label)),
                                                [&](const RandomCfg& c) { return check_rais(rho, c); });
                     return payload_from_checks(Json{{"dim_q", rho.action.size()}, {"dim_v", rho.module_dim}}, {r});
                   }});
  };
  if (keep(spec_of("A1"))) {
    const ClassicalAlgebra* a1 = &ctx.get_classical("A1");
    add("A1 trivial 2", [a1] { return trivial_rep(a1->algebra, 2); });
    add("A1 adjoint", [a1] { return adjoint_rep(a1->algebra); });
    add("A1 borel on span e", [a1] {
      const Parabolic b = parabolic(*a1, {1, 1});
      return induced_rep(*a1->algebra, b.p, b.pu);
    });
  }
  for (const std::string name : {"A2", "C2"}) {
    if (!keep(spec_of(name))) continue;
    const ClassicalAlgebra* g = &ctx.get_classical(name);
    add(name + " borel on nilradical", [g] {
      const Parabolic b = parabolic(*g, std::vector<int>(g->type.n(), 1));
      return induced_rep(*g->algebra, b.p, b.pu);
    });
  }
  if (keep(spec_of("A3"))) {
    const ClassicalAlgebra* g = &ctx.get_classical("A3");
    add("A3 parabolic 2,2 on nilradical", [g] {
      const Parabolic p = parabolic(*g, {2, 2});
      return induced_rep(*g->algebra, p.p, p.pu);
    });
  }
  if (keep(spec_of("A2"))) {
    const ClassicalAlgebra* g = &ctx.get_classical("A2");
    add("A2 adjoint", [g] { return adjoint_rep(g->algebra); });
  }
}

// ---- views of orbit payloads ----

Json pick(const Json& src, std::initializer_list<const char*> keys) {
  Json out = Json::object();
  for (const char* k : keys)
    if (src.contains(k)) out[k] = src[k];
  return out;
}

Json orbit_view(const std::string& suite, const Json& r) {
  const Json& checks = r["checks"];
  Json out;
  Json cs = Json::object();
  auto take = [&](std::initializer_list<const char*> names) {
    for (const char* n : names)
      if (checks.contains(n)) cs[n] = checks[n];
  };
  if (suite == "elashvili") {
    out = pick(r, {"type", "label", "rank", "dim_g", "dim_z", "ind_z", "elashvili_ok"});
    take({"elashvili"});
  } else if (suite == "structure") {
    out = pick(r, {"type", "label", "rank", "dim_z", "dim_d", "dim_n", "height", "is_even", "is_distinguished",
                   "grading"});
    take({"prop21", "thm23", "thm24", "prop26", "steinberg", "springer"});
    if (r["type"] == "G2" && r["label"] == "search:4") {
      CheckReport g2("g2_subregular");
      std::map<int, long> dims;
      for (const auto& pair : r["grading"]) dims[pair[0].get<int>()] = pair[1].get<long>();
      g2.values["dim_g2"] = dims[2];
      g2.values["dim_g4"] = dims[4];
      g2.expect(dims[2] == 4 && dims[4] == 1, "grading of the subregular orbit is not g(2) = 4, g(4) = 1");
      g2.expect(r["dim_d"] == 2 && r["rank"] == 2, "dim d != rk for the subregular orbit");
      cs["g2_subregular"] = g2.to_json();
    }
  } else {
    out = pick(r, {"type", "label", "rank", "dim_d", "m_sequence", "heart1", "heart2", "ind_z", "ind_n", "ind_n_on_z",
                   "ind_n_on_d", "conj61_ok", "conj62_ok"});
    take({"heart", "thm44", "d_powers"});
  }
  out["checks"] = cs;
  return out;
}

const char* suite_of_kind(const std::string& kind) {
  if (kind == "reductive") return "reductive-index";
  return kind == "frobenius" ? "frobenius" : kind == "parabolic" ? "parabolic" : "rais";
}

SuiteItem make_item(const std::string& suite, const std::string& label, Json body) {
  SuiteItem it;
  it.suite = suite;
  it.label = label;
  it.status = combine(body["checks"]);
  Json line{{"suite", suite}, {"item", label}, {"status", to_string(it.status)}};
  for (auto& [k, v] : body.items()) line[k] = v;
  it.json = std::move(line);
  return it;
}

SuiteItem error_item(const std::string& suite, const std::string& label, const std::string& what) {
  SuiteItem it;
  it.suite = suite;
  it.label = label;
  it.status = Status::Fail;
  it.json = Json{{"suite", suite}, {"item", label}, {"status", "error"}, {"detail", what}};
  return it;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

void SuiteConfig::validate() const {
  if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end())
    throw Error(ErrorKind::InvalidSpec, "unknown suite '" + suite + "'");
  if (!type.empty()) {
    const char f = type[0];
    if (std::string("ABCDG").find(f) == std::string::npos)
      throw Error(ErrorKind::InvalidSpec, "type must start with A, B, C, D or G");
    if (type.size() > 1 && type.find_first_not_of("0123456789", 1) != std::string::npos)
      throw Error(ErrorKind::InvalidSpec, "bad type '" + type + "'");
  }
  cfg.validate();
}

const std::vector<std::string>& suite_names() { return kSuites; }

std::string cache_key(const std::string& kind, const std::string& label, const RandomCfg& cfg) {
  std::ostringstream os;
  os << "v" << kFormatVersion << "|" << kind << "|" << label << "|seed=" << cfg.seed << "|trials=" << cfg.trials
     << "|bound=" << cfg.coeff_bound << "|certify=" << cfg.certify;
  return os.str();
}

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create cache dir " + dir_ + ": " + ec.message());
  }
}

std::string ResultCache::path_for(const std::string& key) const {
  std::string stem;
  const auto bar = key.find('|', key.find('|') + 1);
  const auto bar2 = key.find('|', bar + 1);
  for (char ch : key.substr(bar + 1, bar2 - bar - 1)) stem += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return (fs::path(dir_) / (stem + "-" + hex64(derive_seed(0, key)) + ".json")).string();
}

std::optional<Json> ResultCache::load(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  const std::string path = path_for(key);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  Json doc = Json::parse(ss.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || doc.value("key", "") != key || !doc.contains("payload")) {
    std::cerr << "warning: ignoring corrupt cache entry " << path << "\n";
    return std::nullopt;
  }
  return doc["payload"];
}

void ResultCache::store(const std::string& key, const Json& payload) const {
  if (!enabled()) return;
  const std::string path = path_for(key);
  std::ostringstream tmp;
  tmp << path << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  {
    std::ofstream out(tmp.str(), std::ios::trunc);
    out << Json{{"key", key}, {"payload", payload}}.dump() << "\n";
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.str());
  }
  std::error_code ec;
  fs::rename(tmp.str(), path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename into " + path + ": " + ec.message());
}

SuiteResult run_suite(const SuiteConfig& config) {
  config.validate();
  SuiteResult res;
  res.config = config;
  const RandomCfg& cfg = config.cfg;
  const Filter keep(config);
  const bool all = config.suite == "all";
  auto wants = [&](const char* s) { return all || config.suite == s; };

  Context ctx;
  std::vector<Task> tasks;
  if (wants("reductive-index")) reductive_tasks(ctx, keep, cfg, tasks);
  const bool orbits = wants("elashvili") || wants("structure") || wants("normaliser");
  if (orbits) orbit_tasks(ctx, keep, cfg, tasks);
  if (wants("frobenius")) frobenius_tasks(ctx, keep, cfg, tasks);
  if (wants("parabolic")) parabolic_tasks(ctx, keep, cfg, tasks);
  if (wants("rais")) rais_tasks(ctx, keep, cfg, tasks);

  const ResultCache cache(config.cache_dir);
  struct Outcome {
    std::optional<Json> payload;
    std::string error;
    bool hit = false;
  };
  std::vector<Outcome> outcomes(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      const std::string key = cache_key(t.kind, t.label, cfg);
      try {
        if (auto hit = cache.load(key)) {
          outcomes[i].payload = std::move(hit);
          outcomes[i].hit = true;
          continue;
        }
        Json p = t.compute();
        cache.store(key, p);
        outcomes[i].payload = std::move(p);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
    }
  };
  std::size_t jobs = config.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.jobs;
  jobs = std::min(jobs, std::max<std::size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Merge in task order, grouped by suite.
  std::vector<std::vector<SuiteItem>> by_suite(kSuites.size());
  auto slot = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(kSuites.begin(), kSuites.end(), s) - kSuites.begin());
  };
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const Outcome& o = outcomes[i];
    res.cache_hits += o.hit ? 1 : 0;
    if (t.kind == "orbit") {
      for (const char* s : {"elashvili", "structure", "normaliser"}) {
        if (!wants(s)) continue;
        by_suite[slot(s)].push_back(o.payload ? make_item(s, t.label, orbit_view(s, *o.payload))
                                              : error_item(s, t.label, o.error));
      }
    } else {
      const std::string s = suite_of_kind(t.kind);
      by_suite[slot(s)].push_back(o.payload ? make_item(s, t.label, *o.payload) : error_item(s, t.label, o.error));
    }
  }
  for (auto& group : by_suite)
    for (auto& it : group) {
      if (it.json["status"] == "error")
        ++res.errors;
      else if (it.status == Status::Pass)
        ++res.passed;
      else if (it.status == Status::Fail)
        ++res.failed;
      else if (it.status == Status::Reported)
        ++res.reported;
      else
        ++res.skipped;
      res.items.push_back(std::move(it));
    }
  return res;
}

Json SuiteResult::header() const {
  const RandomCfg& c = config.cfg;
  return Json{{"kind", "header"},
              {"format_version", kFormatVersion},
              {"suite", config.suite},
              {"type", config.type},
              {"rank", config.rank ? Json(*config.rank) : Json(nullptr)},
              {"max_rank", config.max_rank ? Json(*config.max_rank) : Json(nullptr)},
              {"seed", c.seed},
              {"trials", c.trials},
              {"coeff_bound", c.coeff_bound},
              {"certify", c.certify}};
}

Json SuiteResult::summary() const {
  Json failing = Json::array();
  for (const auto& it : items)
    if (it.status == Status::Fail) failing.push_back(it.suite + ": " + it.label);
  return Json{{"kind", "summary"}, {"items", items.size()}, {"pass", passed},   {"fail", failed},
              {"reported", reported}, {"skipped", skipped}, {"error", errors}, {"failing", failing}};
}

std::string SuiteResult::to_jsonl() const {
  std::string out = header().dump() + "\n";
  for (const auto& it : items) out += it.json.dump() + "\n";
  out += summary().dump() + "\n";
  return out;
}

std::string SuiteResult::to_table() const {
  std::ostringstream os;
  std::size_t w = 4;
  for (const auto& it : items) w = std::max(w, it.label.size());
  os << "suite             item" << std::string(w - 4, ' ') << "  status    detail\n";
  for (const auto& it : items) {
    std::string detail;
    if (it.json.contains("detail")) detail = it.json["detail"].get<std::string>();
    if (it.json.contains("checks"))
      for (const auto& [name, c] : it.json["checks"].items())
        if (c.value("status", "") == "fail") detail += (detail.empty() ? "" : "; ") + name + ": " + c.value("detail", "");
    std::string s = it.suite;
    s.resize(std::max<std::size_t>(s.size(), 16), ' ');
    std::string l = it.label;
    l.resize(w, ' ');
    std::string st = it.json["status"].get<std::string>();
    st.resize(8, ' ');
    os << s << "  " << l << "  " << st << "  " << detail << "\n";
  }
  os << "items " << items.size() << ", pass " << passed << ", fail " << failed << ", reported " << reported
     << ", skipped " << skipped << ", error " << errors << "\n";
  return os.str();
}

bool is_classical_name(const std::string& type) {
  return !type.empty() && std::string("ABCD").find(type[0]) != std::string::npos;
}

namespace {

Json exponents_json(const LieAlgebra& L, const Vec& e) {
  const SL2Triple t = sl2_complete(L, e);
  const GradedPieces g = grading(L, t.h);
  const Subspace z = kernel(L.ad(t.e));
  Json out = Json::array();
  for (const auto& [deg, d] : g.dims(z))
    for (std::size_t k = 0; k < d; ++k) out.push_back(deg / 2);
  return out;
}

Partition regular_partition(ClassicalType t) {
  const int n = static_cast<int>(t.n());
  if (t.family == 'D') return {n - 1, 1};
  return {n};
}

}  // namespace

Json algebra_info(const std::string& type, const RandomCfg& cfg) {
  Json j;
  AlgebraPtr L;
  Vec e;
  std::size_t rank = 0;
  if (is_classical_name(type)) {
    const ClassicalAlgebra g = classical(ClassicalType::parse(type));
    L = g.algebra;
    rank = g.type.rank;
    e = nilpotent_from_partition(g, regular_partition(g.type));
    j["realization"] = "matrix";
    j["matrix_size"] = g.type.n();
  } else {
    const ChevalleyAlgebra g = chevalley(type);
    L = g.algebra;
    rank = g.datum.rank();
    e = regular_nilpotent(g);
    j["realization"] = "chevalley";
    j["positive_roots"] = g.positive_count();
  }
  j["type"] = type;
  j["dim"] = L->dim();
  j["rank"] = rank;
  j["exponents"] = exponents_json(*L, e);
  j["killing_nondegenerate"] = determinant(L->killing()) != 0;
  RandomCfg c = cfg.with_seed(derive_seed(cfg.seed, type + " info"));
  c.certify = cfg.certify && L->dim() <= 64;
  const IndexResult r = index_of(*L, c);
  j["index"] = r.to_json();
  j["index_equals_rank"] = r.index == rank;
  return j;
}

OrbitReport orbit_by_selector(const std::string& type, const std::string& selector, const RandomCfg& cfg) {
  const std::string prefix = "search:";
  if (selector.rfind(prefix, 0) == 0) {
    std::size_t target = 0;
    try {
      target = std::stoul(selector.substr(prefix.size()));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad search target in '" + selector + "'");
    }
    const ChevalleyAlgebra g = chevalley(type);
    const std::string label = type + " " + selector;
    return orbit_report(orbit_input_search(g, target, derive_seed(cfg.seed, label)), cfg);
  }
  if (!is_classical_name(type)) throw Error(ErrorKind::InvalidSpec, "partitions need a classical type; use search:<dim z>");
  const ClassicalAlgebra g = classical(ClassicalType::parse(type));
  return orbit_report(orbit_input(g, parse_partition(selector)), cfg);
}

int SuiteResult::exit_code() const {
  if (errors > 0) return 3;
  return failed > 0 ? 1 : 0;
}

}  // namespace lieindex
