// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieindex/construct.hpp"
#include "lieindex/suites.hpp"

using namespace lieindex;

namespace {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.size() < 8) notes.push_back(what);
    }
  }
};

int failures = 0;

void print(int k, const std::string& name, const Verdict& v, double secs) {
  if (!v.ok) ++failures;
  std::ostringstream os;
  os << "criterion " << k << " [" << name << "]: " << (v.ok ? "PASS" : "FAIL");
  os << " (" << static_cast<int>(secs * 1000) << " ms)";
  for (const auto& n : v.notes) os << "\n    " << n;
  std::cout << os.str() << std::endl;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SuiteResult run(const std::string& suite, bool certify = false) {
  SuiteConfig c;
  c.suite = suite;
  c.cfg.certify = certify;
  return run_suite(c);
}

const Json& check(const SuiteItem& it, const char* name) {
  static const Json missing = Json{{"status", "missing"}};
  if (!it.json.contains("checks") || !it.json["checks"].contains(name)) return missing;
  return it.json["checks"][name];
}

bool check_passes(const SuiteItem& it, const char* name) { return check(it, name)["status"] == "pass"; }

std::size_t parts(const std::string& label) {
  const auto sp = label.find(' ');
  return parse_partition(label.substr(sp + 1)).size();
}

std::size_t expected_orbits() {
  std::size_t n = 0;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"})
    n += admissible_partitions(ClassicalType::parse(name)).size();
  return n;
}

std::string run_cli_verify_all() {
  const std::string cmd = std::string(LIEINDEX_CLI) + " verify --suite all 2>/dev/null";
  std::string out;
  if (FILE* p = ::popen(cmd.c_str(), "r")) {
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    ::pclose(p);
  }
  return out;
}

}  // namespace

int main() {
  parity_stats().checked = 0;
  parity_stats().violations = 0;

  // 1. ind g = rk g, certified where dim <= 64.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    const SuiteResult r = run("reductive-index", true);
    std::set<std::string> seen;
    for (const auto& it : r.items) {
      seen.insert(it.label);
      const Json& c = check(it, "reductive_index");
      v.require(it.status == Status::Pass, it.label + ": " + c.value("detail", ""));
      v.require(it.json["index"] == it.json["rank"], it.label + ": index != rank");
      if (it.json["dim"].get<int>() <= 64)
        v.require(c["method"] == "certified" && !c["certificate"].get<std::string>().empty(),
                  it.label + ": not certified");
    }
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "D4"})
      v.require(seen.count(std::string(name) + " matrix") == 1, std::string("missing ") + name);
    for (const char* name : {"A2", "B2", "G2"})
      v.require(seen.count(std::string(name) + " chevalley") == 1, std::string("missing Chevalley ") + name);
    print(1, "reductive index identity", v, since(t0));
  }

  const auto t_orbits = std::chrono::steady_clock::now();
  const SuiteResult orbit_suites = run("all");
  const double orbit_secs = since(t_orbits);
  std::map<std::string, std::vector<const SuiteItem*>> by_suite;
  for (const auto& it : orbit_suites.items) by_suite[it.suite].push_back(&it);
  auto classical_items = [&](const std::string& suite) {
    std::vector<const SuiteItem*> out;
    for (const auto* it : by_suite[suite])
      if (it->label.rfind("G2", 0) != 0) out.push_back(it);
    return out;
  };

  // 2. Elashvili: ind z(e) = rk on every orbit.
  {
    Verdict v;
    const auto items = classical_items("elashvili");
    v.require(items.size() == expected_orbits(), "orbit count " + std::to_string(items.size()) + " != " +
                                                     std::to_string(expected_orbits()));
    for (const auto* it : items) {
      v.require(it->json["ind_z"] == it->json["rank"], it->label + ": ind z != rk");
      v.require(it->status != Status::Fail, it->label + ": " + check(*it, "elashvili").value("detail", ""));
    }
    print(2, "Elashvili suite", v, orbit_secs);
  }

  // 3. Structure theorems on every nonzero orbit.
  {
    Verdict v;
    for (const auto* it : classical_items("structure")) {
      if (check(*it, "prop21")["status"] == "skipped") continue;
      for (const char* name : {"prop21", "thm23", "thm24", "prop26"})
        v.require(check_passes(*it, name), it->label + " " + name + ": " + check(*it, name).value("detail", ""));
      v.require(check(*it, "thm23")["dim_d2"] == 1 && check(*it, "thm23")["dim_r"] == 3, it->label + ": r");
      const Json& p = check(*it, "prop21");
      v.require(!p["distinguished"].get<bool>() || p["even"].get<bool>(), it->label + ": distinguished, not even");
    }
    print(3, "structure suite", v, 0);
  }

  // 4. Steinberg biconditional, G2 subregular.
  {
    Verdict v;
    for (const auto* it : classical_items("structure")) {
      if (check(*it, "steinberg")["status"] == "skipped") continue;
      v.require(check_passes(*it, "steinberg"), it->label + ": " + check(*it, "steinberg").value("detail", ""));
    }
    bool found = false;
    for (const auto* it : by_suite["structure"])
      if (it->label == "G2 search:4") {
        found = true;
        const Json& g = check(*it, "g2_subregular");
        v.require(g["status"] == "pass", "G2 subregular: " + g.value("detail", ""));
        v.require(g["dim_g2"] == 4 && g["dim_g4"] == 1, "G2 subregular grading");
        v.require(it->json["dim_d"] == 2 && it->json["rank"] == 2, "G2 subregular dim d != 2");
      }
    v.require(found, "G2 subregular orbit not found by search");
    print(4, "Steinberg and G2 subregular", v, 0);
  }

  // 5. Normaliser: first heart condition and its index consequences.
  {
    Verdict v;
    for (const auto* it : classical_items("normaliser")) {
      if (check(*it, "heart")["status"] == "skipped") continue;
      const char fam = it->label[0];
      const bool theorem = fam != 'D' || parts(it->label) >= 3;
      const Json& h = check(*it, "heart");
      const Json& n = check(*it, "thm44");
      v.require(n["status"] == "pass", it->label + " thm44: " + n.value("detail", ""));
      if (!theorem) continue;
      v.require(h["heart1"] == true && h["alpha_matches_powers"] == true,
                it->label + ": first heart condition fails (m = " + h["m_sequence"].dump() + ")");
      if (h["heart1"] == true) {
        const long iz = n["ind_z"], in = n["ind_n"], inz = n["ind_n_on_z"], dd = n["dim_d"];
        v.require(in == inz && in == iz - dd, it->label + ": ind n != ind(n, z) or != ind z - dim d");
      }
    }
    bool found = false;
    for (const auto* it : by_suite["normaliser"])
      if (it->label == "D4 5,3") {
        found = true;
        const Json& h = check(*it, "heart");
        const Json& n = check(*it, "thm44");
        v.require(h["heart2"] == false, "D4 5,3: second condition holds");
        v.require(h["m_sequence"] == Json::array({1, 3, 3}), "D4 5,3: m-sequence " + h["m_sequence"].dump());
        v.require(n["ind_n"].get<long>() >= 1, "D4 5,3: ind n < 1");
        v.require(n.contains("conj61"), "D4 5,3: conjecture comparison missing");
      }
    v.require(found, "D4 5,3 missing");
    print(5, "normaliser suite", v, 0);
  }

  // 6. Frobenius property for regular nilpotents.
  {
    Verdict v;
    std::set<std::string> seen;
    for (const auto* it : by_suite["frobenius"]) {
      seen.insert(it->label);
      const Json& rs = check(*it, "regular_suite");
      const Json& dm = check(*it, "dmatrix");
      v.require(rs["status"] == "pass", it->label + " regular: " + rs.value("detail", ""));
      v.require(rs["ind_n"] == 0 && rs["nonsingular_at_e_minus_lambda"] == true, it->label + ": not Frobenius");
      v.require(dm["status"] == "pass", it->label + " D: " + dm.value("detail", ""));
      v.require(dm["symmetric"] == true && dm["determinant_law"] == true && dm["determinant_points"].get<int>() >= 5,
                it->label + ": determinant law");
      if (it->label == "D4 regular") v.require(dm["rechosen"] == true, "D4: no basis re-choice");
    }
    for (const char* name : {"A2", "A3", "A4", "B2", "C3", "D4", "G2"})
      v.require(seen.count(std::string(name) + " regular") == 1, std::string("missing ") + name);
    print(6, "Frobenius suite", v, 0);
  }

  // 7. Index inequalities, Rais, Vinberg, stabilizers.
  {
    Verdict v;
    std::size_t parabolics = 0, borels = 0, pairs = 0;
    for (const auto* it : by_suite["parabolic"]) {
      v.require(it->status == Status::Pass, it->label + " fails");
      if (it->label.find(" parabolic ") != std::string::npos) {
        ++parabolics;
        v.require(check_passes(*it, "cor15") && check_passes(*it, "thm14"), it->label + ": corollary");
        v.require(check(*it, "cor15")["ind_b_on_pu"] == 0, it->label + ": ind(b, p^u) != 0");
      } else if (it->label.find(" borel") != std::string::npos) {
        ++borels;
        v.require(check_passes(*it, "borel_sum"), it->label + ": ind b + ind b^u != rk");
        v.require(check(*it, "vinberg")["slacks"].size() >= 10, it->label + ": too few Vinberg points");
        v.require(check_passes(*it, "vinberg") && check_passes(*it, "stabilizer_index"), it->label + ": sampling");
        if (it->label == "C2 borel") {
          const Json& w = it->json["abelian_stabilizer_witness"];
          v.require(it->json["ind_b"] == 0 && w["dim"] == 2 && w["abelian"] == true && w["ind"] == 2,
                    "sp4 Borel witness");
        }
      } else {
        ++pairs;
      }
    }
    v.require(parabolics == 12, "expected 8 + 4 parabolics, got " + std::to_string(parabolics));
    v.require(borels == 5, "expected 5 Borel items");
    v.require(pairs > 0, "no normaliser/centraliser pairs");
    std::size_t rais = 0;
    for (const auto* it : by_suite["rais"]) {
      ++rais;
      v.require(it->status == Status::Pass, it->label + ": " + check(*it, "rais").value("detail", ""));
    }
    v.require(rais >= 3, "fewer than 3 semidirect products");
    print(7, "index inequalities", v, 0);
  }

  // 8. Parity of dim - ind over everything computed above.
  {
    Verdict v;
    const auto checked = parity_stats().checked.load();
    const auto bad = parity_stats().violations.load();
    v.require(checked > 0, "no parity checks recorded");
    v.require(bad == 0, std::to_string(bad) + " parity violations");
    v.notes.push_back(std::to_string(checked) + " index computations checked");
    print(8, "parity", v, 0);
  }

  // 9. Byte-identical output of two CLI runs.
  {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    const std::string a = run_cli_verify_all();
    const std::string b = run_cli_verify_all();
    v.require(!a.empty(), "no output from the CLI");
    v.require(a == b, "outputs differ");
    v.notes.push_back(std::to_string(a.size()) + " bytes per run");
    print(9, "determinism", v, since(t0));
  }

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
