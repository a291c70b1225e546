#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lieindex {

// Defaults used by the CLI and the suites.
inline constexpr std::uint64_t kDefaultSeed = 20020801;
inline constexpr std::uint32_t kDefaultTrials = 3;
inline constexpr std::uint32_t kDefaultCoeffBound = 1000;

struct RandomCfg {
  std::uint64_t seed = kDefaultSeed;
  std::uint32_t trials = kDefaultTrials;
  std::uint32_t coeff_bound = kDefaultCoeffBound;
  bool certify = false;

  // Throws InvalidSpec unless trials >= 1 and coeff_bound >= 2.
  void validate() const;
  RandomCfg with_seed(std::uint64_t s) const {
    RandomCfg c = *this;
    c.seed = s;
    return c;
  }
};

// child = splitmix64(parent ^ fnv1a64(label)). Stable across platforms and
// runs, so a task's randomness depends only on its label.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view label);

// mt19937_64 has a fully specified output sequence; the bounded draw below
// uses rejection sampling instead of std::uniform_int_distribution, whose
// algorithm differs between standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lieindex
