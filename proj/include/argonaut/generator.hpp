#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "argonaut/core.hpp"
#include "argonaut/graph.hpp"

namespace argonaut {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// ARGONAUT_SEED when set and numeric, else kDefaultSeed.
std::uint64_t default_seed();

// Modulo reduction keeps draws identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(eng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

struct GenConfig {
  std::vector<std::string> atoms{"p", "q", "r"};
  std::size_t min_premises = 1;
  std::size_t max_premises = 4;
  int depth = 2;
  std::size_t min_rules = 1;
  std::size_t max_rules = 4;
  Value max_priority = 3;
  std::uint64_t seed = kDefaultSeed;
};

struct AbaInstance {
  FormulaSet assumptions;
  std::vector<RuleHandle> rules;
  std::map<Formula, FormulaSet> contraries;  // assumption a -> {~a}
};

class KBGenerator {
 public:
  explicit KBGenerator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {}

  Rng& rng() { return rng_; }
  const GenConfig& config() const { return cfg_; }

  Formula literal(const std::vector<std::string>& atoms);
  // Weighted toward literals and binary connectives; depth-capped.
  Formula formula(const std::vector<std::string>& atoms, int depth);
  FormulaSet premises(const std::vector<std::string>& atoms);
  FormulaSet premises() { return premises(cfg_.atoms); }

  // Flat framework: assumptions are positive atoms, ~a is the contrary of a,
  // rule heads are never assumptions. Rule ids start with `prefix`.
  AbaInstance aba(const std::vector<std::string>& atoms, const std::string& prefix);
  AspicTheory aspic(const std::vector<std::string>& atoms, const std::string& prefix);

  std::map<Formula, Value> priorities(const FormulaSet& fs);
  Digraph graph(int n, unsigned edge_percent);

 private:
  GenConfig cfg_;
  Rng rng_;
};

}  // namespace argonaut
