#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argonaut/engine.hpp"
#include "argonaut/generator.hpp"
#include "argonaut/semantics.hpp"

namespace argonaut {

enum class Verdict { Pass, Fail, Inconclusive };
std::string to_string(Verdict v);

struct Counterexample {
  std::string setting;
  std::vector<FormulaSet> premise_sets;
  std::optional<Formula> formula;
  std::string semantics;
  std::string expected;
  std::string actual;
  std::string detail;
};

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Pass;
  std::size_t trials = 0;
  std::size_t failures = 0;
  // Present on fail; on a refuted contamination probe it holds the refutation.
  std::optional<Counterexample> counterexample;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;  // bounds and caveats

  std::string text() const;
};

// 0 = all pass, 1 = any fail, 2 = inconclusive without fails.
int exit_code(const std::vector<PropertyReport>& reports);

struct HarnessOptions {
  BuildOptions build;
  SemanticsOptions sem{Backend::Auto, 16, true, kernels::Exec::Parallel};
  bool minimize = true;
};

// Skeptical answer for each query, from one graph build.
std::vector<char> consequences(const Setting& setting, const FormulaSet& premises,
                               const FormulaSet& queries, Semantics sem,
                               const HarnessOptions& opts = {});

// ⊆-maximal AF-consistent subsets (at most 12 premises).
std::vector<FormulaSet> mcs(const Setting& setting, const FormulaSet& premises,
                            kernels::Exec exec = kernels::Exec::Parallel);

PropertyReport check_non_interference(const Setting& setting, const FormulaSet& s1,
                                      const FormulaSet& s2, Semantics sem,
                                      const FormulaSet& pool, const HarnessOptions& opts = {});

// Pass: the candidate is shown not to be contaminating (witness attached).
// Inconclusive: no refutation within the trials.
PropertyReport check_crash_resistance_probe(const Setting& setting, const FormulaSet& candidate,
                                            const std::vector<std::string>& atom_pool,
                                            Semantics sem, std::size_t trials,
                                            std::uint64_t seed, const HarnessOptions& opts = {});

PropertyReport check_cumulativity(const Setting& setting, const FormulaSet& premises,
                                  const Formula& phi, const FormulaSet& pool, Semantics sem,
                                  const HarnessOptions& opts = {});

// Family equality under restriction to Arg(S). For grounded also checks
// containment, restriction equality and the Φ-augmentation mapping.
PropertyReport check_extensional_cumulativity(const Setting& setting,
                                              const FormulaSet& premises, const Formula& phi,
                                              Semantics sem, const FormulaSet& pool = {},
                                              const HarnessOptions& opts = {});

PropertyReport check_stb_eq_prf_con(const Setting& base, const FormulaSet& premises,
                                    const HarnessOptions& opts = {});
PropertyReport check_grd_eq_intersection_mcs(const Setting& base, const FormulaSet& premises,
                                             const HarnessOptions& opts = {});

// ---- bounded-universe checks ---------------------------------------------

// Literals over atoms; with `binary`, also (l1 & l2), (l1 | l2), (l1 -> l2)
// over distinct literals.
FormulaSet bounded_universe(const std::vector<std::string>& atoms, bool binary);
// All subsets of u with at most max_size elements, smallest first.
std::vector<FormulaSet> small_subsets(const FormulaSet& u, std::size_t max_size);

struct SplitBound {
  std::vector<std::string> atoms1{"p", "q"};
  std::vector<std::string> atoms2{"r", "s"};
  bool binary = true;
  std::size_t max_s1 = 2;
  std::size_t max_s2 = 1;
};

PropertyReport check_pre_relevance(const CoreHandle& core, const SplitBound& bound = {});
// T-sets use literals only and at most one element per side.
PropertyReport check_prime(const Setting& setting, const SplitBound& bound = {});
PropertyReport check_contraposition(const CoreHandle& core, const ContrarinessSpec& c,
                                    const FormulaSet& universe, std::size_t max_theta);
PropertyReport check_pointed(const AttackPointSpec& points, const FormulaSet& universe,
                             std::size_t max_size);
// Γ ⊢ φ and Δ ⊢^{+φ} γ imply Γ ∪ Δ ⊢ γ.
PropertyReport check_cut(const CoreHandle& core, const FormulaSet& universe,
                         std::size_t max_size);
// One-step axiom composition (Γ ⊢ ψ or Γ ∪ {φ} ⊢ ψ) against composing it with
// itself through an intermediate χ from the universe. Fails on the first pair
// only the two-step relation has.
PropertyReport check_axiom_iteration(const CoreHandle& core, const Formula& phi,
                                     const FormulaSet& universe, std::size_t max_size);

// ---- random suites -------------------------------------------------------

enum class Family {
  CLDef,
  CLDiCoDef,
  CLDiDef,
  CLTopDiDef,
  MCSCapDiDef,
  MCSCupDiDef,
  TrackedABA,
  UntrackedABA,
  AspicDagger,
  AspicDDagger
};
std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);

struct Instance {
  Setting setting;
  FormulaSet s1;
  FormulaSet s2;    // over disjoint atoms; may be empty
  FormulaSet pool;  // queries over the atoms of s1
};

// s1 over atoms_a, s2 over atoms_b (empty atoms_b gives empty s2).
Instance make_instance(Family f, KBGenerator& gen, const std::vector<std::string>& atoms_a,
                       const std::vector<std::string>& atoms_b);

// Base setting of a family, for bounded checks.
Setting family_setting(Family f);

PropertyReport fuzz_non_interference(Family f, const std::vector<Semantics>& sems,
                                     std::size_t trials, std::uint64_t seed,
                                     const HarnessOptions& opts = {}, GenConfig gen = {});
// Instances where some pool formula is grounded-entailed; checks the grounded
// extension claims and consequence-level cumulativity.
PropertyReport fuzz_cumulativity(Family f, std::size_t trials, std::uint64_t seed,
                                 const HarnessOptions& opts = {}, GenConfig gen = {});
PropertyReport fuzz_stb_eq_prf_con(std::size_t trials, std::uint64_t seed,
                                   const HarnessOptions& opts = {}, GenConfig gen = {});
PropertyReport fuzz_grd_eq_mcs(std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& opts = {}, GenConfig gen = {});

// Generator presets for the consistency-restricted corpus: 5 atoms, up to 6
// premises, depth 2.
GenConfig con_corpus_config(std::uint64_t seed);

}  // namespace argonaut
