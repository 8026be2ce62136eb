#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "argonaut/contrariness.hpp"
#include "argonaut/formula.hpp"

namespace argonaut {

enum class CoreKind {
  CL,
  CLTop,
  MCSCap,
  MCSCup,
  ABARules,
  ASPIC,
  AxiomExtended,
  EmptyRestricted,
  ConsistentRestricted,
  CLConsistentRestricted
};

inline constexpr Value kUnboundedValue = ~Value{0};

// One (support, conclusion) pair produced by a rule-based core, with the
// priority data its witness tree determines.
struct Derivation {
  FormulaSet support;
  Formula conclusion;
  Value tree_value = 0;                              // weakest-link value
  std::vector<std::pair<Formula, Value>> tree_points;  // attackable point -> sub-argument value
  std::string rule;                                  // root rule id, empty for leaves
  std::vector<int> children;                         // indices into the same list
};

// Value of a fact or defeasible rule when computing weakest-link tree values.
// Empty means the rule's own value.
using RuleValueFn = std::function<Value(const RuleInfo&)>;

struct DerivationSet {
  std::vector<Derivation> items;
  std::vector<std::string> warnings;
};

class Core : public std::enable_shared_from_this<Core> {
 public:
  virtual ~Core() = default;
  virtual CoreKind kind() const = 0;
  virtual std::string describe() const = 0;

  virtual bool holds(const FormulaSet& support, const Formula& conclusion) const = 0;
  // Same answers as calling holds per conclusion; cores override to share work.
  virtual std::vector<char> holds_batch(const FormulaSet& support,
                                        std::span<const Formula> conclusions) const;
  // False when no conclusion at all is derivable from this support.
  virtual bool admits_support(const FormulaSet&) const { return true; }

  virtual bool rule_based() const { return false; }
  // Whole finite argument space over `premises` (rule-based cores only).
  virtual DerivationSet derive_all(const FormulaSet& premises, const FormulaSet& goals) const;
  // Same derivations with tree values taken from `values`.
  virtual DerivationSet derive_all_valued(const FormulaSet& premises, const FormulaSet& goals,
                                          const RuleValueFn&) const {
    return derive_all(premises, goals);
  }

  // The axiom-extended relation ⊢^{+φ}.
  virtual CoreHandle with_axiom(const Formula& phi) const;
  virtual FormulaSet axioms() const { return {}; }

  // True when the relation is classical entailment on consistent supports
  // (the canonical-attacker reduction relies on Cut for these).
  virtual bool cl_family() const { return false; }

  CoreHandle handle() const { return shared_from_this(); }
};

CoreHandle cl_core();
CoreHandle cl_top_core();
CoreHandle mcs_core(bool cap);

CoreHandle extend_with_axiom(const CoreHandle& core, const Formula& phi);
CoreHandle restrict_empty_attackers(CoreHandle core, ContrarinessSpec contrariness,
                                    AttackPointSpec points);
CoreHandle restrict_consistent(CoreHandle core, ContrarinessSpec contrariness);
// ⊢_*: supports must be classically consistent.
CoreHandle restrict_cl_consistent(CoreHandle core);

// Maximal classically consistent subsets (used by the MCS cores).
std::vector<FormulaSet> maximal_consistent_subsets(const FormulaSet& gamma);

// Direct inconsistency test of Θ: some γ ∈ Θ with Θ∖{γ} ⊢ a contrary of γ.
bool directly_inconsistent(const Core& core, const ContrarinessSpec& c, const FormulaSet& theta);
// Θ is consistent iff no subset is directly inconsistent.
bool af_consistent(const Core& core, const ContrarinessSpec& c, const FormulaSet& theta);

// ---- rule-based cores ----------------------------------------------------

struct AbaWitness {
  FormulaSet assumptions;
  std::vector<std::string> rules;  // ids, in firing order
};

class AbaCore;
// `tracked` puts the used rules into supports (rules are premises).
CoreHandle aba_core(FormulaSet assumptions, std::vector<RuleHandle> rules, bool tracked);
std::optional<AbaWitness> aba_derives(const CoreHandle& aba, const FormulaSet& assumptions,
                                      const Formula& goal);
// Forward closure of facts under rules (axioms included); also reports whether
// every rule fired.
FormulaSet aba_closure(const CoreHandle& aba, const FormulaSet& facts,
                       std::span<const RuleHandle> rules, bool* all_fired = nullptr);
const std::vector<RuleHandle>& aba_rules(const CoreHandle& aba);
const FormulaSet& aba_assumptions(const CoreHandle& aba);

enum class AspicMode { Dagger, DDagger };

struct AspicTheory {
  FormulaSet facts;                    // P
  std::vector<Value> fact_values;      // parallel to facts, empty = all 0
  std::vector<RuleHandle> strict;      // domain strict rules
  std::vector<RuleHandle> defeasible;  // D
};

struct AspicOptions {
  AspicMode mode = AspicMode::DDagger;
  std::size_t max_strict_arity = 2;
  std::optional<std::size_t> depth_bound;  // default |D| + |R| + 3
  ContrarinessSpec contrariness = ContrarinessSpec::neg_canonical();
};

CoreHandle aspic_core(AspicTheory theory, AspicOptions options = {});
// The premise language S of the representation.
FormulaSet aspic_premises(const CoreHandle& aspic);
Formula aspic_fact_rule(const CoreHandle& aspic, const Formula& fact);
struct AspicResult {
  std::vector<Derivation> trees;
  std::vector<std::string> warnings;
};
AspicResult aspic_deduce(const CoreHandle& aspic, const Formula& goal);

}  // namespace argonaut
