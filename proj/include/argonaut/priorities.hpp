#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argonaut/engine.hpp"
#include "argonaut/semantics.hpp"

// Values are natural numbers; a higher value is a weaker formula. An attack
// through a point succeeds when the attacker's value is <= the point's value.
namespace argonaut {

enum class Lifting { None, ConclusionValue, MinSupport, MaxSupport, WeakestLinkASPIC, MaxABA };

std::string to_string(Lifting l);
std::optional<Lifting> parse_lifting(const std::string& s);

struct PriorityAssignment {
  std::map<Formula, Value> pi;
  std::map<std::string, Value> rule_pi;
  std::optional<Value> fallback;  // for formulas without an entry
  bool inverted = false;          // lower value = weaker

  // Direct entry, else: labels carry their value, conjunctions take the min,
  // ⊕-terms the max, rule literals their rule's value.
  std::optional<Value> value_of(const Formula& f) const;
  Value require(const Formula& f) const;  // ConfigError when missing
  bool stronger_or_equal(Value attacker, Value point) const {
    return inverted ? attacker >= point : attacker <= point;
  }
};

// Base contrariness holds and the candidate's label is <= the target's.
bool labeled_contrary(const Formula& candidate, const Formula& of, const ContrarinessSpec& spec,
                      bool inverted = false);

// Fills value and point_values for each argument.
void assign_values(std::vector<Argument>& args, const Setting& setting,
                   const PriorityAssignment& pi, Lifting lifting);

bool pi_defeats(const Argument& a, const Argument& b, const Setting& setting,
                const PriorityAssignment& pi);

// Root value of a witness tree: max over children plus the value of the
// root rule when it has one; fact leaves take the fact's value, axioms 0.
Value weakest_link_value(const std::vector<Derivation>& items, int root,
                         const PriorityAssignment& pi);

AttackGraph build_prioritized_graph(const Setting& setting, const FormulaSet& premises,
                                    const FormulaSet& queries, const PriorityAssignment& pi,
                                    Lifting lifting, const BuildOptions& opts = {});

struct PrioritizedEntailment {
  bool entailed = false;
  bool vacuous = false;
  std::vector<Extension> extensions;
};

// ⊨_sem, or ⊨_sem^{<=v} with at_most.
PrioritizedEntailment prioritized_entailment(const AttackGraph& g, const Formula& phi,
                                             Semantics sem, std::optional<Value> at_most,
                                             const PriorityAssignment& pi,
                                             const SemanticsOptions& opts = {});
bool prioritized_entails(const Setting& setting, const FormulaSet& premises,
                         const PriorityAssignment& pi, Lifting lifting, const Formula& phi,
                         Semantics sem, std::optional<Value> at_most = std::nullopt,
                         const BuildOptions& build = {}, const SemanticsOptions& opts = {});

// Conjunctive premises whose value differs from the max over their conjuncts
// (also premises).
std::vector<std::string> coherence_warnings(const FormulaSet& premises,
                                            const PriorityAssignment& pi);

// ---- prioritized ABA over assumption sets --------------------------------

// ProofRoles: some φ in the attacker set is contradicted by a subset of the
// target that is strictly weaker. AsWritten: the target's φ is contradicted
// by a strictly weaker subset of the attacker.
enum class ReverseReading { ProofRoles, AsWritten };

bool aba_d_defeat(const FormulaSet& delta, const FormulaSet& gamma, const CoreHandle& aba,
                  const ContrarinessSpec& contrariness, const PriorityAssignment& pi);
bool aba_r_defeat(const FormulaSet& delta, const FormulaSet& gamma, const CoreHandle& aba,
                  const ContrarinessSpec& contrariness, const PriorityAssignment& pi,
                  ReverseReading reading = ReverseReading::ProofRoles);

// Setting for argument-level prioritized ABA: untracked core, the given
// contrariness extended to ⊕-terms, ⊕-closed points when `r_defeat`.
Setting aba_prioritized_setting(const CoreHandle& aba, ContrarinessSpec contrariness,
                                bool r_defeat);

}  // namespace argonaut
