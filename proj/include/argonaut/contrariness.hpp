#pragma once

#include <map>
#include <memory>

#include "argonaut/formula.hpp"

namespace argonaut {

class Core;
using CoreHandle = std::shared_ptr<const Core>;

enum class ContraryKind { Neg, NegCanonical, EntailNeg, EquivNeg, ExplicitMap };

struct ContrarinessSpec {
  ContraryKind kind = ContraryKind::Neg;
  // Decides entailments for EntailNeg/EquivNeg; defaults to plain CL.
  CoreHandle entail;
  std::map<Formula, FormulaSet> map;  // ExplicitMap
  // Core that decides derivations behind ⊕-term targets.
  CoreHandle oplus_core;

  static ContrarinessSpec neg() { return {ContraryKind::Neg, nullptr, {}, nullptr}; }
  static ContrarinessSpec neg_canonical() {
    return {ContraryKind::NegCanonical, nullptr, {}, nullptr};
  }
  static ContrarinessSpec entail_neg(CoreHandle c = nullptr) {
    return {ContraryKind::EntailNeg, std::move(c), {}, nullptr};
  }
  static ContrarinessSpec equiv_neg(CoreHandle c = nullptr) {
    return {ContraryKind::EquivNeg, std::move(c), {}, nullptr};
  }
  static ContrarinessSpec explicit_map(std::map<Formula, FormulaSet> m) {
    return {ContraryKind::ExplicitMap, nullptr, std::move(m), nullptr};
  }
};

enum class AttackPointKind { Id, ConjClosure, OPlusClosure };

struct AttackPointSpec {
  AttackPointKind kind = AttackPointKind::Id;
};

// Rule literals have no contraries under the negation-style kinds: they are
// not sentences of the object language.
bool is_contrary(const Formula& candidate, const Formula& of, const ContrarinessSpec& spec);

// A finite set of representatives such that, for cores with Cut, anything
// entailing a contrary of `of` entails one of these.
FormulaSet canonical_contraries(const Formula& of, const ContrarinessSpec& spec);

FormulaSet attack_points(const FormulaSet& support, const AttackPointSpec& spec);

}  // namespace argonaut
