#include "argonaut/contrariness.hpp"

#include "argonaut/core.hpp"

namespace argonaut {

namespace {

const CoreHandle& entail_core(const ContrarinessSpec& spec) {
  static const CoreHandle cl = cl_core();
  return spec.entail ? spec.entail : cl;
}

bool explicit_member(const ContrarinessSpec& spec, const Formula& candidate, const Formula& of) {
  auto it = spec.map.find(of);
  return it != spec.map.end() && set_contains(it->second, candidate);
}

bool oplus_member(const Formula& candidate, const Formula& of, const ContrarinessSpec& spec) {
  if (!spec.oplus_core)
    throw ConfigError("contrary query on a (+)-term without a deriving core");
  FormulaSet delta = make_set(of.children());
  for (const auto& psi : canonical_contraries(candidate, spec))
    if (spec.oplus_core->holds(delta, psi)) return true;
  return false;
}

}  // namespace

bool is_contrary(const Formula& cand_in, const Formula& of_in, const ContrarinessSpec& spec) {
  const Formula& candidate = cand_in.base();
  const Formula& of = of_in.base();
  if (of.kind() == Kind::OPlus) return oplus_member(candidate, of, spec);
  if (spec.kind == ContraryKind::ExplicitMap) return explicit_member(spec, candidate, of);
  if (of.kind() == Kind::RuleLit) return false;
  switch (spec.kind) {
    case ContraryKind::Neg:
      return candidate.is_neg() && candidate.children()[0] == of;
    case ContraryKind::NegCanonical:
      if (of.is_neg()) return candidate == of.children()[0];
      return candidate.is_neg() && candidate.children()[0] == of;
    case ContraryKind::EntailNeg: {
      FormulaSet g{candidate};
      return entail_core(spec)->holds(g, Formula::neg(of));
    }
    case ContraryKind::EquivNeg: {
      FormulaSet g{candidate};
      Formula n = Formula::neg(of);
      if (!entail_core(spec)->holds(g, n)) return false;
      FormulaSet h{n};
      return entail_core(spec)->holds(h, candidate);
    }
    case ContraryKind::ExplicitMap:
      break;
  }
  return false;
}

FormulaSet canonical_contraries(const Formula& of_in, const ContrarinessSpec& spec) {
  const Formula& of = of_in.base();
  if (of.kind() == Kind::OPlus) {
    if (!spec.oplus_core)
      throw ConfigError("contrary query on a (+)-term without a deriving core");
    FormulaSet out;
    FormulaSet delta = make_set(of.children());
    for (const auto& [target, contraries] : spec.map)
      for (const auto& psi : contraries)
        if (spec.oplus_core->holds(delta, psi)) {
          out.push_back(target);
          break;
        }
    return make_set(out);
  }
  if (spec.kind == ContraryKind::ExplicitMap) {
    auto it = spec.map.find(of);
    return it == spec.map.end() ? FormulaSet{} : it->second;
  }
  if (of.kind() == Kind::RuleLit) return {};
  if (spec.kind == ContraryKind::NegCanonical && of.is_neg()) return {of.children()[0]};
  return {Formula::neg(of)};
}

FormulaSet attack_points(const FormulaSet& support, const AttackPointSpec& spec) {
  if (spec.kind == AttackPointKind::Id) return support;
  if (support.size() > 20)
    throw CapExceeded("conjunction closure over more than 20 formulas");
  std::vector<Formula> out;
  std::uint64_t n = std::uint64_t{1} << support.size();
  for (std::uint64_t mask = 1; mask < n; ++mask) {
    FormulaSet sub = subset_by_mask(support, mask);
    if (spec.kind == AttackPointKind::ConjClosure)
      out.push_back(conj_all(sub));
    else
      out.push_back(Formula::oplus(sub));
  }
  if (spec.kind == AttackPointKind::OPlusClosure)
    out.insert(out.end(), support.begin(), support.end());
  return make_set(std::move(out));
}

}  // namespace argonaut
