#include "argonaut/priorities.hpp"

#include <algorithm>

namespace argonaut {

std::string to_string(Lifting l) {
  switch (l) {
    case Lifting::None: return "none";
    case Lifting::ConclusionValue: return "conclusion";
    case Lifting::MinSupport: return "min";
    case Lifting::MaxSupport: return "max";
    case Lifting::WeakestLinkASPIC: return "weakest-link";
    case Lifting::MaxABA: return "max-aba";
  }
  return "none";
}

std::optional<Lifting> parse_lifting(const std::string& s) {
  for (auto l : {Lifting::None, Lifting::ConclusionValue, Lifting::MinSupport,
                 Lifting::MaxSupport, Lifting::WeakestLinkASPIC, Lifting::MaxABA})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

std::optional<Value> PriorityAssignment::value_of(const Formula& f) const {
  if (f.kind() == Kind::Labeled) return f.label();
  if (auto it = pi.find(f); it != pi.end()) return it->second;
  switch (f.kind()) {
    case Kind::And: {
      auto l = value_of(f.children()[0]);
      auto r = value_of(f.children()[1]);
      if (l && r) return std::min(*l, *r);
      break;
    }
    case Kind::OPlus: {
      Value v = 0;
      for (const auto& c : f.children()) {
        auto x = value_of(c);
        if (!x) return fallback;
        v = std::max(v, *x);
      }
      return v;
    }
    case Kind::RuleLit:
      if (auto it = rule_pi.find(f.rule()->id); it != rule_pi.end()) return it->second;
      break;
    default: break;
  }
  return fallback;
}

Value PriorityAssignment::require(const Formula& f) const {
  auto v = value_of(f);
  if (!v) throw ConfigError("no priority value for " + f.text());
  return *v;
}

bool labeled_contrary(const Formula& candidate, const Formula& of, const ContrarinessSpec& spec,
                      bool inverted) {
  if (candidate.kind() != Kind::Labeled || of.kind() != Kind::Labeled)
    throw PreconditionError("labeled_contrary expects two labeled formulas");
  if (!is_contrary(candidate.base(), of.base(), spec)) return false;
  return inverted ? candidate.label() >= of.label() : candidate.label() <= of.label();
}

namespace {

std::optional<Value> fold(const FormulaSet& s, const PriorityAssignment& pi, bool take_max,
                          bool assumptions_only, const FormulaSet& ab) {
  std::optional<Value> out;
  for (const auto& f : s) {
    if (assumptions_only && !set_contains(ab, f)) continue;
    Value v = pi.require(f);
    out = out ? (take_max ? std::max(*out, v) : std::min(*out, v)) : v;
  }
  return out;
}

}  // namespace

void assign_values(std::vector<Argument>& args, const Setting& setting,
                   const PriorityAssignment& pi, Lifting lifting) {
  FormulaSet ab;
  if (lifting == Lifting::MaxABA) ab = aba_assumptions(setting.core);
  for (auto& a : args) {
    switch (lifting) {
      case Lifting::None:
      case Lifting::ConclusionValue: a.value = pi.require(a.conclusion); break;
      case Lifting::MinSupport: a.value = fold(a.support, pi, false, false, ab).value_or(0); break;
      case Lifting::MaxSupport: a.value = fold(a.support, pi, true, false, ab).value_or(0); break;
      case Lifting::MaxABA: a.value = fold(a.support, pi, true, true, ab).value_or(0); break;
      case Lifting::WeakestLinkASPIC: a.value = a.tree_value; break;
    }
    a.point_values.clear();
    for (const auto& p : attack_points(a.support, setting.points)) {
      if (lifting == Lifting::WeakestLinkASPIC) {
        auto it = std::find_if(a.tree_points.begin(), a.tree_points.end(),
                               [&](const auto& tp) { return tp.first == p; });
        if (it != a.tree_points.end()) {
          a.point_values.push_back(it->second);
          continue;
        }
        // Rule literals are never attacked; their value is irrelevant.
        if (p.kind() == Kind::RuleLit) {
          a.point_values.push_back(kUnboundedValue);
          continue;
        }
      }
      a.point_values.push_back(pi.require(p));
    }
  }
}

bool pi_defeats(const Argument& a, const Argument& b, const Setting& setting,
                const PriorityAssignment& pi) {
  if (!a.value) throw ConfigError("attacker " + a.text() + " has no value");
  FormulaSet pts = attack_points(b.support, setting.points);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!is_contrary(a.conclusion, pts[k], setting.contrariness)) continue;
    Value v = k < b.point_values.size() ? b.point_values[k] : pi.require(pts[k]);
    if (pi.stronger_or_equal(*a.value, v)) return true;
  }
  return false;
}

Value weakest_link_value(const std::vector<Derivation>& items, int root,
                         const PriorityAssignment& pi) {
  const Derivation& d = items.at(root);
  if (d.rule.rfind("fact(", 0) == 0) return pi.value_of(d.conclusion).value_or(0);
  if (d.rule.rfind("-> ", 0) == 0) return 0;
  Value v = 0;
  for (int c : d.children) v = std::max(v, weakest_link_value(items, c, pi));
  if (auto it = pi.rule_pi.find(d.rule); it != pi.rule_pi.end()) v = std::max(v, it->second);
  return v;
}

AttackGraph build_prioritized_graph(const Setting& setting, const FormulaSet& premises,
                                    const FormulaSet& queries, const PriorityAssignment& pi,
                                    Lifting lifting, const BuildOptions& opts) {
  if (lifting == Lifting::None) return build_graph(setting, premises, queries, opts);
  std::vector<std::string> warnings;
  RuleValueFn rule_values;
  if (lifting == Lifting::WeakestLinkASPIC)
    rule_values = [&pi](const RuleInfo& r) -> Value {
      if (auto it = pi.rule_pi.find(r.id); it != pi.rule_pi.end()) return it->second;
      if (r.id.rfind("fact(", 0) == 0)
        if (auto it = pi.pi.find(r.head); it != pi.pi.end()) return it->second;
      return r.value ? *r.value : pi.fallback.value_or(0);
    };
  auto args = build_arguments(setting, premises, queries, opts, &warnings, rule_values);
  assign_values(args, setting, pi, lifting);
  AttackGraph g = connect(setting, std::move(args), queries, opts, true, pi.inverted);
  g.warnings = std::move(warnings);
  return g;
}

PrioritizedEntailment prioritized_entailment(const AttackGraph& g, const Formula& phi,
                                             Semantics sem, std::optional<Value> at_most,
                                             const PriorityAssignment& pi,
                                             const SemanticsOptions& opts) {
  PrioritizedEntailment r;
  r.extensions = extensions(g.digraph, sem, opts);
  r.vacuous = r.extensions.empty();
  Bitset ok(g.arguments.size());
  for (const auto& a : g.arguments) {
    if (a.conclusion != phi) continue;
    if (at_most && (!a.value || !pi.stronger_or_equal(*a.value, *at_most))) continue;
    ok.set(a.id);
  }
  r.entailed = std::all_of(r.extensions.begin(), r.extensions.end(),
                           [&](const Extension& e) { return e.members.intersects(ok); });
  return r;
}

bool prioritized_entails(const Setting& setting, const FormulaSet& premises,
                         const PriorityAssignment& pi, Lifting lifting, const Formula& phi,
                         Semantics sem, std::optional<Value> at_most, const BuildOptions& build,
                         const SemanticsOptions& opts) {
  AttackGraph g = build_prioritized_graph(setting, premises, make_set({phi}), pi, lifting, build);
  return prioritized_entailment(g, phi, sem, at_most, pi, opts).entailed;
}

std::vector<std::string> coherence_warnings(const FormulaSet& premises,
                                            const PriorityAssignment& pi) {
  std::vector<std::string> out;
  for (const auto& f : premises) {
    if (f.kind() != Kind::And) continue;
    auto it = pi.pi.find(f);
    if (it == pi.pi.end()) continue;
    std::vector<Formula> stack{f.children()[0], f.children()[1]};
    std::optional<Value> mx;
    bool all_premises = true;
    while (!stack.empty() && all_premises) {
      Formula g = stack.back();
      stack.pop_back();
      auto v = pi.pi.find(g);
      if (set_contains(premises, g) && v != pi.pi.end()) {
        mx = mx ? std::max(*mx, v->second) : v->second;
      } else if (g.kind() == Kind::And) {
        stack.push_back(g.children()[0]);
        stack.push_back(g.children()[1]);
      } else {
        all_premises = false;
      }
    }
    if (all_premises && mx && *mx != it->second)
      out.push_back("priority of " + f.text() + " is " + std::to_string(it->second) +
                    " but its conjuncts have max " + std::to_string(*mx));
  }
  return out;
}

namespace {

std::vector<FormulaSet> nonempty_subsets(const FormulaSet& s) {
  if (s.size() > 20) throw CapExceeded("subset search over more than 20 assumptions");
  std::vector<FormulaSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << s.size()); ++m)
    out.push_back(subset_by_mask(s, m));
  return out;
}

Value max_of(const FormulaSet& s, const PriorityAssignment& pi) {
  Value v = 0;
  for (const auto& f : s) v = std::max(v, pi.require(f));
  return v;
}

// Some subset of `from` (empty included) derives a contrary of `target` and
// passes `accept` on its max value.
template <class Accept>
bool contradicted_by(const Formula& target, const FormulaSet& from, const CoreHandle& aba,
                     const ContrarinessSpec& c, const PriorityAssignment& pi, Accept accept) {
  FormulaSet contraries = canonical_contraries(target, c);
  auto subsets = nonempty_subsets(from);
  subsets.insert(subsets.begin(), FormulaSet{});
  for (const auto& sub : subsets) {
    Value v = max_of(sub, pi);
    if (!accept(v)) continue;
    for (const auto& psi : contraries)
      if (aba_derives(aba, sub, psi)) return true;
  }
  return false;
}

}  // namespace

bool aba_d_defeat(const FormulaSet& delta, const FormulaSet& gamma, const CoreHandle& aba,
                  const ContrarinessSpec& contrariness, const PriorityAssignment& pi) {
  for (const auto& d : gamma) {
    Value vd = pi.require(d);
    if (contradicted_by(d, delta, aba, contrariness, pi,
                        [&](Value v) { return pi.stronger_or_equal(v, vd); }))
      return true;
  }
  return false;
}

bool aba_r_defeat(const FormulaSet& delta, const FormulaSet& gamma, const CoreHandle& aba,
                  const ContrarinessSpec& contrariness, const PriorityAssignment& pi,
                  ReverseReading reading) {
  if (aba_d_defeat(delta, gamma, aba, contrariness, pi)) return true;
  const bool proof_roles = reading == ReverseReading::ProofRoles;
  const FormulaSet& owner = proof_roles ? delta : gamma;
  const FormulaSet& deriver = proof_roles ? gamma : delta;
  for (const auto& phi : owner) {
    Value vp = pi.require(phi);
    if (contradicted_by(phi, deriver, aba, contrariness, pi,
                        [&](Value v) { return !pi.stronger_or_equal(v, vp); }))
      return true;
  }
  return false;
}

Setting aba_prioritized_setting(const CoreHandle& aba, ContrarinessSpec contrariness,
                                bool r_defeat) {
  contrariness.oplus_core = aba;
  AttackPointSpec pts{r_defeat ? AttackPointKind::OPlusClosure : AttackPointKind::Id};
  return make_setting(aba, AttackRule::Native, std::move(contrariness), pts);
}

}  // namespace argonaut
