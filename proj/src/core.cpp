#include "argonaut/core.hpp"

#include <algorithm>

#include "argonaut/cl.hpp"

namespace argonaut {

std::vector<char> Core::holds_batch(const FormulaSet& support,
                                    std::span<const Formula> conclusions) const {
  std::vector<char> out(conclusions.size());
  for (std::size_t i = 0; i < conclusions.size(); ++i) out[i] = holds(support, conclusions[i]);
  return out;
}

DerivationSet Core::derive_all(const FormulaSet&, const FormulaSet&) const {
  throw ConfigError(describe() + " has no finite argument space");
}

CoreHandle extend_with_axiom(const CoreHandle& core, const Formula& phi) {
  return core->with_axiom(phi);
}

namespace {

// Entailment of several conclusions from one premise set, sharing the models.
std::vector<char> cl_batch(const FormulaSet& gamma, std::span<const Formula> concl) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.insert(all.end(), concl.begin(), concl.end());
  std::vector<char> out(concl.size());
  if (cl_vars(all).size() > kClAtomCap) {
    for (std::size_t i = 0; i < concl.size(); ++i) out[i] = cl_entails(gamma, concl[i]);
    return out;
  }
  ValuationSpace vs = ValuationSpace::over(all);
  auto models = vs.ones();
  for (const auto& g : gamma) {
    auto b = vs.eval(g);
    for (std::size_t w = 0; w < models.size(); ++w) models[w] &= b[w];
  }
  for (std::size_t i = 0; i < concl.size(); ++i) {
    auto p = vs.eval(concl[i]);
    bool ok = true;
    for (std::size_t w = 0; w < models.size() && ok; ++w) ok = !(models[w] & ~p[w]);
    out[i] = ok;
  }
  return out;
}

class ClCore : public Core {
 public:
  explicit ClCore(FormulaSet ax) : ax_(std::move(ax)) {}
  CoreKind kind() const override { return CoreKind::CL; }
  std::string describe() const override { return "cl"; }
  bool cl_family() const override { return true; }
  FormulaSet axioms() const override { return ax_; }

  bool holds(const FormulaSet& s, const Formula& c) const override {
    return cl_entails(set_union(s, ax_), c);
  }
  std::vector<char> holds_batch(const FormulaSet& s,
                                std::span<const Formula> cs) const override {
    return cl_batch(set_union(s, ax_), cs);
  }
  CoreHandle with_axiom(const Formula& phi) const override {
    if (set_contains(ax_, phi)) return handle();
    return std::make_shared<ClCore>(set_with(ax_, phi));
  }

 private:
  FormulaSet ax_;
};

class ClTopCore : public Core {
 public:
  explicit ClTopCore(FormulaSet ax) : ax_(std::move(ax)) {}
  CoreKind kind() const override { return CoreKind::CLTop; }
  std::string describe() const override { return "cl-top"; }
  bool cl_family() const override { return true; }
  FormulaSet axioms() const override { return ax_; }

  bool admits_support(const FormulaSet& s) const override {
    return cl_satisfiable(set_union(s, ax_));
  }
  bool holds(const FormulaSet& s, const Formula& c) const override {
    FormulaSet g = set_union(s, ax_);
    return cl_satisfiable(g) && cl_entails(g, c);
  }
  std::vector<char> holds_batch(const FormulaSet& s,
                                std::span<const Formula> cs) const override {
    FormulaSet g = set_union(s, ax_);
    if (!cl_satisfiable(g)) return std::vector<char>(cs.size(), 0);
    return cl_batch(g, cs);
  }
  CoreHandle with_axiom(const Formula& phi) const override {
    if (set_contains(ax_, phi)) return handle();
    return std::make_shared<ClTopCore>(set_with(ax_, phi));
  }

 private:
  FormulaSet ax_;
};

class McsCore : public Core {
 public:
  explicit McsCore(bool cap) : cap_(cap) {}
  CoreKind kind() const override { return cap_ ? CoreKind::MCSCap : CoreKind::MCSCup; }
  std::string describe() const override { return cap_ ? "mcs-cap" : "mcs-cup"; }
  bool cl_family() const override { return true; }

  bool holds(const FormulaSet& s, const Formula& c) const override {
    return holds_batch(s, std::span<const Formula>(&c, 1))[0];
  }
  std::vector<char> holds_batch(const FormulaSet& s,
                                std::span<const Formula> cs) const override {
    std::vector<char> acc(cs.size(), cap_ ? 1 : 0);
    for (const auto& m : maximal_consistent_subsets(s)) {
      auto r = cl_batch(m, cs);
      for (std::size_t i = 0; i < cs.size(); ++i) acc[i] = cap_ ? (acc[i] && r[i]) : (acc[i] || r[i]);
    }
    return acc;
  }

 private:
  bool cap_;
};

// One-step composition: Γ ⊢ ψ or Γ ∪ {φ} ⊢ ψ.
class AxiomExtendedCore : public Core {
 public:
  AxiomExtendedCore(CoreHandle base, Formula phi) : base_(std::move(base)), phi_(std::move(phi)) {}
  CoreKind kind() const override { return CoreKind::AxiomExtended; }
  std::string describe() const override { return base_->describe() + "+(" + phi_.text() + ")"; }
  bool cl_family() const override { return base_->cl_family(); }
  FormulaSet axioms() const override { return set_with(base_->axioms(), phi_); }

  bool admits_support(const FormulaSet& s) const override {
    return base_->admits_support(s) || base_->admits_support(set_with(s, phi_));
  }
  bool holds(const FormulaSet& s, const Formula& c) const override {
    return base_->holds(s, c) || base_->holds(set_with(s, phi_), c);
  }
  std::vector<char> holds_batch(const FormulaSet& s,
                                std::span<const Formula> cs) const override {
    auto a = base_->holds_batch(s, cs);
    auto b = base_->holds_batch(set_with(s, phi_), cs);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
    return a;
  }
  CoreHandle with_axiom(const Formula& phi) const override {
    if (set_contains(axioms(), phi)) return handle();
    return std::make_shared<AxiomExtendedCore>(handle(), phi);
  }

 private:
  CoreHandle base_;
  Formula phi_;
};

// Support-level restriction of a base relation. Rule-based bases take the axiom
// inside so derivations can use it; logic bases compose over the restriction.
class RestrictedCore : public Core {
 public:
  explicit RestrictedCore(CoreHandle base) : base_(std::move(base)) {}
  bool cl_family() const override { return base_->cl_family(); }
  bool rule_based() const override { return base_->rule_based(); }
  FormulaSet axioms() const override { return base_->axioms(); }

  bool admits_support(const FormulaSet& s) const override {
    return base_->admits_support(s) && accept(s);
  }
  bool holds(const FormulaSet& s, const Formula& c) const override {
    return admits_support(s) && base_->holds(s, c);
  }
  std::vector<char> holds_batch(const FormulaSet& s,
                                std::span<const Formula> cs) const override {
    if (!admits_support(s)) return std::vector<char>(cs.size(), 0);
    return base_->holds_batch(s, cs);
  }
  DerivationSet derive_all(const FormulaSet& premises, const FormulaSet& goals) const override {
    return filter(base_->derive_all(premises, goals));
  }
  DerivationSet derive_all_valued(const FormulaSet& premises, const FormulaSet& goals,
                                  const RuleValueFn& values) const override {
    return filter(base_->derive_all_valued(premises, goals, values));
  }
  DerivationSet filter(DerivationSet all) const {
    // Re-index witness children after dropping rejected supports.
    DerivationSet out;
    out.warnings = all.warnings;
    std::vector<int> remap(all.items.size(), -1);
    for (std::size_t i = 0; i < all.items.size(); ++i) {
      if (!accept(all.items[i].support)) continue;
      remap[i] = static_cast<int>(out.items.size());
      out.items.push_back(all.items[i]);
    }
    for (auto& d : out.items) {
      std::vector<int> kids;
      for (int k : d.children)
        if (remap[k] >= 0) kids.push_back(remap[k]);
      d.children = kids;
    }
    return out;
  }
  CoreHandle with_axiom(const Formula& phi) const override {
    if (!base_->rule_based()) return Core::with_axiom(phi);
    return rebuild(base_->with_axiom(phi));
  }

 protected:
  virtual bool accept(const FormulaSet& s) const = 0;
  virtual CoreHandle rebuild(CoreHandle base) const = 0;
  CoreHandle base_;
};

class EmptyRestrictedCore : public RestrictedCore {
 public:
  EmptyRestrictedCore(CoreHandle base, ContrarinessSpec c, AttackPointSpec p)
      : RestrictedCore(std::move(base)), c_(std::move(c)), p_(p) {}
  CoreKind kind() const override { return CoreKind::EmptyRestricted; }
  std::string describe() const override { return base_->describe() + "^empty"; }

 protected:
  bool accept(const FormulaSet& s) const override {
    for (const auto& point : attack_points(s, p_)) {
      FormulaSet reps = canonical_contraries(point, c_);
      auto r = base_->holds_batch({}, reps);
      for (char x : r)
        if (x) return false;
    }
    return true;
  }
  CoreHandle rebuild(CoreHandle base) const override {
    return std::make_shared<EmptyRestrictedCore>(std::move(base), c_, p_);
  }

 private:
  ContrarinessSpec c_;
  AttackPointSpec p_;
};

class ConsistentRestrictedCore : public RestrictedCore {
 public:
  ConsistentRestrictedCore(CoreHandle base, ContrarinessSpec c)
      : RestrictedCore(std::move(base)), c_(std::move(c)) {}
  CoreKind kind() const override { return CoreKind::ConsistentRestricted; }
  std::string describe() const override { return base_->describe() + "^con"; }

 protected:
  bool accept(const FormulaSet& s) const override { return af_consistent(*base_, c_, s); }
  CoreHandle rebuild(CoreHandle base) const override {
    return std::make_shared<ConsistentRestrictedCore>(std::move(base), c_);
  }

 private:
  ContrarinessSpec c_;
};

class ClConsistentRestrictedCore : public RestrictedCore {
 public:
  using RestrictedCore::RestrictedCore;
  CoreKind kind() const override { return CoreKind::CLConsistentRestricted; }
  std::string describe() const override { return base_->describe() + "^*"; }

 protected:
  bool accept(const FormulaSet& s) const override { return cl_satisfiable(s); }
  CoreHandle rebuild(CoreHandle base) const override {
    return std::make_shared<ClConsistentRestrictedCore>(std::move(base));
  }
};

}  // namespace

CoreHandle Core::with_axiom(const Formula& phi) const {
  if (set_contains(axioms(), phi)) return handle();
  return std::make_shared<AxiomExtendedCore>(handle(), phi);
}

CoreHandle cl_core() { return std::make_shared<ClCore>(FormulaSet{}); }
CoreHandle cl_top_core() { return std::make_shared<ClTopCore>(FormulaSet{}); }
CoreHandle mcs_core(bool cap) { return std::make_shared<McsCore>(cap); }

CoreHandle restrict_empty_attackers(CoreHandle core, ContrarinessSpec c, AttackPointSpec p) {
  return std::make_shared<EmptyRestrictedCore>(std::move(core), std::move(c), p);
}
CoreHandle restrict_consistent(CoreHandle core, ContrarinessSpec c) {
  return std::make_shared<ConsistentRestrictedCore>(std::move(core), std::move(c));
}
CoreHandle restrict_cl_consistent(CoreHandle core) {
  return std::make_shared<ClConsistentRestrictedCore>(std::move(core));
}

std::vector<FormulaSet> maximal_consistent_subsets(const FormulaSet& gamma) {
  if (gamma.size() > 20) throw CapExceeded("maximal consistent subsets over more than 20 formulas");
  ValuationSpace vs = ValuationSpace::over(gamma);
  std::vector<ValuationSpace::Bits> tt;
  for (const auto& g : gamma) tt.push_back(vs.eval(g));
  const std::uint64_t n = std::uint64_t{1} << gamma.size();
  auto consistent = [&](std::uint64_t mask) {
    auto m = vs.ones();
    for (std::size_t i = 0; i < gamma.size(); ++i)
      if (mask >> i & 1)
        for (std::size_t w = 0; w < m.size(); ++w) m[w] &= tt[i][w];
    for (auto w : m)
      if (w) return true;
    return false;
  };
  std::vector<FormulaSet> out;
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    if (!consistent(mask)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < gamma.size() && maximal; ++i)
      if (!(mask >> i & 1) && consistent(mask | (std::uint64_t{1} << i))) maximal = false;
    if (maximal) out.push_back(subset_by_mask(gamma, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool directly_inconsistent(const Core& core, const ContrarinessSpec& c, const FormulaSet& theta) {
  for (const auto& g : theta) {
    FormulaSet reps = canonical_contraries(g, c);
    if (reps.empty()) continue;
    auto r = core.holds_batch(set_without(theta, g), reps);
    for (char x : r)
      if (x) return true;
  }
  return false;
}

bool af_consistent(const Core& core, const ContrarinessSpec& c, const FormulaSet& theta) {
  if (theta.size() > 20) throw CapExceeded("consistency test over more than 20 formulas");
  const std::uint64_t n = std::uint64_t{1} << theta.size();
  for (std::uint64_t mask = 1; mask < n; ++mask)
    if (directly_inconsistent(core, c, subset_by_mask(theta, mask))) return false;
  return true;
}

}  // namespace argonaut
