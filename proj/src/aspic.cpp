#include <algorithm>
#include <map>

#include "argonaut/cl.hpp"
#include "argonaut/core.hpp"

namespace argonaut {

namespace {

using Points = std::vector<std::pair<Formula, Value>>;

Points merge_points(const Points& a, const Points& b) {
  Points out = a;
  for (const auto& [f, v] : b) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == f; });
    if (it == out.end())
      out.emplace_back(f, v);
    else
      it->second = std::max(it->second, v);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

class Forward {
 public:
  std::vector<Derivation> items;
  std::map<Formula, std::vector<int>> by_concl;

  bool add(Derivation d) {
    auto key = std::make_pair(d.support, d.conclusion);
    auto it = index_.find(key);
    if (it != index_.end()) {
      Derivation& old = items[it->second];
      old.tree_points = merge_points(old.tree_points, d.tree_points);
      old.tree_value = std::min(old.tree_value, d.tree_value);
      return false;
    }
    int id = static_cast<int>(items.size());
    index_.emplace(std::move(key), id);
    by_concl[d.conclusion].push_back(id);
    items.push_back(std::move(d));
    return true;
  }

 private:
  std::map<std::pair<FormulaSet, Formula>, int> index_;
};

// Calls f(combo) for every choice of one derivation per body formula.
template <class F>
void for_each_combo(const std::vector<std::vector<int>>& choices, F&& f) {
  std::vector<int> combo(choices.size());
  std::vector<std::size_t> idx(choices.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) return;
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i) combo[i] = choices[i][idx[i]];
    f(combo);
    std::size_t k = 0;
    while (k < choices.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == choices.size()) return;
  }
}

}  // namespace

class AspicCore : public Core {
 public:
  AspicCore(AspicTheory th, AspicOptions opt, FormulaSet ax)
      : th_(std::move(th)), opt_(std::move(opt)), ax_(std::move(ax)) {
    for (std::size_t i = 0; i < th_.facts.size(); ++i) {
      Value v = i < th_.fact_values.size() ? th_.fact_values[i] : 0;
      fact_rules_.push_back(
          make_rule("fact(" + th_.facts[i].text() + ")", RuleKind::Strict, {}, th_.facts[i], v));
    }
  }

  CoreKind kind() const override { return CoreKind::ASPIC; }
  std::string describe() const override {
    return opt_.mode == AspicMode::Dagger ? "aspic(dagger)" : "aspic(ddagger)";
  }
  bool rule_based() const override { return true; }
  FormulaSet axioms() const override { return ax_; }

  CoreHandle with_axiom(const Formula& phi) const override {
    if (set_contains(ax_, phi)) return handle();
    return std::make_shared<AspicCore>(th_, opt_, set_with(ax_, phi));
  }

  FormulaSet premises() const {
    std::vector<Formula> s;
    for (const auto& r : th_.defeasible) {
      s.push_back(rule_formula(r));
      s.push_back(name_formula(r));
      s.push_back(r->head);
    }
    for (const auto& r : fact_rules_) s.push_back(rule_formula(r));
    if (opt_.mode == AspicMode::Dagger)
      for (const auto& r : th_.strict) s.push_back(rule_formula(r));
    return make_set(std::move(s));
  }

  Formula fact_rule(const Formula& fact) const {
    for (const auto& r : fact_rules_)
      if (r->head == fact) return rule_formula(r);
    throw PreconditionError("not a fact: " + fact.text());
  }

  bool holds(const FormulaSet& s, const Formula& c) const override {
    DerivationSet ds = derive_all(s, {c});
    for (const auto& d : ds.items)
      if (d.conclusion == c && d.support == s) return true;
    return false;
  }

  DerivationSet derive_all(const FormulaSet& premises, const FormulaSet& goals) const override {
    return derive_all_valued(premises, goals, {});
  }

  DerivationSet derive_all_valued(const FormulaSet& premises, const FormulaSet& goals,
                                  const RuleValueFn& values) const override {
    auto value_of = [&](const RuleHandle& r) { return values ? values(*r) : r->value.value_or(0); };
    const bool dagger = opt_.mode == AspicMode::Dagger;
    std::vector<RuleHandle> defeasible, strict_tracked, strict_free, facts;
    for (const auto& r : th_.defeasible)
      if (set_contains(premises, rule_formula(r))) defeasible.push_back(r);
    for (const auto& r : th_.strict) {
      if (!dagger)
        strict_free.push_back(r);
      else if (set_contains(premises, rule_formula(r)))
        strict_tracked.push_back(r);
    }
    for (const auto& r : fact_rules_)
      if (set_contains(premises, rule_formula(r))) facts.push_back(r);

    // Target conclusions for classically generated strict steps.
    FormulaSet universe;
    if (!dagger) {
      std::vector<Formula> u(goals.begin(), goals.end());
      u.insert(u.end(), ax_.begin(), ax_.end());
      auto add_rule = [&](const RuleHandle& r) {
        u.push_back(r->head);
        for (const auto& b : r->body)
          if (b.kind() != Kind::Top) u.push_back(b);
      };
      for (const auto& r : th_.defeasible) {
        add_rule(r);
        for (const auto& c : canonical_contraries(r->head, opt_.contrariness)) u.push_back(c);
        for (const auto& c : canonical_contraries(name_formula(r), opt_.contrariness))
          u.push_back(c);
      }
      for (const auto& r : th_.strict) add_rule(r);
      for (const auto& f : th_.facts) u.push_back(f);
      universe = make_set(std::move(u));
    }

    Forward fw;
    for (const auto& r : facts)
      fw.add(Derivation{{rule_formula(r)}, r->head, value_of(r), {}, r->id, {}});
    for (const auto& a : ax_) fw.add(Derivation{{}, a, 0, {}, "-> " + a.text(), {}});
    if (!dagger)
      for (const auto& t : universe)
        if (cl_tautology(t)) fw.add(Derivation{{}, t, 0, {}, "cl", {}});

    const std::size_t bound =
        opt_.depth_bound.value_or(th_.defeasible.size() + th_.strict.size() + 3);
    std::map<std::vector<Formula>, std::vector<char>> entail_memo;
    int prev_start = 0;
    bool grew = true;
    std::size_t round = 0;
    for (; round < bound && grew; ++round) {
      const int frontier = prev_start;
      const int snapshot = static_cast<int>(fw.items.size());
      grew = false;
      auto apply = [&](const RuleHandle& r, bool tracked, bool defeasible_rule) {
        std::vector<std::vector<int>> choices;
        for (const auto& b : r->body) {
          if (b.kind() == Kind::Top) continue;
          auto it = fw.by_concl.find(b);
          std::vector<int> c;
          if (it != fw.by_concl.end())
            for (int i : it->second)
              if (i < snapshot) c.push_back(i);
          choices.push_back(std::move(c));
        }
        if (choices.empty() && round > 0) return;
        for_each_combo(choices, [&](const std::vector<int>& combo) {
          if (!combo.empty() && *std::max_element(combo.begin(), combo.end()) < frontier) return;
          Derivation d;
          d.conclusion = r->head;
          d.rule = r->id;
          d.children = combo;
          std::vector<Formula> sup;
          for (int k : combo) {
            const Derivation& ch = fw.items[k];
            sup.insert(sup.end(), ch.support.begin(), ch.support.end());
            d.tree_value = std::max(d.tree_value, ch.tree_value);
            d.tree_points = merge_points(d.tree_points, ch.tree_points);
          }
          if (tracked) sup.push_back(rule_formula(r));
          if (defeasible_rule) {
            sup.push_back(name_formula(r));
            sup.push_back(r->head);
            d.tree_value = std::max(d.tree_value, value_of(r));
            d.tree_points = merge_points(
                d.tree_points, {{r->head, d.tree_value}, {name_formula(r), kUnboundedValue}});
          }
          d.support = make_set(std::move(sup));
          if (fw.add(std::move(d))) grew = true;
        });
      };
      for (const auto& r : defeasible) apply(r, true, true);
      for (const auto& r : strict_tracked) apply(r, true, false);
      for (const auto& r : strict_free) apply(r, false, false);

      if (!dagger) {
        auto entailed = [&](std::vector<Formula> premises_of_step) -> const std::vector<char>& {
          premises_of_step = make_set(std::move(premises_of_step));
          auto it = entail_memo.find(premises_of_step);
          if (it != entail_memo.end()) return it->second;
          std::vector<char> v(universe.size());
          for (std::size_t t = 0; t < universe.size(); ++t)
            v[t] = cl_entails(premises_of_step, universe[t]);
          return entail_memo.emplace(premises_of_step, std::move(v)).first->second;
        };
        auto step = [&](const std::vector<int>& kids) {
          std::vector<Formula> concl;
          for (int k : kids) concl.push_back(fw.items[k].conclusion);
          const std::vector<char>& ok = entailed(concl);
          for (std::size_t t = 0; t < universe.size(); ++t) {
            if (!ok[t]) continue;
            Derivation d;
            d.conclusion = universe[t];
            d.rule = "cl";
            d.children = kids;
            std::vector<Formula> sup;
            for (int k : kids) {
              const Derivation& ch = fw.items[k];
              sup.insert(sup.end(), ch.support.begin(), ch.support.end());
              d.tree_value = std::max(d.tree_value, ch.tree_value);
              d.tree_points = merge_points(d.tree_points, ch.tree_points);
            }
            d.support = make_set(std::move(sup));
            if (fw.add(std::move(d))) grew = true;
          }
        };
        if (opt_.max_strict_arity >= 1)
          for (int i = frontier; i < snapshot; ++i) step({i});
        if (opt_.max_strict_arity >= 2)
          for (int j = 0; j < snapshot; ++j)
            for (int i = std::max(frontier, j + 1); i < snapshot; ++i) step({j, i});
      }
      prev_start = snapshot;
    }
    DerivationSet out;
    if (grew)
      out.warnings.push_back("derivation search stopped at depth bound " + std::to_string(bound) +
                             " with a growing frontier; argument set may be incomplete");
    for (auto& d : fw.items)
      if (set_subset(d.support, premises)) out.items.push_back(d);
    // Children indices point into the unfiltered list; recompute against the kept items.
    std::map<std::pair<FormulaSet, Formula>, int> kept;
    for (std::size_t i = 0; i < out.items.size(); ++i)
      kept.emplace(std::make_pair(out.items[i].support, out.items[i].conclusion),
                   static_cast<int>(i));
    for (auto& d : out.items) {
      std::vector<int> kids;
      for (int k : d.children) {
        auto it = kept.find({fw.items[k].support, fw.items[k].conclusion});
        if (it != kept.end()) kids.push_back(it->second);
      }
      d.children = kids;
    }
    return out;
  }

 private:
  AspicTheory th_;
  AspicOptions opt_;
  FormulaSet ax_;
  std::vector<RuleHandle> fact_rules_;
};

namespace {
const AspicCore& as_aspic(const CoreHandle& c) {
  auto p = dynamic_cast<const AspicCore*>(c.get());
  if (!p) throw ConfigError("not an ASPIC core: " + c->describe());
  return *p;
}
}  // namespace

CoreHandle aspic_core(AspicTheory theory, AspicOptions options) {
  std::vector<std::pair<Formula, Value>> fv;
  for (std::size_t i = 0; i < theory.facts.size(); ++i)
    fv.emplace_back(theory.facts[i], i < theory.fact_values.size() ? theory.fact_values[i] : 0);
  std::sort(fv.begin(), fv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  fv.erase(std::unique(fv.begin(), fv.end(),
                       [](const auto& a, const auto& b) { return a.first == b.first; }),
           fv.end());
  theory.facts.clear();
  theory.fact_values.clear();
  for (auto& [f, v] : fv) {
    theory.facts.push_back(f);
    theory.fact_values.push_back(v);
  }
  return std::make_shared<AspicCore>(std::move(theory), std::move(options), FormulaSet{});
}

FormulaSet aspic_premises(const CoreHandle& aspic) { return as_aspic(aspic).premises(); }

Formula aspic_fact_rule(const CoreHandle& aspic, const Formula& fact) {
  return as_aspic(aspic).fact_rule(fact);
}

AspicResult aspic_deduce(const CoreHandle& aspic, const Formula& goal) {
  DerivationSet ds = aspic->derive_all(aspic_premises(aspic), {goal});
  AspicResult r;
  r.warnings = ds.warnings;
  for (auto& d : ds.items)
    if (d.conclusion == goal) r.trees.push_back(d);
  return r;
}

}  // namespace argonaut
