#include <algorithm>
#include <map>

#include "argonaut/core.hpp"

namespace argonaut {

namespace {

bool body_satisfied(const RuleInfo& r, const FormulaSet& known) {
  for (const auto& b : r.body)
    if (b.kind() != Kind::Top && !set_contains(known, b)) return false;
  return true;
}

}  // namespace

class AbaCore : public Core {
 public:
  AbaCore(FormulaSet assumptions, std::vector<RuleHandle> rules, bool tracked, FormulaSet ax)
      : assumptions_(std::move(assumptions)),
        rules_(std::move(rules)),
        tracked_(tracked),
        ax_(std::move(ax)) {
    for (const auto& r : rules_) {
      if (set_contains(assumptions_, r->head))
        throw ConfigError("rule " + r->id + " has an assumption as head (framework not flat)");
      by_text_.emplace(rule_formula(r).text(), r);
    }
  }

  CoreKind kind() const override { return CoreKind::ABARules; }
  std::string describe() const override { return tracked_ ? "aba(tracked)" : "aba"; }
  bool rule_based() const override { return true; }
  FormulaSet axioms() const override { return ax_; }

  CoreHandle with_axiom(const Formula& phi) const override {
    if (set_contains(ax_, phi)) return handle();
    return std::make_shared<AbaCore>(assumptions_, rules_, tracked_, set_with(ax_, phi));
  }

  FormulaSet closure(const FormulaSet& facts, std::span<const RuleHandle> rules,
                     bool* all_fired, std::vector<std::pair<Formula, const RuleInfo*>>* order =
                                          nullptr) const {
    FormulaSet known = set_union(facts, ax_);
    std::vector<char> fired(rules.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < rules.size(); ++i) {
        if (fired[i] || !body_satisfied(*rules[i], known)) continue;
        fired[i] = 1;
        changed = true;
        if (!set_contains(known, rules[i]->head)) {
          known = set_with(known, rules[i]->head);
          if (order) order->emplace_back(rules[i]->head, rules[i].get());
        }
      }
    }
    if (all_fired)
      *all_fired = std::all_of(fired.begin(), fired.end(), [](char f) { return f != 0; });
    return known;
  }

  // Splits a support into assumptions and tracked rules; false if some
  // element is neither.
  bool split(const FormulaSet& s, FormulaSet& delta, std::vector<RuleHandle>& rules) const {
    for (const auto& f : s) {
      if (f.kind() == Kind::RuleLit) {
        auto it = by_text_.find(f.text());
        if (!tracked_ || it == by_text_.end()) return false;
        rules.push_back(it->second);
      } else if (set_contains(assumptions_, f)) {
        delta.push_back(f);
      } else {
        return false;
      }
    }
    return true;
  }

  bool holds(const FormulaSet& s, const Formula& c) const override {
    FormulaSet delta;
    std::vector<RuleHandle> used;
    if (!split(s, delta, used)) return false;
    bool all_fired = true;
    FormulaSet cl = closure(delta, tracked_ ? std::span<const RuleHandle>(used)
                                            : std::span<const RuleHandle>(rules_),
                            &all_fired);
    if (tracked_ && !all_fired) return false;
    return set_contains(cl, c);
  }

  DerivationSet derive_all(const FormulaSet& premises, const FormulaSet&) const override {
    FormulaSet delta_pool;
    std::vector<RuleHandle> rule_pool;
    for (const auto& f : premises) {
      if (set_contains(assumptions_, f)) {
        delta_pool.push_back(f);
      } else if (tracked_ && f.kind() == Kind::RuleLit) {
        auto it = by_text_.find(f.text());
        if (it != by_text_.end()) rule_pool.push_back(it->second);
      }
    }
    const std::size_t k = delta_pool.size() + rule_pool.size();
    if (k > 20) throw CapExceeded("ABA support enumeration over more than 20 elements");
    DerivationSet out;
    const std::uint64_t n = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
      FormulaSet delta = subset_by_mask(delta_pool, mask);
      std::vector<RuleHandle> used;
      for (std::size_t j = 0; j < rule_pool.size(); ++j)
        if (mask >> (delta_pool.size() + j) & 1) used.push_back(rule_pool[j]);
      bool all_fired = true;
      FormulaSet cl = closure(delta, tracked_ ? std::span<const RuleHandle>(used)
                                              : std::span<const RuleHandle>(rules_),
                              &all_fired);
      if (!all_fired && tracked_) continue;
      FormulaSet support = delta;
      for (const auto& r : used) support.push_back(rule_formula(r));
      support = make_set(std::move(support));
      for (const auto& c : cl) out.items.push_back(Derivation{support, c, 0, {}, {}, {}});
    }
    return out;
  }

  std::optional<AbaWitness> derives(const FormulaSet& delta, const Formula& goal) const {
    std::vector<std::pair<Formula, const RuleInfo*>> order;
    FormulaSet known = closure(delta, rules_, nullptr, &order);
    if (!set_contains(known, goal)) return std::nullopt;
    std::map<Formula, const RuleInfo*> first;
    std::map<Formula, std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) {
      first.emplace(order[i].first, order[i].second);
      pos.emplace(order[i].first, i);
    }
    AbaWitness w;
    std::vector<std::pair<std::size_t, std::string>> fired;
    FormulaSet seen;
    std::vector<Formula> stack{goal};
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      if (set_contains(seen, f) || f.kind() == Kind::Top) continue;
      seen = set_with(seen, f);
      if (set_contains(delta, f)) {
        w.assumptions = set_with(w.assumptions, f);
        continue;
      }
      if (set_contains(ax_, f)) {
        fired.emplace_back(0, "-> " + f.text());
        continue;
      }
      const RuleInfo* r = first.at(f);
      fired.emplace_back(pos.at(f) + 1, r->id);
      for (const auto& b : r->body) stack.push_back(b);
    }
    std::sort(fired.begin(), fired.end());
    for (auto& [p, id] : fired) w.rules.push_back(id);
    return w;
  }

  FormulaSet assumptions_;
  std::vector<RuleHandle> rules_;
  bool tracked_;
  FormulaSet ax_;
  std::map<std::string, RuleHandle> by_text_;
};

namespace {
const AbaCore& as_aba(const CoreHandle& c) {
  auto p = dynamic_cast<const AbaCore*>(c.get());
  if (!p) throw ConfigError("not an ABA core: " + c->describe());
  return *p;
}
}  // namespace

CoreHandle aba_core(FormulaSet assumptions, std::vector<RuleHandle> rules, bool tracked) {
  return std::make_shared<AbaCore>(make_set(std::move(assumptions)), std::move(rules), tracked,
                                   FormulaSet{});
}

std::optional<AbaWitness> aba_derives(const CoreHandle& aba, const FormulaSet& assumptions,
                                      const Formula& goal) {
  return as_aba(aba).derives(assumptions, goal);
}

FormulaSet aba_closure(const CoreHandle& aba, const FormulaSet& facts,
                       std::span<const RuleHandle> rules, bool* all_fired) {
  return as_aba(aba).closure(facts, rules, all_fired);
}

const std::vector<RuleHandle>& aba_rules(const CoreHandle& aba) { return as_aba(aba).rules_; }
const FormulaSet& aba_assumptions(const CoreHandle& aba) { return as_aba(aba).assumptions_; }

}  // namespace argonaut
