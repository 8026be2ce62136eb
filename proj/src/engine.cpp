#include "argonaut/engine.hpp"

#include <algorithm>
#include <map>

namespace argonaut {

std::string to_string(AttackRule r) {
  switch (r) {
    case AttackRule::DiCoDef: return "dicodef";
    case AttackRule::Def: return "def";
    case AttackRule::DiDef: return "didef";
    case AttackRule::DiUcut: return "diucut";
    case AttackRule::Ucut: return "ucut";
    case AttackRule::Native: return "native";
  }
  return "native";
}

std::optional<AttackRule> parse_attack_rule(const std::string& s) {
  for (auto r : {AttackRule::DiCoDef, AttackRule::Def, AttackRule::DiDef, AttackRule::DiUcut,
                 AttackRule::Ucut, AttackRule::Native})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

Setting Setting::with_axiom(const Formula& phi) const {
  Setting s = *this;
  s.core = core->with_axiom(phi);
  return s;
}

Setting Setting::with_core(CoreHandle c) const {
  Setting s = *this;
  s.core = std::move(c);
  return s;
}

Setting make_setting(CoreHandle core, AttackRule rule, ContrarinessSpec native_contrariness,
                     AttackPointSpec native_points) {
  Setting s{std::move(core), std::move(native_contrariness), native_points, rule};
  const AttackPointSpec id{AttackPointKind::Id};
  const AttackPointSpec conj{AttackPointKind::ConjClosure};
  switch (rule) {
    case AttackRule::DiCoDef: s.contrariness = ContrarinessSpec::neg(); s.points = id; break;
    case AttackRule::Def: s.contrariness = ContrarinessSpec::neg(); s.points = conj; break;
    case AttackRule::DiDef: s.contrariness = ContrarinessSpec::entail_neg(); s.points = id; break;
    case AttackRule::DiUcut: s.contrariness = ContrarinessSpec::equiv_neg(); s.points = id; break;
    case AttackRule::Ucut: s.contrariness = ContrarinessSpec::equiv_neg(); s.points = conj; break;
    case AttackRule::Native: break;
  }
  return s;
}

std::string Argument::text() const { return set_text(support) + " ⊢ " + conclusion.text(); }

void sort_arguments(std::vector<Argument>& args) {
  std::sort(args.begin(), args.end(), [](const Argument& a, const Argument& b) {
    if (a.support != b.support)
      return std::lexicographical_compare(a.support.begin(), a.support.end(), b.support.begin(),
                                          b.support.end());
    return a.conclusion < b.conclusion;
  });
  for (std::size_t i = 0; i < args.size(); ++i) args[i].id = static_cast<int>(i);
}

FormulaSet relevant_conclusions(const Setting& setting, const FormulaSet& premises,
                                const FormulaSet& queries) {
  std::vector<Formula> out(queries.begin(), queries.end());
  if (setting.core->rule_based()) {
    for (const auto& d : setting.core->derive_all(premises, queries).items)
      out.push_back(d.conclusion);
    return make_set(std::move(out));
  }
  for (const auto& p : attack_points(premises, setting.points))
    for (const auto& c : canonical_contraries(p, setting.contrariness)) out.push_back(c);
  return make_set(std::move(out));
}

std::vector<Argument> build_arguments(const Setting& setting, const FormulaSet& premises,
                                      const FormulaSet& queries, const BuildOptions& opts,
                                      std::vector<std::string>* warnings,
                                      const RuleValueFn& rule_values) {
  std::vector<Argument> args;
  if (setting.core->rule_based()) {
    DerivationSet ds = rule_values ? setting.core->derive_all_valued(premises, queries, rule_values)
                                   : setting.core->derive_all(premises, queries);
    if (warnings) warnings->insert(warnings->end(), ds.warnings.begin(), ds.warnings.end());
    for (auto& d : ds.items) {
      Argument a;
      a.support = std::move(d.support);
      a.conclusion = std::move(d.conclusion);
      a.tree_value = d.tree_value;
      a.tree_points = std::move(d.tree_points);
      args.push_back(std::move(a));
    }
    sort_arguments(args);
    return args;
  }
  if (premises.size() > opts.premise_cap)
    throw CapExceeded(std::to_string(premises.size()) + " premises exceed the cap of " +
                      std::to_string(opts.premise_cap));
  FormulaSet concl = relevant_conclusions(setting, premises, queries);
  std::vector<FormulaSet> supports;
  const std::uint64_t total = std::uint64_t{1} << premises.size();
  for (std::uint64_t m = 0; m < total; ++m) supports.push_back(subset_by_mask(premises, m));
  auto table = kernels::candidate_table(*setting.core, supports, concl, opts.exec);
  for (std::size_t s = 0; s < supports.size(); ++s)
    for (std::size_t c = 0; c < table[s].size(); ++c)
      if (table[s][c]) {
        Argument a;
        a.support = supports[s];
        a.conclusion = concl[c];
        args.push_back(std::move(a));
      }
  sort_arguments(args);
  return args;
}

AttackGraph connect(const Setting& setting, std::vector<Argument> args, FormulaSet queries,
                    const BuildOptions& opts, bool prioritized, bool inverted) {
  sort_arguments(args);
  AttackGraph g;
  g.queries = std::move(queries);
  g.prioritized = prioritized;
  const int n = static_cast<int>(args.size());

  std::vector<Formula> cs;
  for (const auto& a : args) cs.push_back(a.conclusion);
  FormulaSet concl = make_set(cs);
  std::vector<std::vector<int>> by_concl(concl.size());
  for (const auto& a : args) {
    auto idx = std::lower_bound(concl.begin(), concl.end(), a.conclusion) - concl.begin();
    by_concl[idx].push_back(a.id);
  }

  std::vector<FormulaSet> pts(n);
  std::vector<Formula> allp;
  for (int i = 0; i < n; ++i) {
    pts[i] = attack_points(args[i].support, setting.points);
    allp.insert(allp.end(), pts[i].begin(), pts[i].end());
    if (prioritized && args[i].point_values.size() != pts[i].size())
      throw ConfigError("argument " + args[i].text() + " lacks values for its attack points");
    if (prioritized && !args[i].value)
      throw ConfigError("argument " + args[i].text() + " has no value");
  }
  FormulaSet points = make_set(allp);
  auto cols = kernels::contrary_columns(concl, points, setting.contrariness, opts.exec);

  std::vector<std::vector<int>> attackers_of(n);
  kernels::for_each_index(static_cast<std::size_t>(n), opts.exec, [&](std::size_t b) {
    Bitset hit(n);
    for (std::size_t k = 0; k < pts[b].size(); ++k) {
      auto p = std::lower_bound(points.begin(), points.end(), pts[b][k]) - points.begin();
      const Bitset& col = cols[p];
      for (auto c = col.find_first(); c != Bitset::npos; c = col.find_next(c))
        for (int a : by_concl[c]) {
          if (prioritized) {
            Value va = *args[a].value;
            Value vp = args[b].point_values[k];
            if (inverted ? va < vp : va > vp) continue;
          }
          hit.set(a);
        }
    }
    for (auto a = hit.find_first(); a != Bitset::npos; a = hit.find_next(a))
      attackers_of[b].push_back(static_cast<int>(a));
  });
  for (int b = 0; b < n; ++b)
    for (int a : attackers_of[b]) g.edges.emplace_back(a, b);
  std::sort(g.edges.begin(), g.edges.end());
  g.digraph = Digraph::from_edges(n, g.edges);
  g.arguments = std::move(args);
  return g;
}

AttackGraph build_graph(const Setting& setting, const FormulaSet& premises,
                        const FormulaSet& queries, const BuildOptions& opts) {
  std::vector<std::string> warnings;
  auto args = build_arguments(setting, premises, queries, opts, &warnings);
  AttackGraph g = connect(setting, std::move(args), queries, opts);
  g.warnings = std::move(warnings);
  return g;
}

bool attacks(const Setting& setting, const Argument& a, const Argument& b) {
  for (const auto& p : attack_points(b.support, setting.points))
    if (is_contrary(a.conclusion, p, setting.contrariness)) return true;
  return false;
}

Digraph Digraph::from_edges(int n, const std::vector<Edge>& edges) {
  Digraph g;
  g.n = n;
  g.attackers.assign(n, Bitset(n));
  g.targets.assign(n, Bitset(n));
  for (auto [a, b] : edges) {
    g.attackers[b].set(a);
    g.targets[a].set(b);
  }
  return g;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> out;
  for (int a = 0; a < n; ++a)
    for (auto b = targets[a].find_first(); b != Bitset::npos; b = targets[a].find_next(b))
      out.emplace_back(a, static_cast<int>(b));
  return out;
}

}  // namespace argonaut
