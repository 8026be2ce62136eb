#include "argonaut/generator.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace argonaut {

std::uint64_t default_seed() {
  const char* env = std::getenv("ARGONAUT_SEED");
  if (!env || !*env) return kDefaultSeed;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc() || *ptr != '\0') return kDefaultSeed;
  return v;
}

Formula KBGenerator::literal(const std::vector<std::string>& atoms) {
  Formula a = Formula::atom(atoms[rng_.below(atoms.size())]);
  return rng_.chance(1, 2) ? a : Formula::neg(a);
}

Formula KBGenerator::formula(const std::vector<std::string>& atoms, int depth) {
  if (depth <= 0) return literal(atoms);
  std::size_t roll = rng_.below(20);
  if (roll < 8) return literal(atoms);
  if (roll < 11) return Formula::neg(formula(atoms, depth - 1));
  Formula l = formula(atoms, depth - 1);
  Formula r = formula(atoms, depth - 1);
  switch (roll % 3) {
    case 0: return Formula::conj(l, r);
    case 1: return Formula::disj(l, r);
    default: return Formula::implies(l, r);
  }
}

FormulaSet KBGenerator::premises(const std::vector<std::string>& atoms) {
  std::size_t n = rng_.between(cfg_.min_premises, cfg_.max_premises);
  std::vector<Formula> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(formula(atoms, cfg_.depth));
  return make_set(std::move(out));
}

AbaInstance KBGenerator::aba(const std::vector<std::string>& atoms, const std::string& prefix) {
  AbaInstance inst;
  std::vector<Formula> assumptions, sentences;
  for (const auto& a : atoms) {
    Formula f = Formula::atom(a);
    if (assumptions.empty() || rng_.chance(1, 2)) {
      assumptions.push_back(f);
      sentences.push_back(Formula::neg(f));
      inst.contraries[f] = {Formula::neg(f)};
    } else {
      sentences.push_back(f);
    }
  }
  inst.assumptions = make_set(assumptions);
  std::vector<Formula> body_pool = assumptions;
  body_pool.insert(body_pool.end(), sentences.begin(), sentences.end());
  std::size_t nr = rng_.between(cfg_.min_rules, cfg_.max_rules);
  for (std::size_t i = 0; i < nr; ++i) {
    Formula head = sentences[rng_.below(sentences.size())];
    std::vector<Formula> body;
    std::size_t nb = rng_.below(3);
    for (std::size_t k = 0; k < nb; ++k) {
      Formula b = body_pool[rng_.below(body_pool.size())];
      if (b != head) body.push_back(b);
    }
    inst.rules.push_back(
        make_rule(prefix + std::to_string(i), RuleKind::Strict, make_set(body), head));
  }
  return inst;
}

AspicTheory KBGenerator::aspic(const std::vector<std::string>& atoms, const std::string& prefix) {
  AspicTheory th;
  std::size_t nf = rng_.below(3);
  std::vector<Formula> facts;
  for (std::size_t i = 0; i < nf; ++i) facts.push_back(literal(atoms));
  th.facts = make_set(facts);
  for (std::size_t i = 0; i < th.facts.size(); ++i)
    th.fact_values.push_back(static_cast<Value>(rng_.below(cfg_.max_priority + 1)));
  std::size_t nr = rng_.between(cfg_.min_rules, cfg_.max_rules);
  for (std::size_t i = 0; i < nr; ++i) {
    std::vector<Formula> body;
    std::size_t nb = rng_.below(3);
    for (std::size_t k = 0; k < nb; ++k) body.push_back(literal(atoms));
    Formula head = literal(atoms);
    if (rng_.chance(1, 4)) {
      th.strict.push_back(make_rule(prefix + "s" + std::to_string(i), RuleKind::Strict,
                                    make_set(body), head));
    } else {
      Value v = static_cast<Value>(rng_.below(cfg_.max_priority + 1));
      th.defeasible.push_back(make_rule(prefix + "d" + std::to_string(i), RuleKind::Defeasible,
                                        make_set(body), head, v));
    }
  }
  return th;
}

std::map<Formula, Value> KBGenerator::priorities(const FormulaSet& fs) {
  std::map<Formula, Value> out;
  for (const auto& f : fs) out[f] = static_cast<Value>(rng_.below(cfg_.max_priority + 1));
  return out;
}

Digraph KBGenerator::graph(int n, unsigned edge_percent) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      unsigned pct = a == b ? edge_percent / 4 : edge_percent;
      if (rng_.chance(pct, 100)) edges.emplace_back(a, b);
    }
  return Digraph::from_edges(n, edges);
}

}  // namespace argonaut
