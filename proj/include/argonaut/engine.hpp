#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argonaut/contrariness.hpp"
#include "argonaut/core.hpp"
#include "argonaut/graph.hpp"
#include "argonaut/kernels.hpp"

namespace argonaut {

enum class AttackRule { DiCoDef, Def, DiDef, DiUcut, Ucut, Native };

std::string to_string(AttackRule r);
std::optional<AttackRule> parse_attack_rule(const std::string& s);

struct Setting {
  CoreHandle core;
  ContrarinessSpec contrariness;
  AttackPointSpec points;
  AttackRule rule = AttackRule::Native;

  Setting with_axiom(const Formula& phi) const;
  Setting with_core(CoreHandle c) const;
};

// Expands a named attack rule into its contrariness / attack-point pair.
// Native keeps the given pair.
Setting make_setting(CoreHandle core, AttackRule rule,
                     ContrarinessSpec native_contrariness = ContrarinessSpec::neg(),
                     AttackPointSpec native_points = {});

struct Argument {
  int id = -1;
  FormulaSet support;
  Formula conclusion;
  std::optional<Value> value;  // set by a priority lifting
  // Aligned with attack_points(support) when priorities are active.
  std::vector<Value> point_values;
  // From rule-based witnesses: weakest-link value and per-point values.
  Value tree_value = 0;
  std::vector<std::pair<Formula, Value>> tree_points;

  std::string text() const;  // "Γ ⊢ γ"
};

struct AttackGraph {
  std::vector<Argument> arguments;
  std::vector<Edge> edges;  // sorted
  FormulaSet queries;
  std::vector<std::string> warnings;
  Digraph digraph;
  bool prioritized = false;
};

struct BuildOptions {
  std::size_t premise_cap = 10;
  kernels::Exec exec = kernels::Exec::Parallel;
};

FormulaSet relevant_conclusions(const Setting& setting, const FormulaSet& premises,
                                const FormulaSet& queries);

std::vector<Argument> build_arguments(const Setting& setting, const FormulaSet& premises,
                                      const FormulaSet& queries, const BuildOptions& opts = {},
                                      std::vector<std::string>* warnings = nullptr,
                                      const RuleValueFn& rule_values = {});

AttackGraph build_graph(const Setting& setting, const FormulaSet& premises,
                        const FormulaSet& queries, const BuildOptions& opts = {});

// Edge computation over an explicit argument list (ids are reassigned in the
// canonical order). With `prioritized`, an attack through point p only counts
// when value(a) <= point value (>= when `inverted`).
AttackGraph connect(const Setting& setting, std::vector<Argument> args, FormulaSet queries,
                    const BuildOptions& opts = {}, bool prioritized = false,
                    bool inverted = false);

bool attacks(const Setting& setting, const Argument& a, const Argument& b);

// Canonical argument order: support lexicographic, then conclusion.
void sort_arguments(std::vector<Argument>& args);

}  // namespace argonaut
