#include <gtest/gtest.h>

#include "argonaut/cl.hpp"
#include "argonaut/generator.hpp"
#include "oracles.hpp"

using namespace argonaut;

namespace {

Formula p = Formula::atom("p");
Formula q = Formula::atom("q");

const std::vector<std::string> kAtoms{"p", "q", "r", "s"};

KBGenerator make_gen() {
  GenConfig cfg;
  cfg.atoms = kAtoms;
  cfg.seed = default_seed();
  cfg.depth = 3;
  return KBGenerator(cfg);
}

}  // namespace

TEST(Cl, ModusPonens) {
  EXPECT_TRUE(cl_entails(FormulaSet{p, Formula::implies(p, q)}, q));
  EXPECT_FALSE(cl_entails(FormulaSet{Formula::implies(p, q)}, q));
}

TEST(Cl, ExplosionAndTautologies) {
  EXPECT_TRUE(cl_entails(FormulaSet{p, Formula::neg(p)}, q));
  EXPECT_FALSE(cl_satisfiable(FormulaSet{p, Formula::neg(p)}));
  EXPECT_TRUE(cl_satisfiable(FormulaSet{}));
  EXPECT_TRUE(cl_tautology(Formula::disj(p, Formula::neg(p))));
  EXPECT_TRUE(cl_entails(FormulaSet{}, Formula::top()));
  EXPECT_FALSE(cl_entails(FormulaSet{}, Formula::bot()));
}

TEST(Cl, EntailmentMatchesTruthTables) {
  KBGenerator gen = make_gen();
  for (int t = 0; t < 400; ++t) {
    FormulaSet gamma = gen.premises();
    Formula phi = gen.formula(kAtoms, 2);
    oracle::TT models = oracle::kAll;
    for (const auto& g : gamma) models &= oracle::eval(g, kAtoms);
    const bool expect = (models & ~oracle::eval(phi, kAtoms) & oracle::kAll) == 0;
    EXPECT_EQ(cl_entails(gamma, phi), expect) << set_text(gamma) << " |- " << phi.text();
    EXPECT_EQ(cl_satisfiable(gamma), models != 0) << set_text(gamma);
  }
}

TEST(Cl, EquivalenceIsMutualEntailment) {
  KBGenerator gen = make_gen();
  for (int t = 0; t < 200; ++t) {
    Formula a = gen.formula(kAtoms, 2), b = gen.formula(kAtoms, 2);
    EXPECT_EQ(cl_equivalent(a, b), oracle::eval(a, kAtoms) == oracle::eval(b, kAtoms));
  }
  EXPECT_TRUE(cl_equivalent(Formula::neg(Formula::conj(p, q)),
                            Formula::disj(Formula::neg(p), Formula::neg(q))));
}

TEST(Cl, WideValuationSpaces) {
  // Eight atoms span several 64-bit words.
  std::vector<Formula> lits;
  for (int i = 0; i < 8; ++i) lits.push_back(Formula::atom("x" + std::to_string(i)));
  FormulaSet all = make_set(lits);
  EXPECT_TRUE(cl_entails(all, conj_all(all)));
  EXPECT_FALSE(cl_entails(set_without(all, lits[7]), lits[7]));
  ValuationSpace vs = ValuationSpace::over(all);
  EXPECT_EQ(vs.num_vars(), 8u);
  EXPECT_EQ(vs.words(), 4u);
}

TEST(Cl, OpaqueRuleLiterals) {
  RuleHandle rule = make_rule("s", RuleKind::Strict, {p}, q);
  // A rule literal is a fresh variable, so it does not fire.
  EXPECT_FALSE(cl_entails(FormulaSet{p, rule_formula(rule)}, q));
  EXPECT_TRUE(cl_entails(FormulaSet{rule_formula(rule)}, rule_formula(rule)));
}

TEST(Cl, AtomCapIsEnforced) {
  std::vector<Formula> lits;
  for (std::size_t i = 0; i <= kClAtomCap; ++i) lits.push_back(Formula::atom("y" + std::to_string(i)));
  EXPECT_THROW(cl_entails(make_set(lits), lits[0]), CapExceeded);
}
