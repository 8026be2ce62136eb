#include <gtest/gtest.h>

#include "argonaut/cl.hpp"
#include "argonaut/core.hpp"
#include "argonaut/generator.hpp"
#include "argonaut/harness.hpp"
#include "oracles.hpp"

using namespace argonaut;

namespace {

Formula p = Formula::atom("p");
Formula q = Formula::atom("q");
Formula a = Formula::atom("a");
Formula b = Formula::atom("b");
Formula neg(const Formula& f) { return Formula::neg(f); }

const std::vector<std::string> kAtoms{"p", "q", "r"};

}  // namespace

TEST(ClCores, Holds) {
  EXPECT_TRUE(cl_core()->holds(make_set({p, Formula::implies(p, q)}), q));
  EXPECT_FALSE(cl_top_core()->holds({Formula::conj(p, neg(p))}, q));
  EXPECT_TRUE(cl_top_core()->holds({p}, Formula::disj(p, q)));
}

TEST(McsCores, SmallExample) {
  const FormulaSet s = make_set({p, neg(p), q});
  EXPECT_EQ(maximal_consistent_subsets(s), oracle::mcs_by_truth_tables(s, kAtoms));
  EXPECT_TRUE(mcs_core(true)->holds(s, q));
  EXPECT_FALSE(mcs_core(true)->holds(s, p));
  EXPECT_TRUE(mcs_core(false)->holds(s, p));
}

TEST(McsCores, MatchTruthTableOracle) {
  GenConfig cfg;
  cfg.atoms = kAtoms;
  cfg.max_premises = 5;
  cfg.seed = default_seed();
  KBGenerator gen(cfg);
  for (int t = 0; t < 200; ++t) {
    FormulaSet s = gen.premises();
    auto expect = oracle::mcs_by_truth_tables(s, kAtoms);
    ASSERT_EQ(maximal_consistent_subsets(s), expect) << set_text(s);
    Formula phi = gen.formula(kAtoms, 2);
    const oracle::TT tphi = oracle::eval(phi, kAtoms);
    bool all = true, any = false;
    for (const auto& m : expect) {
      oracle::TT mod = oracle::kAll;
      for (const auto& f : m) mod &= oracle::eval(f, kAtoms);
      const bool e = (mod & ~tphi & oracle::kAll) == 0;
      all = all && e;
      any = any || e;
    }
    EXPECT_EQ(mcs_core(true)->holds(s, phi), all) << set_text(s) << " " << phi.text();
    EXPECT_EQ(mcs_core(false)->holds(s, phi), any) << set_text(s) << " " << phi.text();
  }
}

TEST(McsCores, OutputIsAnAntichainOfConsistentSets) {
  KBGenerator gen(GenConfig{.atoms = kAtoms, .max_premises = 6, .seed = default_seed()});
  for (int t = 0; t < 100; ++t) {
    FormulaSet s = gen.premises();
    auto ms = maximal_consistent_subsets(s);
    for (const auto& m : ms) {
      EXPECT_TRUE(cl_satisfiable(m));
      for (const auto& o : ms)
        if (o != m) EXPECT_FALSE(set_subset(m, o));
    }
  }
}

TEST(Aba, ChainsRules) {
  auto r1 = make_rule("r1", RuleKind::Strict, {a}, p);
  auto r2 = make_rule("r2", RuleKind::Strict, {p, b}, q);
  CoreHandle aba = aba_core(make_set({a, b}), {r1, r2}, false);
  auto w = aba_derives(aba, make_set({a, b}), q);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rules.size(), 2u);
  EXPECT_EQ(w->assumptions, make_set({a, b}));
  EXPECT_FALSE(aba_derives(aba, {a}, q));
}

TEST(Aba, AxiomAddsPremiseFreeRule) {
  auto r1 = make_rule("r1", RuleKind::Strict, {a}, p);
  auto r2 = make_rule("r2", RuleKind::Strict, {p, b}, q);
  CoreHandle aba = aba_core(make_set({a, b}), {r1, r2}, false);
  CoreHandle ext = extend_with_axiom(aba, q);
  auto w = aba_derives(ext, {}, q);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->assumptions.empty());
  EXPECT_EQ(w->rules, (std::vector<std::string>{"-> q"}));
  EXPECT_EQ(aba_rules(ext).size(), 2u);
  EXPECT_EQ(ext->axioms(), make_set({q}));
  // Idempotent.
  EXPECT_EQ(extend_with_axiom(ext, q)->axioms(), make_set({q}));
}

TEST(Aspic, DefeasibleFactSupport) {
  auto n0 = make_rule("n0", RuleKind::Defeasible, {Formula::top()}, p);
  AspicTheory th;
  th.defeasible = {n0};
  CoreHandle c = aspic_core(th);
  const FormulaSet want = make_set({rule_formula(n0), name_formula(n0), p});
  EXPECT_TRUE(c->holds(want, p));
  // Strict classical steps add nothing to the support in the ddagger mode.
  EXPECT_TRUE(c->holds(want, Formula::disj(p, q)));
  auto ds = c->derive_all(aspic_premises(c), {p});
  bool found = false;
  for (const auto& d : ds.items) found |= d.conclusion == p && d.support == want;
  EXPECT_TRUE(found);
}

TEST(Aspic, NoRulesNoArguments) {
  CoreHandle c = aspic_core(AspicTheory{});
  auto ds = c->derive_all(aspic_premises(c), {p});
  for (const auto& d : ds.items) EXPECT_NE(d.conclusion, p);
}

TEST(AxiomExtension, OneStepComposition) {
  EXPECT_TRUE(cl_core()->with_axiom(p)->holds({}, p));
  CoreHandle star = restrict_cl_consistent(cl_core());
  EXPECT_TRUE(star->with_axiom(p)->holds({q}, Formula::conj(p, q)));
  EXPECT_FALSE(star->with_axiom(p)->holds({neg(p)}, Formula::conj(p, neg(p))));
}

TEST(AxiomExtension, Idempotent) {
  CoreHandle once = extend_with_axiom(cl_top_core(), p);
  CoreHandle twice = extend_with_axiom(once, p);
  EXPECT_EQ(once->describe(), twice->describe());
  EXPECT_EQ(once->axioms(), twice->axioms());
}

TEST(Restrictions, EmptyAttackersRejectsRefutableSupports) {
  CoreHandle c = restrict_empty_attackers(cl_core(), ContrarinessSpec::neg(),
                                          {AttackPointKind::ConjClosure});
  EXPECT_FALSE(c->holds(make_set({p, neg(p)}), p));
  EXPECT_TRUE(c->holds({p}, p));
}

TEST(Restrictions, ConsistentRejectsContradictorySupports) {
  CoreHandle c = restrict_consistent(cl_core(), ContrarinessSpec::neg());
  EXPECT_FALSE(c->holds(make_set({p, neg(p)}), p));
  EXPECT_TRUE(c->holds({p}, p));
}

TEST(Restrictions, DirectInconsistency) {
  const FormulaSet s = make_set({Formula::implies(p, q), p, neg(q)});
  EXPECT_TRUE(directly_inconsistent(*cl_core(), ContrarinessSpec::neg(), s));
  EXPECT_FALSE(af_consistent(*cl_core(), ContrarinessSpec::neg(), s));
  oracle::TT mod = oracle::kAll;
  for (const auto& f : s) mod &= oracle::eval(f, kAtoms);
  EXPECT_EQ(mod, 0);
  EXPECT_TRUE(af_consistent(*cl_core(), ContrarinessSpec::neg(), make_set({p, q})));
}

TEST(Cut, ClassicalCoreSatisfiesCut) {
  FormulaSet u = make_set({p, q, neg(p), neg(q), Formula::conj(p, q)});
  EXPECT_EQ(check_cut(cl_core(), u, 2).verdict, Verdict::Pass);
}

TEST(Cut, ConsistentRestrictionBreaksCut) {
  FormulaSet u = make_set({p, q, neg(p), neg(q), Formula::conj(p, q)});
  PropertyReport r = check_cut(restrict_cl_consistent(cl_core()), u, 2);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_TRUE(r.counterexample);
}

TEST(Cut, AbaSatisfiesCut) {
  auto r1 = make_rule("r1", RuleKind::Strict, {a}, p);
  auto r2 = make_rule("r2", RuleKind::Strict, {p, b}, q);
  CoreHandle aba = aba_core(make_set({a, b}), {r1, r2}, false);
  EXPECT_EQ(check_cut(aba, make_set({a, b, p, q}), 2).verdict, Verdict::Pass);
}
