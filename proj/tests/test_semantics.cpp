#include <gtest/gtest.h>

#include "argonaut/generator.hpp"
#include "argonaut/kb.hpp"
#include "argonaut/semantics.hpp"
#include "oracles.hpp"

using namespace argonaut;

namespace {

Bitset bits(int n, std::initializer_list<int> ids) {
  Bitset b(n);
  for (int i : ids) b.set(i);
  return b;
}

std::vector<Bitset> members(const std::vector<Extension>& es) {
  std::vector<Bitset> out;
  for (const auto& e : es) out.push_back(e.members);
  std::sort(out.begin(), out.end());
  return out;
}

// a=0, b=1, c=2
const Digraph kChain = Digraph::from_edges(3, {{2, 1}, {1, 0}});
const Digraph kTwoCycle = Digraph::from_edges(2, {{0, 1}, {1, 0}});
const Digraph kEdgeless = Digraph::from_edges(3, {});

std::vector<Bitset> all_subsets(int n) {
  std::vector<Bitset> out;
  for (unsigned m = 0; m < (1u << n); ++m) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) b.set(i);
    out.push_back(b);
  }
  return out;
}

bool admissible(const Digraph& g, const Bitset& s) {
  if (!conflict_free(g, s)) return false;
  for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a))
    if (!defends(g, s, static_cast<int>(a))) return false;
  return true;
}

}  // namespace

TEST(ConflictFree, Basics) {
  EXPECT_TRUE(conflict_free(kEdgeless, bits(3, {0, 1, 2})));
  EXPECT_FALSE(conflict_free(Digraph::from_edges(2, {{0, 1}}), bits(2, {0, 1})));
  EXPECT_FALSE(conflict_free(Digraph::from_edges(1, {{0, 0}}), bits(1, {0})));
}

TEST(Defends, Basics) {
  EXPECT_TRUE(defends(kEdgeless, bits(3, {}), 0));
  EXPECT_TRUE(defends(kChain, bits(3, {2}), 0));
  EXPECT_FALSE(defends(Digraph::from_edges(2, {{1, 0}}), bits(2, {}), 0));
}

TEST(DefendedClosure, Basics) {
  EXPECT_EQ(defended_closure(kEdgeless, bits(3, {})), bits(3, {0, 1, 2}));
  EXPECT_EQ(defended_closure(Digraph::from_edges(2, {{1, 0}}), bits(2, {})), bits(2, {1}));
  EXPECT_EQ(defended_closure(kChain, bits(3, {2})), bits(3, {0, 2}));
}

TEST(Grounded, Basics) {
  EXPECT_EQ(grounded(kEdgeless).members, bits(3, {0, 1, 2}));
  EXPECT_EQ(grounded(kTwoCycle).members, bits(2, {}));
  EXPECT_EQ(grounded(kChain).members, bits(3, {0, 2}));
}

TEST(Families, TwoCycle) {
  EXPECT_EQ(members(complete_all(kTwoCycle)),
            (std::vector<Bitset>{bits(2, {}), bits(2, {0}), bits(2, {1})}));
  EXPECT_EQ(members(preferred_all(kTwoCycle)), (std::vector<Bitset>{bits(2, {0}), bits(2, {1})}));
  EXPECT_EQ(members(stable_all(kTwoCycle)), (std::vector<Bitset>{bits(2, {0}), bits(2, {1})}));
}

TEST(Families, Edgeless) {
  for (auto sem : {Semantics::Cmp, Semantics::Grd, Semantics::Prf, Semantics::Stb}) {
    auto es = extensions(kEdgeless, sem);
    ASSERT_EQ(es.size(), 1u) << to_string(sem);
    EXPECT_EQ(es[0].members, bits(3, {0, 1, 2}));
    EXPECT_EQ(es[0].sem, sem);
  }
}

TEST(Families, OddCycleHasNoStableExtension) {
  Digraph g = Digraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(stable_all(g).empty());
  EXPECT_EQ(members(preferred_all(g)), (std::vector<Bitset>{bits(3, {})}));
}

// Complete families against 3^n labelling enumeration; preferred and stable
// against their definitions over all subsets.
TEST(Families, MatchBruteForce) {
  KBGenerator gen(GenConfig{.seed = default_seed()});
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + static_cast<int>(gen.rng().below(8));
    Digraph g = gen.graph(n, 10 + static_cast<unsigned>(gen.rng().below(40)));
    auto cmp = oracle::complete_by_labellings(g);
    std::vector<Bitset> adm, stb;
    for (const auto& s : all_subsets(n)) {
      if (!admissible(g, s)) continue;
      adm.push_back(s);
      Bitset covered = s;
      for (auto a = s.find_first(); a != Bitset::npos; a = s.find_next(a)) covered |= g.targets[a];
      if (covered.all()) stb.push_back(s);
    }
    std::vector<Bitset> prf;
    for (const auto& s : adm) {
      bool maximal = true;
      for (const auto& o : adm)
        if (s.is_proper_subset_of(o)) maximal = false;
      if (maximal) prf.push_back(s);
    }
    std::sort(prf.begin(), prf.end());
    std::sort(stb.begin(), stb.end());
    // Maximal admissible and maximal complete coincide.
    std::vector<Bitset> max_cmp;
    for (const auto& s : cmp) {
      bool maximal = true;
      for (const auto& o : cmp)
        if (s.is_proper_subset_of(o)) maximal = false;
      if (maximal) max_cmp.push_back(s);
    }
    std::sort(max_cmp.begin(), max_cmp.end());
    ASSERT_EQ(max_cmp, prf) << "graph " << t;
    for (auto backend : {Backend::Enumerate, Backend::Labelling}) {
      for (bool twins : {false, true}) {
        SemanticsOptions o;
        o.backend = backend;
        o.compress_twins = twins;
        ASSERT_EQ(members(complete_all(g, o)), cmp) << "graph " << t;
        ASSERT_EQ(members(preferred_all(g, o)), prf) << "graph " << t;
        ASSERT_EQ(members(stable_all(g, o)), stb) << "graph " << t;
      }
    }
    Bitset meet(n);
    meet.set();
    for (const auto& c : cmp) meet &= c;
    EXPECT_EQ(grounded(g).members, meet) << "graph " << t;
    auto all_adm = members(admissible_all(g));
    EXPECT_EQ(all_adm, adm);
  }
}

TEST(TwinQuotient, ClassesShareAttackers) {
  // 0 and 1 are both attacked by 2 only.
  Digraph g = Digraph::from_edges(3, {{2, 0}, {2, 1}});
  TwinQuotient q = twin_quotient(g);
  EXPECT_EQ(q.graph.n, 2);
  EXPECT_EQ(q.cls[0], q.cls[1]);
  EXPECT_NE(q.cls[0], q.cls[2]);
}

TEST(TwinQuotient, PreferredOnLargeStructuredGraph) {
  // Ten copies of a two-cycle: 1024 preferred extensions.
  std::vector<Edge> e;
  for (int i = 0; i < 10; ++i) {
    e.emplace_back(2 * i, 2 * i + 1);
    e.emplace_back(2 * i + 1, 2 * i);
  }
  Digraph g = Digraph::from_edges(20, e);
  SemanticsOptions o;
  o.backend = Backend::Labelling;
  EXPECT_EQ(preferred_all(g, o).size(), 1024u);
  EXPECT_EQ(stable_all(g, o).size(), 1024u);
}

TEST(Entailment, SingleUnattackedArgument) {
  Setting s = make_setting(cl_top_core(), AttackRule::DiDef);
  EXPECT_TRUE(skeptical_entails(s, {Formula::atom("p")}, Formula::atom("p"), Semantics::Grd));
  EXPECT_TRUE(skeptical_entails(make_setting(cl_core(), AttackRule::DiCoDef), {}, Formula::top(),
                                Semantics::Prf));
}

TEST(Entailment, MakinsonPreferred) {
  LoadedKB kb = load_kb_file(std::string(ARGONAUT_DATA_DIR) + "/makinson.kb");
  const Formula p = Formula::atom("p");
  const Formula pq = parse_formula("p | q");
  AttackGraph g = build_graph(kb.setting, kb.premises, {p, pq});
  Entailment e = skeptical_entailment(g, p, Semantics::Prf);
  EXPECT_TRUE(e.entailed);
  ASSERT_EQ(e.extensions.size(), 1u);
  EXPECT_TRUE(e.extensions[0].members.intersects(concluding(g, pq)));
  EXPECT_FALSE(skeptical_entails(kb.setting.with_axiom(pq), kb.premises, p, Semantics::Prf));
}

TEST(Entailment, CompleteAgreesWithGrounded) {
  KBGenerator gen(GenConfig{.seed = default_seed()});
  Setting s = make_setting(cl_core(), AttackRule::DiCoDef);
  for (int t = 0; t < 40; ++t) {
    FormulaSet prem = gen.premises();
    Formula phi = gen.formula({"p", "q", "r"}, 1);
    AttackGraph g = build_graph(s, prem, {phi});
    EXPECT_EQ(skeptical_entails(g, phi, Semantics::Cmp), skeptical_entails(g, phi, Semantics::Grd));
  }
}

TEST(Entailment, VacuousWhenNoStableExtension) {
  // a attacks itself: no stable extension.
  AttackGraph g;
  g.arguments.resize(1);
  g.arguments[0].id = 0;
  g.arguments[0].conclusion = Formula::atom("p");
  g.edges = {{0, 0}};
  g.digraph = Digraph::from_edges(1, g.edges);
  Entailment e = skeptical_entailment(g, Formula::atom("p"), Semantics::Stb);
  EXPECT_TRUE(e.vacuous);
  EXPECT_TRUE(e.entailed);
}

TEST(Semantics, NamesRoundTrip) {
  for (auto s : {Semantics::Adm, Semantics::Cmp, Semantics::Grd, Semantics::Prf, Semantics::Stb})
    EXPECT_EQ(parse_semantics(to_string(s)), s);
}

TEST(Semantics, EnumerationCap) {
  SemanticsOptions o;
  o.backend = Backend::Enumerate;
  o.enumerate_cap = 2;
  o.compress_twins = false;
  EXPECT_THROW(complete_all(kChain, o), CapExceeded);
}
