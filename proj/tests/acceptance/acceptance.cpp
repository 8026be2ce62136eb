// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "argonaut/cli.hpp"
#include "argonaut/cl.hpp"
#include "argonaut/export.hpp"
#include "argonaut/generator.hpp"
#include "argonaut/harness.hpp"
#include "argonaut/kb.hpp"
#include "argonaut/priorities.hpp"
#include "oracles.hpp"

using namespace argonaut;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;
std::vector<std::string> only;  // criterion ids from argv; empty runs all

void report(const std::string& id, const std::string& title, const std::function<Outcome()>& run,
            double budget_s) {
  if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) return;
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                std::to_string(budget_s) + "s";
  }
  if (!o.pass) ++failures;
  std::ostringstream t;
  t.precision(3);
  t << std::fixed << secs;
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << t.str()
            << "s)" << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
}

void info(const std::string& id, const std::string& title, const std::function<Outcome()>& run) {
  if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) return;
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.detail = std::string("exception: ") + e.what();
  }
  std::cout << "INFO [" << id << "] " << title << ": " << o.detail << std::endl;
}

std::string data(const std::string& name) { return std::string(ARGONAUT_DATA_DIR) + "/" + name; }

bool entails(const LoadedKB& kb, const Setting& s, const std::string& q, Semantics sem) {
  return skeptical_entails(s, kb.premises, parse_formula(q), sem);
}

std::string yn(bool b) { return b ? "true" : "false"; }

std::uint64_t seed() { return default_seed(); }

Outcome summarize(const std::vector<PropertyReport>& rs, bool want_pass) {
  Outcome o{true, ""};
  for (const auto& r : rs) {
    bool ok = want_pass ? r.verdict == Verdict::Pass : r.verdict == Verdict::Fail;
    if (!ok) o.pass = false;
    std::string label = r.notes.empty() ? std::string() : " " + r.notes.back();
    o.detail += (o.detail.empty() ? "" : "; ") + r.property + label + ": " +
                to_string(r.verdict) + " (" + std::to_string(r.failures) + "/" +
                std::to_string(r.trials) + ")";
    if (!ok && r.counterexample)
      o.detail += " [" + r.counterexample->setting + " " +
                  (r.counterexample->premise_sets.empty()
                       ? std::string()
                       : set_text(r.counterexample->premise_sets[0])) +
                  " " + r.counterexample->detail + "]";
  }
  return o;
}

// ---- criteria -----------------------------------------------------------

Outcome makinson() {
  LoadedKB kb = load_kb_file(data("makinson.kb"));
  bool p = entails(kb, kb.setting, "p", Semantics::Prf);
  bool pq = entails(kb, kb.setting, "p | q", Semantics::Prf);
  bool p_plus = entails(kb, kb.setting.with_axiom(parse_formula("p | q")), "p", Semantics::Prf);
  return {p && pq && !p_plus,
          "prf p=" + yn(p) + ", prf p|q=" + yn(pq) + ", prf p after +(p|q)=" + yn(p_plus)};
}

Outcome consistent_grounded() {
  LoadedKB kb = load_kb_file(data("makinson_star.kb"));
  bool p = entails(kb, kb.setting, "p", Semantics::Grd);
  bool p_plus = entails(kb, kb.setting.with_axiom(parse_formula("p | q")), "p", Semantics::Grd);
  return {p && !p_plus, "grd p=" + yn(p) + ", grd p after +(p|q)=" + yn(p_plus)};
}

Outcome stb_eq_prf() {
  auto r = fuzz_stb_eq_prf_con(200, seed(), {}, con_corpus_config(seed()));
  r.notes.push_back("200 KBs");
  return summarize({r}, true);
}

Outcome grd_eq_mcs() {
  auto r = fuzz_grd_eq_mcs(200, seed(), {}, con_corpus_config(seed()));
  r.notes.push_back("200 KBs");
  return summarize({r}, true);
}

GenConfig small_sides() {
  GenConfig g;
  g.min_premises = 1;
  g.max_premises = 3;
  g.depth = 2;
  return g;
}

Outcome non_interference() {
  const std::vector<Semantics> sems{Semantics::Grd, Semantics::Prf};
  std::vector<PropertyReport> ok;
  for (Family f : {Family::CLTopDiDef, Family::MCSCapDiDef, Family::TrackedABA})
    ok.push_back(fuzz_non_interference(f, sems, 200, seed(), {}, small_sides()));
  Outcome a = summarize(ok, true);
  PropertyReport control =
      fuzz_non_interference(Family::CLDef, sems, 200, seed(), {}, small_sides());
  Outcome b = summarize({control}, false);
  return {a.pass && b.pass, a.detail + "; control " + b.detail};
}

Outcome non_interference_dicodef() {
  PropertyReport r = fuzz_non_interference(Family::CLDiCoDef, {Semantics::Grd, Semantics::Prf},
                                           200, seed(), {}, small_sides());
  Outcome o = summarize({r}, false);
  if (r.counterexample) o.detail += "\n" + r.text();
  return o;
}

Outcome cumulativity() {
  std::vector<PropertyReport> rs;
  GenConfig g;
  g.min_premises = 1;
  g.max_premises = 3;
  for (Family f : {Family::TrackedABA, Family::UntrackedABA, Family::CLDiCoDef,
                   Family::AspicDagger}) {
    PropertyReport r = fuzz_cumulativity(f, 100, seed(), {}, g);
    r.notes.push_back(to_string(f));
    rs.push_back(r);
  }
  return summarize(rs, true);
}

Outcome backends() {
  KBGenerator gen(GenConfig{.seed = seed()});
  SemanticsOptions enumerate{Backend::Enumerate, 30, false, kernels::Exec::Parallel, false};
  SemanticsOptions search{Backend::Labelling, 30, false, kernels::Exec::Parallel, false};
  SemanticsOptions twins{Backend::Labelling, 30, false, kernels::Exec::Parallel, true};
  for (int t = 0; t < 500; ++t) {
    int n = 1 + static_cast<int>(gen.rng().below(18));
    unsigned pct = 5 + static_cast<unsigned>(gen.rng().below(30));
    Digraph g = gen.graph(n, pct);
    for (Semantics s : {Semantics::Cmp, Semantics::Prf, Semantics::Stb}) {
      auto a = extensions(g, s, enumerate);
      auto b = extensions(g, s, search);
      auto c = extensions(g, s, twins);
      if (a != b || a != c)
        return {false, "graph " + std::to_string(t) + " (" + std::to_string(n) + " nodes) differs on " +
                           to_string(s)};
    }
    auto cmp = extensions(g, Semantics::Cmp, enumerate);
    Extension gr = grounded(g);
    for (const auto& e : cmp)
      if (!gr.members.is_subset_of(e.members))
        return {false, "grounded is not the least complete extension on graph " + std::to_string(t)};
  }
  return {true, "500 graphs, cmp/prf/stb identical across enumeration, labelling and twin quotient"};
}

Outcome reduction_oracle() {
  GenConfig cfg;
  cfg.atoms = {"p", "q", "r", "s"};
  cfg.min_premises = 1;
  cfg.max_premises = 4;
  cfg.depth = 2;
  cfg.seed = seed();
  KBGenerator gen(cfg);
  struct Variant {
    Setting setting;
    oracle::ClSetting oracle;
  };
  const std::vector<Variant> variants{
      {make_setting(cl_core(), AttackRule::DiCoDef), {false, oracle::Contrary::Neg}},
      {make_setting(cl_core(), AttackRule::DiDef), {false, oracle::Contrary::EntailNeg}},
      {make_setting(cl_core(), AttackRule::DiUcut), {false, oracle::Contrary::EquivNeg}},
      {make_setting(cl_top_core(), AttackRule::DiDef), {true, oracle::Contrary::EntailNeg}},
  };
  for (int t = 0; t < 100; ++t) {
    FormulaSet premises = gen.premises();
    const Variant& v = variants[t % variants.size()];
    std::vector<Formula> qs;
    for (const auto& a : cfg.atoms) {
      qs.push_back(Formula::atom(a));
      qs.push_back(Formula::neg(Formula::atom(a)));
    }
    FormulaSet queries = set_union(make_set(qs), premises);
    auto expect = oracle::bounded_answers(premises, cfg.atoms, v.oracle, queries);
    auto grd = consequences(v.setting, premises, queries, Semantics::Grd);
    auto prf = consequences(v.setting, premises, queries, Semantics::Prf);
    if (grd != expect.grounded || prf != expect.preferred)
      return {false, "instance " + std::to_string(t) + " " + set_text(premises) + " under " +
                         to_string(v.setting.rule)};
  }
  return {true, "100 KBs over 4 attack rules, grd and prf answers match the bounded truth-table graph"};
}

Outcome priorities() {
  GenConfig cfg;
  cfg.seed = seed();
  KBGenerator gen(cfg);
  std::size_t pairs = 0;
  for (int t = 0; t < 100; ++t) {
    Setting s;
    FormulaSet premises;
    Lifting lifting;
    PriorityAssignment constant, random;
    const Value k = static_cast<Value>(gen.rng().below(4));
    switch (t % 3) {
      case 0: {
        s = make_setting(cl_core(), t % 2 ? AttackRule::DiCoDef : AttackRule::Def);
        premises = gen.premises();
        lifting = (t / 3) % 3 == 0 ? Lifting::MinSupport
                  : (t / 3) % 3 == 1 ? Lifting::MaxSupport
                                     : Lifting::ConclusionValue;
        constant.fallback = k;
        random.pi = gen.priorities(premises);
        if (lifting == Lifting::ConclusionValue) random.fallback = 2;
        break;
      }
      case 1: {
        AbaInstance a = gen.aba({"p", "q", "r"}, "r");
        s = make_setting(aba_core(a.assumptions, a.rules, false), AttackRule::Native,
                         ContrarinessSpec::explicit_map(a.contraries));
        premises = a.assumptions;
        lifting = Lifting::MaxABA;
        constant.fallback = k;
        random.pi = gen.priorities(premises);
        break;
      }
      default: {
        AspicTheory th = gen.aspic({"p", "q", "r"}, "r");
        AspicOptions opt;
        CoreHandle c = aspic_core(th, opt);
        s = make_setting(c, AttackRule::Native, opt.contrariness);
        premises = aspic_premises(c);
        lifting = Lifting::WeakestLinkASPIC;
        constant.fallback = k;
        for (const auto& r : th.defeasible) {
          constant.rule_pi[r->id] = k;
          random.rule_pi[r->id] = *r->value;
        }
        for (std::size_t i = 0; i < th.facts.size(); ++i) {
          constant.pi[th.facts[i]] = k;
          random.pi[th.facts[i]] = th.fact_values[i];
        }
        random.fallback = 0;
        break;
      }
    }
    AttackGraph plain = build_graph(s, premises, {});
    AttackGraph flat = build_prioritized_graph(s, premises, {}, constant, lifting);
    if (plain.edges != flat.edges)
      return {false, "constant priorities changed the edges on instance " + std::to_string(t) +
                         " (" + to_string(lifting) + ")"};

    AttackGraph g = build_prioritized_graph(s, premises, {}, random, lifting);
    const auto& args = g.arguments;
    for (const auto& a : args) {
      FormulaSet pa = attack_points(a.support, s.points);
      for (const auto& b : args) {
        if (a.id == b.id || *a.value > *b.value) continue;
        if (!set_subset(pa, attack_points(b.support, s.points))) continue;
        ++pairs;
        if (!g.digraph.attackers[a.id].is_subset_of(g.digraph.attackers[b.id]))
          return {false, "defeaters of " + a.text() + " not contained in those of " + b.text() +
                             " (" + to_string(lifting) + ")"};
      }
    }
  }
  return {true, "100 instances edge-identical under constant priorities; " + std::to_string(pairs) +
                    " comparable pairs satisfy defeater monotonicity"};
}

Outcome golden() {
  std::string out_dot[2], out_json[2];
  for (int run = 0; run < 2; ++run) {
    std::ostringstream o1, e1, o2, e2;
    if (cli_run({"graph", data("makinson.kb"), "--dot", "-"}, o1, e1) != 0)
      return {false, "graph --dot failed: " + e1.str()};
    if (cli_run({"graph", data("makinson.kb"), "--json", "-"}, o2, e2) != 0)
      return {false, "graph --json failed: " + e2.str()};
    out_dot[run] = o1.str();
    out_json[run] = o2.str();
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  if (out_dot[0] != out_dot[1] || out_json[0] != out_json[1])
    return {false, "two runs produced different bytes"};
  if (out_dot[0] != slurp(data("makinson.dot"))) return {false, "DOT differs from golden file"};
  if (out_json[0] != slurp(data("makinson.json"))) return {false, "JSON differs from golden file"};
  return {true, "DOT and JSON match golden files byte for byte"};
}

}  // namespace

int main(int argc, char** argv) {
  only.assign(argv + 1, argv + argc);
  std::cout << "seed " << seed() << std::endl;
  report("1", "Makinson ASPIC preferred cumulativity failure", makinson, 1.0);
  report("2", "consistency-restricted grounded counterexample", consistent_grounded, 1.0);
  report("3", "stable equals preferred under consistency restriction", stb_eq_prf, 300.0);
  report("4", "grounded equals arguments over the MCS intersection", grd_eq_mcs, 300.0);
  report("5", "non-interference suites with plain CL/Def control", non_interference, 600.0);
  info("5-supplement", "CL/DiCoDef interference probe", non_interference_dicodef);
  report("6", "grounded cumulativity on pointed settings", cumulativity, 600.0);
  report("7", "enumeration and labelling backends agree", backends, 300.0);
  report("8", "canonical-attacker reduction against bounded truth-table graph", reduction_oracle,
         300.0);
  report("9", "priority degeneration and defeater monotonicity", priorities, 300.0);
  report("10", "golden DOT and JSON for the Makinson graph", golden, 10.0);
  return failures == 0 ? 0 : 1;
}
