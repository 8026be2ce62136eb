#include "argonaut/harness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "argonaut/cl.hpp"

namespace argonaut {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string PropertyReport::text() const {
  std::ostringstream os;
  os << "property: " << property << "\n"
     << "verdict: " << to_string(verdict) << "\n"
     << "trials: " << trials << "\n"
     << "failures: " << failures << "\n"
     << "seed: " << seed << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  if (counterexample) {
    const auto& c = *counterexample;
    os << (verdict == Verdict::Fail ? "counterexample:\n" : "witness:\n");
    os << "  setting: " << c.setting << "\n";
    for (std::size_t i = 0; i < c.premise_sets.size(); ++i)
      os << "  premises[" << i << "]: " << set_text(c.premise_sets[i]) << "\n";
    if (c.formula) os << "  formula: " << c.formula->text() << "\n";
    if (!c.semantics.empty()) os << "  semantics: " << c.semantics << "\n";
    if (!c.expected.empty()) os << "  expected: " << c.expected << "\n";
    if (!c.actual.empty()) os << "  actual: " << c.actual << "\n";
    if (!c.detail.empty()) os << "  detail: " << c.detail << "\n";
  }
  return os.str();
}

int exit_code(const std::vector<PropertyReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return 1;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

namespace {

std::string describe(const Setting& s) {
  return s.core->describe() + " / " + to_string(s.rule);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

Counterexample make_cx(const Setting& s, std::vector<FormulaSet> sets) {
  Counterexample c;
  c.setting = describe(s);
  c.premise_sets = std::move(sets);
  return c;
}

bool all_contain(const std::vector<Extension>& exts, const Bitset& hits) {
  return std::all_of(exts.begin(), exts.end(),
                     [&](const Extension& e) { return e.members.intersects(hits); });
}

using Key = std::pair<FormulaSet, Formula>;

std::map<Key, int> key_index(const AttackGraph& g) {
  std::map<Key, int> m;
  for (const auto& a : g.arguments) m.emplace(Key{a.support, a.conclusion}, a.id);
  return m;
}

FormulaSet literals_over(const std::vector<std::string>& atoms) {
  std::vector<Formula> out;
  for (const auto& a : atoms) {
    out.push_back(Formula::atom(a));
    out.push_back(Formula::neg(Formula::atom(a)));
  }
  return make_set(out);
}

}  // namespace

std::vector<char> consequences(const Setting& setting, const FormulaSet& premises,
                               const FormulaSet& queries, Semantics sem,
                               const HarnessOptions& opts) {
  AttackGraph g = build_graph(setting, premises, queries, opts.build);
  auto exts = extensions(g.digraph, sem, opts.sem);
  Bitset gr;
  if (sem == Semantics::Cmp) gr = grounded(g.digraph).members;
  std::vector<char> out;
  for (const auto& q : queries) {
    Bitset hits = concluding(g, q);
    bool e = all_contain(exts, hits);
    if (sem == Semantics::Cmp && gr.intersects(hits) != e)
      throw std::logic_error("complete and grounded skeptical answers differ on " + q.text());
    out.push_back(e);
  }
  return out;
}

std::vector<FormulaSet> mcs(const Setting& setting, const FormulaSet& premises,
                            kernels::Exec exec) {
  if (premises.size() > 12)
    throw CapExceeded("maximal consistent subsets over more than 12 premises");
  auto bad = kernels::direct_inconsistency(*setting.core, setting.contrariness, premises, exec);
  const std::size_t n = premises.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m)
    for (std::size_t i = 0; i < n && !bad[m]; ++i)
      if ((m >> i & 1) && bad[m ^ (std::uint64_t{1} << i)]) bad[m] = 1;
  std::vector<FormulaSet> out;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (bad[m]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(m >> i & 1) && !bad[m | (std::uint64_t{1} << i)]) maximal = false;
    if (maximal) out.push_back(subset_by_mask(premises, m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PropertyReport check_non_interference(const Setting& setting, const FormulaSet& s1,
                                      const FormulaSet& s2, Semantics sem,
                                      const FormulaSet& pool, const HarnessOptions& opts) {
  if (!disjoint(set_union(s1, pool), s2))
    throw PreconditionError("non-interference needs S2 to share no atoms with S1 and the queries");
  PropertyReport r;
  r.property = "non-interference";
  r.trials = pool.size();
  auto base = consequences(setting, s1, pool, sem, opts);
  auto both = consequences(setting, set_union(s1, s2), pool, sem, opts);
  std::size_t bad = pool.size();
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (base[i] != both[i]) {
      bad = i;
      break;
    }
  if (bad == pool.size()) return r;

  const Formula phi = pool[bad];
  FormulaSet a = s1, b = s2;
  auto differs = [&](const FormulaSet& x, const FormulaSet& y) {
    std::size_t k = static_cast<std::size_t>(
        std::lower_bound(pool.begin(), pool.end(), phi) - pool.begin());
    return consequences(setting, x, pool, sem, opts)[k] !=
           consequences(setting, set_union(x, y), pool, sem, opts)[k];
  };
  if (opts.minimize) {
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (const auto& f : b) {
        FormulaSet smaller = set_without(b, f);
        if (differs(a, smaller)) {
          b = smaller;
          shrunk = true;
          break;
        }
      }
      if (shrunk) continue;
      for (const auto& f : a) {
        FormulaSet smaller = set_without(a, f);
        if (differs(smaller, b)) {
          a = smaller;
          shrunk = true;
          break;
        }
      }
    }
  }
  r.verdict = Verdict::Fail;
  r.failures = 1;
  Counterexample c = make_cx(setting, {a, b});
  c.formula = phi;
  c.semantics = to_string(sem);
  std::size_t k = static_cast<std::size_t>(
      std::lower_bound(pool.begin(), pool.end(), phi) - pool.begin());
  c.expected = yes_no(consequences(setting, a, pool, sem, opts)[k]);
  c.actual = yes_no(consequences(setting, set_union(a, b), pool, sem, opts)[k]);
  c.detail = "S1 entails the formula: " + c.expected + "; S1 with S2: " + c.actual;
  r.counterexample = std::move(c);
  return r;
}

PropertyReport check_crash_resistance_probe(const Setting& setting, const FormulaSet& candidate,
                                            const std::vector<std::string>& atom_pool,
                                            Semantics sem, std::size_t trials,
                                            std::uint64_t seed, const HarnessOptions& opts) {
  auto used = atoms(candidate);
  std::vector<std::string> fresh;
  for (const auto& a : atom_pool)
    if (!std::binary_search(used.begin(), used.end(), a)) fresh.push_back(a);
  if (fresh.empty()) throw PreconditionError("no atoms outside the candidate");
  PropertyReport r;
  r.property = "crash-resistance-probe";
  r.seed = seed;
  r.verdict = Verdict::Inconclusive;
  r.notes.push_back("contamination quantifies over all disjoint sets; only refutation is decisive");
  GenConfig cfg;
  cfg.atoms = fresh;
  cfg.min_premises = 1;
  cfg.max_premises = 2;
  cfg.depth = 1;
  cfg.seed = seed;
  KBGenerator gen(cfg);
  for (std::size_t t = 0; t < trials; ++t) {
    ++r.trials;
    // The first trial is the single fresh atom, which refutes most candidates.
    FormulaSet extra = t == 0 ? FormulaSet{Formula::atom(fresh[0])} : gen.premises();
    FormulaSet pool = set_union(literals_over(used), literals_over(atoms(extra)));
    pool = set_union(pool, extra);
    auto before = consequences(setting, candidate, pool, sem, opts);
    auto after = consequences(setting, set_union(candidate, extra), pool, sem, opts);
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (before[i] != after[i]) {
        r.verdict = Verdict::Pass;
        Counterexample c = make_cx(setting, {candidate, extra});
        c.formula = pool[i];
        c.semantics = to_string(sem);
        c.expected = yes_no(before[i]);
        c.actual = yes_no(after[i]);
        c.detail = "candidate is not contaminating";
        r.counterexample = std::move(c);
        return r;
      }
  }
  return r;
}

PropertyReport check_cumulativity(const Setting& setting, const FormulaSet& premises,
                                  const Formula& phi, const FormulaSet& pool, Semantics sem,
                                  const HarnessOptions& opts) {
  PropertyReport r;
  r.property = "cumulativity";
  FormulaSet queries = set_with(pool, phi);
  auto base = consequences(setting, premises, queries, sem, opts);
  std::size_t k = static_cast<std::size_t>(
      std::lower_bound(queries.begin(), queries.end(), phi) - queries.begin());
  if (!base[k]) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("φ not entailed");
    return r;
  }
  auto plus = consequences(setting.with_axiom(phi), premises, queries, sem, opts);
  r.trials = queries.size();
  for (std::size_t i = 0; i < queries.size(); ++i)
    if (base[i] != plus[i]) {
      r.verdict = Verdict::Fail;
      r.failures = 1;
      Counterexample c = make_cx(setting, {premises});
      c.formula = queries[i];
      c.semantics = to_string(sem);
      c.expected = yes_no(base[i]);
      c.actual = yes_no(plus[i]);
      c.detail = "axiom " + phi.text() + " changes the answer";
      r.counterexample = std::move(c);
      return r;
    }
  return r;
}

PropertyReport check_extensional_cumulativity(const Setting& setting,
                                              const FormulaSet& premises, const Formula& phi,
                                              Semantics sem, const FormulaSet& pool,
                                              const HarnessOptions& opts) {
  PropertyReport r;
  r.property = "extensional-cumulativity";
  FormulaSet queries = set_with(pool, phi);
  AttackGraph g = build_graph(setting, premises, queries, opts.build);
  auto fam = extensions(g.digraph, sem, opts.sem);
  Bitset phi_hits = concluding(g, phi);
  if (!all_contain(fam, phi_hits)) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("φ not entailed");
    return r;
  }
  AttackGraph gp = build_graph(setting.with_axiom(phi), premises, queries, opts.build);
  auto famp = extensions(gp.digraph, sem, opts.sem);
  auto base_ids = key_index(g);
  std::vector<int> to_base(gp.arguments.size(), -1);
  for (const auto& a : gp.arguments) {
    auto it = base_ids.find({a.support, a.conclusion});
    if (it != base_ids.end()) to_base[a.id] = it->second;
  }
  const std::size_t n = g.arguments.size();
  auto restrict = [&](const Bitset& e) {
    Bitset out(n);
    for (auto i = e.find_first(); i != Bitset::npos; i = e.find_next(i))
      if (to_base[i] >= 0) out.set(to_base[i]);
    return out;
  };
  auto fail = [&](const std::string& detail) {
    r.verdict = Verdict::Fail;
    r.failures = 1;
    Counterexample c = make_cx(setting, {premises});
    c.formula = phi;
    c.semantics = to_string(sem);
    c.detail = detail;
    r.counterexample = std::move(c);
    return r;
  };
  auto names = [&](const AttackGraph& gr, const Bitset& b) {
    std::string s = "{";
    bool first = true;
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) {
      s += (first ? "" : "; ") + gr.arguments[i].text();
      first = false;
    }
    return s + "}";
  };

  std::set<Bitset> lhs, rhs;
  for (const auto& e : fam) lhs.insert(e.members);
  for (const auto& e : famp) rhs.insert(restrict(e.members));
  r.trials = 1;
  if (lhs != rhs) {
    for (const auto& e : rhs)
      if (!lhs.count(e)) return fail("restricted +φ extension " + names(g, e) + " is not a base extension");
    for (const auto& e : lhs)
      if (!rhs.count(e)) return fail("base extension " + names(g, e) + " has no +φ counterpart");
  }
  if (sem != Semantics::Grd) return r;

  r.trials = 4;
  Bitset grd = grounded(g.digraph).members;
  Bitset grdp = grounded(gp.digraph).members;
  std::vector<int> phis;
  for (auto i = grd.find_first(); i != Bitset::npos; i = grd.find_next(i))
    if (g.arguments[i].conclusion == phi) phis.push_back(static_cast<int>(i));
  if (phis.empty()) return fail("item 1: no grounded argument for φ");
  std::map<Key, int> plus_ids = key_index(gp);
  for (auto i = grd.find_first(); i != Bitset::npos; i = grd.find_next(i)) {
    const auto& a = g.arguments[i];
    auto it = plus_ids.find({a.support, a.conclusion});
    if (it == plus_ids.end() || !grdp.test(it->second))
      return fail("item 2: grounded " + a.text() + " is not grounded after adding φ");
  }
  if (restrict(grdp) != grd) return fail("item 3: restricted +φ grounded extension differs");
  for (auto i = grdp.find_first(); i != Bitset::npos; i = grdp.find_next(i)) {
    if (to_base[i] >= 0) continue;
    const auto& a = gp.arguments[i];
    for (int f : phis) {
      Key k{set_union(a.support, g.arguments[f].support), a.conclusion};
      auto it = base_ids.find(k);
      if (it == base_ids.end() || !grd.test(it->second))
        return fail("item 4: " + a.text() + " augmented by " +
                    set_text(g.arguments[f].support) + " is not grounded in the base");
    }
  }
  return r;
}

PropertyReport check_stb_eq_prf_con(const Setting& base, const FormulaSet& premises,
                                    const HarnessOptions& opts) {
  if (base.points.kind != AttackPointKind::Id)
    throw PreconditionError("stable/preferred coincidence needs identity attack points");
  PropertyReport r;
  r.property = "stb-eq-prf";
  auto contra = check_contraposition(base.core, base.contrariness, premises, premises.size());
  if (contra.verdict == Verdict::Fail) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("base setting is not contrapositable on these premises");
    return r;
  }
  Setting con = base.with_core(restrict_consistent(base.core, base.contrariness));
  AttackGraph g = build_graph(con, premises, {}, opts.build);
  std::vector<Bitset> stb, prf;
  for (auto& e : stable_all(g.digraph, opts.sem)) stb.push_back(std::move(e.members));
  for (auto& e : preferred_all(g.digraph, opts.sem)) prf.push_back(std::move(e.members));
  r.trials = 1;
  if (stb != prf) {
    r.verdict = Verdict::Fail;
    r.failures = 1;
    Counterexample c = make_cx(con, {premises});
    c.expected = std::to_string(prf.size()) + " preferred extensions";
    c.actual = std::to_string(stb.size()) + " stable extensions";
    r.counterexample = std::move(c);
  }
  return r;
}

PropertyReport check_grd_eq_intersection_mcs(const Setting& base, const FormulaSet& premises,
                                             const HarnessOptions& opts) {
  if (base.points.kind != AttackPointKind::Id)
    throw PreconditionError("grounded/MCS characterization needs identity attack points");
  PropertyReport r;
  r.property = "grd-eq-mcs";
  auto sets = mcs(base, premises, opts.build.exec);
  FormulaSet inter = sets.empty() ? FormulaSet{} : sets.front();
  for (const auto& s : sets) {
    FormulaSet keep;
    std::set_intersection(inter.begin(), inter.end(), s.begin(), s.end(),
                          std::back_inserter(keep));
    inter = keep;
  }
  Setting con = base.with_core(restrict_consistent(base.core, base.contrariness));
  AttackGraph g = build_graph(con, premises, {}, opts.build);
  Bitset grd = grounded(g.digraph).members;
  Bitset expect(g.arguments.size());
  for (const auto& a : g.arguments)
    if (set_subset(a.support, inter)) expect.set(a.id);
  r.trials = 1;
  if (grd != expect) {
    r.verdict = Verdict::Fail;
    r.failures = 1;
    Counterexample c = make_cx(con, {premises, inter});
    c.expected = std::to_string(expect.count()) + " arguments within the MCS intersection";
    c.actual = std::to_string(grd.count()) + " grounded arguments";
    r.counterexample = std::move(c);
  }
  return r;
}

// ---- bounded-universe checks ---------------------------------------------

FormulaSet bounded_universe(const std::vector<std::string>& atoms, bool binary) {
  FormulaSet lits = literals_over(atoms);
  std::vector<Formula> out(lits.begin(), lits.end());
  if (binary)
    for (std::size_t i = 0; i < lits.size(); ++i)
      for (std::size_t j = 0; j < lits.size(); ++j) {
        if (i == j) continue;
        if (i < j) {
          out.push_back(Formula::conj(lits[i], lits[j]));
          out.push_back(Formula::disj(lits[i], lits[j]));
        }
        out.push_back(Formula::implies(lits[i], lits[j]));
      }
  return make_set(out);
}

std::vector<FormulaSet> small_subsets(const FormulaSet& u, std::size_t max_size) {
  std::vector<FormulaSet> out{FormulaSet{}};
  std::vector<FormulaSet> layer{FormulaSet{}};
  std::vector<std::size_t> last{0};  // next index to extend from
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<FormulaSet> next;
    std::vector<std::size_t> next_last;
    for (std::size_t s = 0; s < layer.size(); ++s)
      for (std::size_t i = last[s]; i < u.size(); ++i) {
        FormulaSet grown = layer[s];
        grown.push_back(u[i]);
        next.push_back(grown);
        next_last.push_back(i + 1);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    last = std::move(next_last);
  }
  return out;
}

namespace {

std::string bound_note(const SplitBound& b) {
  std::string s = "atoms {";
  for (const auto& a : b.atoms1) s += a + " ";
  s += "| ";
  for (const auto& a : b.atoms2) s += a + " ";
  s += "}, |S1| <= " + std::to_string(b.max_s1) + ", |S2| <= " + std::to_string(b.max_s2) +
       (b.binary ? ", literals and binary combinations" : ", literals only");
  return "no counterexample within bounds: " + s;
}

}  // namespace

PropertyReport check_pre_relevance(const CoreHandle& core, const SplitBound& bound) {
  PropertyReport r;
  r.property = "pre-relevance";
  FormulaSet u1 = bounded_universe(bound.atoms1, bound.binary);
  FormulaSet u2 = bounded_universe(bound.atoms2, bound.binary);
  if (!disjoint(u1, u2)) throw PreconditionError("atom split is not disjoint");
  auto sub1 = small_subsets(u1, bound.max_s1);
  auto sub2 = small_subsets(u2, bound.max_s2);
  for (const auto& s1 : sub1)
    for (const auto& s2 : sub2) {
      FormulaSet both = set_union(s1, s2);
      auto ok = core->holds_batch(both, u1);
      for (std::size_t k = 0; k < u1.size(); ++k) {
        ++r.trials;
        if (!ok[k]) continue;
        bool found = false;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << s1.size()) && !found; ++m)
          found = core->holds(subset_by_mask(s1, m), u1[k]);
        if (found) continue;
        r.verdict = Verdict::Fail;
        r.failures = 1;
        Counterexample c;
        c.setting = core->describe();
        c.premise_sets = {s1, s2};
        c.formula = u1[k];
        c.expected = "derivable from a subset of S1";
        c.actual = "derivable only with S2";
        r.counterexample = std::move(c);
        return r;
      }
    }
  r.notes.push_back(bound_note(bound));
  return r;
}

PropertyReport check_prime(const Setting& setting, const SplitBound& bound) {
  PropertyReport r;
  r.property = "prime";
  FormulaSet u1 = bounded_universe(bound.atoms1, bound.binary);
  FormulaSet u2 = bounded_universe(bound.atoms2, bound.binary);
  auto sub1 = small_subsets(u1, std::min<std::size_t>(bound.max_s1, 1));
  auto sub2 = small_subsets(u2, std::min<std::size_t>(bound.max_s2, 1));
  auto t1s = small_subsets(literals_over(bound.atoms1), 1);
  auto t2s = small_subsets(literals_over(bound.atoms2), 1);
  const Core& core = *setting.core;
  auto side_ok = [&](const FormulaSet& s, const FormulaSet& t) {
    for (const auto& p : attack_points(t, setting.points))
      for (const auto& psi : canonical_contraries(p, setting.contrariness))
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m)
          if (core.holds(subset_by_mask(s, m), psi)) return true;
    return false;
  };
  for (const auto& s1 : sub1)
    for (const auto& s2 : sub2) {
      FormulaSet both = set_union(s1, s2);
      for (const auto& t1 : t1s)
        for (const auto& t2 : t2s)
          for (const auto& p : attack_points(set_union(t1, t2), setting.points))
            for (const auto& psi : canonical_contraries(p, setting.contrariness)) {
              ++r.trials;
              if (!core.holds(both, psi)) continue;
              if (side_ok(s1, t1) || side_ok(s2, t2)) continue;
              r.verdict = Verdict::Fail;
              r.failures = 1;
              Counterexample c = make_cx(setting, {s1, s2, t1, t2});
              c.formula = psi;
              c.detail = "S1 ∪ S2 derives a contrary of " + p.text() +
                         " but neither side attacks its own T";
              r.counterexample = std::move(c);
              return r;
            }
    }
  SplitBound b = bound;
  b.max_s1 = std::min<std::size_t>(bound.max_s1, 1);
  b.max_s2 = std::min<std::size_t>(bound.max_s2, 1);
  r.notes.push_back(bound_note(b) + "; |T_i| <= 1 literals");
  return r;
}

PropertyReport check_contraposition(const CoreHandle& core, const ContrarinessSpec& c,
                                    const FormulaSet& universe, std::size_t max_theta) {
  PropertyReport r;
  r.property = "contraposition";
  for (const auto& theta : small_subsets(universe, max_theta)) {
    for (const auto& g : universe) {
      FormulaSet reps = canonical_contraries(g, c);
      if (reps.empty()) continue;
      auto hit = core->holds_batch(theta, reps);
      if (std::none_of(hit.begin(), hit.end(), [](char x) { return x; })) continue;
      for (const auto& sigma : theta) {
        ++r.trials;
        FormulaSet rotated = set_without(set_with(theta, g), sigma);
        FormulaSet sreps = canonical_contraries(sigma, c);
        auto ok = core->holds_batch(rotated, sreps);
        if (std::any_of(ok.begin(), ok.end(), [](char x) { return x; })) continue;
        r.verdict = Verdict::Fail;
        r.failures = 1;
        Counterexample cx;
        cx.setting = core->describe();
        cx.premise_sets = {theta};
        cx.formula = g;
        cx.detail = "rotation around " + sigma.text() + " fails";
        r.counterexample = std::move(cx);
        return r;
      }
    }
  }
  r.notes.push_back("no counterexample among sets of at most " + std::to_string(max_theta) +
                    " formulas from a universe of " + std::to_string(universe.size()));
  return r;
}

PropertyReport check_pointed(const AttackPointSpec& points, const FormulaSet& universe,
                             std::size_t max_size) {
  PropertyReport r;
  r.property = "pointed";
  auto subs = small_subsets(universe, max_size);
  for (const auto& g : subs)
    for (const auto& d : subs) {
      ++r.trials;
      FormulaSet lhs = attack_points(set_union(g, d), points);
      FormulaSet rhs = set_union(attack_points(g, points), attack_points(d, points));
      if (lhs == rhs) continue;
      r.verdict = Verdict::Fail;
      r.failures = 1;
      Counterexample c;
      c.premise_sets = {g, d};
      FormulaSet extra = set_minus(lhs, rhs);
      if (!extra.empty()) {
        c.formula = extra.front();
        c.detail = extra.front().text() + " is a point of the union only";
      }
      r.counterexample = std::move(c);
      return r;
    }
  r.notes.push_back("no counterexample among sets of at most " + std::to_string(max_size) +
                    " formulas");
  return r;
}

PropertyReport check_cut(const CoreHandle& core, const FormulaSet& universe,
                         std::size_t max_size) {
  PropertyReport r;
  r.property = "cut";
  auto subs = small_subsets(universe, max_size);
  for (const auto& gamma : subs) {
    auto derived = core->holds_batch(gamma, universe);
    for (std::size_t pi = 0; pi < universe.size(); ++pi) {
      if (!derived[pi]) continue;
      const Formula& phi = universe[pi];
      CoreHandle plus = core->with_axiom(phi);
      for (const auto& delta : subs) {
        auto lhs = plus->holds_batch(delta, universe);
        auto rhs = core->holds_batch(set_union(gamma, delta), universe);
        for (std::size_t k = 0; k < universe.size(); ++k) {
          ++r.trials;
          if (!lhs[k] || rhs[k]) continue;
          r.verdict = Verdict::Fail;
          r.failures = 1;
          Counterexample c;
          c.setting = core->describe();
          c.premise_sets = {gamma, delta};
          c.formula = universe[k];
          c.detail = "Γ derives " + phi.text() + " and Δ derives the formula with " +
                     phi.text() + " as an axiom, but Γ ∪ Δ does not";
          r.counterexample = std::move(c);
          return r;
        }
      }
    }
  }
  r.notes.push_back("no counterexample among sets of at most " + std::to_string(max_size) +
                    " formulas from a universe of " + std::to_string(universe.size()));
  return r;
}

PropertyReport check_axiom_iteration(const CoreHandle& core, const Formula& phi,
                                     const FormulaSet& universe, std::size_t max_size) {
  PropertyReport r;
  r.property = "axiom-iteration";
  auto one_step = [&](const FormulaSet& g) {
    auto a = core->holds_batch(g, universe);
    auto b = core->holds_batch(set_with(g, phi), universe);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
    return a;
  };
  for (const auto& gamma : small_subsets(universe, max_size)) {
    auto once = one_step(gamma);
    for (std::size_t c = 0; c < universe.size(); ++c) {
      if (!once[c]) continue;
      auto via = one_step(set_with(gamma, universe[c]));
      for (std::size_t k = 0; k < universe.size(); ++k) {
        ++r.trials;
        if (!via[k] || once[k]) continue;
        r.verdict = Verdict::Fail;
        r.failures = 1;
        Counterexample ce;
        ce.setting = core->describe();
        ce.premise_sets = {gamma, {universe[c]}};
        ce.formula = universe[k];
        ce.detail = "reachable through " + universe[c].text() + " with axiom " + phi.text() +
                    " but not in one step";
        r.counterexample = std::move(ce);
        return r;
      }
    }
  }
  r.notes.push_back("two-step composition adds nothing over sets of at most " +
                    std::to_string(max_size) + " formulas from a universe of " +
                    std::to_string(universe.size()));
  return r;
}

// ---- random suites -------------------------------------------------------

std::string to_string(Family f) {
  switch (f) {
    case Family::CLDef: return "cl-def";
    case Family::CLDiCoDef: return "cl-dicodef";
    case Family::CLDiDef: return "cl-didef";
    case Family::CLTopDiDef: return "cl-top-didef";
    case Family::MCSCapDiDef: return "mcs-cap-didef";
    case Family::MCSCupDiDef: return "mcs-cup-didef";
    case Family::TrackedABA: return "aba-tracked";
    case Family::UntrackedABA: return "aba-untracked";
    case Family::AspicDagger: return "aspic-dagger";
    case Family::AspicDDagger: return "aspic-ddagger";
  }
  return "cl-def";
}

std::optional<Family> parse_family(const std::string& s) {
  for (auto f : {Family::CLDef, Family::CLDiCoDef, Family::CLDiDef, Family::CLTopDiDef,
                 Family::MCSCapDiDef, Family::MCSCupDiDef, Family::TrackedABA,
                 Family::UntrackedABA, Family::AspicDagger, Family::AspicDDagger})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

Setting family_setting(Family f) {
  switch (f) {
    case Family::CLDef: return make_setting(cl_core(), AttackRule::Def);
    case Family::CLDiCoDef: return make_setting(cl_core(), AttackRule::DiCoDef);
    case Family::CLDiDef: return make_setting(cl_core(), AttackRule::DiDef);
    case Family::CLTopDiDef: return make_setting(cl_top_core(), AttackRule::DiDef);
    case Family::MCSCapDiDef: return make_setting(mcs_core(true), AttackRule::DiDef);
    case Family::MCSCupDiDef: return make_setting(mcs_core(false), AttackRule::DiDef);
    default: break;
  }
  throw ConfigError("family " + to_string(f) + " has no fixed base setting");
}

namespace {

bool is_logic(Family f) {
  return f != Family::TrackedABA && f != Family::UntrackedABA && f != Family::AspicDagger &&
         f != Family::AspicDDagger;
}

}  // namespace

Instance make_instance(Family f, KBGenerator& gen, const std::vector<std::string>& atoms_a,
                       const std::vector<std::string>& atoms_b) {
  Instance inst;
  if (is_logic(f)) {
    inst.setting = family_setting(f);
    inst.s1 = gen.premises(atoms_a);
    if (!atoms_b.empty()) inst.s2 = gen.premises(atoms_b);
    inst.pool = set_union(literals_over(atoms(inst.s1)), inst.s1);
    return inst;
  }
  if (f == Family::TrackedABA || f == Family::UntrackedABA) {
    const bool tracked = f == Family::TrackedABA;
    AbaInstance a = gen.aba(atoms_a, "r");
    AbaInstance b = atoms_b.empty() ? AbaInstance{} : gen.aba(atoms_b, "s");
    std::vector<RuleHandle> rules = a.rules;
    rules.insert(rules.end(), b.rules.begin(), b.rules.end());
    std::map<Formula, FormulaSet> contraries = a.contraries;
    contraries.insert(b.contraries.begin(), b.contraries.end());
    CoreHandle core = aba_core(set_union(a.assumptions, b.assumptions), rules, tracked);
    inst.setting = make_setting(core, AttackRule::Native, ContrarinessSpec::explicit_map(contraries));
    auto side = [&](const AbaInstance& x) {
      FormulaSet s = x.assumptions;
      if (tracked)
        for (const auto& r : x.rules) s = set_with(s, rule_formula(r));
      return s;
    };
    inst.s1 = side(a);
    inst.s2 = side(b);
    inst.pool = literals_over(atoms_a);
    return inst;
  }
  const AspicMode mode = f == Family::AspicDagger ? AspicMode::Dagger : AspicMode::DDagger;
  AspicTheory a = gen.aspic(atoms_a, "r");
  AspicTheory b = atoms_b.empty() ? AspicTheory{} : gen.aspic(atoms_b, "s");
  AspicOptions opt;
  opt.mode = mode;
  AspicTheory all = a;
  all.facts.insert(all.facts.end(), b.facts.begin(), b.facts.end());
  all.fact_values.insert(all.fact_values.end(), b.fact_values.begin(), b.fact_values.end());
  all.strict.insert(all.strict.end(), b.strict.begin(), b.strict.end());
  all.defeasible.insert(all.defeasible.end(), b.defeasible.begin(), b.defeasible.end());
  CoreHandle core = aspic_core(all, opt);
  inst.setting = make_setting(core, AttackRule::Native, opt.contrariness);
  inst.s1 = aspic_premises(aspic_core(a, opt));
  inst.s2 = atoms_b.empty() ? FormulaSet{} : aspic_premises(aspic_core(b, opt));
  inst.pool = literals_over(atoms_a);
  return inst;
}

PropertyReport fuzz_non_interference(Family f, const std::vector<Semantics>& sems,
                                     std::size_t trials, std::uint64_t seed,
                                     const HarnessOptions& opts, GenConfig gen_cfg) {
  gen_cfg.seed = seed;
  KBGenerator gen(gen_cfg);
  PropertyReport r;
  r.property = "non-interference";
  r.seed = seed;
  const std::vector<std::string> side_a{"p", "q", "r", "s"};
  const std::vector<std::string> side_b{"t", "u", "v", "w"};
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t na = gen.rng().between(1, side_a.size());
    std::size_t nb = gen.rng().between(1, side_b.size());
    std::vector<std::string> a(side_a.begin(), side_a.begin() + na);
    std::vector<std::string> b(side_b.begin(), side_b.begin() + nb);
    Instance inst = make_instance(f, gen, a, b);
    for (Semantics sem : sems) {
      ++r.trials;
      PropertyReport one = check_non_interference(inst.setting, inst.s1, inst.s2, sem, inst.pool,
                                                  HarnessOptions{opts.build, opts.sem, false});
      if (one.verdict != Verdict::Fail) continue;
      ++r.failures;
      if (!r.counterexample) {
        if (opts.minimize)
          one = check_non_interference(inst.setting, inst.s1, inst.s2, sem, inst.pool, opts);
        r.counterexample = one.counterexample;
        r.counterexample->detail += " (trial " + std::to_string(t) + ")";
      }
    }
  }
  r.verdict = r.failures ? Verdict::Fail : Verdict::Pass;
  r.notes.push_back("family " + to_string(f) + ", up to 4 atoms per side");
  return r;
}

PropertyReport fuzz_cumulativity(Family f, std::size_t trials, std::uint64_t seed,
                                 const HarnessOptions& opts, GenConfig gen_cfg) {
  gen_cfg.seed = seed;
  KBGenerator gen(gen_cfg);
  PropertyReport r;
  r.property = "cumulativity";
  r.seed = seed;
  const std::vector<std::string> pool_atoms{"p", "q", "r", "s"};
  std::size_t attempts = 0, skipped = 0;
  while (r.trials < trials) {
    if (++attempts > trials * 50) {
      r.notes.push_back("gave up generating instances with a grounded consequence");
      break;
    }
    std::size_t na = gen.rng().between(2, pool_atoms.size());
    std::vector<std::string> a(pool_atoms.begin(), pool_atoms.begin() + na);
    Instance inst = make_instance(f, gen, a, {});
    auto ans = consequences(inst.setting, inst.s1, inst.pool, Semantics::Grd, opts);
    std::vector<Formula> entailed;
    for (std::size_t i = 0; i < inst.pool.size(); ++i)
      if (ans[i]) entailed.push_back(inst.pool[i]);
    if (entailed.empty()) {
      ++skipped;
      continue;
    }
    Formula phi = entailed[gen.rng().below(entailed.size())];
    ++r.trials;
    PropertyReport ext = check_extensional_cumulativity(inst.setting, inst.s1, phi,
                                                        Semantics::Grd, inst.pool, opts);
    PropertyReport cons = ext.verdict == Verdict::Fail
                              ? ext
                              : check_cumulativity(inst.setting, inst.s1, phi, inst.pool,
                                                   Semantics::Grd, opts);
    if (cons.verdict == Verdict::Fail) {
      ++r.failures;
      if (!r.counterexample) r.counterexample = cons.counterexample;
    }
  }
  r.verdict = r.failures ? Verdict::Fail
              : r.trials < trials ? Verdict::Inconclusive
                                  : Verdict::Pass;
  r.notes.push_back("family " + to_string(f) + "; " + std::to_string(skipped) +
                    " generated instances had no grounded consequence and were skipped");
  return r;
}

GenConfig con_corpus_config(std::uint64_t seed) {
  GenConfig g;
  g.atoms = {"p", "q", "r", "s", "t"};
  g.min_premises = 1;
  g.max_premises = 6;
  g.depth = 2;
  g.seed = seed;
  return g;
}

namespace {

template <class Check>
PropertyReport fuzz_con(const std::string& name, std::size_t trials, std::uint64_t seed,
                        const HarnessOptions& opts, GenConfig gen_cfg, Check check) {
  gen_cfg.seed = seed;
  KBGenerator gen(gen_cfg);
  Setting base = make_setting(cl_core(), AttackRule::DiCoDef);
  PropertyReport r;
  r.property = name;
  r.seed = seed;
  std::size_t inconclusive = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    FormulaSet premises = gen.premises();
    PropertyReport one = check(base, premises, opts);
    ++r.trials;
    if (one.verdict == Verdict::Inconclusive) ++inconclusive;
    if (one.verdict != Verdict::Fail) continue;
    ++r.failures;
    if (!r.counterexample) r.counterexample = one.counterexample;
  }
  r.verdict = r.failures ? Verdict::Fail : inconclusive ? Verdict::Inconclusive : Verdict::Pass;
  if (inconclusive)
    r.notes.push_back(std::to_string(inconclusive) + " instances failed a precondition");
  return r;
}

}  // namespace

PropertyReport fuzz_stb_eq_prf_con(std::size_t trials, std::uint64_t seed,
                                   const HarnessOptions& opts, GenConfig gen) {
  return fuzz_con("stb-eq-prf", trials, seed, opts, std::move(gen), check_stb_eq_prf_con);
}

PropertyReport fuzz_grd_eq_mcs(std::size_t trials, std::uint64_t seed,
                               const HarnessOptions& opts, GenConfig gen) {
  return fuzz_con("grd-eq-mcs", trials, seed, opts, std::move(gen),
                  check_grd_eq_intersection_mcs);
}

}  // namespace argonaut
