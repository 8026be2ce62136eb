#include "argonaut/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "CLI11.hpp"
#include "argonaut/export.hpp"
#include "argonaut/harness.hpp"
#include "argonaut/kb.hpp"
#include "argonaut/priorities.hpp"

namespace argonaut {

namespace {

struct UsageError : Error {
  using Error::Error;
};

const std::vector<std::string> kSems{"adm", "cmp", "grd", "prf", "stb"};
const std::vector<std::string> kProperties{
    "non-interference", "cumulativity", "ext-cumulativity", "stb-eq-prf", "grd-eq-mcs",
    "pre-relevance",    "prime",        "pointed",          "cut",        "contraposition",
    "axiom-iteration"};

Formula parse_arg_formula(const std::string& text, const LoadedKB& kb) {
  std::map<std::string, RuleHandle> rules;
  for (const auto& r : kb.doc.rules) rules[r.rule->id] = r.rule;
  auto resolve = [&](const std::string& id) -> std::optional<Formula> {
    auto it = rules.find(id);
    if (it == rules.end()) return std::nullopt;
    return name_formula(it->second);
  };
  try {
    return parse_formula(text, resolve);
  } catch (const ParseError& e) {
    throw UsageError("formula argument: " + std::string(e.what()));
  }
}

AttackGraph build(const LoadedKB& kb, const Setting& s, const FormulaSet& queries) {
  if (kb.lifting == Lifting::None) return build_graph(s, kb.premises, queries);
  return build_prioritized_graph(s, kb.premises, queries, kb.pi, kb.lifting);
}

// Logic cores only derive contraries and queries; the KB's own formulas make
// the exported graph show the premises themselves.
FormulaSet own_queries(const LoadedKB& kb, const Setting& s) {
  return s.core->rule_based() ? FormulaSet{} : kb.premises;
}

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

void print_warnings(const LoadedKB& kb, std::ostream& err) {
  for (const auto& w : kb.warnings) err << "warning: " << w << "\n";
}

FormulaSet literals_of(const std::vector<std::string>& atoms) {
  std::vector<Formula> out;
  for (const auto& a : atoms) {
    if (!a.empty() && a[0] == '#') continue;
    out.push_back(Formula::atom(a));
    out.push_back(Formula::neg(Formula::atom(a)));
  }
  return make_set(out);
}

// Premises grouped by shared atoms; the group of `seed_atoms` (or of the
// first premise) against the rest.
std::pair<FormulaSet, FormulaSet> split_by_atoms(const FormulaSet& premises,
                                                 std::vector<std::string> seed_atoms) {
  if (premises.empty()) return {};
  std::set<std::string> reach(seed_atoms.begin(), seed_atoms.end());
  if (reach.empty())
    for (const auto& a : premises.front().atoms()) reach.insert(a);
  std::vector<char> in(premises.size(), 0);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < premises.size(); ++i) {
      if (in[i]) continue;
      const auto& as = premises[i].atoms();
      if (std::any_of(as.begin(), as.end(), [&](const std::string& a) { return reach.count(a); })) {
        in[i] = 1;
        reach.insert(as.begin(), as.end());
        grew = true;
      }
    }
  }
  FormulaSet s1, s2;
  for (std::size_t i = 0; i < premises.size(); ++i) (in[i] ? s1 : s2).push_back(premises[i]);
  return {s1, s2};
}

std::vector<std::string> first_atoms(const LoadedKB& kb, std::size_t n) {
  std::vector<std::string> out;
  for (const auto& a : kb.doc.atoms)
    if (out.size() < n) out.push_back(a);
  if (out.size() < n) return {"p", "q"};
  return out;
}

PropertyReport check_kb(const LoadedKB& kb, const std::string& property,
                        const std::optional<Formula>& phi, Semantics sem) {
  const Setting& s = kb.setting;
  auto need_phi = [&]() -> const Formula& {
    if (!phi) throw UsageError("--property " + property + " needs --phi");
    return *phi;
  };
  if (property == "non-interference") {
    auto [s1, s2] = split_by_atoms(kb.premises, phi ? phi->atoms() : std::vector<std::string>{});
    FormulaSet pool = set_union(literals_of(atoms(s1)), s1);
    if (phi) pool = set_with(pool, *phi);
    return check_non_interference(s, s1, s2, sem, pool);
  }
  if (property == "cumulativity" || property == "ext-cumulativity") {
    const Formula& f = need_phi();
    FormulaSet pool = literals_of(kb.doc.atoms);
    return property == "cumulativity" ? check_cumulativity(s, kb.premises, f, pool, sem)
                                      : check_extensional_cumulativity(s, kb.premises, f, sem, pool);
  }
  if (property == "stb-eq-prf") return check_stb_eq_prf_con(s, kb.premises);
  if (property == "grd-eq-mcs") return check_grd_eq_intersection_mcs(s, kb.premises);
  if (property == "pre-relevance") return check_pre_relevance(s.core);
  if (property == "prime") return check_prime(s);
  FormulaSet universe = bounded_universe(first_atoms(kb, 2), !s.core->rule_based());
  if (property == "pointed") return check_pointed(s.points, universe, 2);
  if (property == "cut") return check_cut(s.core, universe, 2);
  if (property == "axiom-iteration") return check_axiom_iteration(s.core, need_phi(), universe, 1);
  return check_contraposition(s.core, s.contrariness, kb.premises,
                              std::min<std::size_t>(kb.premises.size(), 3));
}

std::optional<Family> default_family(const std::string& property) {
  if (property == "non-interference") return Family::CLTopDiDef;
  if (property == "cumulativity" || property == "ext-cumulativity") return Family::TrackedABA;
  if (property == "stb-eq-prf" || property == "grd-eq-mcs") return std::nullopt;
  return Family::CLDiDef;
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size())
    throw UsageError("--random " + key + " expects a natural number");
  return out;
}

PropertyReport check_random(const std::vector<std::string>& kv, const std::string& property,
                            const std::string& family_name, const std::string& sem_name) {
  std::uint64_t seed = default_seed();
  std::size_t trials = 100;
  for (const auto& item : kv) {
    auto eq = item.find('=');
    std::string key = item.substr(0, eq);
    if (eq == std::string::npos || (key != "seed" && key != "trials"))
      throw UsageError("--random expects seed=N and trials=K");
    std::uint64_t v = parse_u64(key, item.substr(eq + 1));
    if (key == "seed") seed = v;
    else trials = static_cast<std::size_t>(v);
  }
  std::optional<Family> fam = default_family(property);
  if (!family_name.empty()) {
    fam = parse_family(family_name);
    if (!fam) throw UsageError("unknown family '" + family_name + "'");
  }
  std::vector<Semantics> sems{Semantics::Grd, Semantics::Prf};
  if (!sem_name.empty()) sems = {*parse_semantics(sem_name)};
  if (property == "non-interference") return fuzz_non_interference(*fam, sems, trials, seed);
  if (property == "cumulativity" || property == "ext-cumulativity")
    return fuzz_cumulativity(*fam, trials, seed);
  if (property == "stb-eq-prf") return fuzz_stb_eq_prf_con(trials, seed, {}, con_corpus_config(seed));
  if (property == "grd-eq-mcs") return fuzz_grd_eq_mcs(trials, seed, {}, con_corpus_config(seed));
  if (property == "axiom-iteration") throw UsageError("axiom-iteration needs a knowledge base and --phi");

  Setting s;
  try {
    s = family_setting(*fam);
  } catch (const ConfigError& e) {
    throw UsageError(std::string(e.what()) + "; bounded checks need a logic family");
  }
  PropertyReport r;
  FormulaSet universe = bounded_universe({"p", "q"}, true);
  if (property == "pre-relevance") r = check_pre_relevance(s.core);
  else if (property == "prime") r = check_prime(s);
  else if (property == "pointed") r = check_pointed(s.points, universe, 2);
  else if (property == "cut") r = check_cut(s.core, universe, 2);
  else r = check_contraposition(s.core, s.contrariness, universe, 2);
  r.seed = seed;
  r.notes.push_back("bounded exhaustive check; the seed is unused");
  return r;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured argumentation reasoner and property checker", "argonaut"};
  app.require_subcommand(1);

  std::string kb_path, query, sem_name = "grd", axiom;
  int at_most = -1;
  auto* entails = app.add_subcommand("entails", "Skeptical entailment of a query");
  entails->add_option("kb", kb_path, "Knowledge base file")->required();
  entails->add_option("--query", query, "Formula to test")->required();
  entails->add_option("--sem", sem_name, "Semantics")->check(CLI::IsMember(kSems));
  entails->add_option("--add-axiom", axiom, "Extend the core with this formula as an axiom");
  entails->add_option("--at-most", at_most, "Only count arguments with value <= N")
      ->check(CLI::NonNegativeNumber);

  bool json = false;
  auto* exts = app.add_subcommand("extensions", "Extension family of a semantics");
  exts->add_option("kb", kb_path, "Knowledge base file")->required();
  exts->add_option("--sem", sem_name, "Semantics")->check(CLI::IsMember(kSems));
  exts->add_option("--add-axiom", axiom, "Extend the core with this formula as an axiom");
  exts->add_flag("--json", json, "JSON output");

  std::string dot_path, json_path;
  auto* graph = app.add_subcommand("graph", "Export the attack graph");
  graph->add_option("kb", kb_path, "Knowledge base file")->required();
  graph->add_option("--dot", dot_path, "DOT output path ('-' for stdout)");
  graph->add_option("--json", json_path, "JSON output path ('-' for stdout)");
  graph->add_option("--add-axiom", axiom, "Extend the core with this formula as an axiom");

  std::string property, family_name, phi_text, check_sem;
  std::vector<std::string> random_kv;
  auto* check = app.add_subcommand("check", "Run a property check");
  check->add_option("kb", kb_path, "Knowledge base file");
  auto* random_opt = check->add_option("--random", random_kv, "Random suite: seed=N trials=K")
                         ->expected(0, 2);
  check->add_option("--property", property, "Property")->required()->check(CLI::IsMember(kProperties));
  check->add_option("--family", family_name, "Generator family for --random");
  check->add_option("--phi", phi_text, "Formula for cumulativity checks or the query side");
  check->add_option("--sem", check_sem, "Semantics")->check(CLI::IsMember(kSems));
  check->add_flag("--json", json, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return 0;
    err << app.help();
    return kExitUsage;
  }

  try {
    auto load = [&]() {
      LoadedKB kb = load_kb_file(kb_path);
      print_warnings(kb, err);
      return kb;
    };
    auto setting_for = [&](const LoadedKB& kb) {
      if (axiom.empty()) return kb.setting;
      return kb.setting.with_axiom(parse_arg_formula(axiom, kb));
    };

    if (entails->parsed()) {
      LoadedKB kb = load();
      Formula phi = parse_arg_formula(query, kb);
      Semantics sem = *parse_semantics(sem_name);
      Setting s = setting_for(kb);
      if (at_most >= 0 && kb.lifting == Lifting::None)
        throw UsageError("--at-most needs a knowledge base with a lifting");
      AttackGraph g = build(kb, s, make_set({phi}));
      for (const auto& w : g.warnings) err << "warning: " << w << "\n";
      std::vector<Extension> family;
      bool entailed;
      if (kb.lifting != Lifting::None) {
        std::optional<Value> bound;
        if (at_most >= 0) bound = static_cast<Value>(at_most);
        auto r = prioritized_entailment(g, phi, sem, bound, kb.pi);
        family = std::move(r.extensions);
        entailed = r.entailed;
      } else {
        auto r = skeptical_entailment(g, phi, sem);
        family = std::move(r.extensions);
        entailed = r.entailed;
      }
      out << (entailed ? "true" : "false") << "\n";
      if (family.empty()) out << "no " << to_string(sem) << " extensions (vacuous)\n";
      Bitset hits = concluding(g, phi);
      for (std::size_t i = 0; i < family.size(); ++i) {
        Bitset in = family[i].members & hits;
        out << "extension " << i << ": ";
        if (in.none()) out << "no argument for " << phi.text() << "\n";
        else out << "a" << in.find_first() << " " << g.arguments[in.find_first()].text() << "\n";
      }
      return 0;
    }

    if (exts->parsed()) {
      LoadedKB kb = load();
      Semantics sem = *parse_semantics(sem_name);
      Setting s = setting_for(kb);
      AttackGraph g = build(kb, s, own_queries(kb, s));
      auto family = extensions(g.digraph, sem);
      if (json) {
        out << export_json(g, {{sem, family}});
        return 0;
      }
      out << to_string(sem) << ": " << family.size() << " extension"
          << (family.size() == 1 ? "" : "s") << "\n";
      for (std::size_t i = 0; i < family.size(); ++i) {
        out << "extension " << i << ":\n";
        for (int id : family[i].ids()) out << "  a" << id << " " << g.arguments[id].text() << "\n";
      }
      return 0;
    }

    if (graph->parsed()) {
      if (dot_path.empty() && json_path.empty()) throw UsageError("graph needs --dot or --json");
      LoadedKB kb = load();
      Setting s = setting_for(kb);
      AttackGraph g = build(kb, s, own_queries(kb, s));
      if (!dot_path.empty()) write_to(dot_path, export_dot(g), out);
      if (!json_path.empty()) {
        ExtensionFamilies fams;
        for (Semantics sem : {Semantics::Grd, Semantics::Prf, Semantics::Stb})
          fams[sem] = extensions(g.digraph, sem);
        write_to(json_path, export_json(g, fams), out);
      }
      return 0;
    }

    // check
    const bool random = random_opt->count() > 0;
    if (random == !kb_path.empty()) throw UsageError("check needs exactly one of <kb> or --random");
    PropertyReport r;
    if (random) {
      if (!phi_text.empty()) throw UsageError("--phi is only meaningful with a knowledge base");
      r = check_random(random_kv, property, family_name, check_sem);
    } else {
      if (!family_name.empty()) throw UsageError("--family is only meaningful with --random");
      LoadedKB kb = load();
      std::optional<Formula> phi;
      if (!phi_text.empty()) phi = parse_arg_formula(phi_text, kb);
      Semantics sem = check_sem.empty() ? Semantics::Grd : *parse_semantics(check_sem);
      r = check_kb(kb, property, phi, sem);
    }
    out << (json ? report_json(r) : r.text());
    return exit_code({r});
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << kb_path << ": " << e.what() << "\n";
    return kExitKb;
  } catch (const KbError& e) {
    err << kb_path << ": " << e.what() << "\n";
    return kExitKb;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitKb;
  } catch (const PreconditionError& e) {
    err << "precondition not met: " << e.what() << "\n";
    return kExitKb;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitSoftware;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitSoftware;
  }
}

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"argonaut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace argonaut
