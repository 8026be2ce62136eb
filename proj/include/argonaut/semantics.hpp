#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argonaut/engine.hpp"
#include "argonaut/graph.hpp"

namespace argonaut {

enum class Semantics { Adm, Cmp, Grd, Prf, Stb };

std::string to_string(Semantics s);
std::optional<Semantics> parse_semantics(const std::string& s);

struct Extension {
  Semantics sem = Semantics::Cmp;
  Bitset members;

  std::vector<int> ids() const;
  bool operator==(const Extension& o) const { return sem == o.sem && members == o.members; }
};

enum class Backend { Auto, Enumerate, Labelling };

struct SemanticsOptions {
  Backend backend = Backend::Auto;
  int enumerate_cap = 24;  // Auto switches to labelling search above this
  bool search_fallback = true;
  kernels::Exec exec = kernels::Exec::Parallel;
  // Arguments with equal attacker sets share a label in every complete
  // labelling, so complete extensions are computed on the quotient graph.
  bool compress_twins = true;
};

// Quotient by equal attacker sets. cls[i] is the class of node i; class c
// attacks class d iff some member of c attacks a member of d.
struct TwinQuotient {
  Digraph graph;
  std::vector<int> cls;
  std::vector<std::vector<int>> members;
};
TwinQuotient twin_quotient(const Digraph& g);

bool conflict_free(const Digraph& g, const Bitset& ids);
bool defends(const Digraph& g, const Bitset& ids, int a);
Bitset defended_closure(const Digraph& g, const Bitset& ids);

Extension grounded(const Digraph& g);
std::vector<Extension> admissible_all(const Digraph& g, const SemanticsOptions& opts = {});
std::vector<Extension> complete_all(const Digraph& g, const SemanticsOptions& opts = {});
std::vector<Extension> preferred_all(const Digraph& g, const SemanticsOptions& opts = {});
std::vector<Extension> stable_all(const Digraph& g, const SemanticsOptions& opts = {});
std::vector<Extension> extensions(const Digraph& g, Semantics sem,
                                  const SemanticsOptions& opts = {});

struct Entailment {
  bool entailed = false;
  bool vacuous = false;  // the extension family is empty
  std::vector<Extension> extensions;
  // Per extension, the ids of members concluding the query (empty = counterexample).
  std::vector<std::vector<int>> witnesses;
};

Entailment skeptical_entailment(const AttackGraph& g, const Formula& phi, Semantics sem,
                                const SemanticsOptions& opts = {});
bool skeptical_entails(const AttackGraph& g, const Formula& phi, Semantics sem,
                       const SemanticsOptions& opts = {});
bool skeptical_entails(const Setting& setting, const FormulaSet& premises, const Formula& phi,
                       Semantics sem, const BuildOptions& build = {},
                       const SemanticsOptions& opts = {});

// Sets of ids holding an argument concluding phi, one bit per argument.
Bitset concluding(const AttackGraph& g, const Formula& phi);

}  // namespace argonaut
