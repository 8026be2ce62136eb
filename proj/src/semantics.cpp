#include "argonaut/semantics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace argonaut {

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::Adm: return "adm";
    case Semantics::Cmp: return "cmp";
    case Semantics::Grd: return "grd";
    case Semantics::Prf: return "prf";
    case Semantics::Stb: return "stb";
  }
  return "grd";
}

std::optional<Semantics> parse_semantics(const std::string& s) {
  for (auto v : {Semantics::Adm, Semantics::Cmp, Semantics::Grd, Semantics::Prf, Semantics::Stb})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::vector<int> Extension::ids() const {
  std::vector<int> out;
  for (auto i = members.find_first(); i != Bitset::npos; i = members.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

bool conflict_free(const Digraph& g, const Bitset& ids) {
  for (auto a = ids.find_first(); a != Bitset::npos; a = ids.find_next(a))
    if (g.targets[a].intersects(ids)) return false;
  return true;
}

namespace {

Bitset attacked_by(const Digraph& g, const Bitset& ids) {
  Bitset hit(g.n);
  for (auto a = ids.find_first(); a != Bitset::npos; a = ids.find_next(a)) hit |= g.targets[a];
  return hit;
}

}  // namespace

bool defends(const Digraph& g, const Bitset& ids, int a) {
  return g.attackers[a].is_subset_of(attacked_by(g, ids));
}

Bitset defended_closure(const Digraph& g, const Bitset& ids) {
  Bitset hit = attacked_by(g, ids);
  Bitset out(g.n);
  for (int a = 0; a < g.n; ++a)
    if (g.attackers[a].is_subset_of(hit)) out.set(a);
  return out;
}

Extension grounded(const Digraph& g) {
  Bitset cur(g.n);
  for (;;) {
    Bitset next = defended_closure(g, cur);
    if (next == cur) return {Semantics::Grd, cur};
    cur = std::move(next);
  }
}

namespace {

Bitset from_mask(int n, std::uint64_t m) {
  Bitset b(n);
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) b.set(i);
  return b;
}

enum Label : signed char { kNone = -1, kIn = 0, kOut = 1, kUndec = 2 };

// Backtracking search for complete labellings. Each branch assigns one node
// and propagates the local labelling conditions to a fixpoint.
class LabellingSearch {
 public:
  explicit LabellingSearch(const Digraph& g) : g_(g) {
    for (int b = 0; b < g.n; ++b) {
      std::vector<int> at;
      for (auto a = g.attackers[b].find_first(); a != Bitset::npos;
           a = g.attackers[b].find_next(a))
        at.push_back(static_cast<int>(a));
      att_.push_back(std::move(at));
    }
  }

  std::vector<Bitset> run() {
    std::vector<Label> lab(g_.n, kNone);
    Extension gr = grounded(g_);
    Bitset out = attacked_by(g_, gr.members);
    for (int i = 0; i < g_.n; ++i) {
      if (gr.members.test(i)) lab[i] = kIn;
      else if (out.test(i)) lab[i] = kOut;
    }
    if (propagate(lab)) branch(lab);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  bool assign(std::vector<Label>& lab, int x, Label l, bool& changed) {
    if (lab[x] == l) return true;
    if (lab[x] != kNone) return false;
    lab[x] = l;
    changed = true;
    return true;
  }

  bool propagate(std::vector<Label>& lab) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < g_.n; ++x) {
        int in = 0, out = 0, und = 0, none = 0, free_one = -1;
        for (int a : att_[x]) {
          switch (lab[a]) {
            case kIn: ++in; break;
            case kOut: ++out; break;
            case kUndec: ++und; break;
            default: ++none; free_one = a; break;
          }
        }
        const int total = static_cast<int>(att_[x].size());
        if (in > 0 && !assign(lab, x, kOut, changed)) return false;
        if (out == total && !assign(lab, x, kIn, changed)) return false;
        switch (lab[x]) {
          case kIn:
            for (int a : att_[x])
              if (!assign(lab, a, kOut, changed)) return false;
            break;
          case kOut:
            if (in == 0 && none == 0) return false;
            if (in == 0 && none == 1 && !assign(lab, free_one, kIn, changed)) return false;
            break;
          case kUndec:
            if (und == 0 && none == 0) return false;
            if (und == 0 && none == 1 && !assign(lab, free_one, kUndec, changed)) return false;
            break;
          default: break;
        }
      }
    }
    return true;
  }

  bool valid(const std::vector<Label>& lab) const {
    for (int x = 0; x < g_.n; ++x) {
      bool any_in = false, all_out = true;
      for (int a : att_[x]) {
        any_in |= lab[a] == kIn;
        all_out &= lab[a] == kOut;
      }
      Label want = any_in ? kOut : all_out ? kIn : kUndec;
      if (lab[x] != want) return false;
    }
    return true;
  }

  void branch(std::vector<Label>& lab) {
    int pick = -1;
    for (int i = 0; i < g_.n; ++i)
      if (lab[i] == kNone) {
        pick = i;
        break;
      }
    if (pick < 0) {
      if (valid(lab)) {
        Bitset in(g_.n);
        for (int i = 0; i < g_.n; ++i)
          if (lab[i] == kIn) in.set(i);
        found_.push_back(std::move(in));
      }
      return;
    }
    for (Label l : {kIn, kOut, kUndec}) {
      std::vector<Label> next = lab;
      next[pick] = l;
      if (propagate(next)) branch(next);
    }
  }

  const Digraph& g_;
  std::vector<std::vector<int>> att_;
  std::vector<Bitset> found_;
};

// Maximal admissible sets by branching each undecided node into IN or
// excluded. A branch dies when an attacker of IN can no longer be
// counter-attacked, and is pruned when everything it could still accept lies
// inside a preferred set already found.
class PreferredSearch {
 public:
  explicit PreferredSearch(const Digraph& g)
      : g_(g), in_(g.n), out_(g.n), must_out_(g.n), excluded_(g.n), blank_(g.n) {
    blank_.set();
    for (int i = 0; i < g.n; ++i)
      if (g.attackers[i].test(i)) move(excluded_, i);
  }

  std::vector<Bitset> run() {
    Bitset gr = grounded(g_).members;
    for (auto a = gr.find_first(); a != Bitset::npos; a = gr.find_next(a))
      if (blank_.test(a)) accept(static_cast<int>(a));
    search();
    return std::move(found_);
  }

 private:
  void move(Bitset& to, int x) {
    in_.reset(x);
    out_.reset(x);
    must_out_.reset(x);
    excluded_.reset(x);
    blank_.reset(x);
    to.set(x);
  }

  void accept(int x) {
    move(in_, x);
    const Bitset& t = g_.targets[x];
    for (auto y = t.find_first(); y != Bitset::npos; y = t.find_next(y)) move(out_, static_cast<int>(y));
    Bitset threats = g_.attackers[x] - out_;
    for (auto z = threats.find_first(); z != Bitset::npos; z = threats.find_next(z))
      move(must_out_, static_cast<int>(z));
  }

  bool covered(const Bitset& s) const {
    return std::any_of(found_.begin(), found_.end(), [&](const Bitset& f) { return s.is_subset_of(f); });
  }

  void search() {
    for (;;) {
      for (auto z = must_out_.find_first(); z != Bitset::npos; z = must_out_.find_next(z))
        if (!g_.attackers[z].intersects(blank_)) return;
      if (covered(in_ | blank_)) return;
      if (blank_.none()) break;
      // Prefer a node that counter-attacks a pending threat.
      int pick = -1;
      for (auto z = must_out_.find_first(); z != Bitset::npos && pick < 0; z = must_out_.find_next(z)) {
        Bitset c = g_.attackers[z] & blank_;
        pick = static_cast<int>(c.find_first());
      }
      if (pick < 0) pick = static_cast<int>(blank_.find_first());
      State saved = save();
      accept(pick);
      search();
      restore(saved);
      move(excluded_, pick);
    }
    if (must_out_.any() || covered(in_)) return;
    std::erase_if(found_, [&](const Bitset& f) { return f.is_subset_of(in_); });
    found_.push_back(in_);
  }

  struct State {
    Bitset in, out, must_out, excluded, blank;
  };
  State save() const { return {in_, out_, must_out_, excluded_, blank_}; }
  void restore(const State& s) {
    in_ = s.in;
    out_ = s.out;
    must_out_ = s.must_out;
    excluded_ = s.excluded;
    blank_ = s.blank;
  }

  const Digraph& g_;
  Bitset in_, out_, must_out_, excluded_, blank_;
  std::vector<Bitset> found_;
};

bool use_enumeration(const Digraph& g, const SemanticsOptions& opts) {
  switch (opts.backend) {
    case Backend::Enumerate:
      if (g.n > opts.enumerate_cap)
        throw CapExceeded("graph has " + std::to_string(g.n) +
                          " arguments, above the enumeration cap of " +
                          std::to_string(opts.enumerate_cap));
      return true;
    case Backend::Labelling: return false;
    case Backend::Auto:
      if (g.n <= opts.enumerate_cap) return true;
      if (!opts.search_fallback)
        throw CapExceeded("graph has " + std::to_string(g.n) +
                          " arguments and search fallback is disabled");
      return false;
  }
  return true;
}

std::vector<Extension> tag(std::vector<Bitset> sets, Semantics sem) {
  std::sort(sets.begin(), sets.end());
  std::vector<Extension> out;
  for (auto& s : sets) out.push_back({sem, std::move(s)});
  return out;
}

}  // namespace

std::vector<Extension> admissible_all(const Digraph& g, const SemanticsOptions& opts) {
  if (g.n > std::min(opts.enumerate_cap, 30))
    throw CapExceeded("admissible sets are only enumerated up to the enumeration cap");
  std::vector<Bitset> sets;
  for (auto m : kernels::admissible_masks(g, opts.exec)) sets.push_back(from_mask(g.n, m));
  return tag(std::move(sets), Semantics::Adm);
}

TwinQuotient twin_quotient(const Digraph& g) {
  TwinQuotient q;
  std::map<Bitset, int> seen;
  q.cls.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    auto [it, fresh] = seen.emplace(g.attackers[i], static_cast<int>(q.members.size()));
    if (fresh) q.members.emplace_back();
    q.cls[i] = it->second;
    q.members[it->second].push_back(i);
  }
  const int k = static_cast<int>(q.members.size());
  std::vector<Edge> edges;
  for (int d = 0; d < k; ++d) {
    const Bitset& att = g.attackers[q.members[d].front()];
    std::vector<char> from(k, 0);
    for (auto a = att.find_first(); a != Bitset::npos; a = att.find_next(a)) from[q.cls[a]] = 1;
    for (int c = 0; c < k; ++c)
      if (from[c]) edges.emplace_back(c, d);
  }
  q.graph = Digraph::from_edges(k, edges);
  return q;
}

std::vector<Extension> complete_all(const Digraph& g, const SemanticsOptions& opts) {
  if (opts.compress_twins) {
    TwinQuotient q = twin_quotient(g);
    if (q.graph.n < g.n) {
      SemanticsOptions inner = opts;
      inner.compress_twins = false;
      std::vector<Bitset> sets;
      for (const auto& e : complete_all(q.graph, inner)) {
        Bitset b(g.n);
        for (auto c = e.members.find_first(); c != Bitset::npos; c = e.members.find_next(c))
          for (int i : q.members[c]) b.set(i);
        sets.push_back(std::move(b));
      }
      return tag(std::move(sets), Semantics::Cmp);
    }
  }
  std::vector<Bitset> sets;
  if (use_enumeration(g, opts)) {
    for (auto m : kernels::complete_masks(g, opts.exec)) sets.push_back(from_mask(g.n, m));
  } else {
    sets = LabellingSearch(g).run();
  }
  return tag(std::move(sets), Semantics::Cmp);
}

std::vector<Extension> preferred_all(const Digraph& g, const SemanticsOptions& opts) {
  if (opts.compress_twins) {
    TwinQuotient q = twin_quotient(g);
    if (q.graph.n < g.n) {
      SemanticsOptions inner = opts;
      inner.compress_twins = false;
      std::vector<Bitset> sets;
      for (const auto& e : preferred_all(q.graph, inner)) {
        Bitset b(g.n);
        for (auto c = e.members.find_first(); c != Bitset::npos; c = e.members.find_next(c))
          for (int i : q.members[c]) b.set(i);
        sets.push_back(std::move(b));
      }
      return tag(std::move(sets), Semantics::Prf);
    }
  }
  std::vector<Bitset> out;
  if (opts.backend == Backend::Enumerate && use_enumeration(g, opts)) {
    auto cmp = complete_all(g, opts);
    for (std::size_t i = 0; i < cmp.size(); ++i) {
      bool maximal = true;
      for (std::size_t j = 0; j < cmp.size() && maximal; ++j)
        if (i != j && cmp[i].members.is_proper_subset_of(cmp[j].members)) maximal = false;
      if (maximal) out.push_back(cmp[i].members);
    }
  } else {
    out = PreferredSearch(g).run();
  }
  return tag(std::move(out), Semantics::Prf);
}

// Every stable extension is preferred.
std::vector<Extension> stable_all(const Digraph& g, const SemanticsOptions& opts) {
  std::vector<Bitset> out;
  for (auto& e : preferred_all(g, opts)) {
    Bitset covered = e.members | attacked_by(g, e.members);
    if (covered.all()) out.push_back(e.members);
  }
  return tag(std::move(out), Semantics::Stb);
}

std::vector<Extension> extensions(const Digraph& g, Semantics sem, const SemanticsOptions& opts) {
  switch (sem) {
    case Semantics::Adm: return admissible_all(g, opts);
    case Semantics::Cmp: return complete_all(g, opts);
    case Semantics::Grd: return {grounded(g)};
    case Semantics::Prf: return preferred_all(g, opts);
    case Semantics::Stb: return stable_all(g, opts);
  }
  return {};
}

Bitset concluding(const AttackGraph& g, const Formula& phi) {
  Bitset b(g.arguments.size());
  for (const auto& a : g.arguments)
    if (a.conclusion == phi) b.set(a.id);
  return b;
}

Entailment skeptical_entailment(const AttackGraph& g, const Formula& phi, Semantics sem,
                                const SemanticsOptions& opts) {
  Entailment r;
  r.extensions = extensions(g.digraph, sem, opts);
  Bitset hits = concluding(g, phi);
  r.vacuous = r.extensions.empty();
  r.entailed = true;
  for (const auto& e : r.extensions) {
    std::vector<int> w;
    Bitset in = e.members & hits;
    for (auto i = in.find_first(); i != Bitset::npos; i = in.find_next(i))
      w.push_back(static_cast<int>(i));
    if (w.empty()) r.entailed = false;
    r.witnesses.push_back(std::move(w));
  }
  if (sem == Semantics::Cmp) {
    Bitset gr = grounded(g.digraph).members;
    if (gr.intersects(hits) != r.entailed)
      throw std::logic_error("complete and grounded skeptical answers differ");
  }
  return r;
}

bool skeptical_entails(const AttackGraph& g, const Formula& phi, Semantics sem,
                       const SemanticsOptions& opts) {
  return skeptical_entailment(g, phi, sem, opts).entailed;
}

bool skeptical_entails(const Setting& setting, const FormulaSet& premises, const Formula& phi,
                       Semantics sem, const BuildOptions& build, const SemanticsOptions& opts) {
  AttackGraph g = build_graph(setting, premises, make_set({phi}), build);
  return skeptical_entails(g, phi, sem, opts);
}

}  // namespace argonaut
