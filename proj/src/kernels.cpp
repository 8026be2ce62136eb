#include "argonaut/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace argonaut::kernels {

void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body) {
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr err;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(argonaut_kernel_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

std::vector<std::vector<char>> candidate_table(const Core& core,
                                               const std::vector<FormulaSet>& supports,
                                               const FormulaSet& conclusions, Exec exec) {
  std::vector<std::vector<char>> table(supports.size());
  for_each_index(supports.size(), exec, [&](std::size_t s) {
    if (!core.admits_support(supports[s])) return;
    table[s] = core.holds_batch(supports[s], conclusions);
  });
  return table;
}

std::vector<Bitset> contrary_columns(const FormulaSet& conclusions, const FormulaSet& points,
                                     const ContrarinessSpec& spec, Exec exec) {
  std::vector<Bitset> cols(points.size(), Bitset(conclusions.size()));
  for_each_index(points.size(), exec, [&](std::size_t p) {
    for (std::size_t c = 0; c < conclusions.size(); ++c)
      if (is_contrary(conclusions[c], points[p], spec)) cols[p].set(c);
  });
  return cols;
}

namespace {

struct Masks {
  std::vector<std::uint64_t> att;  // attackers of each node
  std::vector<std::uint64_t> tgt;  // targets of each node
};

Masks to_masks(const Digraph& g) {
  if (g.n > 30) throw CapExceeded("subset enumeration over more than 30 arguments");
  Masks m{std::vector<std::uint64_t>(g.n, 0), std::vector<std::uint64_t>(g.n, 0)};
  for (int b = 0; b < g.n; ++b)
    for (int a = 0; a < g.n; ++a)
      if (g.attackers[b].test(a)) {
        m.att[b] |= std::uint64_t{1} << a;
        m.tgt[a] |= std::uint64_t{1} << b;
      }
  return m;
}

// 0 = not admissible, 1 = admissible, 2 = complete.
int classify(const Masks& m, int n, std::uint64_t set) {
  std::uint64_t hit = 0;
  for (std::uint64_t rest = set; rest; rest &= rest - 1) {
    int i = __builtin_ctzll(rest);
    if (m.att[i] & set) return 0;
    hit |= m.tgt[i];
  }
  std::uint64_t defended = 0;
  for (int a = 0; a < n; ++a)
    if ((m.att[a] & ~hit) == 0) defended |= std::uint64_t{1} << a;
  if ((set & ~defended) != 0) return 0;
  return defended == set ? 2 : 1;
}

std::vector<std::uint64_t> enumerate(const Digraph& g, Exec exec, int min_class) {
  Masks m = to_masks(g);
  const std::uint64_t total = std::uint64_t{1} << g.n;
  std::vector<std::uint64_t> out;
  if (exec == Exec::Serial) {
    for (std::uint64_t s = 0; s < total; ++s)
      if (classify(m, g.n, s) >= min_class) out.push_back(s);
    return out;
  }
  std::vector<std::vector<std::uint64_t>> local(omp_get_max_threads());
  const auto count = static_cast<long long>(total);
#pragma omp parallel
  {
    auto& mine = local[omp_get_thread_num()];
#pragma omp for schedule(static, 4096)
    for (long long s = 0; s < count; ++s)
      if (classify(m, g.n, static_cast<std::uint64_t>(s)) >= min_class)
        mine.push_back(static_cast<std::uint64_t>(s));
  }
  for (auto& l : local) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::uint64_t> complete_masks(const Digraph& g, Exec exec) {
  return enumerate(g, exec, 2);
}

std::vector<std::uint64_t> admissible_masks(const Digraph& g, Exec exec) {
  return enumerate(g, exec, 1);
}

std::vector<char> direct_inconsistency(const Core& core, const ContrarinessSpec& c,
                                       const FormulaSet& theta, Exec exec) {
  if (theta.size() > 20) throw CapExceeded("consistency table over more than 20 formulas");
  const std::size_t total = std::size_t{1} << theta.size();
  std::vector<char> flags(total, 0);
  for_each_index(total, exec, [&](std::size_t mask) {
    flags[mask] = directly_inconsistent(core, c, subset_by_mask(theta, mask));
  });
  return flags;
}

}  // namespace argonaut::kernels
