#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "argonaut/contrariness.hpp"
#include "argonaut/core.hpp"
#include "argonaut/graph.hpp"

// Data-parallel hot loops. Each kernel has a serial and an OpenMP path that
// must return identical results; the serial path is the test reference.
namespace argonaut::kernels {

enum class Exec { Serial, Parallel };

// Runs body(i) for i in [0, n). Exceptions from any iteration are rethrown.
void for_each_index(std::size_t n, Exec exec, const std::function<void(std::size_t)>& body);

// holds table: row s is empty when the core rejects supports[s] outright,
// otherwise one flag per conclusion.
std::vector<std::vector<char>> candidate_table(const Core& core,
                                               const std::vector<FormulaSet>& supports,
                                               const FormulaSet& conclusions, Exec exec);

// For each point p, the set of conclusion indices c with conclusions[c] ∈ ‾p.
std::vector<Bitset> contrary_columns(const FormulaSet& conclusions, const FormulaSet& points,
                                     const ContrarinessSpec& spec, Exec exec);

// Masks of all complete extensions by subset enumeration (n <= 30).
std::vector<std::uint64_t> complete_masks(const Digraph& g, Exec exec);
// Masks of all admissible sets by subset enumeration (n <= 30).
std::vector<std::uint64_t> admissible_masks(const Digraph& g, Exec exec);

// Flag per subset mask of `theta`: the subset is directly inconsistent.
std::vector<char> direct_inconsistency(const Core& core, const ContrarinessSpec& c,
                                       const FormulaSet& theta, Exec exec);

}  // namespace argonaut::kernels
