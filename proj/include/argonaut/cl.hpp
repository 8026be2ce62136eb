#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argonaut/formula.hpp"

namespace argonaut {

// Classical propositional logic by exhaustive valuation. Rule names, rule
// literals and ⊕-terms are opaque propositional variables; labels are ignored.
inline constexpr std::size_t kClAtomCap = 16;

// Truth table over a fixed variable list: bit v is the value under valuation v.
class ValuationSpace {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit ValuationSpace(std::vector<std::string> vars);
  static ValuationSpace over(std::span<const Formula> fs);

  std::size_t num_vars() const { return vars_.size(); }
  std::size_t words() const { return words_; }
  Bits eval(const Formula& f) const;
  Bits ones() const;

 private:
  Bits var_bits(std::size_t i) const;
  std::vector<std::string> vars_;
  std::size_t words_;
  Bits full_;
};

std::vector<std::string> cl_vars(std::span<const Formula> fs);
bool cl_entails(std::span<const Formula> gamma, const Formula& phi);
bool cl_satisfiable(std::span<const Formula> gamma);
bool cl_tautology(const Formula& f);
bool cl_equivalent(const Formula& a, const Formula& b);

}  // namespace argonaut
