#include "argonaut/cl.hpp"

#include <algorithm>
#include <set>

namespace argonaut {

namespace {

constexpr std::uint64_t kPattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
      out.insert(f.name());
      return;
    case Kind::RuleName:
    case Kind::RuleLit:
    case Kind::OPlus:
      out.insert(f.text());
      return;
    case Kind::Labeled:
      collect(f.base(), out);
      return;
    default:
      for (const auto& k : f.children()) collect(k, out);
  }
}

}  // namespace

std::vector<std::string> cl_vars(std::span<const Formula> fs) {
  std::set<std::string> acc;
  for (const auto& f : fs) collect(f, acc);
  return {acc.begin(), acc.end()};
}

ValuationSpace::ValuationSpace(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kClAtomCap)
    throw CapExceeded("classical check over " + std::to_string(vars_.size()) +
                      " atoms exceeds the cap of " + std::to_string(kClAtomCap));
  std::size_t n = vars_.size();
  words_ = n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  full_.assign(words_, ~0ull);
  if (n < 6) full_[0] = (1ull << (1u << n)) - 1;
}

ValuationSpace ValuationSpace::over(std::span<const Formula> fs) {
  return ValuationSpace(cl_vars(fs));
}

ValuationSpace::Bits ValuationSpace::ones() const { return full_; }

ValuationSpace::Bits ValuationSpace::var_bits(std::size_t i) const {
  Bits b(words_);
  for (std::size_t w = 0; w < words_; ++w) {
    if (i < 6)
      b[w] = kPattern[i];
    else
      b[w] = ((w >> (i - 6)) & 1) ? ~0ull : 0ull;
    b[w] &= full_[w];
  }
  return b;
}

ValuationSpace::Bits ValuationSpace::eval(const Formula& f) const {
  switch (f.kind()) {
    case Kind::Top:
      return full_;
    case Kind::Bot:
      return Bits(words_, 0);
    case Kind::Atom:
    case Kind::RuleName:
    case Kind::RuleLit:
    case Kind::OPlus: {
      const std::string& key = f.kind() == Kind::Atom ? f.name() : f.text();
      auto it = std::lower_bound(vars_.begin(), vars_.end(), key);
      if (it == vars_.end() || *it != key)
        throw PreconditionError("variable '" + key + "' missing from valuation space");
      return var_bits(static_cast<std::size_t>(it - vars_.begin()));
    }
    case Kind::Labeled:
      return eval(f.base());
    case Kind::Not: {
      Bits b = eval(f.children()[0]);
      for (std::size_t w = 0; w < words_; ++w) b[w] = ~b[w] & full_[w];
      return b;
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies: {
      Bits a = eval(f.children()[0]);
      Bits b = eval(f.children()[1]);
      for (std::size_t w = 0; w < words_; ++w) {
        if (f.kind() == Kind::And)
          a[w] &= b[w];
        else if (f.kind() == Kind::Or)
          a[w] |= b[w];
        else
          a[w] = (~a[w] | b[w]) & full_[w];
      }
      return a;
    }
  }
  return full_;
}

bool cl_entails(std::span<const Formula> gamma, const Formula& phi) {
  std::vector<Formula> all(gamma.begin(), gamma.end());
  all.push_back(phi);
  ValuationSpace vs = ValuationSpace::over(all);
  ValuationSpace::Bits models = vs.ones();
  for (const auto& g : gamma) {
    auto b = vs.eval(g);
    for (std::size_t w = 0; w < models.size(); ++w) models[w] &= b[w];
  }
  auto p = vs.eval(phi);
  for (std::size_t w = 0; w < models.size(); ++w)
    if (models[w] & ~p[w]) return false;
  return true;
}

bool cl_satisfiable(std::span<const Formula> gamma) {
  return !cl_entails(gamma, Formula::bot());
}

bool cl_tautology(const Formula& f) { return cl_entails({}, f); }

bool cl_equivalent(const Formula& a, const Formula& b) {
  return cl_entails(std::span<const Formula>(&a, 1), b) &&
         cl_entails(std::span<const Formula>(&b, 1), a);
}

}  // namespace argonaut
