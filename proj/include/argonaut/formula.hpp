#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace argonaut {

using Value = std::uint32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

enum class Kind : std::uint8_t {
  Top,
  Bot,
  Atom,
  Not,
  And,
  Or,
  Implies,
  RuleName,
  RuleLit,
  OPlus,
  Labeled
};

enum class RuleKind : std::uint8_t { Strict, Defeasible };

struct Node;
struct RuleInfo;

// Immutable handle. Equality and ordering go through the canonical text,
// which is injective on well-formed formulas.
class Formula {
 public:
  Formula();  // top

  static Formula top();
  static Formula bot();
  static Formula atom(std::string name);
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula rule_name(std::string id, std::vector<std::string> atoms);
  static Formula rule_lit(std::shared_ptr<const RuleInfo> rule);
  static Formula oplus(std::vector<Formula> elems);
  static Formula labeled(Formula base, Value v);

  Kind kind() const;
  const std::string& name() const;  // atom name or rule id
  const std::vector<Formula>& children() const;
  const RuleInfo* rule() const;  // RuleLit only
  Value label() const;           // Labeled only
  const std::string& text() const;
  const std::vector<std::string>& atoms() const;  // sorted, unique
  std::size_t hash() const;
  int depth() const;

  bool is_atom() const { return kind() == Kind::Atom; }
  bool is_neg() const { return kind() == Kind::Not; }
  // Strips one Labeled wrapper.
  const Formula& base() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct RuleInfo {
  std::string id;
  RuleKind kind = RuleKind::Strict;
  std::vector<Formula> body;
  Formula head;
  std::optional<Value> value;
  std::vector<std::string> atoms;  // synthetic "#id" plus atoms of body/head
};

using RuleHandle = std::shared_ptr<const RuleInfo>;

RuleHandle make_rule(std::string id, RuleKind kind, std::vector<Formula> body,
                     Formula head, std::optional<Value> value = std::nullopt);
Formula rule_formula(const RuleHandle& r);  // RuleLit
Formula name_formula(const RuleHandle& r);  // RuleName n(id)
std::string rule_text(const RuleInfo& r);

// Sorted, duplicate-free vector; the canonical set representation.
using FormulaSet = std::vector<Formula>;

FormulaSet make_set(std::vector<Formula> fs);
FormulaSet set_union(const FormulaSet& a, const FormulaSet& b);
FormulaSet set_minus(const FormulaSet& a, const FormulaSet& b);
FormulaSet set_with(const FormulaSet& a, const Formula& f);
FormulaSet set_without(const FormulaSet& a, const Formula& f);
bool set_contains(const FormulaSet& s, const Formula& f);
bool set_subset(const FormulaSet& a, const FormulaSet& b);
// Elements of s selected by the bits of mask (bit i = s[i]).
FormulaSet subset_by_mask(const FormulaSet& s, std::uint64_t mask);

std::vector<std::string> atoms(std::span<const Formula> fs);
bool disjoint(std::span<const Formula> s1, std::span<const Formula> s2);

// Left-nested conjunction over the canonical order; empty -> top.
Formula conj_all(const FormulaSet& s);
std::string set_text(const FormulaSet& s);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Formula text parser (the DSL's formula grammar). n(<id>) is resolved
// through the callback; without one it is a syntax error.
using RuleNameResolver = std::function<std::optional<Formula>(const std::string&)>;

struct ParseError : Error {
  ParseError(const std::string& msg, int line, int col);
  int line;
  int col;
};

Formula parse_formula(std::string_view text, const RuleNameResolver& resolve = {},
                      int line = 1, int col_offset = 0);

}  // namespace argonaut

template <>
struct std::hash<argonaut::Formula> {
  std::size_t operator()(const argonaut::Formula& f) const { return f.hash(); }
};
