#include "argonaut/formula.hpp"

#include <algorithm>
#include <set>

namespace argonaut {

struct Node {
  Kind kind = Kind::Top;
  std::string name;
  std::vector<Formula> kids;
  RuleHandle rule;
  Value label = 0;
  std::string text;
  std::vector<std::string> atoms;
  std::size_t hash = 0;
  int depth = 0;
};

namespace {

std::vector<std::string> merge_atoms(const std::vector<Formula>& kids) {
  std::vector<std::string> out;
  for (const auto& k : kids) {
    std::vector<std::string> tmp;
    std::set_union(out.begin(), out.end(), k.atoms().begin(), k.atoms().end(),
                   std::back_inserter(tmp));
    out.swap(tmp);
  }
  return out;
}

int max_depth(const std::vector<Formula>& kids) {
  int d = 0;
  for (const auto& k : kids) d = std::max(d, k.depth());
  return d;
}

std::shared_ptr<Node> finish(std::shared_ptr<Node> n) {
  n->hash = std::hash<std::string>{}(n->text);
  return n;
}

std::shared_ptr<Node> binary(Kind k, const char* op, Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->text = "(" + a.text() + " " + op + " " + b.text() + ")";
  n->kids = {std::move(a), std::move(b)};
  n->atoms = merge_atoms(n->kids);
  n->depth = 1 + max_depth(n->kids);
  return finish(n);
}

const std::shared_ptr<const Node>& top_node() {
  static const std::shared_ptr<const Node> n = [] {
    auto m = std::make_shared<Node>();
    m->kind = Kind::Top;
    m->text = "top";
    return std::shared_ptr<const Node>(finish(m));
  }();
  return n;
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::top() { return Formula(top_node()); }

Formula Formula::bot() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bot;
    n->text = "bot";
    return Formula(finish(n));
  }();
  return f;
}

Formula Formula::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->text = name;
  n->atoms = {name};
  n->name = std::move(name);
  return Formula(finish(n));
}

Formula Formula::neg(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->text = "~" + f.text();
  n->atoms = f.atoms();
  n->depth = 1 + f.depth();
  n->kids = {std::move(f)};
  return Formula(finish(n));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(binary(Kind::And, "&", std::move(a), std::move(b)));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(binary(Kind::Or, "|", std::move(a), std::move(b)));
}
Formula Formula::implies(Formula a, Formula b) {
  return Formula(binary(Kind::Implies, "->", std::move(a), std::move(b)));
}

Formula Formula::rule_name(std::string id, std::vector<std::string> atoms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::RuleName;
  n->text = "n(" + id + ")";
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  n->atoms = std::move(atoms);
  n->name = std::move(id);
  return Formula(finish(n));
}

Formula Formula::rule_lit(std::shared_ptr<const RuleInfo> rule) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::RuleLit;
  n->name = rule->id;
  n->text = rule_text(*rule);
  n->atoms = rule->atoms;
  n->rule = std::move(rule);
  return Formula(finish(n));
}

Formula Formula::oplus(std::vector<Formula> elems) {
  elems = make_set(std::move(elems));
  auto n = std::make_shared<Node>();
  n->kind = Kind::OPlus;
  n->text = "(+";
  for (const auto& e : elems) n->text += " " + e.text();
  n->text += ")";
  n->atoms = merge_atoms(elems);
  n->depth = 1 + max_depth(elems);
  n->kids = std::move(elems);
  return Formula(finish(n));
}

Formula Formula::labeled(Formula base, Value v) {
  const Formula& b = base.base();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Labeled;
  n->text = b.text() + " @ " + std::to_string(v);
  n->atoms = b.atoms();
  n->depth = b.depth();
  n->label = v;
  n->kids = {b};
  return Formula(finish(n));
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const std::vector<Formula>& Formula::children() const { return node_->kids; }
const RuleInfo* Formula::rule() const { return node_->rule.get(); }
Value Formula::label() const { return node_->label; }
const std::string& Formula::text() const { return node_->text; }
const std::vector<std::string>& Formula::atoms() const { return node_->atoms; }
std::size_t Formula::hash() const { return node_->hash; }
int Formula::depth() const { return node_->depth; }
const Formula& Formula::base() const {
  return node_->kind == Kind::Labeled ? node_->kids[0] : *this;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->hash == b.node_->hash && a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  int c = a.node_->text.compare(b.node_->text);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RuleHandle make_rule(std::string id, RuleKind kind, std::vector<Formula> body,
                     Formula head, std::optional<Value> value) {
  auto r = std::make_shared<RuleInfo>();
  r->id = std::move(id);
  r->kind = kind;
  r->body = std::move(body);
  r->head = std::move(head);
  r->value = value;
  std::vector<Formula> all = r->body;
  all.push_back(r->head);
  r->atoms = atoms(all);
  r->atoms.push_back("#" + r->id);
  std::sort(r->atoms.begin(), r->atoms.end());
  r->atoms.erase(std::unique(r->atoms.begin(), r->atoms.end()), r->atoms.end());
  return r;
}

Formula rule_formula(const RuleHandle& r) { return Formula::rule_lit(r); }
Formula name_formula(const RuleHandle& r) { return Formula::rule_name(r->id, r->atoms); }

std::string rule_text(const RuleInfo& r) {
  std::string s = "[" + r.id + ":";
  for (std::size_t i = 0; i < r.body.size(); ++i)
    s += (i ? ", " : " ") + r.body[i].text();
  s += r.kind == RuleKind::Strict ? " -> " : " => ";
  s += r.head.text() + "]";
  return s;
}

FormulaSet make_set(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FormulaSet set_minus(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FormulaSet set_with(const FormulaSet& a, const Formula& f) {
  auto it = std::lower_bound(a.begin(), a.end(), f);
  if (it != a.end() && *it == f) return a;
  FormulaSet out = a;
  out.insert(out.begin() + (it - a.begin()), f);
  return out;
}

FormulaSet set_without(const FormulaSet& a, const Formula& f) {
  FormulaSet out;
  out.reserve(a.size());
  for (const auto& x : a)
    if (!(x == f)) out.push_back(x);
  return out;
}

bool set_contains(const FormulaSet& s, const Formula& f) {
  return std::binary_search(s.begin(), s.end(), f);
}

bool set_subset(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FormulaSet subset_by_mask(const FormulaSet& s, std::uint64_t mask) {
  FormulaSet out;
  for (std::size_t i = 0; i < s.size() && mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(s[i]);
  return out;
}

std::vector<std::string> atoms(std::span<const Formula> fs) {
  std::set<std::string> acc;
  for (const auto& f : fs) acc.insert(f.atoms().begin(), f.atoms().end());
  return {acc.begin(), acc.end()};
}

bool disjoint(std::span<const Formula> s1, std::span<const Formula> s2) {
  auto a = atoms(s1);
  auto b = atoms(s2);
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

Formula conj_all(const FormulaSet& s) {
  if (s.empty()) return Formula::top();
  Formula acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = Formula::conj(acc, s[i]);
  return acc;
}

std::string set_text(const FormulaSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].text();
  return out + "}";
}

}  // namespace argonaut
