#include "argonaut/kb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace argonaut {

KbError::KbError(const std::string& msg, SourcePos p)
    : Error(p.line > 0 ? "line " + std::to_string(p.line) + ", column " + std::to_string(p.col) +
                             ": " + msg
                       : msg),
      pos(p) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

// A slice of the current line with its 0-based start column.
struct Span {
  std::string_view text;
  int off = 0;

  Span trim() const {
    std::size_t b = 0, e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    return {text.substr(b, e - b), off + static_cast<int>(b)};
  }
  Span sub(std::size_t from, std::size_t n = std::string_view::npos) const {
    return {text.substr(from, n), off + static_cast<int>(from)};
  }
  int col() const { return off + 1; }
};

class KbParser {
 public:
  explicit KbParser(std::string_view text) : text_(text) {}

  KnowledgeBaseDoc run() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t nl = text_.find('\n', start);
      std::string_view raw = text_.substr(start, nl == std::string_view::npos ? nl : nl - start);
      ++line_;
      if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      Span s = Span{raw, 0}.trim();
      if (!s.text.empty()) statement(s);
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
    return std::move(doc_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, int col) { throw ParseError(msg, line_, col); }

  Formula formula(Span s) {
    Span t = s.trim();
    if (t.text.empty()) fail("expected a formula", t.col());
    auto resolve = [this](const std::string& id) -> std::optional<Formula> {
      auto it = rules_.find(id);
      if (it == rules_.end()) return std::nullopt;
      return name_formula(it->second);
    };
    return parse_formula(t.text, resolve, line_, t.off);
  }

  // Splits a trailing "[n]" annotation off a span.
  std::optional<Value> value_suffix(Span& s) {
    Span t = s.trim();
    if (t.text.empty() || t.text.back() != ']') return std::nullopt;
    std::size_t open = t.text.rfind('[');
    if (open == std::string_view::npos) fail("unmatched ']'", t.off + static_cast<int>(t.text.size()));
    Span num = t.sub(open + 1, t.text.size() - open - 2).trim();
    Value v = 0;
    auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), v);
    if (num.text.empty() || ec != std::errc() || ptr != num.text.data() + num.text.size())
      fail("expected a natural number", num.col());
    s = t.sub(0, open);
    return v;
  }

  // Splits at top-level occurrences of `sep` (outside parentheses).
  static std::vector<Span> split_top(Span s, std::string_view sep) {
    std::vector<Span> out;
    int depth = 0;
    std::size_t last = 0;
    for (std::size_t i = 0; i < s.text.size(); ++i) {
      char c = s.text[i];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 0 && s.text.substr(i, sep.size()) == sep) {
        out.push_back(s.sub(last, i - last));
        last = i + sep.size();
        i = last - 1;
      }
    }
    out.push_back(s.sub(last));
    return out;
  }

  void statement(Span s) {
    std::size_t sp = 0;
    while (sp < s.text.size() && !is_space(s.text[sp]) && s.text[sp] != ':' && s.text[sp] != '[')
      ++sp;
    std::string_view kw = s.text.substr(0, sp);
    Span rest = s.sub(sp);
    SourcePos pos{line_, s.col()};
    if (kw == "atoms") {
      doc_.atoms_declared = true;
      std::istringstream in{std::string(rest.text)};
      for (std::string a; in >> a;) {
        if (!is_ident(a) || a == "top" || a == "bot" || a == "n")
          fail("invalid atom name '" + a + "'", rest.col());
        doc_.atoms.push_back(a);
      }
    } else if (kw == "premise" || kw == "assumption") {
      auto v = value_suffix(rest);
      Formula f = formula(rest);
      if (kw == "assumption" && !f.is_atom()) fail("an assumption must be an atom", rest.trim().col());
      (kw == "premise" ? doc_.premises : doc_.assumptions).push_back({f, v, pos});
    } else if (kw == "contrary") {
      auto parts = split_top(rest, "=");
      if (parts.size() != 2) fail("expected 'contrary <atom> = <formula>'", rest.col());
      Formula a = formula(parts[0]);
      if (!a.is_atom()) fail("contraries are declared on atoms", parts[0].trim().col());
      doc_.contraries.push_back({a, formula(parts[1]), pos});
    } else if (kw == "strict" || kw == "defeasible") {
      rule(kw == "strict" ? RuleKind::Strict : RuleKind::Defeasible, rest, pos);
    } else if (kw == "setting") {
      setting(rest, pos);
    } else {
      fail("unknown statement '" + std::string(kw) + "'", s.col());
    }
  }

  void rule(RuleKind kind, Span rest, SourcePos pos) {
    std::size_t colon = rest.text.find(':');
    if (colon == std::string_view::npos) fail("expected ':' after the rule id", rest.col());
    Span head_part = rest.sub(0, colon);
    auto value = value_suffix(head_part);
    Span id = head_part.trim();
    if (!is_ident(id.text)) fail("expected a rule id", id.col());
    if (kind == RuleKind::Strict && value) fail("strict rules carry no value", id.col());
    std::string rid(id.text);
    if (rules_.count(rid)) throw KbError("duplicate rule id '" + rid + "'", {line_, id.col()});
    Span body_head = rest.sub(colon + 1);
    const std::string_view arrow = kind == RuleKind::Strict ? "->" : "=>";
    auto sides = split_top(body_head, arrow);
    if (sides.size() < 2)
      fail("expected '" + std::string(arrow) + "'", body_head.col() + static_cast<int>(body_head.text.size()));
    // Everything after the first top-level arrow is the head.
    Span head = body_head.sub(sides[0].text.size() + arrow.size());
    std::vector<Formula> body;
    if (!sides[0].trim().text.empty())
      for (const auto& b : split_top(sides[0], ",")) {
        Formula f = formula(b);
        if (f.kind() != Kind::Top) body.push_back(f);  // ⊤ in a body is always satisfied
      }
    RuleHandle r = make_rule(rid, kind, body, formula(head), value);
    rules_.emplace(rid, r);
    doc_.rules.push_back({r, pos});
  }

  void setting(Span rest, SourcePos pos) {
    if (doc_.setting.present) throw KbError("more than one setting line", pos);
    SettingBlock& b = doc_.setting;
    b.present = true;
    b.pos = pos;
    static const std::map<std::string, std::vector<std::string>> allowed{
        {"core", {"cl", "cl-top", "cl-con", "mcs-cap", "mcs-cup", "aba", "aspic"}},
        {"attack", {"dicodef", "def", "didef", "diucut", "ucut", "native"}},
        {"mode", {"dagger", "ddagger"}},
        {"lifting", {"none", "conclusion", "min", "max", "weakest-link", "max-aba"}},
        {"restrict", {"none", "con", "cl-consistent", "empty-attackers"}},
        {"tracking", {"tracked", "untracked"}},
    };
    std::set<std::string> seen;
    std::size_t i = 0;
    while (i < rest.text.size()) {
      while (i < rest.text.size() && is_space(rest.text[i])) ++i;
      if (i >= rest.text.size()) break;
      std::size_t j = i;
      while (j < rest.text.size() && !is_space(rest.text[j])) ++j;
      Span tok = rest.sub(i, j - i);
      std::size_t eq = tok.text.find('=');
      if (eq == std::string_view::npos) fail("expected key=value", tok.col());
      std::string key(tok.text.substr(0, eq)), val(tok.text.substr(eq + 1));
      auto it = allowed.find(key);
      if (it == allowed.end()) fail("unknown setting key '" + key + "'", tok.col());
      if (std::find(it->second.begin(), it->second.end(), val) == it->second.end())
        fail("invalid value '" + val + "' for " + key, tok.col() + static_cast<int>(eq) + 1);
      if (!seen.insert(key).second) fail("repeated setting key '" + key + "'", tok.col());
      if (key == "core") b.core = val;
      else if (key == "attack") b.attack = val;
      else if (key == "mode") b.mode = val;
      else if (key == "lifting") b.lifting = val;
      else if (key == "restrict") b.restrict = val;
      else b.tracking = val;
      i = j;
    }
  }

  std::string_view text_;
  int line_ = 0;
  KnowledgeBaseDoc doc_;
  std::map<std::string, RuleHandle> rules_;
};

void check_atoms(const KnowledgeBaseDoc& doc, const Formula& f, SourcePos pos) {
  for (const auto& a : f.atoms()) {
    if (!a.empty() && a[0] == '#') continue;  // synthetic rule atoms
    if (std::find(doc.atoms.begin(), doc.atoms.end(), a) == doc.atoms.end())
      throw KbError("undeclared atom '" + a + "'", pos);
  }
}

}  // namespace

KnowledgeBaseDoc parse_kb(std::string_view text) { return KbParser(text).run(); }

LoadedKB load_kb(KnowledgeBaseDoc doc) {
  LoadedKB kb;
  const SettingBlock& sb = doc.setting;
  const std::string& core = sb.core;
  const bool is_aba = core == "aba", is_aspic = core == "aspic";

  for (const auto& p : doc.premises) check_atoms(doc, p.formula, p.pos);
  for (const auto& p : doc.assumptions) check_atoms(doc, p.formula, p.pos);
  for (const auto& c : doc.contraries) {
    check_atoms(doc, c.contrary, c.pos);
    bool declared = std::any_of(doc.assumptions.begin(), doc.assumptions.end(),
                                [&](const KbFormula& a) { return a.formula == c.assumption; });
    if (!declared)
      throw KbError("contrary of '" + c.assumption.text() + "', which is not an assumption", c.pos);
  }
  for (const auto& r : doc.rules) {
    for (const auto& b : r.rule->body) check_atoms(doc, b, r.pos);
    check_atoms(doc, r.rule->head, r.pos);
  }

  auto reject = [&](bool bad, const std::string& what, SourcePos pos) {
    if (bad) throw KbError(what + " not allowed with core=" + core, pos);
  };
  if (!is_aba) {
    if (!doc.assumptions.empty()) reject(true, "assumptions are", doc.assumptions[0].pos);
    if (!doc.contraries.empty()) reject(true, "contrary declarations are", doc.contraries[0].pos);
  }
  if (is_aba && !doc.premises.empty()) reject(true, "premises are", doc.premises[0].pos);
  if (!is_aba && !is_aspic && !doc.rules.empty()) reject(true, "rules are", doc.rules[0].pos);
  for (const auto& r : doc.rules)
    if (is_aba && r.rule->kind == RuleKind::Defeasible)
      reject(true, "defeasible rules are", r.pos);

  const std::string attack = sb.attack.value_or(is_aba || is_aspic ? "native" : "dicodef");
  if ((is_aba || is_aspic) && attack != "native")
    throw KbError("core=" + core + " only supports attack=native", sb.pos);
  if (!is_aba && !is_aspic && attack == "native")
    throw KbError("attack=native needs core=aba or core=aspic", sb.pos);
  if (sb.tracking != "untracked" && !is_aba) throw KbError("tracking applies to core=aba only", sb.pos);
  if (sb.mode != "ddagger" && !is_aspic) kb.warnings.push_back("mode is ignored unless core=aspic");

  // Priorities.
  for (const auto& p : doc.premises)
    if (p.value) kb.pi.pi[p.formula] = *p.value;
  for (const auto& a : doc.assumptions)
    if (a.value) kb.pi.pi[a.formula] = *a.value;
  for (const auto& r : doc.rules)
    if (r.rule->value) kb.pi.rule_pi[r.rule->id] = *r.rule->value;
  kb.lifting = *parse_lifting(sb.lifting);
  const bool has_values = !kb.pi.pi.empty() || !kb.pi.rule_pi.empty();
  if (has_values && kb.lifting == Lifting::None)
    kb.warnings.push_back("priority values are ignored without a lifting");
  if (kb.lifting == Lifting::WeakestLinkASPIC && !is_aspic)
    throw KbError("lifting=weakest-link needs core=aspic", sb.pos);
  if (kb.lifting == Lifting::MaxABA && !is_aba)
    throw KbError("lifting=max-aba needs core=aba", sb.pos);

  if (is_aba) {
    std::vector<Formula> as;
    for (const auto& a : doc.assumptions) as.push_back(a.formula);
    std::vector<RuleHandle> rules;
    FormulaSet assumptions = make_set(as);
    for (const auto& r : doc.rules) {
      if (set_contains(assumptions, r.rule->head))
        throw KbError("rule head '" + r.rule->head.text() + "' is an assumption", r.pos);
      rules.push_back(r.rule);
    }
    std::map<Formula, FormulaSet> contraries;
    for (const auto& c : doc.contraries)
      contraries[c.assumption] = set_with(contraries[c.assumption], c.contrary);
    const bool tracked = sb.tracking == "tracked";
    CoreHandle aba = aba_core(assumptions, rules, tracked);
    kb.setting = make_setting(aba, AttackRule::Native, ContrarinessSpec::explicit_map(contraries));
    kb.premises = assumptions;
    if (tracked)
      for (const auto& r : rules) kb.premises = set_with(kb.premises, rule_formula(r));
  } else if (is_aspic) {
    AspicTheory th;
    std::vector<Formula> facts;
    for (const auto& p : doc.premises) facts.push_back(p.formula);
    th.facts = make_set(facts);
    for (const auto& f : th.facts) th.fact_values.push_back(kb.pi.value_of(f).value_or(0));
    for (const auto& r : doc.rules)
      (r.rule->kind == RuleKind::Strict ? th.strict : th.defeasible).push_back(r.rule);
    AspicOptions opt;
    opt.mode = sb.mode == "dagger" ? AspicMode::Dagger : AspicMode::DDagger;
    CoreHandle c = aspic_core(th, opt);
    kb.setting = make_setting(c, AttackRule::Native, opt.contrariness);
    kb.premises = aspic_premises(c);
    // Fact rules take the fact's value under weakest-link.
    for (std::size_t i = 0; i < th.facts.size(); ++i)
      kb.pi.rule_pi.emplace("fact(" + th.facts[i].text() + ")", th.fact_values[i]);
  } else {
    CoreHandle c = core == "cl"        ? cl_core()
                   : core == "cl-top"  ? cl_top_core()
                   : core == "cl-con"  ? restrict_cl_consistent(cl_core())
                   : core == "mcs-cap" ? mcs_core(true)
                                       : mcs_core(false);
    kb.setting = make_setting(c, *parse_attack_rule(attack));
    std::vector<Formula> ps;
    for (const auto& p : doc.premises) ps.push_back(p.formula);
    kb.premises = make_set(ps);
  }

  if (sb.restrict == "con") {
    kb.setting = kb.setting.with_core(restrict_consistent(kb.setting.core, kb.setting.contrariness));
  } else if (sb.restrict == "cl-consistent") {
    kb.setting = kb.setting.with_core(restrict_cl_consistent(kb.setting.core));
  } else if (sb.restrict == "empty-attackers") {
    kb.setting = kb.setting.with_core(
        restrict_empty_attackers(kb.setting.core, kb.setting.contrariness, kb.setting.points));
  }

  if (kb.lifting != Lifting::None)
    for (auto& w : coherence_warnings(kb.premises, kb.pi)) kb.warnings.push_back(std::move(w));
  kb.doc = std::move(doc);
  return kb;
}

LoadedKB load_kb_text(std::string_view text) { return load_kb(parse_kb(text)); }

LoadedKB load_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KbError("cannot read '" + path + "'", {0, 0});
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_kb_text(ss.str());
}

std::string render_kb(const KnowledgeBaseDoc& doc) {
  std::ostringstream os;
  auto val = [](const std::optional<Value>& v) {
    return v ? " [" + std::to_string(*v) + "]" : std::string();
  };
  if (doc.atoms_declared) {
    os << "atoms";
    for (const auto& a : doc.atoms) os << ' ' << a;
    os << '\n';
  }
  for (const auto& p : doc.premises) os << "premise " << p.formula.text() << val(p.value) << '\n';
  for (const auto& a : doc.assumptions)
    os << "assumption " << a.formula.text() << val(a.value) << '\n';
  for (const auto& c : doc.contraries)
    os << "contrary " << c.assumption.text() << " = " << c.contrary.text() << '\n';
  for (const auto& kr : doc.rules) {
    const RuleInfo& r = *kr.rule;
    const bool strict = r.kind == RuleKind::Strict;
    os << (strict ? "strict " : "defeasible ") << r.id << val(r.value) << ": ";
    // Binary connectives render parenthesized, so bodies split back cleanly.
    for (std::size_t i = 0; i < r.body.size(); ++i) os << (i ? ", " : "") << r.body[i].text();
    os << (r.body.empty() ? "" : " ") << (strict ? "->" : "=>") << ' ' << r.head.text() << '\n';
  }
  const SettingBlock& s = doc.setting;
  if (s.present) {
    os << "setting core=" << s.core;
    if (s.attack) os << " attack=" << *s.attack;
    os << " mode=" << s.mode << " lifting=" << s.lifting << " restrict=" << s.restrict
       << " tracking=" << s.tracking << '\n';
  }
  return os.str();
}

}  // namespace argonaut
