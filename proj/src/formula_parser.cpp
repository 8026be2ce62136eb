#include <cctype>

#include "argonaut/formula.hpp"

namespace argonaut {

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : Error("line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Parser {
 public:
  Parser(std::string_view s, const RuleNameResolver& r, int line, int off)
      : s_(s), resolve_(r), line_(line), off_(off) {}

  Formula run() {
    Formula f = implication();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, off_ + static_cast<int>(pos_) + 1);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (eat("->")) return Formula::implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (eat("|")) acc = Formula::disj(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (eat("&")) acc = Formula::conj(acc, unary());
    return acc;
  }

  Formula unary() {
    if (eat("~")) return Formula::neg(unary());
    return primary();
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Formula primary() {
    skip();
    if (pos_ >= s_.size()) fail("expected a formula");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = implication();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (!ident_start(c)) fail("expected a formula");
    std::size_t start = pos_;
    std::string id = ident();
    if (id == "top") return Formula::top();
    if (id == "bot") return Formula::bot();
    if (id == "n") {
      std::size_t save = pos_;
      if (eat("(")) {
        skip();
        std::string rid = ident();
        if (rid.empty()) fail("expected a rule id");
        if (!eat(")")) fail("expected ')'");
        std::optional<Formula> f;
        if (resolve_) f = resolve_(rid);
        if (!f) {
          pos_ = start;
          fail("unknown rule '" + rid + "'");
        }
        return *f;
      }
      pos_ = save;
    }
    return Formula::atom(id);
  }

  std::string_view s_;
  const RuleNameResolver& resolve_;
  int line_;
  int off_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const RuleNameResolver& resolve, int line,
                      int col_offset) {
  return Parser(text, resolve, line, col_offset).run();
}

}  // namespace argonaut
