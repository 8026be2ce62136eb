#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argonaut/engine.hpp"
#include "argonaut/priorities.hpp"

// Line-oriented knowledge-base format:
//
//   atoms p q r
//   premise (p & q) [2]
//   assumption a [1]
//   contrary a = ~a
//   strict s1: p, q -> r
//   defeasible d1 [3]: p => q
//   setting core=aspic attack=native mode=ddagger lifting=weakest-link
//
// `#` starts a comment. Rule bodies are split at top-level commas; an
// implication inside a strict rule body must be parenthesized. n(<id>) may
// only name a rule declared on an earlier line.
namespace argonaut {

struct SourcePos {
  int line = 0;
  int col = 0;
};

struct KbFormula {
  Formula formula;
  std::optional<Value> value;
  SourcePos pos;
};

struct KbContrary {
  Formula assumption;
  Formula contrary;
  SourcePos pos;
};

struct KbRule {
  RuleHandle rule;
  SourcePos pos;
};

struct SettingBlock {
  bool present = false;
  std::string core = "cl";
  std::optional<std::string> attack;  // default depends on the core
  std::string mode = "ddagger";
  std::string lifting = "none";
  std::string restrict = "none";
  std::string tracking = "untracked";
  SourcePos pos;
};

struct KnowledgeBaseDoc {
  std::vector<std::string> atoms;
  bool atoms_declared = false;
  std::vector<KbFormula> premises;
  std::vector<KbFormula> assumptions;
  std::vector<KbContrary> contraries;
  std::vector<KbRule> rules;  // strict and defeasible, in source order
  SettingBlock setting;
};

// Semantic validation failure, located in the source.
struct KbError : Error {
  KbError(const std::string& msg, SourcePos pos);
  SourcePos pos;
};

// Throws ParseError on lexical or syntax errors.
KnowledgeBaseDoc parse_kb(std::string_view text);

struct LoadedKB {
  KnowledgeBaseDoc doc;
  Setting setting;
  FormulaSet premises;
  PriorityAssignment pi;
  Lifting lifting = Lifting::None;
  std::vector<std::string> warnings;
};

// Throws KbError on semantic errors.
LoadedKB load_kb(KnowledgeBaseDoc doc);
LoadedKB load_kb_text(std::string_view text);
LoadedKB load_kb_file(const std::string& path);

// Re-renders a document in canonical form; parsing the result gives an
// equal document.
std::string render_kb(const KnowledgeBaseDoc& doc);

}  // namespace argonaut
