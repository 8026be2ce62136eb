#include "argonaut/export.hpp"

#include <sstream>

#include "json.hpp"

namespace argonaut {

namespace {

using Json = nlohmann::ordered_json;

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

Json texts(const FormulaSet& s) {
  Json a = Json::array();
  for (const auto& f : s) a.push_back(f.text());
  return a;
}

}  // namespace

std::string export_dot(const AttackGraph& g) {
  std::ostringstream os;
  os << "digraph attacks {\n  node [shape=box];\n";
  for (const auto& a : g.arguments)
    os << "  a" << a.id << " [label=\"" << dot_escape(a.text()) << "\"];\n";
  for (const auto& [from, to] : g.edges) os << "  a" << from << " -> a" << to << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const AttackGraph& g, const ExtensionFamilies& families) {
  Json doc;
  Json args = Json::array();
  for (const auto& a : g.arguments) {
    Json j;
    j["id"] = a.id;
    j["support"] = texts(a.support);
    j["conclusion"] = a.conclusion.text();
    if (a.value) j["value"] = *a.value;
    args.push_back(std::move(j));
  }
  doc["arguments"] = std::move(args);
  Json edges = Json::array();
  for (const auto& [from, to] : g.edges) edges.push_back(Json::array({from, to}));
  doc["edges"] = std::move(edges);
  Json ext = Json::object();
  for (const auto& [sem, family] : families) {
    Json fam = Json::array();
    for (const auto& e : family) fam.push_back(e.ids());
    ext[to_string(sem)] = std::move(fam);
  }
  doc["extensions"] = std::move(ext);
  return doc.dump(2) + "\n";
}

std::string report_json(const PropertyReport& r) {
  Json doc;
  doc["property"] = r.property;
  doc["verdict"] = to_string(r.verdict);
  doc["trials"] = r.trials;
  doc["failures"] = r.failures;
  doc["seed"] = r.seed;
  doc["notes"] = r.notes;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    Json cx;
    cx["setting"] = c.setting;
    Json sets = Json::array();
    for (const auto& s : c.premise_sets) sets.push_back(texts(s));
    cx["premise_sets"] = std::move(sets);
    if (c.formula) cx["formula"] = c.formula->text();
    cx["semantics"] = c.semantics;
    cx["expected"] = c.expected;
    cx["actual"] = c.actual;
    cx["detail"] = c.detail;
    doc["counterexample"] = std::move(cx);
  }
  return doc.dump(2) + "\n";
}

}  // namespace argonaut
