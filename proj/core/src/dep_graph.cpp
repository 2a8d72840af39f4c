#include "entgraph/dep_graph.hpp"

#include "entgraph/errors.hpp"
#include "json.hpp"

namespace entgraph {

using json = nlohmann::json;

DepGraph parse_dep_graph_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad parse JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("tokens") || !j["tokens"].is_array())
    throw ParseError("parse line lacks a 'tokens' array");

  DepGraph g;
  for (const auto& tj : j["tokens"]) {
    Token t;
    t.surface = tj.value("surface", "");
    t.lemma = tj.value("lemma", "");
    t.pos = tj.value("pos", "");
    t.head = tj.value("head", -1);
    t.label = tj.value("label", "");
    if (t.surface.empty() || t.lemma.empty())
      throw ParseError("token lacks surface/lemma");
    g.tokens.push_back(std::move(t));
  }

  const int n = static_cast<int>(g.tokens.size());
  int roots = 0;
  for (const Token& t : g.tokens) {
    if (t.head == -1) {
      ++roots;
    } else if (t.head < 0 || t.head >= n) {
      throw ParseError("head index out of range");
    }
  }
  if (n > 0 && roots != 1) throw ParseError("expected exactly one root");
  // cycle check: every token must reach the root
  for (int i = 0; i < n; ++i) {
    int cur = i, steps = 0;
    while (cur != -1) {
      if (++steps > n) throw ParseError("cycle in head links");
      cur = g.tokens[cur].head;
    }
  }

  if (j.contains("relations")) {
    if (!j["relations"].is_array())
      throw ParseError("'relations' is not an array");
    for (const auto& rj : j["relations"]) {
      RelationNode r;
      r.pred = rj.value("pred", "");
      r.head_token = rj.value("head", -1);
      r.arg1_token = rj.value("arg1", -1);
      r.arg2_token = rj.value("arg2", -1);
      r.has_named_entity = rj.value("ne", false);
      if (r.pred.empty()) throw ParseError("relation lacks 'pred'");
      for (int idx : {r.head_token, r.arg1_token, r.arg2_token}) {
        if (idx < 0 || idx >= n)
          throw ParseError("relation token index out of range");
      }
      g.relations.push_back(std::move(r));
    }
  }

  g.doc_id = j.value("doc", "");
  g.date = j.value("date", "");
  return g;
}

}  // namespace entgraph
