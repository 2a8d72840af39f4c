#pragma once

#include <string>
#include <vector>

namespace entgraph {

struct Token {
  std::string surface;
  std::string lemma;
  std::string pos;
  int head = -1;  // -1 for the root
  std::string label;
};

// A predicate head token together with its two argument tokens.
struct RelationNode {
  int head_token = -1;
  int arg1_token = -1;
  int arg2_token = -1;
  std::string pred;  // normalized predicate string
  bool has_named_entity = false;
};

// One parsed sentence. Head links form a single-rooted tree.
struct DepGraph {
  std::vector<Token> tokens;
  std::vector<RelationNode> relations;
  std::string doc_id;
  std::string date;
};

// One JSON object per line:
//   {"tokens":[{"surface":..,"lemma":..,"pos":..,"head":int,"label":..},..],
//    "relations":[{"pred":..,"head":int,"arg1":int,"arg2":int,"ne":bool},..],
//    "doc":.., "date":..}
// Validates index ranges, acyclicity, and the single-root invariant.
DepGraph parse_dep_graph_line(const std::string& line);

}  // namespace entgraph
