#include "entgraph/tagger.hpp"

#include <istream>
#include <ostream>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

// Dependency labels along which a trigger can hang off the governing chain.
bool is_satellite_label(const std::string& label) {
  return label == "aux" || label == "auxpass" || label == "mark" ||
         label == "advmod" || label == "neg" || label == "cop";
}

std::vector<int> head_chain(const DepGraph& g, int node) {
  std::vector<int> chain;
  for (int cur = node; cur != -1; cur = g.tokens[cur].head)
    chain.push_back(cur);
  return chain;
}

std::vector<int> dependents_of(const DepGraph& g, int node) {
  std::vector<int> deps;
  for (int i = 0; i < static_cast<int>(g.tokens.size()); ++i) {
    if (g.tokens[i].head == node) deps.push_back(i);
  }
  return deps;
}

int find_dependent(const DepGraph& g, int node, const std::string& label,
                   const std::string& lemma = "") {
  for (int d : dependents_of(g, node)) {
    if (g.tokens[d].label.rfind(label, 0) != 0) continue;
    if (!lemma.empty() && g.tokens[d].lemma != lemma) continue;
    return d;
  }
  return -1;
}

// Trigger token of the counterfactual pattern, or -1.
int counterfactual_trigger(const DepGraph& g, int rel) {
  const Token& pred = g.tokens[rel];
  const int subj = find_dependent(g, rel, "nsubj");
  int perfect_aux = -1;
  for (int d : dependents_of(g, rel)) {
    const Token& t = g.tokens[d];
    if ((t.label == "aux" || t.label == "auxpass") && t.lemma == "have" &&
        t.pos == "VBD")
      perfect_aux = d;
  }

  // (a) subject-auxiliary inversion: "Had protesters attacked ..."
  if (perfect_aux != -1 && subj != -1 && perfect_aux < subj &&
      pred.pos == "VBN")
    return perfect_aux;

  // (b) if/unless clause with the perfect: "If protesters had attacked ..."
  if (perfect_aux != -1 && pred.pos == "VBN") {
    int mark = find_dependent(g, rel, "mark", "if");
    if (mark == -1) mark = find_dependent(g, rel, "mark", "unless");
    if (mark != -1) return mark;
  }

  // (c) governed by "wish", or an "if only" clause
  for (int cur = g.tokens[rel].head; cur != -1; cur = g.tokens[cur].head) {
    if (g.tokens[cur].lemma == "wish") return cur;
  }
  {
    const int mark = find_dependent(g, rel, "mark", "if");
    const int only = find_dependent(g, rel, "advmod", "only");
    if (mark != -1 && only != -1) return mark;
  }
  return -1;
}

std::vector<int> path_to(const std::vector<int>& chain, int upto_index,
                         int trigger) {
  std::vector<int> path(chain.begin(), chain.begin() + upto_index + 1);
  if (path.empty() || path.back() != trigger) path.push_back(trigger);
  return path;
}

}  // namespace

TagDecision tag_relation(const DepGraph& graph, int relation_index,
                         const Lexicon& lexicon) {
  if (relation_index < 0 ||
      relation_index >= static_cast<int>(graph.relations.size()))
    throw DataError("relation index out of range");
  const int rel = graph.relations[relation_index].head_token;

  TagDecision decision;
  auto record = [&](ModalityTag tag, std::vector<int> path) {
    if (decision.tags.insert(tag).second)
      decision.trigger_paths[tag] = std::move(path);
  };

  const std::vector<int> chain = head_chain(graph, rel);
  for (int k = 0; k < static_cast<int>(chain.size()); ++k) {
    const int node = chain[k];
    if (k > 0) {  // an ancestor of the relation node may itself trigger
      const Token& t = graph.tokens[node];
      if (auto tag = lexicon.match(t.lemma, t.pos))
        record(*tag, path_to(chain, k, node));
    }
    for (int d : dependents_of(graph, node)) {
      const Token& t = graph.tokens[d];
      if (!is_satellite_label(t.label)) continue;
      if (auto tag = lexicon.match(t.lemma, t.pos))
        record(*tag, path_to(chain, k, d));
      if (t.label == "mark" && (t.lemma == "if" || t.lemma == "unless"))
        record(ModalityTag::COND, path_to(chain, k, d));
    }
  }

  const int cf = counterfactual_trigger(graph, rel);
  if (cf != -1) record(ModalityTag::COUNT, {rel, cf});
  return decision;
}

bool tag_counterfactual(const DepGraph& graph, int relation_index) {
  if (relation_index < 0 ||
      relation_index >= static_cast<int>(graph.relations.size()))
    throw DataError("relation index out of range");
  return counterfactual_trigger(
             graph, graph.relations[relation_index].head_token) != -1;
}

double TagStats::tag_fraction(ModalityTag t) const {
  auto it = per_tag.find(t);
  if (it == per_tag.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / total;
}

void TagStats::merge(const TagStats& other) {
  total += other.total;
  tagged += other.tagged;
  for (const auto& [tag, n] : other.per_tag) per_tag[tag] += n;
}

TagStats tag_corpus(std::istream& parses, const Lexicon& lexicon,
                    const std::function<void(const RelationTriple&)>& sink,
                    std::ostream* diagnostics) {
  TagStats stats;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(parses, line)) {
    ++lineno;
    if (line.empty()) continue;
    DepGraph graph;
    try {
      graph = parse_dep_graph_line(line);
    } catch (const ParseError& e) {
      if (diagnostics)
        *diagnostics << "line " << lineno << ": skipped: " << e.what() << "\n";
      continue;
    }
    for (int r = 0; r < static_cast<int>(graph.relations.size()); ++r) {
      const RelationNode& node = graph.relations[r];
      const TagDecision decision = tag_relation(graph, r, lexicon);
      RelationTriple triple;
      triple.pred = node.pred;
      triple.arg1 = graph.tokens[node.arg1_token].surface;
      triple.arg2 = graph.tokens[node.arg2_token].surface;
      triple.tags = decision.tags;
      triple.has_named_entity = node.has_named_entity;
      triple.doc_id = graph.doc_id;
      triple.date = graph.date;
      sink(triple);
      ++stats.total;
      if (!decision.tags.empty()) ++stats.tagged;
      for (ModalityTag t : decision.tags) ++stats.per_tag[t];
    }
  }
  return stats;
}

}  // namespace entgraph
