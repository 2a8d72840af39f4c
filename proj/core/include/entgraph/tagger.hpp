#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "entgraph/dep_graph.hpp"
#include "entgraph/lexicon.hpp"
#include "entgraph/relation.hpp"

namespace entgraph {

// Tags for one relation instance, each witnessed by the token path that
// triggered it (relation head first, trigger token last).
struct TagDecision {
  TagSet tags;
  std::map<ModalityTag, std::vector<int>> trigger_paths;
};

// Matches lexicon triggers along the governing path of the relation node
// (head chain to the root plus aux/modifier/marker dependents of chain
// nodes), then applies the conditional and counterfactual rules.
// Throws DataError for an out-of-range relation index.
TagDecision tag_relation(const DepGraph& graph, int relation_index,
                         const Lexicon& lexicon);

// Hand-crafted counterfactual patterns:
//  (a) inverted perfect auxiliary: "had" preceding the subject, past
//      participle predicate;
//  (b) if/unless clause containing perfect "had" + past participle;
//  (c) clause governed by "wish", or "if only".
bool tag_counterfactual(const DepGraph& graph, int relation_index);

struct TagStats {
  std::uint64_t total = 0;   // relation instances seen
  std::uint64_t tagged = 0;  // instances with at least one tag
  std::map<ModalityTag, std::uint64_t> per_tag;

  double tagged_fraction() const {
    return total == 0 ? 0.0 : static_cast<double>(tagged) / total;
  }
  double tag_fraction(ModalityTag t) const;
  void merge(const TagStats& other);
};

// Streams JSON-lines parses, emits one RelationTriple per relation node.
// Malformed lines are reported on `diagnostics` (when given) and skipped;
// the stream is never aborted.
TagStats tag_corpus(std::istream& parses, const Lexicon& lexicon,
                    const std::function<void(const RelationTriple&)>& sink,
                    std::ostream* diagnostics = nullptr);

}  // namespace entgraph
