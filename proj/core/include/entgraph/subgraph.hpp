#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "entgraph/count_table.hpp"

namespace entgraph {

struct EdgeScores {
  double binc = 0.0;
  double weeds_p = 0.0;
  double lin = 0.0;
  std::optional<double> dirt;
  std::optional<double> weeds;
  std::optional<double> global;

  // Score used when querying the graph: globalized when present.
  double primary() const { return global ? *global : binc; }
};

struct MeasureFlags {
  bool dirt = false;
  bool weeds = false;
};

// Typed subgraph for one TypePairKey: predicate nodes plus directed scored
// edges. Self-edges are implicit with score 1 and never stored.
struct LocalSubgraph {
  TypePairKey key;
  std::set<std::string> nodes;
  std::map<std::pair<std::string, std::string>, EdgeScores> edges;

  const EdgeScores* find_edge(const std::string& p, const std::string& q) const;
};

// Scores every ordered predicate pair and keeps edges with
// binc >= score_floor. `counts` is only needed when measures.dirt is set.
// workers > 1 parallelizes over source predicates; output is identical
// for any worker count.
LocalSubgraph build_subgraph(const WeightTable& weights, double score_floor,
                             MeasureFlags measures = {},
                             const CountTable* counts = nullptr,
                             int workers = 1);

// Text format, one file per type pair:
//   types: typeA#typeB, num_preds: N
//   <blank>
//   predicate: pred#typeA#typeB
//   entailed_pred#typeA#typeB <binc> <weeds_p> <lin> [dirt: v] [weeds: v]
//       [global: v]
//   <blank>
// Scores are printed with enough digits to round-trip exactly.
void write_subgraph(const LocalSubgraph& g, std::ostream& out);
LocalSubgraph read_subgraph(std::istream& in);

struct EntailmentGraph {
  std::map<TypePairKey, LocalSubgraph> subgraphs;

  std::uint64_t node_count() const;
  std::uint64_t edge_count() const;
};

// Directory of "<typeA>#<typeB>_sim.txt" files.
void save_graph(const EntailmentGraph& graph, const std::string& dir);
EntailmentGraph load_graph(const std::string& dir);

}  // namespace entgraph
