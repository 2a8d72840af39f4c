#include "entgraph/globalize.hpp"

#include <algorithm>

namespace entgraph {

EntailmentGraph globalize(const EntailmentGraph& graph, double lambda) {
  using Pair = std::pair<std::string, std::string>;
  // Untyped pair -> (sum of local binc, number of subgraphs where both
  // predicates appear). Missing edges contribute 0 to the sum.
  std::map<Pair, std::pair<double, int>> cross;
  for (const auto& [key, g] : graph.subgraphs) {
    for (const auto& [pair, s] : g.edges) cross[pair].first += s.binc;
  }
  for (auto& [pair, acc] : cross) {
    for (const auto& [key, g] : graph.subgraphs) {
      if (g.nodes.count(pair.first) && g.nodes.count(pair.second))
        ++acc.second;
    }
  }

  EntailmentGraph out = graph;
  for (auto& [key, g] : out.subgraphs) {
    for (const auto& [pair, acc] : cross) {
      if (!g.nodes.count(pair.first) || !g.nodes.count(pair.second)) continue;
      const double mean = acc.second == 0 ? 0.0 : acc.first / acc.second;
      auto it = g.edges.find(pair);
      const double local = it == g.edges.end() ? 0.0 : it->second.binc;
      const double global = lambda * local + (1.0 - lambda) * mean;
      if (it != g.edges.end()) {
        it->second.global = global;
      } else if (global > 0.0) {
        EdgeScores s;
        s.global = global;
        g.edges.emplace(pair, s);
      }
    }
  }
  return out;
}

void transitivity_pass(EntailmentGraph& graph, double floor) {
  using Pair = std::pair<std::string, std::string>;
  for (auto& [key, g] : graph.subgraphs) {
    // old scores, read-only during the pass
    std::map<Pair, double> old;
    for (const auto& [pair, s] : g.edges) old[pair] = s.primary();

    // outgoing adjacency on the old scores
    std::map<std::string, std::vector<std::pair<std::string, double>>> out;
    for (const auto& [pair, v] : old) out[pair.first].emplace_back(pair.second, v);

    std::map<Pair, double> raised;
    for (const auto& [p, via] : out) {
      for (const auto& [q, pq] : via) {
        auto it = out.find(q);
        if (it == out.end()) continue;
        for (const auto& [r, qr] : it->second) {
          if (r == p) continue;
          const double bound = std::min(pq, qr);
          auto& best = raised[{p, r}];
          best = std::max(best, bound);
        }
      }
    }
    for (const auto& [pair, bound] : raised) {
      auto it = g.edges.find(pair);
      const double current = it == g.edges.end() ? 0.0 : it->second.primary();
      if (bound <= current) continue;
      if (it == g.edges.end()) {
        if (bound < floor) continue;
        EdgeScores s;
        s.global = bound;
        g.edges.emplace(pair, s);
      } else {
        it->second.global = bound;
      }
    }
  }
}

}  // namespace entgraph
