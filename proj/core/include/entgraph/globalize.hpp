#pragma once

#include "entgraph/subgraph.hpp"

namespace entgraph {

// Fills EdgeScores::global on every subgraph: for an untyped predicate
// pair, the cross score is the mean local binc over all subgraphs where
// both predicates appear (missing edges count as 0); each subgraph then
// gets lambda * local + (1 - lambda) * cross. Pairs with no local edge
// but a positive cross score gain an edge carrying only the global score.
EntailmentGraph globalize(const EntailmentGraph& graph, double lambda);

// One soft-transitivity pass per subgraph over the global scores:
// score(p,r) is raised to max over q of min(score(p,q), score(q,r)) when
// that exceeds it. Never lowers a score; raised edges below `floor` are
// not stored. Exactly one pass, no fixpoint iteration.
void transitivity_pass(EntailmentGraph& graph, double floor);

}  // namespace entgraph
