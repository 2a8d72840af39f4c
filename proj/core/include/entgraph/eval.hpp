#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "entgraph/relation.hpp"
#include "entgraph/subgraph.hpp"

namespace entgraph {

enum class Portion { All, Directional, Sports };

std::string to_string(Portion p);
Portion parse_portion(const std::string& s);

struct EvalExample {
  TypedPredicate premise;
  TypedPredicate hypothesis;
  bool label = false;
  Portion portion = Portion::All;
  TypePairKey key;  // shared by premise and hypothesis
};

// Dataset TSV: premise_pred <TAB> hyp_pred <TAB> typeA <TAB> typeB <TAB>
// label <TAB> portion. `portion` selects the evaluated subset:
//   All          -> rows marked all or directional
//   Directional  -> rows marked directional; each pair must appear in both
//                   orientations with opposite labels
//   Sports       -> rows marked sports; types must be
//                   (organization, organization)
std::vector<EvalExample> load_dataset(const std::string& path, Portion portion);

// Edge score premise -> hypothesis; 1 for identical predicates, 0 when a
// predicate or the edge is absent.
double score_example(const EntailmentGraph& graph, const EvalExample& ex);

struct PRPoint {
  double threshold;
  double precision;
  double recall;
};

// Thresholds strictly decreasing; tied scores share one point.
struct PRCurve {
  std::vector<PRPoint> points;
  double base_rate = 0.0;
};

// One point per distinct score, predicting positive at score >= threshold.
// Throws DataError when sizes differ or no positive label exists.
PRCurve pr_sweep(const std::vector<double>& scores,
                 const std::vector<bool>& labels);

// Trapezoidal area under precision-vs-recall restricted to precision >=
// p_min, interpolating the crossing points linearly. The curve is anchored
// at recall 0 with the precision of its highest-threshold point. Returns 0
// when no point reaches p_min.
double auc_range(const PRCurve& curve, double p_min = 0.5);

struct GraphStats {
  std::uint64_t nodes = 0;
  std::uint64_t edges = 0;
  double coverage_pct = 0.0;  // % of distinct dataset predicates found
};

GraphStats graph_stats(const EntailmentGraph& graph,
                       const std::vector<EvalExample>& dataset);

// CSV "threshold,precision,recall" with one header line.
void write_curve_csv(const PRCurve& curve, std::ostream& out);
PRCurve read_curve_csv(std::istream& in);

}  // namespace entgraph
