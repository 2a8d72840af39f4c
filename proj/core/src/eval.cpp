#include "entgraph/eval.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "entgraph/errors.hpp"

namespace entgraph {

std::string to_string(Portion p) {
  switch (p) {
    case Portion::All: return "all";
    case Portion::Directional: return "directional";
    case Portion::Sports: return "sports";
  }
  return "?";
}

Portion parse_portion(const std::string& s) {
  if (s == "all") return Portion::All;
  if (s == "directional") return Portion::Directional;
  if (s == "sports") return Portion::Sports;
  throw ParseError("unknown portion '" + s + "'");
}

std::vector<EvalExample> load_dataset(const std::string& path,
                                      Portion portion) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset: " + path);
  std::vector<EvalExample> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 6)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected 6 tab-separated fields");
    if (fields[4] != "0" && fields[4] != "1")
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": label must be 0 or 1");
    EvalExample ex;
    ex.key = make_type_pair(fields[2], fields[3]);
    ex.premise = {fields[0], fields[2], fields[3]};
    ex.hypothesis = {fields[1], fields[2], fields[3]};
    ex.label = fields[4] == "1";
    ex.portion = parse_portion(fields[5]);

    const bool selected =
        (portion == Portion::All &&
         (ex.portion == Portion::All || ex.portion == Portion::Directional)) ||
        ex.portion == portion;
    if (!selected) continue;
    if (portion == Portion::Sports &&
        (ex.key.type_a != "organization" || ex.key.type_b != "organization"))
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": sports examples must be organization/organization");
    out.push_back(std::move(ex));
  }

  if (portion == Portion::Directional) {
    std::set<std::tuple<std::string, std::string, std::string, bool>> seen;
    for (const EvalExample& ex : out)
      seen.insert({ex.premise.pred, ex.hypothesis.pred, ex.key.str(),
                   ex.label});
    for (const EvalExample& ex : out) {
      if (!seen.count({ex.hypothesis.pred, ex.premise.pred, ex.key.str(),
                       !ex.label}))
        throw DataError("directional example lacks its reverse: " +
                        ex.premise.pred + " -> " + ex.hypothesis.pred);
    }
  }
  return out;
}

double score_example(const EntailmentGraph& graph, const EvalExample& ex) {
  if (ex.premise.pred == ex.hypothesis.pred) return 1.0;
  auto it = graph.subgraphs.find(ex.key);
  if (it == graph.subgraphs.end()) return 0.0;
  const EdgeScores* edge =
      it->second.find_edge(ex.premise.pred, ex.hypothesis.pred);
  return edge ? edge->primary() : 0.0;
}

PRCurve pr_sweep(const std::vector<double>& scores,
                 const std::vector<bool>& labels) {
  if (scores.size() != labels.size())
    throw DataError("scores and labels differ in length");
  const std::size_t n = scores.size();
  std::size_t positives = 0;
  for (bool l : labels) positives += l;
  if (positives == 0) throw DataError("no positive labels");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  PRCurve curve;
  curve.base_rate = static_cast<double>(positives) / n;
  std::size_t tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < n) {
    const double threshold = scores[order[i]];
    // consume the whole tie group at this threshold
    while (i < n && scores[order[i]] == threshold) {
      if (labels[order[i]]) ++tp; else ++fp;
      ++i;
    }
    curve.points.push_back({threshold,
                            static_cast<double>(tp) / (tp + fp),
                            static_cast<double>(tp) / positives});
  }
  return curve;
}

double auc_range(const PRCurve& curve, double p_min) {
  if (curve.points.empty()) return 0.0;
  // anchor at recall 0 with the highest-threshold precision
  std::vector<std::pair<double, double>> pts;  // (recall, precision)
  pts.emplace_back(0.0, curve.points.front().precision);
  for (const PRPoint& p : curve.points) pts.emplace_back(p.recall, p.precision);

  double area = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const auto [r0, p0] = pts[i - 1];
    const auto [r1, p1] = pts[i];
    if (r1 <= r0) continue;
    const bool above0 = p0 >= p_min, above1 = p1 >= p_min;
    if (above0 && above1) {
      area += 0.5 * (p0 + p1) * (r1 - r0);
    } else if (above0 != above1) {
      const double t = (p_min - p0) / (p1 - p0);
      const double rc = r0 + t * (r1 - r0);
      if (above0)
        area += 0.5 * (p0 + p_min) * (rc - r0);
      else
        area += 0.5 * (p_min + p1) * (r1 - rc);
    }
  }
  return area;
}

GraphStats graph_stats(const EntailmentGraph& graph,
                       const std::vector<EvalExample>& dataset) {
  GraphStats stats;
  stats.nodes = graph.node_count();
  stats.edges = graph.edge_count();

  std::set<std::pair<std::string, TypePairKey>> preds;
  for (const EvalExample& ex : dataset) {
    preds.insert({ex.premise.pred, ex.key});
    preds.insert({ex.hypothesis.pred, ex.key});
  }
  if (preds.empty()) return stats;
  std::size_t found = 0;
  for (const auto& [pred, key] : preds) {
    auto it = graph.subgraphs.find(key);
    if (it != graph.subgraphs.end() && it->second.nodes.count(pred)) ++found;
  }
  stats.coverage_pct = 100.0 * static_cast<double>(found) / preds.size();
  return stats;
}

void write_curve_csv(const PRCurve& curve, std::ostream& out) {
  out << "threshold,precision,recall\n";
  out.precision(17);
  for (const PRPoint& p : curve.points)
    out << p.threshold << "," << p.precision << "," << p.recall << "\n";
}

PRCurve read_curve_csv(std::istream& in) {
  PRCurve curve;
  std::string line;
  if (!std::getline(in, line) || line != "threshold,precision,recall")
    throw ParseError("bad curve CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    PRPoint p{};
    char c1 = 0, c2 = 0;
    if (!(ls >> p.threshold >> c1 >> p.precision >> c2 >> p.recall) ||
        c1 != ',' || c2 != ',')
      throw ParseError("bad curve CSV row: " + line);
    curve.points.push_back(p);
  }
  return curve;
}

}  // namespace entgraph
