#include "entgraph/similarity.hpp"

#include <cmath>

namespace entgraph {

double row_sum(const WeightRow& row) {
  double s = 0.0;
  for (const auto& [feat, w] : row) s += w;
  return s;
}

double weeds_precision(const WeightRow& p, const WeightRow& q) {
  double shared = 0.0, all = 0.0;
  for (const auto& [feat, w] : p) {
    all += w;
    if (q.count(feat)) shared += w;
  }
  return all == 0.0 ? 0.0 : shared / all;
}

double lin_similarity(const WeightRow& p, const WeightRow& q) {
  double shared = 0.0;
  for (const auto& [feat, w] : p) {
    auto it = q.find(feat);
    if (it != q.end()) shared += w + it->second;
  }
  const double denom = row_sum(p) + row_sum(q);
  return denom == 0.0 ? 0.0 : shared / denom;
}

double binc(const WeightRow& p, const WeightRow& q) {
  return std::sqrt(lin_similarity(p, q) * weeds_precision(p, q));
}

double weeds_similarity(const WeightRow& p, const WeightRow& q) {
  return std::sqrt(weeds_precision(p, q) * weeds_precision(q, p));
}

}  // namespace entgraph
