#pragma once

#include <map>
#include <string>

namespace entgraph {

using WeightRow = std::map<std::string, double>;

double row_sum(const WeightRow& row);

// Weighted fraction of p's features also seen with q. 0 when p is empty.
double weeds_precision(const WeightRow& p, const WeightRow& q);

// Symmetric Lin measure over shared features.
double lin_similarity(const WeightRow& p, const WeightRow& q);

// Balanced inclusion: sqrt(lin(p,q) * weeds_precision(p->q)).
double binc(const WeightRow& p, const WeightRow& q);

// Geometric mean of weeds precision and recall.
double weeds_similarity(const WeightRow& p, const WeightRow& q);

}  // namespace entgraph
