#include "entgraph/count_table.hpp"

#include <cmath>
#include <set>

#include "entgraph/errors.hpp"

namespace entgraph {

std::string make_feature(const ArgumentPair& args) {
  return args.arg_a + "\t" + args.arg_b;
}

ArgumentPair split_feature(const std::string& feature) {
  const auto tab = feature.find('\t');
  if (tab == std::string::npos)
    throw ParseError("feature lacks a slot separator");
  return {feature.substr(0, tab), feature.substr(tab + 1)};
}

void CountTable::add(const std::string& pred, const std::string& feature,
                     std::int64_t n) {
  counts[pred][feature] += n;
  pred_marginal[pred] += n;
  feat_marginal[feature] += n;
  total += n;
}

void merge_counts(CountTable& to, const CountTable& from) {
  for (const auto& [pred, row] : from.counts)
    for (const auto& [feat, n] : row) to.add(pred, feat, n);
}

CountTable apply_thresholds(const CountTable& table,
                            int min_arg_pairs_per_pred,
                            int min_preds_per_arg_pair) {
  // distinct predicates per argument pair
  std::map<std::string, int> preds_per_feat;
  for (const auto& [pred, row] : table.counts)
    for (const auto& [feat, n] : row) ++preds_per_feat[feat];

  CountTable out;
  out.key = table.key;
  for (const auto& [pred, row] : table.counts) {
    int surviving = 0;
    for (const auto& [feat, n] : row)
      if (preds_per_feat[feat] >= min_preds_per_arg_pair) ++surviving;
    if (surviving < min_arg_pairs_per_pred) continue;
    for (const auto& [feat, n] : row)
      if (preds_per_feat[feat] >= min_preds_per_arg_pair)
        out.add(pred, feat, n);
  }
  return out;
}

WeightTable compute_weights(const CountTable& table) {
  if (table.total == 0) throw DataError("degenerate count table (total = 0)");
  WeightTable out;
  out.key = table.key;
  const double total = static_cast<double>(table.total);
  for (const auto& [pred, row] : table.counts) {
    const double pm = static_cast<double>(table.pred_marginal.at(pred));
    for (const auto& [feat, n] : row) {
      const double fm = static_cast<double>(table.feat_marginal.at(feat));
      const double w = std::log(static_cast<double>(n) * total / (pm * fm));
      if (w > 0.0) {
        out.rows[pred][feat] = w;
        out.row_sum[pred] += w;
      }
    }
  }
  return out;
}

WeightTable compute_slot_weights(const CountTable& table, int slot) {
  if (table.total == 0) throw DataError("degenerate count table (total = 0)");
  // collapse features to the selected slot
  CountTable collapsed;
  collapsed.key = table.key;
  for (const auto& [pred, row] : table.counts) {
    for (const auto& [feat, n] : row) {
      const ArgumentPair args = split_feature(feat);
      collapsed.add(pred, slot == 0 ? args.arg_a : args.arg_b, n);
    }
  }
  WeightTable out;
  out.key = table.key;
  const double total = static_cast<double>(collapsed.total);
  for (const auto& [pred, row] : collapsed.counts) {
    const double pm = static_cast<double>(collapsed.pred_marginal.at(pred));
    for (const auto& [feat, n] : row) {
      const double fm = static_cast<double>(collapsed.feat_marginal.at(feat));
      const double w = std::log(static_cast<double>(n) * total / (pm * fm));
      if (w > 0.0) {
        out.rows[pred][feat] = w;
        out.row_sum[pred] += w;
      }
    }
  }
  return out;
}

}  // namespace entgraph
