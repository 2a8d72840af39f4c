#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "entgraph/relation.hpp"

namespace entgraph {

// Feature = argument pair, encoded "argA\targB" in the slot order of the
// owning TypePairKey.
std::string make_feature(const ArgumentPair& args);
ArgumentPair split_feature(const std::string& feature);

// Sparse predicate x argument-pair count matrix for one type pair.
// Ordered maps keep every iteration deterministic.
struct CountTable {
  TypePairKey key;
  std::map<std::string, std::map<std::string, std::int64_t>> counts;
  std::map<std::string, std::int64_t> pred_marginal;
  std::map<std::string, std::int64_t> feat_marginal;
  std::int64_t total = 0;

  void add(const std::string& pred, const std::string& feature,
           std::int64_t n = 1);
  void add(const TypedRelation& rel) { add(rel.pred.pred, make_feature(rel.args)); }
};

using CountTableMap = std::map<TypePairKey, CountTable>;

// Merge `from` into `to` (commutative, for sharded accumulation).
void merge_counts(CountTable& to, const CountTable& from);

// Single pass: first drop argument pairs seen with fewer than
// min_preds_per_arg_pair distinct predicates, then drop predicates left
// with fewer than min_arg_pairs_per_pred distinct pairs. Marginals and
// total are recomputed.
CountTable apply_thresholds(const CountTable& table,
                            int min_arg_pairs_per_pred = 4,
                            int min_preds_per_arg_pair = 4);

// PPMI weights per (predicate, feature); zero and negative cells dropped.
struct WeightTable {
  TypePairKey key;
  std::map<std::string, std::map<std::string, double>> rows;
  std::map<std::string, double> row_sum;
};

// weight(p,f) = max(0, ln(count(p,f) * total / (pred_marginal(p) *
// feat_marginal(f)))). Throws DataError when total == 0.
WeightTable compute_weights(const CountTable& table);

// Per-slot PPMI weights (slot 0 = argA, slot 1 = argB), used by the DIRT
// measure. Same clamping rule over the slot-marginal counts.
WeightTable compute_slot_weights(const CountTable& table, int slot);

}  // namespace entgraph
