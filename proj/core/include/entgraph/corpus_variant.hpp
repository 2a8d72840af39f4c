#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "entgraph/relation.hpp"

namespace entgraph {

enum class Variant { BaselineLarge, BaselineSmall, Asserted };

std::string to_string(Variant v);
// Accepts "baseline-large", "baseline-small", "asserted".
Variant parse_variant(const std::string& s);

struct VariantSpec {
  Variant variant = Variant::BaselineLarge;
  double sample_fraction = 0.85;  // BaselineSmall only
  std::uint64_t seed = 0;
};

struct VariantReport {
  std::uint64_t input_count = 0;
  std::uint64_t output_count = 0;
  std::map<ModalityTag, std::uint64_t> removed_per_tag;

  double retention() const {
    return input_count == 0
               ? 0.0
               : static_cast<double>(output_count) / input_count;
  }
  std::string to_json() const;
};

// Deterministic Bernoulli draw for record `index` under `seed`, in [0,1).
// Keyed by (seed, index) so output is independent of shard scheduling.
double bernoulli_draw(std::uint64_t seed, std::uint64_t index);

// Decides whether record `index` of the stream survives the variant.
// Asserted keeps triples with no removal-set tag; BaselineSmall keeps a
// seeded fraction; BaselineLarge keeps everything.
bool variant_keep(const VariantSpec& spec, const RelationTriple& t,
                  std::uint64_t index);

// Output form of a kept triple: baselines clear the tag set so nothing
// downstream can condition on modality; Asserted keeps tags as-is.
RelationTriple variant_transform(const VariantSpec& spec, RelationTriple t);

// Streaming pass over one shard: applies keep + transform, forwards kept
// triples to `sink`, accounts removals per tag.
class VariantBuilder {
 public:
  explicit VariantBuilder(VariantSpec spec) : spec_(spec) {}

  // Returns true when the triple was emitted.
  template <typename Sink>
  bool feed(const RelationTriple& t, Sink&& sink) {
    const std::uint64_t index = report_.input_count++;
    if (!variant_keep(spec_, t, index)) {
      if (spec_.variant == Variant::Asserted) {
        for (ModalityTag tag : t.tags) {
          if (removal_set().count(tag)) ++report_.removed_per_tag[tag];
        }
      }
      return false;
    }
    sink(variant_transform(spec_, t));
    ++report_.output_count;
    return true;
  }

  const VariantReport& report() const { return report_; }

 private:
  VariantSpec spec_;
  VariantReport report_;
};

}  // namespace entgraph
