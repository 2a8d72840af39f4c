#include "entgraph/corpus_variant.hpp"

#include "entgraph/errors.hpp"
#include "json.hpp"

namespace entgraph {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::BaselineLarge: return "baseline-large";
    case Variant::BaselineSmall: return "baseline-small";
    case Variant::Asserted: return "asserted";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "baseline-large") return Variant::BaselineLarge;
  if (s == "baseline-small") return Variant::BaselineSmall;
  if (s == "asserted") return Variant::Asserted;
  throw ParseError("unknown variant '" + s + "'");
}

std::string VariantReport::to_json() const {
  nlohmann::json j;
  j["input_count"] = input_count;
  j["output_count"] = output_count;
  j["retention"] = retention();
  nlohmann::json removed = nlohmann::json::object();
  for (const auto& [tag, n] : removed_per_tag)
    removed[std::string(to_string(tag))] = n;
  j["removed_per_tag"] = std::move(removed);
  return j.dump(2);
}

// splitmix64; each (seed, index) pair gets an independent uniform draw.
double bernoulli_draw(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + index * 0x9e3779b97f4a7c15ULL;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

bool variant_keep(const VariantSpec& spec, const RelationTriple& t,
                  std::uint64_t index) {
  switch (spec.variant) {
    case Variant::BaselineLarge:
      return true;
    case Variant::BaselineSmall:
      return bernoulli_draw(spec.seed, index) < spec.sample_fraction;
    case Variant::Asserted:
      return is_asserted(t.tags);
  }
  return true;
}

RelationTriple variant_transform(const VariantSpec& spec, RelationTriple t) {
  if (spec.variant != Variant::Asserted) t.tags.clear();
  return t;
}

}  // namespace entgraph
