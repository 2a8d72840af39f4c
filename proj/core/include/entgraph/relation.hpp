#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "entgraph/modality_tag.hpp"

namespace entgraph {

// One extracted arg1-predicate-arg2 instance. Entity strings are kept
// verbatim apart from trimming surrounding whitespace.
struct RelationTriple {
  std::string pred;   // normalized predicate, e.g. "beat.1,beat.2"
  std::string arg1;
  std::string arg2;
  TagSet tags;
  std::string doc_id;  // empty when absent
  std::string date;    // ISO-8601, empty when absent
  bool has_named_entity = false;

  bool operator==(const RelationTriple&) const = default;
};

// One JSON object per line: {"pred":..,"arg1":..,"arg2":..,"tags":[..],
// "ne":bool,"doc":..,"date":..}. doc/date optional.
RelationTriple parse_relation_line(const std::string& line);

// Canonical form: fixed field order, tags in enum order, optional fields
// omitted when empty. parse(serialize(t)) == canonicalize(t).
std::string serialize_relation(const RelationTriple& t);

// Ingestion gate: at least one argument is a named entity.
inline bool filter_named_entity(const RelationTriple& t) {
  return t.has_named_entity;
}

// Predicate bound to the FIGER types of its argument slots.
struct TypedPredicate {
  std::string pred;
  std::string type1;
  std::string type2;

  bool operator==(const TypedPredicate&) const = default;
};

// Canonically ordered type pair identifying one subgraph.
struct TypePairKey {
  std::string type_a;  // type_a <= type_b always
  std::string type_b;

  auto operator<=>(const TypePairKey&) const = default;
  std::string str() const { return type_a + "#" + type_b; }
};

// Builds the canonical key; reports whether (t1,t2) had to be swapped.
TypePairKey make_type_pair(const std::string& t1, const std::string& t2,
                           bool* swapped = nullptr);

// Argument pair aligned to the slot order of the owning TypePairKey.
struct ArgumentPair {
  std::string arg_a;
  std::string arg_b;

  bool operator==(const ArgumentPair&) const = default;
};

// Appended to a predicate when canonical key ordering swapped its slots.
inline constexpr std::string_view kReverseSuffix = "#rev";

// entity -> FIGER type map with a fallback for unknown entities.
class TypeMap {
 public:
  explicit TypeMap(std::string fallback = "thing")
      : fallback_(std::move(fallback)) {}

  // TSV, two columns: entity <TAB> figer_type.
  static TypeMap load(const std::string& path, std::string fallback = "thing");

  void add(const std::string& entity, const std::string& type);
  const std::string& lookup(const std::string& entity) const;
  const std::string& fallback() const { return fallback_; }
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
  std::string fallback_;
};

struct TypedRelation {
  TypedPredicate pred;
  TypePairKey key;
  ArgumentPair args;
};

// Types both arguments, canonicalizes the key, and marks slot reversal on
// the predicate when the canonical order swaps the slots. The lemma itself
// is never altered.
TypedRelation type_relation(const RelationTriple& triple, const TypeMap& types);

}  // namespace entgraph
