#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace entgraph {

// Closed set of modality markers a relation instance can carry. An empty
// tag set means the relation is asserted.
enum class ModalityTag {
  MOD,        // modal operator (may, might, should, ...)
  ATT_SAY,    // propositional attitude, reported speech
  ATT_THINK,  // propositional attitude, belief/desire
  COND,       // under scope of a conditional
  COUNT,      // counterfactual
  LNEG,       // lexical negation; tagged but never used for filtering
};

using TagSet = std::set<ModalityTag>;

// Accepts the six canonical names plus the REP_SAY / REP_THINK aliases
// found in older tag dumps. Returns nullopt for anything else.
std::optional<ModalityTag> parse_modality_tag(std::string_view s);

std::string_view to_string(ModalityTag t);

// Tags whose presence excludes a relation from the asserted corpus.
// LNEG is deliberately not a member.
const TagSet& removal_set();

// True when tags contains no removal-set member. LNEG-only is asserted.
bool is_asserted(const TagSet& tags);

}  // namespace entgraph
