#include "entgraph/modality_tag.hpp"

namespace entgraph {

std::optional<ModalityTag> parse_modality_tag(std::string_view s) {
  if (s == "MOD") return ModalityTag::MOD;
  if (s == "ATT_SAY" || s == "REP_SAY") return ModalityTag::ATT_SAY;
  if (s == "ATT_THINK" || s == "REP_THINK") return ModalityTag::ATT_THINK;
  if (s == "COND") return ModalityTag::COND;
  if (s == "COUNT") return ModalityTag::COUNT;
  if (s == "LNEG") return ModalityTag::LNEG;
  return std::nullopt;
}

std::string_view to_string(ModalityTag t) {
  switch (t) {
    case ModalityTag::MOD: return "MOD";
    case ModalityTag::ATT_SAY: return "ATT_SAY";
    case ModalityTag::ATT_THINK: return "ATT_THINK";
    case ModalityTag::COND: return "COND";
    case ModalityTag::COUNT: return "COUNT";
    case ModalityTag::LNEG: return "LNEG";
  }
  return "?";
}

const TagSet& removal_set() {
  static const TagSet kSet = {ModalityTag::MOD, ModalityTag::ATT_SAY,
                              ModalityTag::ATT_THINK, ModalityTag::COND,
                              ModalityTag::COUNT};
  return kSet;
}

bool is_asserted(const TagSet& tags) {
  for (ModalityTag t : tags) {
    if (removal_set().count(t)) return false;
  }
  return true;
}

}  // namespace entgraph
