#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "entgraph/modality_tag.hpp"

namespace entgraph {

// Trigger lexicon: lemma plus a POS constraint. The POS field is either an
// exact tag ("MD"), a prefix wildcard ("V*") or "*" for any.
struct LexiconEntry {
  std::string lemma;
  std::string pos;
  ModalityTag tag;
};

class Lexicon {
 public:
  // TSV, three columns: lemma <TAB> pos <TAB> tag.
  static Lexicon load(const std::string& path);

  // Throws DataError on duplicate (lemma, pos) keys.
  void add(LexiconEntry entry);

  // First entry whose lemma matches and whose POS constraint accepts pos.
  std::optional<ModalityTag> match(const std::string& lemma,
                                   const std::string& pos) const;

  std::size_t size() const { return count_; }

 private:
  // lemma -> entries, in insertion order
  std::unordered_map<std::string, std::vector<LexiconEntry>> by_lemma_;
  std::size_t count_ = 0;
};

}  // namespace entgraph
