#include "entgraph/lexicon.hpp"

#include <fstream>

#include "entgraph/errors.hpp"

namespace entgraph {

namespace {

bool pos_matches(const std::string& constraint, const std::string& pos) {
  if (constraint == "*") return true;
  if (!constraint.empty() && constraint.back() == '*')
    return pos.compare(0, constraint.size() - 1, constraint, 0,
                       constraint.size() - 1) == 0;
  return constraint == pos;
}

}  // namespace

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lexicon: " + path);
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected lemma<TAB>pos<TAB>tag");
    const std::string tag_str = line.substr(t2 + 1);
    auto tag = parse_modality_tag(tag_str);
    if (!tag)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": unknown tag '" + tag_str + "'");
    lex.add({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), *tag});
  }
  return lex;
}

void Lexicon::add(LexiconEntry entry) {
  auto& entries = by_lemma_[entry.lemma];
  for (const LexiconEntry& e : entries) {
    if (e.pos == entry.pos)
      throw DataError("duplicate lexicon entry: " + entry.lemma + "/" +
                      entry.pos);
  }
  entries.push_back(std::move(entry));
  ++count_;
}

std::optional<ModalityTag> Lexicon::match(const std::string& lemma,
                                          const std::string& pos) const {
  auto it = by_lemma_.find(lemma);
  if (it == by_lemma_.end()) return std::nullopt;
  for (const LexiconEntry& e : it->second) {
    if (pos_matches(e.pos, pos)) return e.tag;
  }
  return std::nullopt;
}

}  // namespace entgraph
