#include "entgraph/relation.hpp"

#include <fstream>

#include "entgraph/errors.hpp"
#include "json.hpp"

namespace entgraph {

using json = nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string require_string(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end() || !it->is_string())
    throw ParseError(std::string("missing or non-string field '") + field +
                     "'");
  return it->get<std::string>();
}

}  // namespace

RelationTriple parse_relation_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad relation JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("relation line is not a JSON object");

  RelationTriple t;
  t.pred = trim(require_string(j, "pred"));
  t.arg1 = trim(require_string(j, "arg1"));
  t.arg2 = trim(require_string(j, "arg2"));
  if (t.pred.empty()) throw ParseError("empty predicate");
  if (t.arg1.empty() || t.arg2.empty()) throw ParseError("empty argument");

  auto tags = j.find("tags");
  if (tags == j.end() || !tags->is_array())
    throw ParseError("missing or non-array field 'tags'");
  for (const auto& tag : *tags) {
    if (!tag.is_string()) throw ParseError("non-string tag");
    auto parsed = parse_modality_tag(tag.get<std::string>());
    if (!parsed)
      throw ParseError("unknown tag '" + tag.get<std::string>() + "'");
    t.tags.insert(*parsed);
  }

  auto ne = j.find("ne");
  if (ne == j.end() || !ne->is_boolean())
    throw ParseError("missing or non-boolean field 'ne'");
  t.has_named_entity = ne->get<bool>();

  if (j.contains("doc")) t.doc_id = require_string(j, "doc");
  if (j.contains("date")) t.date = require_string(j, "date");
  return t;
}

std::string serialize_relation(const RelationTriple& t) {
  json j;
  j["pred"] = t.pred;
  j["arg1"] = t.arg1;
  j["arg2"] = t.arg2;
  json tags = json::array();
  for (ModalityTag tag : t.tags) tags.push_back(std::string(to_string(tag)));
  j["tags"] = std::move(tags);
  j["ne"] = t.has_named_entity;
  if (!t.doc_id.empty()) j["doc"] = t.doc_id;
  if (!t.date.empty()) j["date"] = t.date;
  return j.dump();
}

TypePairKey make_type_pair(const std::string& t1, const std::string& t2,
                           bool* swapped) {
  if (t2 < t1) {
    if (swapped) *swapped = true;
    return {t2, t1};
  }
  if (swapped) *swapped = false;
  return {t1, t2};
}

TypeMap TypeMap::load(const std::string& path, std::string fallback) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open type map: " + path);
  TypeMap m(std::move(fallback));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected entity<TAB>type");
    m.add(line.substr(0, tab), line.substr(tab + 1));
  }
  return m;
}

void TypeMap::add(const std::string& entity, const std::string& type) {
  map_[entity] = type;
}

const std::string& TypeMap::lookup(const std::string& entity) const {
  auto it = map_.find(entity);
  return it == map_.end() ? fallback_ : it->second;
}

TypedRelation type_relation(const RelationTriple& triple,
                            const TypeMap& types) {
  const std::string& t1 = types.lookup(triple.arg1);
  const std::string& t2 = types.lookup(triple.arg2);
  bool swapped = false;
  TypedRelation out;
  out.key = make_type_pair(t1, t2, &swapped);
  std::string pred = triple.pred;
  if (swapped) pred += kReverseSuffix;
  out.pred = {pred, t1, t2};
  out.args = swapped ? ArgumentPair{triple.arg2, triple.arg1}
                     : ArgumentPair{triple.arg1, triple.arg2};
  return out;
}

}  // namespace entgraph
