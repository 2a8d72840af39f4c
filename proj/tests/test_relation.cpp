#include "doctest.h"

#include "entgraph/errors.hpp"
#include "entgraph/relation.hpp"

using namespace entgraph;

TEST_CASE("parse_relation_line fills all fields") {
  const std::string line =
      R"({"pred":"beat.1,beat.2","arg1":"Falcons","arg2":"Seahawks","tags":[],"ne":true})";
  const RelationTriple t = parse_relation_line(line);
  CHECK(t.pred == "beat.1,beat.2");
  CHECK(t.arg1 == "Falcons");
  CHECK(t.arg2 == "Seahawks");
  CHECK(t.tags.empty());
  CHECK(t.has_named_entity);
}

TEST_CASE("round trip on canonical records") {
  RelationTriple t;
  t.pred = "elect.1,elect.2";
  t.arg1 = "Biden";
  t.arg2 = "USA";
  t.tags = {ModalityTag::MOD, ModalityTag::LNEG};
  t.doc_id = "d17";
  t.date = "2013-02-05";
  t.has_named_entity = true;
  const std::string line = serialize_relation(t);
  CHECK(parse_relation_line(line) == t);
  // serialize . parse is the identity on its own output
  CHECK(serialize_relation(parse_relation_line(line)) == line);
}

TEST_CASE("REP_* aliases deserialize to ATT_*") {
  const RelationTriple t = parse_relation_line(
      R"({"pred":"say.1,say.2","arg1":"A","arg2":"B","tags":["REP_SAY","REP_THINK"],"ne":true})");
  CHECK(t.tags == TagSet{ModalityTag::ATT_SAY, ModalityTag::ATT_THINK});
}

TEST_CASE("malformed lines are rejected") {
  CHECK_THROWS_AS(parse_relation_line("not json"), ParseError);
  CHECK_THROWS_AS(parse_relation_line(
                      R"({"pred":"","arg1":"A","arg2":"B","tags":[],"ne":true})"),
                  ParseError);
  CHECK_THROWS_AS(parse_relation_line(
                      R"({"pred":"p.1,p.2","arg1":"  ","arg2":"B","tags":[],"ne":true})"),
                  ParseError);
  CHECK_THROWS_AS(parse_relation_line(
                      R"({"pred":"p.1,p.2","arg1":"A","arg2":"B","tags":["FOO"],"ne":true})"),
                  ParseError);
  CHECK_THROWS_AS(parse_relation_line(
                      R"({"pred":"p.1,p.2","arg1":"A","arg2":"B","ne":true})"),
                  ParseError);
}

TEST_CASE("argument whitespace is trimmed") {
  const RelationTriple t = parse_relation_line(
      R"({"pred":" beat.1,beat.2 ","arg1":" Falcons","arg2":"Seahawks ","tags":[],"ne":false})");
  CHECK(t.pred == "beat.1,beat.2");
  CHECK(t.arg1 == "Falcons");
  CHECK(t.arg2 == "Seahawks");
}

TEST_CASE("filter_named_entity keeps exactly the flagged triples") {
  int kept = 0;
  for (int i = 0; i < 10; ++i) {
    RelationTriple t;
    t.pred = "p.1,p.2";
    t.arg1 = "a";
    t.arg2 = "b";
    t.has_named_entity = (i % 3 == 0);  // 0,3,6,9 -> 4 of 10
    if (filter_named_entity(t)) ++kept;
  }
  CHECK(kept == 4);
}

TEST_CASE("type pair key ordering is canonical and total") {
  bool swapped = false;
  CHECK(make_type_pair("person", "location", &swapped) ==
        TypePairKey{"location", "person"});
  CHECK(swapped);
  CHECK(make_type_pair("location", "person", &swapped) ==
        TypePairKey{"location", "person"});
  CHECK(!swapped);
  CHECK(make_type_pair("organization", "organization") ==
        TypePairKey{"organization", "organization"});
}

TEST_CASE("type_relation types arguments and records slot reversal") {
  TypeMap types;
  types.add("Falcons", "organization");
  types.add("Seahawks", "organization");
  types.add("Biden", "person");
  types.add("USA", "location");

  RelationTriple beat;
  beat.pred = "beat.1,beat.2";
  beat.arg1 = "Falcons";
  beat.arg2 = "Seahawks";
  TypedRelation r = type_relation(beat, types);
  CHECK(r.key == TypePairKey{"organization", "organization"});
  CHECK(r.pred.pred == "beat.1,beat.2");
  CHECK(r.args == ArgumentPair{"Falcons", "Seahawks"});

  RelationTriple elect;
  elect.pred = "elect.1,elect.2";
  elect.arg1 = "Biden";
  elect.arg2 = "USA";
  r = type_relation(elect, types);
  CHECK(r.key == TypePairKey{"location", "person"});
  CHECK(r.pred.pred == "elect.1,elect.2#rev");
  CHECK(r.args == ArgumentPair{"USA", "Biden"});

  SUBCASE("unknown entities get the fallback type") {
    RelationTriple t;
    t.pred = "see.1,see.2";
    t.arg1 = "Nessie";
    t.arg2 = "Biden";
    r = type_relation(t, types);
    CHECK(r.pred.type1 == "thing");
    CHECK(r.key == TypePairKey{"person", "thing"});
  }
}
