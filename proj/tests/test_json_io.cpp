#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtqft/builders.hpp"
#include "gtqft/errors.hpp"
#include "gtqft/json_io.hpp"

#include <algorithm>

using namespace gtqft;

TEST_CASE("group descriptors round trip") {
  for (const FiniteGroup& G : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3),
                               FiniteGroup::dihedral(5)}) {
    const FiniteGroup back = group_from_json(group_to_json(G));
    CHECK(back.table() == G.table());
    const FiniteGroup via_table = group_from_json(group_to_table_json(G));
    CHECK(via_table.table() == G.table());
    CHECK(via_table.name() == G.name());
  }
  CHECK(group_to_json(FiniteGroup::symmetric(3))["kind"] == "symmetric");
  CHECK_THROWS_AS(group_from_json(Json{{"kind", "simple"}}), ParseError);
  CHECK_THROWS_AS(group_from_json(Json::array()), ParseError);
}

TEST_CASE("presentations round trip") {
  for (const PresentationPtr& p :
       {figure_eight(), pair_of_pants().apex, three_strand_tube().apex,
        identity_cospan(figure_eight()).apex, empty_presentation()}) {
    const GroupoidPresentation back = presentation_from_json(presentation_to_json(*p));
    CHECK(back == *p);
  }
}

TEST_CASE("presentation with relations round trips") {
  auto p = std::make_shared<GroupoidPresentation>();
  const int u = p->add_object("u", "base");
  const int a = p->add_generator("a", u, u, "loop");
  p->add_relation(make_word(*p, {{a, false}, {a, false}}), empty_word(u));
  p->add_relation(empty_word(u), empty_word(u)); // trivial, needs explicit src
  const Json j = presentation_to_json(*p);
  const GroupoidPresentation back = presentation_from_json(j);
  CHECK(back == *p);
  CHECK(back.objects()[0].label == "base");
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS_AS(presentation_from_json(Json::parse(
                      R"({"objects":[{"id":"o"}],"generators":[{"id":"a","src":"o","tgt":"x"}]})")),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(
                      R"({"objects":[{"id":"o"}],"generators":[{"id":"a","src":"o","tgt":"o"}],
                          "relations":[{"lhs":[["b","+"]],"rhs":[]}]})")),
                  ParseError);
  CHECK_THROWS_AS(presentation_from_json(Json::parse(
                      R"({"objects":[{"id":"o"}],"generators":[],
                          "relations":[{"lhs":[],"rhs":[]}]})")),
                  ParseError); // trivial relation without "src"
}

TEST_CASE("maps round trip") {
  const Cospan c = pair_of_pants();
  const PresentationMap back = map_from_json(map_to_json(c.in_right), c.right, c.apex);
  CHECK(back.object_map == c.in_right.object_map);
  for (std::size_t a = 0; a < back.generator_map.size(); ++a)
    CHECK(back.generator_map[a] == c.in_right.generator_map[a]);

  Json j = map_to_json(c.in_left);
  j["generators"].erase("x2");
  CHECK_THROWS_AS(map_from_json(j, c.left, c.apex), ParseError);
}

TEST_CASE("cospans round trip") {
  for (const Cospan& c : {pair_of_pants(), three_strand_tube(), artin_braid_generator(3, 2),
                          identity_cospan(empty_presentation())}) {
    const Cospan back = cospan_from_json(cospan_to_json(c));
    CHECK(back.label == c.label);
    CHECK(*back.apex == *c.apex);
    CHECK(*back.left == *c.left);
    CHECK(*back.right == *c.right);
    CHECK(back.in_right.object_map == c.in_right.object_map);
    for (std::size_t a = 0; a < back.in_right.generator_map.size(); ++a)
      CHECK(back.in_right.generator_map[a] == c.in_right.generator_map[a]);
  }
}

TEST_CASE("matrix reports use p/q strings") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  const Cospan c = pair_of_pants();
  const Json j = raw_matrix_to_json(c, normalized_counting_matrix(c, S3));
  CHECK(j["rows"] == 6);
  CHECK(j["cols"] == 36);
  bool saw_fraction = false;
  for (const Json& row : j["entries"])
    for (const Json& e : row) {
      CHECK(e.is_string());
      CHECK(e.get<std::string>().find('/') != std::string::npos);
      saw_fraction = saw_fraction || e == "3/2";
    }
  CHECK(saw_fraction); // normalization produced a genuine non-integer

  const Json cj = class_matrix_to_json(c, class_matrix(c, S3));
  CHECK(cj["col_basis"].size() == 9);
  CHECK(cj["row_basis"][0]["rep"].contains("y1"));
}

TEST_CASE("csv output shape") {
  const FiniteGroup Z2 = FiniteGroup::cyclic(2);
  const Cospan c = identity_cospan(circle());
  const std::string csv = class_matrix_to_csv(c, class_matrix(c, Z2));
  // Header plus one line per class of Z2 on the circle.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("basis,", 0) == 0);
  CHECK(csv.find("1/1") != std::string::npos);
}

TEST_CASE("load_json_file") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
}
