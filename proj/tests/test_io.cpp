#include <doctest.h>

#include "cloc/io.hpp"
#include "cloc/labels.hpp"
#include "cloc/suites.hpp"

using namespace cloc;

TEST_CASE("object and morphism literals round-trip") {
  const Category c = Category::build(Polygon{4});
  const Obj x = parse_obj(c, "M44 + SM24");
  CHECK(format_obj(c, x) == "M44+SP2");
  CHECK(parse_obj(c, "0").is_zero());
  CHECK(parse_obj(c, "1-3+0-4") == x);

  const Mor f = parse_mor(c, "M44+SM24 -> M34 : [[1, -1/2]]");
  CHECK(f.coeffs(0, 1) == make_scalar(-1, 2));
  CHECK(parse_mor(c, format_mor(c, f)).coeffs == f.coeffs);
  // Omitted matrix: every basis map with coefficient one.
  CHECK(parse_mor(c, "M44+SM24 -> M34").coeffs == Mat::from_ints({{1, 1}}));
  CHECK(parse_mor(c, "0 -> M34 : []").target.count() == 1);
  CHECK(parse_mor(c, "M34 -> 0 : []").source.count() == 1);

  CHECK_THROWS_AS(parse_mor(c, "M44 -> M34 : [[1,2]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mor(c, "M14 -> M44 : [[1]]"), std::invalid_argument);  // zero hom space
  CHECK_THROWS_AS(parse_mor(c, "M44 M34"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mor(c, "M44 -> M34 : [[x]]"), std::invalid_argument);
}

TEST_CASE("zigzag literals") {
  const Category c = Category::build(Polygon{4});
  const Zigzag z = parse_zigzag(c, "M44+SM24 -> M34 : [[1,1]]; inv:M44+SM24 -> M34 : [[1,1]]");
  REQUIRE(z.size() == 2);
  CHECK_FALSE(z[0].inverse);
  CHECK(z[1].inverse);
  CHECK(parse_zigzag(c, format_zigzag(c, z)).size() == 2);
  CHECK_THROWS_AS(parse_zigzag(c, "M44 -> M34; M44 -> M34"), std::invalid_argument);
  CHECK_THROWS_AS(parse_zigzag(c, " ; "), std::invalid_argument);
}

TEST_CASE("category export") {
  const Category c = Category::build(Polygon{2});
  const json j = category_json(c);
  CHECK(j["schema"] == "cluster-loc/cat/v1");
  CHECK(j["indecomposables"].size() == 5);
  CHECK(j["hom_dim"][0][0] == 1);
  CHECK(j["ar_arrows"].size() == 5);
}

TEST_CASE("config validation") {
  const json good = json::parse(R"({"schema":"cluster-loc/config/v1","type":"A","n":4,
                                    "T":["M44","M14","M11"],"seed":7,"suites":["kernel","stilde"]})");
  const InstanceConfig cfg = parse_config(good);
  CHECK(cfg.n == 4);
  CHECK(cfg.seed == 7);
  CHECK(cfg.t.size() == 3);
  CHECK(parse_config(config_json(cfg)).suites == cfg.suites);

  CHECK_THROWS_AS(parse_config(json::parse(R"({"n":4,"T":["M44"],"suites":["nope"]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n":4,"type":"D","T":["M44"]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n":0,"T":["M44"]})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_config(json::parse(R"({"n":4})")), std::invalid_argument);
  CHECK(parse_config(json::parse(R"({"n":3,"T":"all"})")).t_mode == TMode::All);
  CHECK(parse_config(json::parse(R"({"n":6,"T":{"random":3}})")).random_count == 3);

  // A non-rigid T is rejected before any suite runs.
  const Category c = Category::build(Polygon{4});
  const InstanceConfig bad = parse_config(json::parse(R"({"n":4,"T":["M34","M23"]})"));
  CHECK_THROWS_AS(config_instances(c, bad), std::invalid_argument);
  CHECK_THROWS_AS(run_suites(c, bad), std::invalid_argument);
}
