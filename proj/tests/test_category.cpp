#include <doctest.h>

#include <map>
#include <random>

#include "cloc/category.hpp"
#include "cloc/labels.hpp"

using namespace cloc;

namespace {

const Category& cat(int n) {
  static std::map<int, Category> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, Category::build(Polygon{n})).first;
  return it->second;
}

int L(const Category& c, const char* s) { return parse_indec(c, s); }

}  // namespace

TEST_CASE("A_4 labels sit on the expected arcs") {
  const Category& c = cat(4);
  const std::map<std::string, std::string> expected = {
      {"0-2", "SP4"}, {"0-3", "SP3"}, {"0-4", "SP2"}, {"0-5", "SP1"}, {"1-3", "M44"},
      {"1-4", "M34"}, {"1-5", "M24"}, {"1-6", "M14"}, {"2-4", "M33"}, {"2-5", "M23"},
      {"2-6", "M13"}, {"3-5", "M22"}, {"3-6", "M12"}, {"4-6", "M11"}};
  REQUIRE(c.size() == 14);
  for (const auto& [arc, label] : expected) CHECK(c.label_name(c.index_of(parse_arc(c.polygon(), arc))) == label);
  CHECK(c.anchoring().rotation == 0);
  CHECK_FALSE(c.anchoring().reflected);
}

TEST_CASE("hom dimensions against hand-computed module values") {
  const Category& c = cat(4);
  // Hom(M44, M14): the simple projective embeds. Hom(M14, M44) = 0.
  CHECK(c.hom_dim(L(c, "M44"), L(c, "M14")) == 1);
  CHECK(c.hom_dim(L(c, "M14"), L(c, "M44")) == 0);
  CHECK(c.hom_dim(L(c, "M11"), L(c, "M34")) == 1);
  CHECK(c.hom_dim(L(c, "M34"), L(c, "M33")) == 1);
  CHECK(c.hom_dim(L(c, "M34"), L(c, "M24")) == 1);
  CHECK(c.hom_dim(L(c, "M44"), L(c, "SM44")) == 0);
  CHECK(c.hom_dim(L(c, "P4"), L(c, "P2")) == 1);
  CHECK(c.hom_dim(L(c, "P2"), L(c, "P4")) == 0);
}

TEST_CASE("suspension rotates arcs and has order n+3") {
  for (int n = 1; n <= 6; ++n) {
    const Category& c = cat(n);
    for (int x = 0; x < c.size(); ++x) {
      CHECK(c.arc(c.sigma(x)) == rotate(c.polygon(), c.arc(x), 1));
      CHECK(c.sigma_inv(c.sigma(x)) == x);
      CHECK(c.shift(x, n + 3) == x);
    }
  }
}

TEST_CASE("mesh hom dimensions equal the crossing rule for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const Category& c = cat(n);
    const Polygon& p = c.polygon();
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y)
        CHECK(c.hom_dim(x, y) == (crosses(p, c.arc(x), rotate(p, c.arc(y), -1)) ? 1 : 0));
  }
}

TEST_CASE("mesh hom dimensions equal the module oracle for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const Category& c = cat(n);
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) CHECK(oracle_hom_dim(n, c.label(x), c.label(y)) == c.hom_dim(x, y));
  }
}

TEST_CASE("AR quiver has (n-1)(n+3) arrows") {
  for (int n = 1; n <= 7; ++n) CHECK(static_cast<int>(cat(n).ar_arrows().size()) == (n - 1) * (n + 3));
}

TEST_CASE("hom-dimension matrix is singular exactly for odd n >= 5") {
  for (int n = 1; n <= 8; ++n) {
    const bool singular = !cat(n).hom_dim_inverse().has_value();
    CHECK(singular == (n % 2 == 1 && n >= 5));
  }
  CHECK(rank(cat(5).hom_dim_matrix()) == 18);
}

TEST_CASE("property: composition is associative and unital on random maps") {
  const Category& c = cat(5);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, c.size() - 1), coef(-3, 3);
  auto random_obj = [&] { return Obj{{pick(rng), pick(rng)}}; };
  auto random_mor = [&](const Obj& x, const Obj& y) {
    Mat v(hom_dimension(c, x, y), 1);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, 0) = coef(rng);
    return from_coordinates(c, x, y, v);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const Obj a = random_obj(), b = random_obj(), d = random_obj(), e = random_obj();
    const Mor f = random_mor(a, b), g = random_mor(b, d), h = random_mor(d, e);
    CHECK(compose(c, h, compose(c, g, f)).coeffs == compose(c, compose(c, h, g), f).coeffs);
    CHECK(compose(c, identity_mor(b), f).coeffs == f.coeffs);
    CHECK(compose(c, f, identity_mor(a)).coeffs == f.coeffs);
    // Σ is a functor.
    CHECK(suspend_mor(c, compose(c, g, f)).coeffs == compose(c, suspend_mor(c, g), suspend_mor(c, f)).coeffs);
    CHECK(suspend_mor(c, suspend_mor(c, f), -1).coeffs == f.coeffs);
  }
}

TEST_CASE("labels parse in every accepted spelling") {
  const Category& c = cat(4);
  CHECK(L(c, "P4") == L(c, "M44"));
  CHECK(L(c, "P1") == L(c, "M14"));
  CHECK(L(c, "SP2") == c.sigma(L(c, "M24")));
  CHECK(L(c, "S^2M34") == c.sigma(c.sigma(L(c, "M34"))));
  CHECK(L(c, "S^-1SP3") == L(c, "M34"));
  CHECK(L(c, "1-4") == L(c, "M34"));
  CHECK_THROWS_AS(L(c, "M55"), std::invalid_argument);
  CHECK_THROWS_AS(L(c, "Q1"), std::invalid_argument);
  const Category& c10 = cat(10);
  CHECK(c10.label_name(L(c10, "M3_10")) == "M3_10");
}

TEST_CASE("minimal reduction splits off redundant summands") {
  const Category& c = cat(4);
  const int m44 = L(c, "M44"), m34 = L(c, "M34");
  // Two copies of the same map: one copy is redundant.
  Mor f{Obj{{m44, m44}}, Obj{{m34}}, Mat::from_ints({{1, 2}})};
  const RightMinimal r = right_minimal_reduce(c, f);
  CHECK(r.minimal.source.count() == 1);
  CHECK(r.split_off.count() == 1);
  CHECK(is_right_minimal(c, r.minimal));
  CHECK_FALSE(is_right_minimal(c, f));
  CHECK(compose(c, f, r.automorphism).coeffs.block(0, 1, 1, 1).is_zero());
}
