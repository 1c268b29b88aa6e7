#include <doctest.h>

#include <random>

#include "cloc/labels.hpp"
#include "cloc/triangle.hpp"

using namespace cloc;

namespace {
int L(const Category& c, const char* s) { return parse_indec(c, s); }
}  // namespace

TEST_CASE("almost split triangle ending in M34") {
  const Category c = Category::build(Polygon{4});
  const Mor s = row_join(basis_mor(c, L(c, "M44"), L(c, "M34")), basis_mor(c, L(c, "SM24"), L(c, "M34")));
  const Triangle t = complete_triangle(c, s);
  CHECK(t.cert.ok());
  CHECK(t.z.iso_class() == Obj{{L(c, "M13")}}.iso_class());
  CHECK(suspend_obj(c, t.z, -1).iso_class() == Obj{{L(c, "SM34")}}.iso_class());
}

TEST_CASE("trivial cones") {
  const Category c = Category::build(Polygon{3});
  for (int x = 0; x < c.size(); ++x) {
    const Obj ox{{x}};
    CHECK(cone_object(c, identity_mor(ox)).is_zero());
    CHECK(cone_object(c, zero_mor(Obj{}, ox)).iso_class() == ox.iso_class());
    CHECK(cone_object(c, zero_mor(ox, Obj{})).iso_class() == suspend_obj(c, ox).iso_class());
    // Split case: the zero map x -> x has cone x + Σx.
    CHECK(cone_object(c, zero_mor(ox, ox)).iso_class() == direct_sum(ox, suspend_obj(c, ox)).iso_class());
  }
}

TEST_CASE("cone by profile equals cone by smoothing for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const Category c = Category::build(Polygon{n});
    const Polygon& p = c.polygon();
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) {
        if (!c.hom_dim(x, y)) continue;
        Obj smooth;
        for (const Arc& a : smooth_crossing(p, rotate(p, c.arc(y), -1), c.arc(x)))
          smooth.summands.push_back(c.index_of(rotate(p, a, 1)));
        CHECK(cone_object(c, basis_mor(c, x, y)).iso_class() == smooth.iso_class());
      }
  }
}

TEST_CASE("property: completed triangles certify, rotate, and are seed independent up to iso") {
  const Category c = Category::build(Polygon{5});  // singular hom-dimension matrix
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(0, c.size() - 1), coef(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const Obj x{{pick(rng), pick(rng)}}, y{{pick(rng)}};
    Mat v(hom_dimension(c, x, y), 1);
    for (std::size_t k = 0; k < v.rows(); ++k) v(k, 0) = coef(rng);
    const Mor f = from_coordinates(c, x, y, v);
    const Triangle t = complete_triangle(c, f, 0);
    CHECK(t.cert.ok());
    CHECK(certify_triangle(c, t.f, t.g, t.h, true).ok());
    const Triangle r = rotate_triangle(c, t);
    CHECK(certify_triangle(c, r.f, r.g, r.h).ok());
    CHECK(complete_triangle(c, f, 99).z.iso_class() == t.z.iso_class());
    // The profile predicts Hom(W, Z) for every W.
    const auto p = cone_profile(c, f);
    for (int w = 0; w < c.size(); ++w) CHECK(static_cast<int>(hom_dimension(c, Obj{{w}}, t.z)) == p[w]);
  }
}

TEST_CASE("a non-triangle fails certification") {
  const Category c = Category::build(Polygon{2});
  const int x = 0;
  const Obj ox{{x}};
  // X -0-> X -1-> X -0-> ΣX is not exact at ΣX.
  const CertReport bad = certify_triangle(c, zero_mor(ox, ox), identity_mor(ox), zero_mor(ox, suspend_obj(c, ox)));
  CHECK_FALSE(bad.ok());
}
