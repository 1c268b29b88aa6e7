#include <doctest.h>

#include "cloc/labels.hpp"
#include "cloc/rigid.hpp"

using namespace cloc;

namespace {
int L(const Category& c, const char* s) { return parse_indec(c, s); }
Obj objs(const Category& c, std::initializer_list<const char*> names) {
  Obj x;
  for (const char* s : names) x.summands.push_back(L(c, s));
  return x;
}
}  // namespace

TEST_CASE("rigid objects are counted by polygon dissections") {
  // Nonempty partial triangulations of the (n+3)-gon: Kirkman-Cayley numbers minus one.
  const int dissections[] = {0, 3, 11, 45, 197, 903};
  const int triangulations[] = {0, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 5; ++n) {
    const Category c = Category::build(Polygon{n});
    const auto all = enumerate_rigid(c);
    CHECK(static_cast<int>(all.size()) == dissections[n] - 1);
    int ct = 0;
    for (const auto& t : all) ct += is_cluster_tilting(c, t) ? 1 : 0;
    CHECK(ct == triangulations[n]);
  }
}

TEST_CASE("the A_4 example object") {
  const Category c = Category::build(Polygon{4});
  const Obj t = objs(c, {"M44", "M14", "M11"});
  CHECK(is_rigid(c, t));
  const RigidObject r = make_rigid(c, t);
  CHECK_FALSE(is_cluster_tilting(c, r));
  CHECK(double_perp_holds(c, r));

  const auto stp = perp_view(c, r, Subcat::SigmaTPerp);
  std::vector<std::string> names;
  for (int x : stp.indecs()) names.push_back(c.label_name(x));
  CHECK(names == std::vector<std::string>{"SP4", "SP3", "SP1", "M23", "M22"});

  CHECK_FALSE(is_rigid(c, objs(c, {"M34", "M23"})));
  CHECK_THROWS_AS(make_rigid(c, objs(c, {"M34", "M23"})), std::invalid_argument);
  CHECK(make_rigid(c, objs(c, {"M44", "M44"})).summands.size() == 1);
}

TEST_CASE("approximations of M34") {
  const Category c = Category::build(Polygon{4});
  const RigidObject r = make_rigid(c, objs(c, {"M44", "M14", "M11"}));
  const Mor a = right_approx(c, r, Obj{{L(c, "M34")}}, true);
  CHECK(a.source.iso_class() == objs(c, {"M44", "M11"}).iso_class());
  CHECK(is_right_approx(c, r, a));
  CHECK(is_right_minimal(c, a));
  CHECK_FALSE(in_CT(c, r, Obj{{L(c, "M34")}}));
  CHECK(in_CT(c, r, Obj{{L(c, "M13")}}));
  const WakamatsuReport w = wakamatsu_check(c, r, Obj{{L(c, "M34")}});
  CHECK(w.ok());
  CHECK(w.triangle.z.iso_class() == Obj{{L(c, "M23")}}.iso_class());
}

TEST_CASE("cluster-tilting fan: C(T) is everything") {
  const Category c = Category::build(Polygon{4});
  const RigidObject r = make_rigid(c, objs(c, {"0-2", "0-3", "0-4", "0-5"}));
  CHECK(is_cluster_tilting(c, r));
  for (int x = 0; x < c.size(); ++x) CHECK(in_CT(c, r, Obj{{x}}));
  CHECK(perp_view(c, r, Subcat::SigmaTPerp).indecs() == perp_view(c, r, Subcat::AddSigmaT).indecs());
}

TEST_CASE("property: Hom(T, f) = 0 iff f factors through ΣT⊥, for every rigid T in A_3") {
  const Category c = Category::build(Polygon{3});
  for (const auto& t : enumerate_rigid(c)) {
    const auto stp = perp_view(c, t, Subcat::SigmaTPerp);
    for (int x = 0; x < c.size(); ++x)
      for (int y = 0; y < c.size(); ++y) {
        if (!c.hom_dim(x, y)) continue;
        const Mor f = basis_mor(c, x, y);
        bool h_zero = true;
        for (int w : t.summands) h_zero = h_zero && hom_from(c, w, f).is_zero();
        CHECK(h_zero == factors_through(c, stp, f));
      }
    CHECK(double_perp_holds(c, t));
  }
}
