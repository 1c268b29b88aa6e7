#include <doctest.h>

#include <map>
#include <set>

#include "cloc/labels.hpp"
#include "cloc/modules.hpp"

using namespace cloc;

namespace {

int L(const Category& c, const char* s) { return parse_indec(c, s); }

struct Example {
  Category c = Category::build(Polygon{4});
  RigidObject t = make_rigid(c, Obj{{L(c, "M44"), L(c, "M14"), L(c, "M11")}});
  Algebra a{c, t};
};

const Example& ex() {
  static const Example e;
  return e;
}

}  // namespace

TEST_CASE("endomorphism algebra of M44+M14+M11") {
  const Algebra& a = ex().a;
  CHECK(a.vertices() == 3);
  CHECK(a.dim() == 5);
  std::set<std::pair<int, int>> arrows(a.arrows().begin(), a.arrows().end());
  CHECK(arrows == std::set<std::pair<int, int>>{{1, 0}, {2, 1}});
  CHECK(a.zero_relations().size() == 1);
  CHECK(a.nilpotency_index() == 2);
  // Every radical basis element is a product of arrows.
  for (int b = 0; b < a.dim(); ++b)
    if (!a.is_identity(b)) CHECK_FALSE(a.factorization(b).first.empty());
}

TEST_CASE("five indecomposable modules") {
  const Algebra& a = ex().a;
  int skipped = -1;
  const auto mods = enumerate_indec_modules(a, 6, 20, &skipped);
  CHECK(skipped == 0);
  std::set<std::vector<int>> dims;
  for (const auto& m : mods) {
    dims.insert(m.module.dims);
    CHECK(is_module(a, m.module));
    CHECK(is_indecomposable(a, m.module));
  }
  CHECK(dims == std::set<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}});
}

TEST_CASE("images of objects under Hom(T, -)") {
  const Example& e = ex();
  const auto mods = enumerate_indec_modules(e.a, 6);
  auto count_of = [&](const char* obj, std::vector<int> dims) {
    const auto d = decompose(e.a, H_obj(e.a, Obj{{L(e.c, obj)}}), mods);
    REQUIRE(d.has_value());
    for (std::size_t u = 0; u < mods.size(); ++u)
      if (mods[u].module.dims == dims) return (*d)[u];
    return -1;
  };
  // H(M34) = S1 + S3, indecomposable in C but not after applying H.
  CHECK(count_of("M34", {1, 0, 0}) == 1);
  CHECK(count_of("M34", {0, 0, 1}) == 1);
  CHECK_FALSE(is_indecomposable(e.a, H_obj(e.a, Obj{{L(e.c, "M34")}})));
  CHECK(count_of("M14", {1, 1, 0}) == 1);
  CHECK(count_of("M11", {0, 1, 1}) == 1);
  for (const char* z : {"SP4", "SP3", "SP1", "M23", "M22"}) CHECK(H_obj(e.a, Obj{{L(e.c, z)}}).is_zero());
}

TEST_CASE("H is a functor into modules") {
  const Example& e = ex();
  const int m44 = L(e.c, "M44"), m34 = L(e.c, "M34"), m33 = L(e.c, "M33");
  const Mor f = basis_mor(e.c, m44, m34), g = basis_mor(e.c, m34, m33);
  const ModuleHom hf = H_mor(e.a, f);
  CHECK(is_module_hom(e.a, H_obj(e.a, f.source), H_obj(e.a, f.target), hf));
  CHECK(equal(H_mor(e.a, compose(e.c, g, f)), compose(H_mor(e.a, g), hf)));
  CHECK(equal(H_mor(e.a, identity_mor(Obj{{m34}})), identity_hom(H_obj(e.a, Obj{{m34}}))));
}

TEST_CASE("hom dimensions and isomorphism search") {
  const Example& e = ex();
  const LambdaModule m = H_obj(e.a, Obj{{L(e.c, "M34")}});
  const LambdaModule n = H_obj(e.a, Obj{{L(e.c, "M44"), L(e.c, "SM24")}});
  CHECK(module_hom_dim(e.a, m, m) == 2);
  CHECK(find_isomorphism(e.a, m, n).has_value());
  const LambdaModule p = H_obj(e.a, Obj{{L(e.c, "M14")}});
  CHECK_FALSE(find_isomorphism(e.a, m, p).has_value());
  for (const ModuleHom& h : module_hom_basis(e.a, m, p)) CHECK(is_module_hom(e.a, m, p, h));
}

TEST_CASE("lifting modules to C(T)") {
  const Example& e = ex();
  const std::map<std::vector<int>, std::string> expected = {
      {{0, 0, 1}, "SP2"}, {{0, 1, 0}, "M13"}, {{1, 0, 0}, "M44"}, {{0, 1, 1}, "M11"}, {{1, 1, 0}, "M14"}};
  for (const auto& m : enumerate_indec_modules(e.a, 6)) {
    const Presentation pres = min_proj_presentation(e.a, m.module);
    CHECK(pres.exact);
    const Obj x = lift_module_to_CT(e.a, m.module);
    REQUIRE(x.count() == 1);
    CHECK(e.c.label_name(x.summands[0]) == expected.at(m.module.dims));
  }
}
