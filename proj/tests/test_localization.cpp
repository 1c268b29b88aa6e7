#include <doctest.h>

#include <random>

#include "cloc/labels.hpp"
#include "cloc/localization.hpp"

using namespace cloc;

namespace {

int L(const Category& c, const char* s) { return parse_indec(c, s); }

struct Example {
  Category c = Category::build(Polygon{4});
  RigidObject t = make_rigid(c, Obj{{L(c, "M44"), L(c, "M14"), L(c, "M11")}});
  Localizer loc{c, t};
  Mor s = row_join(basis_mor(c, L(c, "M44"), L(c, "M34")), basis_mor(c, L(c, "SM24"), L(c, "M34")));
  Mor tmap = col_join(basis_mor(c, L(c, "M34"), L(c, "M33")), basis_mor(c, L(c, "M34"), L(c, "M24")));
};

const Example& ex() {
  static const Example e;
  return e;
}

}  // namespace

TEST_CASE("classification of the two almost split maps") {
  const Example& e = ex();
  const MorClassification cs = e.loc.classify(e.s);
  CHECK(cs.in_S);
  CHECK(cs.in_S_tilde);
  const MorClassification ct = e.loc.classify(e.tmap);
  CHECK(ct.in_S_tilde);
  CHECK_FALSE(ct.in_S);
  CHECK(ct.H_mono);
  CHECK(ct.H_epi);
  const MorClassification id = e.loc.classify(identity_mor(Obj{{L(e.c, "M34")}}));
  CHECK(id.in_S);
  CHECK(id.witness.z.is_zero());
}

TEST_CASE("mono and epi flags follow the factoring conditions") {
  const Example& e = ex();
  // M44 -> M34 is injective on images but misses S3.
  const MorClassification a = e.loc.classify(basis_mor(e.c, L(e.c, "M44"), L(e.c, "M34")));
  CHECK(a.H_mono);
  CHECK_FALSE(a.H_epi);
  CHECK(a.h_factors);
  CHECK_FALSE(a.g_factors);
  CHECK_FALSE(a.in_S_tilde);
}

TEST_CASE("zero map into an object of ΣT⊥") {
  const Example& e = ex();
  // U -> 0 is in S for U in ΣT⊥, but 0 -> U needs Σ^{-1}U in ΣT⊥ as well.
  const int m23 = L(e.c, "M23");
  CHECK(e.loc.classify(zero_mor(Obj{{m23}}, Obj{})).in_S);
  const MorClassification z = e.loc.classify(zero_mor(Obj{}, Obj{{m23}}));
  CHECK(z.in_S_tilde);
  CHECK_FALSE(z.in_S);
  CHECK(H_obj(e.loc.algebra(), Obj{{e.c.sigma_inv(m23)}}).total_dim() == 1);
}

TEST_CASE("resolutions land in C(T) through maps in S") {
  const Example& e = ex();
  for (int y = 0; y < e.c.size(); ++y)
    for (std::uint64_t variant : {0ULL, 3ULL}) {
      const Resolution r = e.loc.s_resolution(Obj{{y}}, variant);
      CHECK(in_CT(e.c, e.t, r.source));
      CHECK(e.loc.classify(r.s).in_S);
      CHECK(e.loc.H_is_iso(r.s));
      if (variant == 0 && in_CT(e.c, e.t, Obj{{y}})) CHECK(r.how == "identity");
    }
  const Resolution r34 = e.loc.s_resolution(Obj{{L(e.c, "M34")}});
  CHECK(r34.how == "octahedral");
  CHECK(module_hom_dim(e.loc.algebra(), H_obj(e.loc.algebra(), r34.source),
                       H_obj(e.loc.algebra(), Obj{{L(e.c, "M34")}})) == 2);
}

TEST_CASE("factoring through maps in S") {
  const Example& e = ex();
  const Resolution r = e.loc.s_resolution(Obj{{L(e.c, "M34")}});
  const Mor h = e.loc.factor_through_s(r.s, r.s);
  CHECK(compose(e.c, r.s, h).coeffs == r.s.coeffs);
  const Mor zero = zero_mor(Obj{{L(e.c, "M13")}}, r.s.target);
  CHECK(e.loc.factor_through_s(zero, r.s).coeffs.is_zero());
  // A map from outside C(T) need not factor.
  const Mor bad = basis_mor(e.c, L(e.c, "M33"), L(e.c, "M33"));
  const Resolution r33 = e.loc.s_resolution(Obj{{L(e.c, "M33")}});
  CHECK(r33.source.iso_class() != bad.source.iso_class());
  CHECK_THROWS_AS((void)e.loc.factor_through_s(bad, r33.s), std::runtime_error);
}

TEST_CASE("localised hom spaces") {
  const Example& e = ex();
  const Algebra& a = e.loc.algebra();
  // Endomorphisms of a summand of T: e_i Λ e_i is one-dimensional here.
  for (int ti : e.t.summands) CHECK(e.loc.loc_hom(Obj{{ti}}, Obj{{ti}}).dim == 1);
  // Objects of ΣT⊥ become zero.
  for (int u : e.loc.sigma_tperp().indecs())
    for (int y = 0; y < e.c.size(); ++y) {
      CHECK(e.loc.loc_hom(Obj{{u}}, Obj{{y}}).dim == 0);
      CHECK(e.loc.loc_hom(Obj{{y}}, Obj{{u}}).dim == 0);
    }
  for (int x = 0; x < e.c.size(); ++x)
    for (int y = 0; y < e.c.size(); ++y) {
      const LocHom l = e.loc.loc_hom(Obj{{x}}, Obj{{y}});
      CHECK(static_cast<int>(l.dim) == module_hom_dim(a, H_obj(a, Obj{{x}}), H_obj(a, Obj{{y}})));
      CHECK(e.loc.loc_hom(Obj{{x}}, Obj{{y}}, 5).dim == l.dim);
    }
  // M34 has a two-dimensional endomorphism space after localising.
  CHECK(e.loc.loc_hom(Obj{{L(e.c, "M34")}}, Obj{{L(e.c, "M34")}}).dim == 2);
}

TEST_CASE("zigzags") {
  const Example& e = ex();
  const Obj src = e.s.source, tgt = e.s.target;
  const ModuleHom inv = e.loc.zigzag_eval({{e.s, true}});
  const auto back = inverse_hom(inv);
  REQUIRE(back.has_value());
  CHECK(equal(*back, H_mor(e.loc.algebra(), e.s)));
  CHECK(e.loc.zigzag_equal({{e.s, false}, {e.s, true}}, {{identity_mor(src), false}}));
  CHECK(e.loc.zigzag_equal({{e.s, true}, {e.s, false}}, {{identity_mor(tgt), false}}));
  // Inserting s s^{-1} changes nothing.
  const Mor g = basis_mor(e.c, L(e.c, "M34"), L(e.c, "M33"));
  CHECK(e.loc.zigzag_equal({{e.s, false}, {g, false}}, {{e.s, false}, {e.s, true}, {e.s, false}, {g, false}}));
  // Different H-images give different classes.
  CHECK_FALSE(e.loc.zigzag_equal({{g, false}}, {{scale(Scalar(2), g), false}}));
  // Inverting a map outside S̃ is rejected.
  const Mor m = basis_mor(e.c, L(e.c, "M44"), L(e.c, "M34"));
  CHECK_THROWS_AS((void)e.loc.zigzag_eval({{m, true}}), std::invalid_argument);
  CHECK_THROWS_AS((void)zigzag_ends({{m, false}, {m, false}}), std::invalid_argument);
}

TEST_CASE("elementary identities") {
  const Example& e = ex();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ElementaryReport r = elementary_identities(e.loc, seed);
    CHECK(r.checks > 0);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("property: classification verdicts are stable across completions in A_5") {
  const Category c = Category::build(Polygon{5});
  std::mt19937_64 rng(17);
  for (int k = 0; k < 3; ++k) {
    const Localizer loc(c, random_rigid(c, 100 + k));
    std::uniform_int_distribution<int> pick(0, c.size() - 1), coef(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
      const Obj x{{pick(rng), pick(rng)}}, y{{pick(rng)}};
      Mat v(hom_dimension(c, x, y), 1);
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = coef(rng);
      const Mor f = from_coordinates(c, x, y, v);
      const MorClassification a = loc.classify(f, 0), b = loc.classify(f, 8);
      CHECK(a.in_S_tilde == b.in_S_tilde);
      CHECK(a.in_S == b.in_S);
      CHECK(a.in_S_tilde == loc.H_is_iso(f));
      CHECK((!a.in_S || a.in_S_tilde));
    }
  }
}
