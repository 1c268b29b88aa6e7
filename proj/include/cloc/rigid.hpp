#pragma once

#include <cstdint>
#include <vector>

#include "cloc/category.hpp"
#include "cloc/triangle.hpp"

namespace cloc {

/// A rigid object given by its distinct indecomposable summands (basic),
/// kept in the order supplied. The i-th summand is T_i.
struct RigidObject {
  std::vector<int> summands;

  [[nodiscard]] Obj obj() const { return Obj{summands}; }
};

/// No two summands cross. Duplicated summands are allowed here.
bool is_rigid(const Category& c, const Obj& t);
/// Validates rigidity and removes duplicates; throws std::invalid_argument
/// when t is not rigid.
RigidObject make_rigid(const Category& c, const Obj& t);

enum class Subcat { AddT, TPerp, SigmaTPerp, PerpT, AddSigmaT };

const char* subcat_name(Subcat k);

struct SubcatView {
  Subcat kind = Subcat::AddT;
  std::vector<bool> member;  // indexed by indecomposable

  [[nodiscard]] std::vector<int> indecs() const;
  [[nodiscard]] bool contains(int x) const { return member[x]; }
  [[nodiscard]] bool contains(const Obj& x) const;
};

SubcatView perp_view(const Category& c, const RigidObject& t, Subcat kind);

/// Checks ⊥(T⊥) = add T = (⊥T)⊥ on indecomposables.
bool double_perp_holds(const Category& c, const RigidObject& t);

/// Right add T-approximation T0 -> x, built by bundling a basis of each
/// Hom(T_i, x). With minimal set, reduced by right_minimal_reduce.
Mor right_approx(const Category& c, const RigidObject& t, const Obj& x, bool minimal);
/// Left approximation x -> M of x by the members of a subcategory, bundling
/// a basis of each Hom(x, m).
Mor left_approx(const Category& c, const SubcatView& view, const Obj& x);
/// Right approximation M -> x by the members of a subcategory.
Mor right_approx_by(const Category& c, const SubcatView& view, const Obj& x);

/// Surjectivity of Hom(W, f) for every summand W of t.
bool is_right_approx(const Category& c, const RigidObject& t, const Mor& f);

struct WakamatsuReport {
  Triangle triangle;  // T0 -> x -> Z -> ΣT0 with T0 -> x the minimal approximation
  Obj y;              // Σ^{-1} Z
  bool y_in_tperp = false;
  bool left_approx = false;  // Σ^{-1}x -> Y is a left T⊥-approximation

  [[nodiscard]] bool ok() const { return y_in_tperp && left_approx; }
};
WakamatsuReport wakamatsu_check(const Category& c, const RigidObject& t, const Obj& x);

/// Membership in C(T): Σ^{-1} of the cone of the minimal right add
/// T-approximation lies in add T.
bool in_CT(const Category& c, const RigidObject& t, const Obj& x);

/// Runs both the perpendicular-category test and the triangulation count;
/// throws std::logic_error if they disagree.
bool is_cluster_tilting(const Category& c, const RigidObject& t);

/// Decides whether f factors through the subcategory. For SigmaTPerp the
/// vanishing of Hom(T, f) is compared with the direct factorization test and
/// a disagreement throws std::logic_error.
bool factors_through_subcat(const Category& c, const RigidObject& t, const Mor& f, Subcat kind);
/// Direct test only: f = b o a where a is the bundled left approximation.
bool factors_through(const Category& c, const SubcatView& view, const Mor& f);

/// All nonempty basic rigid objects (sets of pairwise noncrossing arcs),
/// summands in increasing index order, in lexicographic order.
std::vector<RigidObject> enumerate_rigid(const Category& c);
/// A seeded random nonempty basic rigid object.
RigidObject random_rigid(const Category& c, std::uint64_t seed);

}  // namespace cloc
