#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cloc/arcs.hpp"
#include "cloc/linalg.hpp"

namespace cloc {

/// Vertex (a, len) of the universal cover Z A_n of the AR quiver; it lies over
/// the arc {a, a + len} (mod n+3). Arrows: (a,len) -> (a,len+1) and
/// (a,len) -> (a+1,len-1); the translation is tau^{-1}(a,len) = (a+1,len).
struct CoverVertex {
  int a = 0;
  int len = 0;

  auto operator<=>(const CoverVertex&) const = default;
};

/// Identification of an arc with a kQ-module M_ij or a shifted projective ΣP_i
/// (Q linearly oriented 1 -> 2 -> ... -> n).
struct ArcLabel {
  enum class Kind { Module, ShiftedProjective } kind = Kind::Module;
  int i = 0;
  int j = 0;  // unused for shifted projectives

  auto operator<=>(const ArcLabel&) const = default;
};

/// Result of the label search: the dihedral symmetry applied to the base
/// labeling M_ij -> {n+1-j, n+3-i}, ΣP_i -> {0, n+2-i}.
struct LabelAnchoring {
  bool reflected = false;
  int rotation = 0;
  int candidates_tried = 0;
};

/// The cluster category of type A_n realized as the mesh category of its AR
/// quiver (commutative meshes). Hom spaces between indecomposables are at most
/// one-dimensional; each nonzero one has a canonical basis path in the cover.
/// Immutable after build().
class Category {
 public:
  /// Throws std::runtime_error naming the offending pair when a mesh-computed
  /// dimension disagrees with the crossing rule, or when a consistency check
  /// fails. Requires 1 <= n <= 12.
  static Category build(const Polygon& p);

  [[nodiscard]] const Polygon& polygon() const { return polygon_; }
  [[nodiscard]] int size() const { return static_cast<int>(indecs_.size()); }
  [[nodiscard]] const std::vector<Arc>& indecs() const { return indecs_; }
  [[nodiscard]] const Arc& arc(int x) const { return indecs_[x]; }
  [[nodiscard]] int index_of(const Arc& a) const;

  [[nodiscard]] int hom_dim(int x, int y) const { return hom_dim_[x * size() + y]; }
  /// basis(y->z) o basis(x->y) = comp(x,y,z) * basis(x->z); 0 if any hom vanishes.
  [[nodiscard]] int comp(int x, int y, int z) const {
    return comp_[(static_cast<std::size_t>(x) * size() + y) * size() + z];
  }
  /// Σ basis(x->y) = sigma_coef(x,y) * basis(Σx -> Σy).
  [[nodiscard]] int sigma_coef(int x, int y) const { return sigma_coef_[x * size() + y]; }

  [[nodiscard]] int sigma(int x) const { return sigma_[x]; }
  [[nodiscard]] int sigma_inv(int x) const { return sigma_inv_[x]; }
  [[nodiscard]] int shift(int x, int k) const;

  /// Canonical basis path of Hom(x, y) in the cover, starting at the standard
  /// lift (arc.a, arc.b - arc.a) of x. Empty when the hom space is zero.
  [[nodiscard]] const std::vector<CoverVertex>& basis_path(int x, int y) const {
    return basis_path_[x * size() + y];
  }

  /// Irreducible maps (arrows of the AR quiver) as index pairs.
  [[nodiscard]] const std::vector<std::pair<int, int>>& ar_arrows() const { return ar_arrows_; }

  /// Square matrix D[w][v] = dim Hom(w, v) and its inverse when invertible.
  [[nodiscard]] const Mat& hom_dim_matrix() const { return dim_matrix_; }
  [[nodiscard]] const std::optional<Mat>& hom_dim_inverse() const { return dim_inverse_; }

  [[nodiscard]] const ArcLabel& label(int x) const { return labels_[x]; }
  [[nodiscard]] const LabelAnchoring& anchoring() const { return anchoring_; }
  [[nodiscard]] std::string label_name(int x) const;
  /// Indecomposable carrying the given label, or -1.
  [[nodiscard]] int index_of_label(const ArcLabel& l) const;

  /// Evaluates a path in the cover that starts over arc x: returns the target
  /// indecomposable and the coefficient of the path in that hom basis
  /// (coefficient 0 and target -1 when the path vanishes in the mesh category).
  [[nodiscard]] std::pair<int, Scalar> evaluate_path(int x, const std::vector<CoverVertex>& path) const;

  /// Assembles a category from explicit tables; used by deserialization.
  /// Runs the same consistency checks as build().
  static Category from_tables(const Polygon& p, std::vector<int> hom_dim, std::vector<signed char> comp,
                              std::vector<signed char> sigma_coef,
                              std::vector<std::vector<CoverVertex>> basis_paths);

  [[nodiscard]] const std::vector<int>& hom_dim_table() const { return hom_dim_; }
  [[nodiscard]] const std::vector<signed char>& comp_table() const { return comp_; }
  [[nodiscard]] const std::vector<signed char>& sigma_table() const { return sigma_coef_; }
  [[nodiscard]] const std::vector<std::vector<CoverVertex>>& basis_paths() const { return basis_path_; }

 /// Per-source knitting data on the cover; opaque outside category.cpp.
  struct Knit;

 private:

  void init_objects(const Polygon& p);
  void finish();  // derived tables + checks shared by build() and from_tables()
  [[nodiscard]] CoverVertex lift(int x) const;

  Polygon polygon_;
  std::vector<Arc> indecs_;
  std::vector<int> hom_dim_;
  std::vector<signed char> comp_;
  std::vector<signed char> sigma_coef_;
  std::vector<std::vector<CoverVertex>> basis_path_;
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<std::pair<int, int>> ar_arrows_;
  Mat dim_matrix_;
  std::optional<Mat> dim_inverse_;
  std::vector<ArcLabel> labels_;
  LabelAnchoring anchoring_;
  std::vector<std::shared_ptr<const Knit>> knits_;  // one per arc length
};

// ---------------------------------------------------------------------------
// Additive layer

/// Formal direct sum of indecomposables, kept in decomposition order.
struct Obj {
  std::vector<int> summands;

  [[nodiscard]] bool is_zero() const { return summands.empty(); }
  [[nodiscard]] std::size_t count() const { return summands.size(); }
  /// Sorted summands: two objects are isomorphic iff these agree.
  [[nodiscard]] std::vector<int> iso_class() const;
  bool operator==(const Obj&) const = default;
};

Obj direct_sum(const Obj& x, const Obj& y);

/// Morphism as a block matrix: coeffs(i, j) is the coefficient of the basis
/// map source_j -> target_i (necessarily zero where that hom space vanishes).
struct Mor {
  Obj source;
  Obj target;
  Mat coeffs;
};

Mor zero_mor(const Obj& x, const Obj& y);
Mor identity_mor(const Obj& x);
/// Single basis map x -> y between indecomposables (requires hom_dim = 1).
Mor basis_mor(const Category& c, int x, int y);
/// Throws std::invalid_argument if shapes mismatch or a coefficient sits on a zero hom.
void validate(const Category& c, const Mor& f);

Mor compose(const Category& c, const Mor& g, const Mor& f);
Mor add(const Mor& f, const Mor& g);
Mor scale(const Scalar& s, const Mor& f);
/// f ⊕ g : X ⊕ X' -> Y ⊕ Y'.
Mor direct_sum(const Mor& f, const Mor& g);
/// [f g] : X ⊕ X' -> Y.
Mor row_join(const Mor& f, const Mor& g);
/// (f; g) : X -> Y ⊕ Y'.
Mor col_join(const Mor& f, const Mor& g);
/// Restriction to the listed source summands, in the given order.
Mor restrict_source(const Mor& f, const std::vector<std::size_t>& cols);
Mor restrict_target(const Mor& f, const std::vector<std::size_t>& rows);

Obj suspend_obj(const Category& c, const Obj& x, int k = 1);
Mor suspend_mor(const Category& c, const Mor& f, int k = 1);

/// Basis of Hom(X, Y): (target summand, source summand) index pairs.
std::vector<std::pair<std::size_t, std::size_t>> hom_basis(const Category& c, const Obj& x, const Obj& y);
std::size_t hom_dimension(const Category& c, const Obj& x, const Obj& y);
/// Coordinates of f in hom_basis order, and back.
Mat coordinates(const Category& c, const Mor& f);
Mor from_coordinates(const Category& c, const Obj& x, const Obj& y, const Mat& v);

/// Matrix of Hom(w, f) : Hom(w, X) -> Hom(w, Y) for an indecomposable w.
Mat hom_from(const Category& c, int w, const Mor& f);
/// Matrix of Hom(f, w) : Hom(Y, w) -> Hom(X, w) for an indecomposable w.
Mat hom_to(const Category& c, const Mor& f, int w);

/// Matrix of h |-> s o h from Hom(U, source(s)) to Hom(U, target(s)) in hom_basis coordinates.
Mat post_matrix(const Category& c, const Obj& u, const Mor& s);
/// Matrix of g |-> g o f from Hom(target(f), Z) to Hom(source(f), Z).
Mat pre_matrix(const Category& c, const Mor& f, const Obj& z);

/// Some h with s o h = u (u and s share their target), if one exists.
std::optional<Mor> solve_post(const Category& c, const Mor& s, const Mor& u);
/// Some g with g o f = u (u and f share their source), if one exists.
std::optional<Mor> solve_pre(const Category& c, const Mor& f, const Mor& u);
/// Basis of {h : s o h = 0} for h : U -> source(s), as morphisms.
std::vector<Mor> post_kernel(const Category& c, const Obj& u, const Mor& s);
/// Basis of {g : g o f = 0} for g : target(f) -> Z.
std::vector<Mor> pre_kernel(const Category& c, const Mor& f, const Obj& z);

bool is_isomorphism(const Category& c, const Mor& f);
std::optional<Mor> inverse_mor(const Category& c, const Mor& f);

/// Minimal-map reduction: f ∘ auto = [minimal | 0] with minimal right minimal.
struct RightMinimal {
  Mor minimal;     // restriction of f ∘ automorphism to the kept summands
  Obj split_off;   // summands on which f ∘ automorphism vanishes
  Mor automorphism;  // of source(f); columns = kept summands then split-off ones
  std::vector<std::size_t> kept;  // source positions kept
};
RightMinimal right_minimal_reduce(const Category& c, const Mor& f);
/// Literal check: every e with f e = f is invertible.
bool is_right_minimal(const Category& c, const Mor& f);

}  // namespace cloc
