#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cloc/category.hpp"
#include "cloc/rigid.hpp"

namespace cloc {

/// Λ = End_C(T)^op for a basic rigid T = T_1 ⊕ ... ⊕ T_r. Its basis is the set
/// of basis maps b : T_j -> T_i; the product in Λ is opposite composition.
/// Right Λ-modules are stored as representations: a space M_i per vertex and,
/// for each basis map b : T_j -> T_i, a matrix M_i -> M_j (so H(X) = Hom(T, X)
/// with b acting by precomposition).
class Algebra {
 public:
  struct Element {
    int source = 0;  // j in b : T_j -> T_i (summand position)
    int target = 0;  // i
  };

  Algebra(const Category& c, RigidObject t);

  [[nodiscard]] const Category& category() const { return *cat_; }
  [[nodiscard]] const RigidObject& rigid() const { return t_; }
  [[nodiscard]] int vertices() const { return static_cast<int>(t_.summands.size()); }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<Element>& basis() const { return basis_; }
  /// Basis index of the map T_j -> T_i, or -1 when that hom space vanishes.
  [[nodiscard]] int element(int j, int i) const { return index_[j * vertices() + i]; }
  [[nodiscard]] bool is_identity(int b) const { return basis_[b].source == basis_[b].target; }
  /// (b_{i->k} o b_{j->i}) = coef * b_{j->k}; 0 when the composite vanishes.
  [[nodiscard]] int compose_coef(int j, int i, int k) const;

  /// Gabriel quiver in the op convention: a basis map T_j -> T_i outside rad^2
  /// gives the arrow i -> j. Pairs are (from, to), 0-based.
  [[nodiscard]] const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  /// Basis indices of the arrow elements, parallel to arrows().
  [[nodiscard]] const std::vector<int>& arrow_elements() const { return arrow_elements_; }
  /// Consecutive arrow pairs (first, second) in arrow-index terms whose composite vanishes.
  [[nodiscard]] const std::vector<std::pair<int, int>>& zero_relations() const { return zero_relations_; }
  /// Smallest m with rad^m = 0.
  [[nodiscard]] int nilpotency_index() const { return nilpotency_; }
  /// Arrow-index path and sign expressing a radical basis element as a
  /// product of arrows (empty for idempotents).
  [[nodiscard]] const std::pair<std::vector<int>, int>& factorization(int b) const { return factor_[b]; }

 private:
  const Category* cat_;
  RigidObject t_;
  std::vector<Element> basis_;
  std::vector<int> index_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<int> arrow_elements_;
  std::vector<std::pair<int, int>> zero_relations_;
  std::vector<std::pair<std::vector<int>, int>> factor_;
  int nilpotency_ = 0;
};

struct LambdaModule {
  std::vector<int> dims;    // per vertex
  std::vector<Mat> action;  // per algebra basis element b : T_j -> T_i, a map M_i -> M_j

  [[nodiscard]] int total_dim() const;
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
};

struct ModuleHom {
  std::vector<Mat> maps;  // per vertex, M_i -> N_i
};

/// Exact check of the module axioms against the structure constants.
bool is_module(const Algebra& a, const LambdaModule& m);
/// Builds the full action from matrices for the Gabriel arrows only.
LambdaModule module_from_arrows(const Algebra& a, const std::vector<int>& dims, const std::vector<Mat>& arrow_maps);

LambdaModule H_obj(const Algebra& a, const Obj& x);
ModuleHom H_mor(const Algebra& a, const Mor& f);

LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);
ModuleHom identity_hom(const LambdaModule& m);
bool is_zero(const ModuleHom& f);
bool is_module_hom(const Algebra& a, const LambdaModule& m, const LambdaModule& n, const ModuleHom& f);
/// Componentwise inverse when every component is invertible.
std::optional<ModuleHom> inverse_hom(const ModuleHom& f);
bool equal(const ModuleHom& f, const ModuleHom& g);

std::vector<ModuleHom> module_hom_basis(const Algebra& a, const LambdaModule& m, const LambdaModule& n);
int module_hom_dim(const Algebra& a, const LambdaModule& m, const LambdaModule& n);
/// Coordinates of a module hom in the module_hom_basis, if it is one.
std::optional<Mat> hom_coordinates(const Algebra& a, const LambdaModule& m, const LambdaModule& n,
                                   const ModuleHom& f);

/// Searches for an invertible intertwiner among seeded random elements of
/// Hom(m, n); returns it when found.
std::optional<ModuleHom> find_isomorphism(const Algebra& a, const LambdaModule& m, const LambdaModule& n,
                                          std::uint64_t seed = 1);

/// End(m) is local: the trace form on End(m) has rank one.
bool is_indecomposable(const Algebra& a, const LambdaModule& m);

/// Projective presentation P1 -> P0 -> M -> 0 with P0 a projective cover and
/// P1 -> ker a projective cover, lifted to the map T1 -> T0 in add T that
/// H sends to it.
struct Presentation {
  Mor lifted;               // T1 -> T0
  ModuleHom cover;          // H(T0) -> M
  std::vector<int> top;     // dim of top(M) per vertex
  bool exact = false;       // H(T1) -> H(T0) -> M -> 0 verified exact
};
Presentation min_proj_presentation(const Algebra& a, const LambdaModule& m);

/// Cone of the lifted presentation; H of the result is verified isomorphic
/// to m and membership in C(T) is verified. Throws std::runtime_error otherwise.
Obj lift_module_to_CT(const Algebra& a, const LambdaModule& m);

struct IndecModule {
  LambdaModule module;
  std::string name;  // "S1", "P2", or the dimension vector
};

/// All isomorphism classes of indecomposable modules with total dimension at
/// most dim_bound. Representations are searched with 0/1 arrow matrices.
/// Dimension vectors needing more than max_bits matrix entries are skipped,
/// and the count of skipped vectors is reported through skipped (if given).
std::vector<IndecModule> enumerate_indec_modules(const Algebra& a, int dim_bound, int max_bits = 20,
                                                 int* skipped = nullptr);

/// Multiplicities of the listed indecomposables in m, computed from
/// dim Hom(U, m); nullopt when m is not a sum of listed modules.
std::optional<std::vector<int>> decompose(const Algebra& a, const LambdaModule& m,
                                          const std::vector<IndecModule>& indecs);

std::string dim_vector_string(const std::vector<int>& dims);

}  // namespace cloc
