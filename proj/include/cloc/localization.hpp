#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cloc/modules.hpp"
#include "cloc/rigid.hpp"
#include "cloc/triangle.hpp"

namespace cloc {

/// Verdicts for a map f : X -> Y with completed triangle
/// Σ^{-1}Z -h-> X -f-> Y -g-> Z.
struct MorClassification {
  bool in_S_tilde = false;
  bool in_S = false;
  bool H_mono = false;
  bool H_epi = false;
  bool g_factors = false;  // g factors through ΣT⊥
  bool h_factors = false;  // h factors through ΣT⊥
  bool desuspended_cone_in_sigma_tperp = false;
  Triangle witness;
};

/// s : source -> y in S with source in C(T).
struct Resolution {
  Obj source;
  Mor s;
  std::string how;  // "identity", "zero" or "octahedral"
};

/// Hom from x to y in the localisation, in normal form: Hom_C(x', y') for the
/// resolutions x' -> x and y' -> y, modulo the maps factoring through ΣT⊥.
struct LocHom {
  Obj x, y;
  Resolution rx, ry;
  std::size_t ambient_dim = 0;    // dim Hom_C(x', y')
  std::size_t factoring_dim = 0;  // dim of the ΣT⊥-factoring subspace
  std::size_t dim = 0;            // ambient_dim - factoring_dim
  Mat h_matrix;                   // coordinates of Hom(x', y') -> flattened H-images
  Mat representatives;            // columns: coordinates of a basis of a complement
};

struct ZigStep {
  Mor mor;
  bool inverse = false;  // formal inverse of mor, which must lie in S̃
};
using Zigzag = std::vector<ZigStep>;

/// Localisation machinery for one rigid object. Resolutions are memoized;
/// the memo is guarded so one instance may be shared between threads.
class Localizer {
 public:
  Localizer(const Category& c, RigidObject t);

  [[nodiscard]] const Category& category() const { return *cat_; }
  [[nodiscard]] const RigidObject& rigid() const { return t_; }
  [[nodiscard]] const Algebra& algebra() const { return alg_; }
  [[nodiscard]] const SubcatView& sigma_tperp() const { return sigma_tperp_; }

  [[nodiscard]] bool H_is_iso(const Mor& f) const;
  [[nodiscard]] bool H_is_zero(const Mor& f) const;

  /// Throws std::logic_error if the module-side and triangle-side verdicts
  /// disagree. The seed selects the completion of f.
  [[nodiscard]] MorClassification classify(const Mor& f, std::uint64_t seed = 0) const;

  /// variant 0 is memoized and prefers the identity (y in C(T)) and the
  /// zero map (when 0 -> y lies in S); other variants always run the
  /// octahedral construction with a different completion seed.
  /// Throws std::runtime_error when the postconditions cannot be met.
  [[nodiscard]] Resolution s_resolution(const Obj& y, std::uint64_t variant = 0) const;

  /// h with s o h = u. Throws std::runtime_error when none exists.
  [[nodiscard]] Mor factor_through_s(const Mor& u, const Mor& s) const;

  [[nodiscard]] LocHom loc_hom(const Obj& x, const Obj& y, std::uint64_t variant = 0) const;
  /// G applied to the class with the given coordinates in Hom_C(x', y'):
  /// H(s_y) H(phi) H(s_x)^{-1}.
  [[nodiscard]] ModuleHom translate(const LocHom& l, const Mat& coords) const;
  /// Lift of f : x1 -> x2 to f' : x1' -> x2' with s_{x2} f' = f s_{x1}.
  [[nodiscard]] Mor lift_map(const Mor& f, const Resolution& r1, const Resolution& r2) const;

  [[nodiscard]] ModuleHom zigzag_eval(const Zigzag& z) const;
  [[nodiscard]] bool zigzag_equal(const Zigzag& a, const Zigzag& b) const;

 private:
  [[nodiscard]] Resolution build_resolution(const Obj& y, std::uint64_t variant) const;
  [[nodiscard]] bool in_S(const Mor& s, std::uint64_t seed) const;

  const Category* cat_;
  RigidObject t_;
  Algebra alg_;
  SubcatView sigma_tperp_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::vector<int>, Resolution> memo_;
};

/// Source and target of a zigzag (throws std::invalid_argument if the steps
/// do not chain).
std::pair<Obj, Obj> zigzag_ends(const Zigzag& z);

struct ElementaryReport {
  int checks = 0;
  std::vector<std::string> failures;
};
/// Lemma-level identities of the localisation functor for sampled U in ΣT⊥.
ElementaryReport elementary_identities(const Localizer& loc, std::uint64_t seed);

}  // namespace cloc
