#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cloc/category.hpp"

namespace cloc {

/// Outcome of checking that X -f-> Y -g-> Z -h-> ΣX behaves like a
/// distinguished triangle: composites vanish, Hom(W,-) and Hom(-,W) are
/// exact at every term for every indecomposable W, and Z has the hom
/// dimensions predicted by the cone profile of f.
struct CertReport {
  bool homdim_match = true;
  std::vector<std::string> composite_failures;
  std::vector<std::string> covariant_failures;      // Hom(W, -)
  std::vector<std::string> contravariant_failures;  // Hom(-, W)

  [[nodiscard]] bool ok() const {
    return homdim_match && composite_failures.empty() && covariant_failures.empty() &&
           contravariant_failures.empty();
  }
};

struct Triangle {
  Obj x, y, z;
  Mor f;  // x -> y
  Mor g;  // y -> z
  Mor h;  // z -> Σx
  CertReport cert;
};

/// p[W] = dim coker Hom(W, f) + dim ker Hom(W, Σf) = dim Hom(W, cone f).
std::vector<int> cone_profile(const Category& c, const Mor& f);

/// All objects Z (summands sorted) whose hom-dimension vector equals the
/// profile. A single candidate whenever the hom-dimension matrix is invertible.
std::vector<Obj> cone_candidates(const Category& c, const std::vector<int>& profile);

/// Certified completion of f to a triangle. The seed drives the choice of
/// g and h among the maps satisfying the composite conditions; different
/// seeds give different (isomorphic) completions.
/// Throws std::runtime_error if no candidate certifies.
Triangle complete_triangle(const Category& c, const Mor& f, std::uint64_t seed = 0);

/// full_period additionally checks the Σ^k-shifted exactness conditions for
/// every k in one period; this is implied by the default check and serves
/// as a cross-check.
CertReport certify_triangle(const Category& c, const Mor& f, const Mor& g, const Mor& h,
                            bool full_period = false);

/// (f, g, h) -> (g, h, -Σf).
Triangle rotate_triangle(const Category& c, const Triangle& t);

/// Cone of a map in the category: the third object of complete_triangle.
Obj cone_object(const Category& c, const Mor& f);

}  // namespace cloc
