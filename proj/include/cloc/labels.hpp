#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cloc/category.hpp"

namespace cloc {

/// Representation of the linearly oriented quiver 1 -> 2 -> ... -> n:
/// a vector space per vertex and a matrix per arrow i -> i+1.
struct QuiverRep {
  std::vector<int> dims;
  std::vector<Mat> arrows;  // arrows[i] : space i -> space i+1 (0-based)
};

/// Interval module M_ij (1-based, support {i..j}) with identity arrow maps.
QuiverRep interval_module(int n, int i, int j);
/// dim Hom_kQ(m1, m2) by solving the commutation equations.
int rep_hom_dim(const QuiverRep& m1, const QuiverRep& m2);
/// dim Ext^1_kQ(m1, m2) = dim Hom - Euler form (kQ hereditary).
int rep_ext_dim(const QuiverRep& m1, const QuiverRep& m2);
/// Dimension vector of tau^{-1} of an indecomposable non-injective module,
/// via the inverse Coxeter transformation.
std::vector<int> inverse_coxeter(const std::vector<int>& dim_vector);

/// dim Hom in the cluster category between two labeled objects, computed
/// purely from kQ-modules (Hom_D(X, Y) + Hom_D(X, tau^{-1} Σ Y)).
int oracle_hom_dim(int n, const ArcLabel& x, const ArcLabel& y);

/// Arc assigned to a label by the base labeling, before any symmetry.
Arc base_arc(const Polygon& p, const ArcLabel& l);

struct LabelBridge {
  std::vector<ArcLabel> labels;  // indexed like Category::indecs()
  LabelAnchoring anchoring;
};

/// Searches the dihedral symmetries of the base labeling for one whose
/// module-theoretic hom dimensions agree with the category everywhere.
/// Throws std::runtime_error when none does.
LabelBridge compute_label_bridge(const Category& c);

/// "M34", "M3_10" (when an index has two digits) or "SP2".
std::string format_label(const ArcLabel& l, int n);

/// Accepts an arc "a-b", a label "Mij" / "Mi_j" / "Pi" / "SPi", optionally
/// preceded by "S" or "S^k" (k may be negative) for suspension. Throws
/// std::invalid_argument on anything else.
int parse_indec(const Category& c, std::string_view text);

}  // namespace cloc
