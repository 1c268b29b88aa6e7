#include "cloc/category.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cloc/labels.hpp"

namespace cloc {

// Hom(s0, -) on the cover for the source s0 = (0, len0), computed by knitting:
// Hom(s0, v) is the cokernel of Hom(s0, tau v) -> ⊕_{p -> v} Hom(s0, p), the map
// being given by the mesh starting at tau v.
struct Category::Knit {
  struct Arrow {
    CoverVertex from;
    Mat mat;  // Hom(s0, from) -> Hom(s0, v)
  };
  struct Node {
    int dim = 0;
    std::vector<Arrow> in;
    std::vector<std::vector<CoverVertex>> paths;  // basis representatives
  };
  int len0 = 0;
  int phi_max = 0;
  std::map<CoverVertex, Node> nodes;  // only nonzero hom spaces

  [[nodiscard]] const Node* find(const CoverVertex& v) const {
    auto it = nodes.find(v);
    return it == nodes.end() ? nullptr : &it->second;
  }
};

namespace {

bool is_cover_arrow(const CoverVertex& u, const CoverVertex& w) {
  return (w.a == u.a && w.len == u.len + 1) || (w.a == u.a + 1 && w.len == u.len - 1);
}

// Deck transformation of the cover: the group is generated by the glide
// (a, len) -> (a + len, N - len), whose square is translation by N.
struct Deck {
  bool glide = false;
  int shift = 0;

  [[nodiscard]] CoverVertex apply(const CoverVertex& v, int N) const {
    if (glide) return {v.a + v.len + shift, N - v.len};
    return {v.a + shift, v.len};
  }
};

int floor_mod(int v, int m) {
  const int r = v % m;
  return r < 0 ? r + m : r;
}

std::optional<Deck> deck_between(const CoverVertex& u, const CoverVertex& w, int N) {
  if (u.len == w.len && floor_mod(w.a - u.a, N) == 0) return Deck{false, w.a - u.a};
  if (N - u.len == w.len && floor_mod(w.a - u.a - u.len, N) == 0) return Deck{true, w.a - u.a - u.len};
  return std::nullopt;
}

std::shared_ptr<const Category::Knit> knit_from(int n, int len0) {
  using Knit = Category::Knit;
  const int N = n + 3;
  auto k = std::make_shared<Knit>();
  k->len0 = len0;
  k->phi_max = len0 + 2 * N + 6;
  const CoverVertex s0{0, len0};
  k->nodes[s0] = Knit::Node{1, {}, {{s0}}};
  int last_nonzero_phi = len0;

  for (int ph = len0 + 1; ph <= k->phi_max; ++ph) {
    for (int len = 2; len <= n + 1; ++len) {
      if ((ph - len) % 2 != 0) continue;
      const CoverVertex v{(ph - len) / 2, len};
      const CoverVertex tv{v.a - 1, len};
      // Predecessors in a fixed order: along the up arrow, then the down arrow.
      std::vector<CoverVertex> preds;
      if (len - 1 >= 2) preds.push_back({v.a, len - 1});
      if (len + 1 <= n + 1) preds.push_back({v.a - 1, len + 1});

      std::vector<const Knit::Node*> pnodes;
      std::vector<std::size_t> offsets;
      std::size_t total = 0;
      for (const auto& p : preds) {
        pnodes.push_back(k->find(p));
        offsets.push_back(total);
        total += pnodes.back() ? pnodes.back()->dim : 0;
      }
      if (total == 0) continue;

      const Knit::Node* tnode = k->find(tv);
      const std::size_t tdim = tnode ? tnode->dim : 0;
      Mat rel(total, tdim);
      for (std::size_t q = 0; q < preds.size(); ++q) {
        if (!pnodes[q] || tdim == 0) continue;
        // Commutative mesh: the path through (tv -> up) minus the path through (tv -> down).
        const bool via_up_from_tv = preds[q].len == len + 1;
        const Scalar sign = via_up_from_tv ? 1 : -1;
        for (const auto& arr : pnodes[q]->in) {
          if (arr.from != tv) continue;
          rel.set_block(offsets[q], 0, sign * arr.mat);
        }
      }
      const Mat image = column_space(rel);
      const auto comp = complement_indices(image, total);
      if (comp.empty()) continue;
      const std::size_t d = comp.size();

      Mat change(total, total);
      change.set_block(0, 0, image);
      for (std::size_t c = 0; c < d; ++c) change(comp[c], image.cols() + c) = 1;
      const auto inv = inverse(change);
      if (!inv) throw std::logic_error("knit: singular change of basis");
      const Mat proj = inv->block(image.cols(), 0, d, total);

      Knit::Node node;
      node.dim = static_cast<int>(d);
      for (std::size_t q = 0; q < preds.size(); ++q) {
        if (!pnodes[q]) continue;
        node.in.push_back({preds[q], proj.block(0, offsets[q], d, pnodes[q]->dim)});
      }
      for (std::size_t c = 0; c < d; ++c) {
        // Locate the predecessor block holding coordinate comp[c].
        std::size_t q = 0;
        for (std::size_t t = 0; t < preds.size(); ++t)
          if (pnodes[t] && comp[c] >= offsets[t] && comp[c] < offsets[t] + pnodes[t]->dim) q = t;
        auto path = pnodes[q]->paths[comp[c] - offsets[q]];
        path.push_back(v);
        node.paths.push_back(std::move(path));
      }
      k->nodes[v] = std::move(node);
      last_nonzero_phi = ph;
    }
  }
  if (last_nonzero_phi + 2 > k->phi_max)
    throw std::runtime_error("knit: hammock did not close inside the window");
  return k;
}

}  // namespace

CoverVertex Category::lift(int x) const {
  const Arc& a = indecs_[x];
  return {a.a, a.b - a.a};
}

int Category::index_of(const Arc& a) const {
  auto it = std::lower_bound(indecs_.begin(), indecs_.end(), a);
  if (it == indecs_.end() || *it != a) return -1;
  return static_cast<int>(it - indecs_.begin());
}

int Category::shift(int x, int k) const {
  while (k > 0) x = sigma_[x], --k;
  while (k < 0) x = sigma_inv_[x], ++k;
  return x;
}

std::string Category::label_name(int x) const { return format_label(labels_[x], polygon_.n); }

int Category::index_of_label(const ArcLabel& l) const {
  for (int x = 0; x < size(); ++x)
    if (labels_[x] == l) return x;
  return -1;
}

void Category::init_objects(const Polygon& p) {
  if (p.n < 1 || p.n > 12) throw std::invalid_argument("Category: n must lie in 1..12");
  polygon_ = p;
  indecs_ = enumerate_arcs(p);
}

std::pair<int, Scalar> Category::evaluate_path(int x, const std::vector<CoverVertex>& path) const {
  if (knits_.empty()) throw std::logic_error("evaluate_path: category was loaded without cover data");
  if (path.empty()) throw std::invalid_argument("evaluate_path: empty path");
  const int N = polygon_.vertex_count();
  const CoverVertex xt = lift(x);
  const auto deck = deck_between(path.front(), xt, N);
  if (!deck) throw std::invalid_argument("evaluate_path: path does not start over the given arc");
  const Knit& k = *knits_[xt.len - 2];

  Mat vec = Mat::identity(1);
  CoverVertex prev{0, xt.len};
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!is_cover_arrow(path[i - 1], path[i])) throw std::invalid_argument("evaluate_path: not a path");
    CoverVertex cur = deck->apply(path[i], N);
    cur.a -= xt.a;
    const auto* node = k.find(cur);
    if (!node) return {-1, Scalar(0)};
    const Knit::Arrow* arr = nullptr;
    for (const auto& in : node->in)
      if (in.from == prev) arr = &in;
    if (!arr) return {-1, Scalar(0)};
    vec = arr->mat * vec;
    prev = cur;
  }
  const auto* end = k.find(prev);
  if (!end) return {-1, Scalar(0)};
  if (end->dim != 1) throw std::runtime_error("evaluate_path: hom space of dimension > 1");
  const int target = index_of(make_arc(polygon_, prev.a + xt.a, prev.a + xt.a + prev.len));
  return {target, vec(0, 0)};
}

Category Category::build(const Polygon& p) {
  Category c;
  c.init_objects(p);
  const int n = p.n;
  const int N = p.vertex_count();
  const int sz = c.size();
  for (int len = 2; len <= n + 1; ++len) c.knits_.push_back(knit_from(n, len));

  c.hom_dim_.assign(sz * sz, 0);
  c.basis_path_.assign(sz * sz, {});
  for (int x = 0; x < sz; ++x) {
    const CoverVertex xt = c.lift(x);
    const Knit& k = *c.knits_[xt.len - 2];
    for (int y = 0; y < sz; ++y) {
      const Arc& ya = c.indecs_[y];
      int dim = 0;
      // Every lift of y: (y.a + mN, len) and (y.b + mN, N - len).
      for (int m = -3; m <= 4; ++m) {
        for (const CoverVertex cand : {CoverVertex{ya.a + m * N, ya.b - ya.a},
                                       CoverVertex{ya.b + m * N, N - (ya.b - ya.a)}}) {
          const auto* node = k.find({cand.a - xt.a, cand.len});
          if (!node) continue;
          dim += node->dim;
          auto path = node->paths.front();
          for (auto& v : path) v.a += xt.a;
          c.basis_path_[x * sz + y] = std::move(path);
        }
      }
      if (dim > 1) {
        std::ostringstream os;
        os << "build_category: Hom(" << format_arc(c.indecs_[x]) << ", " << format_arc(ya)
           << ") has dimension " << dim << " > 1";
        throw std::runtime_error(os.str());
      }
      c.hom_dim_[x * sz + y] = dim;
    }
  }

  c.comp_.assign(static_cast<std::size_t>(sz) * sz * sz, 0);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      if (!c.hom_dim(x, y)) continue;
      const auto& pf = c.basis_path(x, y);
      const auto to_v = deck_between(c.lift(y), pf.back(), N);
      if (!to_v) throw std::logic_error("build_category: basis path does not end over its target");
      for (int z = 0; z < sz; ++z) {
        if (!c.hom_dim(y, z)) continue;
        std::vector<CoverVertex> path = pf;
        const auto& pg = c.basis_path(y, z);
        for (std::size_t i = 1; i < pg.size(); ++i) path.push_back(to_v->apply(pg[i], N));
        const auto [target, coef] = c.evaluate_path(x, path);
        if (sgn(coef) == 0) continue;
        if (target != z || !c.hom_dim(x, z) || (coef != 1 && coef != -1))
          throw std::runtime_error("build_category: inconsistent composition for " +
                                   format_arc(c.indecs_[x]) + " -> " + format_arc(c.indecs_[y]) + " -> " +
                                   format_arc(c.indecs_[z]));
        c.comp_[(static_cast<std::size_t>(x) * sz + y) * sz + z] = static_cast<signed char>(coef.get_num().get_si());
      }
    }

  // Σ = tau: translate basis paths by one step backwards.
  c.sigma_.resize(sz);
  for (int x = 0; x < sz; ++x) c.sigma_[x] = c.index_of(rotate(p, c.indecs_[x], 1));
  c.sigma_coef_.assign(sz * sz, 0);
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      if (!c.hom_dim(x, y)) continue;
      auto path = c.basis_path(x, y);
      for (auto& v : path) v.a -= 1;
      const auto [target, coef] = c.evaluate_path(c.sigma_[x], path);
      if (target != c.sigma_[y] || (coef != 1 && coef != -1))
        throw std::runtime_error("build_category: suspension does not preserve Hom(" +
                                 format_arc(c.indecs_[x]) + ", " + format_arc(c.indecs_[y]) + ")");
      c.sigma_coef_[x * sz + y] = static_cast<signed char>(coef.get_num().get_si());
    }

  c.finish();
  return c;
}

Category Category::from_tables(const Polygon& p, std::vector<int> hom_dim, std::vector<signed char> comp,
                               std::vector<signed char> sigma_coef,
                               std::vector<std::vector<CoverVertex>> basis_paths) {
  Category c;
  c.init_objects(p);
  const std::size_t sz = c.indecs_.size();
  if (hom_dim.size() != sz * sz || comp.size() != sz * sz * sz || sigma_coef.size() != sz * sz ||
      basis_paths.size() != sz * sz)
    throw std::invalid_argument("Category::from_tables: table sizes do not match n");
  c.hom_dim_ = std::move(hom_dim);
  c.comp_ = std::move(comp);
  c.sigma_coef_ = std::move(sigma_coef);
  c.basis_path_ = std::move(basis_paths);
  c.sigma_.resize(sz);
  for (std::size_t x = 0; x < sz; ++x) c.sigma_[x] = c.index_of(rotate(p, c.indecs_[x], 1));
  c.finish();
  return c;
}

void Category::finish() {
  const Polygon& p = polygon_;
  const int sz = size();
  sigma_inv_.assign(sz, -1);
  for (int x = 0; x < sz; ++x) sigma_inv_[sigma_[x]] = x;

  auto fail = [&](const std::string& what, int x, int y) {
    throw std::runtime_error("build_category: " + what + " at (" + format_arc(indecs_[x]) + ", " +
                             format_arc(indecs_[y]) + ")");
  };

  // Mesh-computed dimensions must match dim Hom(x, y) = [x crosses Σ^{-1} y].
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      const int expect = crosses(p, indecs_[x], rotate(p, indecs_[y], -1)) ? 1 : 0;
      if (hom_dim(x, y) != expect) fail("mesh dimension disagrees with the crossing rule", x, y);
      if (hom_dim(x, y) != hom_dim(sigma_[x], sigma_[y])) fail("suspension changes a hom dimension", x, y);
      if (hom_dim(x, y) != (sigma_coef(x, y) != 0 ? 1 : 0)) fail("suspension coefficient missing", x, y);
    }
  for (int x = 0; x < sz; ++x) {
    if (hom_dim(x, x) != 1) fail("endomorphism space is not one-dimensional", x, x);
    for (int y = 0; y < sz; ++y) {
      if (comp(x, x, y) != hom_dim(x, y)) fail("identity is not a left unit", x, y);
      if (comp(x, y, y) != hom_dim(x, y)) fail("identity is not a right unit", x, y);
    }
  }

  auto assoc_ok = [&](int w, int x, int y, int z) {
    return comp(w, x, y) * comp(w, y, z) == comp(x, y, z) * comp(w, x, z);
  };
  if (p.n <= 5) {
    for (int w = 0; w < sz; ++w)
      for (int x = 0; x < sz; ++x)
        for (int y = 0; y < sz; ++y)
          for (int z = 0; z < sz; ++z)
            if (!assoc_ok(w, x, y, z)) fail("composition is not associative", w, z);
  } else {
    std::mt19937_64 rng(0x5eedULL + p.n);
    std::uniform_int_distribution<int> pick(0, sz - 1);
    for (int t = 0; t < 10000; ++t) {
      const int w = pick(rng), x = pick(rng), y = pick(rng), z = pick(rng);
      if (!assoc_ok(w, x, y, z)) fail("composition is not associative", w, z);
    }
  }
  // Functoriality of Σ on basis maps.
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y)
      for (int z = 0; z < sz; ++z) {
        const int lhs = comp(x, y, z) * sigma_coef(x, z);
        const int rhs = sigma_coef(x, y) * sigma_coef(y, z) * comp(sigma_[x], sigma_[y], sigma_[z]);
        if (lhs != rhs) fail("suspension is not functorial", x, z);
      }

  ar_arrows_.clear();
  for (int x = 0; x < sz; ++x) {
    const Arc& a = indecs_[x];
    if (is_diagonal(p, a.a + 1, a.b)) ar_arrows_.emplace_back(x, index_of(make_arc(p, a.a + 1, a.b)));
    if (is_diagonal(p, a.a, a.b + 1)) ar_arrows_.emplace_back(x, index_of(make_arc(p, a.a, a.b + 1)));
  }

  dim_matrix_ = Mat(sz, sz);
  for (int w = 0; w < sz; ++w)
    for (int v = 0; v < sz; ++v) dim_matrix_(w, v) = hom_dim(w, v);
  dim_inverse_ = inverse(dim_matrix_);

  const auto bridge = compute_label_bridge(*this);
  labels_ = bridge.labels;
  anchoring_ = bridge.anchoring;
}

}  // namespace cloc
