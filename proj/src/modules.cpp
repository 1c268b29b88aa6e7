#include "cloc/modules.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "cloc/triangle.hpp"

namespace cloc {

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(const Category& c, RigidObject t) : cat_(&c), t_(std::move(t)) {
  const int r = vertices();
  index_.assign(r * r, -1);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      if (c.hom_dim(t_.summands[j], t_.summands[i])) {
        index_[j * r + i] = static_cast<int>(basis_.size());
        basis_.push_back({j, i});
      }

  // Radical elements c = b o a with a, b radical lie in rad^2.
  auto decompositions = [&](int cidx) {
    std::vector<std::pair<int, int>> out;  // (a, b) basis indices
    const auto [j, k] = basis_[cidx];
    for (int i = 0; i < r; ++i) {
      if (i == j || i == k) continue;
      const int a = element(j, i), b = element(i, k);
      if (a >= 0 && b >= 0 && compose_coef(j, i, k) != 0) out.emplace_back(a, b);
    }
    return out;
  };

  std::vector<int> arrow_of(basis_.size(), -1);
  for (int cidx = 0; cidx < dim(); ++cidx) {
    if (is_identity(cidx) || !decompositions(cidx).empty()) continue;
    arrow_of[cidx] = static_cast<int>(arrows_.size());
    arrows_.emplace_back(basis_[cidx].target, basis_[cidx].source);
    arrow_elements_.push_back(cidx);
  }
  for (std::size_t p = 0; p < arrow_elements_.size(); ++p)
    for (std::size_t q = 0; q < arrow_elements_.size(); ++q) {
      // Arrow p is i -> j (map T_j -> T_i); arrow q is k -> i (map T_i -> T_k).
      const auto ep = basis_[arrow_elements_[p]];
      const auto eq = basis_[arrow_elements_[q]];
      if (eq.source != ep.target) continue;
      if (compose_coef(ep.source, ep.target, eq.target) == 0)
        zero_relations_.emplace_back(static_cast<int>(q), static_cast<int>(p));
    }

  factor_.assign(basis_.size(), {{}, 1});
  std::vector<bool> done(basis_.size(), false);
  std::function<void(int)> factor = [&](int cidx) {
    if (done[cidx]) return;
    if (!is_identity(cidx)) {
      if (arrow_of[cidx] >= 0) {
        factor_[cidx] = {{arrow_of[cidx]}, 1};
      } else {
        const auto [a, b] = decompositions(cidx).front();
        factor(a);
        factor(b);
        // b o a = coef * c, so the action of c is coef * A_a A_b: apply b's path, then a's.
        const int coef = compose_coef(basis_[cidx].source, basis_[a].target, basis_[cidx].target);
        std::vector<int> path = factor_[b].first;
        path.insert(path.end(), factor_[a].first.begin(), factor_[a].first.end());
        factor_[cidx] = {path, coef * factor_[a].second * factor_[b].second};
      }
    }
    done[cidx] = true;
  };
  for (int cidx = 0; cidx < dim(); ++cidx) factor(cidx);

  // rad^m: elements expressible as products of m radical elements.
  std::vector<bool> level(basis_.size(), false);
  for (int cidx = 0; cidx < dim(); ++cidx) level[cidx] = !is_identity(cidx);
  nilpotency_ = 1;
  for (bool any = std::find(level.begin(), level.end(), true) != level.end(); any;) {
    ++nilpotency_;
    std::vector<bool> next(basis_.size(), false);
    for (int cidx = 0; cidx < dim(); ++cidx)
      for (const auto& [a, b] : decompositions(cidx))
        if (level[a]) next[cidx] = true;
    level = std::move(next);
    any = std::find(level.begin(), level.end(), true) != level.end();
    if (nilpotency_ > dim() + 1) throw std::logic_error("Algebra: radical is not nilpotent");
  }
}

int Algebra::compose_coef(int j, int i, int k) const {
  return cat_->comp(t_.summands[j], t_.summands[i], t_.summands[k]);
}

// ---------------------------------------------------------------------------
// Modules and homs

int LambdaModule::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

bool is_module(const Algebra& a, const LambdaModule& m) {
  const int r = a.vertices();
  if (static_cast<int>(m.dims.size()) != r || static_cast<int>(m.action.size()) != a.dim()) return false;
  for (int b = 0; b < a.dim(); ++b) {
    const auto e = a.basis()[b];
    const Mat& act = m.action[b];
    if (act.rows() != static_cast<std::size_t>(m.dims[e.source]) ||
        act.cols() != static_cast<std::size_t>(m.dims[e.target]))
      return false;
    if (a.is_identity(b) && act != Mat::identity(m.dims[e.source])) return false;
  }
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y) {
      const auto ex = a.basis()[x];  // T_j -> T_i
      const auto ey = a.basis()[y];  // T_i -> T_k
      if (ey.source != ex.target) continue;
      const Mat lhs = m.action[x] * m.action[y];
      const int coef = a.compose_coef(ex.source, ex.target, ey.target);
      const int z = a.element(ex.source, ey.target);
      if (coef == 0 || z < 0) {
        if (!lhs.is_zero()) return false;
      } else if (lhs != Scalar(coef) * m.action[z]) {
        return false;
      }
    }
  return true;
}

LambdaModule module_from_arrows(const Algebra& a, const std::vector<int>& dims, const std::vector<Mat>& arrow_maps) {
  LambdaModule m;
  m.dims = dims;
  m.action.resize(a.dim());
  for (int b = 0; b < a.dim(); ++b) {
    const auto e = a.basis()[b];
    if (a.is_identity(b)) {
      m.action[b] = Mat::identity(dims[e.source]);
      continue;
    }
    const auto& [path, sign] = a.factorization(b);
    Mat acc = Mat::identity(dims[e.target]);
    for (int arrow : path) acc = arrow_maps[arrow] * acc;
    m.action[b] = Scalar(sign) * acc;
  }
  return m;
}

LambdaModule H_obj(const Algebra& a, const Obj& x) {
  const Category& c = a.category();
  const auto& ts = a.rigid().summands;
  const int r = a.vertices();
  std::vector<std::vector<int>> pos(r);  // position in M_i of each summand of x, or -1
  LambdaModule m;
  m.dims.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    pos[i].assign(x.count(), -1);
    for (std::size_t p = 0; p < x.count(); ++p)
      if (c.hom_dim(ts[i], x.summands[p])) pos[i][p] = m.dims[i]++;
  }
  m.action.resize(a.dim());
  for (int b = 0; b < a.dim(); ++b) {
    const auto [j, i] = a.basis()[b];
    Mat act(m.dims[j], m.dims[i]);
    for (std::size_t p = 0; p < x.count(); ++p)
      if (pos[i][p] >= 0 && pos[j][p] >= 0) act(pos[j][p], pos[i][p]) = c.comp(ts[j], ts[i], x.summands[p]);
    m.action[b] = std::move(act);
  }
  return m;
}

ModuleHom H_mor(const Algebra& a, const Mor& f) {
  ModuleHom h;
  for (int t : a.rigid().summands) h.maps.push_back(hom_from(a.category(), t, f));
  return h;
}

LambdaModule direct_sum(const LambdaModule& m, const LambdaModule& n) {
  LambdaModule s;
  for (std::size_t i = 0; i < m.dims.size(); ++i) s.dims.push_back(m.dims[i] + n.dims[i]);
  for (std::size_t b = 0; b < m.action.size(); ++b) {
    const Mat& x = m.action[b];
    const Mat& y = n.action[b];
    Mat z(x.rows() + y.rows(), x.cols() + y.cols());
    z.set_block(0, 0, x);
    z.set_block(x.rows(), x.cols(), y);
    s.action.push_back(std::move(z));
  }
  return s;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  ModuleHom h;
  for (std::size_t i = 0; i < f.maps.size(); ++i) h.maps.push_back(g.maps[i] * f.maps[i]);
  return h;
}

ModuleHom identity_hom(const LambdaModule& m) {
  ModuleHom h;
  for (int d : m.dims) h.maps.push_back(Mat::identity(d));
  return h;
}

bool is_zero(const ModuleHom& f) {
  for (const auto& m : f.maps)
    if (!m.is_zero()) return false;
  return true;
}

bool equal(const ModuleHom& f, const ModuleHom& g) { return f.maps == g.maps; }

bool is_module_hom(const Algebra& a, const LambdaModule& m, const LambdaModule& n, const ModuleHom& f) {
  for (int b = 0; b < a.dim(); ++b) {
    const auto [j, i] = a.basis()[b];
    if (f.maps[j] * m.action[b] != n.action[b] * f.maps[i]) return false;
  }
  return true;
}

std::optional<ModuleHom> inverse_hom(const ModuleHom& f) {
  ModuleHom g;
  for (const auto& m : f.maps) {
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    g.maps.push_back(std::move(*inv));
  }
  return g;
}

namespace {

// The commutation system for Hom(m, n): unknowns are the entries of the
// per-vertex maps (row-major, stacked by vertex).
Mat hom_system(const Algebra& a, const LambdaModule& m, const LambdaModule& n, std::vector<std::size_t>& offset) {
  const int r = a.vertices();
  offset.assign(r + 1, 0);
  for (int i = 0; i < r; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(n.dims[i]) * m.dims[i];
  const std::size_t unknowns = offset[r];
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> eqs;
  for (int b : a.arrow_elements()) {
    const auto [j, i] = a.basis()[b];
    const Mat& am = m.action[b];  // m_i -> m_j
    const Mat& an = n.action[b];  // n_i -> n_j
    // phi_j am - an phi_i = 0, an n_j x m_i system.
    for (int row = 0; row < n.dims[j]; ++row)
      for (int col = 0; col < m.dims[i]; ++col) {
        std::vector<std::pair<std::size_t, Scalar>> eq;
        for (int k = 0; k < m.dims[j]; ++k)
          if (sgn(am(k, col)) != 0) eq.emplace_back(offset[j] + row * m.dims[j] + k, am(k, col));
        for (int k = 0; k < n.dims[i]; ++k)
          if (sgn(an(row, k)) != 0) eq.emplace_back(offset[i] + k * m.dims[i] + col, -an(row, k));
        if (!eq.empty()) eqs.push_back(std::move(eq));
      }
  }
  Mat sys(eqs.size(), unknowns);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (const auto& [k, v] : eqs[e]) sys(e, k) += v;
  return sys;
}

ModuleHom hom_from_vector(const LambdaModule& m, const LambdaModule& n, const std::vector<std::size_t>& offset,
                          const Mat& v, std::size_t col) {
  ModuleHom h;
  for (std::size_t i = 0; i < m.dims.size(); ++i) {
    Mat mi(n.dims[i], m.dims[i]);
    for (int row = 0; row < n.dims[i]; ++row)
      for (int c = 0; c < m.dims[i]; ++c) mi(row, c) = v(offset[i] + row * m.dims[i] + c, col);
    h.maps.push_back(std::move(mi));
  }
  return h;
}

}  // namespace

std::vector<ModuleHom> module_hom_basis(const Algebra& a, const LambdaModule& m, const LambdaModule& n) {
  std::vector<std::size_t> offset;
  const Mat sys = hom_system(a, m, n, offset);
  const Mat k = kernel_basis(sys);
  std::vector<ModuleHom> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(hom_from_vector(m, n, offset, k, j));
  return out;
}

int module_hom_dim(const Algebra& a, const LambdaModule& m, const LambdaModule& n) {
  std::vector<std::size_t> offset;
  const Mat sys = hom_system(a, m, n, offset);
  return static_cast<int>(sys.cols() - rank(sys));
}

std::optional<Mat> hom_coordinates(const Algebra& a, const LambdaModule& m, const LambdaModule& n,
                                   const ModuleHom& f) {
  std::vector<std::size_t> offset;
  const Mat sys = hom_system(a, m, n, offset);
  const Mat k = kernel_basis(sys);
  Mat v(sys.cols(), 1);
  for (std::size_t i = 0; i < m.dims.size(); ++i)
    for (int row = 0; row < n.dims[i]; ++row)
      for (int c = 0; c < m.dims[i]; ++c) v(offset[i] + row * m.dims[i] + c, 0) = f.maps[i](row, c);
  return solve_right(k, v);
}

std::optional<ModuleHom> find_isomorphism(const Algebra& a, const LambdaModule& m, const LambdaModule& n,
                                          std::uint64_t seed) {
  if (m.dims != n.dims) return std::nullopt;
  const auto basis = module_hom_basis(a, m, n);
  if (m.total_dim() == 0) return identity_hom(m);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ModuleHom h;
    for (std::size_t i = 0; i < m.dims.size(); ++i) h.maps.emplace_back(n.dims[i], m.dims[i]);
    for (const auto& b : basis) {
      const Scalar s = attempt == 0 && basis.size() == 1 ? Scalar(1) : Scalar(coef(rng));
      for (std::size_t i = 0; i < h.maps.size(); ++i) h.maps[i] = h.maps[i] + s * b.maps[i];
    }
    if (inverse_hom(h)) return h;
  }
  return std::nullopt;
}

bool is_indecomposable(const Algebra& a, const LambdaModule& m) {
  if (m.total_dim() == 0) return false;
  const auto end = module_hom_basis(a, m, m);
  const std::size_t e = end.size();
  Mat gram(e, e);
  for (std::size_t p = 0; p < e; ++p)
    for (std::size_t q = p; q < e; ++q) {
      Scalar tr = 0;
      for (std::size_t i = 0; i < m.dims.size(); ++i) {
        const Mat prod = end[p].maps[i] * end[q].maps[i];
        for (std::size_t d = 0; d < prod.rows(); ++d) tr += prod(d, d);
      }
      gram(p, q) = tr;
      gram(q, p) = tr;
    }
  return rank(gram) == 1;
}

// ---------------------------------------------------------------------------
// Presentations and lifting

namespace {

// Columns spanning the radical part of m at vertex i: images of the radical
// basis maps T_i -> T_k acting m_k -> m_i.
Mat radical_at(const Algebra& a, const std::vector<Mat>& action, const std::vector<Mat>& spaces, int i, int dim_i) {
  Mat rad(dim_i, 0);
  for (int b = 0; b < a.dim(); ++b) {
    const auto [j, k] = a.basis()[b];
    if (j != i || a.is_identity(b)) continue;
    rad = hstack(rad, action[b] * spaces[k]);
  }
  return rad;
}

}  // namespace

Presentation min_proj_presentation(const Algebra& a, const LambdaModule& m) {
  const Category& c = a.category();
  const auto& ts = a.rigid().summands;
  const int r = a.vertices();
  Presentation pres;

  // Top of m and the projective cover H(T0) -> m.
  std::vector<Mat> full(r);
  for (int i = 0; i < r; ++i) full[i] = Mat::identity(m.dims[i]);
  Obj t0;
  std::vector<std::pair<int, Mat>> gens;  // (vertex, element of m_vertex)
  pres.top.assign(r, 0);
  for (int i = 0; i < r; ++i) {
    const Mat rad = column_space(radical_at(a, m.action, full, i, m.dims[i]));
    for (std::size_t q : complement_indices(rad, m.dims[i])) {
      Mat v(m.dims[i], 1);
      v(q, 0) = 1;
      gens.emplace_back(i, v);
      t0.summands.push_back(ts[i]);
      ++pres.top[i];
    }
  }
  const LambdaModule p0 = H_obj(a, t0);
  for (int k = 0; k < r; ++k) {
    Mat phi(m.dims[k], 0);
    for (std::size_t p = 0; p < gens.size(); ++p) {
      const int i = gens[p].first;
      if (!c.hom_dim(ts[k], ts[i])) continue;
      phi = hstack(phi, m.action[a.element(k, i)] * gens[p].second);
    }
    pres.cover.maps.push_back(std::move(phi));
  }

  // Kernel of the cover and its projective cover, lifted to T1 -> T0.
  std::vector<Mat> ker(r);
  for (int k = 0; k < r; ++k) ker[k] = kernel_basis(pres.cover.maps[k]);
  Obj t1;
  std::vector<std::pair<int, Mat>> kgens;  // (vertex, element of H(T0)_vertex)
  for (int k = 0; k < r; ++k) {
    Mat span = column_space(radical_at(a, p0.action, ker, k, p0.dims[k]));
    for (std::size_t col = 0; col < ker[k].cols(); ++col) {
      const Mat v = ker[k].column(col);
      const Mat ext = hstack(span, v);
      if (rank(ext) == span.cols()) continue;
      span = ext;
      kgens.emplace_back(k, v);
      t1.summands.push_back(ts[k]);
    }
  }
  pres.lifted = zero_mor(t1, t0);
  for (std::size_t g = 0; g < kgens.size(); ++g) {
    const auto& [k, v] = kgens[g];
    // Coordinates of H(T0)_k follow the summands p of T0 with Hom(T_k, T0_p) != 0.
    std::size_t row = 0;
    for (std::size_t p = 0; p < t0.count(); ++p) {
      if (!c.hom_dim(ts[k], t0.summands[p])) continue;
      pres.lifted.coeffs(p, g) = v(row++, 0);
    }
  }

  const ModuleHom d1 = H_mor(a, pres.lifted);
  pres.exact = true;
  for (int k = 0; k < r; ++k) {
    const bool onto = rank(pres.cover.maps[k]) == static_cast<std::size_t>(m.dims[k]);
    const bool composite_zero = (pres.cover.maps[k] * d1.maps[k]).is_zero();
    const bool image_is_kernel = rank(d1.maps[k]) == ker[k].cols();
    pres.exact = pres.exact && onto && composite_zero && image_is_kernel;
  }
  return pres;
}

Obj lift_module_to_CT(const Algebra& a, const LambdaModule& m) {
  const Presentation pres = min_proj_presentation(a, m);
  if (!pres.exact) throw std::runtime_error("lift_module_to_CT: presentation is not exact");
  const Triangle tri = complete_triangle(a.category(), pres.lifted);
  const Obj x = tri.z;
  if (!find_isomorphism(a, H_obj(a, x), m))
    throw std::runtime_error("lift_module_to_CT: H of the lifted object is not isomorphic to the module");
  if (!in_CT(a.category(), a.rigid(), x)) throw std::runtime_error("lift_module_to_CT: lifted object is not in C(T)");
  return x;
}

// ---------------------------------------------------------------------------
// Enumeration

std::string dim_vector_string(const std::vector<int>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

namespace {

bool support_connected(const Algebra& a, const std::vector<int>& d) {
  const int r = a.vertices();
  int start = -1;
  for (int i = 0; i < r; ++i)
    if (d[i] > 0) start = i;
  if (start < 0) return false;
  std::vector<bool> seen(r, false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : a.arrows()) {
      const int other = u == v ? w : (w == v ? u : -1);
      if (other >= 0 && d[other] > 0 && !seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  for (int i = 0; i < r; ++i)
    if (d[i] > 0 && !seen[i]) return false;
  return true;
}

// A basis vector untouched by every arrow splits off a simple summand.
bool has_isolated_vector(const Algebra& a, const std::vector<int>& d, const std::vector<Mat>& maps) {
  int total = 0;
  for (int x : d) total += x;
  if (total <= 1) return false;
  for (int v = 0; v < a.vertices(); ++v)
    for (int q = 0; q < d[v]; ++q) {
      bool isolated = true;
      for (std::size_t k = 0; k < maps.size() && isolated; ++k) {
        const auto e = a.basis()[a.arrow_elements()[k]];  // acts m_target -> m_source
        if (e.target == v)
          for (std::size_t row = 0; row < maps[k].rows() && isolated; ++row) isolated = sgn(maps[k](row, q)) == 0;
        if (e.source == v)
          for (std::size_t col = 0; col < maps[k].cols() && isolated; ++col) isolated = sgn(maps[k](q, col)) == 0;
      }
      if (isolated) return true;
    }
  return false;
}

}  // namespace

std::vector<IndecModule> enumerate_indec_modules(const Algebra& a, int dim_bound, int max_bits, int* skipped) {
  const int r = a.vertices();
  std::vector<IndecModule> found;
  if (skipped) *skipped = 0;

  std::vector<std::vector<int>> vectors;
  std::vector<int> d(r, 0);
  std::function<void(int, int)> gen = [&](int v, int left) {
    if (v == r) {
      if (left < dim_bound) vectors.push_back(d);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      d[v] = x;
      gen(v + 1, left - x);
    }
    d[v] = 0;
  };
  gen(0, dim_bound);
  std::stable_sort(vectors.begin(), vectors.end(), [](const auto& x, const auto& y) {
    int sx = 0, sy = 0;
    for (int v : x) sx += v;
    for (int v : y) sy += v;
    return sx < sy;
  });

  for (const auto& dims : vectors) {
    if (!support_connected(a, dims)) continue;
    std::vector<std::pair<std::size_t, std::size_t>> shapes;
    int bits = 0;
    for (int b : a.arrow_elements()) {
      const auto e = a.basis()[b];
      shapes.emplace_back(dims[e.source], dims[e.target]);
      bits += dims[e.source] * dims[e.target];
    }
    if (bits > max_bits) {
      if (skipped) ++*skipped;
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      std::vector<Mat> maps;
      int bit = 0;
      for (const auto& [rows, cols] : shapes) {
        Mat mm(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j) mm(i, j) = (mask >> bit++) & 1U;
        maps.push_back(std::move(mm));
      }
      if (has_isolated_vector(a, dims, maps)) continue;
      LambdaModule m = module_from_arrows(a, dims, maps);
      if (!is_module(a, m) || !is_indecomposable(a, m)) continue;
      bool known = false;
      for (const auto& f : found)
        if (f.module.dims == dims && find_isomorphism(a, f.module, m)) {
          known = true;
          break;
        }
      if (known) continue;
      std::string name = dim_vector_string(dims);
      if (m.total_dim() == 1)
        for (int v = 0; v < r; ++v)
          if (dims[v] == 1) name = "S" + std::to_string(v + 1);
      found.push_back({std::move(m), std::move(name)});
    }
  }
  return found;
}

std::optional<std::vector<int>> decompose(const Algebra& a, const LambdaModule& m,
                                          const std::vector<IndecModule>& indecs) {
  const std::size_t k = indecs.size();
  Mat b(k, k);
  Mat h(k, 1);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t u = 0; u < k; ++u) b(x, u) = module_hom_dim(a, indecs[x].module, indecs[u].module);
    h(x, 0) = module_hom_dim(a, indecs[x].module, m);
  }
  const auto inv = inverse(b);
  if (!inv) return std::nullopt;
  const Mat mult = *inv * h;
  std::vector<int> out(k);
  std::vector<int> dims(m.dims.size(), 0);
  for (std::size_t u = 0; u < k; ++u) {
    if (mult(u, 0).get_den() != 1 || sgn(mult(u, 0)) < 0) return std::nullopt;
    out[u] = static_cast<int>(mult(u, 0).get_num().get_si());
    for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += out[u] * indecs[u].module.dims[v];
  }
  if (dims != m.dims) return std::nullopt;
  return out;
}

}  // namespace cloc
