#include <algorithm>
#include <stdexcept>

#include "cloc/category.hpp"

namespace cloc {

std::vector<int> Obj::iso_class() const {
  auto s = summands;
  std::sort(s.begin(), s.end());
  return s;
}

Obj direct_sum(const Obj& x, const Obj& y) {
  Obj r = x;
  r.summands.insert(r.summands.end(), y.summands.begin(), y.summands.end());
  return r;
}

Mor zero_mor(const Obj& x, const Obj& y) { return {x, y, Mat(y.count(), x.count())}; }

Mor identity_mor(const Obj& x) { return {x, x, Mat::identity(x.count())}; }

Mor basis_mor(const Category& c, int x, int y) {
  if (c.hom_dim(x, y) == 0) throw std::invalid_argument("basis_mor: Hom(x, y) is zero");
  Mor f{Obj{{x}}, Obj{{y}}, Mat(1, 1)};
  f.coeffs(0, 0) = 1;
  return f;
}

void validate(const Category& c, const Mor& f) {
  if (f.coeffs.rows() != f.target.count() || f.coeffs.cols() != f.source.count())
    throw std::invalid_argument("morphism: coefficient matrix shape does not match its objects");
  for (std::size_t i = 0; i < f.target.count(); ++i)
    for (std::size_t j = 0; j < f.source.count(); ++j)
      if (sgn(f.coeffs(i, j)) != 0 && c.hom_dim(f.source.summands[j], f.target.summands[i]) == 0)
        throw std::invalid_argument("morphism: nonzero coefficient on a zero hom space (" +
                                    format_arc(c.arc(f.source.summands[j])) + " -> " +
                                    format_arc(c.arc(f.target.summands[i])) + ")");
}

Mor compose(const Category& c, const Mor& g, const Mor& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: objects do not match");
  const auto& xs = f.source.summands;
  const auto& ys = f.target.summands;
  const auto& zs = g.target.summands;
  Mat r(zs.size(), xs.size());
  for (std::size_t j = 0; j < ys.size(); ++j)
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const Scalar& fk = f.coeffs(j, k);
      if (sgn(fk) == 0) continue;
      for (std::size_t i = 0; i < zs.size(); ++i) {
        const Scalar& gi = g.coeffs(i, j);
        if (sgn(gi) == 0) continue;
        const int s = c.comp(xs[k], ys[j], zs[i]);
        if (s) r(i, k) += s * gi * fk;
      }
    }
  return {f.source, g.target, std::move(r)};
}

Mor add(const Mor& f, const Mor& g) {
  if (f.source != g.source || f.target != g.target) throw std::invalid_argument("add: objects do not match");
  return {f.source, f.target, f.coeffs + g.coeffs};
}

Mor scale(const Scalar& s, const Mor& f) { return {f.source, f.target, s * f.coeffs}; }

Mor direct_sum(const Mor& f, const Mor& g) {
  Mat m(f.coeffs.rows() + g.coeffs.rows(), f.coeffs.cols() + g.coeffs.cols());
  m.set_block(0, 0, f.coeffs);
  m.set_block(f.coeffs.rows(), f.coeffs.cols(), g.coeffs);
  return {direct_sum(f.source, g.source), direct_sum(f.target, g.target), std::move(m)};
}

Mor row_join(const Mor& f, const Mor& g) {
  if (f.target != g.target) throw std::invalid_argument("row_join: targets differ");
  return {direct_sum(f.source, g.source), f.target, hstack(f.coeffs, g.coeffs)};
}

Mor col_join(const Mor& f, const Mor& g) {
  if (f.source != g.source) throw std::invalid_argument("col_join: sources differ");
  return {f.source, direct_sum(f.target, g.target), vstack(f.coeffs, g.coeffs)};
}

Mor restrict_source(const Mor& f, const std::vector<std::size_t>& cols) {
  Mor r{Obj{}, f.target, Mat(f.target.count(), cols.size())};
  for (std::size_t k = 0; k < cols.size(); ++k) {
    r.source.summands.push_back(f.source.summands.at(cols[k]));
    for (std::size_t i = 0; i < f.target.count(); ++i) r.coeffs(i, k) = f.coeffs(i, cols[k]);
  }
  return r;
}

Mor restrict_target(const Mor& f, const std::vector<std::size_t>& rows) {
  Mor r{f.source, Obj{}, Mat(rows.size(), f.source.count())};
  for (std::size_t k = 0; k < rows.size(); ++k) {
    r.target.summands.push_back(f.target.summands.at(rows[k]));
    for (std::size_t j = 0; j < f.source.count(); ++j) r.coeffs(k, j) = f.coeffs(rows[k], j);
  }
  return r;
}

Obj suspend_obj(const Category& c, const Obj& x, int k) {
  Obj r;
  r.summands.reserve(x.count());
  for (int s : x.summands) r.summands.push_back(c.shift(s, k));
  return r;
}

Mor suspend_mor(const Category& c, const Mor& f, int k) {
  Mor r = f;
  while (k != 0) {
    const bool forward = k > 0;
    Obj src = suspend_obj(c, r.source, forward ? 1 : -1);
    Obj tgt = suspend_obj(c, r.target, forward ? 1 : -1);
    for (std::size_t i = 0; i < tgt.count(); ++i)
      for (std::size_t j = 0; j < src.count(); ++j) {
        if (sgn(r.coeffs(i, j)) == 0) continue;
        // Coefficients are ±1, so Σ and Σ^{-1} use the same sign.
        const int s = forward ? c.sigma_coef(r.source.summands[j], r.target.summands[i])
                              : c.sigma_coef(src.summands[j], tgt.summands[i]);
        r.coeffs(i, j) *= s;
      }
    r.source = std::move(src);
    r.target = std::move(tgt);
    k += forward ? -1 : 1;
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> hom_basis(const Category& c, const Obj& x, const Obj& y) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < y.count(); ++i)
    for (std::size_t j = 0; j < x.count(); ++j)
      if (c.hom_dim(x.summands[j], y.summands[i])) out.emplace_back(i, j);
  return out;
}

std::size_t hom_dimension(const Category& c, const Obj& x, const Obj& y) {
  std::size_t d = 0;
  for (int t : y.summands)
    for (int s : x.summands) d += c.hom_dim(s, t);
  return d;
}

Mat coordinates(const Category& c, const Mor& f) {
  const auto basis = hom_basis(c, f.source, f.target);
  Mat v(basis.size(), 1);
  for (std::size_t b = 0; b < basis.size(); ++b) v(b, 0) = f.coeffs(basis[b].first, basis[b].second);
  return v;
}

Mor from_coordinates(const Category& c, const Obj& x, const Obj& y, const Mat& v) {
  const auto basis = hom_basis(c, x, y);
  if (v.rows() != basis.size() || v.cols() != 1) throw std::invalid_argument("from_coordinates: wrong length");
  Mor f = zero_mor(x, y);
  for (std::size_t b = 0; b < basis.size(); ++b) f.coeffs(basis[b].first, basis[b].second) = v(b, 0);
  return f;
}

Mat hom_from(const Category& c, int w, const Mor& f) {
  const auto& xs = f.source.summands;
  const auto& ys = f.target.summands;
  std::vector<std::size_t> row_of(ys.size(), 0);
  std::size_t rows = 0;
  for (std::size_t i = 0; i < ys.size(); ++i)
    if (c.hom_dim(w, ys[i])) row_of[i] = rows++;
  std::size_t cols = 0;
  for (int x : xs) cols += c.hom_dim(w, x);
  Mat m(rows, cols);
  std::size_t col = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (!c.hom_dim(w, xs[j])) continue;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (!c.hom_dim(w, ys[i]) || sgn(f.coeffs(i, j)) == 0) continue;
      const int s = c.comp(w, xs[j], ys[i]);
      if (s) m(row_of[i], col) += s * f.coeffs(i, j);
    }
    ++col;
  }
  return m;
}

Mat hom_to(const Category& c, const Mor& f, int w) {
  const auto& xs = f.source.summands;
  const auto& ys = f.target.summands;
  std::vector<std::size_t> row_of(xs.size(), 0);
  std::size_t rows = 0;
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (c.hom_dim(xs[j], w)) row_of[j] = rows++;
  std::size_t cols = 0;
  for (int y : ys) cols += c.hom_dim(y, w);
  Mat m(rows, cols);
  std::size_t col = 0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (!c.hom_dim(ys[i], w)) continue;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (!c.hom_dim(xs[j], w) || sgn(f.coeffs(i, j)) == 0) continue;
      const int s = c.comp(xs[j], ys[i], w);
      if (s) m(row_of[j], col) += s * f.coeffs(i, j);
    }
    ++col;
  }
  return m;
}

Mat post_matrix(const Category& c, const Obj& u, const Mor& s) {
  const auto dom = hom_basis(c, u, s.source);
  const auto cod = hom_basis(c, u, s.target);
  // Position lookup for (target summand, source summand) in cod.
  std::vector<long> pos(s.target.count() * u.count(), -1);
  for (std::size_t b = 0; b < cod.size(); ++b) pos[cod[b].first * u.count() + cod[b].second] = static_cast<long>(b);
  Mat m(cod.size(), dom.size());
  for (std::size_t b = 0; b < dom.size(); ++b) {
    const auto [a, j] = dom[b];
    for (std::size_t i = 0; i < s.target.count(); ++i) {
      if (sgn(s.coeffs(i, a)) == 0) continue;
      const int k = c.comp(u.summands[j], s.source.summands[a], s.target.summands[i]);
      if (k) m(pos[i * u.count() + j], b) += k * s.coeffs(i, a);
    }
  }
  return m;
}

Mat pre_matrix(const Category& c, const Mor& f, const Obj& z) {
  const auto dom = hom_basis(c, f.target, z);
  const auto cod = hom_basis(c, f.source, z);
  std::vector<long> pos(z.count() * f.source.count(), -1);
  for (std::size_t b = 0; b < cod.size(); ++b)
    pos[cod[b].first * f.source.count() + cod[b].second] = static_cast<long>(b);
  Mat m(cod.size(), dom.size());
  for (std::size_t b = 0; b < dom.size(); ++b) {
    const auto [i, a] = dom[b];
    for (std::size_t j = 0; j < f.source.count(); ++j) {
      if (sgn(f.coeffs(a, j)) == 0) continue;
      const int k = c.comp(f.source.summands[j], f.target.summands[a], z.summands[i]);
      if (k) m(pos[i * f.source.count() + j], b) += k * f.coeffs(a, j);
    }
  }
  return m;
}

std::optional<Mor> solve_post(const Category& c, const Mor& s, const Mor& u) {
  if (u.target != s.target) throw std::invalid_argument("solve_post: targets differ");
  const Mat a = post_matrix(c, u.source, s);
  const auto x = solve_right(a, coordinates(c, u));
  if (!x) return std::nullopt;
  return from_coordinates(c, u.source, s.source, *x);
}

std::optional<Mor> solve_pre(const Category& c, const Mor& f, const Mor& u) {
  if (u.source != f.source) throw std::invalid_argument("solve_pre: sources differ");
  const Mat a = pre_matrix(c, f, u.target);
  const auto x = solve_right(a, coordinates(c, u));
  if (!x) return std::nullopt;
  return from_coordinates(c, f.target, u.target, *x);
}

namespace {

std::vector<Mor> columns_as_mors(const Category& c, const Obj& x, const Obj& y, const Mat& k) {
  std::vector<Mor> out;
  out.reserve(k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(from_coordinates(c, x, y, k.column(j)));
  return out;
}

}  // namespace

std::vector<Mor> post_kernel(const Category& c, const Obj& u, const Mor& s) {
  return columns_as_mors(c, u, s.source, kernel_basis(post_matrix(c, u, s)));
}

std::vector<Mor> pre_kernel(const Category& c, const Mor& f, const Obj& z) {
  return columns_as_mors(c, f.target, z, kernel_basis(pre_matrix(c, f, z)));
}

std::optional<Mor> inverse_mor(const Category& c, const Mor& f) {
  if (f.source.iso_class() != f.target.iso_class()) return std::nullopt;
  const auto g = solve_post(c, f, identity_mor(f.target));
  if (!g) return std::nullopt;
  if (compose(c, *g, f).coeffs != Mat::identity(f.source.count())) return std::nullopt;
  return g;
}

bool is_isomorphism(const Category& c, const Mor& f) { return inverse_mor(c, f).has_value(); }

RightMinimal right_minimal_reduce(const Category& c, const Mor& f) {
  const Obj& x = f.source;
  const std::size_t m = x.count();
  Mat aut = Mat::identity(m);
  std::vector<bool> split(m, false);

  for (bool changed = true; changed;) {
    changed = false;
    const Mor current{x, f.target, (compose(c, f, Mor{x, x, aut})).coeffs};
    for (std::size_t j = 0; j < m && !changed; ++j) {
      if (split[j]) continue;
      const int w = x.summands[j];
      // Maps iota : w -> X (restricted to the still-kept positions) with f' iota = 0
      // whose identity component at position j is nonzero split off a summand.
      std::vector<std::size_t> kept;
      for (std::size_t t = 0; t < m; ++t)
        if (!split[t]) kept.push_back(t);
      const Mor kept_part = restrict_source(current, kept);
      for (const Mor& iota : post_kernel(c, Obj{{w}}, kept_part)) {
        std::size_t jk = 0;
        while (kept[jk] != j) ++jk;
        if (sgn(iota.coeffs(jk, 0)) == 0) continue;
        Mat change = Mat::identity(m);
        for (std::size_t r = 0; r < kept.size(); ++r) change(kept[r], j) = iota.coeffs(r, 0);
        aut = (compose(c, Mor{x, x, aut}, Mor{x, x, change})).coeffs;
        split[j] = true;
        changed = true;
        break;
      }
    }
  }

  RightMinimal r;
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < m; ++j)
    if (!split[j]) r.kept.push_back(j);
  order = r.kept;
  for (std::size_t j = 0; j < m; ++j)
    if (split[j]) {
      order.push_back(j);
      r.split_off.summands.push_back(x.summands[j]);
    }
  r.automorphism = restrict_source(Mor{x, x, aut}, order);
  const Mor reduced = compose(c, f, r.automorphism);
  std::vector<std::size_t> first(r.kept.size());
  for (std::size_t k = 0; k < first.size(); ++k) first[k] = k;
  r.minimal = restrict_source(reduced, first);
  return r;
}

bool is_right_minimal(const Category& c, const Mor& f) {
  // Every e with f e = f is id + k with f k = 0. All of these are invertible
  // exactly when each such k lies in the radical of End(X), i.e. has no
  // nonzero coefficient between equal summands.
  const Obj& x = f.source;
  for (const Mor& k : post_kernel(c, x, f)) {
    for (std::size_t i = 0; i < x.count(); ++i)
      for (std::size_t j = 0; j < x.count(); ++j)
        if (x.summands[i] == x.summands[j] && sgn(k.coeffs(i, j)) != 0) return false;
    if (!is_isomorphism(c, add(identity_mor(x), k))) return false;
  }
  return true;
}

}  // namespace cloc
