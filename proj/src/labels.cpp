#include "cloc/labels.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>

namespace cloc {

QuiverRep interval_module(int n, int i, int j) {
  if (i < 1 || j > n || i > j) throw std::invalid_argument("interval_module: bad support");
  QuiverRep m;
  m.dims.assign(n, 0);
  for (int v = i; v <= j; ++v) m.dims[v - 1] = 1;
  for (int v = 0; v + 1 < n; ++v) {
    Mat a(m.dims[v + 1], m.dims[v]);
    if (m.dims[v] == 1 && m.dims[v + 1] == 1) a(0, 0) = 1;
    m.arrows.push_back(a);
  }
  return m;
}

int rep_hom_dim(const QuiverRep& m1, const QuiverRep& m2) {
  const std::size_t n = m1.dims.size();
  // Unknowns: the entries of f_v : m1_v -> m2_v, row-major, stacked by vertex.
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + m1.dims[v] * m2.dims[v];
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return 0;
  std::vector<std::vector<Scalar>> rows;
  // For each arrow v -> v+1: m2_a f_v - f_{v+1} m1_a = 0.
  for (std::size_t v = 0; v + 1 < n; ++v) {
    const Mat& a1 = m1.arrows[v];
    const Mat& a2 = m2.arrows[v];
    const std::size_t d1 = m1.dims[v], e1 = m1.dims[v + 1];
    const std::size_t d2 = m2.dims[v], e2 = m2.dims[v + 1];
    for (std::size_t r = 0; r < e2; ++r)
      for (std::size_t col = 0; col < d1; ++col) {
        std::vector<Scalar> eq(unknowns);
        for (std::size_t k = 0; k < d2; ++k) eq[offset[v] + k * d1 + col] += a2(r, k);
        for (std::size_t k = 0; k < e1; ++k) eq[offset[v + 1] + r * e1 + k] -= a1(k, col);
        rows.push_back(std::move(eq));
      }
  }
  Mat sys(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) sys(r, c) = rows[r][c];
  return static_cast<int>(unknowns - rank(sys));
}

int rep_ext_dim(const QuiverRep& m1, const QuiverRep& m2) {
  // Euler form of the hereditary algebra: <x,y> = sum x_v y_v - sum_{v->v+1} x_v y_{v+1}.
  int euler = 0;
  const std::size_t n = m1.dims.size();
  for (std::size_t v = 0; v < n; ++v) euler += m1.dims[v] * m2.dims[v];
  for (std::size_t v = 0; v + 1 < n; ++v) euler -= m1.dims[v] * m2.dims[v + 1];
  return rep_hom_dim(m1, m2) - euler;
}

std::vector<int> inverse_coxeter(const std::vector<int>& dim_vector) {
  const std::size_t n = dim_vector.size();
  Mat euler = Mat::identity(n);
  for (std::size_t v = 0; v + 1 < n; ++v) euler(v, v + 1) = -1;
  const auto inv_t = inverse(euler.transpose());
  const Mat phi_inv = Scalar(-1) * (*inv_t * euler);
  Mat x(n, 1);
  for (std::size_t v = 0; v < n; ++v) x(v, 0) = dim_vector[v];
  const Mat y = phi_inv * x;
  std::vector<int> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<int>(y(v, 0).get_num().get_si());
  return out;
}

namespace {

// Interval module with the given dimension vector, or nullopt if the vector
// is not the indicator of an interval.
std::optional<std::pair<int, int>> interval_of(const std::vector<int>& d) {
  int lo = -1, hi = -1;
  for (int v = 0; v < static_cast<int>(d.size()); ++v) {
    if (d[v] < 0 || d[v] > 1) return std::nullopt;
    if (d[v] == 1) {
      if (lo < 0) lo = v;
      else if (hi != v - 1) return std::nullopt;
      hi = v;
    }
  }
  if (lo < 0) return std::nullopt;
  return std::make_pair(lo + 1, hi + 1);
}

}  // namespace

int oracle_hom_dim(int n, const ArcLabel& x, const ArcLabel& y) {
  using K = ArcLabel::Kind;
  auto module = [&](const ArcLabel& l) { return interval_module(n, l.i, l.j); };
  auto projective = [&](int i) { return interval_module(n, i, n); };
  // tau^{-1} of a module; nullopt when the module is injective (I_j = M_1j).
  auto tau_inv = [&](const ArcLabel& l) -> std::optional<QuiverRep> {
    if (l.i == 1) return std::nullopt;
    const auto iv = interval_of(inverse_coxeter(module(l).dims));
    if (!iv) throw std::logic_error("oracle: inverse Coxeter image is not an interval");
    return interval_module(n, iv->first, iv->second);
  };

  if (x.kind == K::Module && y.kind == K::Module) {
    const auto ty = tau_inv(y);
    return rep_hom_dim(module(x), module(y)) + (ty ? rep_ext_dim(module(x), *ty) : 0);
  }
  if (x.kind == K::Module) return rep_ext_dim(module(x), projective(y.i));
  if (y.kind == K::Module) {
    const auto ty = tau_inv(y);
    return ty ? rep_hom_dim(projective(x.i), *ty) : 0;
  }
  return rep_hom_dim(projective(x.i), projective(y.i));
}

Arc base_arc(const Polygon& p, const ArcLabel& l) {
  const int n = p.n;
  if (l.kind == ArcLabel::Kind::Module) return make_arc(p, n + 1 - l.j, n + 3 - l.i);
  return make_arc(p, 0, n + 2 - l.i);
}

namespace {

std::vector<ArcLabel> all_labels(int n) {
  std::vector<ArcLabel> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.push_back({ArcLabel::Kind::Module, i, j});
  for (int i = 1; i <= n; ++i) out.push_back({ArcLabel::Kind::ShiftedProjective, i, 0});
  return out;
}

}  // namespace

LabelBridge compute_label_bridge(const Category& c) {
  const Polygon& p = c.polygon();
  const int N = p.vertex_count();
  const auto labels = all_labels(p.n);
  std::vector<std::vector<int>> oracle(labels.size(), std::vector<int>(labels.size()));
  for (std::size_t s = 0; s < labels.size(); ++s)
    for (std::size_t t = 0; t < labels.size(); ++t) oracle[s][t] = oracle_hom_dim(p.n, labels[s], labels[t]);

  int tried = 0;
  for (const bool reflected : {false, true})
    for (int rotation = 0; rotation < N; ++rotation) {
      ++tried;
      std::vector<int> where(labels.size());
      for (std::size_t s = 0; s < labels.size(); ++s) {
        const Arc b = base_arc(p, labels[s]);
        const int u = (reflected ? -b.a : b.a) + rotation;
        const int v = (reflected ? -b.b : b.b) + rotation;
        where[s] = c.index_of(make_arc(p, u, v));
      }
      bool ok = true;
      for (std::size_t s = 0; s < labels.size() && ok; ++s)
        for (std::size_t t = 0; t < labels.size() && ok; ++t)
          ok = c.hom_dim(where[s], where[t]) == oracle[s][t];
      if (!ok) continue;
      LabelBridge out;
      out.labels.resize(labels.size());
      for (std::size_t s = 0; s < labels.size(); ++s) out.labels[where[s]] = labels[s];
      out.anchoring = {reflected, rotation, tried};
      return out;
    }
  throw std::runtime_error("label_bridge: no dihedral anchoring matches the module oracle");
}

std::string format_label(const ArcLabel& l, int n) {
  (void)n;
  if (l.kind == ArcLabel::Kind::ShiftedProjective) return "SP" + std::to_string(l.i);
  const std::string sep = (l.i >= 10 || l.j >= 10) ? "_" : "";
  return "M" + std::to_string(l.i) + sep + std::to_string(l.j);
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size())
    throw std::invalid_argument("cannot parse object '" + std::string(whole) + "'");
  return v;
}

}  // namespace

int parse_indec(const Category& c, std::string_view text) {
  const std::string_view whole = text;
  const int n = c.polygon().n;
  auto bad = [&]() { return std::invalid_argument("cannot parse object '" + std::string(whole) + "'"); };
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw bad();

  if (text.find('-') != std::string_view::npos && text.front() != 'S' && text.front() != 'M')
    return c.index_of(parse_arc(c.polygon(), text));

  // Shift prefixes stack: "S^-1SP3" is Σ⁻¹ applied to SP3.
  int shift = 0;
  for (;;) {
    if (text.starts_with("S^")) {
      std::size_t k = 2;
      if (k < text.size() && text[k] == '-') ++k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      shift += parse_int(text.substr(2, k - 2), whole);
      text.remove_prefix(k);
    } else if (text.size() > 1 && text.front() == 'S' && (text[1] == 'M' || text[1] == 'P' || text[1] == 'S' || std::isdigit(static_cast<unsigned char>(text[1])))) {
      shift += 1;
      text.remove_prefix(1);
    } else {
      break;
    }
  }
  if (text.empty()) throw bad();

  int base = -1;
  if (text.find('-') != std::string_view::npos) {
    base = c.index_of(parse_arc(c.polygon(), text));
  } else if (text.front() == 'P') {
    const int i = parse_int(text.substr(1), whole);
    if (i < 1 || i > n) throw bad();
    base = c.index_of_label({ArcLabel::Kind::Module, i, n});
  } else if (text.front() == 'M') {
    const auto body = text.substr(1);
    int i = 0, j = 0;
    if (const auto us = body.find('_'); us != std::string_view::npos) {
      i = parse_int(body.substr(0, us), whole);
      j = parse_int(body.substr(us + 1), whole);
    } else if (body.size() == 2) {
      i = body[0] - '0';
      j = body[1] - '0';
    } else {
      throw bad();
    }
    if (i < 1 || j > n || i > j) throw bad();
    base = c.index_of_label({ArcLabel::Kind::Module, i, j});
  } else {
    throw bad();
  }
  if (base < 0) throw bad();
  return c.shift(base, shift);
}

}  // namespace cloc
