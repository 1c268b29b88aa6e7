#include "cloc/arcs.hpp"

#include <charconv>
#include <stdexcept>

namespace cloc {
namespace {

int mod(int v, int m) {
  const int r = v % m;
  return r < 0 ? r + m : r;
}

// Strictly between lo and hi going forward (cyclically) from lo.
bool strictly_between(int lo, int v, int hi, int m) {
  const int dv = mod(v - lo, m);
  const int dh = mod(hi - lo, m);
  return dv > 0 && dv < dh;
}

}  // namespace

bool is_diagonal(const Polygon& p, int u, int v) {
  const int m = p.vertex_count();
  const int d = mod(u - v, m);
  return d >= 2 && d <= m - 2;
}

Arc make_arc(const Polygon& p, int u, int v) {
  if (!is_diagonal(p, u, v)) throw std::invalid_argument("make_arc: not a diagonal");
  const int m = p.vertex_count();
  int a = mod(u, m);
  int b = mod(v, m);
  if (a > b) std::swap(a, b);
  return {a, b};
}

std::vector<Arc> enumerate_arcs(const Polygon& p) {
  std::vector<Arc> out;
  const int m = p.vertex_count();
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b)
      if (is_diagonal(p, a, b)) out.push_back({a, b});
  return out;
}

bool crosses(const Polygon& p, const Arc& x, const Arc& y) {
  const int m = p.vertex_count();
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  return strictly_between(x.a, y.a, x.b, m) != strictly_between(x.a, y.b, x.b, m);
}

Arc rotate(const Polygon& p, const Arc& x, int k) { return make_arc(p, x.a - k, x.b - k); }

std::vector<Arc> smooth_crossing(const Polygon& p, const Arc& x, const Arc& y) {
  if (!crosses(p, x, y)) throw std::invalid_argument("smooth_crossing: arcs do not cross");
  const int m = p.vertex_count();
  const int y1 = strictly_between(x.a, y.a, x.b, m) ? y.a : y.b;
  const int y2 = y1 == y.a ? y.b : y.a;
  std::vector<Arc> out;
  if (is_diagonal(p, x.a, y2)) out.push_back(make_arc(p, x.a, y2));
  if (is_diagonal(p, y1, x.b)) out.push_back(make_arc(p, y1, x.b));
  return out;
}

std::string format_arc(const Arc& x) { return std::to_string(x.a) + "-" + std::to_string(x.b); }

Arc parse_arc(const Polygon& p, std::string_view text) {
  const auto dash = text.find('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("parse_arc: expected 'a-b'");
  int u = 0;
  int v = 0;
  const auto lhs = text.substr(0, dash);
  const auto rhs = text.substr(dash + 1);
  auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), u);
  auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), v);
  if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
      r2.ptr != rhs.data() + rhs.size())
    throw std::invalid_argument("parse_arc: bad integer in '" + std::string(text) + "'");
  const int m = p.vertex_count();
  if (u < 0 || v < 0 || u >= m || v >= m)
    throw std::invalid_argument("parse_arc: vertex out of range in '" + std::string(text) + "'");
  return make_arc(p, u, v);
}

}  // namespace cloc
