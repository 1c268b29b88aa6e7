#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cloc {

/// Convex (n+3)-gon with vertices 0..n+2 in cyclic order; models type A_n.
struct Polygon {
  int n = 1;

  [[nodiscard]] int vertex_count() const { return n + 3; }
  [[nodiscard]] int arc_count() const { return (n + 3) * n / 2; }
};

/// A diagonal {a, b}, stored with a < b and 2 <= b - a <= n + 1.
struct Arc {
  int a = 0;
  int b = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Canonical arc through vertices u, v (any integers, reduced mod n+3).
/// Throws std::invalid_argument when u, v do not span a diagonal.
Arc make_arc(const Polygon& p, int u, int v);
bool is_diagonal(const Polygon& p, int u, int v);

std::vector<Arc> enumerate_arcs(const Polygon& p);

/// Interior intersection: endpoints strictly interleave.
bool crosses(const Polygon& p, const Arc& x, const Arc& y);

/// Shift both endpoints by -k. rotate(x, 1) is the suspension of x.
Arc rotate(const Polygon& p, const Arc& x, int k);

/// Middle term of the non-split triangle x -> E -> y -> Σx for crossing arcs
/// x, y. Walking forward from x.a the endpoints meet as x.a, y_1, x.b, y_2;
/// E = {x.a, y_2} + {y_1, x.b} with boundary edges dropped.
/// Throws std::invalid_argument when x and y do not cross.
std::vector<Arc> smooth_crossing(const Polygon& p, const Arc& x, const Arc& y);

std::string format_arc(const Arc& x);
/// Parses "a-b".
Arc parse_arc(const Polygon& p, std::string_view text);

}  // namespace cloc
