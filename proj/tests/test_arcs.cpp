#include <doctest.h>

#include <algorithm>

#include "cloc/arcs.hpp"

using namespace cloc;

TEST_CASE("arc counts are n(n+3)/2") {
  for (int n = 1; n <= 10; ++n) {
    const Polygon p{n};
    CHECK(static_cast<int>(enumerate_arcs(p).size()) == n * (n + 3) / 2);
  }
}

TEST_CASE("make_arc canonicalizes and rejects edges") {
  const Polygon p{4};
  CHECK(make_arc(p, 5, 1) == Arc{1, 5});
  CHECK(make_arc(p, 8, 3) == Arc{1, 3});
  CHECK_THROWS_AS(make_arc(p, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_arc(p, 0, 6), std::invalid_argument);
  CHECK(parse_arc(p, "1-4") == Arc{1, 4});
  CHECK(format_arc(Arc{2, 6}) == "2-6");
}

TEST_CASE("crossing is symmetric and irreflexive; rotation has period n+3") {
  for (int n = 1; n <= 7; ++n) {
    const Polygon p{n};
    const auto arcs = enumerate_arcs(p);
    for (const Arc& x : arcs) {
      CHECK_FALSE(crosses(p, x, x));
      CHECK(rotate(p, x, p.vertex_count()) == x);
      CHECK(crosses(p, x, rotate(p, x, 1)));
      for (const Arc& y : arcs) CHECK(crosses(p, x, y) == crosses(p, y, x));
    }
  }
}

TEST_CASE("smoothing a crossing gives the two resolutions") {
  const Polygon p{3};  // hexagon
  const auto e = smooth_crossing(p, Arc{0, 3}, Arc{1, 4});
  // {0,4} and {1,3}: both diagonals.
  REQUIRE(e.size() == 2);
  CHECK(std::find(e.begin(), e.end(), Arc{0, 4}) != e.end());
  CHECK(std::find(e.begin(), e.end(), Arc{1, 3}) != e.end());
  // Boundary edges disappear: {0,2} and {1,3} smooth to {0,3} only.
  const auto f = smooth_crossing(p, Arc{0, 2}, Arc{1, 3});
  CHECK(f.size() == 1);
  CHECK_THROWS_AS(smooth_crossing(p, Arc{0, 2}, Arc{3, 5}), std::invalid_argument);
}
