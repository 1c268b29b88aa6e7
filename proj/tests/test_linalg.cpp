#include <doctest.h>

#include <random>

#include "cloc/linalg.hpp"

using namespace cloc;

TEST_CASE("rational arithmetic is exact") {
  Scalar third = make_scalar(1, 3);
  CHECK(third * 3 == 1);
  CHECK(make_scalar(2, 4) == make_scalar(1, 2));
  CHECK(to_string(make_scalar(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(make_scalar(1, 0), std::invalid_argument);
}

TEST_CASE("rank, kernel and solve on small matrices") {
  const Mat a = Mat::from_ints({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  const Mat k = kernel_basis(a);
  REQUIRE(k.cols() == 1);
  CHECK((a * k).is_zero());

  const Mat b = Mat::from_ints({{6}, {12}, {2}});
  const auto x = solve_right(a, b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);
  CHECK_FALSE(solve_right(a, Mat::from_ints({{1}, {0}, {0}})).has_value());

  CHECK_FALSE(inverse(a).has_value());
  const Mat m = Mat::from_ints({{2, 1}, {1, 1}});
  const auto mi = inverse(m);
  REQUIRE(mi.has_value());
  CHECK(m * *mi == Mat::identity(2));
}

TEST_CASE("empty shapes behave") {
  CHECK(rank(Mat(0, 3)) == 0);
  CHECK(kernel_basis(Mat(0, 3)).cols() == 3);
  CHECK(kernel_basis(Mat(2, 0)).cols() == 0);
}

TEST_CASE("property: rank plus nullity equals the column count") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(0, 6), entry(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng) * (trial % 3 == 0 ? 1 : entry(rng));
    const Mat k = kernel_basis(m);
    CHECK(rank(m) + k.cols() == c);
    CHECK((m * k).is_zero());
    CHECK(rank(m) == rank(m.transpose()));
    const Mat cs = column_space(m);
    CHECK(rank(cs) == rank(m));
    const auto comp = complement_indices(cs, r);
    CHECK(comp.size() + rank(m) == r);
  }
}
