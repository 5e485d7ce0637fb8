#include <doctest.h>

#include <cmath>

#include "ripjl/core.hpp"
#include "ripjl/rng.hpp"

using namespace ripjl;

namespace {

Vector make_vector(std::initializer_list<double> values) {
  Vector x(static_cast<Index>(values.size()));
  Index i = 0;
  for (double v : values) x[i++] = v;
  return x;
}

}  // namespace

TEST_CASE("decreasing arrangement sorts by magnitude") {
  auto [sorted, perm] = decreasing_arrangement(make_vector({3, -5, 1}));
  CHECK(sorted[0] == -5);
  CHECK(sorted[1] == 3);
  CHECK(sorted[2] == 1);
  CHECK(perm.order == std::vector<Index>{1, 0, 2});
}

TEST_CASE("decreasing arrangement breaks ties stably") {
  auto [sorted, perm] = decreasing_arrangement(make_vector({1, 1, 1}));
  CHECK(perm.order == std::vector<Index>{0, 1, 2});
  CHECK(sorted[0] == 1);

  auto [sorted2, perm2] = decreasing_arrangement(make_vector({0, 0, 7, 0}));
  CHECK(sorted2[0] == 7);
  CHECK(perm2.order == std::vector<Index>{2, 0, 1, 3});
}

TEST_CASE("decreasing arrangement rejects empty input") {
  CHECK_THROWS_AS(decreasing_arrangement(Vector(0)), DimensionError);
}

TEST_CASE("decreasing arrangement is norm preserving and idempotent") {
  for (int trial = 0; trial < 20; ++trial) {
    const Vector x = rng::gaussian_vector(
        37, rng::derive(7, "core-x", static_cast<std::uint64_t>(trial)));
    auto [sorted, perm] = decreasing_arrangement(x);
    CHECK(sorted.norm() == doctest::Approx(x.norm()).epsilon(1e-14));
    CHECK(is_decreasing_arrangement(sorted));
    auto [again, perm2] = decreasing_arrangement(sorted);
    CHECK((again - sorted).lpNorm<Eigen::Infinity>() == 0.0);
    for (Index i = 0; i < perm2.size(); ++i)
      CHECK(perm2.order[static_cast<std::size_t>(i)] == i);
  }
}

TEST_CASE("permutation inverse round trips") {
  const Vector x = rng::gaussian_vector(23, rng::derive(7, "perm"));
  auto [sorted, perm] = decreasing_arrangement(x);
  const Vector back = permute(sorted, perm.inverse());
  CHECK((back - x).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("block partition covers the index range") {
  const BlockStructure b = block_partition(7, 2);
  CHECK(b.count() == 4);
  CHECK(b.range(0).begin == 0);
  CHECK(b.range(0).end == 2);
  CHECK(b.range(3).begin == 6);
  CHECK(b.range(3).end == 7);

  const BlockStructure even = block_partition(6, 3);
  CHECK(even.count() == 2);
  CHECK(even.range(1).begin == 3);
  CHECK(even.range(1).end == 6);

  const BlockStructure one = block_partition(5, 5);
  CHECK(one.count() == 1);
  CHECK(one.range(0).length() == 5);
}

TEST_CASE("block partition degenerates to one block when s > N") {
  const BlockStructure b = block_partition(3, 7);
  CHECK(b.count() == 1);
  CHECK(b.range(0).length() == 3);
}

TEST_CASE("block partition rejects nonpositive block size") {
  CHECK_THROWS_AS(block_partition(5, 0), ParameterError);
  CHECK_THROWS_AS(block_partition(5, -2), ParameterError);
}

TEST_CASE("block lengths sum to N for random shapes") {
  auto eng = rng::engine(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 1 + static_cast<Index>(eng() % 200);
    const Index s = 1 + static_cast<Index>(eng() % 32);
    const BlockStructure b = block_partition(n, s);
    CHECK(b.count() == (n + s - 1) / s);
    Index total = 0;
    for (Index j = 0; j < b.count(); ++j) {
      total += b.range(j).length();
      if (j + 1 < b.count()) CHECK(b.range(j).length() == s);
    }
    CHECK(total == n);
  }
}

TEST_CASE("sign diagonal flips entries and preserves norm") {
  SignPattern xi;
  xi.signs = make_vector({1, 1, 1});
  Vector x = make_vector({1, 2, 3});
  CHECK((apply_sign_diagonal(x, xi) - x).norm() == 0.0);

  xi.signs = make_vector({-1, 1, -1});
  const Vector flipped = apply_sign_diagonal(x, xi);
  CHECK(flipped[0] == -1);
  CHECK(flipped[1] == 2);
  CHECK(flipped[2] == -3);
  CHECK(flipped.norm() == doctest::Approx(x.norm()).epsilon(1e-15));

  const Vector twice = apply_sign_diagonal(flipped, xi);
  CHECK((twice - x).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("sign diagonal rejects length mismatch") {
  CHECK_THROWS_AS(
      apply_sign_diagonal(make_vector({1, 2}), SignPattern::all_plus(3)),
      DimensionError);
}

TEST_CASE("sign pattern sampling is seeded and valued in {-1,+1}") {
  const SignPattern a = SignPattern::sample(128, 42);
  const SignPattern b = SignPattern::sample(128, 42);
  CHECK((a.signs - b.signs).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(a.seed == 42);
  for (Index i = 0; i < a.size(); ++i) CHECK(std::abs(a.signs[i]) == 1.0);
  const SignPattern c = SignPattern::sample(128, 43);
  CHECK((a.signs - c.signs).lpNorm<Eigen::Infinity>() > 0.0);
}

TEST_CASE("pairwise differences drop duplicates") {
  Matrix pts(2, 3);
  pts.col(0) = make_vector({1, 0});
  pts.col(1) = make_vector({0, 1});
  pts.col(2) = make_vector({1, 0});  // duplicate of column 0
  const PointSet diffs = pairwise_differences(PointSet{pts});
  CHECK(diffs.count() == 2);  // the (0,2) pair is zero and dropped

  Matrix two(2, 2);
  two.col(0) = make_vector({3, 1});
  two.col(1) = make_vector({1, 1});
  const PointSet single = pairwise_differences(PointSet{two});
  CHECK(single.count() == 1);
  CHECK(single.points(0, 0) == 2);
  CHECK(single.points(1, 0) == 0);
}
