#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ripjl/common.hpp"

namespace ripjl {

// Index permutation on {0,...,N-1}; order[i] names the source coordinate
// that lands at position i.
struct Permutation {
  std::vector<Index> order;

  Index size() const { return static_cast<Index>(order.size()); }
  Permutation inverse() const;
};

Vector permute(const Vector& x, const Permutation& p);
Matrix permute_columns(const Matrix& phi, const Permutation& p);

// Stable sort by decreasing magnitude; ties keep their original order.
std::pair<Vector, Permutation> decreasing_arrangement(const Vector& x);
bool is_decreasing_arrangement(const Vector& x);

struct BlockRange {
  Index begin = 0;  // inclusive
  Index end = 0;    // exclusive
  Index length() const { return end - begin; }
};

// Partition of {0,...,N-1} into R = ceil(N/s) contiguous blocks of size s,
// the last one possibly shorter.
struct BlockStructure {
  Index n = 0;
  Index s = 0;
  std::vector<BlockRange> ranges;

  Index count() const { return static_cast<Index>(ranges.size()); }
  const BlockRange& range(Index block) const {
    return ranges[static_cast<std::size_t>(block)];
  }
  Index block_of(Index coordinate) const { return coordinate / s; }
  bool same_block(Index i, Index j) const { return block_of(i) == block_of(j); }
};

BlockStructure block_partition(Index n, Index s);

// Rademacher sign vector; entries are exactly -1.0 or +1.0.
struct SignPattern {
  Vector signs;
  std::uint64_t seed = 0;

  static SignPattern sample(Index n, std::uint64_t seed);
  static SignPattern all_plus(Index n);

  Index size() const { return signs.size(); }
};

Vector apply_sign_diagonal(const Vector& x, const SignPattern& xi);

// Finite point set in R^N, one point per column.
struct PointSet {
  Matrix points;

  PointSet() = default;
  explicit PointSet(Matrix pts) : points(std::move(pts)) {}

  Index dimension() const { return points.rows(); }
  Index count() const { return points.cols(); }
};

// All p(p-1)/2 unordered differences x_i - x_j, zero differences dropped.
PointSet pairwise_differences(const PointSet& e);

}  // namespace ripjl
