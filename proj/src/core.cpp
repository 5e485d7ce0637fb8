#include "ripjl/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ripjl/rng.hpp"

namespace ripjl {

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.order.assign(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    inv.order[static_cast<std::size_t>(order[i])] = static_cast<Index>(i);
  return inv;
}

Vector permute(const Vector& x, const Permutation& p) {
  if (x.size() != p.size())
    throw DimensionError("permute: vector length does not match permutation");
  Vector out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = x[p.order[static_cast<std::size_t>(i)]];
  return out;
}

Matrix permute_columns(const Matrix& phi, const Permutation& p) {
  if (phi.cols() != p.size())
    throw DimensionError("permute_columns: column count does not match permutation");
  Matrix out(phi.rows(), phi.cols());
  for (Index i = 0; i < phi.cols(); ++i)
    out.col(i) = phi.col(p.order[static_cast<std::size_t>(i)]);
  return out;
}

std::pair<Vector, Permutation> decreasing_arrangement(const Vector& x) {
  if (x.size() == 0) throw DimensionError("decreasing_arrangement: empty vector");
  Permutation p;
  p.order.resize(static_cast<std::size_t>(x.size()));
  std::iota(p.order.begin(), p.order.end(), Index{0});
  std::stable_sort(p.order.begin(), p.order.end(), [&](Index a, Index b) {
    return std::abs(x[a]) > std::abs(x[b]);
  });
  return {permute(x, p), std::move(p)};
}

bool is_decreasing_arrangement(const Vector& x) {
  for (Index i = 0; i + 1 < x.size(); ++i)
    if (std::abs(x[i]) < std::abs(x[i + 1])) return false;
  return true;
}

BlockStructure block_partition(Index n, Index s) {
  if (s <= 0) throw ParameterError("block_partition: block size must be positive");
  if (n <= 0) throw ParameterError("block_partition: dimension must be positive");
  BlockStructure b;
  b.n = n;
  b.s = s;
  Index r = (n + s - 1) / s;
  b.ranges.reserve(static_cast<std::size_t>(r));
  for (Index j = 0; j < r; ++j)
    b.ranges.push_back({j * s, std::min(n, (j + 1) * s)});
  return b;
}

SignPattern SignPattern::sample(Index n, std::uint64_t seed) {
  SignPattern xi;
  xi.seed = seed;
  xi.signs = rng::rademacher_vector(n, rng::derive(seed, "sign-pattern"));
  return xi;
}

SignPattern SignPattern::all_plus(Index n) {
  SignPattern xi;
  xi.signs = Vector::Ones(n);
  return xi;
}

Vector apply_sign_diagonal(const Vector& x, const SignPattern& xi) {
  if (x.size() != xi.size())
    throw DimensionError("apply_sign_diagonal: length mismatch");
  return x.cwiseProduct(xi.signs);
}

PointSet pairwise_differences(const PointSet& e) {
  if (e.count() < 2)
    throw ParameterError("pairwise_differences: need at least two points");
  std::vector<Index> keep_i, keep_j;
  for (Index i = 0; i < e.count(); ++i)
    for (Index j = i + 1; j < e.count(); ++j)
      if ((e.points.col(i) - e.points.col(j)).norm() > 0.0) {
        keep_i.push_back(i);
        keep_j.push_back(j);
      }
  Matrix diffs(e.dimension(), static_cast<Index>(keep_i.size()));
  for (std::size_t c = 0; c < keep_i.size(); ++c)
    diffs.col(static_cast<Index>(c)) =
        e.points.col(keep_i[c]) - e.points.col(keep_j[c]);
  return PointSet(std::move(diffs));
}

}  // namespace ripjl
