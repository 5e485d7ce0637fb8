#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "ripjl/common.hpp"

namespace ripjl::rng {

// splitmix64 finalizer; whitens arbitrary seed material.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// FNV-1a over a purpose label.
constexpr std::uint64_t tag(std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Sub-stream seed for (seed, salt). Streams for distinct salts stay stable
// when new purposes are added, so golden outputs never shift.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
  return mix64(seed ^ mix64(salt));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::string_view purpose) {
  return derive(seed, tag(purpose));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::string_view purpose,
                               std::uint64_t index) {
  return derive(derive(seed, tag(purpose)), index);
}

inline std::mt19937_64 engine(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

inline Vector gaussian_vector(Index n, std::uint64_t seed) {
  auto eng = engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = normal(eng);
  return out;
}

inline Matrix gaussian_matrix(Index rows, Index cols, std::uint64_t seed) {
  auto eng = engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix out(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = normal(eng);
  return out;
}

inline double rademacher(std::mt19937_64& eng) {
  return (eng() & 1u) ? 1.0 : -1.0;
}

inline Vector rademacher_vector(Index n, std::uint64_t seed) {
  auto eng = engine(seed);
  Vector out(n);
  for (Index i = 0; i < n; ++i) out[i] = rademacher(eng);
  return out;
}

inline Matrix rademacher_matrix(Index rows, Index cols, std::uint64_t seed) {
  auto eng = engine(seed);
  Matrix out(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = rademacher(eng);
  return out;
}

// k i.i.d. uniform draws from {0,...,n-1}, repeats allowed.
inline std::vector<Index> uniform_indices(Index n, Index k, std::uint64_t seed) {
  auto eng = engine(seed);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Index> out(static_cast<std::size_t>(k));
  for (auto& v : out) v = pick(eng);
  return out;
}

// k distinct indices from {0,...,n-1} via partial Fisher-Yates; order random.
inline std::vector<Index> sample_without_replacement(Index n, Index k,
                                                     std::uint64_t seed) {
  auto eng = engine(seed);
  std::vector<Index> pool(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index i = 0; i < k; ++i) {
    std::uniform_int_distribution<Index> pick(i, n - 1);
    std::swap(pool[static_cast<std::size_t>(i)],
              pool[static_cast<std::size_t>(pick(eng))]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

}  // namespace ripjl::rng
