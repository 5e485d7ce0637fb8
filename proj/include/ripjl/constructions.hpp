#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ripjl/core.hpp"

namespace ripjl {

enum class OperatorKind {
  SubgaussianGaussian,
  SubgaussianRademacher,
  PartialHadamard,
  PartialFourier,
  PartialCirculant,
  Dense,  // explicit matrix (test hooks, file input)
};

const char* kind_name(OperatorKind kind);

enum class SubgaussianVariant { Gaussian, Rademacher };
enum class RowSampling { WithReplacement, WithoutReplacement };
enum class BatchMode { Direct, PairwiseDifferences };

inline constexpr std::size_t kDefaultDensifyCap = std::size_t{1} << 22;

// Seeded m x N linear map with a fast apply path for the structured kinds.
// Immutable after construction; apply is safe to call concurrently.
class EmbeddingOperator {
 public:
  Index rows() const { return m_; }
  Index cols() const { return n_; }
  OperatorKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  double scale() const { return scale_; }
  RowSampling sampling() const { return sampling_; }

  const std::vector<Index>& row_samples() const { return samples_; }
  const std::vector<Index>& frequencies() const { return samples_; }
  const Vector& generator() const { return generator_; }

  Vector apply(const Vector& x) const;
  Matrix apply_all(const Matrix& columns) const;

  // Explicit matrix whose product with x matches apply(x); built from the
  // defining formulas, not by probing apply, so it serves as an oracle.
  Matrix densify(std::size_t entry_cap = kDefaultDensifyCap) const;

  static EmbeddingOperator from_dense(Matrix phi);

  friend EmbeddingOperator build_subgaussian(Index, Index, SubgaussianVariant,
                                             std::uint64_t);
  friend EmbeddingOperator build_partial_hadamard(Index, Index, std::uint64_t,
                                                  RowSampling);
  friend EmbeddingOperator build_partial_fourier(Index, Index, std::uint64_t);
  friend EmbeddingOperator build_partial_circulant(Index, Index,
                                                   SubgaussianVariant,
                                                   std::uint64_t);

 private:
  EmbeddingOperator() = default;

  OperatorKind kind_ = OperatorKind::Dense;
  Index m_ = 0;
  Index n_ = 0;
  std::uint64_t seed_ = 0;
  double scale_ = 1.0;
  RowSampling sampling_ = RowSampling::WithReplacement;
  Matrix dense_;                 // subgaussian / explicit
  std::vector<Index> samples_;   // hadamard rows / fourier frequencies
  Vector generator_;             // circulant first row
};

// Dense i.i.d. matrix; gaussian entries have variance 1/m, rademacher
// entries are +-1/sqrt(m), so columns have unit norm in expectation (exactly,
// for rademacher).
EmbeddingOperator build_subgaussian(Index m, Index n, SubgaussianVariant variant,
                                    std::uint64_t seed);

// m rows sampled from the N x N Sylvester-Hadamard matrix, scaled by
// 1/sqrt(m); applied through the fast transform.
EmbeddingOperator build_partial_hadamard(
    Index m, Index n, std::uint64_t seed,
    RowSampling sampling = RowSampling::WithReplacement);

// m/2 frequencies sampled uniformly; each contributes a cosine row and a
// negated sine row at scale sqrt(2/m).
EmbeddingOperator build_partial_fourier(Index m, Index n, std::uint64_t seed);

// Circulant generated by a random first row rotated right; the first m rows
// are kept, scale 1/sqrt(m); applied through fast convolution.
EmbeddingOperator build_partial_circulant(Index m, Index n,
                                          SubgaussianVariant variant,
                                          std::uint64_t seed);

// Base operator composed with a diagonal of random signs: x -> base(xi .* x).
class SignedOperator {
 public:
  SignedOperator(EmbeddingOperator base, SignPattern signs);

  Index rows() const { return base_.rows(); }
  Index cols() const { return base_.cols(); }
  const EmbeddingOperator& base() const { return base_; }
  const SignPattern& signs() const { return signs_; }

  Vector apply(const Vector& x) const;
  Matrix apply_all(const Matrix& columns) const;
  Matrix densify(std::size_t entry_cap = kDefaultDensifyCap) const;

 private:
  EmbeddingOperator base_;
  SignPattern signs_;
};

// Fresh Rademacher signs under their own seed, independent of the base
// operator's randomness.
SignedOperator randomize_signs(EmbeddingOperator op, std::uint64_t sign_seed);

PointSet apply_batch(const EmbeddingOperator& op, const PointSet& e,
                     BatchMode mode);
PointSet apply_batch(const SignedOperator& op, const PointSet& e,
                     BatchMode mode);

}  // namespace ripjl
