#include "ripjl/constructions.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "ripjl/rng.hpp"
#include "ripjl/transforms.hpp"

namespace ripjl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_apply_dims(Index expected, Index got, const char* who) {
  if (expected != got)
    throw DimensionError(std::string(who) + ": expected length " +
                         std::to_string(expected) + ", got " +
                         std::to_string(got));
}

}  // namespace

const char* kind_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::SubgaussianGaussian: return "subgaussian-gaussian";
    case OperatorKind::SubgaussianRademacher: return "subgaussian-rademacher";
    case OperatorKind::PartialHadamard: return "partial-hadamard";
    case OperatorKind::PartialFourier: return "partial-fourier";
    case OperatorKind::PartialCirculant: return "partial-circulant";
    case OperatorKind::Dense: return "dense";
  }
  return "unknown";
}

EmbeddingOperator build_subgaussian(Index m, Index n, SubgaussianVariant variant,
                                    std::uint64_t seed) {
  if (m < 1 || n < 1)
    throw ParameterError("build_subgaussian: dimensions must be positive");
  EmbeddingOperator op;
  op.kind_ = variant == SubgaussianVariant::Gaussian
                 ? OperatorKind::SubgaussianGaussian
                 : OperatorKind::SubgaussianRademacher;
  op.m_ = m;
  op.n_ = n;
  op.seed_ = seed;
  op.scale_ = 1.0 / std::sqrt(static_cast<double>(m));
  const std::uint64_t stream = rng::derive(seed, "entries");
  op.dense_ = variant == SubgaussianVariant::Gaussian
                  ? rng::gaussian_matrix(m, n, stream)
                  : rng::rademacher_matrix(m, n, stream);
  return op;
}

EmbeddingOperator build_partial_hadamard(Index m, Index n, std::uint64_t seed,
                                         RowSampling sampling) {
  if (!is_power_of_two(n))
    throw ParameterError("build_partial_hadamard: N must be a power of 2");
  if (m < 1) throw ParameterError("build_partial_hadamard: m must be positive");
  if (sampling == RowSampling::WithoutReplacement && m > n)
    throw ParameterError(
        "build_partial_hadamard: m > N requires sampling with replacement");
  EmbeddingOperator op;
  op.kind_ = OperatorKind::PartialHadamard;
  op.m_ = m;
  op.n_ = n;
  op.seed_ = seed;
  op.sampling_ = sampling;
  op.scale_ = 1.0 / std::sqrt(static_cast<double>(m));
  const std::uint64_t stream = rng::derive(seed, "rows");
  op.samples_ = sampling == RowSampling::WithReplacement
                    ? rng::uniform_indices(n, m, stream)
                    : rng::sample_without_replacement(n, m, stream);
  return op;
}

EmbeddingOperator build_partial_fourier(Index m, Index n, std::uint64_t seed) {
  if (m < 2 || m % 2 != 0)
    throw ParameterError("build_partial_fourier: m must be even and positive");
  if (n < 2) throw ParameterError("build_partial_fourier: N must be at least 2");
  EmbeddingOperator op;
  op.kind_ = OperatorKind::PartialFourier;
  op.m_ = m;
  op.n_ = n;
  op.seed_ = seed;
  op.scale_ = std::sqrt(2.0 / static_cast<double>(m));
  op.samples_ = rng::uniform_indices(n, m / 2, rng::derive(seed, "frequencies"));
  return op;
}

EmbeddingOperator build_partial_circulant(Index m, Index n,
                                          SubgaussianVariant variant,
                                          std::uint64_t seed) {
  if (m < 1 || m > n)
    throw ParameterError("build_partial_circulant: need 1 <= m <= N");
  EmbeddingOperator op;
  op.kind_ = OperatorKind::PartialCirculant;
  op.m_ = m;
  op.n_ = n;
  op.seed_ = seed;
  op.scale_ = 1.0 / std::sqrt(static_cast<double>(m));
  const std::uint64_t stream = rng::derive(seed, "generator");
  op.generator_ = variant == SubgaussianVariant::Gaussian
                      ? rng::gaussian_vector(n, stream)
                      : rng::rademacher_vector(n, stream);
  return op;
}

EmbeddingOperator EmbeddingOperator::from_dense(Matrix phi) {
  if (phi.rows() < 1 || phi.cols() < 1)
    throw ParameterError("from_dense: matrix must be nonempty");
  EmbeddingOperator op;
  op.kind_ = OperatorKind::Dense;
  op.m_ = phi.rows();
  op.n_ = phi.cols();
  op.scale_ = 1.0;
  op.dense_ = std::move(phi);
  return op;
}

Vector EmbeddingOperator::apply(const Vector& x) const {
  check_apply_dims(n_, x.size(), "apply");
  switch (kind_) {
    case OperatorKind::SubgaussianGaussian:
    case OperatorKind::SubgaussianRademacher:
    case OperatorKind::Dense:
      return scale_ * (dense_ * x);
    case OperatorKind::PartialHadamard: {
      const Vector transformed = fwht(x);
      Vector out(m_);
      for (Index i = 0; i < m_; ++i)
        out[i] = scale_ * transformed[samples_[static_cast<std::size_t>(i)]];
      return out;
    }
    case OperatorKind::PartialFourier: {
      const ComplexVector spectrum = dft(x);
      Vector out(m_);
      for (Index t = 0; t < m_ / 2; ++t) {
        const auto value = spectrum[samples_[static_cast<std::size_t>(t)]];
        out[2 * t] = scale_ * value.real();
        out[2 * t + 1] = scale_ * value.imag();
      }
      return out;
    }
    case OperatorKind::PartialCirculant: {
      // Row j is the generator rotated right j times, so the product is a
      // correlation: convolve with the index-reversed generator.
      Vector flipped(n_);
      flipped[0] = generator_[0];
      for (Index i = 1; i < n_; ++i) flipped[i] = generator_[n_ - i];
      const Vector full = circular_convolve(flipped, x);
      return scale_ * full.head(m_);
    }
  }
  throw ParameterError("apply: unknown operator kind");
}

Matrix EmbeddingOperator::apply_all(const Matrix& columns) const {
  check_apply_dims(n_, columns.rows(), "apply_all");
  switch (kind_) {
    case OperatorKind::SubgaussianGaussian:
    case OperatorKind::SubgaussianRademacher:
    case OperatorKind::Dense:
      return scale_ * (dense_ * columns);
    default: {
      Matrix out(m_, columns.cols());
      for (Index j = 0; j < columns.cols(); ++j) out.col(j) = apply(columns.col(j));
      return out;
    }
  }
}

Matrix EmbeddingOperator::densify(std::size_t entry_cap) const {
  const auto entries =
      static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_);
  if (entries > entry_cap)
    throw ResourceError("densify: " + std::to_string(entries) +
                        " entries exceed cap " + std::to_string(entry_cap));
  switch (kind_) {
    case OperatorKind::SubgaussianGaussian:
    case OperatorKind::SubgaussianRademacher:
    case OperatorKind::Dense:
      return scale_ * dense_;
    case OperatorKind::PartialHadamard: {
      Matrix out(m_, n_);
      for (Index i = 0; i < m_; ++i)
        for (Index c = 0; c < n_; ++c)
          out(i, c) =
              scale_ * hadamard_entry(samples_[static_cast<std::size_t>(i)], c);
      return out;
    }
    case OperatorKind::PartialFourier: {
      Matrix out(m_, n_);
      for (Index t = 0; t < m_ / 2; ++t) {
        const double f =
            static_cast<double>(samples_[static_cast<std::size_t>(t)]);
        for (Index c = 0; c < n_; ++c) {
          const double ang =
              kTwoPi * f * static_cast<double>(c) / static_cast<double>(n_);
          out(2 * t, c) = scale_ * std::cos(ang);
          out(2 * t + 1, c) = -scale_ * std::sin(ang);
        }
      }
      return out;
    }
    case OperatorKind::PartialCirculant: {
      Matrix out(m_, n_);
      for (Index j = 0; j < m_; ++j)
        for (Index c = 0; c < n_; ++c) {
          Index idx = (c - j) % n_;
          if (idx < 0) idx += n_;
          out(j, c) = scale_ * generator_[idx];
        }
      return out;
    }
  }
  throw ParameterError("densify: unknown operator kind");
}

SignedOperator::SignedOperator(EmbeddingOperator base, SignPattern signs)
    : base_(std::move(base)), signs_(std::move(signs)) {
  if (base_.cols() != signs_.size())
    throw DimensionError("SignedOperator: sign pattern length mismatch");
  for (Index i = 0; i < signs_.size(); ++i)
    if (signs_.signs[i] != 1.0 && signs_.signs[i] != -1.0)
      throw ParameterError("SignedOperator: signs must be exactly +-1");
}

Vector SignedOperator::apply(const Vector& x) const {
  return base_.apply(apply_sign_diagonal(x, signs_));
}

Matrix SignedOperator::apply_all(const Matrix& columns) const {
  check_apply_dims(cols(), columns.rows(), "apply_all");
  return base_.apply_all(signs_.signs.asDiagonal() * columns);
}

Matrix SignedOperator::densify(std::size_t entry_cap) const {
  Matrix out = base_.densify(entry_cap);
  for (Index c = 0; c < out.cols(); ++c)
    if (signs_.signs[c] < 0.0) out.col(c) = -out.col(c);
  return out;
}

SignedOperator randomize_signs(EmbeddingOperator op, std::uint64_t sign_seed) {
  const Index n = op.cols();
  return SignedOperator(std::move(op), SignPattern::sample(n, sign_seed));
}

namespace {

template <typename Op>
PointSet apply_batch_impl(const Op& op, const PointSet& e, BatchMode mode) {
  if (e.count() < 1) throw ParameterError("apply_batch: empty point set");
  if (mode == BatchMode::PairwiseDifferences) {
    if (e.count() < 2)
      throw ParameterError("apply_batch: pairwise mode needs at least 2 points");
    return PointSet(op.apply_all(pairwise_differences(e).points));
  }
  return PointSet(op.apply_all(e.points));
}

}  // namespace

PointSet apply_batch(const EmbeddingOperator& op, const PointSet& e,
                     BatchMode mode) {
  return apply_batch_impl(op, e, mode);
}

PointSet apply_batch(const SignedOperator& op, const PointSet& e,
                     BatchMode mode) {
  return apply_batch_impl(op, e, mode);
}

}  // namespace ripjl
