#include "ripjl/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "ripjl/rng.hpp"

namespace ripjl {

namespace {

// min(C(n,k), cap+1) without overflow.
std::uint64_t combinations_capped(Index n, Index k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  const std::uint64_t limit = cap + 1;
  long double count = 1.0L;
  for (Index i = 1; i <= k; ++i) {
    count *= static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (count > static_cast<long double>(limit)) return limit;
  }
  return static_cast<std::uint64_t>(count + 0.5L);
}

bool advance_combination(std::vector<Index>& support, Index n) {
  const Index k = static_cast<Index>(support.size());
  Index i = k - 1;
  while (i >= 0 && support[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++support[static_cast<std::size_t>(i)];
  for (Index j = i + 1; j < k; ++j)
    support[static_cast<std::size_t>(j)] =
        support[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Restricted isometry defect of one support: max(smax^2-1, 1-smin^2) with
// smin = 0 whenever the submatrix is rank deficient by shape.
double support_defect(const Matrix& phi, const std::vector<Index>& support,
                      Matrix& scratch, Eigen::JacobiSVD<Matrix>& svd) {
  const Index k = static_cast<Index>(support.size());
  scratch.resize(phi.rows(), k);
  for (Index c = 0; c < k; ++c)
    scratch.col(c) = phi.col(support[static_cast<std::size_t>(c)]);
  svd.compute(scratch);
  const auto& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma[0] : 0.0;
  const double smin = phi.rows() < k ? 0.0 : sigma[sigma.size() - 1];
  return std::max(smax * smax - 1.0, 1.0 - smin * smin);
}

void check_rip_args(const Matrix& phi, Index k) {
  if (phi.rows() < 1 || phi.cols() < 1)
    throw ParameterError("rip: matrix must be nonempty");
  if (k < 1 || k > phi.cols())
    throw ParameterError("rip: need 1 <= k <= N");
}

double spectral_norm_upto_2x2(double g00, double g01, double g10, double g11,
                              bool two_rows, bool two_cols) {
  if (!two_rows && !two_cols) return std::abs(g00);
  if (!two_rows) {  // 1 x 2
    return std::sqrt(g00 * g00 + g01 * g01);
  }
  if (!two_cols) {  // 2 x 1
    return std::sqrt(g00 * g00 + g10 * g10);
  }
  const double frob2 = g00 * g00 + g01 * g01 + g10 * g10 + g11 * g11;
  const double det = g00 * g11 - g01 * g10;
  const double disc = std::max(0.0, frob2 * frob2 - 4.0 * det * det);
  return std::sqrt(0.5 * (frob2 + std::sqrt(disc)));
}

}  // namespace

RipEstimate rip_constant_exact(const Matrix& phi, Index k,
                               std::uint64_t support_cap) {
  check_rip_args(phi, k);
  const Index n = phi.cols();
  if (combinations_capped(n, k, support_cap) > support_cap)
    throw ResourceError(
        "rip_constant_exact: more than " + std::to_string(support_cap) +
        " supports to enumerate; use the monte-carlo lower bound");

  std::vector<Index> support(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) support[static_cast<std::size_t>(i)] = i;

  RipEstimate est;
  est.k = k;
  est.method = RipMethod::Exact;
  est.delta = -std::numeric_limits<double>::infinity();

  Matrix scratch;
  Eigen::JacobiSVD<Matrix> svd;
  do {
    const double defect = support_defect(phi, support, scratch, svd);
    if (defect > est.delta) {
      est.delta = defect;
      est.witness = support;
    }
  } while (advance_combination(support, n));
  est.delta = std::max(est.delta, 0.0);
  return est;
}

RipEstimate rip_constant_lower_bound(const Matrix& phi, Index k, long trials,
                                     std::uint64_t seed) {
  check_rip_args(phi, k);
  if (trials < 1)
    throw ParameterError("rip_constant_lower_bound: trials must be positive");
  const Index n = phi.cols();

  RipEstimate est;
  est.k = k;
  est.method = RipMethod::MonteCarlo;
  est.trials = trials;
  est.delta = -std::numeric_limits<double>::infinity();

  Matrix scratch;
  Eigen::JacobiSVD<Matrix> svd;
  for (long t = 0; t < trials; ++t) {
    auto support = rng::sample_without_replacement(
        n, k, rng::derive(seed, "support", static_cast<std::uint64_t>(t)));
    std::sort(support.begin(), support.end());
    const double defect = support_defect(phi, support, scratch, svd);
    if (defect > est.delta) {
      est.delta = defect;
      est.witness = support;
    }
  }
  est.delta = std::max(est.delta, 0.0);
  return est;
}

double disjoint_block_coherence(const Matrix& phi, const std::vector<Index>& j,
                                const std::vector<Index>& l) {
  if (j.empty() || l.empty())
    throw ParameterError("disjoint_block_coherence: empty index set");
  for (Index a : j) {
    if (a < 0 || a >= phi.cols())
      throw ParameterError("disjoint_block_coherence: index out of range");
    for (Index b : l)
      if (a == b)
        throw ParameterError("disjoint_block_coherence: sets must be disjoint");
  }
  for (Index b : l)
    if (b < 0 || b >= phi.cols())
      throw ParameterError("disjoint_block_coherence: index out of range");

  if (j.size() <= 2 && l.size() <= 2) {
    const auto dot = [&](std::size_t a, std::size_t b) {
      return phi.col(j[a]).dot(phi.col(l[b]));
    };
    const bool two_rows = j.size() == 2;
    const bool two_cols = l.size() == 2;
    return spectral_norm_upto_2x2(dot(0, 0), two_cols ? dot(0, 1) : 0.0,
                                  two_rows ? dot(1, 0) : 0.0,
                                  two_rows && two_cols ? dot(1, 1) : 0.0,
                                  two_rows, two_cols);
  }

  Matrix cross(static_cast<Index>(j.size()), static_cast<Index>(l.size()));
  for (std::size_t a = 0; a < j.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b)
      cross(static_cast<Index>(a), static_cast<Index>(b)) =
          phi.col(j[a]).dot(phi.col(l[b]));
  return spectral_norm(cross);
}

double spectral_norm(const Matrix& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  if (!m.allFinite()) throw ParameterError("spectral_norm: nonfinite entries");
  if (std::min(m.rows(), m.cols()) <= 512) {
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()[0];
  }
  return spectral_norm_power(m, tol);
}

double spectral_norm_power(const Matrix& m, double tol, long max_iterations) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Vector v = rng::gaussian_vector(m.cols(), rng::tag("spectral-norm-start"));
  v.normalize();
  double sigma = 0.0;
  for (long it = 0; it < max_iterations; ++it) {
    Vector image = m * v;
    const double next = image.norm();
    if (next == 0.0) return 0.0;
    v = m.transpose() * image;
    v.normalize();
    if (it > 0 && std::abs(next - sigma) <= tol * std::max(1.0, next))
      return next;
    sigma = next;
  }
  throw NumericError("spectral_norm_power: no convergence within iteration cap");
}

PropCQuantities prop_c_quantities(const Matrix& phi, const Vector& x, Index s,
                                  const Vector& b) {
  const Index n = phi.cols();
  if (x.size() != n)
    throw DimensionError("prop_c_quantities: x length must match columns");
  if (s < 1) throw ParameterError("prop_c_quantities: block size must be positive");
  if (n < 2 * s)
    throw ParameterError("prop_c_quantities: need at least 2s columns");
  if (n > kPropCDimensionCap)
    throw ResourceError("prop_c_quantities: dimension exceeds dense cap");
  if (b.size() != s)
    throw DimensionError("prop_c_quantities: b must have length s");
  for (Index i = 0; i < s; ++i)
    if (b[i] != 1.0 && b[i] != -1.0)
      throw ParameterError("prop_c_quantities: b entries must be +-1");
  if (!is_decreasing_arrangement(x))
    throw ParameterError("prop_c_quantities: x must be in decreasing arrangement");
  if (x.norm() > 1.0 + 1e-12)
    throw ParameterError("prop_c_quantities: x must have norm at most 1");

  const BlockStructure blocks = block_partition(n, s);

  PropCQuantities q;
  q.c = Matrix::Zero(n, n);
  for (Index col = s; col < n; ++col) {
    for (Index row = s; row < col; ++row) {
      if (blocks.same_block(row, col)) continue;
      const double value = x[row] * phi.col(row).dot(phi.col(col)) * x[col];
      q.c(row, col) = value;
      q.c(col, row) = value;
    }
  }

  const Vector head = x.head(s).cwiseProduct(b);
  const Vector w = phi.leftCols(s) * head;
  q.v = Vector::Zero(n);
  for (Index row = s; row < n; ++row) q.v[row] = x[row] * phi.col(row).dot(w);
  return q;
}

PropCReport prop_c_check_with_delta(const Matrix& phi, const Vector& x, Index s,
                                    const Vector& b, double delta) {
  const PropCQuantities q = prop_c_quantities(phi, x, s, b);
  PropCReport report;
  report.s = s;
  report.delta = delta;
  report.norm_c_spectral = spectral_norm(q.c);
  report.norm_c_frobenius = q.c.norm();
  report.norm_v = q.v.norm();
  const double root_s = std::sqrt(static_cast<double>(s));
  report.bounds = {delta / static_cast<double>(s), delta / root_s,
                   delta / root_s};
  report.pass = {
      report.norm_c_spectral <= report.bounds[0] + kInequalitySlack,
      report.norm_c_frobenius <= report.bounds[1] + kInequalitySlack,
      report.norm_v <= report.bounds[2] + kInequalitySlack,
  };
  return report;
}

PropCReport prop_c_check(const Matrix& phi, const Vector& x, Index s,
                         const Vector& b, std::uint64_t support_cap) {
  const RipEstimate rip = rip_constant_exact(phi, 2 * s, support_cap);
  return prop_c_check_with_delta(phi, x, s, b, rip.delta);
}

ExpansionTerms expansion_terms(const SignedOperator& op, const Vector& x,
                               Index s) {
  if (x.size() != op.cols())
    throw DimensionError("expansion_terms: x length must match operator");
  if (s < 1) throw ParameterError("expansion_terms: block size must be positive");

  auto [sorted, perm] = decreasing_arrangement(x);
  const Matrix phi = permute_columns(op.base().densify(), perm);
  const Vector xi = permute(op.signs().signs, perm);
  const BlockStructure blocks = block_partition(x.size(), s);

  // Per-block images z_J = Phi_(J) (x_(J) .* xi_(J)).
  std::vector<Vector> images;
  images.reserve(static_cast<std::size_t>(blocks.count()));
  for (Index jb = 0; jb < blocks.count(); ++jb) {
    const auto range = blocks.range(jb);
    const Vector weighted = sorted.segment(range.begin, range.length())
                                .cwiseProduct(xi.segment(range.begin, range.length()));
    images.push_back(phi.middleCols(range.begin, range.length()) * weighted);
  }

  ExpansionTerms terms;
  for (const auto& z : images) terms.term1 += z.squaredNorm();

  Vector tail = Vector::Zero(phi.rows());
  for (std::size_t jb = 1; jb < images.size(); ++jb) tail += images[jb];
  terms.term2 = 2.0 * images[0].dot(tail);

  for (std::size_t jb = 1; jb < images.size(); ++jb)
    for (std::size_t lb = 1; lb < images.size(); ++lb)
      if (jb != lb) terms.term3 += images[jb].dot(images[lb]);

  terms.total = op.apply(x).squaredNorm();
  return terms;
}

double hoeffding_bound(const Vector& x, double t) {
  if (t <= 0.0) throw ParameterError("hoeffding_bound: t must be positive");
  const double norm2 = x.squaredNorm();
  if (norm2 == 0.0) throw ParameterError("hoeffding_bound: x must be nonzero");
  return 2.0 * std::exp(-t * t / (2.0 * norm2));
}

double chaos_bound(const Matrix& x, double t) {
  if (t <= 0.0) throw ParameterError("chaos_bound: t must be positive");
  if (x.rows() != x.cols()) throw ParameterError("chaos_bound: matrix must be square");
  for (Index i = 0; i < x.rows(); ++i)
    if (x(i, i) != 0.0)
      throw ParameterError("chaos_bound: diagonal must be zero");
  const double frob2 = x.squaredNorm();
  if (frob2 == 0.0) return 0.0;
  const double spec = spectral_norm(x);
  const double arg = std::min((96.0 / 65.0) * t / spec, t * t / frob2);
  return 2.0 * std::exp(-arg / 64.0);
}

namespace {

TailCheckResult finish_tail_check(double t, long exceed, long trials,
                                  double bound) {
  TailCheckResult result;
  result.threshold = t;
  result.trials = trials;
  result.bound = bound;
  result.empirical_freq =
      static_cast<double>(exceed) / static_cast<double>(trials);
  result.pass = result.empirical_freq <=
                std::min(1.0, bound) + 3.0 / std::sqrt(static_cast<double>(trials));
  return result;
}

void check_tail_args(long trials, double t) {
  if (trials < 1000)
    throw ParameterError("tail_check: need at least 10^3 trials");
  if (t <= 0.0) throw ParameterError("tail_check: t must be positive");
}

}  // namespace

TailCheckResult tail_check_hoeffding(const Vector& x, double t, long trials,
                                     std::uint64_t seed) {
  check_tail_args(trials, t);
  const double bound = hoeffding_bound(x, t);
  long exceed = 0;
  for (long trial = 0; trial < trials; ++trial) {
    auto eng = rng::engine(
        rng::derive(seed, "tail-trial", static_cast<std::uint64_t>(trial)));
    double dot = 0.0;
    for (Index i = 0; i < x.size(); ++i) dot += rng::rademacher(eng) * x[i];
    if (std::abs(dot) > t) ++exceed;
  }
  return finish_tail_check(t, exceed, trials, bound);
}

TailCheckResult tail_check_chaos(const Matrix& x, double t, long trials,
                                 std::uint64_t seed) {
  check_tail_args(trials, t);
  const double bound = chaos_bound(x, t);
  const Index n = x.rows();
  Vector xi(n);
  long exceed = 0;
  for (long trial = 0; trial < trials; ++trial) {
    auto eng = rng::engine(
        rng::derive(seed, "tail-trial", static_cast<std::uint64_t>(trial)));
    for (Index i = 0; i < n; ++i) xi[i] = rng::rademacher(eng);
    const double statistic = xi.dot(x * xi);
    if (std::abs(statistic) > t) ++exceed;
  }
  return finish_tail_check(t, exceed, trials, bound);
}

SparsityOrder min_sparsity_for_points(long p, double eta) {
  if (p < 1) throw ParameterError("min_sparsity_for_points: p must be positive");
  if (!(eta > 0.0 && eta < 1.0))
    throw ParameterError("min_sparsity_for_points: eta must lie in (0,1)");
  const double raw = TheoremConstants::s_factor *
                     std::log(4.0 * static_cast<double>(p) / eta);
  SparsityOrder order;
  order.s = static_cast<long>(std::ceil(raw));
  order.k = 2 * order.s;
  return order;
}

double required_delta(double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw ParameterError("required_delta: eps must lie in (0,1)");
  return eps / 4.0;
}

namespace {

template <typename Op>
double distortion_impl(const Op& op, const PointSet& e, BatchMode mode) {
  if (e.count() < 1) throw ParameterError("distortion: empty point set");
  const Matrix vectors = mode == BatchMode::PairwiseDifferences
                             ? pairwise_differences(e).points
                             : e.points;
  std::vector<Index> keep;
  for (Index c = 0; c < vectors.cols(); ++c)
    if (vectors.col(c).norm() > 0.0) keep.push_back(c);
  if (keep.empty())
    throw ParameterError("distortion: no nonzero vectors in scope");

  Matrix kept(vectors.rows(), static_cast<Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    kept.col(static_cast<Index>(c)) = vectors.col(keep[c]);

  const Matrix images = op.apply_all(kept);
  double worst = 0.0;
  for (Index c = 0; c < kept.cols(); ++c) {
    const double original = kept.col(c).squaredNorm();
    const double mapped = images.col(c).squaredNorm();
    worst = std::max(worst, std::abs(mapped - original) / original);
  }
  return worst;
}

}  // namespace

double distortion(const EmbeddingOperator& op, const PointSet& e,
                  BatchMode mode) {
  return distortion_impl(op, e, mode);
}

double distortion(const SignedOperator& op, const PointSet& e, BatchMode mode) {
  return distortion_impl(op, e, mode);
}

}  // namespace ripjl
