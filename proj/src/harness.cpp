#include "ripjl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "ripjl/rng.hpp"

namespace ripjl {

const char* pointset_kind_name(PointsetKind kind) {
  switch (kind) {
    case PointsetKind::GaussianUnit: return "gaussian-unit";
    case PointsetKind::Sparse: return "sparse";
    case PointsetKind::PairwiseCloud: return "pairwise-cloud";
  }
  return "unknown";
}

PointSet generate_pointset(PointsetKind kind, Index p, Index n,
                           std::uint64_t seed, Index sparse_support) {
  if (p < 1 || n < 1)
    throw ParameterError("generate_pointset: p and N must be positive");
  switch (kind) {
    case PointsetKind::GaussianUnit: {
      Matrix pts = rng::gaussian_matrix(n, p, rng::derive(seed, "points"));
      for (Index c = 0; c < p; ++c) pts.col(c).normalize();
      return PointSet(std::move(pts));
    }
    case PointsetKind::Sparse: {
      Index support = sparse_support > 0 ? sparse_support : std::max<Index>(1, n / 32);
      support = std::min(support, n);
      Matrix pts = Matrix::Zero(n, p);
      const double value = 1.0 / std::sqrt(static_cast<double>(support));
      for (Index c = 0; c < p; ++c) {
        const std::uint64_t point_seed =
            rng::derive(seed, "sparse-point", static_cast<std::uint64_t>(c));
        const auto where = rng::sample_without_replacement(
            n, support, rng::derive(point_seed, "support"));
        auto eng = rng::engine(rng::derive(point_seed, "signs"));
        for (Index idx : where) pts(idx, c) = rng::rademacher(eng) * value;
      }
      return PointSet(std::move(pts));
    }
    case PointsetKind::PairwiseCloud:
      return PointSet(rng::gaussian_matrix(n, p, rng::derive(seed, "cloud")));
  }
  throw ParameterError("generate_pointset: unknown kind");
}

void validate(const TrialConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1 || cfg.p < 1)
    throw ParameterError("TrialConfig: dimensions must be positive");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon <= 1.0))
    throw ParameterError("TrialConfig: epsilon must lie in (0,1]");
  if (!(cfg.eta > 0.0 && cfg.eta < 1.0))
    throw ParameterError("TrialConfig: eta must lie in (0,1)");
  if (cfg.mode == BatchMode::PairwiseDifferences && cfg.p < 2)
    throw ParameterError("TrialConfig: pairwise mode needs p >= 2");
}

EmbeddingOperator build_operator(const TrialConfig& cfg) {
  switch (cfg.construction) {
    case OperatorKind::SubgaussianGaussian:
      return build_subgaussian(cfg.m, cfg.n, SubgaussianVariant::Gaussian,
                               cfg.matrix_seed);
    case OperatorKind::SubgaussianRademacher:
      return build_subgaussian(cfg.m, cfg.n, SubgaussianVariant::Rademacher,
                               cfg.matrix_seed);
    case OperatorKind::PartialHadamard:
      return build_partial_hadamard(cfg.m, cfg.n, cfg.matrix_seed, cfg.sampling);
    case OperatorKind::PartialFourier:
      return build_partial_fourier(cfg.m, cfg.n, cfg.matrix_seed);
    case OperatorKind::PartialCirculant:
      return build_partial_circulant(cfg.m, cfg.n, cfg.variant, cfg.matrix_seed);
    case OperatorKind::Dense:
      throw ParameterError("build_operator: dense kind has no builder");
  }
  throw ParameterError("build_operator: unknown construction");
}

TrialResult run_trial(const TrialConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const SignedOperator op =
      randomize_signs(build_operator(cfg), cfg.sign_seed);
  const PointSet points = generate_pointset(cfg.pointset, cfg.p, cfg.n,
                                            cfg.data_seed, cfg.sparse_support);
  TrialResult result;
  result.max_distortion = distortion(op, points, cfg.mode);
  result.success = result.max_distortion <= cfg.epsilon;
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

void parallel_for(long count, int jobs, const std::function<void(long)>& fn) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(jobs));
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& worker : workers) worker.join();
}

namespace {

RateEstimate wilson_interval(long failures, long trials) {
  RateEstimate est;
  est.failures = failures;
  est.trials = trials;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(failures) / n;
  est.rate = phat;
  const double z = 1.959963984540054;  // 97.5% normal quantile
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = phat + z2 / (2.0 * n);
  const double spread =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  est.ci_low = std::max(0.0, (center - spread) / denom);
  est.ci_high = std::min(1.0, (center + spread) / denom);
  return est;
}

}  // namespace

RateEstimate failure_rate(const TrialConfig& cfg, long trials,
                          std::uint64_t root_seed, int jobs) {
  validate(cfg);
  if (trials < 1) throw ParameterError("failure_rate: trials must be positive");
  std::vector<char> failed(static_cast<std::size_t>(trials), 0);
  parallel_for(trials, jobs, [&](long i) {
    TrialConfig trial_cfg = cfg;
    const auto index = static_cast<std::uint64_t>(i);
    trial_cfg.matrix_seed = rng::derive(root_seed, "trial-matrix", index);
    trial_cfg.sign_seed = rng::derive(root_seed, "trial-sign", index);
    trial_cfg.data_seed = rng::derive(root_seed, "trial-data", index);
    failed[static_cast<std::size_t>(i)] = run_trial(trial_cfg).success ? 0 : 1;
  });
  long failures = 0;
  for (char f : failed) failures += f;
  return wilson_interval(failures, trials);
}

namespace {

std::string format_history(const std::vector<ProbeRecord>& history) {
  std::ostringstream out;
  for (const auto& probe : history)
    out << " (m=" << probe.m << ", failure-rate=" << probe.rate.rate << ")";
  return out.str();
}

}  // namespace

MinimalMResult minimal_m(TrialConfig cfg, double target_success, Index m_lo,
                         Index m_hi, long trials, std::uint64_t root_seed,
                         int jobs, Index resolution) {
  if (m_lo < 1 || m_hi < m_lo)
    throw ParameterError("minimal_m: invalid search range");
  if (!(target_success >= 0.0 && target_success <= 1.0))
    throw ParameterError("minimal_m: target must lie in [0,1]");

  MinimalMResult result;
  auto probe = [&](Index m) {
    cfg.m = m;
    RateEstimate rate = failure_rate(
        cfg, trials, rng::derive(root_seed, "probe", static_cast<std::uint64_t>(m)),
        jobs);
    result.history.push_back({m, rate});
    return 1.0 - rate.rate >= target_success;
  };

  if (probe(m_lo)) {
    result.m_star = m_lo;
    return result;
  }

  Index failing = m_lo;
  Index succeeding = 0;
  for (Index m = m_lo; m < m_hi;) {
    m = std::min(m * 2, m_hi);
    if (probe(m)) {
      succeeding = m;
      break;
    }
    failing = m;
  }
  if (succeeding == 0)
    throw RangeError("minimal_m: target success rate not reached by m=" +
                     std::to_string(m_hi) + "; probes:" +
                     format_history(result.history));

  if (resolution <= 0) resolution = std::max<Index>(1, (succeeding - failing) / 16);
  while (succeeding - failing > resolution) {
    const Index mid = failing + (succeeding - failing) / 2;
    if (probe(mid))
      succeeding = mid;
    else
      failing = mid;
  }
  result.m_star = succeeding;
  return result;
}

double scaling_exponent(const std::vector<double>& epsilons,
                        const std::vector<double>& m_values) {
  if (epsilons.size() != m_values.size())
    throw ParameterError("scaling_exponent: length mismatch");
  if (epsilons.size() < 3)
    throw ParameterError("scaling_exponent: need at least 3 points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (epsilons[i] <= 0.0 || m_values[i] <= 0.0)
      throw ParameterError("scaling_exponent: values must be positive");
    lx.push_back(std::log(epsilons[i]));
    ly.push_back(std::log(m_values[i]));
  }
  const double n = static_cast<double>(lx.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mean_x += lx[i];
    mean_y += ly[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mean_x) * (lx[i] - mean_x);
    sxy += (lx[i] - mean_x) * (ly[i] - mean_y);
  }
  if (sxx == 0.0)
    throw ParameterError("scaling_exponent: epsilons must not be constant");
  return sxy / sxx;
}

}  // namespace ripjl
