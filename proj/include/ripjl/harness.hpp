#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ripjl/analysis.hpp"
#include "ripjl/constructions.hpp"

namespace ripjl {

enum class PointsetKind { GaussianUnit, Sparse, PairwiseCloud };

const char* pointset_kind_name(PointsetKind kind);

// Test data for embedding trials. gaussian-unit points are normalized to the
// sphere; sparse points have a random support with +-1 entries, normalized;
// pairwise-cloud points are raw gaussian draws meant for difference
// embeddings. sparse_support of 0 picks max(1, N/32).
PointSet generate_pointset(PointsetKind kind, Index p, Index n,
                           std::uint64_t seed, Index sparse_support = 0);

// One embedding experiment: operator from matrix_seed, signs from sign_seed,
// points from data_seed. epsilon may reach 1.0 so that scaling sweeps can
// include the trivial-distortion endpoint.
struct TrialConfig {
  Index n = 0;
  Index m = 0;
  Index p = 0;
  double epsilon = 0.5;
  double eta = 0.1;
  OperatorKind construction = OperatorKind::SubgaussianGaussian;
  SubgaussianVariant variant = SubgaussianVariant::Gaussian;
  RowSampling sampling = RowSampling::WithReplacement;
  PointsetKind pointset = PointsetKind::GaussianUnit;
  BatchMode mode = BatchMode::Direct;
  Index sparse_support = 0;
  std::uint64_t matrix_seed = 1;
  std::uint64_t sign_seed = 2;
  std::uint64_t data_seed = 3;
};

void validate(const TrialConfig& cfg);
EmbeddingOperator build_operator(const TrialConfig& cfg);

struct TrialResult {
  double max_distortion = 0.0;
  bool success = false;  // max_distortion <= epsilon
  double wall_time = 0.0;
};

TrialResult run_trial(const TrialConfig& cfg);

// Failure fraction over independent trials with per-trial derived seeds;
// identical for any execution order or worker count.
struct RateEstimate {
  long failures = 0;
  long trials = 0;
  double rate = 0.0;
  double ci_low = 0.0;   // Wilson 95% interval
  double ci_high = 0.0;
};

RateEstimate failure_rate(const TrialConfig& cfg, long trials,
                          std::uint64_t root_seed, int jobs = 1);

struct ProbeRecord {
  Index m = 0;
  RateEstimate rate;
};

struct MinimalMResult {
  Index m_star = 0;
  std::vector<ProbeRecord> history;
};

// Smallest m in [m_lo, m_hi] whose empirical success rate meets the target,
// located by doubling then bisection down to `resolution` (default: 1/16 of
// the bracket). Throws RangeError, with the probe history formatted into the
// message, when even m_hi falls short.
MinimalMResult minimal_m(TrialConfig cfg, double target_success, Index m_lo,
                         Index m_hi, long trials, std::uint64_t root_seed,
                         int jobs = 1, Index resolution = 0);

// Least-squares slope of ln(m) against ln(eps); needs >= 3 distinct epsilons.
double scaling_exponent(const std::vector<double>& epsilons,
                        const std::vector<double>& m_values);

// Runs fn(0..count-1) across `jobs` workers; caller guarantees disjoint writes.
void parallel_for(long count, int jobs, const std::function<void(long)>& fn);

}  // namespace ripjl
