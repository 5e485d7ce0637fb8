#include "ripjl/suites.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "ripjl/analysis.hpp"
#include "ripjl/constructions.hpp"
#include "ripjl/harness.hpp"
#include "ripjl/rng.hpp"

namespace ripjl {

namespace {

void finalize(SuiteReport& report) {
  report.pass = std::all_of(report.records.begin(), report.records.end(),
                            [](const CheckRecord& r) { return r.pass; });
}

// All subsets of {0,...,n-1} of sizes 1..s, lexicographic within each size.
std::vector<std::vector<Index>> subsets_up_to(Index n, Index s) {
  std::vector<std::vector<Index>> out;
  for (Index size = 1; size <= s; ++size) {
    std::vector<Index> subset(static_cast<std::size_t>(size));
    for (Index i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      out.push_back(subset);
      Index i = size - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (Index j = i + 1; j < size; ++j)
        subset[static_cast<std::size_t>(j)] =
            subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

bool disjoint(const std::vector<Index>& a, const std::vector<Index>& b) {
  for (Index x : a)
    for (Index y : b)
      if (x == y) return false;
  return true;
}

Matrix suite_matrix(Index m, Index n, std::uint64_t seed, int index) {
  return build_subgaussian(m, n, SubgaussianVariant::Gaussian,
                           rng::derive(seed, "matrix",
                                       static_cast<std::uint64_t>(index)))
      .densify();
}

Vector unit_decreasing_vector(Index n, std::uint64_t seed) {
  Vector x = rng::gaussian_vector(n, seed);
  x = decreasing_arrangement(x).first;
  x /= x.norm();
  return x;
}

}  // namespace

SuiteReport run_prop53_suite(const Prop53Options& opt) {
  SuiteReport report;
  report.suite = "prop53";
  report.context = {{"matrices", static_cast<double>(opt.matrices)},
                    {"m", static_cast<double>(opt.m)},
                    {"n", static_cast<double>(opt.n)},
                    {"s", static_cast<double>(opt.s)}};
  report.records.resize(static_cast<std::size_t>(opt.matrices));

  const auto subsets = subsets_up_to(opt.n, opt.s);
  parallel_for(opt.matrices, opt.jobs, [&](long i) {
    const Matrix phi = suite_matrix(opt.m, opt.n, opt.seed, static_cast<int>(i));
    const double delta =
        rip_constant_exact(phi, 2 * opt.s).delta;
    double worst = 0.0;
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = a + 1; b < subsets.size(); ++b) {
        if (!disjoint(subsets[a], subsets[b])) continue;
        worst = std::max(worst,
                         disjoint_block_coherence(phi, subsets[a], subsets[b]));
      }
    auto& record = report.records[static_cast<std::size_t>(i)];
    record.name = "matrix-" + std::to_string(i) + "-max-coherence";
    record.measured = worst;
    record.bound = delta;
    record.pass = worst <= delta + kInequalitySlack;
  });
  finalize(report);
  return report;
}

SuiteReport run_prop54_suite(const Prop54Options& opt) {
  SuiteReport report;
  report.suite = "prop54";
  report.context = {{"matrices", static_cast<double>(opt.matrices)},
                    {"draws", static_cast<double>(opt.draws)},
                    {"m", static_cast<double>(opt.m)},
                    {"n", static_cast<double>(opt.n)},
                    {"s", static_cast<double>(opt.s)}};
  report.records.resize(static_cast<std::size_t>(opt.matrices) * 3);

  parallel_for(opt.matrices, opt.jobs, [&](long i) {
    const std::uint64_t matrix_seed =
        rng::derive(opt.seed, "matrix", static_cast<std::uint64_t>(i));
    const Matrix phi = suite_matrix(opt.m, opt.n, opt.seed, static_cast<int>(i));
    const double delta = rip_constant_exact(phi, 2 * opt.s).delta;

    double worst_spectral = 0.0, worst_frobenius = 0.0, worst_v = 0.0;
    bool all_pass = true;
    PropCReport last;
    for (int d = 0; d < opt.draws; ++d) {
      const Vector x = unit_decreasing_vector(
          opt.n, rng::derive(matrix_seed, "x", static_cast<std::uint64_t>(d)));
      const Vector b = rng::rademacher_vector(
          opt.s, rng::derive(matrix_seed, "b", static_cast<std::uint64_t>(d)));
      last = prop_c_check_with_delta(phi, x, opt.s, b, delta);
      worst_spectral = std::max(worst_spectral, last.norm_c_spectral);
      worst_frobenius = std::max(worst_frobenius, last.norm_c_frobenius);
      worst_v = std::max(worst_v, last.norm_v);
      all_pass = all_pass && last.all_pass();
    }
    const std::string prefix = "matrix-" + std::to_string(i);
    auto* slot = &report.records[static_cast<std::size_t>(i) * 3];
    slot[0] = {prefix + "-norm-c-spectral", worst_spectral, last.bounds[0],
               worst_spectral <= last.bounds[0] + kInequalitySlack};
    slot[1] = {prefix + "-norm-c-frobenius", worst_frobenius, last.bounds[1],
               worst_frobenius <= last.bounds[1] + kInequalitySlack};
    slot[2] = {prefix + "-norm-v", worst_v, last.bounds[2],
               worst_v <= last.bounds[2] + kInequalitySlack};
    if (!all_pass)
      for (int r = 0; r < 3; ++r) slot[r].pass = false;
  });
  finalize(report);
  return report;
}

SuiteReport run_expansion_suite(const ExpansionOptions& opt) {
  SuiteReport report;
  report.suite = "expansion";
  report.context = {{"instances", static_cast<double>(opt.instances)},
                    {"m", static_cast<double>(opt.m)},
                    {"n", static_cast<double>(opt.n)},
                    {"s", static_cast<double>(opt.s)}};

  std::vector<double> residuals(static_cast<std::size_t>(opt.instances), 0.0);
  parallel_for(opt.instances, opt.jobs, [&](long i) {
    const auto index = static_cast<std::uint64_t>(i);
    const SignedOperator op = randomize_signs(
        build_subgaussian(opt.m, opt.n, SubgaussianVariant::Gaussian,
                          rng::derive(opt.seed, "matrix", index)),
        rng::derive(opt.seed, "signs", index));
    const Vector x =
        rng::gaussian_vector(opt.n, rng::derive(opt.seed, "x", index));
    const ExpansionTerms terms = expansion_terms(op, x, opt.s);
    residuals[static_cast<std::size_t>(i)] =
        std::abs(terms.term1 + terms.term2 + terms.term3 - terms.total);
  });

  CheckRecord record;
  record.name = "max-additivity-residual";
  record.measured = *std::max_element(residuals.begin(), residuals.end());
  record.bound = kInequalitySlack;
  record.pass = record.measured <= record.bound;
  report.records.push_back(record);
  finalize(report);
  return report;
}

SuiteReport run_tails_suite(const TailsOptions& opt) {
  SuiteReport report;
  report.suite = "tails";
  report.context = {{"trials", static_cast<double>(opt.trials)}};

  const Vector hoeffding_x = Vector::Ones(64);
  Matrix chaos_x;
  {
    const Matrix g = rng::gaussian_matrix(32, 32, rng::derive(opt.seed, "chaos"));
    chaos_x = 0.5 * (g + g.transpose());
    chaos_x.diagonal().setZero();
  }

  const double x_norm = hoeffding_x.norm();
  const double frobenius = chaos_x.norm();
  int point = 0;
  for (double factor : {0.5, 1.0, 2.0, 4.0}) {
    const auto h = tail_check_hoeffding(
        hoeffding_x, factor * x_norm, opt.trials,
        rng::derive(opt.seed, "hoeffding", static_cast<std::uint64_t>(point)));
    report.records.push_back({"hoeffding-t-" + std::to_string(factor),
                              h.empirical_freq, h.bound, h.pass});
    const auto c = tail_check_chaos(
        chaos_x, factor * frobenius, opt.trials,
        rng::derive(opt.seed, "chaos", static_cast<std::uint64_t>(point)));
    report.records.push_back({"chaos-t-" + std::to_string(factor),
                              c.empirical_freq, c.bound, c.pass});
    ++point;
  }
  finalize(report);
  return report;
}

SuiteReport run_theorem_suite(const TheoremOptions& opt) {
  const SparsityOrder order = min_sparsity_for_points(opt.p, opt.eta);
  const Index s = static_cast<Index>(order.s);
  if (opt.n < 2 * s)
    throw ParameterError("theorem suite: N must be at least 2s = " +
                         std::to_string(2 * order.s));

  const EmbeddingOperator op = build_subgaussian(
      opt.m, opt.n, SubgaussianVariant::Gaussian, rng::derive(opt.seed, "matrix"));
  const double delta = rip_constant_exact(op.densify(), 2 * s).delta;

  std::vector<char> term2_exceeds(static_cast<std::size_t>(opt.draws), 0);
  std::vector<char> term3_exceeds(static_cast<std::size_t>(opt.draws), 0);
  parallel_for(opt.draws, opt.jobs, [&](long d) {
    const auto index = static_cast<std::uint64_t>(d);
    const Vector x =
        unit_decreasing_vector(opt.n, rng::derive(opt.seed, "x", index));
    const SignedOperator signed_op =
        randomize_signs(op, rng::derive(opt.seed, "xi", index));
    const ExpansionTerms terms = expansion_terms(signed_op, x, s);
    term2_exceeds[static_cast<std::size_t>(d)] =
        std::abs(terms.term2) > 2.0 * TheoremConstants::gamma * delta ? 1 : 0;
    term3_exceeds[static_cast<std::size_t>(d)] =
        std::abs(terms.term3) > TheoremConstants::tau * delta ? 1 : 0;
  });

  double f2 = 0.0, f3 = 0.0;
  for (long d = 0; d < opt.draws; ++d) {
    f2 += term2_exceeds[static_cast<std::size_t>(d)];
    f3 += term3_exceeds[static_cast<std::size_t>(d)];
  }
  f2 /= static_cast<double>(opt.draws);
  f3 /= static_cast<double>(opt.draws);
  const double slack = 3.0 / std::sqrt(static_cast<double>(opt.draws));

  SuiteReport report;
  report.suite = "theorem";
  report.context = {{"p", static_cast<double>(opt.p)},
                    {"eta", opt.eta},
                    {"s", static_cast<double>(order.s)},
                    {"k", static_cast<double>(order.k)},
                    {"n", static_cast<double>(opt.n)},
                    {"m", static_cast<double>(opt.m)},
                    {"draws", static_cast<double>(opt.draws)},
                    {"delta", delta}};
  report.records.push_back({"cross-term-exceed-fraction", f2, opt.eta,
                            f2 <= opt.eta + slack});
  report.records.push_back({"chaos-term-exceed-fraction", f3, opt.eta,
                            f3 <= opt.eta + slack});
  report.records.push_back({"combined-exceed-fraction", f2 + f3, opt.eta,
                            f2 + f3 <= opt.eta + slack});
  finalize(report);
  return report;
}

}  // namespace ripjl
