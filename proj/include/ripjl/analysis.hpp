#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ripjl/constructions.hpp"
#include "ripjl/core.hpp"

namespace ripjl {

// Final parameter choices of the embedding theorem and its proof.
struct TheoremConstants {
  static constexpr double tau = 0.55;
  static constexpr double gamma = 0.1;
  static constexpr int k_factor = 40;
  static constexpr int s_factor = 20;
};

enum class RipMethod { Exact, MonteCarlo };

// Restricted isometry constant of order k. The exact method certifies the
// true delta_k; the monte-carlo method reports a lower bound only.
struct RipEstimate {
  Index k = 0;
  double delta = 0.0;
  RipMethod method = RipMethod::Exact;
  std::vector<Index> witness;  // support attaining (exact) or best found (mc)
  long trials = 0;             // 0 for exact
};

inline constexpr std::uint64_t kDefaultSupportCap = 1'000'000;

// Enumerates every size-k support; delta_k = max over supports of
// max(sigma_max^2 - 1, 1 - sigma_min^2) of the m x k column submatrix.
// Supports beyond the cap raise ResourceError (use the monte-carlo bound).
RipEstimate rip_constant_exact(const Matrix& phi, Index k,
                               std::uint64_t support_cap = kDefaultSupportCap);

// Random-support lower bound; never exceeds the exact constant and is
// nondecreasing in the number of trials for a fixed seed.
RipEstimate rip_constant_lower_bound(const Matrix& phi, Index k, long trials,
                                     std::uint64_t seed);

// Spectral norm of the cross-Gram block Phi_J^T Phi_L for disjoint J, L.
double disjoint_block_coherence(const Matrix& phi, const std::vector<Index>& j,
                                const std::vector<Index>& l);

// Largest singular value: full decomposition when the short dimension is at
// most 512, power iteration on M^T M above that.
double spectral_norm(const Matrix& m, double tol = 1e-10);
double spectral_norm_power(const Matrix& m, double tol = 1e-10,
                           long max_iterations = 100000);

// The block-off-diagonal chaos matrix and cross-block vector whose norms the
// RIP constant controls: C_{jl} = x_j <Phi_j, Phi_l> x_l for j,l beyond the
// first block and in distinct blocks; v = D_{x_flat} Phi_flat^T Phi_1
// D_{x_1} b, supported beyond the first s coordinates.
struct PropCQuantities {
  Matrix c;  // N x N, symmetric, zero diagonal
  Vector v;  // length N, first s entries zero
};

inline constexpr Index kPropCDimensionCap = 2048;

PropCQuantities prop_c_quantities(const Matrix& phi, const Vector& x, Index s,
                                  const Vector& b);

struct PropCReport {
  Index s = 0;
  double delta = 0.0;  // certified RIP constant of order 2s
  double norm_c_spectral = 0.0;
  double norm_c_frobenius = 0.0;
  double norm_v = 0.0;
  std::array<double, 3> bounds{};  // delta/s, delta/sqrt(s), delta/sqrt(s)
  std::array<bool, 3> pass{};
  bool all_pass() const { return pass[0] && pass[1] && pass[2]; }
};

inline constexpr double kInequalitySlack = 1e-10;

// Certifies delta = exact delta_{2s} and checks the three norm bounds.
PropCReport prop_c_check(const Matrix& phi, const Vector& x, Index s,
                         const Vector& b,
                         std::uint64_t support_cap = kDefaultSupportCap);
// Same check against a caller-supplied certified constant.
PropCReport prop_c_check_with_delta(const Matrix& phi, const Vector& x, Index s,
                                    const Vector& b, double delta);

// Three-term split of |Phi D_xi x|^2: per-block energies, the first-block
// cross term (with its factor 2), and the chaos term over distinct later
// blocks. The input is rearranged internally to decreasing order with the
// operator columns permuted alongside.
struct ExpansionTerms {
  double term1 = 0.0;
  double term2 = 0.0;
  double term3 = 0.0;
  double total = 0.0;  // |op.apply(x)|^2 via the operator's own apply path
};

ExpansionTerms expansion_terms(const SignedOperator& op, const Vector& x,
                               Index s);

// Tail probability bound 2 exp(-t^2 / (2 |x|^2)) for |<xi, x>| > t.
double hoeffding_bound(const Vector& x, double t);

// Tail probability bound for the Rademacher chaos |xi^T X xi| > t with
// zero-diagonal X: 2 exp(-(1/64) min((96/65) t / |X|, t^2 / |X|_F^2)).
double chaos_bound(const Matrix& x, double t);

struct TailCheckResult {
  double threshold = 0.0;
  double empirical_freq = 0.0;
  double bound = 0.0;
  long trials = 0;
  bool pass = false;  // empirical <= min(1, bound) + 3/sqrt(trials)
};

TailCheckResult tail_check_hoeffding(const Vector& x, double t, long trials,
                                     std::uint64_t seed);
TailCheckResult tail_check_chaos(const Matrix& x, double t, long trials,
                                 std::uint64_t seed);

// Smallest admissible block size and sparsity order for p points at failure
// budget eta: s = ceil(20 ln(4p/eta)), k = 2s.
struct SparsityOrder {
  long s = 0;
  long k = 0;
};

SparsityOrder min_sparsity_for_points(long p, double eta);

// RIP level required for distortion eps: eps/4.
double required_delta(double eps);

// Max relative deviation of embedded squared norms over the (effective,
// nonzero) point set; a trial at level eps succeeds iff this is <= eps.
double distortion(const EmbeddingOperator& op, const PointSet& e,
                  BatchMode mode);
double distortion(const SignedOperator& op, const PointSet& e, BatchMode mode);

}  // namespace ripjl
