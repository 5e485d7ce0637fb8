#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ripjl/common.hpp"

namespace ripjl {

struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<std::pair<std::string, double>> context;
  std::vector<CheckRecord> records;
  bool pass = true;
};

// Coherence of every pair of disjoint column subsets of size <= s against the
// certified constant of order 2s.
struct Prop53Options {
  int matrices = 100;
  Index m = 20;
  Index n = 40;
  Index s = 2;
  std::uint64_t seed = 1;
  int jobs = 1;
};
SuiteReport run_prop53_suite(const Prop53Options& opt);

// The three norm bounds on C and v over random decreasing unit vectors and
// sign choices, with the exact constant of order 2s.
struct Prop54Options {
  int matrices = 100;
  int draws = 1000;
  Index m = 20;
  Index n = 40;
  Index s = 2;
  std::uint64_t seed = 1;
  int jobs = 1;
};
SuiteReport run_prop54_suite(const Prop54Options& opt);

// Additivity of the three-term split against the operator's own apply path.
struct ExpansionOptions {
  int instances = 1000;
  Index m = 20;
  Index n = 40;
  Index s = 2;
  std::uint64_t seed = 1;
  int jobs = 1;
};
SuiteReport run_expansion_suite(const ExpansionOptions& opt);

// Empirical exceedance frequencies against the Hoeffding and chaos tail
// bounds on fixed instances over a grid of thresholds.
struct TailsOptions {
  long trials = 100000;
  std::uint64_t seed = 1;
};
SuiteReport run_tails_suite(const TailsOptions& opt);

// Proof-internal magnitudes at desk scale: with s = ceil(20 ln(4p/eta)) and a
// certified delta of order 2s, the fraction of draws where the cross term
// exceeds 0.2*delta plus the fraction where the chaos term exceeds
// 0.55*delta stays within eta (3-sigma Monte-Carlo slack).
struct TheoremOptions {
  long p = 1;
  double eta = 0.9;
  Index n = 62;
  Index m = 1000;
  int draws = 500;
  std::uint64_t seed = 1;
  int jobs = 1;
};
SuiteReport run_theorem_suite(const TheoremOptions& opt);

}  // namespace ripjl
