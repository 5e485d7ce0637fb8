#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ripjl/common.hpp"

namespace ripjl::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitParameter = 3;
inline constexpr int kExitResource = 4;

struct EmbedOptions {
  std::string input;
  std::string output;
  bool header = false;
  std::string construction = "gaussian";
  std::string variant = "gaussian";
  std::string replacement = "with";
  std::string mode = "direct";
  Index m = 0;  // identity construction defaults this to N
  std::uint64_t matrix_seed = 1;
  std::uint64_t sign_seed = 2;
  std::vector<std::string> argv;
};

struct RipOptions {
  std::string matrix_path;
  std::string construction;  // empty: read the matrix from matrix_path
  std::string variant = "gaussian";
  std::string replacement = "with";
  bool header = false;
  Index m = 0;
  Index n = 0;
  Index k = 1;
  std::string method = "exact";
  long trials = 1000;
  std::uint64_t seed = 1;         // monte-carlo support sampling
  std::uint64_t matrix_seed = 1;  // generated constructions
  std::string out;
  std::vector<std::string> argv;
};

struct VerifyOptions {
  std::string suite = "expansion";
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out;
  // size overrides; zero keeps the suite default
  int matrices = 0;
  int draws = 0;
  int instances = 0;
  long trials = 0;
  Index m = 0;
  Index n = 0;
  Index s = 0;
  long p = 0;
  double eta = 0.0;
  std::vector<std::string> argv;
};

struct SweepOptions {
  std::string axis = "m";
  std::vector<double> values;
  long trials = 100;
  bool fit = false;
  Index m_lo = 0;  // minimal-m bracket for the epsilon fit
  Index m_hi = 0;
  std::string out;
  int jobs = 1;
  std::uint64_t seed = 1;
  Index n = 0;
  Index m = 0;
  Index p = 0;
  double epsilon = 0.5;
  double eta = 0.1;
  std::string construction = "gaussian";
  std::string variant = "gaussian";
  std::string replacement = "with";
  std::string pointset = "gaussian-unit";
  std::string mode = "direct";
  Index support = 0;
  std::vector<std::string> argv;
};

int cmd_embed(const EmbedOptions& opt);
int cmd_rip(const RipOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_sweep(const SweepOptions& opt);

// Maps exceptions thrown by the commands onto exit codes.
int run_guarded(const std::function<int()>& command);

}  // namespace ripjl::cli
