#include "ripjl/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>

#include <json.hpp>

#include "ripjl/analysis.hpp"
#include "ripjl/constructions.hpp"
#include "ripjl/harness.hpp"
#include "ripjl/io.hpp"
#include "ripjl/rng.hpp"
#include "ripjl/suites.hpp"

namespace ripjl::cli {

namespace {

using nlohmann::json;

OperatorKind parse_construction(const std::string& name) {
  if (name == "gaussian") return OperatorKind::SubgaussianGaussian;
  if (name == "rademacher") return OperatorKind::SubgaussianRademacher;
  if (name == "hadamard") return OperatorKind::PartialHadamard;
  if (name == "fourier") return OperatorKind::PartialFourier;
  if (name == "circulant") return OperatorKind::PartialCirculant;
  throw ParameterError("unknown construction: " + name);
}

SubgaussianVariant parse_variant(const std::string& name) {
  if (name == "gaussian") return SubgaussianVariant::Gaussian;
  if (name == "rademacher") return SubgaussianVariant::Rademacher;
  throw ParameterError("unknown variant: " + name);
}

RowSampling parse_replacement(const std::string& name) {
  if (name == "with") return RowSampling::WithReplacement;
  if (name == "without") return RowSampling::WithoutReplacement;
  throw ParameterError("unknown replacement mode: " + name);
}

BatchMode parse_mode(const std::string& name) {
  if (name == "direct") return BatchMode::Direct;
  if (name == "pairwise") return BatchMode::PairwiseDifferences;
  throw ParameterError("unknown mode: " + name);
}

PointsetKind parse_pointset(const std::string& name) {
  if (name == "gaussian-unit") return PointsetKind::GaussianUnit;
  if (name == "sparse") return PointsetKind::Sparse;
  if (name == "pairwise-cloud") return PointsetKind::PairwiseCloud;
  throw ParameterError("unknown pointset kind: " + name);
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

json make_manifest(const std::string& command, json parameters, json seeds) {
  return json{{"command", command},
              {"version", version_tag()},
              {"parameters", std::move(parameters)},
              {"seeds", std::move(seeds)}};
}

void write_sidecar(const std::string& out_path, const std::string& command,
                   const json& manifest, const std::vector<std::string>& argv) {
  const std::string path = out_path.empty()
                               ? "ripjl-" + command + ".manifest.json"
                               : out_path + ".manifest.json";
  json sidecar = manifest;
  sidecar["argv"] = argv;
  sidecar["timestamp"] = iso_timestamp();
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << sidecar.dump(2) << '\n';
}

void write_report(const std::string& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << report.dump(2) << '\n';
}

json record_json(const CheckRecord& record) {
  return json{{"check", record.name},
              {"measured", record.measured},
              {"bound", record.bound},
              {"pass", record.pass}};
}

json suite_report_json(const SuiteReport& report, const json& manifest) {
  json records = json::array();
  long failures = 0;
  for (const auto& record : report.records) {
    records.push_back(record_json(record));
    if (!record.pass) ++failures;
  }
  json context;
  for (const auto& [key, value] : report.context) context[key] = value;
  return json{{"manifest", manifest},
              {"suite", report.suite},
              {"context", context},
              {"records", records},
              {"summary",
               {{"checks", report.records.size()},
                {"failures", failures},
                {"pass", report.pass}}}};
}

void print_suite(const SuiteReport& report) {
  for (const auto& [key, value] : report.context)
    std::cout << "# " << key << " = " << value << '\n';
  for (const auto& record : report.records)
    std::cout << (record.pass ? "PASS " : "FAIL ") << record.name
              << " measured=" << std::setprecision(12) << record.measured
              << " bound=" << record.bound << '\n';
  long failures = 0;
  for (const auto& record : report.records)
    if (!record.pass) ++failures;
  std::cout << "suite " << report.suite << ": "
            << (report.records.size() - failures) << "/"
            << report.records.size() << " checks passed" << '\n';
}

}  // namespace

int cmd_embed(const EmbedOptions& opt) {
  const Matrix rows = read_rows(opt.input, opt.header);
  const Index n = rows.cols();
  const PointSet points{Matrix(rows.transpose())};

  EmbeddingOperator base = [&] {
    if (opt.construction == "identity") {
      if (opt.m != 0 && opt.m != n)
        throw ParameterError("identity construction requires m == N");
      return EmbeddingOperator::from_dense(Matrix::Identity(n, n));
    }
    if (opt.m < 1) throw ParameterError("--m is required");
    const OperatorKind kind = parse_construction(opt.construction);
    switch (kind) {
      case OperatorKind::SubgaussianGaussian:
        return build_subgaussian(opt.m, n, SubgaussianVariant::Gaussian,
                                 opt.matrix_seed);
      case OperatorKind::SubgaussianRademacher:
        return build_subgaussian(opt.m, n, SubgaussianVariant::Rademacher,
                                 opt.matrix_seed);
      case OperatorKind::PartialHadamard:
        return build_partial_hadamard(opt.m, n, opt.matrix_seed,
                                      parse_replacement(opt.replacement));
      case OperatorKind::PartialFourier:
        return build_partial_fourier(opt.m, n, opt.matrix_seed);
      case OperatorKind::PartialCirculant:
        return build_partial_circulant(opt.m, n, parse_variant(opt.variant),
                                       opt.matrix_seed);
      default:
        throw ParameterError("unknown construction: " + opt.construction);
    }
  }();
  if (base.rows() > base.cols())
    std::cerr << "warning: embedding dimension m=" << base.rows()
              << " exceeds N=" << base.cols() << '\n';

  const SignPattern signs = opt.construction == "identity"
                                ? SignPattern::all_plus(n)
                                : SignPattern::sample(n, opt.sign_seed);
  const SignedOperator op(std::move(base), signs);

  const BatchMode mode = parse_mode(opt.mode);
  const PointSet embedded = apply_batch(op, points, mode);
  const double dist = distortion(op, points, mode);

  write_rows(opt.output, embedded.points.transpose());
  std::cout << std::setprecision(17) << dist << '\n';

  const json manifest = make_manifest(
      "embed",
      {{"input", opt.input},
       {"output", opt.output},
       {"header", opt.header},
       {"construction", opt.construction},
       {"variant", opt.variant},
       {"replacement", opt.replacement},
       {"mode", opt.mode},
       {"m", opt.m}},
      {{"matrix-seed", opt.matrix_seed}, {"sign-seed", opt.sign_seed}});
  write_sidecar(opt.output, "embed", manifest, opt.argv);
  return kExitOk;
}

int cmd_rip(const RipOptions& opt) {
  Matrix phi;
  if (opt.construction.empty()) {
    if (opt.matrix_path.empty())
      throw ParameterError("rip: provide --matrix or --construction");
    phi = read_rows(opt.matrix_path, opt.header);
  } else {
    if (opt.m < 1 || opt.n < 1)
      throw ParameterError("rip: --m and --n are required with --construction");
    const OperatorKind kind = parse_construction(opt.construction);
    EmbeddingOperator op = [&] {
      switch (kind) {
        case OperatorKind::SubgaussianGaussian:
        case OperatorKind::SubgaussianRademacher:
          return build_subgaussian(opt.m, opt.n,
                                   kind == OperatorKind::SubgaussianGaussian
                                       ? SubgaussianVariant::Gaussian
                                       : SubgaussianVariant::Rademacher,
                                   opt.matrix_seed);
        case OperatorKind::PartialHadamard:
          return build_partial_hadamard(opt.m, opt.n, opt.matrix_seed,
                                        parse_replacement(opt.replacement));
        case OperatorKind::PartialFourier:
          return build_partial_fourier(opt.m, opt.n, opt.matrix_seed);
        default:
          return build_partial_circulant(opt.m, opt.n,
                                         parse_variant(opt.variant),
                                         opt.matrix_seed);
      }
    }();
    phi = op.densify();
  }

  RipEstimate estimate;
  if (opt.method == "exact") {
    estimate = rip_constant_exact(phi, opt.k);
  } else if (opt.method == "monte-carlo") {
    estimate = rip_constant_lower_bound(phi, opt.k, opt.trials, opt.seed);
  } else {
    throw ParameterError("rip: unknown method " + opt.method);
  }

  std::cout << "k: " << estimate.k << '\n'
            << "delta: " << std::setprecision(17) << estimate.delta << '\n'
            << "method: "
            << (estimate.method == RipMethod::Exact ? "exact" : "monte-carlo")
            << '\n';
  std::cout << "witness:";
  for (Index idx : estimate.witness) std::cout << ' ' << idx;
  std::cout << '\n';
  if (estimate.method == RipMethod::MonteCarlo)
    std::cout << "trials: " << estimate.trials << '\n';

  const json manifest = make_manifest(
      "rip",
      {{"matrix", opt.matrix_path},
       {"construction", opt.construction},
       {"variant", opt.variant},
       {"replacement", opt.replacement},
       {"m", opt.m},
       {"n", opt.n},
       {"k", opt.k},
       {"method", opt.method},
       {"trials", opt.trials}},
      {{"seed", opt.seed}, {"matrix-seed", opt.matrix_seed}});
  if (!opt.out.empty()) {
    json witness = json::array();
    for (Index idx : estimate.witness) witness.push_back(idx);
    write_report(opt.out,
                 json{{"manifest", manifest},
                      {"records",
                       json::array({json{{"check", "rip"},
                                         {"k", estimate.k},
                                         {"delta", estimate.delta},
                                         {"method", opt.method},
                                         {"witness", witness},
                                         {"trials", estimate.trials}}})},
                      {"summary", {{"records", 1}, {"pass", true}}}});
  }
  write_sidecar(opt.out, "rip", manifest, opt.argv);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
  SuiteReport report;
  if (opt.suite == "prop53") {
    Prop53Options suite;
    if (opt.matrices > 0) suite.matrices = opt.matrices;
    if (opt.m > 0) suite.m = opt.m;
    if (opt.n > 0) suite.n = opt.n;
    if (opt.s > 0) suite.s = opt.s;
    suite.seed = opt.seed;
    suite.jobs = opt.jobs;
    report = run_prop53_suite(suite);
  } else if (opt.suite == "prop54") {
    Prop54Options suite;
    if (opt.matrices > 0) suite.matrices = opt.matrices;
    if (opt.draws > 0) suite.draws = opt.draws;
    if (opt.m > 0) suite.m = opt.m;
    if (opt.n > 0) suite.n = opt.n;
    if (opt.s > 0) suite.s = opt.s;
    suite.seed = opt.seed;
    suite.jobs = opt.jobs;
    report = run_prop54_suite(suite);
  } else if (opt.suite == "expansion") {
    ExpansionOptions suite;
    if (opt.instances > 0) suite.instances = opt.instances;
    if (opt.m > 0) suite.m = opt.m;
    if (opt.n > 0) suite.n = opt.n;
    if (opt.s > 0) suite.s = opt.s;
    suite.seed = opt.seed;
    suite.jobs = opt.jobs;
    report = run_expansion_suite(suite);
  } else if (opt.suite == "tails") {
    TailsOptions suite;
    if (opt.trials > 0) suite.trials = opt.trials;
    suite.seed = opt.seed;
    report = run_tails_suite(suite);
  } else if (opt.suite == "theorem") {
    TheoremOptions suite;
    if (opt.p > 0) suite.p = opt.p;
    if (opt.eta > 0.0) suite.eta = opt.eta;
    if (opt.n > 0) suite.n = opt.n;
    if (opt.m > 0) suite.m = opt.m;
    if (opt.draws > 0) suite.draws = opt.draws;
    suite.seed = opt.seed;
    suite.jobs = opt.jobs;
    report = run_theorem_suite(suite);
  } else {
    throw ParameterError("verify: unknown suite " + opt.suite);
  }

  print_suite(report);

  const json manifest = make_manifest("verify",
                                      {{"suite", opt.suite},
                                       {"matrices", opt.matrices},
                                       {"draws", opt.draws},
                                       {"instances", opt.instances},
                                       {"trials", opt.trials},
                                       {"m", opt.m},
                                       {"n", opt.n},
                                       {"s", opt.s},
                                       {"p", opt.p},
                                       {"eta", opt.eta},
                                       {"jobs", opt.jobs}},
                                      {{"seed", opt.seed}});
  if (!opt.out.empty()) write_report(opt.out, suite_report_json(report, manifest));
  write_sidecar(opt.out, "verify", manifest, opt.argv);
  return report.pass ? kExitOk : kExitVerificationFailure;
}

int cmd_sweep(const SweepOptions& opt) {
  if (opt.values.empty()) throw ParameterError("sweep: --values is required");
  if (opt.axis != "m" && opt.axis != "epsilon")
    throw ParameterError("sweep: axis must be m or epsilon");
  if (opt.out.empty()) throw ParameterError("sweep: --out is required");

  TrialConfig base;
  base.n = opt.n;
  base.m = opt.m;
  base.p = opt.p;
  base.epsilon = opt.epsilon;
  base.eta = opt.eta;
  base.construction = parse_construction(opt.construction);
  base.variant = parse_variant(opt.variant);
  base.sampling = parse_replacement(opt.replacement);
  base.pointset = parse_pointset(opt.pointset);
  base.mode = parse_mode(opt.mode);
  base.sparse_support = opt.support;

  json records = json::array();
  std::vector<double> rates;
  for (std::size_t j = 0; j < opt.values.size(); ++j) {
    TrialConfig cfg = base;
    const double value = opt.values[j];
    if (opt.axis == "m") {
      const auto m = static_cast<Index>(value);
      if (m < 1 || static_cast<double>(m) != value)
        throw ParameterError("sweep: m values must be positive integers");
      cfg.m = m;
    } else {
      cfg.epsilon = value;
    }
    const RateEstimate rate = failure_rate(
        cfg, opt.trials,
        rng::derive(opt.seed, "axis-point", static_cast<std::uint64_t>(j)),
        opt.jobs);
    rates.push_back(rate.rate);
    records.push_back(json{{"axis", opt.axis},
                           {"value", value},
                           {"failures", rate.failures},
                           {"trials", rate.trials},
                           {"rate", rate.rate},
                           {"ci_low", rate.ci_low},
                           {"ci_high", rate.ci_high}});
  }

  json fit;
  if (opt.fit && opt.axis == "epsilon") {
    if (opt.m_lo < 1 || opt.m_hi < opt.m_lo)
      throw ParameterError("sweep: --m-lo/--m-hi bracket is required for the fit");
    std::vector<double> m_stars;
    json points = json::array();
    for (std::size_t j = 0; j < opt.values.size(); ++j) {
      TrialConfig cfg = base;
      cfg.epsilon = opt.values[j];
      const MinimalMResult result = minimal_m(
          cfg, 1.0 - cfg.eta, opt.m_lo, opt.m_hi, opt.trials,
          rng::derive(opt.seed, "fit-point", static_cast<std::uint64_t>(j)),
          opt.jobs);
      m_stars.push_back(static_cast<double>(result.m_star));
      points.push_back(
          json{{"epsilon", opt.values[j]}, {"m_star", result.m_star}});
    }
    fit = json{{"model", "log-minimal-m-vs-log-epsilon"},
               {"slope", scaling_exponent(opt.values, m_stars)},
               {"points", points}};
  } else if (opt.fit) {
    // Decay of the failure rate in m, fitted on points with informative rates.
    std::vector<double> ms, logs;
    for (std::size_t j = 0; j < opt.values.size(); ++j)
      if (rates[j] > 0.0 && rates[j] < 1.0) {
        ms.push_back(opt.values[j]);
        logs.push_back(std::log(rates[j]));
      }
    if (ms.size() < 2)
      throw ParameterError("sweep: need at least 2 informative points to fit");
    double mean_m = 0.0, mean_l = 0.0;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      mean_m += ms[j];
      mean_l += logs[j];
    }
    mean_m /= static_cast<double>(ms.size());
    mean_l /= static_cast<double>(ms.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      sxx += (ms[j] - mean_m) * (ms[j] - mean_m);
      sxy += (ms[j] - mean_m) * (logs[j] - mean_l);
    }
    if (sxx == 0.0) throw ParameterError("sweep: degenerate fit axis");
    fit = json{{"model", "log-failure-rate-vs-m"}, {"slope", sxy / sxx}};
  }

  const json manifest = make_manifest("sweep",
                                      {{"axis", opt.axis},
                                       {"values", opt.values},
                                       {"trials", opt.trials},
                                       {"fit", opt.fit},
                                       {"m-lo", opt.m_lo},
                                       {"m-hi", opt.m_hi},
                                       {"n", opt.n},
                                       {"m", opt.m},
                                       {"p", opt.p},
                                       {"epsilon", opt.epsilon},
                                       {"eta", opt.eta},
                                       {"construction", opt.construction},
                                       {"variant", opt.variant},
                                       {"replacement", opt.replacement},
                                       {"pointset", opt.pointset},
                                       {"mode", opt.mode},
                                       {"support", opt.support},
                                       {"jobs", opt.jobs}},
                                      {{"seed", opt.seed}});
  json report{{"manifest", manifest},
              {"records", records},
              {"summary", {{"points", opt.values.size()}}}};
  if (!fit.is_null()) report["fit"] = fit;
  write_report(opt.out, report);
  write_sidecar(opt.out, "sweep", manifest, opt.argv);
  return kExitOk;
}

int run_guarded(const std::function<int()>& command) {
  try {
    return command();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  }
}

}  // namespace ripjl::cli
