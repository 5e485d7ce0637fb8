#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ripjl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Norm-preserving random embeddings built from restricted "
               "isometries with randomized column signs"};
  app.require_subcommand(1);

  ripjl::cli::EmbedOptions embed;
  auto* embed_cmd = app.add_subcommand(
      "embed", "Embed a point set read from a text file");
  embed_cmd->add_option("--input", embed.input, "input point file, one vector per line")
      ->required();
  embed_cmd->add_option("--out", embed.output, "output point file")->required();
  embed_cmd->add_flag("--header", embed.header, "skip one header line on input");
  embed_cmd->add_option("--construction", embed.construction)
      ->check(CLI::IsMember(
          {"gaussian", "rademacher", "hadamard", "fourier", "circulant",
           "identity"}));
  embed_cmd->add_option("--variant", embed.variant,
                        "circulant generator distribution")
      ->check(CLI::IsMember({"gaussian", "rademacher"}));
  embed_cmd->add_option("--replacement", embed.replacement)
      ->check(CLI::IsMember({"with", "without"}));
  embed_cmd->add_option("--mode", embed.mode)
      ->check(CLI::IsMember({"direct", "pairwise"}));
  embed_cmd->add_option("--m", embed.m, "embedding dimension");
  embed_cmd->add_option("--matrix-seed", embed.matrix_seed);
  embed_cmd->add_option("--sign-seed", embed.sign_seed);

  ripjl::cli::RipOptions rip;
  auto* rip_cmd = app.add_subcommand(
      "rip", "Estimate a restricted isometry constant");
  rip_cmd->add_option("--matrix", rip.matrix_path, "matrix file (rows)");
  rip_cmd->add_flag("--header", rip.header, "skip one header line on input");
  rip_cmd->add_option("--construction", rip.construction)
      ->check(CLI::IsMember(
          {"gaussian", "rademacher", "hadamard", "fourier", "circulant"}));
  rip_cmd->add_option("--variant", rip.variant)
      ->check(CLI::IsMember({"gaussian", "rademacher"}));
  rip_cmd->add_option("--replacement", rip.replacement)
      ->check(CLI::IsMember({"with", "without"}));
  rip_cmd->add_option("--m", rip.m);
  rip_cmd->add_option("--n", rip.n);
  rip_cmd->add_option("--k", rip.k, "sparsity order")->required();
  rip_cmd->add_option("--method", rip.method)
      ->check(CLI::IsMember({"exact", "monte-carlo"}));
  rip_cmd->add_option("--trials", rip.trials, "monte-carlo supports to sample");
  rip_cmd->add_option("--seed", rip.seed, "monte-carlo sampling seed");
  rip_cmd->add_option("--matrix-seed", rip.matrix_seed,
                      "seed for generated constructions");
  rip_cmd->add_option("--out", rip.out, "write a JSON report here");

  ripjl::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run one of the built-in verification suites");
  verify_cmd->add_option("--suite", verify.suite)
      ->check(CLI::IsMember(
          {"prop53", "prop54", "expansion", "tails", "theorem"}))
      ->required();
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--jobs", verify.jobs, "worker threads");
  verify_cmd->add_option("--out", verify.out, "write a JSON report here");
  verify_cmd->add_option("--matrices", verify.matrices);
  verify_cmd->add_option("--draws", verify.draws);
  verify_cmd->add_option("--instances", verify.instances);
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--m", verify.m);
  verify_cmd->add_option("--n", verify.n);
  verify_cmd->add_option("--s", verify.s);
  verify_cmd->add_option("--p", verify.p);
  verify_cmd->add_option("--eta", verify.eta);

  ripjl::cli::SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Failure-rate sweep over m or epsilon");
  sweep_cmd->add_option("--axis", sweep.axis)
      ->check(CLI::IsMember({"m", "epsilon"}))
      ->required();
  sweep_cmd->add_option("--values", sweep.values, "axis points")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--trials", sweep.trials);
  sweep_cmd->add_flag("--fit", sweep.fit, "append an exponent fit");
  sweep_cmd->add_option("--m-lo", sweep.m_lo, "minimal-m bracket low end");
  sweep_cmd->add_option("--m-hi", sweep.m_hi, "minimal-m bracket high end");
  sweep_cmd->add_option("--out", sweep.out, "report path")->required();
  sweep_cmd->add_option("--jobs", sweep.jobs);
  sweep_cmd->add_option("--seed", sweep.seed, "root seed for trial derivation");
  sweep_cmd->add_option("--n", sweep.n)->required();
  sweep_cmd->add_option("--m", sweep.m);
  sweep_cmd->add_option("--p", sweep.p)->required();
  sweep_cmd->add_option("--epsilon", sweep.epsilon);
  sweep_cmd->add_option("--eta", sweep.eta);
  sweep_cmd->add_option("--construction", sweep.construction)
      ->check(CLI::IsMember(
          {"gaussian", "rademacher", "hadamard", "fourier", "circulant"}));
  sweep_cmd->add_option("--variant", sweep.variant)
      ->check(CLI::IsMember({"gaussian", "rademacher"}));
  sweep_cmd->add_option("--replacement", sweep.replacement)
      ->check(CLI::IsMember({"with", "without"}));
  sweep_cmd->add_option("--pointset", sweep.pointset)
      ->check(CLI::IsMember({"gaussian-unit", "sparse", "pairwise-cloud"}));
  sweep_cmd->add_option("--mode", sweep.mode)
      ->check(CLI::IsMember({"direct", "pairwise"}));
  sweep_cmd->add_option("--support", sweep.support,
                        "support size for sparse point sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ripjl::cli::kExitParameter;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  if (embed_cmd->parsed()) {
    embed.argv = args;
    return ripjl::cli::run_guarded([&] { return ripjl::cli::cmd_embed(embed); });
  }
  if (rip_cmd->parsed()) {
    rip.argv = args;
    return ripjl::cli::run_guarded([&] { return ripjl::cli::cmd_rip(rip); });
  }
  if (verify_cmd->parsed()) {
    verify.argv = args;
    return ripjl::cli::run_guarded([&] { return ripjl::cli::cmd_verify(verify); });
  }
  sweep.argv = args;
  return ripjl::cli::run_guarded([&] { return ripjl::cli::cmd_sweep(sweep); });
}
