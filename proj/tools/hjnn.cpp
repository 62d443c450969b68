#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hjnn/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Grid-free Hamilton-Jacobi solution evaluator"};
  app.require_subcommand(1);

  std::string config, slice, out_prefix, x, arch = "arch2", bench_out, report;
  double t = 1.0;
  bool render = false, residual_only = false;
  std::size_t samples = 100, m = 3, reps = 5;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims{1, 2, 5, 10, 50, 100};

  auto* eval = app.add_subcommand("eval", "Evaluate the solution at one point");
  eval->add_option("--config", config, "Problem config file")->required();
  eval->add_option("--x", x, "Comma-separated point")->required();
  eval->add_option("--t", t, "Time")->required();

  auto* sl = app.add_subcommand("slice", "Write CSV (and PGM) slices of the solution");
  sl->add_option("--config", config, "Problem config file")->required();
  sl->add_option("--slice", slice, "Slice definition file")->required();
  sl->add_option("--out", out_prefix, "Output prefix")->required();
  sl->add_flag("--render", render, "Also write grayscale PGM images");

  auto* verify = app.add_subcommand("verify", "Check against the brute-force oracle and the PDE residual");
  verify->add_option("--config", config, "Problem config file")->required();
  verify->add_option("--samples", samples, "Number of random samples");
  verify->add_option("--seed", seed, "Sample seed");
  verify->add_flag("--residual-only", residual_only, "Skip the oracle (required for n > 3)");
  verify->add_option("--out", report, "Report path prefix (writes .txt and .kv)");

  auto* bench = app.add_subcommand("bench", "Time single-point evaluation against dimension");
  bench->add_option("--arch", arch, "arch1 or arch2");
  bench->add_option("--dims", dims, "Dimensions")->delimiter(',');
  bench->add_option("--m", m, "Branch count (arch1)");
  bench->add_option("--reps", reps, "Repetitions of 1000 evaluations");
  bench->add_option("--out", bench_out, "Also write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? hjnn::kExitOk : hjnn::kExitValidation;
  }

  if (eval->parsed()) return hjnn::cmd_eval(config, x, t, std::cout, std::cerr);
  if (sl->parsed()) return hjnn::cmd_slice(config, slice, out_prefix, render, std::cout, std::cerr);
  if (verify->parsed()) {
    std::optional<std::filesystem::path> rep;
    if (!report.empty()) rep = report;
    return hjnn::cmd_verify(config, samples, seed, residual_only, rep, std::cout, std::cerr);
  }
  std::optional<std::filesystem::path> csv;
  if (!bench_out.empty()) csv = bench_out;
  return hjnn::cmd_bench(arch, dims, m, reps, csv, std::cout, std::cerr);
}
