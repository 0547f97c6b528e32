#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  krein::cli::JobSpec job;
  std::string out_path;
  double tol_rank = 0.0;
  double tol_num = 0.0;
  std::string space, b, c, x, subspace;

  CLI::App app{"Linear algebra and least squares in finite-dimensional Krein spaces"};
  app.add_option("command", job.command,
                 "adjoint, classify, companion, decompose, project, solve-ils, solve-imax, solve-minmax, "
                 "pinv, geninv, min-norm, verify or oracle")
      ->required();
  app.add_option("--space", space, "space file {\"gram\": matrix}");
  app.add_option("--b", b, "operator B");
  app.add_option("--c", c, "operator C");
  app.add_option("--x", x, "candidate solution X");
  app.add_option("--subspace", subspace, "subspace file {\"basis\": matrix}");
  app.add_option("--kind", job.kind, "projection kind for `project`: selfadjoint, normal or ando");
  app.add_option("--seed", job.seed, "oracle seed");
  app.add_option("--trials", job.trials, "oracle trials");
  auto* rank_opt = app.add_option("--tol-rank", tol_rank, "relative rank cutoff");
  auto* num_opt = app.add_option("--tol-num", tol_num, "numerical residual tolerance");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  auto assign = [](std::optional<std::string>& dst, const std::string& v) {
    if (!v.empty()) dst = v;
  };
  assign(job.space_path, space);
  assign(job.b_path, b);
  assign(job.c_path, c);
  assign(job.x_path, x);
  assign(job.subspace_path, subspace);
  if (*rank_opt) job.tol_rank = tol_rank;
  if (*num_opt) job.tol_num = tol_num;

  const krein::cli::RunResult result = krein::cli::run(job);
  if (!result.diagnostic.empty()) std::cerr << "krein: " << result.diagnostic << "\n";
  if (!result.report.empty()) {
    if (out_path.empty()) {
      std::cout << result.report;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "krein: cannot write " << out_path << "\n";
        return 1;
      }
      out << result.report;
    }
  }
  return result.exit_code;
}
