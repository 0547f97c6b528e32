#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace krein::cli {

struct JobSpec {
  std::string command;
  std::optional<std::string> space_path;
  std::optional<std::string> b_path;
  std::optional<std::string> c_path;
  std::optional<std::string> x_path;
  std::optional<std::string> subspace_path;
  /// Projection flavour for `project`: selfadjoint, normal or ando.
  std::string kind = "normal";
  std::uint64_t seed = 0;
  /// Oracle trials attached to solver reports.
  int trials = 200;
  std::optional<double> tol_rank;
  std::optional<double> tol_num;
};

struct RunResult {
  /// 0 computed and feasible, 2 computed but infeasible, 1 input error.
  int exit_code = 0;
  /// JSON report when the job ran, empty otherwise.
  std::string report;
  std::string diagnostic;
};

RunResult run(const JobSpec& job);

}  // namespace krein::cli
