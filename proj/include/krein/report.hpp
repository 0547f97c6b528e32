#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "krein/oracle.hpp"
#include "krein/subspace.hpp"

namespace krein {

/// Which solvability condition failed.
enum class Reason {
  None,
  RangeNotRegular,
  RangeNotNonnegative,
  RangeNotNonpositive,
  RangeInclusionFails,
  NullspaceNotRegular,
  KernelNotNonnegative,
  ImageInclusionFails,
  ConditionsDisagree,
  VariationalMismatch,
};

std::string_view to_string(Reason reason) noexcept;

/// The affine set X0 + {Y : R(Y) ⊆ N}.
struct SolutionManifold {
  Operator particular;
  Subspace perturbation_space;

  /// X0 + N_basis * coefficients, with `coefficients` of size dim(N) x n.
  Operator member(const Matrix& coefficients) const;
};

struct Condition {
  std::string name;
  bool holds = false;
};

struct SolveOptions {
  std::uint64_t seed = 0;
  /// Oracle trials attached to the report; zero skips certification.
  int certify_trials = 0;
};

struct SolveReport {
  bool feasible = false;
  Reason reason = Reason::None;
  std::vector<Condition> conditions;
  std::optional<SolutionManifold> manifold;
  /// Attained (B X0 - C)^#(B X0 - C), or the analogous operator value.
  std::optional<Operator> value;
  /// Eigenvalues of G * value (descending).
  RealVector value_eigenvalues;
  double residual_normal_eq = 0.0;
  std::map<std::string, double> residuals;
  std::vector<std::pair<std::string, oracle::Certificate>> certificates;
  std::uint64_t seed = 0;

  const Operator& solution() const;
  bool condition(std::string_view name) const;
};

/// Records `holds` and, on the first failure, the reason.
void add_condition(SolveReport& report, std::string name, bool holds, Reason on_failure);

/// Stores `value` and the eigenvalues of G * value.
void set_value(SolveReport& report, const Operator& value);

}  // namespace krein
