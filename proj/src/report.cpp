#include "krein/report.hpp"

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

std::string_view to_string(Reason reason) noexcept {
  switch (reason) {
    case Reason::None: return "None";
    case Reason::RangeNotRegular: return "RangeNotRegular";
    case Reason::RangeNotNonnegative: return "RangeNotNonnegative";
    case Reason::RangeNotNonpositive: return "RangeNotNonpositive";
    case Reason::RangeInclusionFails: return "RangeInclusionFails";
    case Reason::NullspaceNotRegular: return "NullspaceNotRegular";
    case Reason::KernelNotNonnegative: return "KernelNotNonnegative";
    case Reason::ImageInclusionFails: return "ImageInclusionFails";
    case Reason::ConditionsDisagree: return "ConditionsDisagree";
    case Reason::VariationalMismatch: return "VariationalMismatch";
  }
  return "Unknown";
}

Operator SolutionManifold::member(const Matrix& coefficients) const {
  const Matrix& basis = perturbation_space.basis();
  if (coefficients.rows() != basis.cols() || coefficients.cols() != particular.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "manifold coefficients have the wrong shape");
  }
  return {particular.space(), particular.matrix() + basis * coefficients};
}

const Operator& SolveReport::solution() const {
  if (!manifold) throw Error(ErrorCode::InfeasibleInstance, "report carries no solution");
  return manifold->particular;
}

bool SolveReport::condition(std::string_view name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c.holds;
  throw Error(ErrorCode::DimensionMismatch, "unknown condition " + std::string(name));
}

void add_condition(SolveReport& report, std::string name, bool holds, Reason on_failure) {
  if (!holds && report.reason == Reason::None) report.reason = on_failure;
  report.conditions.push_back({std::move(name), holds});
}

void set_value(SolveReport& report, const Operator& value) {
  report.value = value;
  report.value_eigenvalues = linalg::hermitian_eigen(value.space()->gram() * value.matrix()).values;
}

}  // namespace krein
