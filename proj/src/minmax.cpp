#include "krein/minmax.hpp"

#include <cmath>

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

namespace {

double rel(double value, double scale) { return value / std::max(1.0, scale); }

void require_feasible(const Operator& b, const Operator& c) {
  require_same_space(b.space(), c.space());
  if (!range_in_companion_sum(Subspace::range(b), c)) {
    throw Error(ErrorCode::InfeasibleInstance, "R(C) is not contained in R(B) + R(B)^[perp]");
  }
}

const Operator& value_of(const SolveReport& report) {
  if (!report.feasible) {
    throw Error(ErrorCode::InfeasibleInstance, std::string("inner problem infeasible: ") +
                                                   std::string(to_string(report.reason)));
  }
  return *report.value;
}

}  // namespace

OperatorSplit split_operator(const Operator& b) {
  const auto space = b.space();
  const SubspaceSplit parts = decompose_subspace(Subspace::range(b));
  const Operator p_plus(space, parts.plus.hilbert_projector());
  const Operator p_minus(space, parts.minus.hilbert_projector());
  return {p_plus * b, p_minus * b, parts.plus, parts.minus, space->signature()};
}

SolveReport solve_immso(const Operator& b, const Operator& c, const SolveOptions& options) {
  require_same_space(b.space(), c.space());
  SolveReport report;
  report.seed = options.seed;
  const Subspace range = Subspace::range(b);
  add_condition(report, "range_inclusion", range_in_companion_sum(range, c), Reason::RangeInclusionFails);
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const Operator z1 = normal_equation_solution(b, c);
  report.manifold = SolutionManifold{z1, gram_kernel(b)};
  report.residual_normal_eq = normal_equation_residual(b, c, z1);
  report.residuals["normal_eq"] = report.residual_normal_eq;
  const Operator value = residual_square(b, c, z1);
  set_value(report, value);

  const double cn = c.norm();
  const MinMaxValues values = minmax_value_identity(b, c);
  report.residuals["minmax_maxmin_gap"] = rel((values.minmax - values.maxmin).norm(), cn * cn);
  report.residuals["value_vs_maxmin"] = rel((value - values.maxmin).norm(), cn * cn);
  if (values.closed_form) {
    report.residuals["value_formula"] = rel((value - *values.closed_form).norm(), cn * cn);
    report.residuals["factored_formula"] = rel((*values.factored - *values.closed_form).norm(), cn * cn);
  }
  return report;
}

bool verify_immso(const Operator& z0, const Operator& b, const Operator& c) {
  require_feasible(b, c);
  require_same_space(b.space(), z0.space());
  const Operator z1 = normal_equation_solution(b, c);
  const Operator t = b * (z0 - z1);
  // A numerically vanishing B Z2 is neutral; below this floor the relative
  // test in neutral_range only sees rounding noise.
  const double scale = b.norm() * (z0.norm() + z1.norm()) + c.norm();
  if (t.norm() <= b.space()->tolerances().num * std::max(1.0, scale)) return true;
  return neutral_range(t);
}

MinMaxValues minmax_value_identity(const Operator& b, const Operator& c) {
  require_feasible(b, c);
  const OperatorSplit split = split_operator(b);

  // max_Y min_X: the inner minimiser does not depend on Y.
  const SolveReport inner_min = solve_ims(split.b_plus, c);
  value_of(inner_min);
  const Operator x0 = inner_min.solution();
  const Operator maxmin = value_of(solve_imax(split.b_minus, c - split.b_plus * x0));

  // min_X max_Y: the inner maximiser does not depend on X.
  const SolveReport inner_max = solve_imax(split.b_minus, c);
  value_of(inner_max);
  const Operator y0 = inner_max.solution();
  const Operator minmax = value_of(solve_ims(split.b_plus, c - split.b_minus * y0));

  MinMaxValues out{minmax, maxmin, std::nullopt, std::nullopt};
  const Subspace range = Subspace::range(b);
  if (range.classification().regular) {
    const Projection q = selfadjoint_projection(range);
    const AndoSplit ando = ando_split(q);
    const Operator id = Operator::identity(b.space());
    out.closed_form = c.adjoint() * (id - q.op) * c;
    out.factored = c.adjoint() * (id - ando.minus.op) * (id - ando.plus.op) * c;
  }
  return out;
}

bool attains_minmax_value(const Operator& z0, const Operator& b, const Operator& c) {
  const MinMaxValues values = minmax_value_identity(b, c);
  const Operator attained = residual_square(b, c, z0);
  const double bn = b.norm();
  const double scale = std::pow(bn * z0.norm() + c.norm(), 2);
  return (attained - values.maxmin).norm() <= 1e2 * b.space()->tolerances().num * std::max(1.0, scale);
}

}  // namespace krein
