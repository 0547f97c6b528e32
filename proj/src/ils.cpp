#include "krein/ils.hpp"

#include "krein/linalg.hpp"

namespace krein {

namespace {

double rel(double value, double scale) { return value / std::max(1.0, scale); }

enum class Sense { Min, Max };

SolveReport solve_extremum(const Operator& b, const Operator& c, const SolveOptions& options, Sense sense) {
  require_same_space(b.space(), c.space());
  SolveReport report;
  report.seed = options.seed;

  const Subspace range = Subspace::range(b);
  const SubspaceClass& cls = range.classification();
  add_condition(report, "range_inclusion", range_in_companion_sum(range, c), Reason::RangeInclusionFails);
  if (sense == Sense::Min) {
    add_condition(report, "range_nonnegative", cls.nonnegative(), Reason::RangeNotNonnegative);
  } else {
    add_condition(report, "range_nonpositive", cls.nonpositive(), Reason::RangeNotNonpositive);
  }
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const Operator x0 = normal_equation_solution(b, c);
  report.manifold = SolutionManifold{x0, gram_kernel(b)};
  report.residual_normal_eq = normal_equation_residual(b, c, x0);
  report.residuals["normal_eq"] = report.residual_normal_eq;

  const Operator value = residual_square(b, c, x0);
  set_value(report, value);

  // Closed form C^#(I - Q)C with Q a normal projection onto R(B); selfadjoint
  // when R(B) is regular.
  const Projection q = normal_projection(range);
  const Operator id = Operator::identity(b.space());
  const Operator formula = c.adjoint() * (id - q.op) * c;
  const double cn = c.norm();
  report.residuals["value_formula"] = rel((value - formula).norm(), cn * cn);

  // B X0 - Q C lies in the isotropic part R(B)°.
  const Matrix offset = b.matrix() * x0.matrix() - q.op.matrix() * c.matrix();
  const Matrix outside = offset - range.isotropic_part().hilbert_projector() * offset;
  report.residuals["isotropic_containment"] = rel(linalg::hilbert_norm(*b.space(), outside), cn);

  if (options.certify_trials > 0) {
    const oracle::CertifyOptions co{options.certify_trials, options.seed, 1e-9};
    report.certificates.emplace_back(sense == Sense::Min ? "certify_min" : "certify_max",
                                     sense == Sense::Min ? oracle::certify_min(b, c, x0, co)
                                                         : oracle::certify_max(b, c, x0, co));
  }
  return report;
}

}  // namespace

bool has_indefinite_inverse(const Operator& b) { return Subspace::range(b).classification().regular; }

bool adjoint_range_criterion(const Operator& b) {
  const auto& space = *b.space();
  const Operator adj = b.adjoint();
  const double bn = b.norm();
  return linalg::column_rank(space, adj.matrix()) == linalg::column_rank(space, (adj * b).matrix(), bn * bn);
}

Subspace gram_kernel(const Operator& b) {
  const double bn = b.norm();
  return Subspace::kernel(b.adjoint() * b, bn * bn);
}

Operator normal_equation_solution(const Operator& b, const Operator& c) {
  require_same_space(b.space(), c.space());
  const Operator adj = b.adjoint();
  const Matrix gram_op = (adj * b).matrix();
  const double bn = b.norm();
  return {b.space(), linalg::hilbert_pinv(*b.space(), gram_op, bn * bn) * (adj * c).matrix()};
}

double normal_equation_residual(const Operator& b, const Operator& c, const Operator& x) {
  const double bn = b.norm();
  return rel((b.adjoint() * (b * x - c)).norm(), bn * (bn * x.norm() + c.norm()));
}

Operator residual_square(const Operator& b, const Operator& c, const Operator& x) {
  const Operator r = b * x - c;
  return r.adjoint() * r;
}

bool range_in_companion_sum(const Subspace& s, const Operator& c) {
  return sum(s, orthogonal_companion(s)).contains(c.matrix());
}

SolveReport indefinite_inverse(const Operator& b) {
  SolveReport report;
  const Subspace range = Subspace::range(b);
  add_condition(report, "range_regular", range.classification().regular, Reason::RangeNotRegular);
  report.conditions.push_back({"adjoint_range_equality", adjoint_range_criterion(b)});
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const Projection q = selfadjoint_projection(range);
  const Operator x0 = solve_douglas(b, q.op);
  report.manifold = SolutionManifold{x0, Subspace::kernel(b)};

  const Operator id = Operator::identity(b.space());
  const Operator bx = b * x0;
  const double bn = b.norm();
  const double scale = bn * (bn * x0.norm() + 1.0);
  report.residual_normal_eq = rel((b.adjoint() * (bx - id)).norm(), scale);
  report.residuals["normal_eq"] = report.residual_normal_eq;
  report.residuals["inner_inverse"] = rel((bx * b - b).norm(), scale);
  report.residuals["bx_selfadjoint"] = rel((bx.adjoint() - bx).norm(), scale);
  report.residuals["bx_equals_q"] = rel((bx - q.op).norm(), scale);
  return report;
}

SolveReport indefinite_inverse_in_range(const Operator& b, const Operator& c) {
  require_same_space(b.space(), c.space());
  SolveReport report;
  const Subspace range = Subspace::range(b);
  add_condition(report, "range_inclusion", range_in_companion_sum(range, c), Reason::RangeInclusionFails);
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const Operator x0 = normal_equation_solution(b, c);
  report.manifold = SolutionManifold{x0, gram_kernel(b)};
  report.residual_normal_eq = normal_equation_residual(b, c, x0);
  report.residuals["normal_eq"] = report.residual_normal_eq;
  if (range.classification().regular) {
    const Projection q = selfadjoint_projection(range);
    report.residuals["bx_equals_qc"] = rel((b * x0 - q.op * c).norm(), b.norm() * x0.norm() + c.norm());
  }
  return report;
}

SolveReport solve_ims(const Operator& b, const Operator& c, const SolveOptions& options) {
  return solve_extremum(b, c, options, Sense::Min);
}

SolveReport solve_imax(const Operator& b, const Operator& c, const SolveOptions& options) {
  return solve_extremum(b, c, options, Sense::Max);
}

bool verify_ims(const Operator& x, const Operator& b, const Operator& c, const SolveOptions& options) {
  if (normal_equation_residual(b, c, x) > b.space()->tolerances().num) return false;
  const int trials = options.certify_trials > 0 ? options.certify_trials : 200;
  return oracle::certify_min(b, c, x, {trials, options.seed, 1e-9}).verdict;
}

}  // namespace krein
