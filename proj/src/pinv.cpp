#include "krein/pinv.hpp"

#include <algorithm>
#include <random>

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

namespace {

constexpr double kProjectionTol = 1e-8;

double rel(double value, double scale) { return value / std::max(1.0, scale); }

double normality(const Operator& t) {
  const Operator adj = t.adjoint();
  const double n = t.norm();
  return rel((t * adj - adj * t).norm(), n * n);
}

Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> dist;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Scalar(dist(rng), dist(rng));
  return m;
}

void require_normal_onto(const Projection& q, const Subspace& target, const char* what) {
  require_same_space(q.op.space(), target.space());
  const double n = std::max(1.0, q.op.norm());
  const Operator& t = q.op;
  const bool idempotent = (t * t - t).norm() <= kProjectionTol * n;
  const bool normal = normality(t) <= kProjectionTol;
  if (!idempotent || !normal) {
    throw Error(ErrorCode::BadProjection, std::string(what) + " is not a normal projection");
  }
  if (!same_subspace(Subspace::range(t, 1.0), target)) {
    throw Error(ErrorCode::BadProjection, std::string(what) + " has the wrong range");
  }
}

Projection as_projection(const Operator& t) {
  const Subspace range = Subspace::range(t, 1.0);
  const Operator adj = t.adjoint();
  const double n = std::max(1.0, t.norm());
  ProjectionKind kind = ProjectionKind::Oblique;
  if ((adj - t).norm() <= kProjectionTol * n) kind = ProjectionKind::Selfadjoint;
  else if (normality(t) <= kProjectionTol) kind = ProjectionKind::Normal;
  return {t, range, kind};
}

}  // namespace

std::string_view to_string(InverseKind kind) noexcept {
  switch (kind) {
    case InverseKind::MoorePenrose: return "MoorePenrose";
    case InverseKind::NormalPair: return "NormalPair";
    case InverseKind::OneTwo: return "OneTwo";
  }
  return "Unknown";
}

double EqPseudoResiduals::max() const { return std::max({inner, outer, bd_normality, db_normality}); }

double EqPseudo2Residuals::max() const { return std::max({inner, outer, range_projection, db_normality}); }

Operator one_two_inverse(const Operator& b) {
  return {b.space(), linalg::hilbert_pinv(*b.space(), b.matrix())};
}

EqPseudoResiduals check_eq_pseudo(const Operator& b, const Operator& d) {
  require_same_space(b.space(), d.space());
  const double bn = b.norm();
  const double dn = d.norm();
  EqPseudoResiduals r;
  r.inner = rel((b * d * b - b).norm(), bn * bn * dn);
  r.outer = rel((d * b * d - d).norm(), dn * dn * bn);
  r.bd_normality = normality(b * d);
  r.db_normality = normality(d * b);
  return r;
}

SolveReport krein_moore_penrose(const Operator& b) {
  SolveReport report;
  const Subspace range = Subspace::range(b);
  const Subspace null = Subspace::kernel(b);
  add_condition(report, "range_regular", range.classification().regular, Reason::RangeNotRegular);
  add_condition(report, "nullspace_regular", null.classification().regular, Reason::NullspaceNotRegular);
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const auto space = b.space();
  const Operator q = selfadjoint_projection(range).op;
  const Operator p = selfadjoint_projection(orthogonal_companion(null)).op;
  const Operator tilde = one_two_inverse(b);
  const Operator x = p * tilde * q;
  report.manifold = SolutionManifold{x, Subspace::zero(space)};

  const double bn = b.norm();
  const double xn = x.norm();
  const Operator bx = b * x;
  const Operator xb = x * b;
  report.residuals["inner"] = rel((bx * b - b).norm(), bn * bn * xn);
  report.residuals["outer"] = rel((xb * x - x).norm(), xn * xn * bn);
  report.residuals["bx_selfadjoint"] = rel((bx.adjoint() - bx).norm(), bn * xn);
  report.residuals["xb_selfadjoint"] = rel((xb.adjoint() - xb).norm(), bn * xn);
  report.residuals["bx_equals_q"] = rel((bx - q).norm(), bn * xn);
  report.residuals["xb_equals_p"] = rel((xb - p).norm(), bn * xn);

  // Rebuild from a different {1,2}-inverse: X1 = B~ + W - B~BWBB~ is a
  // {1}-inverse and X1 B X1 a {1,2}-inverse.
  std::mt19937_64 rng(0x6a09e667f3bcc909ULL);
  const Operator w(space, gaussian(b.dim(), b.dim(), rng) * (std::max(1.0, tilde.norm()) / double(b.dim())));
  const Operator x1 = tilde + w - tilde * b * w * b * tilde;
  const Operator other = p * (x1 * b * x1) * q;
  report.residuals["uniqueness"] = rel((other - x).norm(), xn);
  report.residual_normal_eq = rel((b.adjoint() * (bx - Operator::identity(space))).norm(), bn * (bn * xn + 1.0));
  return report;
}

GeneralizedInverse generalized_inverse(const Operator& b, const Projection& q, const Projection& p) {
  require_normal_onto(q, Subspace::range(b), "Q");
  require_normal_onto(p, Subspace::kernel(b), "P");
  const Operator id = Operator::identity(b.space());
  const Operator d = (id - p.op) * one_two_inverse(b) * q.op;
  const bool selfadjoint = q.kind == ProjectionKind::Selfadjoint && p.kind == ProjectionKind::Selfadjoint;
  return {d, q, p, selfadjoint ? InverseKind::MoorePenrose : InverseKind::NormalPair};
}

GeneralizedInverse generalized_inverse(const Operator& b) {
  return generalized_inverse(b, normal_projection(Subspace::range(b)), normal_projection(Subspace::kernel(b)));
}

GeneralizedInverse factor_generalized_inverse(const Operator& b, const Operator& d) {
  require_same_space(b.space(), d.space());
  const Operator id = Operator::identity(b.space());
  Projection q = as_projection(b * d);
  Projection p = as_projection(id - d * b);
  InverseKind kind = InverseKind::NormalPair;
  if (q.kind == ProjectionKind::Oblique || p.kind == ProjectionKind::Oblique) kind = InverseKind::OneTwo;
  else if (q.kind == ProjectionKind::Selfadjoint && p.kind == ProjectionKind::Selfadjoint) kind = InverseKind::MoorePenrose;
  return {d, std::move(q), std::move(p), kind};
}

Operator reduced_generalized_inverse(const Operator& b, const Projection& q, const Projection& p_prime) {
  require_normal_onto(q, Subspace::range(b), "Q");
  require_normal_onto(p_prime, gram_kernel(b), "P'");
  const Operator qa = q.op.adjoint();
  const Operator reduced = qa * b;
  const Operator id = Operator::identity(b.space());
  // Q^#B may be roundoff when R(B) is neutral; cut relative to |Q||B|.
  const Operator red_inv{b.space(), linalg::hilbert_pinv(*b.space(), reduced.matrix(), q.op.norm() * b.norm())};
  return (id - p_prime.op) * red_inv * qa * q.op;
}

EqPseudo2Residuals check_eq_pseudo2(const Operator& b, const Projection& q, const Operator& d) {
  require_same_space(b.space(), d.space());
  const Operator qa = q.op.adjoint();
  const Operator reduced = qa * b;
  const double bn = reduced.norm();
  const double dn = d.norm();
  EqPseudo2Residuals r;
  r.inner = rel((reduced * d * reduced - reduced).norm(), bn * bn * dn);
  r.outer = rel((d * reduced * d - d).norm(), dn * dn * bn);
  r.range_projection = rel((reduced * d - qa * q.op).norm(), bn * dn);
  r.db_normality = normality(d * reduced);
  return r;
}

SolveReport solve_min_ims_norm(const Operator& b, const Operator& c, const SolveOptions& options) {
  require_same_space(b.space(), c.space());
  const auto space = b.space();
  SolveReport report;
  report.seed = options.seed;

  const Subspace range = Subspace::range(b);
  const Subspace kernel = gram_kernel(b);
  const Subspace kernel_companion = orthogonal_companion(kernel);
  // B maps the (orthonormal) companion basis; a neutral kernel can make the
  // product pure roundoff.
  const Subspace image = Subspace::span(space, b.matrix() * kernel_companion.basis(), b.norm());
  const bool inclusion = sum(image, orthogonal_companion(range)).contains(c.matrix());

  add_condition(report, "range_nonnegative", range.classification().nonnegative(), Reason::RangeNotNonnegative);
  add_condition(report, "kernel_gram_nonnegative", kernel.classification().nonnegative(), Reason::KernelNotNonnegative);
  add_condition(report, "image_inclusion", inclusion, Reason::ImageInclusionFails);
  report.feasible = report.reason == Reason::None;
  if (!report.feasible) return report;

  const Projection q = normal_projection(range);
  const Projection p_prime = normal_projection(kernel);
  const Operator d = reduced_generalized_inverse(b, q, p_prime);
  const Operator x1 = d * c;
  report.manifold = SolutionManifold{x1, kernel.isotropic_part()};
  report.residual_normal_eq = normal_equation_residual(b, c, x1);
  report.residuals["normal_eq"] = report.residual_normal_eq;

  // R(X1) ⊆ N(B^#B)^[⊥]: every column is form-orthogonal to the kernel.
  const Matrix pairing = kernel.basis().adjoint() * space->gram() * x1.matrix();
  report.residuals["kernel_orthogonality"] =
      rel(pairing.norm(), space->gram().norm() * linalg::hilbert_norm(*space, x1.matrix()));
  report.residuals["eq_pseudo2"] = check_eq_pseudo2(b, q, d).max();

  // Projecting any indefinite minimum solution yields the same X1.
  const Operator x0 = normal_equation_solution(b, c);
  const Operator id = Operator::identity(space);
  report.residuals["projected_ims"] = rel(((id - p_prime.op) * x0 - x1).norm(), x1.norm() + x0.norm());

  set_value(report, x1.adjoint() * x1);
  if (options.certify_trials > 0) {
    report.certificates.emplace_back(
        "certify_min_norm",
        oracle::certify_min_norm(x1, kernel.basis(), {options.certify_trials, options.seed, 1e-9}));
  }
  return report;
}

SolveReport mp_variational_check(const Operator& b, const SolveOptions& options) {
  const auto space = b.space();
  SolveReport report;
  report.seed = options.seed;
  const Operator id = Operator::identity(space);
  const SubspaceClass range = Subspace::range(b).classification();
  const SubspaceClass null = Subspace::kernel(b).classification();

  const SolveReport min_norm = solve_min_ims_norm(b, id);
  const SolveReport mp = krein_moore_penrose(b);
  const bool solvable = min_norm.feasible;
  const bool uniform = range.uniformly_positive() && null.uniformly_positive();
  const bool mp_nonneg = mp.feasible && range.nonnegative() && null.nonnegative();
  report.conditions = {{"min_problem_solvable", solvable},
                       {"uniformly_positive", uniform},
                       {"moore_penrose_nonnegative", mp_nonneg}};

  if (solvable != uniform || uniform != mp_nonneg) {
    report.reason = Reason::ConditionsDisagree;
    return report;
  }
  if (!uniform) {
    if (!range.nonnegative()) report.reason = Reason::RangeNotNonnegative;
    else if (!range.regular) report.reason = Reason::RangeNotRegular;
    else if (!null.nonnegative()) report.reason = Reason::KernelNotNonnegative;
    else report.reason = Reason::NullspaceNotRegular;
    return report;
  }

  const Operator& dagger = mp.solution();
  const double dn = dagger.norm();
  report.manifold = SolutionManifold{dagger, Subspace::zero(space)};
  report.residual_normal_eq = mp.residual_normal_eq;
  report.residuals["variational_vs_moore_penrose"] = rel((min_norm.solution() - dagger).norm(), dn);
  report.residuals["eq_pseudo_path"] = rel((generalized_inverse(b).d - dagger).norm(), dn);

  std::mt19937_64 rng(options.seed);
  double worst = 0.0;
  bool all_feasible = true;
  for (int trial = 0; trial < 10; ++trial) {
    const Operator c(space, gaussian(b.dim(), b.dim(), rng));
    const SolveReport r = solve_min_ims_norm(b, c);
    if (!r.feasible) {
      all_feasible = false;
      continue;
    }
    const Operator expected = dagger * c;
    worst = std::max(worst, rel((r.solution() - expected).norm(), expected.norm()));
  }
  report.residuals["random_rhs"] = worst;
  report.conditions.push_back({"random_rhs_feasible", all_feasible});

  double max_residual = 0.0;
  for (const auto& [name, value] : report.residuals) max_residual = std::max(max_residual, value);
  report.feasible = all_feasible && max_residual <= 1e-9;
  if (!report.feasible) report.reason = Reason::VariationalMismatch;
  else set_value(report, dagger.adjoint() * dagger);
  return report;
}

}  // namespace krein
