#include "krein/projections.hpp"

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

std::string_view to_string(ProjectionKind kind) noexcept {
  switch (kind) {
    case ProjectionKind::Selfadjoint: return "Selfadjoint";
    case ProjectionKind::Normal: return "Normal";
    case ProjectionKind::Oblique: return "Oblique";
  }
  return "Unknown";
}

namespace {

double relative(double value, double scale) { return scale == 0.0 ? value : value / scale; }

Matrix selfadjoint_projector(const KreinSpace& space, const Matrix& basis) {
  if (basis.cols() == 0) return Matrix::Zero(space.dim(), space.dim());
  const Matrix vg = basis.adjoint() * space.gram();
  const Matrix restricted = vg * basis;
  return basis * restricted.partialPivLu().solve(vg);
}

}  // namespace

ProjectionResiduals check_projection(const Projection& q) {
  const Operator& op = q.op;
  const Operator adj = op.adjoint();
  const double scale = std::max(1.0, op.norm());
  ProjectionResiduals r;
  r.idempotency = relative((op * op - op).norm(), scale);
  r.normality = relative((op * adj - adj * op).norm(), scale * scale);
  r.selfadjointness = relative((op - adj).norm(), scale);
  const Subspace actual = Subspace::range(op, 1.0);
  r.range_gap = actual.dim() == q.range.dim() ? std::max(containment_gap(actual, q.range), containment_gap(q.range, actual))
                                              : 1.0;
  return r;
}

Projection selfadjoint_projection(const Subspace& s) {
  if (!s.classification().regular) {
    throw Error(ErrorCode::NotRegular, "selfadjoint projection needs a regular subspace");
  }
  return {Operator(s.space(), selfadjoint_projector(*s.space(), s.basis())), s, ProjectionKind::Selfadjoint};
}

Projection oblique_projection(const Subspace& range, const Subspace& null) {
  require_same_space(range.space(), null.space());
  const auto& space = *range.space();
  const Index n = space.dim();
  Matrix joined(n, range.dim() + null.dim());
  joined << range.basis(), null.basis();
  if (joined.cols() != n || linalg::column_rank(space, joined) != n) {
    throw Error(ErrorCode::NotComplementary, "subspaces are not complementary");
  }
  // P [M N] = [M 0]
  Matrix image = Matrix::Zero(n, n);
  image.leftCols(range.dim()) = range.basis();
  const Matrix p = joined.transpose().partialPivLu().solve(image.transpose()).transpose();
  return {Operator(range.space(), p), range, ProjectionKind::Oblique};
}

AndoSplit ando_split(const Projection& q) {
  const Operator adj = q.op.adjoint();
  const double scale = std::max(1.0, q.op.norm());
  if ((q.op - adj).norm() > q.op.space()->tolerances().num * scale) {
    throw Error(ErrorCode::NotSelfadjoint, "Ando's split needs a selfadjoint projection");
  }
  const SubspaceSplit parts = decompose_subspace(q.range);
  return {selfadjoint_projection(parts.plus), selfadjoint_projection(parts.minus)};
}

Projection normal_projection(const Subspace& s) {
  if (s.classification().regular) return selfadjoint_projection(s);

  const SpacePtr& space = s.space();
  const Index n = space->dim();
  const Matrix& iso = s.isotropic_basis();
  const Subspace s1 = s.regular_part();
  const Matrix q1 = selfadjoint_projector(*space, s1.basis());

  // K = S1^[⊥] is regular and contains S°. Its signature operator, written in
  // a Hilbert-orthonormal basis W of K, is sign(W* G W).
  const Subspace k = orthogonal_companion(s1);
  const Matrix& w = k.basis();
  const auto gram_k = linalg::hermitian_eigen(k.gram_restricted());
  const RealVector signs = gram_k.values.unaryExpr([](double v) { return v > 0 ? 1.0 : -1.0; });
  const Matrix j_k = gram_k.vectors * signs.cast<Scalar>().asDiagonal() * gram_k.vectors.adjoint();

  const Matrix iso_coords = w.adjoint() * space->metric() * iso;
  const Matrix partner = w * (j_k * iso_coords);

  const Index d = iso.cols();
  Matrix pair(n, 2 * d);
  pair << iso, partner;
  const Matrix p_r = selfadjoint_projector(*space, pair);

  // E: coefficients in the basis [S° | N], keep the S° block.
  Matrix keep = Matrix::Zero(2 * d, 2 * d);
  keep.topLeftCorner(d, d).setIdentity();
  const Matrix e = pair * keep * linalg::pinv(pair, 1e-12);

  const Matrix id = Matrix::Identity(n, n);
  const Matrix q = q1 + e * p_r * (id - q1);
  return {Operator(space, q), s, ProjectionKind::Normal};
}

bool companion_identity_check(const Projection& q, const Vector& y) {
  const auto& space = *q.op.space();
  const Matrix id = Matrix::Identity(space.dim(), space.dim());
  const Vector image = q.op.adjoint().matrix() * ((id - q.op.matrix()) * y);
  const double qn = q.op.norm();
  return space.norm(image) <= space.tolerances().num * std::max(1.0, qn * (1.0 + qn)) * space.norm(y);
}

bool in_sum_with_companion(const Subspace& s, const Vector& y) { return sum(s, orthogonal_companion(s)).contains(y); }

}  // namespace krein
