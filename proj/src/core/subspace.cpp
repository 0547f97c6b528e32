#include "krein/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

std::string_view to_string(SubspaceKind kind) noexcept {
  switch (kind) {
    case SubspaceKind::Zero: return "Zero";
    case SubspaceKind::UniformlyPositive: return "UniformlyPositive";
    case SubspaceKind::UniformlyNegative: return "UniformlyNegative";
    case SubspaceKind::NonnegativeDegenerate: return "NonnegativeDegenerate";
    case SubspaceKind::NonpositiveDegenerate: return "NonpositiveDegenerate";
    case SubspaceKind::Neutral: return "Neutral";
    case SubspaceKind::Indefinite: return "Indefinite";
  }
  return "Unknown";
}

namespace {

SubspaceKind kind_from_counts(Index p, Index q, Index z) {
  if (p + q + z == 0) return SubspaceKind::Zero;
  if (z == 0) {
    if (q == 0) return SubspaceKind::UniformlyPositive;
    if (p == 0) return SubspaceKind::UniformlyNegative;
    return SubspaceKind::Indefinite;
  }
  if (p == 0 && q == 0) return SubspaceKind::Neutral;
  if (q == 0) return SubspaceKind::NonnegativeDegenerate;
  if (p == 0) return SubspaceKind::NonpositiveDegenerate;
  return SubspaceKind::Indefinite;
}

Matrix select_columns(const Matrix& m, const std::vector<Index>& cols) {
  Matrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = m.col(cols[j]);
  return out;
}

}  // namespace

Subspace::Subspace(SpacePtr space, Matrix basis) : space_(std::move(space)), basis_(std::move(basis)) {
  const double neutral = space_->tolerances().neutral;
  gram_restricted_ = basis_.adjoint() * space_->gram() * basis_;
  gram_restricted_ = ((gram_restricted_ + gram_restricted_.adjoint()) / 2.0).eval();

  const auto eig = linalg::hermitian_eigen(gram_restricted_);
  eigenvalues_ = eig.values;
  eigenbasis_ = basis_ * eig.vectors;

  std::vector<Index> iso;
  std::vector<Index> reg;
  for (Index i = 0; i < eigenvalues_.size(); ++i) {
    const double v = eigenvalues_(i);
    if (std::abs(v) <= neutral) {
      iso.push_back(i);
    } else {
      reg.push_back(i);
      if (v > 0) ++class_.positive_dim;
      else ++class_.negative_dim;
    }
  }
  isotropic_ = select_columns(eigenbasis_, iso);
  regular_ = select_columns(eigenbasis_, reg);
  class_.isotropic_dim = static_cast<Index>(iso.size());
  class_.regular = iso.empty();
  class_.kind = kind_from_counts(class_.positive_dim, class_.negative_dim, class_.isotropic_dim);
}

Subspace Subspace::span(const SpacePtr& space, const Matrix& vectors) {
  if (vectors.rows() != space->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "spanning vectors have the wrong length");
  }
  return Subspace(space, linalg::orthonormal_span(*space, vectors));
}

Subspace Subspace::span(const SpacePtr& space, const Matrix& vectors, double scale) {
  if (vectors.rows() != space->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "spanning vectors have the wrong length");
  }
  return Subspace(space, linalg::orthonormal_span(*space, vectors, scale));
}

Subspace Subspace::range(const Operator& op) { return span(op.space(), op.matrix()); }

Subspace Subspace::range(const Operator& op, double scale) {
  return Subspace(op.space(), linalg::orthonormal_span(*op.space(), op.matrix(), scale));
}

Subspace Subspace::kernel(const Operator& op) {
  return Subspace(op.space(), linalg::kernel(*op.space(), op.matrix()));
}

Subspace Subspace::kernel(const Operator& op, double scale) {
  return Subspace(op.space(), linalg::kernel(*op.space(), op.matrix(), scale));
}

Subspace Subspace::zero(const SpacePtr& space) { return Subspace(space, Matrix(space->dim(), 0)); }

Subspace Subspace::full(const SpacePtr& space) {
  Matrix basis = space->metric_sqrt_inverse();
  linalg::fix_phases(basis);
  return Subspace(space, std::move(basis));
}

Subspace Subspace::from_orthonormal(const SpacePtr& space, Matrix basis) {
  if (basis.rows() != space->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "basis vectors have the wrong length");
  }
  return Subspace(space, std::move(basis));
}

Subspace Subspace::isotropic_part() const { return Subspace(space_, isotropic_); }

Subspace Subspace::regular_part() const { return Subspace(space_, regular_); }

Matrix Subspace::hilbert_projector() const { return linalg::hilbert_projector(*space_, basis_); }

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "vectors have the wrong length");
  }
  if (vectors.cols() == 0) return true;
  Matrix joined(ambient_dim(), dim() + vectors.cols());
  joined << basis_, vectors;
  return linalg::column_rank(*space_, joined) == dim();
}

SubspaceClass classify(const Subspace& s) { return s.classification(); }

Subspace orthogonal_companion(const Subspace& s) {
  const auto& space = s.space();
  if (s.dim() == 0) return Subspace::full(space);
  // x ∈ S^[⊥] iff basis* G x = 0; that functional has full rank dim S.
  const Matrix functional = s.basis().adjoint() * space->gram();
  return Subspace::from_orthonormal(space, linalg::kernel_with_rank(*space, functional, s.dim()));
}

SubspaceSplit decompose_subspace(const Subspace& s) {
  const auto& values = s.gram_eigenvalues();
  const double neutral = s.space()->tolerances().neutral;
  Index p = 0;
  while (p < values.size() && values(p) > neutral) ++p;
  const Matrix& eb = s.eigenbasis();
  return {Subspace::from_orthonormal(s.space(), eb.leftCols(p)),
          Subspace::from_orthonormal(s.space(), eb.rightCols(eb.cols() - p))};
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_space(a.space(), b.space());
  Matrix joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), b.basis();
  return Subspace::span(a.space(), joined);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_same_space(a.space(), b.space());
  const auto& space = *a.space();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.space());
  // Solve Ua x = Ub y: kernel of [Ua, -Ub] in coefficient space.
  Matrix joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), -b.basis();
  Eigen::JacobiSVD<Matrix> svd(space.metric_sqrt() * joined, Eigen::ComputeFullV);
  const RealVector& sv = svd.singularValues();
  const double cutoff = linalg::rank_cutoff(space, sv(0));
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  const Index nullity = joined.cols() - r;
  if (nullity == 0) return Subspace::zero(a.space());
  const Matrix coeffs = svd.matrixV().rightCols(nullity).topRows(a.dim());
  return Subspace::span(a.space(), a.basis() * coeffs);
}

double containment_gap(const Matrix& vectors, const Subspace& outer) {
  const auto& space = *outer.space();
  if (vectors.cols() == 0) return 0.0;
  const Matrix h = space.metric_sqrt() * vectors;
  const double total = Eigen::JacobiSVD<Matrix>(h).singularValues()(0);
  if (total == 0.0) return 0.0;
  const Matrix residual = space.metric_sqrt() * (vectors - outer.hilbert_projector() * vectors);
  return Eigen::JacobiSVD<Matrix>(residual).singularValues()(0) / total;
}

double containment_gap(const Subspace& inner, const Subspace& outer) {
  require_same_space(inner.space(), outer.space());
  return containment_gap(inner.basis(), outer);
}

std::vector<double> principal_angles(const Subspace& a, const Subspace& b) {
  require_same_space(a.space(), b.space());
  const Subspace& inner = a.dim() <= b.dim() ? a : b;
  const Subspace& outer = a.dim() <= b.dim() ? b : a;
  std::vector<double> angles;
  if (inner.dim() == 0) return angles;
  const auto& space = *inner.space();
  const Matrix residual = space.metric_sqrt() * (inner.basis() - outer.hilbert_projector() * inner.basis());
  const RealVector sines = Eigen::JacobiSVD<Matrix>(residual).singularValues();
  for (Index i = 0; i < inner.dim(); ++i) {
    const double s = i < sines.size() ? sines(i) : 0.0;
    angles.push_back(std::asin(std::clamp(s, 0.0, 1.0)));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

bool is_contained(const Subspace& inner, const Subspace& outer, double angle_tol) {
  if (inner.dim() > outer.dim()) return false;
  return containment_gap(inner, outer) <= std::sin(angle_tol);
}

bool same_subspace(const Subspace& a, const Subspace& b, double angle_tol) {
  return a.dim() == b.dim() && is_contained(a, b, angle_tol) && is_contained(b, a, angle_tol);
}

bool range_inclusion(const Operator& z, const Operator& y) {
  require_same_space(z.space(), y.space());
  const auto& space = *y.space();
  Matrix joined(y.dim(), 2 * y.dim());
  joined << y.matrix(), z.matrix();
  return linalg::column_rank(space, joined) == linalg::column_rank(space, y.matrix());
}

Operator solve_douglas(const Operator& y, const Operator& z) {
  if (!range_inclusion(z, y)) {
    throw Error(ErrorCode::NoFactorization, "R(Z) is not contained in R(Y)");
  }
  return {y.space(), linalg::hilbert_pinv(*y.space(), y.matrix()) * z.matrix()};
}

bool neutral_range(const Operator& t) {
  const double scale = t.norm();
  if (scale == 0.0) return true;
  const Operator square = t.adjoint() * t;
  return square.norm() <= t.space()->tolerances().num * scale * scale;
}

}  // namespace krein
