#include "krein/space.hpp"

#include <cmath>
#include <limits>

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

double Tolerances::rank_relative(Index n) const {
  if (rank > 0.0) return rank;
  return static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

namespace {

Matrix hermitian_part(const Matrix& a) { return (a + a.adjoint()) / 2.0; }

void require_square(const Matrix& m, const char* what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix");
  }
}

}  // namespace

SpacePtr KreinSpace::make(const Matrix& gram, const Tolerances& tol) {
  require_square(gram, "Gram matrix");
  const double scale = gram.norm();
  if ((gram - gram.adjoint()).norm() > tol.sym * scale) {
    throw Error(ErrorCode::NotHermitian, "Gram matrix is not Hermitian");
  }
  const Matrix g = hermitian_part(gram);

  const RealVector sv = Eigen::JacobiSVD<Matrix>(g).singularValues();
  if (sv.minCoeff() < tol.rank_relative(g.rows()) * sv.maxCoeff()) {
    throw Error(ErrorCode::SingularGram, "Gram matrix is not invertible");
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
  const RealVector signs = eig.eigenvalues().unaryExpr([](double v) { return v > 0 ? 1.0 : -1.0; });
  const Matrix j = eig.eigenvectors() * signs.cast<Scalar>().asDiagonal() * eig.eigenvectors().adjoint();
  return std::make_shared<const KreinSpace>(Token{}, g, j, tol);
}

SpacePtr KreinSpace::with_signature(const Matrix& signature) const {
  if (signature.rows() != dim() || signature.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "signature operator has the wrong size");
  }
  const Matrix id = Matrix::Identity(dim(), dim());
  if ((signature * signature - id).norm() > tol_.sym * static_cast<double>(dim()) * std::max(1.0, signature.squaredNorm())) {
    throw Error(ErrorCode::InvalidSignature, "J^2 != I");
  }
  const Matrix m = gram_ * signature;
  if ((m - m.adjoint()).norm() > tol_.sym * m.norm()) {
    throw Error(ErrorCode::InvalidSignature, "J is not selfadjoint for the form");
  }
  return std::make_shared<const KreinSpace>(Token{}, gram_, signature, tol_);
}

SpacePtr KreinSpace::with_tolerances(const Tolerances& tol) const {
  return std::make_shared<const KreinSpace>(Token{}, gram_, signature_, tol);
}

KreinSpace::KreinSpace(Token, Matrix gram, Matrix signature, const Tolerances& tol)
    : gram_(std::move(gram)), signature_(std::move(signature)), tol_(tol) {
  const Index n = gram_.rows();
  gram_inv_ = gram_.partialPivLu().inverse();
  metric_ = hermitian_part(gram_ * signature_);

  Eigen::SelfAdjointEigenSolver<Matrix> eig(metric_);
  const RealVector d = eig.eigenvalues();
  if (d.minCoeff() <= 0.0) {
    throw Error(ErrorCode::InvalidSignature, "G J is not positive definite");
  }
  const Matrix& u = eig.eigenvectors();
  metric_sqrt_ = u * d.cwiseSqrt().cast<Scalar>().asDiagonal() * u.adjoint();
  metric_sqrt_inv_ = u * d.cwiseSqrt().cwiseInverse().cast<Scalar>().asDiagonal() * u.adjoint();
  metric_inv_ = u * d.cwiseInverse().cast<Scalar>().asDiagonal() * u.adjoint();

  // In Hilbert coordinates J becomes a Hermitian involution; its +1 and -1
  // eigenvectors, mapped back, give the fundamental basis.
  const Matrix j_hilbert = hermitian_part(metric_sqrt_ * signature_ * metric_sqrt_inv_);
  const auto split = linalg::hermitian_eigen(j_hilbert);
  Index p = 0;
  while (p < n && split.values(p) > 0.0) ++p;
  Matrix plus = metric_sqrt_inv_ * split.vectors.leftCols(p);
  Matrix minus = metric_sqrt_inv_ * split.vectors.rightCols(n - p);
  linalg::fix_phases(plus);
  linalg::fix_phases(minus);
  basis_plus_ = std::move(plus);
  basis_minus_ = std::move(minus);
}

Scalar KreinSpace::krein(const Vector& x, const Vector& y) const { return y.dot(gram_ * x); }

Scalar KreinSpace::inner(const Vector& x, const Vector& y) const { return y.dot(metric_ * x); }

double KreinSpace::norm(const Vector& x) const { return (metric_sqrt_ * x).norm(); }

bool KreinSpace::same_form(const KreinSpace& other) const {
  return this == &other || (gram_.rows() == other.gram_.rows() && gram_ == other.gram_);
}

std::pair<Index, Index> inertia(const Matrix& gram) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian_part(gram), Eigen::EigenvaluesOnly);
  Index p = 0;
  Index q = 0;
  for (Index i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) > 0) ++p;
    if (eig.eigenvalues()(i) < 0) ++q;
  }
  return {p, q};
}

}  // namespace krein
