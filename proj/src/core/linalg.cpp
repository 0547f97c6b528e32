#include "krein/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace krein::linalg {

namespace {

Index count_above(const RealVector& sv, double cutoff) {
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return r;
}

}  // namespace

double rank_cutoff(const KreinSpace& space, double sigma_max) {
  return space.tolerances().rank_relative(space.dim()) * sigma_max;
}

Index column_rank(const KreinSpace& space, const Matrix& vectors, double scale) {
  if (vectors.cols() == 0) return 0;
  const RealVector sv = Eigen::JacobiSVD<Matrix>(space.metric_sqrt() * vectors).singularValues();
  const double ref = std::max(sv.size() ? sv(0) : 0.0, scale);
  if (sv.size() == 0 || ref == 0.0) return 0;
  return count_above(sv, rank_cutoff(space, ref));
}

Matrix orthonormal_span(const KreinSpace& space, const Matrix& vectors, double scale) {
  const Index n = space.dim();
  if (vectors.cols() == 0) return Matrix(n, 0);
  Eigen::JacobiSVD<Matrix> svd(space.metric_sqrt() * vectors, Eigen::ComputeThinU);
  const RealVector& sv = svd.singularValues();
  const double ref = std::max(sv.size() ? sv(0) : 0.0, scale);
  if (sv.size() == 0 || ref == 0.0) return Matrix(n, 0);
  const Index r = count_above(sv, rank_cutoff(space, ref));
  Matrix basis = space.metric_sqrt_inverse() * svd.matrixU().leftCols(r);
  fix_phases(basis);
  return basis;
}

Matrix kernel_with_rank(const KreinSpace& space, const Matrix& a, Index rank) {
  const Index n = space.dim();
  if (a.rows() == 0 || rank == 0) {
    Matrix basis = space.metric_sqrt_inverse();
    fix_phases(basis);
    return basis;
  }
  Eigen::JacobiSVD<Matrix> svd(a * space.metric_sqrt_inverse(), Eigen::ComputeFullV);
  Matrix basis = space.metric_sqrt_inverse() * svd.matrixV().rightCols(n - rank);
  fix_phases(basis);
  return basis;
}

Matrix kernel(const KreinSpace& space, const Matrix& a, double scale) {
  if (a.rows() == 0) return kernel_with_rank(space, a, 0);
  const RealVector sv = Eigen::JacobiSVD<Matrix>(a * space.metric_sqrt_inverse()).singularValues();
  const double ref = std::max(sv.size() ? sv(0) : 0.0, scale);
  const Index r = (sv.size() == 0 || ref == 0.0) ? 0 : count_above(sv, rank_cutoff(space, ref));
  return kernel_with_rank(space, a, r);
}

Matrix pinv(const Matrix& a, double relative_cutoff, double scale) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& sv = svd.singularValues();
  const double ref = std::max(sv(0), scale);
  if (ref == 0.0) return Matrix::Zero(a.cols(), a.rows());
  const Index r = count_above(sv, relative_cutoff * ref);
  RealVector inv = sv.head(r).cwiseInverse();
  return svd.matrixV().leftCols(r) * inv.cast<Scalar>().asDiagonal() * svd.matrixU().leftCols(r).adjoint();
}

Matrix hilbert_pinv(const KreinSpace& space, const Matrix& a, double scale) {
  const Matrix h = space.metric_sqrt() * a * space.metric_sqrt_inverse();
  return space.metric_sqrt_inverse() * pinv(h, space.tolerances().rank_relative(space.dim()), scale) *
         space.metric_sqrt();
}

Matrix hilbert_adjoint(const KreinSpace& space, const Matrix& a) {
  return space.metric_inverse() * a.adjoint() * space.metric();
}

double hilbert_norm(const KreinSpace& space, const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const Matrix h = space.metric_sqrt() * a * space.metric_sqrt_inverse();
  return Eigen::JacobiSVD<Matrix>(h).singularValues()(0);
}

Matrix hilbert_projector(const KreinSpace& space, const Matrix& orthonormal_basis) {
  if (orthonormal_basis.cols() == 0) return Matrix::Zero(space.dim(), space.dim());
  return orthonormal_basis * (orthonormal_basis.adjoint() * space.metric());
}

void fix_phases(Matrix& columns) {
  for (Index j = 0; j < columns.cols(); ++j) {
    auto col = columns.col(j);
    const double scale = col.cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    for (Index i = 0; i < col.size(); ++i) {
      const double mag = std::abs(col(i));
      if (mag > 1e-8 * scale) {
        col *= std::conj(col(i)) / mag;
        col(i) = Scalar(mag, 0.0);
        break;
      }
    }
  }
}

HermitianEigen hermitian_eigen(const Matrix& hermitian) {
  const Index n = hermitian.rows();
  if (n == 0) return {RealVector(0), Matrix(0, 0)};
  Eigen::SelfAdjointEigenSolver<Matrix> eig((hermitian + hermitian.adjoint()) / 2.0);
  HermitianEigen out{eig.eigenvalues().reverse(), eig.eigenvectors().rowwise().reverse()};
  fix_phases(out.vectors);
  return out;
}

}  // namespace krein::linalg
