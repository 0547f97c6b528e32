#pragma once

// Dense kernels expressed in the Hilbert geometry of a Krein space. All
// "orthonormal" bases returned here are orthonormal for <x, y> = y* M x.

#include "krein/space.hpp"

namespace krein::linalg {

/// Singular-value cutoff for a matrix whose largest singular value is
/// `sigma_max`, using the space's rank tolerance.
double rank_cutoff(const KreinSpace& space, double sigma_max);

/// Rank of the span of the columns of `vectors`, cut relative to
/// max(sigma_max, scale).
Index column_rank(const KreinSpace& space, const Matrix& vectors, double scale = 0.0);

/// Hilbert-orthonormal basis of the span of the columns of `vectors`.
/// Cutoff relative to max(sigma_max, scale).
Matrix orthonormal_span(const KreinSpace& space, const Matrix& vectors, double scale = 0.0);

/// Hilbert-orthonormal basis of {x : A x = 0} for an m-by-n matrix A.
/// Singular values are cut relative to max(sigma_max, scale); pass a scale
/// when A is a product whose entries may be pure roundoff (B^# B with a
/// neutral range, say).
Matrix kernel(const KreinSpace& space, const Matrix& a, double scale = 0.0);

/// Hilbert-orthonormal basis of {x : A x = 0} when the rank of A is known.
Matrix kernel_with_rank(const KreinSpace& space, const Matrix& a, Index rank);

/// Moore-Penrose inverse of an operator on (H, <., .>).
Matrix hilbert_pinv(const KreinSpace& space, const Matrix& a, double scale = 0.0);

/// Adjoint of an operator with respect to <., .>.
Matrix hilbert_adjoint(const KreinSpace& space, const Matrix& a);

/// Spectral norm of an operator with respect to <., .>.
double hilbert_norm(const KreinSpace& space, const Matrix& a);

/// Orthogonal projection (for <., .>) onto the span of a Hilbert-orthonormal
/// basis.
Matrix hilbert_projector(const KreinSpace& space, const Matrix& orthonormal_basis);

/// Euclidean Moore-Penrose inverse with relative cutoff.
Matrix pinv(const Matrix& a, double relative_cutoff, double scale = 0.0);

/// Multiplies every column by a unit scalar so that its first entry of
/// non-negligible modulus is real and positive.
void fix_phases(Matrix& columns);

struct HermitianEigen {
  RealVector values;  // descending
  Matrix vectors;     // phase-fixed columns
};

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
HermitianEigen hermitian_eigen(const Matrix& hermitian);

}  // namespace krein::linalg
