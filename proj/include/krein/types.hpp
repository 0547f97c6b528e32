#pragma once

#include <complex>

#include <Eigen/Dense>

namespace krein {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Numerical thresholds shared by every decision the library makes.
///
/// `sym` and `num` are relative tolerances for Hermiticity and identity
/// residuals. `rank` is the relative singular-value cutoff for rank decisions;
/// a non-positive value selects the strict n * machine epsilon cutoff.
/// `neutral` is the cutoff below which
/// an eigenvalue of a restricted Gram matrix (taken in a Hilbert-orthonormal
/// basis, hence inside [-1, 1]) counts as zero.
struct Tolerances {
  double sym = 1e-10;
  double num = 1e-10;
  double rank = 1e-10;
  double neutral = 1e-8;

  double rank_relative(Index n) const;
};

}  // namespace krein
