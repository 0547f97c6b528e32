#pragma once

// Independent verification layer. Nothing here calls into the projection,
// solver or inverse modules: adjoints and positivity are recomputed from the
// raw Gram matrix so that the checks do not share code with what they check.

#include <cstdint>
#include <optional>

#include "krein/operator.hpp"

namespace krein::oracle {

struct Certificate {
  bool verdict = true;
  /// Vector x with [[T x, x]] not >= 0 (negative or non-real) when the
  /// verdict is false.
  std::optional<Vector> witness;
  /// Competitor operator that beats the claimed optimum, when applicable.
  std::optional<Matrix> competitor;
  int trials = 0;
  double min_eigen_seen = 0.0;
  double max_residual = 0.0;
};

struct CertifyOptions {
  int trials = 1000;
  std::uint64_t seed = 0;
  /// Allowed negative part of lambda_min(G Δ), relative to |G V0| + |G V| plus
  /// |G| times the squared norms of the factors (B X - C, or X itself).
  double tolerance = 1e-9;
};

/// Krein adjoint recomputed from the Gram matrix alone.
Matrix krein_adjoint(const Matrix& gram, const Matrix& t);

/// [[T x, x]]
Scalar quadratic_form(const Matrix& gram, const Matrix& t, const Vector& x);

/// T is positive iff G T is Hermitian and positive semidefinite.
Certificate is_krein_positive(const Operator& t);
Certificate is_krein_positive(const Operator& t, double tolerance);

/// S <= T in the positive-operator order.
Certificate operator_leq(const Operator& s, const Operator& t);

/// Re-evaluates a witness: true when [[T x, x]] is negative or non-real beyond
/// `tolerance * |T| |x|^2`.
bool witness_violates(const Operator& t, const Vector& x, double tolerance = 1e-9);

/// Samples competitors X and checks (B X0 - C)^#(B X0 - C) <= (B X - C)^#(B X - C).
Certificate certify_min(const Operator& b, const Operator& c, const Operator& x0, const CertifyOptions& options = {});

/// Mirror of certify_min for the maximisation problem.
Certificate certify_max(const Operator& b, const Operator& c, const Operator& x0, const CertifyOptions& options = {});

/// Samples Y = X1 + W with R(W) inside span(`directions`) and checks
/// X1^# X1 <= Y^# Y.
Certificate certify_min_norm(const Operator& x1, const Matrix& directions, const CertifyOptions& options = {});

/// Classical (Euclidean) Moore-Penrose inverse via complete orthogonal
/// decomposition.
Matrix classical_pinv(const Matrix& a);

}  // namespace krein::oracle
