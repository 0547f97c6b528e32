#pragma once

#include <memory>

#include "krein/types.hpp"

namespace krein {

class KreinSpace;
using SpacePtr = std::shared_ptr<const KreinSpace>;

/// A finite-dimensional Krein space C^n with form [[x, y]] = y* G x and a
/// fixed fundamental decomposition H = H+ [+] H-.
///
/// The decomposition is carried by its signature operator J. The associated
/// Hilbert inner product is <x, y> = [[Jx, y]] = y* M x with metric M = G J.
/// Instances are immutable and shared through SpacePtr.
class KreinSpace {
  struct Token {};

 public:
  /// Builds the space from a Hermitian invertible Gram matrix. The fundamental
  /// decomposition comes from the sign split of the eigendecomposition of G.
  static SpacePtr make(const Matrix& gram, const Tolerances& tol = {});

  /// Same form, different fundamental decomposition. `signature` must satisfy
  /// J^2 = I with G J Hermitian positive definite.
  SpacePtr with_signature(const Matrix& signature) const;

  SpacePtr with_tolerances(const Tolerances& tol) const;

  Index dim() const { return gram_.rows(); }
  Index positive_index() const { return basis_plus_.cols(); }
  Index negative_index() const { return basis_minus_.cols(); }

  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inv_; }
  const Matrix& signature() const { return signature_; }
  const Matrix& metric() const { return metric_; }
  const Matrix& metric_inverse() const { return metric_inv_; }
  /// Hermitian square root R of the metric: <x, y> = (Ry)* (Rx).
  const Matrix& metric_sqrt() const { return metric_sqrt_; }
  const Matrix& metric_sqrt_inverse() const { return metric_sqrt_inv_; }

  /// Columns span H+ (resp. H-); they are Hilbert-orthonormal and satisfy
  /// [[e, e]] = +1 (resp. -1).
  const Matrix& basis_plus() const { return basis_plus_; }
  const Matrix& basis_minus() const { return basis_minus_; }

  const Tolerances& tolerances() const { return tol_; }

  Scalar krein(const Vector& x, const Vector& y) const;
  Scalar inner(const Vector& x, const Vector& y) const;
  double norm(const Vector& x) const;

  /// True when both spaces carry the same indefinite form.
  bool same_form(const KreinSpace& other) const;

  KreinSpace(Token, Matrix gram, Matrix signature, const Tolerances& tol);

 private:
  Matrix gram_;
  Matrix gram_inv_;
  Matrix signature_;
  Matrix metric_;
  Matrix metric_inv_;
  Matrix metric_sqrt_;
  Matrix metric_sqrt_inv_;
  Matrix basis_plus_;
  Matrix basis_minus_;
  Tolerances tol_;
};

/// Signature (p, q) of a Gram matrix counted from the signs of its eigenvalues.
std::pair<Index, Index> inertia(const Matrix& gram);

}  // namespace krein
