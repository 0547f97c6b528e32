#pragma once

#include "krein/space.hpp"

namespace krein {

/// A linear operator on a Krein space, stored as its matrix in the standard
/// coordinates of C^n.
class Operator {
 public:
  Operator(SpacePtr space, Matrix matrix);

  static Operator identity(const SpacePtr& space);
  static Operator zero(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.rows(); }

  /// The Krein adjoint T^# = G^{-1} T* G.
  Operator adjoint() const;

  /// Same matrix viewed in another space carrying the same form (for example
  /// a different fundamental decomposition).
  Operator rebind(const SpacePtr& other) const;

  /// Spectral norm in the associated Hilbert space.
  double norm() const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator-=(const Operator& rhs);

  friend Operator operator+(Operator lhs, const Operator& rhs) { return lhs += rhs; }
  friend Operator operator-(Operator lhs, const Operator& rhs) { return lhs -= rhs; }
  friend Operator operator-(const Operator& op) { return {op.space_, -op.matrix_}; }
  friend Operator operator*(const Operator& lhs, const Operator& rhs);
  friend Operator operator*(Scalar s, const Operator& op) { return {op.space_, s * op.matrix_}; }

 private:
  SpacePtr space_;
  Matrix matrix_;
};

inline Operator adjoint(const Operator& t) { return t.adjoint(); }

/// Throws SpaceMismatch unless both operands live on spaces with the same form.
void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace krein
