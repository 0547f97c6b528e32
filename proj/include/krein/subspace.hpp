#pragma once

#include <string_view>
#include <vector>

#include "krein/operator.hpp"

namespace krein {

enum class SubspaceKind {
  Zero,
  UniformlyPositive,
  UniformlyNegative,
  NonnegativeDegenerate,
  NonpositiveDegenerate,
  Neutral,
  Indefinite,
};

std::string_view to_string(SubspaceKind kind) noexcept;

struct SubspaceClass {
  SubspaceKind kind = SubspaceKind::Zero;
  bool regular = true;
  // Every subspace of a finite-dimensional Krein space is pseudo-regular.
  bool pseudo_regular = true;
  Index isotropic_dim = 0;
  Index positive_dim = 0;
  Index negative_dim = 0;

  bool nonnegative() const { return negative_dim == 0; }
  bool nonpositive() const { return positive_dim == 0; }
  bool uniformly_positive() const { return negative_dim == 0 && isotropic_dim == 0; }
  bool uniformly_negative() const { return positive_dim == 0 && isotropic_dim == 0; }
};

/// A subspace stored through a Hilbert-orthonormal basis, together with its
/// restricted Gram matrix and classification.
class Subspace {
 public:
  static Subspace span(const SpacePtr& space, const Matrix& vectors);
  /// Span with the rank cutoff referenced to max(sigma_max, scale), for
  /// vectors that may be pure roundoff.
  static Subspace span(const SpacePtr& space, const Matrix& vectors, double scale);
  static Subspace range(const Operator& op);
  /// Range with the rank cutoff referenced to max(||op||, scale). Use 1 for
  /// a projection, whose nonzero singular values are at least 1.
  static Subspace range(const Operator& op, double scale);
  static Subspace kernel(const Operator& op);
  /// Kernel with the rank cutoff referenced to max(||op||, scale).
  static Subspace kernel(const Operator& op, double scale);
  static Subspace zero(const SpacePtr& space);
  static Subspace full(const SpacePtr& space);
  /// Trusts `basis` to be Hilbert-orthonormal already.
  static Subspace from_orthonormal(const SpacePtr& space, Matrix basis);

  const SpacePtr& space() const { return space_; }
  Index dim() const { return basis_.cols(); }
  Index ambient_dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  /// basis* G basis
  const Matrix& gram_restricted() const { return gram_restricted_; }
  const SubspaceClass& classification() const { return class_; }
  /// Hilbert-orthonormal basis of S ∩ S^[⊥].
  const Matrix& isotropic_basis() const { return isotropic_; }
  /// Hilbert-orthonormal basis of the span of the eigenvectors of the
  /// restricted Gram with nonzero eigenvalue; a regular complement of the
  /// isotropic part inside S.
  const Matrix& regular_basis() const { return regular_; }
  /// Eigenvalues of the restricted Gram, descending, aligned with the columns
  /// of `eigenbasis()`.
  const RealVector& gram_eigenvalues() const { return eigenvalues_; }
  const Matrix& eigenbasis() const { return eigenbasis_; }

  Subspace isotropic_part() const;
  Subspace regular_part() const;

  /// Hilbert-orthogonal projection onto S.
  Matrix hilbert_projector() const;

  /// Whether every column of `vectors` lies in S (rank test).
  bool contains(const Matrix& vectors) const;

 private:
  Subspace(SpacePtr space, Matrix basis);

  SpacePtr space_;
  Matrix basis_;
  Matrix gram_restricted_;
  RealVector eigenvalues_;
  Matrix eigenbasis_;
  Matrix isotropic_;
  Matrix regular_;
  SubspaceClass class_;
};

SubspaceClass classify(const Subspace& s);

/// S^[⊥] = {x : [[x, s]] = 0 for all s in S}.
Subspace orthogonal_companion(const Subspace& s);

struct SubspaceSplit {
  Subspace plus;   // positive
  Subspace minus;  // nonpositive
};

/// S = S+ [+] S- with S+ positive, S- nonpositive and <S+, S-> = 0, relative
/// to the space's fundamental decomposition.
SubspaceSplit decompose_subspace(const Subspace& s);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Principal angles (radians, ascending) of `a` relative to `b`; one angle per
/// direction of the smaller subspace.
std::vector<double> principal_angles(const Subspace& a, const Subspace& b);

/// sin of the largest principal angle of `inner` measured against `outer`;
/// zero iff inner ⊆ outer.
double containment_gap(const Subspace& inner, const Subspace& outer);
double containment_gap(const Matrix& vectors, const Subspace& outer);

bool same_subspace(const Subspace& a, const Subspace& b, double angle_tol = 1e-8);
bool is_contained(const Subspace& inner, const Subspace& outer, double angle_tol = 1e-8);

/// R(Z) ⊆ R(Y), decided by rank([Y | Z]) = rank(Y).
bool range_inclusion(const Operator& z, const Operator& y);

/// Minimum-Hilbert-norm D with Z = Y D. Throws NoFactorization when
/// R(Z) ⊄ R(Y).
Operator solve_douglas(const Operator& y, const Operator& z);

/// True iff T^# T = 0, i.e. R(T) lies in the neutral cone.
bool neutral_range(const Operator& t);

}  // namespace krein
