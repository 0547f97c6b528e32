#pragma once

#include <array>
#include <random>
#include <string>
#include <utility>

#include <gtest/gtest.h>

#include "krein/operator.hpp"
#include "krein/subspace.hpp"

namespace krein::testing {

using Rng = std::mt19937_64;

/// Inertia pairs (p, q) used by the randomized suites.
inline constexpr std::array<std::pair<Index, Index>, 4> kSignatures{{{1, 1}, {2, 2}, {3, 1}, {2, 1}}};

Matrix gaussian(Index rows, Index cols, Rng& rng);
Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows);

/// G = diag(+1 x p, -1 x q).
SpacePtr minkowski(Index p, Index q);
/// G = A* D A with D a random diagonal of inertia (p, q) and A near identity.
SpacePtr random_space(Index p, Index q, Rng& rng);

/// Cayley transform of a Krein-skew operator; satisfies U* G U = G.
Matrix random_g_unitary(const KreinSpace& space, Rng& rng, double size = 0.3);
/// Same form, signature U J U^-1 for a random G-unitary U.
SpacePtr alternative_decomposition(const SpacePtr& space, Rng& rng);

struct Shape {
  Index positive = 0;
  Index negative = 0;
  Index neutral = 0;
  Index dim() const { return positive + negative + neutral; }
};

/// A random shape that fits a space of inertia (p, q); `degenerate` forces at
/// least one neutral direction.
Shape random_shape(Index p, Index q, Rng& rng, bool degenerate = false);

struct GeneratedSubspace {
  Matrix spanning;   // mixed spanning set of S
  Matrix isotropic;  // spanning set of the isotropic part S°
};

GeneratedSubspace generate_subspace(const SpacePtr& space, const Shape& shape, Rng& rng);

/// Spanning vectors of a subspace whose restricted form has the given
/// inertia, in a randomly rotated and mixed basis.
Matrix random_spanning_set(const SpacePtr& space, const Shape& shape, Rng& rng);
Subspace random_subspace(const SpacePtr& space, const Shape& shape, Rng& rng);

Operator random_operator(const SpacePtr& space, Rng& rng);
/// B = V K with R(B) = S.
Operator operator_with_range(const Subspace& s, Rng& rng);
/// R(B) = range and N(B) = kernel; needs dim range + dim kernel = n.
Operator operator_with_range_and_kernel(const Subspace& range, const Subspace& kernel, Rng& rng);
/// Columns drawn from `s`.
Operator operator_into(const Subspace& s, Rng& rng);

/// Euclidean basis of {x : v* G x = 0}, via a full-pivoting LU kernel.
Matrix companion_basis(const KreinSpace& space, const Matrix& v);

enum class Rhs {
  Generic,        // unstructured C
  InCompanionSum  // R(C) ⊆ S + S^[⊥], hence also R(C) ⊆ (S°)^[⊥]
};

/// A least-squares instance with R(B) of a prescribed shape. The flags are
/// known by construction, independently of the solvers.
struct IlsInstance {
  Operator b;
  Operator c;
  Shape shape;
  Matrix isotropic;
  bool inclusion = false;
  bool regular() const { return shape.neutral == 0; }
  bool nonnegative() const { return shape.negative == 0; }
  bool nonpositive() const { return shape.positive == 0; }
};

IlsInstance random_ils_instance(const SpacePtr& space, const Shape& shape, Rhs rhs, Rng& rng);

/// Rejection-sampled random_shape with the given total dimension.
Shape random_shape_of_dim(Index p, Index q, Index dim, Rng& rng);

/// A neutral vector in R(B) built from the restricted form, or an n-by-0
/// matrix when R(B) is definite.
Matrix neutral_in_range(const Operator& b);

/// |a - b| / max(1, |b|) in the spectral norm of the coordinates.
double rel_diff(const Matrix& a, const Matrix& b);
double rel_diff(const Operator& a, const Operator& b);

::testing::AssertionResult matrix_near(const Matrix& actual, const Matrix& expected, double tol);

}  // namespace krein::testing
