#pragma once

#include "krein/ils.hpp"

namespace krein {

/// B = B+ + B- with B± = P± B, P± the Hilbert-orthogonal projections onto
/// the positive and nonpositive parts of R(B) for the space's signature.
struct OperatorSplit {
  Operator b_plus;
  Operator b_minus;
  Subspace s_plus;
  Subspace s_minus;
  Matrix j_used;
};

OperatorSplit split_operator(const Operator& b);

/// Min-max solution of B X - C = 0 for the space's fundamental decomposition.
/// Feasible iff R(C) ⊆ R(B) + R(B)^[⊥]. The returned representative is a
/// solution of the normal equation.
SolveReport solve_immso(const Operator& b, const Operator& c, const SolveOptions& options = {});

/// Z0 = Z1 + Z2 with Z1 a normal-equation solution and R(B Z2) neutral.
/// Throws InfeasibleInstance when no min-max solution exists.
bool verify_immso(const Operator& z0, const Operator& b, const Operator& c);

struct MinMaxValues {
  Operator minmax;  // min over X of max over Y
  Operator maxmin;  // max over Y of min over X
  /// C^#(I - Q)C and C^#(I - Q-)(I - Q+)C; present when R(B) is regular.
  std::optional<Operator> closed_form;
  std::optional<Operator> factored;
};

/// Both iterated values of (B+ X + B- Y - C)^#(B+ X + B- Y - C), each obtained
/// by chaining the inner and outer extremum solvers. Throws InfeasibleInstance.
MinMaxValues minmax_value_identity(const Operator& b, const Operator& c);

/// Checks the defining property directly: (B Z0 - C)^#(B Z0 - C) equals the
/// max-min value for the space's decomposition. Throws InfeasibleInstance.
bool attains_minmax_value(const Operator& z0, const Operator& b, const Operator& c);

}  // namespace krein
