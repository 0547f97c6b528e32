#pragma once

#include "krein/projections.hpp"
#include "krein/report.hpp"

namespace krein {

/// B admits an indefinite inverse iff R(B) is regular.
bool has_indefinite_inverse(const Operator& b);

/// Rank test R(B^#) = R(B^#B), equivalent to regularity of R(B).
bool adjoint_range_criterion(const Operator& b);

/// N(B^#B), with the rank cutoff referenced to |B|^2 so that a Gram
/// operator made purely of roundoff is recognised as zero.
Subspace gram_kernel(const Operator& b);

/// Minimum-Hilbert-norm solution of the normal equation B^#B X = B^#C.
Operator normal_equation_solution(const Operator& b, const Operator& c);

/// |B^#(B X - C)| relative to max(1, |B|(|B||X| + |C|)).
double normal_equation_residual(const Operator& b, const Operator& c, const Operator& x);

/// (B X - C)^#(B X - C)
Operator residual_square(const Operator& b, const Operator& c, const Operator& x);

/// Whether every column of C lies in S + S^[⊥].
bool range_in_companion_sum(const Subspace& s, const Operator& c);

/// Solutions of B^#(B X - I) = 0. Feasible iff R(B) is regular; the manifold is
/// X0 + L(H, N(B)) with B X0 = Q.
SolveReport indefinite_inverse(const Operator& b);

/// Solutions of B^#(B X - C) = 0. Feasible iff R(C) ⊆ R(B) + R(B)^[⊥]; the
/// manifold is X0 + L(H, N(B^#B)).
SolveReport indefinite_inverse_in_range(const Operator& b, const Operator& c);

/// Indefinite minimum solutions of B X - C = 0: min (BX - C)^#(BX - C) in the
/// positive-operator order. Feasible iff R(C) ⊆ R(B) + R(B)^[⊥] and R(B) is
/// nonnegative.
SolveReport solve_ims(const Operator& b, const Operator& c, const SolveOptions& options = {});

/// Maximisation counterpart of solve_ims; needs R(B) nonpositive.
SolveReport solve_imax(const Operator& b, const Operator& c, const SolveOptions& options = {});

/// X solves the normal equation and the oracle finds no better competitor.
bool verify_ims(const Operator& x, const Operator& b, const Operator& c, const SolveOptions& options = {0, 200});

}  // namespace krein
