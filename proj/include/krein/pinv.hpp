#pragma once

#include "krein/ils.hpp"

namespace krein {

/// Hilbert-metric pseudoinverse, used as the canonical {1,2}-inverse.
Operator one_two_inverse(const Operator& b);

/// B^† = P' B~ Q with Q the selfadjoint projection onto R(B) and P' the one
/// onto N(B)^[⊥]. Feasible iff R(B) and N(B) are regular.
SolveReport krein_moore_penrose(const Operator& b);

enum class InverseKind { MoorePenrose, NormalPair, OneTwo };

std::string_view to_string(InverseKind kind) noexcept;

struct GeneralizedInverse {
  Operator d;
  Projection q;  // B D, onto R(B)
  Projection p;  // I - D B, onto N(B)
  InverseKind kind;
};

/// Residuals of B X B = B, X B X = X and normality of B X and X B, relative
/// to the operator scale.
struct EqPseudoResiduals {
  double inner = 0.0;
  double outer = 0.0;
  double bd_normality = 0.0;
  double db_normality = 0.0;

  double max() const;
};

EqPseudoResiduals check_eq_pseudo(const Operator& b, const Operator& d);

/// D = (I - P) B~ Q for normal projections Q onto R(B) and P onto N(B).
/// Throws BadProjection when Q or P is not a normal projection with the
/// required range.
GeneralizedInverse generalized_inverse(const Operator& b, const Projection& q, const Projection& p);

/// Same, with the canonical normal projections onto R(B) and N(B).
GeneralizedInverse generalized_inverse(const Operator& b);

/// Recovers Q := B D and P := I - D B from a given D. The kind is OneTwo when
/// either projection fails to be normal.
GeneralizedInverse factor_generalized_inverse(const Operator& b, const Operator& d);

/// D = (I - P') B'~ Q^#Q with B' = Q^#B, for Q normal onto R(B) and P' normal
/// onto N(B^#B). Throws BadProjection.
Operator reduced_generalized_inverse(const Operator& b, const Projection& q, const Projection& p_prime);

/// Residuals of B'DB' = B', DB'D = D, B'D = Q^#Q and normality of DB'.
struct EqPseudo2Residuals {
  double inner = 0.0;
  double outer = 0.0;
  double range_projection = 0.0;
  double db_normality = 0.0;

  double max() const;
};

EqPseudo2Residuals check_eq_pseudo2(const Operator& b, const Projection& q, const Operator& d);

/// min X^#X over the indefinite minimum solutions of B X - C = 0. Feasible iff
/// R(B) and N(B^#B) are nonnegative and R(C) ⊆ B(N(B^#B)^[⊥]) + R(B)^[⊥].
/// The solution is X1 = D C with D from reduced_generalized_inverse; the
/// solution set is X1 + L(H, N(B^#B)°).
SolveReport solve_min_ims_norm(const Operator& b, const Operator& c, const SolveOptions& options = {});

/// Cross-validates the variational characterisation of B^†. Records the three
/// equivalent conditions (min problem solvable for C = I; R(B), N(B)
/// uniformly positive; B^† exists with R(B), N(B) nonnegative). When they
/// hold, compares the min-norm solution with B^† and B^† C with the min-norm
/// solution for random C.
SolveReport mp_variational_check(const Operator& b, const SolveOptions& options = {});

}  // namespace krein
