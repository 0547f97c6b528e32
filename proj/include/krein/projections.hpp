#pragma once

#include <string_view>

#include "krein/subspace.hpp"

namespace krein {

enum class ProjectionKind { Selfadjoint, Normal, Oblique };

std::string_view to_string(ProjectionKind kind) noexcept;

struct Projection {
  Operator op;
  Subspace range;
  ProjectionKind kind;
};

/// Residuals of the defining identities of a projection, all relative to the
/// Hilbert norm of the operator.
struct ProjectionResiduals {
  double idempotency = 0.0;  // |Q^2 - Q|
  double normality = 0.0;    // |Q Q^# - Q^# Q|
  double selfadjointness = 0.0;  // |Q - Q^#|
  double range_gap = 0.0;    // gap between R(Q) and the stored range
};

ProjectionResiduals check_projection(const Projection& q);

/// Q = V (V* G V)^{-1} V* G for a regular S. Throws NotRegular otherwise.
Projection selfadjoint_projection(const Subspace& s);

/// Projection onto `range` along `null`. Throws NotComplementary unless
/// range ∔ null = H.
Projection oblique_projection(const Subspace& range, const Subspace& null);

struct AndoSplit {
  Projection plus;
  Projection minus;
};

/// Q = Q+ + Q- with R(Q+) uniformly positive, R(Q-) uniformly negative and
/// Q+ Q- = Q- Q+ = 0, for the space's fundamental decomposition. Throws
/// NotSelfadjoint when Q^# != Q.
AndoSplit ando_split(const Projection& q);

/// A normal projection (Q Q^# = Q^# Q) with range S. Regular subspaces get
/// their selfadjoint projection. For a degenerate S = S° ⊕ S1 the isotropic
/// part S° is paired with N = J_K S° inside K = S1^[⊥], and
/// Q = Q1 + E P_R (I - Q1), where Q1 projects onto S1, P_R is the selfadjoint
/// projection onto R = S° ∔ N and E maps R onto S° along N.
Projection normal_projection(const Subspace& s);

/// Whether Q^#(I - Q) y = 0 for a normal projection Q.
bool companion_identity_check(const Projection& q, const Vector& y);

/// y ∈ S + S^[⊥], decided by a rank test.
bool in_sum_with_companion(const Subspace& s, const Vector& y);

}  // namespace krein
