#pragma once

#include "krein/oracle.hpp"

namespace krein {

/// On a space with G = I, compares the Krein machinery with classical linear
/// algebra: the adjoint with the conjugate transpose, the Moore-Penrose
/// inverse with the classical pseudoinverse and the minimum value with the
/// classical least-squares residual Gram matrix. Throws InvalidSignature when
/// G != I.
oracle::Certificate hilbert_limit_check(const Operator& b, const Operator& c, double tolerance = 1e-10);

}  // namespace krein
