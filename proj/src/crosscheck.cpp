#include "krein/crosscheck.hpp"

#include <algorithm>

#include "krein/error.hpp"
#include "krein/ils.hpp"
#include "krein/pinv.hpp"

namespace krein {

oracle::Certificate hilbert_limit_check(const Operator& b, const Operator& c, double tolerance) {
  require_same_space(b.space(), c.space());
  const auto& space = *b.space();
  const Index n = space.dim();
  if (space.gram() != Matrix::Identity(n, n)) {
    throw Error(ErrorCode::InvalidSignature, "Hilbert limit check needs G = I");
  }
  auto rel = [](double v, double s) { return v / std::max(1.0, s); };

  const Matrix& bm = b.matrix();
  const Matrix& cm = c.matrix();
  const Matrix classical = oracle::classical_pinv(bm);
  const Matrix residual = bm * classical * cm - cm;
  const Matrix classical_value = residual.adjoint() * residual;

  oracle::Certificate cert;
  cert.trials = 1;
  double worst = rel((b.adjoint().matrix() - bm.adjoint()).norm(), bm.norm());

  const SolveReport mp = krein_moore_penrose(b);
  if (!mp.feasible) {
    cert.verdict = false;
  } else {
    worst = std::max(worst, rel((mp.solution().matrix() - classical).norm(), classical.norm()));
  }
  const SolveReport ims = solve_ims(b, c);
  if (!ims.feasible) {
    cert.verdict = false;
  } else {
    worst = std::max(worst, rel((ims.value->matrix() - classical_value).norm(), cm.squaredNorm()));
  }
  cert.max_residual = worst;
  if (worst > tolerance) cert.verdict = false;
  return cert;
}

}  // namespace krein
