#include "krein/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "krein/error.hpp"

namespace krein::oracle {

namespace {

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

// Positivity of the Hermitian form H = G T against a caller supplied scale.
Certificate check_form(const Matrix& form, double scale, double tolerance) {
  Certificate cert;
  cert.trials = 1;
  if (scale == 0.0) return cert;

  const Matrix skew = (form - form.adjoint()) / 2.0;
  const Matrix herm = (form + form.adjoint()) / 2.0;
  const double asym = spectral_norm(skew);
  cert.max_residual = asym / scale;

  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  cert.min_eigen_seen = eig.eigenvalues()(0);
  if (asym > tolerance * scale) {
    // Non-real values of x* G T x exist: take the dominant direction of the
    // skew part, where Im(x* H x) = |lambda|.
    const Matrix iskew = Scalar(0.0, -1.0) * skew;
    Eigen::SelfAdjointEigenSolver<Matrix> skew_eig((iskew + iskew.adjoint()) / 2.0);
    const Index last = skew_eig.eigenvalues().size() - 1;
    const bool low = std::abs(skew_eig.eigenvalues()(0)) > std::abs(skew_eig.eigenvalues()(last));
    cert.verdict = false;
    cert.witness = skew_eig.eigenvectors().col(low ? 0 : last);
    return cert;
  }
  if (cert.min_eigen_seen < -tolerance * scale) {
    cert.verdict = false;
    cert.witness = eig.eigenvectors().col(0);
  }
  return cert;
}

Matrix residual_square(const Matrix& gram, const Matrix& b, const Matrix& c, const Matrix& x) {
  const Matrix r = b * x - c;
  return krein_adjoint(gram, r) * r;
}

Matrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> dist;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Scalar(dist(rng), dist(rng));
  return m;
}

// Competitor schedule: unstructured Gaussian operators, coordinate
// perturbations of the candidate, and small perturbations of the candidate.
Matrix competitor(std::mt19937_64& rng, const Matrix& x0, int trial) {
  const Index n = x0.rows();
  const double size = std::max(1.0, x0.norm());
  switch (trial % 3) {
    case 0:
      return size * gaussian(rng, n, n);
    case 1: {
      std::uniform_int_distribution<Index> pick(0, n - 1);
      Matrix x = x0;
      const Index i = pick(rng);
      const Index j = pick(rng);
      x(i, j) += gaussian(rng, 1, 1)(0, 0);
      return x;
    }
    default: {
      std::uniform_real_distribution<double> expo(-6.0, 0.0);
      return x0 + std::pow(10.0, expo(rng)) * size * gaussian(rng, n, n);
    }
  }
}

enum class Sense { Min, Max };

Certificate certify_extremum(const Operator& b, const Operator& c, const Operator& x0, const CertifyOptions& options,
                             Sense sense) {
  require_same_space(b.space(), c.space());
  require_same_space(b.space(), x0.space());
  const Matrix& gram = b.space()->gram();
  const Matrix v0 = residual_square(gram, b.matrix(), c.matrix(), x0.matrix());
  // R^#R can cancel far below |G||R|^2, the size of its rounding error, so
  // the factor magnitudes enter the scale alongside the values themselves.
  const double gn = spectral_norm(gram);
  auto factor_size = [&](const Matrix& x) {
    const double r = spectral_norm(b.matrix() * x - c.matrix());
    return gn * r * r;
  };
  const double scale0 = spectral_norm(gram * v0) + factor_size(x0.matrix());

  std::mt19937_64 rng(options.seed);
  Certificate cert;
  cert.min_eigen_seen = std::numeric_limits<double>::infinity();
  for (int t = 0; t < options.trials; ++t) {
    const Matrix x = competitor(rng, x0.matrix(), t);
    const Matrix v = residual_square(gram, b.matrix(), c.matrix(), x);
    const Matrix delta = sense == Sense::Min ? Matrix(v - v0) : Matrix(v0 - v);
    const double scale = std::max(scale0 + spectral_norm(gram * v) + factor_size(x), 1e-300);
    Certificate step = check_form(gram * delta, scale, options.tolerance);
    cert.min_eigen_seen = std::min(cert.min_eigen_seen, step.min_eigen_seen / scale);
    cert.max_residual = std::max(cert.max_residual, step.max_residual);
    ++cert.trials;
    if (!step.verdict) {
      cert.verdict = false;
      cert.witness = step.witness;
      cert.competitor = x;
      return cert;
    }
  }
  if (options.trials == 0) cert.min_eigen_seen = 0.0;
  return cert;
}

}  // namespace

Matrix krein_adjoint(const Matrix& gram, const Matrix& t) { return gram.partialPivLu().solve(t.adjoint() * gram); }

Scalar quadratic_form(const Matrix& gram, const Matrix& t, const Vector& x) { return x.dot(gram * (t * x)); }

Certificate is_krein_positive(const Operator& t, double tolerance) {
  const Matrix form = t.space()->gram() * t.matrix();
  return check_form(form, spectral_norm(form), tolerance);
}

Certificate is_krein_positive(const Operator& t) { return is_krein_positive(t, t.space()->tolerances().num); }

Certificate operator_leq(const Operator& s, const Operator& t) { return is_krein_positive(t - s); }

bool witness_violates(const Operator& t, const Vector& x, double tolerance) {
  const Matrix& gram = t.space()->gram();
  const Scalar value = quadratic_form(gram, t.matrix(), x);
  const double scale = spectral_norm(gram * t.matrix()) * x.squaredNorm();
  return value.real() < -tolerance * scale || std::abs(value.imag()) > tolerance * scale;
}

Certificate certify_min(const Operator& b, const Operator& c, const Operator& x0, const CertifyOptions& options) {
  return certify_extremum(b, c, x0, options, Sense::Min);
}

Certificate certify_max(const Operator& b, const Operator& c, const Operator& x0, const CertifyOptions& options) {
  return certify_extremum(b, c, x0, options, Sense::Max);
}

Certificate certify_min_norm(const Operator& x1, const Matrix& directions, const CertifyOptions& options) {
  const Matrix& gram = x1.space()->gram();
  const Index n = x1.dim();
  if (directions.rows() != n) throw Error(ErrorCode::DimensionMismatch, "direction vectors have the wrong length");
  const Matrix v0 = krein_adjoint(gram, x1.matrix()) * x1.matrix();
  const double gn = spectral_norm(gram);
  const double scale0 = spectral_norm(gram * v0) + gn * std::pow(spectral_norm(x1.matrix()), 2);

  std::mt19937_64 rng(options.seed);
  Certificate cert;
  cert.min_eigen_seen = options.trials == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (int t = 0; t < options.trials; ++t) {
    Matrix y = x1.matrix();
    if (directions.cols() > 0) {
      const double size = std::pow(10.0, static_cast<double>(t % 4) - 2.0) * std::max(1.0, x1.matrix().norm());
      y += size * directions * gaussian(rng, directions.cols(), n);
    }
    const Matrix v = krein_adjoint(gram, y) * y;
    const double scale = std::max(scale0 + spectral_norm(gram * v) + gn * std::pow(spectral_norm(y), 2), 1e-300);
    Certificate step = check_form(gram * (v - v0), scale, options.tolerance);
    cert.min_eigen_seen = std::min(cert.min_eigen_seen, step.min_eigen_seen / scale);
    cert.max_residual = std::max(cert.max_residual, step.max_residual);
    ++cert.trials;
    if (!step.verdict) {
      cert.verdict = false;
      cert.witness = step.witness;
      cert.competitor = y;
      return cert;
    }
  }
  return cert;
}

Matrix classical_pinv(const Matrix& a) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(a);
  cod.setThreshold(1e-10);
  return cod.pseudoInverse();
}

}  // namespace krein::oracle
