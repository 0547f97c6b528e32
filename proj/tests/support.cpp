#include "support.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Dense>

#include "krein/linalg.hpp"

namespace krein::testing {

Matrix gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> dist;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = Scalar(dist(rng), dist(rng));
  return m;
}

Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r ? static_cast<Index>(rows.begin()->size()) : 0;
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

SpacePtr minkowski(Index p, Index q) {
  Matrix g = Matrix::Zero(p + q, p + q);
  for (Index i = 0; i < p + q; ++i) g(i, i) = i < p ? 1.0 : -1.0;
  return KreinSpace::make(g);
}

SpacePtr random_space(Index p, Index q, Rng& rng) {
  const Index n = p + q;
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = (i < p ? 1.0 : -1.0) * mag(rng);
  const Matrix a = Matrix::Identity(n, n) + 0.3 * gaussian(n, n, rng);
  // Random permutation so that the signs are not sorted.
  std::vector<Index> perm(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix pm = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) pm(i, perm[static_cast<std::size_t>(i)]) = 1.0;
  const Matrix dd = pm.transpose() * d * pm;
  Matrix g = a.adjoint() * dd * a;
  g = ((g + g.adjoint()) / 2.0).eval();
  return KreinSpace::make(g);
}

Matrix random_g_unitary(const KreinSpace& space, Rng& rng, double size) {
  const Index n = space.dim();
  const Matrix raw = gaussian(n, n, rng);
  const Matrix k = (raw - raw.adjoint()) * (size / (2.0 * std::sqrt(double(n))));
  const Matrix a = space.gram_inverse() * k;
  const Matrix id = Matrix::Identity(n, n);
  return (id - a).partialPivLu().solve(id + a);
}

SpacePtr alternative_decomposition(const SpacePtr& space, Rng& rng) {
  const Matrix u = random_g_unitary(*space, rng, 0.8);
  const Matrix j = u * space->signature() * u.inverse();
  return space->with_signature(j);
}

Shape random_shape(Index p, Index q, Rng& rng, bool degenerate) {
  auto pick = [&](Index lo, Index hi) {
    return lo >= hi ? lo : std::uniform_int_distribution<Index>(lo, hi)(rng);
  };
  Shape s;
  s.neutral = pick(degenerate ? 1 : 0, std::min(p, q));
  s.positive = pick(0, p - s.neutral);
  s.negative = pick(0, q - s.neutral);
  return s;
}

GeneratedSubspace generate_subspace(const SpacePtr& space, const Shape& shape, Rng& rng) {
  const Matrix& wp = space->basis_plus();
  const Matrix& wm = space->basis_minus();
  const Index n = space->dim();
  Matrix v(n, shape.dim());
  Index col = 0;
  for (Index i = 0; i < shape.neutral; ++i) v.col(col++) = wp.col(i) + wm.col(i);
  for (Index i = 0; i < shape.positive; ++i) v.col(col++) = wp.col(shape.neutral + i);
  for (Index i = 0; i < shape.negative; ++i) v.col(col++) = wm.col(shape.neutral + i);
  const Matrix u = random_g_unitary(*space, rng);
  const Matrix mix = gaussian(shape.dim(), shape.dim(), rng) + 2.0 * Matrix::Identity(shape.dim(), shape.dim());
  const Matrix rotated = u * v;
  return {rotated * mix, rotated.leftCols(shape.neutral)};
}

Matrix random_spanning_set(const SpacePtr& space, const Shape& shape, Rng& rng) {
  return generate_subspace(space, shape, rng).spanning;
}

Subspace random_subspace(const SpacePtr& space, const Shape& shape, Rng& rng) {
  return Subspace::span(space, random_spanning_set(space, shape, rng));
}

Operator random_operator(const SpacePtr& space, Rng& rng) { return {space, gaussian(space->dim(), space->dim(), rng)}; }

Operator operator_with_range(const Subspace& s, Rng& rng) {
  const Index n = s.ambient_dim();
  return {s.space(), s.basis() * gaussian(s.dim(), n, rng)};
}

Operator operator_with_range_and_kernel(const Subspace& range, const Subspace& kernel, Rng& rng) {
  const auto& space = *range.space();
  // Rows annihilate exactly the kernel: Y^* M with Y a Hilbert-orthonormal
  // basis of the Hilbert complement of the kernel.
  const Matrix complement = kernel.dim() == 0
                                ? Matrix(space.metric_sqrt_inverse())
                                : linalg::kernel_with_rank(space, kernel.basis().adjoint() * space.metric(), kernel.dim());
  const Index k = range.dim();
  Matrix core = gaussian(k, k, rng) + 2.0 * Matrix::Identity(k, k);
  return {range.space(), range.basis() * core * complement.adjoint() * space.metric()};
}

Operator operator_into(const Subspace& s, Rng& rng) { return operator_with_range(s, rng); }

Matrix companion_basis(const KreinSpace& space, const Matrix& v) {
  const Index n = space.dim();
  if (v.cols() == 0) return Matrix::Identity(n, n);
  Eigen::FullPivLU<Matrix> lu(v.adjoint() * space.gram());
  lu.setThreshold(1e-10);
  return lu.kernel();
}

IlsInstance random_ils_instance(const SpacePtr& space, const Shape& shape, Rhs rhs, Rng& rng) {
  const Index n = space->dim();
  const GeneratedSubspace gen = generate_subspace(space, shape, rng);
  const Matrix b = shape.dim() ? Matrix(gen.spanning * gaussian(shape.dim(), n, rng)) : Matrix(Matrix::Zero(n, n));
  Matrix c;
  bool inclusion = true;
  if (rhs == Rhs::Generic) {
    c = gaussian(n, n, rng);
    // A generic C escapes S + S^[⊥] exactly when S is degenerate.
    inclusion = shape.neutral == 0;
  } else {
    const Matrix z = companion_basis(*space, gen.spanning);
    c = b * gaussian(n, n, rng);
    if (z.cols()) c += z * gaussian(z.cols(), n, rng);
  }
  return {Operator(space, b), Operator(space, c), shape, gen.isotropic, inclusion};
}

double rel_diff(const Matrix& a, const Matrix& b) {
  const double scale = std::max(1.0, b.size() ? b.jacobiSvd().singularValues()(0) : 0.0);
  const Matrix d = a - b;
  return d.size() ? d.jacobiSvd().singularValues()(0) / scale : 0.0;
}

double rel_diff(const Operator& a, const Operator& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

::testing::AssertionResult matrix_near(const Matrix& actual, const Matrix& expected, double tol) {
  if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
    return ::testing::AssertionFailure() << "shape " << actual.rows() << "x" << actual.cols() << " vs "
                                         << expected.rows() << "x" << expected.cols();
  }
  const double err = actual.size() ? (actual - expected).cwiseAbs().maxCoeff() : 0.0;
  if (err <= tol) return ::testing::AssertionSuccess();
  std::ostringstream os;
  os << "max entry error " << err << " > " << tol << "\nactual:\n" << actual << "\nexpected:\n" << expected;
  return ::testing::AssertionFailure() << os.str();
}

Shape random_shape_of_dim(Index p, Index q, Index dim, Rng& rng) {
  for (;;) {
    const Shape sh = random_shape(p, q, rng, std::uniform_int_distribution<int>(0, 2)(rng) == 0);
    if (sh.dim() == dim) return sh;
  }
}

Matrix neutral_in_range(const Operator& b) {
  const Subspace range = Subspace::range(b);
  if (range.dim() == 0) return Matrix(b.space()->dim(), 0);
  const Matrix& v = range.basis();
  const Matrix h = v.adjoint() * b.space()->gram() * v;
  Eigen::SelfAdjointEigenSolver<Matrix> eig((h + h.adjoint()) / 2.0);
  const auto& lam = eig.eigenvalues();
  const Index k = lam.size();
  const double top = std::max(std::abs(lam(0)), std::abs(lam(k - 1)));
  for (Index i = 0; i < k; ++i) {
    if (std::abs(lam(i)) <= 1e-10 * std::max(1.0, top)) return v * eig.eigenvectors().col(i);
  }
  if (lam(0) > 0 || lam(k - 1) < 0) return Matrix(b.space()->dim(), 0);
  // Ascending eigenvalues: mix the most negative and most positive directions.
  const Matrix mix = eig.eigenvectors().col(0) / std::sqrt(-lam(0)) + eig.eigenvectors().col(k - 1) / std::sqrt(lam(k - 1));
  return v * mix;
}

}  // namespace krein::testing
