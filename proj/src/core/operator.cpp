#include "krein/operator.hpp"

#include "krein/error.hpp"
#include "krein/linalg.hpp"

namespace krein {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (!a || !b || !(a == b || a->same_form(*b))) {
    throw Error(ErrorCode::SpaceMismatch, "operands belong to different Krein spaces");
  }
}

Operator::Operator(SpacePtr space, Matrix matrix) : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (!space_) throw Error(ErrorCode::SpaceMismatch, "operator without a space");
  if (matrix_.rows() != space_->dim() || matrix_.cols() != space_->dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator size does not match the space");
  }
}

Operator Operator::identity(const SpacePtr& space) {
  return {space, Matrix::Identity(space->dim(), space->dim())};
}

Operator Operator::zero(const SpacePtr& space) { return {space, Matrix::Zero(space->dim(), space->dim())}; }

Operator Operator::adjoint() const { return {space_, space_->gram_inverse() * matrix_.adjoint() * space_->gram()}; }

Operator Operator::rebind(const SpacePtr& other) const {
  require_same_space(space_, other);
  return {other, matrix_};
}

double Operator::norm() const { return linalg::hilbert_norm(*space_, matrix_); }

Operator& Operator::operator+=(const Operator& rhs) {
  require_same_space(space_, rhs.space_);
  matrix_ += rhs.matrix_;
  return *this;
}

Operator& Operator::operator-=(const Operator& rhs) {
  require_same_space(space_, rhs.space_);
  matrix_ -= rhs.matrix_;
  return *this;
}

Operator operator*(const Operator& lhs, const Operator& rhs) {
  require_same_space(lhs.space_, rhs.space_);
  return {lhs.space_, lhs.matrix_ * rhs.matrix_};
}

}  // namespace krein
