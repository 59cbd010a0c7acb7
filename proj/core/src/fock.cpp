// Copyright 2026 The qdeform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdeform/fock.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "qdeform/error.hpp"

namespace qdeform {
namespace {

void require_dim(std::size_t dim) {
  if (dim == 0) throw InvalidDimension("Fock dimension must be at least 1");
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (!m.allFinite()) throw InvalidOperand(std::string(what) + " has non-finite entries");
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

}  // namespace

FockVector::FockVector(std::size_t dim) {
  require_dim(dim);
  amp_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
}

FockVector::FockVector(Eigen::VectorXcd amp) : amp_(std::move(amp)) {
  require_dim(static_cast<std::size_t>(amp_.size()));
  require_finite(amp_, "FockVector");
}

FockVector FockVector::basis(std::size_t dim, std::size_t n) {
  FockVector v(dim);
  if (n >= dim) throw OutOfRange("basis index " + std::to_string(n) + " >= dim");
  v.amp_(static_cast<Eigen::Index>(n)) = 1.0;
  return v;
}

FockVector FockVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw NullState("cannot normalize the zero vector");
  return FockVector(Eigen::VectorXcd(amp_ / nrm));
}

FockOperator::FockOperator(Eigen::MatrixXcd mat) : mat_(std::move(mat)) {
  if (mat_.rows() != mat_.cols()) throw DimensionMismatch("FockOperator must be square");
  require_dim(static_cast<std::size_t>(mat_.rows()));
  require_finite(mat_, "FockOperator");
}

FockOperator FockOperator::zero(std::size_t dim) {
  require_dim(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  return FockOperator(Eigen::MatrixXcd::Zero(n, n));
}

FockOperator FockOperator::identity(std::size_t dim) {
  require_dim(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  return FockOperator(Eigen::MatrixXcd::Identity(n, n));
}

FockOperator FockOperator::adjoint() const { return FockOperator(mat_.adjoint()); }

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim());
  return FockOperator(a.mat_ + b.mat_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim());
  return FockOperator(a.mat_ - b.mat_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a.dim(), b.dim());
  return FockOperator(a.mat_ * b.mat_);
}

FockOperator operator*(Complex s, const FockOperator& a) { return FockOperator(s * a.mat_); }

FockVector operator*(const FockOperator& a, const FockVector& v) {
  require_same_dim(a.dim(), v.dim());
  return FockVector(Eigen::VectorXcd(a.mat_ * v.amplitudes()));
}

TwoModeVector::TwoModeVector(std::size_t dim, Eigen::VectorXcd amp)
    : dim_(dim), amp_(std::move(amp)) {
  require_dim(dim);
  if (static_cast<std::size_t>(amp_.size()) != dim * dim) {
    throw DimensionMismatch("two-mode amplitude array must have dim^2 entries");
  }
  require_finite(amp_, "TwoModeVector");
}

Eigen::MatrixXcd TwoModeVector::as_matrix() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  // Row-major reshape matches the n1 * dim + n2 index convention.
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = amp_(i * n + j);
  }
  return m;
}

TwoModeVector operator+(const TwoModeVector& a, const TwoModeVector& b) {
  require_same_dim(a.dim_, b.dim_);
  return TwoModeVector(a.dim_, a.amp_ + b.amp_);
}

TwoModeVector operator*(Complex s, const TwoModeVector& a) {
  return TwoModeVector(a.dim_, s * a.amp_);
}

FockOperator make_annihilator(std::size_t dim) {
  FockOperator::zero(dim);  // validates dim
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) m(k - 1, k) = std::sqrt(static_cast<double>(k));
  return FockOperator(std::move(m));
}

FockOperator make_creation(std::size_t dim) { return make_annihilator(dim).adjoint(); }

FockOperator make_number(std::size_t dim) {
  require_dim(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
  return FockOperator(std::move(m));
}

FockVector coherent_state(Complex alpha, std::size_t dim) {
  require_dim(dim);
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw InvalidOperand("coherent amplitude must be finite");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::VectorXcd amp(n);
  amp(0) = std::exp(-0.5 * std::norm(alpha));
  for (Eigen::Index k = 1; k < n; ++k) {
    amp(k) = amp(k - 1) * alpha / std::sqrt(static_cast<double>(k));
  }
  return FockVector(std::move(amp));
}

FockOperator matrix_exponential(const FockOperator& m) {
  require_finite(m.matrix(), "matrix_exponential input");
  Eigen::MatrixXcd result = m.matrix().exp();
  if (!result.allFinite()) throw InvalidOperand("matrix exponential overflowed");
  return FockOperator(std::move(result));
}

Complex inner_product(const FockVector& u, const FockVector& v) {
  require_same_dim(u.dim(), v.dim());
  return u.amplitudes().dot(v.amplitudes());  // conjugates u
}

Complex inner_product(const TwoModeVector& u, const TwoModeVector& v) {
  require_same_dim(u.dim(), v.dim());
  return u.amplitudes().dot(v.amplitudes());
}

TwoModeVector tensor_product(const FockVector& u, const FockVector& v) {
  require_same_dim(u.dim(), v.dim());
  const auto n = static_cast<Eigen::Index>(u.dim());
  Eigen::VectorXcd amp(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) amp(i * n + j) = u.amplitudes()(i) * v.amplitudes()(j);
  }
  return TwoModeVector(u.dim(), std::move(amp));
}

double tail_mass(const FockVector& v, std::size_t k) {
  if (k >= v.dim()) {
    throw OutOfRange("tail index " + std::to_string(k) + " out of range for dim " +
                     std::to_string(v.dim()));
  }
  const double total = v.squared_norm();
  if (total == 0.0) throw NullState("tail_mass of the zero vector");
  const auto start = static_cast<Eigen::Index>(k);
  return v.amplitudes().tail(v.amplitudes().size() - start).squaredNorm() / total;
}

TruncationCheck check_truncation(const FockVector& v) {
  const std::size_t k = v.dim() > kTailWindow ? v.dim() - kTailWindow : v.dim() - 1;
  TruncationCheck check;
  check.tail = k == 0 ? 0.0 : tail_mass(v, k);
  check.flagged = check.tail > kTailTolerance;
  return check;
}

}  // namespace qdeform
