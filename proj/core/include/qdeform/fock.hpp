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

#pragma once

// Truncated Fock-space linear algebra: number-basis vectors and dense
// operators on span{|0>, ..., |dim-1>}.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qdeform {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultDim = 64;
/// States are flagged when tail_mass(v, dim - kTailWindow) exceeds kTailTolerance.
inline constexpr std::size_t kTailWindow = 8;
inline constexpr double kTailTolerance = 1e-10;

/// Amplitudes <n|v> over the truncated number basis.
class FockVector {
 public:
  explicit FockVector(std::size_t dim);  // zero vector
  explicit FockVector(Eigen::VectorXcd amp);

  static FockVector basis(std::size_t dim, std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Complex operator[](std::size_t n) const { return amp_(static_cast<Eigen::Index>(n)); }

  double norm() const { return amp_.norm(); }
  double squared_norm() const { return amp_.squaredNorm(); }
  FockVector normalized() const;

 private:
  Eigen::VectorXcd amp_;
};

/// Dense dim x dim complex matrix acting on FockVector.
class FockOperator {
 public:
  explicit FockOperator(Eigen::MatrixXcd mat);

  static FockOperator zero(std::size_t dim);
  static FockOperator identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return mat_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return mat_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  FockOperator adjoint() const;

  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(Complex s, const FockOperator& a);
  friend FockVector operator*(const FockOperator& a, const FockVector& v);

 private:
  Eigen::MatrixXcd mat_;
};

/// Two-mode amplitudes, flat index n1 * dim + n2.
class TwoModeVector {
 public:
  TwoModeVector(std::size_t dim, Eigen::VectorXcd amp);

  std::size_t dim() const { return dim_; }
  const Eigen::VectorXcd& amplitudes() const { return amp_; }
  Complex at(std::size_t n1, std::size_t n2) const {
    return amp_(static_cast<Eigen::Index>(n1 * dim_ + n2));
  }
  double norm() const { return amp_.norm(); }

  /// amp reshaped to a dim x dim matrix with row n1 and column n2.
  Eigen::MatrixXcd as_matrix() const;

  friend TwoModeVector operator+(const TwoModeVector& a, const TwoModeVector& b);
  friend TwoModeVector operator*(Complex s, const TwoModeVector& a);

 private:
  std::size_t dim_;
  Eigen::VectorXcd amp_;
};

/// Truncation adequacy of a state.
struct TruncationCheck {
  double tail = 0.0;
  bool flagged = false;
};

FockOperator make_annihilator(std::size_t dim);
FockOperator make_creation(std::size_t dim);
FockOperator make_number(std::size_t dim);

/// e^{-|alpha|^2/2} alpha^n / sqrt(n!) on n < dim, not renormalized.
FockVector coherent_state(Complex alpha, std::size_t dim);

/// exp(M); throws InvalidOperand on non-finite entries.
FockOperator matrix_exponential(const FockOperator& m);

Complex inner_product(const FockVector& u, const FockVector& v);
Complex inner_product(const TwoModeVector& u, const TwoModeVector& v);
TwoModeVector tensor_product(const FockVector& u, const FockVector& v);

/// sum_{n >= k} |amp[n]|^2 / |v|^2.
double tail_mass(const FockVector& v, std::size_t k);

/// tail_mass at dim - kTailWindow (or 0 for tiny dims) against kTailTolerance.
TruncationCheck check_truncation(const FockVector& v);

}  // namespace qdeform
