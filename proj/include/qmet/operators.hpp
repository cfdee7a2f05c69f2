// Copyright 2026 The qmet authors
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

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "qmet/errors.hpp"

namespace qmet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Dense complex Hermitian operator. Construction symmetrizes the input,
// (M + M^dagger)/2, so long evolution loops cannot drift away from
// Hermiticity; non-finite or non-square input is rejected.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }

  double trace() const { return entries_.trace().real(); }
  double frobenius_norm() const { return entries_.norm(); }

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

 private:
  Matrix entries_;
};

// Eigendecomposition of a Hermitian operator: real eigenvalues in
// descending order, eigenvectors as the matching unitary columns.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() *
           eigenvectors.adjoint();
  }
};

// Positive semi-definite, unit-trace Hermitian matrix. Construction
// validates eigenvalues >= -1e-10 and trace 1 within 1e-10.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op);
  explicit DensityMatrix(Matrix m) : DensityMatrix(HermitianOperator(std::move(m))) {}

  int dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }

  static DensityMatrix maximally_mixed(int dim);

 private:
  HermitianOperator op_;
};

Spectrum eig_hermitian(const HermitianOperator& h);

// U diag(f(lambda)) U^dagger via the spectral decomposition. Throws
// DomainError (with the eigenvalue) when f returns a non-finite value.
HermitianOperator func_hermitian(const HermitianOperator& h,
                                 const std::function<double(double)>& f);

// exp(H) by spectral calculus.
HermitianOperator exp_hermitian(const HermitianOperator& h);

// ln(H) by spectral calculus. Eigenvalues <= 1e-14 are rejected with
// DomainError: operands are expected to be strictly positive definite.
HermitianOperator log_hermitian(const HermitianOperator& h);

// sqrt(H) with negative eigenvalues clamped to zero, so exactly pure
// (rank-deficient) density matrices are acceptable operands.
HermitianOperator sqrt_hermitian_clamped(const HermitianOperator& h);

// Kronecker product; the first factor indexes the coarse blocks:
// (A (x) B)[a*dB + b, a'*dB + b'] = A[a,a'] * B[b,b'].
HermitianOperator tensor_product(const HermitianOperator& a,
                                 const HermitianOperator& b);
Matrix kron(const Matrix& a, const Matrix& b);

enum class Keep { First, Second };

// Partial trace of an operator on a bipartite space of dimensions
// (dim_a, dim_b), laid out in the tensor_product convention above.
HermitianOperator partial_trace(const HermitianOperator& ab, int dim_a,
                                int dim_b, Keep keep);
Matrix partial_trace(const Matrix& ab, int dim_a, int dim_b, Keep keep);

// AB - BA. Anti-Hermitian for Hermitian inputs, hence returned as a raw
// complex matrix.
Matrix commutator(const HermitianOperator& a, const HermitianOperator& b);

// Pauli matrices and the 2x2 identity.
HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

}  // namespace qmet
