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

#include "qmet/operators.hpp"

#include <cmath>
#include <utility>

namespace qmet {

namespace {

constexpr double kDensityEigTol = 1e-10;
constexpr double kDensityTraceTol = 1e-10;
constexpr double kLogEigTol = 1e-14;

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix m) {
  if (m.rows() != m.cols()) {
    throw InvalidOperatorError("operator must be square, got " +
                               std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()));
  }
  if (m.rows() < 1) {
    throw InvalidOperatorError("operator must be at least 1x1");
  }
  if (!all_finite(m)) {
    throw InvalidOperatorError("operator has non-finite entries");
  }
  entries_ = 0.5 * (m + m.adjoint().eval());
}

HermitianOperator HermitianOperator::identity(int dim) {
  return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op_.matrix(),
                                               Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < -kDensityEigTol) {
    throw InvalidOperatorError("density matrix has negative eigenvalue " +
                               std::to_string(min_eig));
  }
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kDensityTraceTol) {
    throw InvalidOperatorError("density matrix trace " + std::to_string(tr) +
                               " differs from 1");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix(Matrix::Identity(dim, dim) / double(dim)));
}

Spectrum eig_hermitian(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw InvalidOperatorError("eigendecomposition failed");
  }
  // Eigen returns ascending order; flip to descending.
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

HermitianOperator func_hermitian(const HermitianOperator& h,
                                 const std::function<double(double)>& f) {
  const Spectrum s = eig_hermitian(h);
  RealVector mapped(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double v = f(s.eigenvalues[i]);
    if (!std::isfinite(v)) {
      throw DomainError("scalar function not finite at eigenvalue " +
                            std::to_string(s.eigenvalues[i]),
                        s.eigenvalues[i]);
    }
    mapped[i] = v;
  }
  return HermitianOperator(s.eigenvectors * mapped.asDiagonal() *
                           s.eigenvectors.adjoint());
}

HermitianOperator exp_hermitian(const HermitianOperator& h) {
  return func_hermitian(h, [](double x) { return std::exp(x); });
}

HermitianOperator log_hermitian(const HermitianOperator& h) {
  const Spectrum s = eig_hermitian(h);
  const double min_eig = s.eigenvalues[s.eigenvalues.size() - 1];
  if (min_eig <= kLogEigTol) {
    throw DomainError(
        "log requires strictly positive spectrum; smallest eigenvalue " +
            std::to_string(min_eig),
        min_eig);
  }
  RealVector mapped = s.eigenvalues.array().log();
  return HermitianOperator(s.eigenvectors * mapped.asDiagonal() *
                           s.eigenvectors.adjoint());
}

HermitianOperator sqrt_hermitian_clamped(const HermitianOperator& h) {
  const Spectrum s = eig_hermitian(h);
  RealVector mapped(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    mapped[i] = s.eigenvalues[i] > 0.0 ? std::sqrt(s.eigenvalues[i]) : 0.0;
  }
  return HermitianOperator(s.eigenvectors * mapped.asDiagonal() *
                           s.eigenvectors.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Eigen::Index ra = a.rows(), ca = a.cols();
  const Eigen::Index rb = b.rows(), cb = b.cols();
  Matrix out(ra * rb, ca * cb);
  for (Eigen::Index i = 0; i < ra; ++i) {
    for (Eigen::Index j = 0; j < ca; ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

HermitianOperator tensor_product(const HermitianOperator& a,
                                 const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

Matrix partial_trace(const Matrix& ab, int dim_a, int dim_b, Keep keep) {
  if (ab.rows() != Eigen::Index(dim_a) * dim_b || ab.rows() != ab.cols()) {
    throw DimensionError("partial_trace: operator is " +
                         std::to_string(ab.rows()) + "x" +
                         std::to_string(ab.cols()) + ", expected " +
                         std::to_string(dim_a * dim_b) + " square");
  }
  if (keep == Keep::First) {
    Matrix out = Matrix::Zero(dim_a, dim_a);
    for (int a = 0; a < dim_a; ++a) {
      for (int ap = 0; ap < dim_a; ++ap) {
        Complex sum = 0.0;
        for (int b = 0; b < dim_b; ++b) {
          sum += ab(a * dim_b + b, ap * dim_b + b);
        }
        out(a, ap) = sum;
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (int b = 0; b < dim_b; ++b) {
    for (int bp = 0; bp < dim_b; ++bp) {
      Complex sum = 0.0;
      for (int a = 0; a < dim_a; ++a) {
        sum += ab(a * dim_b + b, a * dim_b + bp);
      }
      out(b, bp) = sum;
    }
  }
  return out;
}

HermitianOperator partial_trace(const HermitianOperator& ab, int dim_a,
                                int dim_b, Keep keep) {
  return HermitianOperator(partial_trace(ab.matrix(), dim_a, dim_b, keep));
}

Matrix commutator(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("commutator: dimensions " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()) + " differ");
  }
  return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

HermitianOperator pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return HermitianOperator(m);
}

HermitianOperator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

}  // namespace qmet
