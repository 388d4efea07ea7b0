// Copyright 2025-2026 The pptcone developers
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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pptcone {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Rectangular m x n matrix, the shape of a single Kraus element.
using RectMatrix = Eigen::MatrixXcd;

// Default relative tolerance for rank decisions and PSD checks.
inline constexpr double kDefaultTol = 1e-9;

// Subspace inclusion tolerance on the largest principal-angle sine.
inline constexpr double kAngleTol = 1e-7;

//------------------------------------------------------------------------
// Errors
//------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape or size of an argument does not match the declared dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition (Hermiticity, cone membership, rank, ...)
// failed; inputs violating it are rejected rather than repaired.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An iterative routine exhausted its budget without reaching a verdict.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

//------------------------------------------------------------------------
// Bipartite block structure
//------------------------------------------------------------------------

// Dimensions of the two tensor factors: matrices live in M_n (x) M_m,
// i.e. m x m arrays of n x n blocks, acting on C^{mn}.  The flattening
// convention is fixed once and for all: the component of a vectorized
// m x n matrix z at global index i*n + k is z(i, k) (0-based), so the
// block index i runs slow and the inner index k runs fast.
struct BipartiteDims {
  int m = 0;
  int n = 0;

  int total() const { return m * n; }
  bool operator==(const BipartiteDims& o) const { return m == o.m && n == o.n; }
  bool operator!=(const BipartiteDims& o) const { return !(*this == o); }
  std::string str() const {
    return std::to_string(m) + "x" + std::to_string(n);
  }
};

// A square mn x mn matrix together with its block structure.
struct BipartiteMatrix {
  BipartiteDims dims;
  Matrix mat;

  BipartiteMatrix() = default;
  BipartiteMatrix(BipartiteDims d, Matrix a) : dims(d), mat(std::move(a)) {
    if (dims.m <= 0 || dims.n <= 0)
      throw DimensionError("BipartiteMatrix: dims must be positive");
    if (mat.rows() != dims.total() || mat.cols() != dims.total())
      throw DimensionError("BipartiteMatrix: matrix is " +
                           std::to_string(mat.rows()) + "x" +
                           std::to_string(mat.cols()) + ", expected " +
                           std::to_string(dims.total()) + " square");
  }

  // n x n block at block coordinates (i, j).
  Eigen::Block<const Matrix> block(int i, int j) const {
    return mat.block(i * dims.n, j * dims.n, dims.n, dims.n);
  }
};

//------------------------------------------------------------------------
// Hermiticity
//------------------------------------------------------------------------

// ||A - A^*||_F / ||A||_F, 0 for the zero matrix.
double hermiticity_defect(const Matrix& a);

// Throws ContractViolation when the relative defect exceeds tol.  Inputs
// are never symmetrized silently.
void require_hermitian(const Matrix& a, double tol, const char* where);

//------------------------------------------------------------------------
// Core operations
//------------------------------------------------------------------------

// Flattens an m x n matrix row by row: result(i*n + k) = z(i, k).
Vector vectorize(const RectMatrix& z);

// Inverse of vectorize for the given dimensions.
RectMatrix devectorize(const Vector& v, BipartiteDims dims);

// Block transpose: block (i, j) of the result is block (j, i) of the
// input; the blocks themselves are not transposed.
BipartiteMatrix partial_transpose(const BipartiteMatrix& a);

// Kronecker-style product placing b in M_n and c in M_m: the entry at
// (i*n + k, j*n + l) is b(k, l) * c(i, j).
BipartiteMatrix tensor_product(const Matrix& b, const Matrix& c);

struct PsdReport {
  bool is_psd = false;
  double min_eig = 0.0;
  double norm2 = 0.0;  // largest |eigenvalue|
};

// Hermitian eigenvalue test: PSD iff min_eig >= -tol * norm2.
// Non-Hermitian input (relative defect > tol) is a contract violation.
PsdReport psd_check(const Matrix& a, double tol = kDefaultTol);

struct RangeInfo {
  Matrix basis;            // orthonormal columns spanning the range
  double kept_min = 0.0;   // smallest retained |eigenvalue|
  double dropped_max = 0.0;  // largest discarded |eigenvalue|

  int rank() const { return static_cast<int>(basis.cols()); }
  // True when the rank decision sits close to the cut: either the
  // smallest kept eigenvalue is within a factor 10 of the threshold or a
  // discarded one comes within a factor 10 below it.
  bool marginal(double tol, double norm2) const {
    const double thr = tol * norm2;
    return (basis.cols() > 0 && kept_min < 10.0 * thr) ||
           dropped_max > 0.1 * thr;
  }
};

// Range of a Hermitian matrix: eigenvectors whose |eigenvalue| exceeds
// tol * ||a||_2.  The zero matrix has an empty range.
RangeInfo range_space_info(const Matrix& a, double tol = kDefaultTol);
std::vector<Vector> range_space(const Matrix& a, double tol = kDefaultTol);

}  // namespace pptcone
