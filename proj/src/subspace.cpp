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

#include "pptcone/subspace.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

namespace pptcone {

namespace {

MatrixSubspace from_stacked(BipartiteDims dims, const Matrix& cols,
                            double tol) {
  MatrixSubspace s;
  s.dims = dims;
  if (cols.cols() == 0 || cols.norm() == 0.0) {
    s.basis.resize(dims.total(), 0);
    return s;
  }
  Eigen::JacobiSVD<Matrix> svd(cols, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++rank;
  s.basis = svd.matrixU().leftCols(rank);
  return s;
}

}  // namespace

MatrixSubspace subspace_from_vectors(BipartiteDims dims,
                                     const std::vector<Vector>& span,
                                     double tol) {
  Matrix cols(dims.total(), static_cast<int>(span.size()));
  for (size_t i = 0; i < span.size(); ++i) {
    if (span[i].size() != dims.total())
      throw DimensionError("subspace_from_vectors: vector length mismatch");
    cols.col(static_cast<int>(i)) = span[i];
  }
  return from_stacked(dims, cols, tol);
}

MatrixSubspace subspace_from_matrices(BipartiteDims dims,
                                      const std::vector<RectMatrix>& span,
                                      double tol) {
  std::vector<Vector> vecs;
  vecs.reserve(span.size());
  for (const auto& z : span) {
    if (z.rows() != dims.m || z.cols() != dims.n)
      throw DimensionError("subspace_from_matrices: element is " +
                           std::to_string(z.rows()) + "x" +
                           std::to_string(z.cols()) + ", expected " +
                           dims.str());
    vecs.push_back(vectorize(z));
  }
  return subspace_from_vectors(dims, vecs, tol);
}

MatrixSubspace zero_subspace(BipartiteDims dims) {
  MatrixSubspace s;
  s.dims = dims;
  s.basis.resize(dims.total(), 0);
  return s;
}

MatrixSubspace full_subspace(BipartiteDims dims) {
  MatrixSubspace s;
  s.dims = dims;
  s.basis = Matrix::Identity(dims.total(), dims.total());
  return s;
}

MatrixSubspace complement(const MatrixSubspace& s) {
  const int total = s.dims.total();
  if (s.is_zero()) return full_subspace(s.dims);
  if (s.is_full()) return zero_subspace(s.dims);
  // Full unitary from a QR factorization of the basis; the trailing
  // columns span the complement because the basis has full column rank.
  Eigen::HouseholderQR<Matrix> qr(s.basis);
  Matrix q = qr.householderQ();
  MatrixSubspace out;
  out.dims = s.dims;
  out.basis = q.rightCols(total - s.dim());
  return out;
}

Matrix projector(const MatrixSubspace& s) {
  if (s.is_zero()) return Matrix::Zero(s.dims.total(), s.dims.total());
  return s.basis * s.basis.adjoint();
}

double inclusion_sine(const MatrixSubspace& inner,
                      const MatrixSubspace& outer) {
  if (inner.dims != outer.dims)
    throw DimensionError("inclusion_sine: dimension mismatch");
  if (inner.is_zero()) return 0.0;
  if (outer.is_zero()) return 1.0;
  const Matrix residual = inner.basis - outer.basis * (outer.basis.adjoint() * inner.basis);
  Eigen::JacobiSVD<Matrix> svd(residual);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

bool contained_in(const MatrixSubspace& inner, const MatrixSubspace& outer,
                  double tol) {
  return inclusion_sine(inner, outer) <= tol;
}

bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b,
                   double tol) {
  return a.dim() == b.dim() && contained_in(a, b, tol) &&
         contained_in(b, a, tol);
}

MatrixSubspace join(const MatrixSubspace& s, const Vector& extra, double tol) {
  Matrix cols(s.dims.total(), s.dim() + 1);
  cols.leftCols(s.dim()) = s.basis;
  cols.col(s.dim()) = extra;
  return from_stacked(s.dims, cols, tol);
}

}  // namespace pptcone
