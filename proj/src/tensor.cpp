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

#include "pptcone/tensor.hpp"

namespace pptcone {

double hermiticity_defect(const Matrix& a) {
  const double norm = a.norm();
  if (norm == 0.0) return 0.0;
  return (a - a.adjoint()).norm() / norm;
}

void require_hermitian(const Matrix& a, double tol, const char* where) {
  if (a.rows() != a.cols())
    throw DimensionError(std::string(where) + ": matrix is not square");
  if (hermiticity_defect(a) > tol)
    throw ContractViolation(std::string(where) +
                            ": matrix is not Hermitian within tolerance");
}

Vector vectorize(const RectMatrix& z) {
  const int m = static_cast<int>(z.rows());
  const int n = static_cast<int>(z.cols());
  Vector v(m * n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) v(i * n + k) = z(i, k);
  return v;
}

RectMatrix devectorize(const Vector& v, BipartiteDims dims) {
  if (v.size() != dims.total())
    throw DimensionError("devectorize: vector has " +
                         std::to_string(v.size()) + " entries, expected " +
                         std::to_string(dims.total()));
  RectMatrix z(dims.m, dims.n);
  for (int i = 0; i < dims.m; ++i)
    for (int k = 0; k < dims.n; ++k) z(i, k) = v(i * dims.n + k);
  return z;
}

BipartiteMatrix partial_transpose(const BipartiteMatrix& a) {
  const int m = a.dims.m, n = a.dims.n;
  Matrix out(a.mat.rows(), a.mat.cols());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = a.block(j, i);
  return BipartiteMatrix(a.dims, std::move(out));
}

BipartiteMatrix tensor_product(const Matrix& b, const Matrix& c) {
  if (b.rows() != b.cols() || c.rows() != c.cols())
    throw DimensionError("tensor_product: factors must be square");
  const int n = static_cast<int>(b.rows());
  const int m = static_cast<int>(c.rows());
  BipartiteDims dims{m, n};
  Matrix out(m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      out.block(i * n, j * n, n, n) = c(i, j) * b;
  return BipartiteMatrix(dims, std::move(out));
}

PsdReport psd_check(const Matrix& a, double tol) {
  require_hermitian(a, tol, "psd_check");
  PsdReport rep;
  if (a.rows() == 0) {
    rep.is_psd = true;
    return rep;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  rep.min_eig = ev(0);
  rep.norm2 = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  rep.is_psd = rep.min_eig >= -tol * rep.norm2;
  return rep;
}

RangeInfo range_space_info(const Matrix& a, double tol) {
  require_hermitian(a, tol, "range_space");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const auto& ev = es.eigenvalues();
  const int d = static_cast<int>(ev.size());
  double norm2 = 0.0;
  for (int i = 0; i < d; ++i) norm2 = std::max(norm2, std::abs(ev(i)));
  const double thr = tol * norm2;

  RangeInfo info;
  std::vector<int> keep;
  for (int i = 0; i < d; ++i) {
    const double mag = std::abs(ev(i));
    if (norm2 > 0.0 && mag > thr) {
      keep.push_back(i);
      info.kept_min = info.kept_min == 0.0 ? mag : std::min(info.kept_min, mag);
    } else {
      info.dropped_max = std::max(info.dropped_max, mag);
    }
  }
  info.basis.resize(d, static_cast<int>(keep.size()));
  for (size_t c = 0; c < keep.size(); ++c)
    info.basis.col(static_cast<int>(c)) = es.eigenvectors().col(keep[c]);
  return info;
}

std::vector<Vector> range_space(const Matrix& a, double tol) {
  const RangeInfo info = range_space_info(a, tol);
  std::vector<Vector> out;
  out.reserve(info.basis.cols());
  for (int c = 0; c < info.basis.cols(); ++c) out.push_back(info.basis.col(c));
  return out;
}

}  // namespace pptcone
