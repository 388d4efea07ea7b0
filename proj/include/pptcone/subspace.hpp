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

#include <vector>

#include "pptcone/tensor.hpp"

namespace pptcone {

// Subspace of the m x n matrices, stored through its vectorized image in
// C^{mn} as a matrix of orthonormal columns.  A zero-dimensional basis is
// the zero subspace.
struct MatrixSubspace {
  BipartiteDims dims;
  Matrix basis;  // (m*n) x dim, orthonormal columns

  int dim() const { return static_cast<int>(basis.cols()); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == dims.total(); }

  // i-th basis element reshaped back to an m x n matrix.
  RectMatrix basis_matrix(int i) const {
    return devectorize(basis.col(i), dims);
  }
};

// Orthonormalizes the span of the given vectors (rank-revealing SVD,
// singular values below tol * sigma_max are treated as zero).
MatrixSubspace subspace_from_vectors(BipartiteDims dims,
                                     const std::vector<Vector>& span,
                                     double tol = kDefaultTol);
MatrixSubspace subspace_from_matrices(BipartiteDims dims,
                                      const std::vector<RectMatrix>& span,
                                      double tol = kDefaultTol);

MatrixSubspace zero_subspace(BipartiteDims dims);
MatrixSubspace full_subspace(BipartiteDims dims);

// Orthogonal complement within C^{mn}.
MatrixSubspace complement(const MatrixSubspace& s);

// Orthogonal projector onto the subspace, as an mn x mn matrix.
Matrix projector(const MatrixSubspace& s);

// Sine of the largest principal angle from `inner` into `outer`;
// 0 when inner is the zero subspace.
double inclusion_sine(const MatrixSubspace& inner, const MatrixSubspace& outer);

// Inclusion and equality at a principal-angle tolerance.
bool contained_in(const MatrixSubspace& inner, const MatrixSubspace& outer,
                  double tol = kAngleTol);
bool same_subspace(const MatrixSubspace& a, const MatrixSubspace& b,
                   double tol = kAngleTol);

// Span of s together with one extra vector.
MatrixSubspace join(const MatrixSubspace& s, const Vector& extra,
                    double tol = kDefaultTol);

}  // namespace pptcone
