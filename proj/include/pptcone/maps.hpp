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

#include <cstdint>
#include <vector>

#include "pptcone/rng.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

enum class MapKind { CompletelyPositive, CompletelyCopositive };

// phi(X) = sum_i V_i^* X V_i  +  sum_j W_j^* X^T W_j,
// a map M_m -> M_n given through its two Kraus lists (each element m x n).
// Either list may be empty, but not both: the zero map is excluded.
struct DecomposableMap {
  BipartiteDims dims;
  std::vector<RectMatrix> cp;    // V_i
  std::vector<RectMatrix> cocp;  // W_j

  DecomposableMap(BipartiteDims d, std::vector<RectMatrix> v,
                  std::vector<RectMatrix> w);
};

DecomposableMap single_kind_map(MapKind kind, const RectMatrix& k);

// Kraus lists formed from orthonormal bases of the two subspaces; the
// resulting map generates the pair (D, E) with maximal spans.
DecomposableMap map_from_subspaces(const MatrixSubspace& d,
                                   const MatrixSubspace& e);

// phi applied to an m x m argument.
Matrix apply_map(const DecomposableMap& phi, const Matrix& x);

// Block matrix with phi(e_ij) at block coordinates (i, j).
BipartiteMatrix choi_matrix(const DecomposableMap& phi);

// Bilinear pairing <A, phi> = sum_ij <phi(e_ij), a_ij>, <X,Y> = Tr(Y X^T).
// Evaluated twice, by the literal double sum and by the vectorized closed
// form sum_i v_i^* A v_i + sum_j w_j^* A^tau w_j; the two routes must
// agree to 1e-9 relative or the call fails.
double pairing(const BipartiteMatrix& a, const DecomposableMap& phi,
               double tol = kDefaultTol);

// Checks <A^tau, phi_V> = <A, phi^V> and <A^tau, phi^V> = <A, phi_V>
// at tolerance tol * ||A||_F * ||V||_F^2.
bool pairing_transpose_identity_check(const BipartiteMatrix& a,
                                      const RectMatrix& v,
                                      double tol = kDefaultTol);

struct PositivitySearchOptions {
  int starts = 64;
  int max_iter = 500;
  std::uint64_t seed = kDefaultSeed;
  double improve_tol = 1e-12;
};

struct PositivityReport {
  double margin = 0.0;   // best objective value found (heuristic upper bound)
  Vector argmin_x;
  Vector argmin_y;
  int starts = 0;
  bool converged = false;  // best start stopped on improvement, not budget
};

// Multi-start alternating minimization of f(x, y) = y^* phi(x x^*) y over
// the product of unit spheres.  Both partial problems are exact smallest-
// eigenvector steps: fixing x reduces to phi(xx^*); fixing y reduces to
// sum_i (V_i y)(V_i y)^* + conj(sum_j (W_j y)(W_j y)^*).  The reported
// margin is an upper bound on the true minimum; a strictly positive value
// is heuristic evidence, not a certificate.
PositivityReport positivity_margin(const DecomposableMap& phi,
                                   const PositivitySearchOptions& opts = {});

// margin >= -tol (always true for genuinely decomposable input).
bool is_positive_map(const DecomposableMap& phi, double tol = kDefaultTol,
                     const PositivitySearchOptions& opts = {});

// margin > tol: no unit product pair annihilates the map.
bool is_interior_positive(const DecomposableMap& phi,
                          double tol = kDefaultTol,
                          const PositivitySearchOptions& opts = {});

}  // namespace pptcone
