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
#include <optional>
#include <vector>

#include "pptcone/faces.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

struct ProductSearchOptions {
  int starts = 64;  // random starts, on top of the coordinate-pair seeds
  int max_iter = 500;
  uint64_t seed = kDefaultSeed;
  double improve_tol = 1e-12;
};

// A residual below this counts as "product vector found".
inline constexpr double kProductFoundTol = 1e-7;
// An edge verdict requires the best residual to clear this floor ...
inline constexpr double kEdgeResidualFloor = 1e-3;
// ... over at least this many alternation starts.
inline constexpr int kEdgeStartsRequired = 200;

struct ProductVectorHit {
  Vector x;  // unit vector in C^m
  Vector y;  // unit vector in C^n
  double residual = 0.0;  // objective recomputed from scratch at (x, y)
};

// Minimizes, over unit vectors x and y,
//   || P_perp vectorize(x y^*) ||^2
//     + [when conj_side is given] || Q_perp vectorize(conj(x) y^*) ||^2
// where P projects onto s and Q onto conj_side, by alternating
// smallest-eigenvector steps in x and y.  Initial points: the mn
// coordinate pairs, then opts.starts random pairs.  A zero residual means
// a product vector lies in s whose first-factor conjugate partner lies in
// conj_side.  The returned (x, y) is determined up to a phase on each
// factor; the residual is invariant under those phases.
ProductVectorHit product_vector_in_subspace(
    const MatrixSubspace& s,
    const std::optional<MatrixSubspace>& conj_side = std::nullopt,
    const ProductSearchOptions& opts = {});

enum class EdgeVerdict { ProductFound, Edge, Inconclusive };

struct EdgeReport {
  bool is_edge = false;  // best residual > threshold
  ProductVectorHit best_hit;
  int starts = 0;  // total alternation starts examined
  double threshold = kEdgeResidualFloor;
  double found_threshold = kProductFoundTol;
  // Edge requires residual > threshold AND starts >= kEdgeStartsRequired;
  // residual < found_threshold is ProductFound; the gap is Inconclusive.
  EdgeVerdict verdict = EdgeVerdict::Inconclusive;
};

// Edge test for a PPT state: searches for a product vector in range(A)
// whose conjugate partner lies in range(A^tau); the state sits on an edge
// of the cone exactly when no such vector exists.
EdgeReport edge_check(const BipartiteMatrix& a,
                      const ProductSearchOptions& opts = {});

// Desk-scale separability oracle: in these dimensions a unit-trace PSD
// state is separable iff it is PPT.  Throws on other dimensions.
bool separability_check_2x2_2x3(const BipartiteMatrix& a,
                                double tol = kDefaultTol);

// Searches the face cut by the ranges (d, e) for a separable state: a
// product pair (x, y) with vectorize(x y^*) in d and its conjugate partner
// in e.  Empty when the search residual stays above the found-threshold.
std::optional<ProductVectorHit> separable_element_in_face(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const ProductSearchOptions& opts = {});

// Same, addressed by a face pair: intersection pairs search their own
// subspaces, decomposition pairs the complements (the state side of the
// dual face).
std::optional<ProductVectorHit> separable_element_in_face(
    const FacePair& pair, const ProductSearchOptions& opts = {});

// Five pairwise-orthonormal product vectors in C^9 that cannot be
// extended by another product vector; the canonical 3x3 edge fixture is
// supported on their complement.
std::vector<Vector> tiles_product_basis();

// The fixture state: (identity - sum of the five projectors) / 4.
BipartiteMatrix tiles_state();

}  // namespace pptcone
