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

#include "pptcone/feasibility.hpp"
#include "pptcone/rng.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

//==========================================================================
// Membership in the PPT cone
//==========================================================================

struct ConeMembership {
  bool in_psd = false;
  bool in_pt_psd = false;
  double min_eig = 0.0;
  double min_eig_pt = 0.0;

  bool in_cone() const { return in_psd && in_pt_psd; }
};

// PSD test on the state and on its block transpose.  Throws on
// non-Hermitian input.
ConeMembership in_T(const BipartiteMatrix& a, double tol = kDefaultTol);

// Range of a state as a subspace of the m x n matrices.
MatrixSubspace range_subspace(const BipartiteMatrix& a,
                              double tol = kDefaultTol);

//==========================================================================
// Face pairs
//==========================================================================

enum class PairKind { DecompositionPair, IntersectionPair };

// A pair of matrix subspaces naming a face.  An intersection pair lists
// the ranges (of the state and of its block transpose) cutting a face of
// the PPT cone and carries an interior witness; a decomposition pair
// lists the Kraus constraint spaces of the matching face of decomposable
// maps.
struct FacePair {
  PairKind kind = PairKind::IntersectionPair;
  MatrixSubspace D;
  MatrixSubspace E;
  std::optional<BipartiteMatrix> certificate;
};

// Minimal face of the PPT cone containing the state as an interior point:
// D = range(A), E = range(A^tau), both devectorized.  Requires A PPT.
FacePair face_of_state(const BipartiteMatrix& a, double tol = kDefaultTol);

// The matching face on the map side: the orthocomplements of the two
// ranges, as a decomposition pair.
FacePair dual_face_of_state(const BipartiteMatrix& a,
                            double tol = kDefaultTol);

// Checks the biconditional "pairing(A, phi_V) vanishes iff the
// vectorization of V is orthogonal to range(A)" for one V against one PPT
// state.  Scale-invariant: A is normalized by its spectral norm and V to
// unit Frobenius norm before comparing against tol; the range side uses
// the principal-angle tolerance.
bool pairing_zero_set_check(const BipartiteMatrix& a, const RectMatrix& v,
                            double tol = kDefaultTol);

struct IntersectionCheck {
  bool verdict = false;
  std::optional<BipartiteMatrix> certificate;
};

// Linear hull of the face cut by (D, E): an orthonormal basis, in the
// Hilbert-Schmidt inner product, of the real space of Hermitian matrices
// supported on D whose block transpose is supported on E.  Computed in
// one shot as a nullspace, no iteration.
std::vector<Matrix> face_hull_basis(const MatrixSubspace& d,
                                    const MatrixSubspace& e);

// Decides constructively whether (D, E) cuts a face of the PPT cone: seeks
// a certificate A with A PSD, range(A) = D exactly, A^tau PSD and
// range(A^tau) = E exactly (ranges compared at the principal-angle
// tolerance).  Tries the projector onto D, then an eigenvalue ascent over
// the face's linear hull, then accumulated alternating-projection runs.
// A false verdict means no certificate was found, not a disproof.
IntersectionCheck is_intersection_pair(const MatrixSubspace& d,
                                       const MatrixSubspace& e,
                                       const FeasibilityOptions& opts = {});

// A decomposition pair is exposed exactly when its complements form an
// intersection pair.
bool is_exposed_decomposition_pair(const MatrixSubspace& d,
                                   const MatrixSubspace& e,
                                   const FeasibilityOptions& opts = {});

// Exposedness probe for the face of a given PPT state: draws `samples`
// states B whose pairings with every map built from the dual-face bases
// vanish (scaled copies of A, in-face perturbations along the face's
// linear hull, plus random cone samples as negative controls) and asserts
// that each such B keeps range(B) inside range(A) and range(B^tau) inside
// range(A^tau).  Returns the conjunction of the assertions.
bool exposedness_selftest(const BipartiteMatrix& a, int samples,
                          double tol = kDefaultTol,
                          uint64_t seed = kDefaultSeed);

// Random state in the PPT cone: Wishart draw of uniformly random rank,
// then alternating PSD projections on the state and its block transpose
// (at most 200 rounds), trace-normalized.  Throws ConvergenceError after
// five failed draws.
BipartiteMatrix sample_ppt_state(BipartiteDims dims, std::mt19937_64& rng,
                                 double tol = kDefaultTol);

}  // namespace pptcone
