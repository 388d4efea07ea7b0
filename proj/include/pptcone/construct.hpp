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

#include <optional>

#include "pptcone/faces.hpp"
#include "pptcone/feasibility.hpp"
#include "pptcone/maps.hpp"
#include "pptcone/states.hpp"

namespace pptcone {

struct ConstructOptions {
  FeasibilityOptions feasibility;
  PositivitySearchOptions search;
  ProductSearchOptions product;
  double tol = kDefaultTol;
};

// How a constructed state earned its entanglement claim.  ByTheorem4: the
// map built on the input pair has strictly positive margin, so every
// nonzero state of the dual face is entangled.  ByEdgeCheck: the state
// passed the edge test, which rules out any product vector in its ranges.
// None: the construction stayed agnostic (or found nothing).
enum class EntangledClaim { ByTheorem4, ByEdgeCheck, None };

struct ConstructionCertificate {
  std::optional<BipartiteMatrix> state;
  FacePair pair;  // the decomposition pair (D, E) as given
  PositivityReport interior_margin;  // margin of map_from_subspaces(D, E)
  EntangledClaim entangled_claim = EntangledClaim::None;
  bool feasible = false;
};

// Builds a PPT state annihilating every map of the decomposition pair
// (D, E): range(A) inside D-perp and range(A^tau) inside E-perp, pushed
// to equality when a certificate for the complement pair exists.  Throws
// when both subspaces are zero or both are full; returns feasible=false
// with no state when the dual face is the zero face.
ConstructionCertificate construct_ppt_entangled(const MatrixSubspace& d,
                                                const MatrixSubspace& e,
                                                const ConstructOptions& opts = {});

// For a pair whose map sits on the boundary of the positive maps (margin
// within tol of zero), returns a product pair spanning a separable state
// of the dual face, found independently of the margin search.  Interior
// pairs return nothing.
std::optional<ProductVectorHit> boundary_separable_witness(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const ConstructOptions& opts = {});

struct WitnessExtraction {
  FacePair pair;        // decomposition pair dual to the state's face
  DecomposableMap map;  // the matching boundary map
  PositivityReport margin;
};

// Reverse direction: from an edge state recover the dual decomposition
// pair and its map.  The map's margin equals the edge residual of the
// state, strictly positive, while the pairing with the state vanishes.
// Throws ContractViolation when the state fails the edge test.
WitnessExtraction extract_witness_pair(const BipartiteMatrix& a,
                                       const ConstructOptions& opts = {});

}  // namespace pptcone
