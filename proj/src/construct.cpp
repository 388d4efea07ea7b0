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

#include "pptcone/construct.hpp"

#include <utility>

#include "pptcone/subspace.hpp"

namespace pptcone {

ConstructionCertificate construct_ppt_entangled(const MatrixSubspace& d,
                                                const MatrixSubspace& e,
                                                const ConstructOptions& opts) {
  if (d.dims != e.dims)
    throw DimensionError("construct_ppt_entangled: mismatched dimensions");
  if (d.is_zero() && e.is_zero())
    throw ContractViolation("construct_ppt_entangled: empty pair");
  if (d.is_full() && e.is_full())
    throw ContractViolation("construct_ppt_entangled: dual face is zero");

  ConstructionCertificate cert;
  cert.pair = FacePair{PairKind::DecompositionPair, d, e, std::nullopt};
  cert.interior_margin =
      positivity_margin(map_from_subspaces(d, e), opts.search);

  // Prefer a state with the complement ranges hit exactly; fall back to a
  // single feasibility run, which may land deeper inside the dual face.
  auto check = is_intersection_pair(complement(d), complement(e),
                                    opts.feasibility);
  if (check.verdict && check.certificate) {
    cert.state = std::move(*check.certificate);
  } else if (auto a = dual_face_feasibility(d, e, opts.feasibility)) {
    cert.state = std::move(*a);
  }

  if (cert.state) {
    cert.feasible = true;
    const EdgeReport edge = edge_check(*cert.state, opts.product);
    if (edge.verdict == EdgeVerdict::Edge) {
      cert.entangled_claim = EntangledClaim::ByEdgeCheck;
    } else if (cert.interior_margin.margin > opts.tol) {
      cert.entangled_claim = EntangledClaim::ByTheorem4;
    }
  }
  return cert;
}

std::optional<ProductVectorHit> boundary_separable_witness(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const ConstructOptions& opts) {
  if (d.dims != e.dims)
    throw DimensionError("boundary_separable_witness: mismatched dimensions");
  const PositivityReport margin =
      positivity_margin(map_from_subspaces(d, e), opts.search);
  if (margin.margin > opts.tol) return std::nullopt;
  return separable_element_in_face(complement(d), complement(e),
                                   opts.product);
}

WitnessExtraction extract_witness_pair(const BipartiteMatrix& a,
                                       const ConstructOptions& opts) {
  const EdgeReport edge = edge_check(a, opts.product);
  if (!edge.is_edge)
    throw ContractViolation(
        "extract_witness_pair: the state failed the edge test");
  FacePair pair = dual_face_of_state(a, opts.tol);
  DecomposableMap map = map_from_subspaces(pair.D, pair.E);
  PositivityReport margin = positivity_margin(map, opts.search);
  return WitnessExtraction{std::move(pair), std::move(map),
                           std::move(margin)};
}

}  // namespace pptcone
