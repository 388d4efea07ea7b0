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

#include "pptcone/rng.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

enum class FeasibilityStart { ProjectorOnDperp, RandomPSD };

struct FeasibilityOptions {
  int max_rounds = 2000;
  double tol = 1e-9;
  FeasibilityStart start = FeasibilityStart::ProjectorOnDperp;
  bool trace_normalize = true;
  uint64_t seed = kDefaultSeed;  // drives RandomPSD starts only
};

// Per-round diagnostics of the alternating projections.  The violation is
// the largest of: PSD deficit of the iterate, PSD deficit of its block
// transpose, and the Frobenius leakage outside either target range, all
// scaled by max(1, ||A||_F).
struct FeasibilityTrace {
  std::vector<double> violation;
  int rounds = 0;
  bool converged = false;
};

// Metric projection of a Hermitian matrix onto the PSD cone (symmetrize,
// then clip negative eigenvalues).
Matrix psd_projection(const Matrix& a);

// Seeks a state in the dual face of the pair (D, E): a nonzero A with
// A PSD, range(A) contained in the vectorized D-perp, A^tau PSD and
// range(A^tau) contained in E-perp.  Alternates metric projections onto
// the two constraint cones until the round-to-round Frobenius change
// drops below tol.  Returns nothing when the iterate collapses to zero or
// fails the final feasibility validation (PSD at 1e-9 relative on both
// sides, range inclusions at the principal-angle tolerance); an empty
// result signals a likely-empty face, not a proof.
std::optional<BipartiteMatrix> dual_face_feasibility(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const FeasibilityOptions& opts = {}, FeasibilityTrace* trace = nullptr);

}  // namespace pptcone
