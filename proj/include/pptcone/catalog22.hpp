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
#include <string>
#include <utility>
#include <vector>

#include "pptcone/faces.hpp"
#include "pptcone/feasibility.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

// The six face classes of the PPT cone at 2x2.  Writing [..] for spans of
// vectorized matrices, the pairs (D, E) are:
//   ExtremalRay        ([xy*], [conj(x)y*])
//   TwoProduct         ([xy*, zw*], [conj(x)y*, conj(z)w*])
//   RankTwoComplement  ([V]-perp, [W]-perp), V and W of rank two
//   MaximalConjugate   ([xy*]-perp, [conj(x)y*]-perp)
//   MaximalLeft        ([V]-perp, full)
//   MaximalRight       (full, [W]-perp)
enum class FaceClass {
  ExtremalRay,
  TwoProduct,
  RankTwoComplement,
  MaximalConjugate,
  MaximalLeft,
  MaximalRight,
};

const char* face_class_name(FaceClass c);

struct CatalogFace {
  FaceClass face_class;
  FacePair pair;  // intersection pair, certificate attached
  BipartiteMatrix certificate;
};

// Each constructor validates its certificate (cone membership plus exact
// range recovery of the pair) and throws ContractViolation when the
// preconditions fail.  Pairs are invariant under nonzero complex scaling
// of the vector arguments.
CatalogFace face_class_extremal(const Vector& x, const Vector& y);
CatalogFace face_class_two_product(const Vector& x, const Vector& y,
                                   const Vector& z, const Vector& w,
                                   double tol = kDefaultTol);
// Accepts (V, W) and certifies the pair numerically; inputs whose pair
// admits no certificate are rejected.
CatalogFace face_class_rank_two_complement(const RectMatrix& v,
                                           const RectMatrix& w,
                                           const FeasibilityOptions& opts = {});
CatalogFace face_class_maximal_conjugate(const Vector& x, const Vector& y);
CatalogFace face_class_maximal_left(const RectMatrix& v,
                                    const FeasibilityOptions& opts = {});
CatalogFace face_class_maximal_right(const RectMatrix& w,
                                     const FeasibilityOptions& opts = {});

// The built-in worked example: accumulates the four rank-one pairs
//   x1=(1,0), y1=(0,1); x2=(0,1), y2=(1,0);
//   x3=(1,-1), y3=(1,1); x4=(-i,1), y4=(1,-i)
// into sum_i vectorize(x_i y_i*) vectorize(x_i y_i*)*.  All entries are
// small Gaussian integers, so the construction is exact in doubles; the
// result must equal reference_example_printed() entry for entry.  Its
// range is the complement of the vectorized identity (rank 3) and its
// block transpose has rank 4.
std::vector<std::pair<Vector, Vector>> reference_example_pairs();
BipartiteMatrix reference_example();

// The same matrix as frozen literal entries, kept separate so the
// accumulation above can be compared against an independent copy.
BipartiteMatrix reference_example_printed();

struct CatalogReport {
  uint64_t seed = 0;
  int trials = 0;
  int checks_run = 0;
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty(); }
};

// Random-instance validation sweep: for `trials` instances of every
// class, certifies the pair, recovers it from the certificate through
// face_of_state, and for the three maximal classes verifies that joining
// one more random product vector (and its conjugate partner) yields the
// full-cone pair.
CatalogReport validate_catalog(uint64_t seed, int trials,
                               const FeasibilityOptions& opts = {});

}  // namespace pptcone
