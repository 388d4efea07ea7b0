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
#include <random>

#include "pptcone/tensor.hpp"

namespace pptcone {

// Default seed for every randomized routine; overridable per call and,
// in the command-line tool, via --seed or the PPTCONE_SEED variable.
inline constexpr std::uint64_t kDefaultSeed = 42;

// splitmix64 finalizer, used to derive independent streams from
// (seed, stream index) pairs so that multi-start searches are
// reproducible start by start.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(mix_seed(seed, stream));
}

// Complex standard-normal matrix (independent N(0,1) real and imaginary
// parts per entry).
inline Matrix random_gaussian_matrix(int rows, int cols,
                                     std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

// Uniform point on the unit sphere of C^d.
inline Vector random_unit_vector(int d, std::mt19937_64& rng) {
  Vector v = random_gaussian_matrix(d, 1, rng).col(0);
  const double norm = v.norm();
  if (norm == 0.0) return random_unit_vector(d, rng);
  return v / norm;
}

}  // namespace pptcone
