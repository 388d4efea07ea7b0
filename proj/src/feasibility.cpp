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

#include "pptcone/feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace pptcone {

namespace {

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

double min_eigenvalue(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

// Largest constraint violation of the iterate against both cones.
double violation_of(const Matrix& a, const Matrix& p, const Matrix& q,
                    BipartiteDims dims) {
  const double scale = std::max(1.0, a.norm());
  const Matrix at = partial_transpose(BipartiteMatrix(dims, a)).mat;
  const double psd_deficit = std::max(0.0, -min_eigenvalue(a));
  const double psd_deficit_t = std::max(0.0, -min_eigenvalue(at));
  const double leak = (a - p * a * p).norm();
  const double leak_t = (at - q * at * q).norm();
  return std::max({psd_deficit, psd_deficit_t, leak, leak_t}) / scale;
}

}  // namespace

Matrix psd_projection(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(a));
  const Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clipped.asDiagonal() *
         es.eigenvectors().adjoint();
}

std::optional<BipartiteMatrix> dual_face_feasibility(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const FeasibilityOptions& opts, FeasibilityTrace* trace) {
  if (d.dims != e.dims)
    throw DimensionError("dual_face_feasibility: pair dims differ, " +
                         d.dims.str() + " vs " + e.dims.str());
  if (opts.max_rounds < 1)
    throw ContractViolation("dual_face_feasibility: max_rounds must be >= 1");
  const BipartiteDims dims = d.dims;
  const Matrix p = projector(complement(d));
  const Matrix q = projector(complement(e));

  Matrix a;
  if (opts.start == FeasibilityStart::ProjectorOnDperp) {
    a = p;
  } else {
    std::mt19937_64 rng = make_rng(opts.seed);
    const Matrix g = random_gaussian_matrix(dims.total(), dims.total(), rng);
    a = g * g.adjoint();
    a /= a.norm();
  }

  bool converged = false;
  int rounds = 0;
  for (; rounds < opts.max_rounds; ++rounds) {
    const Matrix prev = a;
    a = psd_projection(p * symmetrize(a) * p);
    const Matrix at = partial_transpose(BipartiteMatrix(dims, a)).mat;
    const Matrix bt = psd_projection(q * symmetrize(at) * q);
    a = partial_transpose(BipartiteMatrix(dims, bt)).mat;
    if (trace) trace->violation.push_back(violation_of(a, p, q, dims));
    const double change = (a - prev).norm();
    if (change < opts.tol * std::max(1.0, prev.norm())) {
      converged = true;
      ++rounds;
      break;
    }
  }
  if (trace) {
    trace->rounds = rounds;
    trace->converged = converged;
  }

  if (a.norm() <= opts.tol) return std::nullopt;

  // Final feasibility gate: never hand back a slowly-decaying iterate that
  // satisfies neither cone to working precision.
  a = symmetrize(a);
  if (!psd_check(a, 1e-9).is_psd) return std::nullopt;
  const Matrix at = partial_transpose(BipartiteMatrix(dims, a)).mat;
  if (!psd_check(at, 1e-9).is_psd) return std::nullopt;
  const MatrixSubspace dperp = complement(d);
  const MatrixSubspace eperp = complement(e);
  const MatrixSubspace ra{dims, range_space_info(a).basis};
  if (inclusion_sine(ra, dperp) > kAngleTol) return std::nullopt;
  const MatrixSubspace rat{dims, range_space_info(at).basis};
  if (inclusion_sine(rat, eperp) > kAngleTol) return std::nullopt;

  if (opts.trace_normalize) {
    const double tr = a.trace().real();
    if (tr > opts.tol) a /= tr;
  }
  return BipartiteMatrix(dims, a);
}

}  // namespace pptcone
