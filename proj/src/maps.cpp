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

#include "pptcone/maps.hpp"

#include <algorithm>
#include <cmath>

namespace pptcone {

namespace {

void check_kraus(const BipartiteDims& dims, const std::vector<RectMatrix>& ks,
                 const char* which) {
  for (const auto& k : ks)
    if (k.rows() != dims.m || k.cols() != dims.n)
      throw DimensionError(std::string("DecomposableMap: ") + which +
                           " element is " + std::to_string(k.rows()) + "x" +
                           std::to_string(k.cols()) + ", expected " +
                           dims.str());
}

double kraus_weight(const DecomposableMap& phi) {
  double w = 0.0;
  for (const auto& v : phi.cp) w += v.squaredNorm();
  for (const auto& u : phi.cocp) w += u.squaredNorm();
  return w;
}

}  // namespace

DecomposableMap::DecomposableMap(BipartiteDims d, std::vector<RectMatrix> v,
                                 std::vector<RectMatrix> w)
    : dims(d), cp(std::move(v)), cocp(std::move(w)) {
  if (dims.m <= 0 || dims.n <= 0)
    throw DimensionError("DecomposableMap: dims must be positive");
  if (cp.empty() && cocp.empty())
    throw ContractViolation("DecomposableMap: both Kraus lists are empty");
  check_kraus(dims, cp, "cp");
  check_kraus(dims, cocp, "cocp");
}

DecomposableMap single_kind_map(MapKind kind, const RectMatrix& k) {
  BipartiteDims dims{static_cast<int>(k.rows()), static_cast<int>(k.cols())};
  if (kind == MapKind::CompletelyPositive)
    return DecomposableMap(dims, {k}, {});
  return DecomposableMap(dims, {}, {k});
}

DecomposableMap map_from_subspaces(const MatrixSubspace& d,
                                   const MatrixSubspace& e) {
  if (d.dims != e.dims)
    throw DimensionError("map_from_subspaces: dimension mismatch");
  std::vector<RectMatrix> cp, cocp;
  for (int i = 0; i < d.dim(); ++i) cp.push_back(d.basis_matrix(i));
  for (int i = 0; i < e.dim(); ++i) cocp.push_back(e.basis_matrix(i));
  return DecomposableMap(d.dims, std::move(cp), std::move(cocp));
}

Matrix apply_map(const DecomposableMap& phi, const Matrix& x) {
  if (x.rows() != phi.dims.m || x.cols() != phi.dims.m)
    throw DimensionError("apply_map: argument must be " +
                         std::to_string(phi.dims.m) + " square");
  Matrix out = Matrix::Zero(phi.dims.n, phi.dims.n);
  for (const auto& v : phi.cp) out += v.adjoint() * x * v;
  if (!phi.cocp.empty()) {
    const Matrix xt = x.transpose();
    for (const auto& w : phi.cocp) out += w.adjoint() * xt * w;
  }
  return out;
}

BipartiteMatrix choi_matrix(const DecomposableMap& phi) {
  const int m = phi.dims.m, n = phi.dims.n;
  Matrix out(m * n, m * n);
  Matrix eij = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      eij(i, j) = 1.0;
      out.block(i * n, j * n, n, n) = apply_map(phi, eij);
      eij(i, j) = 0.0;
    }
  return BipartiteMatrix(phi.dims, std::move(out));
}

double pairing(const BipartiteMatrix& a, const DecomposableMap& phi,
               double tol) {
  if (a.dims != phi.dims)
    throw DimensionError("pairing: state is " + a.dims.str() + ", map is " +
                         phi.dims.str());
  require_hermitian(a.mat, std::max(tol, 1e-12), "pairing");
  const int m = a.dims.m;

  // Route 1: literal double sum over blocks.
  Complex literal(0.0, 0.0);
  Matrix eij = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      eij(i, j) = 1.0;
      const Matrix phi_eij = apply_map(phi, eij);
      eij(i, j) = 0.0;
      literal += (a.block(i, j).transpose() * phi_eij).trace();
    }

  // Route 2: vectorized closed form.
  double closed = 0.0;
  for (const auto& v : phi.cp) {
    const Vector vt = vectorize(v);
    closed += (vt.adjoint() * a.mat * vt)(0).real();
  }
  if (!phi.cocp.empty()) {
    const Matrix at = partial_transpose(a).mat;
    for (const auto& w : phi.cocp) {
      const Vector wt = vectorize(w);
      closed += (wt.adjoint() * at * wt)(0).real();
    }
  }

  const double scale =
      std::max({1.0, std::abs(literal.real()), a.mat.norm() * kraus_weight(phi)});
  if (std::abs(literal.imag()) > 1e-9 * scale ||
      std::abs(literal.real() - closed) > 1e-9 * scale)
    throw Error("pairing: double-sum and closed-form routes disagree");
  return literal.real();
}

bool pairing_transpose_identity_check(const BipartiteMatrix& a,
                                      const RectMatrix& v, double tol) {
  const DecomposableMap cp = single_kind_map(MapKind::CompletelyPositive, v);
  const DecomposableMap cocp =
      single_kind_map(MapKind::CompletelyCopositive, v);
  const BipartiteMatrix at = partial_transpose(a);
  const double scale =
      std::max(1e-300, tol * a.mat.norm() * v.squaredNorm());
  return std::abs(pairing(at, cp) - pairing(a, cocp)) <= scale &&
         std::abs(pairing(at, cocp) - pairing(a, cp)) <= scale;
}

//==========================================================================
// Positivity margin
//==========================================================================

namespace {

// f(x, y) = y^* phi(x x^*) y, recomputed directly.
double objective(const DecomposableMap& phi, const Vector& x,
                 const Vector& y) {
  const Matrix rho = x * x.adjoint();
  return (y.adjoint() * apply_map(phi, rho) * y)(0).real();
}

struct EigMin {
  double value;
  Vector vector;
};

EigMin smallest_eigenpair(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

}  // namespace

PositivityReport positivity_margin(const DecomposableMap& phi,
                                   const PositivitySearchOptions& opts) {
  const int m = phi.dims.m, n = phi.dims.n;
  if (m > 4 || n > 4)
    throw DimensionError("positivity_margin: supported up to 4x4 factors");

  PositivityReport best;
  best.margin = std::numeric_limits<double>::infinity();
  best.starts = opts.starts;

  for (int s = 0; s < opts.starts; ++s) {
    std::mt19937_64 rng = make_rng(opts.seed, static_cast<std::uint64_t>(s));
    Vector x = random_unit_vector(m, rng);
    Vector y = random_unit_vector(n, rng);
    double prev = std::numeric_limits<double>::infinity();
    bool converged = false;

    for (int it = 0; it < opts.max_iter; ++it) {
      // y-step: smallest eigenvector of phi(x x^*).
      const Matrix rho = x * x.adjoint();
      const EigMin ey = smallest_eigenpair(apply_map(phi, rho));
      y = ey.vector;

      // x-step: smallest eigenvector of
      //   sum_i (V_i y)(V_i y)^* + conj(sum_j (W_j y)(W_j y)^*).
      Matrix hx = Matrix::Zero(m, m);
      for (const auto& v : phi.cp) {
        const Vector u = v * y;
        hx += u * u.adjoint();
      }
      if (!phi.cocp.empty()) {
        Matrix hw = Matrix::Zero(m, m);
        for (const auto& w : phi.cocp) {
          const Vector u = w * y;
          hw += u * u.adjoint();
        }
        hx += hw.conjugate();
      }
      const EigMin ex = smallest_eigenpair(hx);
      x = ex.vector;

      const double f = ex.value;
      if (prev - f < opts.improve_tol) {
        converged = true;
        break;
      }
      prev = f;
    }

    const double value = objective(phi, x, y);
    if (value < best.margin) {
      best.margin = value;
      best.argmin_x = x;
      best.argmin_y = y;
      best.converged = converged;
    }
  }
  return best;
}

bool is_positive_map(const DecomposableMap& phi, double tol,
                     const PositivitySearchOptions& opts) {
  return positivity_margin(phi, opts).margin >= -tol;
}

bool is_interior_positive(const DecomposableMap& phi, double tol,
                          const PositivitySearchOptions& opts) {
  return positivity_margin(phi, opts).margin > tol;
}

}  // namespace pptcone
