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

#include "pptcone/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pptcone {

namespace {

// Linear map x -> vectorize(x y^*), as an (mn) x m matrix.
Matrix left_factor_matrix(const Vector& y, int m) {
  const int n = static_cast<int>(y.size());
  Matrix b = Matrix::Zero(m * n, m);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) b(i * n + k, i) = std::conj(y(k));
  return b;
}

// Linear map conj(y) -> vectorize(x y^*), as an (mn) x n matrix.
Matrix right_factor_matrix(const Vector& x, int n) {
  const int m = static_cast<int>(x.size());
  Matrix c = Matrix::Zero(m * n, n);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < n; ++k) c(i * n + k, k) = x(i);
  return c;
}

Vector smallest_eigenvector(const Matrix& h, double* value) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  if (value) *value = es.eigenvalues()(0);
  return es.eigenvectors().col(0);
}

double search_objective(const Vector& x, const Vector& y, const Matrix& pperp,
                        const Matrix* qperp) {
  const Vector v = vectorize(x * y.adjoint());
  double f = (pperp * v).squaredNorm();
  if (qperp) {
    const Vector w = vectorize(x.conjugate() * y.adjoint());
    f += (*qperp * w).squaredNorm();
  }
  return f;
}

}  // namespace

ProductVectorHit product_vector_in_subspace(
    const MatrixSubspace& s, const std::optional<MatrixSubspace>& conj_side,
    const ProductSearchOptions& opts) {
  if (s.dim() < 1)
    throw ContractViolation(
        "product_vector_in_subspace: the subspace is zero");
  if (conj_side && conj_side->dims != s.dims)
    throw DimensionError("product_vector_in_subspace: conjugate-side dims " +
                         conj_side->dims.str() + " differ from " +
                         s.dims.str());
  const int m = s.dims.m, n = s.dims.n;
  const int total = s.dims.total();
  const Matrix pperp = Matrix::Identity(total, total) - projector(s);
  Matrix qperp_store;
  const Matrix* qperp = nullptr;
  if (conj_side) {
    qperp_store = Matrix::Identity(total, total) - projector(*conj_side);
    qperp = &qperp_store;
  }

  ProductVectorHit best;
  best.residual = std::numeric_limits<double>::infinity();
  const int total_starts = m * n + opts.starts;
  for (int sidx = 0; sidx < total_starts; ++sidx) {
    Vector x, y;
    if (sidx < m * n) {
      x = Vector::Unit(m, sidx / n);
      y = Vector::Unit(n, sidx % n);
    } else {
      std::mt19937_64 rng = make_rng(opts.seed, sidx);
      x = random_unit_vector(m, rng);
      y = random_unit_vector(n, rng);
    }

    double prev = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < opts.max_iter; ++iter) {
      // y-step: exact minimum in conj(y) for fixed x.
      const Matrix cx = right_factor_matrix(x, n);
      Matrix g = cx.adjoint() * pperp * cx;
      if (qperp) {
        const Matrix cxb = right_factor_matrix(x.conjugate(), n);
        g += cxb.adjoint() * (*qperp) * cxb;
      }
      y = smallest_eigenvector(g, nullptr).conjugate();

      // x-step: the conjugated term enters through its entrywise
      // conjugate, keeping the form Hermitian in x.
      const Matrix by = left_factor_matrix(y, m);
      Matrix h = by.adjoint() * pperp * by;
      if (qperp) h += (by.adjoint() * (*qperp) * by).conjugate();
      double f = 0.0;
      x = smallest_eigenvector(h, &f);
      if (prev - f < opts.improve_tol) break;
      prev = f;
    }

    const double res = search_objective(x, y, pperp, qperp);
    if (res < best.residual) {
      best.x = x;
      best.y = y;
      best.residual = res;
    }
  }
  return best;
}

EdgeReport edge_check(const BipartiteMatrix& a,
                      const ProductSearchOptions& opts) {
  if (!in_T(a).in_cone())
    throw ContractViolation("edge_check: state is outside the PPT cone");
  const FacePair face = face_of_state(a);
  if (face.D.is_zero())
    throw ContractViolation("edge_check: the zero state has no face to test");
  EdgeReport rep;
  rep.best_hit = product_vector_in_subspace(face.D, face.E, opts);
  rep.starts = a.dims.total() + opts.starts;
  rep.is_edge = rep.best_hit.residual > rep.threshold;
  if (rep.best_hit.residual < rep.found_threshold)
    rep.verdict = EdgeVerdict::ProductFound;
  else if (rep.is_edge && rep.starts >= kEdgeStartsRequired)
    rep.verdict = EdgeVerdict::Edge;
  else
    rep.verdict = EdgeVerdict::Inconclusive;
  return rep;
}

bool separability_check_2x2_2x3(const BipartiteMatrix& a, double tol) {
  const int m = a.dims.m, n = a.dims.n;
  const bool supported =
      (m == 2 && n == 2) || (m == 2 && n == 3) || (m == 3 && n == 2);
  if (!supported)
    throw DimensionError("separability_check_2x2_2x3: unsupported dims " +
                         a.dims.str());
  if (!psd_check(a.mat, tol).is_psd)
    throw ContractViolation("separability_check_2x2_2x3: state is not PSD");
  if (std::abs(a.mat.trace().real() - 1.0) > 1e-6)
    throw ContractViolation(
        "separability_check_2x2_2x3: state must have unit trace");
  return in_T(a, tol).in_cone();
}

std::optional<ProductVectorHit> separable_element_in_face(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const ProductSearchOptions& opts) {
  if (d.is_zero() || e.is_zero()) return std::nullopt;
  const ProductVectorHit hit = product_vector_in_subspace(d, e, opts);
  if (hit.residual <= kProductFoundTol) return hit;
  return std::nullopt;
}

std::optional<ProductVectorHit> separable_element_in_face(
    const FacePair& pair, const ProductSearchOptions& opts) {
  if (pair.kind == PairKind::IntersectionPair)
    return separable_element_in_face(pair.D, pair.E, opts);
  return separable_element_in_face(complement(pair.D), complement(pair.E),
                                   opts);
}

std::vector<Vector> tiles_product_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  const double t = 1.0 / std::sqrt(3.0);
  auto vec3 = [](double a, double b, double c) {
    Vector v(3);
    v << Complex(a, 0), Complex(b, 0), Complex(c, 0);
    return v;
  };
  const Vector e0 = vec3(1, 0, 0), e1 = vec3(0, 1, 0), e2 = vec3(0, 0, 1);
  const Vector d01 = vec3(s, -s, 0), d12 = vec3(0, s, -s);
  const Vector all = vec3(t, t, t);
  const std::vector<std::pair<Vector, Vector>> pairs = {
      {e0, d01}, {e2, d12}, {d01, e2}, {d12, e0}, {all, all}};
  std::vector<Vector> out;
  out.reserve(pairs.size());
  for (const auto& [x, y] : pairs) out.push_back(vectorize(x * y.adjoint()));
  return out;
}

BipartiteMatrix tiles_state() {
  Matrix a = Matrix::Identity(9, 9);
  for (const Vector& u : tiles_product_basis()) a -= u * u.adjoint();
  return BipartiteMatrix({3, 3}, Matrix(a / 4.0));
}

}  // namespace pptcone
