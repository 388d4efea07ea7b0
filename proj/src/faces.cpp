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

#include "pptcone/faces.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pptcone/maps.hpp"

namespace pptcone {

namespace {

Matrix symmetrize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

BipartiteMatrix block_transpose(const BipartiteMatrix& a) {
  return partial_transpose(a);
}

}  // namespace

ConeMembership in_T(const BipartiteMatrix& a, double tol) {
  require_hermitian(a.mat, std::max(tol, 1e-12), "in_T");
  const PsdReport direct = psd_check(a.mat, tol);
  const PsdReport transposed = psd_check(block_transpose(a).mat, tol);
  return {direct.is_psd, transposed.is_psd, direct.min_eig,
          transposed.min_eig};
}

MatrixSubspace range_subspace(const BipartiteMatrix& a, double tol) {
  return MatrixSubspace{a.dims, range_space_info(a.mat, tol).basis};
}

FacePair face_of_state(const BipartiteMatrix& a, double tol) {
  const ConeMembership mem = in_T(a, tol);
  if (!mem.in_cone())
    throw ContractViolation(
        "face_of_state: state is outside the PPT cone (min eig " +
        std::to_string(mem.min_eig) + ", after block transpose " +
        std::to_string(mem.min_eig_pt) + ")");
  FacePair out;
  out.kind = PairKind::IntersectionPair;
  out.D = range_subspace(a, tol);
  out.E = range_subspace(block_transpose(a), tol);
  out.certificate = a;
  return out;
}

FacePair dual_face_of_state(const BipartiteMatrix& a, double tol) {
  const FacePair face = face_of_state(a, tol);
  FacePair out;
  out.kind = PairKind::DecompositionPair;
  out.D = complement(face.D);
  out.E = complement(face.E);
  return out;
}

bool pairing_zero_set_check(const BipartiteMatrix& a, const RectMatrix& v,
                            double tol) {
  const ConeMembership mem = in_T(a, tol);
  if (!mem.in_cone())
    throw ContractViolation("pairing_zero_set_check: state is outside the "
                            "PPT cone");
  if (v.rows() != a.dims.m || v.cols() != a.dims.n)
    throw DimensionError("pairing_zero_set_check: V is " +
                         std::to_string(v.rows()) + "x" +
                         std::to_string(v.cols()) + ", expected " +
                         a.dims.str());
  const double vnorm = v.norm();
  if (vnorm == 0.0) return true;  // pairs to zero and lies in every kernel
  const double anorm = psd_check(a.mat, tol).norm2;
  if (anorm == 0.0) return true;  // zero state: both sides trivially agree

  const BipartiteMatrix unit_a(a.dims, Matrix(a.mat / anorm));
  const double p = pairing(
      unit_a,
      single_kind_map(MapKind::CompletelyPositive, RectMatrix(v / vnorm)));
  const bool zero_pairing = p <= tol;

  const Vector vt = vectorize(v) / vnorm;
  const double leak = (projector(range_subspace(a, tol)) * vt).norm();
  const bool orthogonal = leak <= kAngleTol;
  return zero_pairing == orthogonal;
}

//==========================================================================
// Intersection pairs
//==========================================================================

namespace {

bool certificate_matches(const BipartiteMatrix& cand, const MatrixSubspace& d,
                         const MatrixSubspace& e, double tol) {
  if (!in_T(cand, tol).in_cone()) return false;
  if (!same_subspace(range_subspace(cand, tol), d)) return false;
  return same_subspace(range_subspace(partial_transpose(cand), tol), e);
}

// Orthonormal basis of the Hermitian n x n matrices: diagonal units, then
// symmetric and antisymmetric off-diagonal pairs.
std::vector<Matrix> hermitian_basis(int n) {
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(n) * n);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    Matrix h = Matrix::Zero(n, n);
    h(i, i) = 1.0;
    out.push_back(h);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix h = Matrix::Zero(n, n);
      h(i, j) = s;
      h(j, i) = s;
      out.push_back(h);
      h(i, j) = Complex(0.0, s);
      h(j, i) = Complex(0.0, -s);
      out.push_back(h);
    }
  return out;
}

// Maximizes min(lambda_min(A on D), lambda_min(A^tau on E)) over the
// trace-one slice of the hull.  Both terms are concave in the hull
// coefficients, so projected supergradient ascent converges globally; a
// strictly positive value is an interior certificate with exact ranges.
std::optional<BipartiteMatrix> hull_interior_point(
    const MatrixSubspace& d, const MatrixSubspace& e,
    const std::vector<Matrix>& hull) {
  if (hull.empty() || d.is_zero() || e.is_zero()) return std::nullopt;
  const BipartiteDims dims = d.dims;
  const int ell = static_cast<int>(hull.size());

  // Generators compressed onto the two supports, plus their traces.
  std::vector<Matrix> pgen(ell), qgen(ell);
  Eigen::VectorXd traces(ell);
  for (int i = 0; i < ell; ++i) {
    pgen[i] = d.basis.adjoint() * hull[i] * d.basis;
    const Matrix ht = partial_transpose(BipartiteMatrix(dims, hull[i])).mat;
    qgen[i] = e.basis.adjoint() * ht * e.basis;
    traces(i) = hull[i].trace().real();
  }
  const double tsq = traces.squaredNorm();
  if (tsq < 1e-24) return std::nullopt;  // traceless hull holds no PSD point

  Eigen::VectorXd c = traces / tsq;  // trace-one start
  Eigen::VectorXd best_c = c;
  double best_f = -std::numeric_limits<double>::infinity();
  const int kd = d.dim(), ke = e.dim();
  for (int iter = 0; iter < 4000; ++iter) {
    Matrix sp = Matrix::Zero(kd, kd), sq = Matrix::Zero(ke, ke);
    for (int i = 0; i < ell; ++i) {
      sp += c(i) * pgen[i];
      sq += c(i) * qgen[i];
    }
    Eigen::SelfAdjointEigenSolver<Matrix> esp(sp), esq(sq);
    const double fp = esp.eigenvalues()(0), fq = esq.eigenvalues()(0);
    const double f = std::min(fp, fq);
    if (f > best_f) {
      best_f = f;
      best_c = c;
      if (best_f > 1e-2) break;  // comfortably interior already
    }
    const bool use_p = fp <= fq;
    const Vector v = use_p ? esp.eigenvectors().col(0).eval()
                           : esq.eigenvectors().col(0).eval();
    Eigen::VectorXd g(ell);
    for (int i = 0; i < ell; ++i)
      g(i) = (v.adjoint() * (use_p ? pgen[i] : qgen[i]) * v)(0).real();
    g -= (g.dot(traces) / tsq) * traces;  // stay on the trace-one slice
    const double gn = g.norm();
    if (gn < 1e-14) break;
    c += (0.5 / std::sqrt(iter + 1.0)) * (g / gn);
    c += ((1.0 - c.dot(traces)) / tsq) * traces;
  }
  if (best_f <= 1e-9) return std::nullopt;

  Matrix a = Matrix::Zero(dims.total(), dims.total());
  for (int i = 0; i < ell; ++i) a += best_c(i) * hull[i];
  a = symmetrize(a);
  const double tr = a.trace().real();
  if (tr <= 1e-12) return std::nullopt;
  return BipartiteMatrix(dims, Matrix(a / tr));
}

}  // namespace

std::vector<Matrix> face_hull_basis(const MatrixSubspace& d,
                                    const MatrixSubspace& e) {
  if (d.dims != e.dims)
    throw DimensionError("face_hull_basis: pair dims differ, " +
                         d.dims.str() + " vs " + e.dims.str());
  const BipartiteDims dims = d.dims;
  const int n = dims.total();
  const std::vector<Matrix> herm = hermitian_basis(n);
  const int hdim = static_cast<int>(herm.size());
  const Matrix pd = projector(d);
  const Matrix pe = projector(e);

  // Stack both support residuals, split into real and imaginary parts.
  Eigen::MatrixXd constraint(4 * n * n, hdim);
  for (int k = 0; k < hdim; ++k) {
    const Matrix r1 = herm[k] - pd * herm[k] * pd;
    const Matrix ht = partial_transpose(BipartiteMatrix(dims, herm[k])).mat;
    const Matrix r2 = ht - pe * ht * pe;
    int row = 0;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        constraint(row, k) = r1(i, j).real();
        constraint(row + 1, k) = r1(i, j).imag();
        constraint(row + 2, k) = r2(i, j).real();
        constraint(row + 3, k) = r2(i, j).imag();
        row += 4;
      }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(constraint, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = sv.size() > 0 ? 1e-12 * std::max(1.0, sv(0)) : 0.0;
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;

  std::vector<Matrix> hull;
  hull.reserve(hdim - rank);
  for (int k = rank; k < hdim; ++k) {
    Matrix g = Matrix::Zero(n, n);
    for (int i = 0; i < hdim; ++i) g += svd.matrixV()(i, k) * herm[i];
    hull.push_back(symmetrize(g));
  }
  return hull;
}

IntersectionCheck is_intersection_pair(const MatrixSubspace& d,
                                       const MatrixSubspace& e,
                                       const FeasibilityOptions& opts) {
  if (d.dims != e.dims)
    throw DimensionError("is_intersection_pair: pair dims differ, " +
                         d.dims.str() + " vs " + e.dims.str());
  const BipartiteDims dims = d.dims;
  const int total = dims.total();
  if (d.is_zero() && e.is_zero())
    return {true, BipartiteMatrix(dims, Matrix::Zero(total, total))};
  if (d.is_zero() != e.is_zero())
    return {false, std::nullopt};  // the zero state forces both ranges empty

  // Cheap candidate: the projector onto D often already works.
  BipartiteMatrix proj(dims, projector(d));
  if (certificate_matches(proj, d, e, opts.tol)) {
    proj.mat /= proj.mat.trace().real();
    return {true, proj};
  }

  // Deterministic route: ascend to an interior point of the linear hull.
  const std::vector<Matrix> hull = face_hull_basis(d, e);
  if (hull.empty()) return {false, std::nullopt};  // only the zero matrix fits
  if (auto cand = hull_interior_point(d, e, hull)) {
    if (certificate_matches(*cand, d, e, opts.tol)) return {true, *cand};
  }

  // Accumulate feasible points; sums of states in the face push the
  // ranges up towards the targets.
  const MatrixSubspace dperp = complement(d);
  const MatrixSubspace eperp = complement(e);
  Matrix acc = Matrix::Zero(total, total);
  for (int retry = 0; retry < 9; ++retry) {
    FeasibilityOptions fo = opts;
    fo.start = retry == 0 ? FeasibilityStart::ProjectorOnDperp
                          : FeasibilityStart::RandomPSD;
    fo.seed = mix_seed(opts.seed, static_cast<uint64_t>(retry));
    fo.trace_normalize = true;
    const auto point = dual_face_feasibility(dperp, eperp, fo);
    if (!point) continue;
    acc += point->mat;
    const double tr = acc.trace().real();
    if (tr <= opts.tol) continue;
    const BipartiteMatrix cand(dims, Matrix(acc / tr));
    if (certificate_matches(cand, d, e, opts.tol)) return {true, cand};
  }
  return {false, std::nullopt};
}

bool is_exposed_decomposition_pair(const MatrixSubspace& d,
                                   const MatrixSubspace& e,
                                   const FeasibilityOptions& opts) {
  return is_intersection_pair(complement(d), complement(e), opts).verdict;
}

//==========================================================================
// Exposedness probe
//==========================================================================

namespace {

double max_basis_pairing(const BipartiteMatrix& b, const MatrixSubspace& dperp,
                         const MatrixSubspace& eperp) {
  double worst = 0.0;
  for (int j = 0; j < dperp.dim(); ++j) {
    const auto phi =
        single_kind_map(MapKind::CompletelyPositive, dperp.basis_matrix(j));
    worst = std::max(worst, std::abs(pairing(b, phi)));
  }
  for (int j = 0; j < eperp.dim(); ++j) {
    const auto phi =
        single_kind_map(MapKind::CompletelyCopositive, eperp.basis_matrix(j));
    worst = std::max(worst, std::abs(pairing(b, phi)));
  }
  return worst;
}

}  // namespace

bool exposedness_selftest(const BipartiteMatrix& a, int samples, double tol,
                          uint64_t seed) {
  const ConeMembership mem = in_T(a, tol);
  if (!mem.in_cone())
    throw ContractViolation("exposedness_selftest: state is outside the PPT "
                            "cone");
  const BipartiteDims dims = a.dims;
  const FacePair face = face_of_state(a, tol);
  const MatrixSubspace dperp = complement(face.D);
  const MatrixSubspace eperp = complement(face.E);

  const double tr = a.mat.trace().real();
  const Matrix base = tr > 1e-12 ? Matrix(a.mat / tr) : a.mat;
  const BipartiteMatrix a0(dims, base);

  // Headroom for perturbations that stay PSD on both sides.
  const RangeInfo ri = range_space_info(a0.mat, tol);
  const RangeInfo rit =
      range_space_info(partial_transpose(a0).mat, tol);
  const double headroom =
      ri.rank() > 0 ? 0.45 * std::min(ri.kept_min, rit.kept_min) : 0.0;

  // Directions spanning the linear hull of the face, computed exactly so
  // the perturbed samples stay dual-zero to machine precision.
  const std::vector<Matrix> hull = face_hull_basis(face.D, face.E);

  bool all_hold = true;
  auto assert_in_face = [&](const BipartiteMatrix& b) {
    const double worst_pairing = max_basis_pairing(b, dperp, eperp);
    if (worst_pairing > tol) return;  // not a dual-zero sample
    const double s1 = inclusion_sine(range_subspace(b, tol), face.D);
    const double s2 =
        inclusion_sine(range_subspace(partial_transpose(b), tol), face.E);
    if (s1 > kAngleTol || s2 > kAngleTol) all_hold = false;
  };

  for (int s = 0; s < samples; ++s) {
    std::mt19937_64 rng = make_rng(seed, static_cast<uint64_t>(s) + 1);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Matrix b = (0.25 + 1.75 * unif(rng)) * a0.mat;
    if (s % 2 == 1 && !hull.empty()) {
      Matrix mix = Matrix::Zero(dims.total(), dims.total());
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (const Matrix& dir : hull) mix += gauss(rng) * dir;
      const double mix_norm = mix.norm();
      if (mix_norm > 0.0)
        b = a0.mat + (headroom * unif(rng) / mix_norm) * mix;
    }
    const double btr = b.trace().real();
    if (btr > 1e-12) b /= btr;
    const BipartiteMatrix sample_b(dims, symmetrize(b));
    if (!in_T(sample_b, tol).in_cone()) continue;  // numerically spilled out
    assert_in_face(sample_b);
  }

  // Negative controls: generic cone samples, screened the same way.
  std::mt19937_64 rng = make_rng(seed, 0xc0de);
  for (int s = 0; s < 4; ++s) {
    assert_in_face(sample_ppt_state(dims, rng, tol));
  }
  return all_hold;
}

//==========================================================================
// Sampling
//==========================================================================

BipartiteMatrix sample_ppt_state(BipartiteDims dims, std::mt19937_64& rng,
                                 double tol) {
  const int total = dims.total();
  std::uniform_int_distribution<int> rank_dist(1, total);
  for (int attempt = 0; attempt < 5; ++attempt) {
    const int rank = rank_dist(rng);
    const Matrix g = random_gaussian_matrix(total, rank, rng);
    Matrix a = g * g.adjoint();
    for (int round = 0; round < 200; ++round) {
      a = psd_projection(a);
      const Matrix at = partial_transpose(BipartiteMatrix(dims, a)).mat;
      a = partial_transpose(BipartiteMatrix(dims, psd_projection(at))).mat;
      if (psd_check(symmetrize(a), tol).is_psd) {
        const double tr = a.trace().real();
        if (tr <= 1e-12) break;  // collapsed, redraw
        return BipartiteMatrix(dims, Matrix(symmetrize(a) / tr));
      }
    }
  }
  throw ConvergenceError("sample_ppt_state: alternating projections failed "
                         "to reach the cone in 5 draws");
}

}  // namespace pptcone
