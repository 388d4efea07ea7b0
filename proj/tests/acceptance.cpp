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

// Release gate.  Each numbered criterion prints exactly one PASS/FAIL
// line, including its runtime bound; the exit code is the number of
// failed criteria.  Criterion 6 is split: the multistart half runs here,
// the projective-grid cross-validation in acceptance_grid (slow tier).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "oracles.hpp"
#include "pptcone/catalog22.hpp"
#include "pptcone/construct.hpp"
#include "pptcone/faces.hpp"
#include "pptcone/maps.hpp"
#include "pptcone/rng.hpp"
#include "pptcone/states.hpp"
#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

using namespace pptcone;

namespace {

const BipartiteDims kQubitPair{2, 2};

// Collects sub-checks; the first failure of each criterion is annotated.
struct Check {
  bool ok = true;

  void operator()(bool cond, const char* what) {
    if (!cond) {
      std::printf("       failed: %s\n", what);
      ok = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Vector v2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return v;
}

Vector product_vec(const Vector& x, const Vector& y) {
  return vectorize(x * y.adjoint());
}

Complex cross2(const Vector& a, const Vector& b) {
  return a(0) * b(1) - a(1) * b(0);
}

// One face per catalog class.  Stream 0 is a fixed canonical set (plus
// the identity-block maximal face); other streams draw random instances.
std::vector<CatalogFace> catalog_sample(std::uint64_t stream) {
  std::vector<CatalogFace> faces;
  if (stream == 0) {
    const Complex i(0.0, 1.0);
    const Vector x = v2(1, 2.0 * i) / std::sqrt(5.0);
    const Vector y = v2(1, -1) / std::sqrt(2.0);
    faces.push_back(face_class_extremal(x, y));
    faces.push_back(face_class_two_product(v2(1, 0), v2(1, 0),
                                           v2(1, 1) / std::sqrt(2.0),
                                           v2(0, 1)));
    const Vector u = v2(1, 1) / std::sqrt(2.0);
    const Vector w = v2(1, -1) / std::sqrt(2.0);
    const std::vector<Vector> gen = {product_vec(v2(1, 0), v2(1, 0)),
                                     product_vec(v2(0, 1), v2(0, 1)),
                                     product_vec(u, w)};
    const std::vector<Vector> gen_pt = {
        product_vec(v2(1, 0).conjugate(), v2(1, 0)),
        product_vec(v2(0, 1).conjugate(), v2(0, 1)),
        product_vec(u.conjugate(), w)};
    const auto d = subspace_from_vectors(kQubitPair, gen);
    const auto e = subspace_from_vectors(kQubitPair, gen_pt);
    faces.push_back(face_class_rank_two_complement(
        complement(d).basis_matrix(0), complement(e).basis_matrix(0)));
    faces.push_back(face_class_maximal_conjugate(v2(1, i) / std::sqrt(2.0),
                                                 v2(1, 0)));
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    faces.push_back(face_class_maximal_left(diag / std::sqrt(5.0)));
    faces.push_back(face_class_maximal_right(diag / std::sqrt(5.0)));
    faces.push_back(face_class_maximal_left(Matrix::Identity(2, 2)));
    return faces;
  }

  auto rng = make_rng(kDefaultSeed, stream);
  const Vector x = random_unit_vector(2, rng);
  const Vector y = random_unit_vector(2, rng);
  faces.push_back(face_class_extremal(x, y));
  for (;;) {
    const Vector z = random_unit_vector(2, rng);
    const Vector w = random_unit_vector(2, rng);
    if (std::abs(cross2(x, z)) > 0.1 && std::abs(cross2(y, w)) > 0.1) {
      faces.push_back(face_class_two_product(x, y, z, w));
      break;
    }
  }
  for (;;) {
    std::vector<Vector> gen, gen_pt;
    for (int k = 0; k < 3; ++k) {
      const Vector p = random_unit_vector(2, rng);
      const Vector q = random_unit_vector(2, rng);
      gen.push_back(product_vec(p, q));
      gen_pt.push_back(product_vec(p.conjugate(), q));
    }
    const auto d = subspace_from_vectors(kQubitPair, gen);
    const auto e = subspace_from_vectors(kQubitPair, gen_pt);
    if (d.dim() != 3 || e.dim() != 3) continue;
    faces.push_back(face_class_rank_two_complement(
        complement(d).basis_matrix(0), complement(e).basis_matrix(0)));
    break;
  }
  faces.push_back(face_class_maximal_conjugate(random_unit_vector(2, rng),
                                               random_unit_vector(2, rng)));
  for (;;) {
    const RectMatrix v = random_gaussian_matrix(2, 2, rng);
    Eigen::JacobiSVD<Matrix> svd(v);
    if (svd.singularValues()(1) > 0.2 * svd.singularValues()(0)) {
      faces.push_back(face_class_maximal_left(v));
      faces.push_back(face_class_maximal_right(v));
      break;
    }
  }
  return faces;
}

//==========================================================================
// Criteria

// Worked example: exact rebuild, rank, kernel, block-transpose spectrum.
bool criterion1(Check& c) {
  const BipartiteMatrix a = reference_example();

  Matrix raw = Matrix::Zero(4, 4);
  for (const auto& p : oracle::reference_pairs()) {
    const Vector v = oracle::vec_raw(p.x * p.y.adjoint());
    raw += v * v.adjoint();
  }
  c((a.mat - raw).norm() == 0.0, "exact rebuild from the printed vectors");
  c((a.mat - oracle::reference_accumulated_matrix()).norm() == 0.0,
    "exact match with the printed matrix");
  c(range_space_info(a.mat).rank() == 3, "rank(A) == 3");
  c((a.mat * vectorize(Matrix::Identity(2, 2))).norm() < 1e-12,
    "A annihilates the vectorized identity");

  const BipartiteMatrix pt = partial_transpose(a);
  c(range_space_info(pt.mat).rank() == 4, "rank of the block transpose");
  const Eigen::SelfAdjointEigenSolver<Matrix> es(pt.mat,
                                                 Eigen::EigenvaluesOnly);
  c(es.eigenvalues()(0) > 1e-6, "smallest block-transpose eigenvalue");
  return c.ok;
}

// Pairing identities over random (A, V, W) at three dimension pairs.
bool criterion2(Check& c) {
  const BipartiteDims dim_list[] = {{2, 2}, {2, 3}, {3, 3}};
  auto rng = make_rng(kDefaultSeed, 1001);
  for (int t = 0; t < 200; ++t) {
    const BipartiteDims dims = dim_list[t % 3];
    const int total = dims.total();
    Matrix gauss = random_gaussian_matrix(total, total, rng);
    const BipartiteMatrix a(dims, Matrix(gauss + gauss.adjoint()));
    const RectMatrix v = random_gaussian_matrix(dims.m, dims.n, rng);
    const RectMatrix w = random_gaussian_matrix(dims.m, dims.n, rng);
    const double bound = 1e-9 * a.mat.norm() * v.squaredNorm();

    const auto phi_v = single_kind_map(MapKind::CompletelyPositive, v);
    const Vector vt = vectorize(v);
    const double quad = std::real(vt.dot(a.mat * vt));
    c(std::abs(pairing(a, phi_v) - quad) <= bound,
      "<A, phi_V> equals the quadratic form in vec V");

    const auto phi_up_v =
        single_kind_map(MapKind::CompletelyCopositive, v);
    c(std::abs(pairing(partial_transpose(a), phi_v) - pairing(a, phi_up_v)) <=
          bound,
      "<A^tau, phi_V> == <A, phi^V>");

    const RectMatrix z = random_gaussian_matrix(dims.m, dims.n, rng);
    const Vector zt = vectorize(z);
    const BipartiteMatrix rank1(dims, Matrix(zt * zt.adjoint()));
    const double overlap = std::norm(vt.dot(zt));
    c(std::abs(pairing(rank1, phi_v) - overlap) <=
          1e-10 * std::max(1.0, overlap),
      "<zz*, phi_V> == |(z|V)|^2");

    const DecomposableMap mixed(dims, {v}, {w});
    const double raw = oracle::pairing_double_sum(a.mat, dims.m, dims.n,
                                                  {v}, {w});
    c(std::abs(pairing(a, mixed) - raw) <=
          1e-9 * a.mat.norm() * (v.squaredNorm() + w.squaredNorm()),
      "mixed map agrees with the double-sum oracle");
  }
  return c.ok;
}

// Zero-pairing equivalence on PPT states, both directions exercised.
bool criterion3(Check& c) {
  auto rng = make_rng(kDefaultSeed, 1002);
  const BipartiteDims dim_list[] = {{2, 2}, {2, 3}};
  int checks = 0;
  for (int t = 0; checks < 500; ++t) {
    const BipartiteDims dims = dim_list[t % 2];
    const auto a = sample_ppt_state(dims, rng);
    const RectMatrix v = random_gaussian_matrix(dims.m, dims.n, rng);
    c(pairing_zero_set_check(a, v), "generic V");
    ++checks;
    const Matrix perp = Matrix::Identity(dims.total(), dims.total()) -
                        projector(range_subspace(a));
    const Vector vk = perp * vectorize(v);
    if (vk.norm() > 1e-6) {
      c(pairing_zero_set_check(a, devectorize(vk, dims)),
        "V projected onto the kernel side");
      ++checks;
    }
  }
  return c.ok;
}

// Exposedness self-test across random PPT states at both desk scales.
bool criterion4(Check& c) {
  auto rng = make_rng(kDefaultSeed, 1003);
  for (int t = 0; t < 50; ++t) {
    const auto a = sample_ppt_state(kQubitPair, rng);
    c(exposedness_selftest(a, 100, kDefaultTol, mix_seed(kDefaultSeed, t)),
      "2x2 state");
  }
  for (int t = 0; t < 20; ++t) {
    const auto a = sample_ppt_state({2, 3}, rng);
    c(exposedness_selftest(a, 100, kDefaultTol,
                           mix_seed(kDefaultSeed, 100 + t)),
      "2x3 state");
  }
  return c.ok;
}

// Qubit pairs never hide entanglement behind a positive partial
// transpose: the product search always lands, faces stay separable.
bool criterion5(Check& c) {
  auto rng = make_rng(kDefaultSeed, 1004);
  for (int t = 0; t < 100; ++t) {
    const auto a = sample_ppt_state(kQubitPair, rng);
    c(edge_check(a).best_hit.residual < 1e-6, "product vector in the range");
  }
  for (std::uint64_t stream : {0, 1, 2}) {
    for (const auto& face : catalog_sample(stream)) {
      const auto hit = separable_element_in_face(face.pair);
      c(hit.has_value(), face_class_name(face.face_class));
    }
  }
  return c.ok;
}

// Edge fixture facts; the grid oracle half lives in acceptance_grid.
bool criterion6(Check& c) {
  const auto tiles = tiles_state();
  const auto cone = in_T(tiles, 1e-10);
  c(cone.in_psd && cone.min_eig >= -1e-10, "PSD to 1e-10");
  c(cone.in_pt_psd && cone.min_eig_pt >= -1e-10,
    "block transpose PSD to 1e-10");
  c(range_space_info(tiles.mat).rank() == 4, "rank(A) == 4");
  c(range_space_info(partial_transpose(tiles).mat).rank() == 4,
    "rank(A^tau) == 4");

  ProductSearchOptions opts;
  opts.starts = 200;
  const auto edge = edge_check(tiles, opts);
  c(edge.starts >= 200, "at least 200 starts");
  c(edge.verdict == EdgeVerdict::Edge, "edge verdict");
  c(edge.is_edge && edge.best_hit.residual > 1e-3,
    "best residual above 1e-3");
  return c.ok;
}

// Witness extraction and reconstruction round-trip on the fixture.
bool criterion7(Check& c) {
  const auto tiles = tiles_state();
  ConstructOptions opts;
  opts.product.starts = 256;

  const auto witness = extract_witness_pair(tiles, opts);
  const auto rebuilt =
      construct_ppt_entangled(witness.pair.D, witness.pair.E, opts);
  c(rebuilt.feasible && rebuilt.state.has_value(), "state reconstructed");
  if (!rebuilt.state) return c.ok;

  const auto face = face_of_state(tiles);
  c(same_subspace(range_subspace(*rebuilt.state), face.D, 1e-6),
    "range equals the fixture range");
  c(same_subspace(range_subspace(partial_transpose(*rebuilt.state)), face.E,
                  1e-6),
    "block-transpose range equals the fixture range");
  c(std::abs(pairing(*rebuilt.state, witness.map)) <= 1e-9,
    "pairing with the extracted witness vanishes");
  c(rebuilt.entangled_claim == EntangledClaim::ByEdgeCheck,
    "claim settled by the edge check");
  return c.ok;
}

// Duals of every catalog face stay on the boundary of the positive maps.
bool criterion8(Check& c) {
  for (std::uint64_t stream : {0, 1, 2}) {
    for (const auto& face : catalog_sample(stream)) {
      const auto margin = positivity_margin(
          map_from_subspaces(complement(face.pair.D),
                             complement(face.pair.E)));
      c(margin.margin <= 1e-6, face_class_name(face.face_class));
      c(margin.margin >= -1e-9, "margin nonnegative");
    }
  }
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    bool (*run)(Check&);
    double budget;
  };
  const Entry entries[] = {
      {"worked example reproduced exactly", criterion1, 1.0},
      {"duality identities over random draws", criterion2, 5.0},
      {"zero-pairing equivalence, 500 draws", criterion3, 10.0},
      {"exposedness self-test, 70 states", criterion4, 60.0},
      {"qubit pairs: no PPT entanglement", criterion5, 60.0},
      {"edge fixture facts (search half)", criterion6, 60.0},
      {"witness round-trip on the fixture", criterion7, 60.0},
      {"catalog duals sit on the map boundary", criterion8, 120.0},
  };

  int failures = 0;
  int number = 1;
  for (const auto& e : entries) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = e.run(check);
    } catch (const std::exception& ex) {
      std::printf("       threw: %s\n", ex.what());
    }
    const double dt = seconds_since(t0);
    if (dt >= e.budget) {
      std::printf("       over budget: %.2fs >= %.0fs\n", dt, e.budget);
      ok = false;
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                number, e.label, dt);
    if (!ok) ++failures;
    ++number;
  }
  std::printf("%d/8 criteria passed\n", 8 - failures);
  return failures;
}
