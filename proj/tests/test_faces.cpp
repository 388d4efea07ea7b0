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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pptcone/faces.hpp"
#include "pptcone/maps.hpp"
#include "pptcone/rng.hpp"
#include "pptcone/subspace.hpp"

using namespace pptcone;

namespace {

const BipartiteDims kQubitPair{2, 2};

BipartiteMatrix reference_state() {
  return BipartiteMatrix(kQubitPair, oracle::reference_accumulated_matrix());
}

// Maximally entangled qubit pair: PSD but not PPT.
BipartiteMatrix entangled_state() {
  const Vector psi = vectorize(Matrix::Identity(2, 2)) / std::sqrt(2.0);
  return BipartiteMatrix(kQubitPair, psi * psi.adjoint());
}

Vector product_vec(const Vector& x, const Vector& y) {
  return vectorize(x * y.adjoint());
}

Vector partner_vec(const Vector& x, const Vector& y) {
  return vectorize(x.conjugate() * y.adjoint());
}

}  // namespace

TEST_CASE("in_T separates PPT from merely PSD states") {
  const auto ppt = in_T(reference_state());
  CHECK(ppt.in_psd);
  CHECK(ppt.in_pt_psd);
  CHECK(ppt.in_cone());
  CHECK(std::abs(ppt.min_eig) < 1e-12);
  // Smallest block-transpose eigenvalue of the reference state, frozen.
  CHECK(ppt.min_eig_pt == doctest::Approx(0.2984379).epsilon(1e-5));

  const auto ent = in_T(entangled_state());
  CHECK(ent.in_psd);
  CHECK_FALSE(ent.in_pt_psd);
  CHECK_FALSE(ent.in_cone());
  CHECK(ent.min_eig_pt == doctest::Approx(-0.5).epsilon(1e-12));

  Matrix skew = Matrix::Zero(4, 4);
  skew(0, 1) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(in_T(BipartiteMatrix(kQubitPair, skew)), ContractViolation);
}

TEST_CASE("face_of_state recovers both ranges of the reference state") {
  const auto a = reference_state();
  const auto face = face_of_state(a);
  CHECK(face.kind == PairKind::IntersectionPair);
  CHECK(face.D.dim() == 3);
  CHECK(face.E.dim() == 4);
  REQUIRE(face.certificate.has_value());
  CHECK((face.certificate->mat - a.mat).norm() == doctest::Approx(0.0));

  // The range is exactly the complement of the vectorized identity.
  const auto ident_line =
      subspace_from_vectors(kQubitPair, {vectorize(Matrix::Identity(2, 2))});
  CHECK(same_subspace(face.D, complement(ident_line)));
  CHECK(face.E.is_full());

  CHECK_THROWS_AS(face_of_state(entangled_state()), ContractViolation);
}

TEST_CASE("dual_face_of_state complements the state face") {
  const auto a = reference_state();
  const auto face = face_of_state(a);
  const auto dual = dual_face_of_state(a);
  CHECK(dual.kind == PairKind::DecompositionPair);
  CHECK(dual.D.dim() == 1);
  CHECK(dual.E.is_zero());
  CHECK(same_subspace(dual.D, complement(face.D)));
  CHECK(same_subspace(dual.E, complement(face.E)));
  CHECK_FALSE(dual.certificate.has_value());

  auto rng = make_rng(7);
  for (int t = 0; t < 5; ++t) {
    const auto b = sample_ppt_state({2, 3}, rng);
    const auto f = face_of_state(b);
    const auto g = dual_face_of_state(b);
    CHECK(same_subspace(g.D, complement(f.D)));
    CHECK(same_subspace(g.E, complement(f.E)));
  }
}

TEST_CASE("pairing_zero_set_check on hand-picked maps") {
  const auto a = reference_state();
  // The identity map pairs to zero and vec(I) is orthogonal to range(A).
  CHECK(pairing_zero_set_check(a, Matrix::Identity(2, 2)));
  // e11 pairs to 2 and its vectorization leans into the range.
  Matrix e11 = Matrix::Zero(2, 2);
  e11(0, 0) = 1.0;
  CHECK(pairing_zero_set_check(a, e11));

  // Scale invariance of the verdict.
  CHECK(pairing_zero_set_check(a, 1e-8 * Matrix::Identity(2, 2)));
  const BipartiteMatrix scaled(kQubitPair, 1e6 * a.mat);
  CHECK(pairing_zero_set_check(scaled, e11));
}

TEST_CASE("pairing_zero_set_check holds over random draws") {
  auto rng = make_rng(kDefaultSeed, 31);
  for (const auto dims : {BipartiteDims{2, 2}, BipartiteDims{2, 3}}) {
    for (int t = 0; t < 25; ++t) {
      const auto a = sample_ppt_state(dims, rng);
      RectMatrix v = random_gaussian_matrix(dims.m, dims.n, rng);
      CHECK(pairing_zero_set_check(a, v));
      // Also probe the hard direction: V projected onto the kernel side,
      // where the pairing must vanish.
      const Matrix perp =
          Matrix::Identity(dims.total(), dims.total()) -
          projector(range_subspace(a));
      const Vector vk = perp * vectorize(v);
      if (vk.norm() > 1e-6)
        CHECK(pairing_zero_set_check(a, devectorize(vk, dims)));
    }
  }
}

TEST_CASE("is_intersection_pair certifies product-range pairs") {
  auto rng = make_rng(kDefaultSeed, 57);
  const Vector x = random_unit_vector(2, rng);
  const Vector y = random_unit_vector(2, rng);
  const auto d = subspace_from_vectors(kQubitPair, {product_vec(x, y)});
  const auto e = subspace_from_vectors(kQubitPair, {partner_vec(x, y)});
  const auto res = is_intersection_pair(d, e);
  CHECK(res.verdict);
  REQUIRE(res.certificate.has_value());
  CHECK(same_subspace(range_subspace(*res.certificate), d));
  CHECK(same_subspace(range_subspace(partial_transpose(*res.certificate)), e));
}

TEST_CASE("is_intersection_pair accepts the reference face") {
  const auto face = face_of_state(reference_state());
  const auto res = is_intersection_pair(face.D, face.E);
  CHECK(res.verdict);
  REQUIRE(res.certificate.has_value());
  CHECK(in_T(*res.certificate).in_cone());
  CHECK(same_subspace(range_subspace(*res.certificate), face.D));
}

TEST_CASE("is_intersection_pair rejects a mismatched conjugate side") {
  // Pairing the range line with itself instead of with the conjugate
  // partner line leaves no state: for x not proportional to conj(x), the
  // block transpose of c * vv^* has the wrong range.
  Vector x(2), y(2);
  x << 1.0, Complex(0.0, 1.0);
  y << 1.0, 0.0;
  x /= x.norm();
  const auto d = subspace_from_vectors(kQubitPair, {product_vec(x, y)});
  const auto res = is_intersection_pair(d, d);
  CHECK_FALSE(res.verdict);
  CHECK_FALSE(res.certificate.has_value());
}

TEST_CASE("is_intersection_pair handles zero and full subspaces") {
  const auto zero = zero_subspace(kQubitPair);
  const auto full = full_subspace(kQubitPair);

  const auto both_zero = is_intersection_pair(zero, zero);
  CHECK(both_zero.verdict);
  REQUIRE(both_zero.certificate.has_value());
  CHECK(both_zero.certificate->mat.norm() == doctest::Approx(0.0));

  CHECK_FALSE(is_intersection_pair(zero, full).verdict);
  CHECK_FALSE(is_intersection_pair(full, zero).verdict);

  const auto both_full = is_intersection_pair(full, full);
  CHECK(both_full.verdict);
  REQUIRE(both_full.certificate.has_value());
  CHECK(in_T(*both_full.certificate).in_cone());
  CHECK(range_subspace(*both_full.certificate).is_full());
}

TEST_CASE("face_hull_basis matches hand-counted hull dimensions") {
  auto rng = make_rng(kDefaultSeed, 61);
  const Vector x = random_unit_vector(2, rng);
  const Vector y = random_unit_vector(2, rng);
  const auto d = subspace_from_vectors(kQubitPair, {product_vec(x, y)});
  const auto e = subspace_from_vectors(kQubitPair, {partner_vec(x, y)});

  // Extremal pair: only the real line through the product projector.
  const auto hull = face_hull_basis(d, e);
  REQUIRE(hull.size() == 1);
  const Matrix expect = product_vec(x, y) * product_vec(x, y).adjoint();
  CHECK(std::abs(std::abs((hull[0].cwiseProduct(expect.conjugate())).sum()) -
                 1.0) < 1e-10);

  // Every hull element is Hermitian and supported on the right sides.
  const Matrix pd = projector(d), pe = projector(e);
  for (const auto& h : hull) {
    CHECK(hermiticity_defect(h) < 1e-12);
    CHECK((h - pd * h * pd).norm() < 1e-10);
    const Matrix ht = partial_transpose(BipartiteMatrix(kQubitPair, h)).mat;
    CHECK((ht - pe * ht * pe).norm() < 1e-10);
  }

  // Mismatched conjugate side: nothing fits.
  CHECK(face_hull_basis(d, d).empty());

  // Full pair: the whole Hermitian space.
  const auto full = full_subspace(kQubitPair);
  CHECK(face_hull_basis(full, full).size() == 16);
}

TEST_CASE("exposedness of decomposition pairs") {
  // The dual face of the reference state: complements form its face.
  const auto ident_line =
      subspace_from_vectors(kQubitPair, {vectorize(Matrix::Identity(2, 2))});
  CHECK(is_exposed_decomposition_pair(ident_line, zero_subspace(kQubitPair)));

  // Complements of a mismatched pair are not exposed.
  Vector x(2), y(2);
  x << 1.0, Complex(0.0, 1.0);
  y << 1.0, 0.0;
  x /= x.norm();
  const auto d = subspace_from_vectors(kQubitPair, {product_vec(x, y)});
  CHECK_FALSE(is_exposed_decomposition_pair(complement(d), complement(d)));
}

TEST_CASE("exposedness_selftest holds on the reference state") {
  CHECK(exposedness_selftest(reference_state(), 20));
}

TEST_CASE("exposedness_selftest holds on random PPT states") {
  auto rng = make_rng(kDefaultSeed, 99);
  const auto a = sample_ppt_state({2, 3}, rng);
  CHECK(exposedness_selftest(a, 12, kDefaultTol, 5));
}

TEST_CASE("sample_ppt_state is deterministic and lands in the cone") {
  auto rng1 = make_rng(11);
  auto rng2 = make_rng(11);
  const auto a = sample_ppt_state({3, 3}, rng1);
  const auto b = sample_ppt_state({3, 3}, rng2);
  CHECK((a.mat - b.mat).norm() == doctest::Approx(0.0));
  CHECK(in_T(a).in_cone());
  CHECK(std::abs(a.mat.trace() - Complex(1.0)) < 1e-9);
  CHECK(hermiticity_defect(a.mat) < 1e-12);

  auto rng3 = make_rng(12);
  const auto c = sample_ppt_state({3, 3}, rng3);
  CHECK((a.mat - c.mat).norm() > 1e-3);
}
