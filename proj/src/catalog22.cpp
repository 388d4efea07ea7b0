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

#include "pptcone/catalog22.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>
#include <utility>

#include "pptcone/rng.hpp"
#include "pptcone/subspace.hpp"

namespace pptcone {
namespace {

constexpr BipartiteDims kQubitPair{2, 2};

Vector unit_vector2(const Vector& v, const char* who) {
  if (v.size() != 2)
    throw DimensionError(std::string(who) + ": expected vectors of length 2");
  const double norm = v.norm();
  if (!(norm > 1e-14))
    throw ContractViolation(std::string(who) + ": zero vector");
  return v / norm;
}

// vectorize(x y*) and its conjugate partner vectorize(conj(x) y*).
Vector product_vec(const Vector& x, const Vector& y) {
  return vectorize(x * y.adjoint());
}

Vector partner_vec(const Vector& x, const Vector& y) {
  return vectorize(x.conjugate() * y.adjoint());
}

Complex cross2(const Vector& a, const Vector& b) {
  return a(0) * b(1) - a(1) * b(0);
}

// Unit vectorization of a 2x2 matrix, rejecting rank deficiency.
Vector unit_vec_rank2(const RectMatrix& v, const char* who) {
  if (v.rows() != 2 || v.cols() != 2)
    throw DimensionError(std::string(who) + ": expected a 2x2 matrix");
  Eigen::JacobiSVD<RectMatrix> svd(v);
  const auto& sv = svd.singularValues();
  if (!(sv(0) > 1e-14) || sv(1) <= 1e-9 * sv(0))
    throw ContractViolation(std::string(who) + ": matrix must have rank two");
  return vectorize(v) / v.norm();
}

// Certificate gate shared by every constructor: cone membership plus
// exact recovery of both target ranges.
CatalogFace finish(FaceClass cls, const MatrixSubspace& d,
                   const MatrixSubspace& e, const BipartiteMatrix& cert) {
  const std::string who = face_class_name(cls);
  if (!in_T(cert).in_cone())
    throw ContractViolation(who + ": certificate left the PPT cone");
  if (!same_subspace(range_subspace(cert), d))
    throw ContractViolation(who + ": certificate range misses D");
  if (!same_subspace(range_subspace(partial_transpose(cert)), e))
    throw ContractViolation(who + ": block-transposed range misses E");
  CatalogFace face;
  face.face_class = cls;
  face.pair = FacePair{PairKind::IntersectionPair, d, e, cert};
  face.certificate = cert;
  return face;
}

Matrix sum_of_projectors(const std::vector<Vector>& units) {
  Matrix acc = Matrix::Zero(4, 4);
  for (const auto& u : units) acc += u * u.adjoint();
  return acc;
}

}  // namespace

const char* face_class_name(FaceClass c) {
  switch (c) {
    case FaceClass::ExtremalRay: return "extremal_ray";
    case FaceClass::TwoProduct: return "two_product";
    case FaceClass::RankTwoComplement: return "rank_two_complement";
    case FaceClass::MaximalConjugate: return "maximal_conjugate";
    case FaceClass::MaximalLeft: return "maximal_left";
    case FaceClass::MaximalRight: return "maximal_right";
  }
  return "unknown";
}

CatalogFace face_class_extremal(const Vector& x, const Vector& y) {
  const Vector xu = unit_vector2(x, "extremal_ray");
  const Vector yu = unit_vector2(y, "extremal_ray");
  const Vector u = product_vec(xu, yu);
  const Vector up = partner_vec(xu, yu);
  const auto d = subspace_from_vectors(kQubitPair, {u});
  const auto e = subspace_from_vectors(kQubitPair, {up});
  return finish(FaceClass::ExtremalRay, d, e,
                BipartiteMatrix(kQubitPair, u * u.adjoint()));
}

CatalogFace face_class_two_product(const Vector& x, const Vector& y,
                                   const Vector& z, const Vector& w,
                                   double tol) {
  const Vector xu = unit_vector2(x, "two_product");
  const Vector yu = unit_vector2(y, "two_product");
  const Vector zu = unit_vector2(z, "two_product");
  const Vector wu = unit_vector2(w, "two_product");
  if (std::abs(cross2(xu, zu)) <= tol || std::abs(cross2(yu, wu)) <= tol)
    throw ContractViolation(
        "two_product: factors must be independent on both sides");
  const std::vector<Vector> gen = {product_vec(xu, yu), product_vec(zu, wu)};
  const std::vector<Vector> gen_pt = {partner_vec(xu, yu),
                                      partner_vec(zu, wu)};
  const auto d = subspace_from_vectors(kQubitPair, gen);
  const auto e = subspace_from_vectors(kQubitPair, gen_pt);
  return finish(FaceClass::TwoProduct, d, e,
                BipartiteMatrix(kQubitPair, sum_of_projectors(gen)));
}

CatalogFace face_class_rank_two_complement(const RectMatrix& v,
                                           const RectMatrix& w,
                                           const FeasibilityOptions& opts) {
  const Vector vh = unit_vec_rank2(v, "rank_two_complement");
  const Vector wh = unit_vec_rank2(w, "rank_two_complement");
  const auto d = complement(subspace_from_vectors(kQubitPair, {vh}));
  const auto e = complement(subspace_from_vectors(kQubitPair, {wh}));
  const auto check = is_intersection_pair(d, e, opts);
  if (!check.verdict || !check.certificate)
    throw ContractViolation(
        "rank_two_complement: no certificate, the pair does not cut a face");
  return finish(FaceClass::RankTwoComplement, d, e, *check.certificate);
}

CatalogFace face_class_maximal_conjugate(const Vector& x, const Vector& y) {
  const Vector xu = unit_vector2(x, "maximal_conjugate");
  const Vector yu = unit_vector2(y, "maximal_conjugate");
  // Orthogonal mates: z _|_ x and w _|_ y under the conjugated pairing
  // used by the product map, so the three generators below are exactly
  // the orthocomplement of vectorize(x y*).
  Vector z(2), w(2);
  z << -std::conj(xu(1)), std::conj(xu(0));
  w << -std::conj(yu(1)), std::conj(yu(0));
  const std::vector<Vector> gen = {product_vec(z, yu), product_vec(xu, w),
                                   product_vec(z, w)};
  const std::vector<Vector> gen_pt = {partner_vec(z, yu), partner_vec(xu, w),
                                      partner_vec(z, w)};
  const auto d = subspace_from_vectors(kQubitPair, gen);
  const auto e = subspace_from_vectors(kQubitPair, gen_pt);
  return finish(FaceClass::MaximalConjugate, d, e,
                BipartiteMatrix(kQubitPair, sum_of_projectors(gen)));
}

CatalogFace face_class_maximal_left(const RectMatrix& v,
                                    const FeasibilityOptions& opts) {
  const Vector vh = unit_vec_rank2(v, "maximal_left");
  const auto d = complement(subspace_from_vectors(kQubitPair, {vh}));
  const auto e = full_subspace(kQubitPair);

  // V proportional to the identity is the worked example's face; ship its
  // accumulated state as the canonical certificate.
  const Vector ih = vectorize(Matrix::Identity(2, 2)) / std::sqrt(2.0);
  if (std::abs(1.0 - std::abs(ih.dot(vh))) <= 1e-9)
    return finish(FaceClass::MaximalLeft, d, e, reference_example());

  // Rank-two V keeps the block transpose of the complement projector
  // strictly positive definite, so the projector itself certifies.
  const Matrix proj = Matrix::Identity(4, 4) - vh * vh.adjoint();
  try {
    return finish(FaceClass::MaximalLeft, d, e,
                  BipartiteMatrix(kQubitPair, proj));
  } catch (const ContractViolation&) {
    const auto check = is_intersection_pair(d, e, opts);
    if (!check.verdict || !check.certificate) throw;
    return finish(FaceClass::MaximalLeft, d, e, *check.certificate);
  }
}

CatalogFace face_class_maximal_right(const RectMatrix& w,
                                     const FeasibilityOptions& opts) {
  CatalogFace left = face_class_maximal_left(w, opts);
  // Block transposition swaps the two sides of the pair.
  return finish(FaceClass::MaximalRight, full_subspace(kQubitPair),
                left.pair.D, partial_transpose(left.certificate));
}

std::vector<std::pair<Vector, Vector>> reference_example_pairs() {
  const Complex i(0.0, 1.0);
  auto v2 = [](Complex a, Complex b) {
    Vector v(2);
    v << a, b;
    return v;
  };
  return {{v2(1, 0), v2(0, 1)},
          {v2(0, 1), v2(1, 0)},
          {v2(1, -1), v2(1, 1)},
          {v2(-i, 1), v2(1, -i)}};
}

BipartiteMatrix reference_example() {
  Matrix acc = Matrix::Zero(4, 4);
  for (const auto& [x, y] : reference_example_pairs()) {
    const Vector u = product_vec(x, y);
    acc += u * u.adjoint();
  }
  return BipartiteMatrix(kQubitPair, acc);
}

BipartiteMatrix reference_example_printed() {
  const Complex i(0.0, 1.0);
  Matrix a(4, 4);
  a << Complex(2), Complex(1) - i, Complex(-1) - i, Complex(-2),
      Complex(1) + i, Complex(3), Complex(0), Complex(-1) - i,
      Complex(-1) + i, Complex(0), Complex(3), Complex(1) - i,
      Complex(-2), Complex(-1) + i, Complex(1) + i, Complex(2);
  return BipartiteMatrix(kQubitPair, a);
}

namespace {

// Random well-conditioned 2x2 matrix for the maximal and complement
// classes.
RectMatrix random_rank2(std::mt19937_64& rng) {
  for (int tries = 0; tries < 32; ++tries) {
    RectMatrix v = random_gaussian_matrix(2, 2, rng);
    Eigen::JacobiSVD<RectMatrix> svd(v);
    if (svd.singularValues()(1) > 0.2 * svd.singularValues()(0)) return v;
  }
  throw ConvergenceError("random_rank2: draws kept degenerating");
}

}  // namespace

CatalogReport validate_catalog(uint64_t seed, int trials,
                               const FeasibilityOptions& opts) {
  if (trials < 1)
    throw ContractViolation("validate_catalog: trials must be positive");
  CatalogReport report;
  report.seed = seed;
  report.trials = trials;

  for (int t = 0; t < trials; ++t) {
    auto rng = make_rng(seed, static_cast<uint64_t>(t) + 1);
    auto note = [&](FaceClass cls, const std::string& what) {
      report.failures.push_back("trial " + std::to_string(t) + " " +
                                face_class_name(cls) + ": " + what);
    };

    std::vector<CatalogFace> faces;
    auto build = [&](FaceClass cls, auto&& fn) {
      try {
        faces.push_back(fn());
      } catch (const Error& err) {
        note(cls, std::string("construction failed: ") + err.what());
      }
    };

    build(FaceClass::ExtremalRay, [&] {
      return face_class_extremal(random_unit_vector(2, rng),
                                 random_unit_vector(2, rng));
    });
    build(FaceClass::TwoProduct, [&] {
      for (int tries = 0; tries < 32; ++tries) {
        const Vector x = random_unit_vector(2, rng);
        const Vector y = random_unit_vector(2, rng);
        const Vector z = random_unit_vector(2, rng);
        const Vector w = random_unit_vector(2, rng);
        if (std::abs(cross2(x, z)) > 0.1 && std::abs(cross2(y, w)) > 0.1)
          return face_class_two_product(x, y, z, w);
      }
      throw ConvergenceError("two_product draws kept degenerating");
    });
    build(FaceClass::RankTwoComplement, [&] {
      for (int tries = 0; tries < 32; ++tries) {
        std::vector<Vector> gen, gen_pt;
        for (int k = 0; k < 3; ++k) {
          const Vector x = random_unit_vector(2, rng);
          const Vector y = random_unit_vector(2, rng);
          gen.push_back(product_vec(x, y));
          gen_pt.push_back(partner_vec(x, y));
        }
        const auto d = subspace_from_vectors(kQubitPair, gen);
        const auto e = subspace_from_vectors(kQubitPair, gen_pt);
        if (d.dim() != 3 || e.dim() != 3) continue;
        const RectMatrix v = complement(d).basis_matrix(0);
        const RectMatrix w = complement(e).basis_matrix(0);
        return face_class_rank_two_complement(v, w, opts);
      }
      throw ConvergenceError("rank_two_complement draws kept degenerating");
    });
    build(FaceClass::MaximalConjugate, [&] {
      return face_class_maximal_conjugate(random_unit_vector(2, rng),
                                          random_unit_vector(2, rng));
    });
    build(FaceClass::MaximalLeft,
          [&] { return face_class_maximal_left(random_rank2(rng), opts); });
    build(FaceClass::MaximalRight,
          [&] { return face_class_maximal_right(random_rank2(rng), opts); });

    for (const auto& face : faces) {
      ++report.checks_run;
      const auto check = is_intersection_pair(face.pair.D, face.pair.E, opts);
      if (!check.verdict)
        note(face.face_class, "no independent certificate found");

      const auto recovered = face_of_state(face.certificate);
      if (!same_subspace(recovered.D, face.pair.D) ||
          !same_subspace(recovered.E, face.pair.E))
        note(face.face_class, "certificate does not recover the pair");

      const bool maximal = face.face_class == FaceClass::MaximalConjugate ||
                           face.face_class == FaceClass::MaximalLeft ||
                           face.face_class == FaceClass::MaximalRight;
      if (maximal) {
        const Vector x = random_unit_vector(2, rng);
        const Vector y = random_unit_vector(2, rng);
        const auto dj = join(face.pair.D, product_vec(x, y));
        const auto ej = join(face.pair.E, partner_vec(x, y));
        if (!dj.is_full() || !ej.is_full())
          note(face.face_class, "product join failed to reach the full pair");
      }
    }
  }
  return report;
}

}  // namespace pptcone
