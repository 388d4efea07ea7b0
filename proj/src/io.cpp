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

#include "pptcone/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace pptcone {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(ParseStatus status, const std::string& what) {
  throw ParseError(status, what);
}

const char* kind_name(MatrixFileKind k) {
  switch (k) {
    case MatrixFileKind::State: return "state";
    case MatrixFileKind::Rect: return "rect";
    case MatrixFileKind::Subspace: return "subspace";
  }
  return "unknown";
}

MatrixFileKind kind_from_name(const std::string& name) {
  if (name == "state") return MatrixFileKind::State;
  if (name == "rect") return MatrixFileKind::Rect;
  if (name == "subspace") return MatrixFileKind::Subspace;
  fail(ParseStatus::MalformedJson,
       "matrix file: unknown kind \"" + name + "\"");
}

double finite_number(const ordered_json& cell, const char* side, int row,
                     int col) {
  if (!cell.is_number())
    fail(ParseStatus::MalformedJson,
         "matrix file: entry (" + std::to_string(row + 1) + ", " +
             std::to_string(col + 1) + ") " + side + " part is not a number");
  const double v = cell.get<double>();
  if (!std::isfinite(v))
    fail(ParseStatus::NonFiniteNumber,
         "matrix file: entry (" + std::to_string(row + 1) + ", " +
             std::to_string(col + 1) + ") " + side + " part is not finite");
  return v;
}

int positive_dimension(const ordered_json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer())
    fail(ParseStatus::MalformedJson,
         std::string("matrix file: \"") + field +
             "\" must be a positive integer");
  const long long v = j[field].get<long long>();
  if (v < 1 || v > 64)
    fail(ParseStatus::DimensionMismatch,
         std::string("matrix file: \"") + field + "\" out of range");
  return static_cast<int>(v);
}

}  // namespace

const char* parse_status_name(ParseStatus s) {
  switch (s) {
    case ParseStatus::MalformedJson: return "MalformedJson";
    case ParseStatus::DimensionMismatch: return "DimensionMismatch";
    case ParseStatus::NonFiniteNumber: return "NonFiniteNumber";
  }
  return "unknown";
}

MatrixFile parse_matrix_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::out_of_range& e) {
    // Number overflow while parsing, the one non-structural rejection.
    fail(ParseStatus::NonFiniteNumber,
         std::string("matrix file: ") + e.what());
  } catch (const std::exception& e) {
    fail(ParseStatus::MalformedJson, std::string("matrix file: ") + e.what());
  }
  if (!j.is_object())
    fail(ParseStatus::MalformedJson,
         "matrix file: top level must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    fail(ParseStatus::MalformedJson,
         "matrix file: \"kind\" must be a string");

  MatrixFile f;
  f.kind = kind_from_name(j["kind"].get<std::string>());
  f.m = positive_dimension(j, "m");
  f.n = positive_dimension(j, "n");
  const int total = f.m * f.n;

  if (!j.contains("data") || !j["data"].is_array())
    fail(ParseStatus::MalformedJson,
         "matrix file: \"data\" must be an array of rows");
  const auto& data = j["data"];
  const int rows = static_cast<int>(data.size());
  int expect_rows = -1, expect_cols = total;
  switch (f.kind) {
    case MatrixFileKind::State: expect_rows = total; break;
    case MatrixFileKind::Rect: expect_rows = f.m; expect_cols = f.n; break;
    case MatrixFileKind::Subspace: break;  // any number of generators
  }
  if (expect_rows >= 0 && rows != expect_rows)
    fail(ParseStatus::DimensionMismatch,
         "matrix file: expected " + std::to_string(expect_rows) +
             " rows for kind " + kind_name(f.kind) + ", got " +
             std::to_string(rows));

  f.data = Matrix::Zero(rows, expect_cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = data[r];
    if (!row.is_array() || static_cast<int>(row.size()) != expect_cols)
      fail(ParseStatus::DimensionMismatch,
           "matrix file: row " + std::to_string(r + 1) + " must hold " +
               std::to_string(expect_cols) + " entries");
    for (int c = 0; c < expect_cols; ++c) {
      const auto& cell = row[c];
      if (!cell.is_array() || cell.size() != 2)
        fail(ParseStatus::MalformedJson,
             "matrix file: entry (" + std::to_string(r + 1) + ", " +
                 std::to_string(c + 1) + ") must be a [re, im] pair");
      f.data(r, c) = Complex(finite_number(cell[0], "real", r, c),
                             finite_number(cell[1], "imaginary", r, c));
    }
  }

  if (f.kind == MatrixFileKind::Subspace && rows > 0) {
    // Orthonormal inputs pass through untouched; anything else is
    // replaced by an orthonormal basis of its span and flagged.
    const Matrix gram = f.data * f.data.adjoint();
    const bool already =
        (gram - Matrix::Identity(rows, rows)).norm() < 1e-12;
    if (!already) {
      std::vector<Vector> span;
      span.reserve(rows);
      for (int r = 0; r < rows; ++r)
        span.push_back(f.data.row(r).transpose());
      const MatrixSubspace s = subspace_from_vectors(f.dims(), span);
      Matrix basis_rows(s.dim(), total);
      for (int k = 0; k < s.dim(); ++k)
        basis_rows.row(k) = s.basis.col(k).transpose();
      f.data = basis_rows;
      f.orthonormalized_on_load = true;
    }
  }
  return f;
}

MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ParseStatus::MalformedJson,
         "matrix file: cannot read \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_file(buf.str());
}

std::string serialize_matrix_file(const MatrixFile& f) {
  ordered_json j;
  j["kind"] = kind_name(f.kind);
  j["m"] = f.m;
  j["n"] = f.n;
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < f.data.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < f.data.cols(); ++c)
      row.push_back({f.data(r, c).real(), f.data(r, c).imag()});
    rows.push_back(std::move(row));
  }
  j["data"] = std::move(rows);
  return j.dump(2) + "\n";
}

BipartiteMatrix MatrixFile::as_state() const {
  if (kind != MatrixFileKind::State)
    throw ContractViolation("matrix file: expected kind state, have " +
                            std::string(kind_name(kind)));
  return BipartiteMatrix(dims(), data);
}

RectMatrix MatrixFile::as_rect() const {
  if (kind != MatrixFileKind::Rect)
    throw ContractViolation("matrix file: expected kind rect, have " +
                            std::string(kind_name(kind)));
  return data;
}

MatrixSubspace MatrixFile::as_subspace() const {
  if (kind != MatrixFileKind::Subspace)
    throw ContractViolation("matrix file: expected kind subspace, have " +
                            std::string(kind_name(kind)));
  std::vector<Vector> span;
  span.reserve(static_cast<size_t>(data.rows()));
  for (int r = 0; r < data.rows(); ++r)
    span.push_back(data.row(r).transpose());
  return subspace_from_vectors(dims(), span);
}

MatrixFile matrix_file_from_state(const BipartiteMatrix& a) {
  MatrixFile f;
  f.m = a.dims.m;
  f.n = a.dims.n;
  f.kind = MatrixFileKind::State;
  f.data = a.mat;
  return f;
}

MatrixFile matrix_file_from_rect(const RectMatrix& v, BipartiteDims dims) {
  if (v.rows() != dims.m || v.cols() != dims.n)
    throw DimensionError("matrix_file_from_rect: shape mismatch");
  MatrixFile f;
  f.m = dims.m;
  f.n = dims.n;
  f.kind = MatrixFileKind::Rect;
  f.data = v;
  return f;
}

MatrixFile matrix_file_from_subspace(const MatrixSubspace& s) {
  MatrixFile f;
  f.m = s.dims.m;
  f.n = s.dims.n;
  f.kind = MatrixFileKind::Subspace;
  Matrix rows(s.dim(), s.dims.total());
  for (int k = 0; k < s.dim(); ++k) rows.row(k) = s.basis.col(k).transpose();
  f.data = rows;
  return f;
}

}  // namespace pptcone
