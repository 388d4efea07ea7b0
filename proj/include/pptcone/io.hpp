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

#include <string>

#include "pptcone/subspace.hpp"
#include "pptcone/tensor.hpp"

namespace pptcone {

// Why a matrix file was rejected; the name lands verbatim in CLI reports.
enum class ParseStatus { MalformedJson, DimensionMismatch, NonFiniteNumber };

const char* parse_status_name(ParseStatus s);

class ParseError : public Error {
 public:
  ParseError(ParseStatus status, const std::string& what)
      : Error(what), status_(status) {}
  ParseStatus status() const { return status_; }

 private:
  ParseStatus status_;
};

enum class MatrixFileKind { State, Rect, Subspace };

// On-disk payload: complex entries as [re, im] pairs in row-major nested
// arrays.  A `state` file holds one (m*n) x (m*n) matrix, a `rect` file
// one m x n matrix, and a `subspace` file a list of vectorized generators
// of length m*n (possibly empty, meaning the zero subspace).
struct MatrixFile {
  int m = 0;
  int n = 0;
  MatrixFileKind kind = MatrixFileKind::State;
  Matrix data;  // rows x cols exactly as listed in the file
  // Subspace generators are orthonormalized while parsing; this flags
  // inputs that needed adjustment (non-orthonormal or rank-deficient).
  bool orthonormalized_on_load = false;

  BipartiteDims dims() const { return {m, n}; }
  BipartiteMatrix as_state() const;     // requires kind State
  RectMatrix as_rect() const;           // requires kind Rect
  MatrixSubspace as_subspace() const;   // requires kind Subspace
};

// Parses the JSON text of a matrix file.  Every defect maps to one of the
// three ParseStatus identifiers; anything structural (bad JSON, missing
// or mistyped fields, unknown kind, malformed [re, im] cells) is
// MalformedJson, shape problems are DimensionMismatch, and numeric
// overflow or NaN is NonFiniteNumber.
MatrixFile parse_matrix_file(const std::string& text);

// Reads and parses a file from disk; unreadable paths are MalformedJson.
MatrixFile load_matrix_file(const std::string& path);

// Canonical JSON form; parse(serialize(f)) reproduces f byte for byte
// once generators are orthonormal.
std::string serialize_matrix_file(const MatrixFile& f);

// Convenience wrappers for writing results.
MatrixFile matrix_file_from_state(const BipartiteMatrix& a);
MatrixFile matrix_file_from_rect(const RectMatrix& v, BipartiteDims dims);
MatrixFile matrix_file_from_subspace(const MatrixSubspace& s);

}  // namespace pptcone
