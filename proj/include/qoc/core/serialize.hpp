// Copyright 2026 The qoc Authors
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

#include <json.hpp>

#include "qoc/core/state.hpp"

namespace qoc {

using json = nlohmann::json;

// Text form: {"kind": ..., "dim": n, "entries": [[re, im], ...]}, row-major.

inline json matrix_entries_to_json(const CMatrix& m) {
  json arr = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      arr.push_back({m(r, c).real(), m(r, c).imag()});
  return arr;
}

inline cplx entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (!e.is_array() || e.size() != 2) {
    throw Error(ErrorCode::schema, "entry must be [re, im]");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

inline CMatrix matrix_from_json(const json& j, Eigen::Index dim) {
  const json& e = j.at("entries");
  if (!e.is_array() || static_cast<Eigen::Index>(e.size()) != dim * dim) {
    throw Error(ErrorCode::schema, "entries must have dim*dim elements");
  }
  CMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      m(r, c) = entry_from_json(e[static_cast<std::size_t>(r * dim + c)]);
  return m;
}

inline json to_json(const Operator& op) {
  return {{"kind", "operator"},
          {"dim", op.dim()},
          {"entries", matrix_entries_to_json(op.matrix())}};
}

inline Operator operator_from_json(const json& j) {
  const auto dim = j.at("dim").get<Eigen::Index>();
  if (dim <= 0) throw Error(ErrorCode::schema, "dim must be positive");
  return Operator(matrix_from_json(j, dim));
}

inline json to_json(const QuantumState& s) {
  if (s.is_ket()) {
    json arr = json::array();
    for (Eigen::Index k = 0; k < s.dim(); ++k)
      arr.push_back({s.ket_vector()(k).real(), s.ket_vector()(k).imag()});
    return {{"kind", "ket"}, {"dim", s.dim()}, {"entries", arr}};
  }
  return {{"kind", "density"},
          {"dim", s.dim()},
          {"entries", matrix_entries_to_json(s.rho())}};
}

inline QuantumState state_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const auto dim = j.at("dim").get<Eigen::Index>();
  if (dim <= 0) throw Error(ErrorCode::schema, "dim must be positive");
  if (kind == "ket") {
    const json& e = j.at("entries");
    if (static_cast<Eigen::Index>(e.size()) != dim) {
      throw Error(ErrorCode::schema, "ket entries must have dim elements");
    }
    CVector v(dim);
    for (Eigen::Index k = 0; k < dim; ++k)
      v(k) = entry_from_json(e[static_cast<std::size_t>(k)]);
    return QuantumState::ket(v);
  }
  if (kind == "density") return QuantumState::density(matrix_from_json(j, dim));
  throw Error(ErrorCode::schema, "unknown state kind '" + kind + "'");
}

}  // namespace qoc
