// Copyright 2026 The Coherence Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherence/io.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "coherence/errors.h"

namespace coherence {

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw CoherenceError(ErrorCode::kSchemaError, what);
}

std::vector<std::vector<double>> real_rows(const Json& j, const char* key) {
  if (!j.is_array()) schema(std::string("\"") + key + "\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) schema(std::string("\"") + key + "\" rows must be arrays");
    std::vector<double> r;
    for (const Json& x : row) {
      if (!x.is_number()) schema(std::string("\"") + key + "\" entries must be numbers");
      r.push_back(x.get<double>());
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<double> real_list(const Json& j, const char* key) {
  if (!j.is_array()) schema(std::string("\"") + key + "\" must be an array");
  std::vector<double> out;
  for (const Json& x : j) {
    if (!x.is_number()) schema(std::string("\"") + key + "\" entries must be numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

void check_dim(const Json& j, size_t n) {
  if (j.contains("dim") && (!j["dim"].is_number_integer() || j["dim"].get<long>() != static_cast<long>(n))) {
    schema("\"dim\" does not match the data");
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) schema("matrix needs \"re\"");
  auto re = real_rows(j["re"], "re");
  size_t n = re.size();
  if (n == 0) schema("empty matrix");
  check_dim(j, n);
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = real_rows(j["im"], "im");
    if (im.size() != n) schema("\"im\" shape differs from \"re\"");
  }
  ComplexMatrix m(n, n);
  for (size_t r = 0; r < n; ++r) {
    if (re[r].size() != n) schema("matrix must be square");
    if (!im.empty() && im[r].size() != n) schema("\"im\" shape differs from \"re\"");
    for (size_t c = 0; c < n; ++c) m(r, c) = Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json a = Json::array(), b = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      a.push_back(m(r, c).real());
      b.push_back(m(r, c).imag());
    }
    re.push_back(a);
    im.push_back(b);
  }
  return {{"dim", m.rows()}, {"re", re}, {"im", im}};
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re")) schema("vector needs \"re\"");
  auto re = real_list(j["re"], "re");
  if (re.empty()) schema("empty vector");
  check_dim(j, re.size());
  std::vector<double> im;
  if (j.contains("im")) {
    im = real_list(j["im"], "im");
    if (im.size() != re.size()) schema("\"im\" length differs from \"re\"");
  }
  ComplexVector v(re.size());
  for (size_t i = 0; i < re.size(); ++i) v[i] = Complex(re[i], im.empty() ? 0.0 : im[i]);
  return v;
}

Json vector_to_json(const ComplexVector& v) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  return {{"dim", v.size()}, {"re", re}, {"im", im}};
}

State state_from_json(const Json& j, const Tolerances& tol) {
  if (!j.is_object() || !j.contains("re") || !j["re"].is_array() || j["re"].empty()) {
    schema("state needs a nonempty \"re\"");
  }
  if (j["re"][0].is_array()) {
    try {
      return DensityMatrix(matrix_from_json(j), tol);
    } catch (const CoherenceError& e) {
      if (e.code() == ErrorCode::kSchemaError) throw;
      throw CoherenceError(ErrorCode::kValidationError, e.what());
    }
  }
  try {
    return PureState(vector_from_json(j), tol);
  } catch (const CoherenceError& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    throw CoherenceError(ErrorCode::kValidationError, e.what());
  }
}

Json state_to_json(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return vector_to_json(p->amplitudes());
  return matrix_to_json(std::get<DensityMatrix>(s).matrix());
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CoherenceError(ErrorCode::kSchemaError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw CoherenceError(ErrorCode::kSchemaError, path + ": " + e.what());
  }
}

State load_state(const std::string& path, const Tolerances& tol) {
  return state_from_json(read_json_file(path), tol);
}

DensityMatrix as_density(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return DensityMatrix(*p);
  return std::get<DensityMatrix>(s);
}

PureState as_pure(const State& s) {
  if (const auto* p = std::get_if<PureState>(&s)) return *p;
  const DensityMatrix& rho = std::get<DensityMatrix>(s);
  if (rho.support_rank() != 1) {
    throw CoherenceError(ErrorCode::kValidationError, "a pure state is required");
  }
  return PureState::normalized(rho.eigenbasis().col(0));
}

LoadedHamiltonian hamiltonian_from_json(const Json& j, double tau,
                                        const Tolerances& tol) {
  LoadedHamiltonian out;
  if (j.is_object() && j.contains("levels_in_2pi_over_tau")) {
    const Json& lv = j["levels_in_2pi_over_tau"];
    if (!lv.is_array() || lv.empty()) schema("levels must be a nonempty array");
    for (const Json& x : lv) {
      if (!x.is_number_integer()) schema("levels must be integers");
      out.levels.push_back(x.get<long>());
    }
    int d = static_cast<int>(out.levels.size());
    ComplexMatrix basis = ComplexMatrix::Identity(d, d);
    if (j.contains("basis")) {
      basis = matrix_from_json(j["basis"]);
      if (basis.rows() != d) schema("basis dimension differs from the level count");
      if (max_abs(basis.adjoint() * basis - ComplexMatrix::Identity(d, d)) > tol.tol_herm) {
        throw CoherenceError(ErrorCode::kValidationError, "basis is not unitary");
      }
    }
    RealVector e(d);
    for (int i = 0; i < d; ++i) e[i] = 2.0 * std::numbers::pi * out.levels[i] / tau;
    out.h = HermitianObservable(basis * e.cast<Complex>().asDiagonal() * basis.adjoint(), tol);
    out.from_levels = true;
    return out;
  }
  try {
    out.h = HermitianObservable(matrix_from_json(j), tol);
  } catch (const CoherenceError& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    throw CoherenceError(ErrorCode::kValidationError, e.what());
  }
  return out;
}

LoadedHamiltonian load_hamiltonian(const std::string& path, double tau,
                                   const Tolerances& tol) {
  return hamiltonian_from_json(read_json_file(path), tau, tol);
}

HermitianObservable snap_levels(const HermitianObservable& h, double tau,
                                bool* moved, const Tolerances& tol) {
  double unit = 2.0 * std::numbers::pi / tau;
  RealVector e = h.eigenvalues();
  bool any = false;
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    double x = (e[i] - e[0]) / unit;
    double k = std::round(x);
    if (x != k && std::abs(x - k) <= tol.level_tol) {
      e[i] = e[0] + k * unit;
      any = true;
    }
  }
  if (moved) *moved = any;
  if (!any) return h;
  return HermitianObservable(h.eigenvectors() * e.cast<Complex>().asDiagonal() *
                             h.eigenvectors().adjoint());
}

}  // namespace coherence
