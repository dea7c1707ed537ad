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

#ifndef COHERENCE_IO_H_
#define COHERENCE_IO_H_

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "coherence/linalg.h"

namespace coherence {

using Json = nlohmann::json;

// {"dim": n, "re": [[...]], "im": [[...]]}; "im" may be omitted.
ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);
// Same with one-dimensional "re"/"im".
ComplexVector vector_from_json(const Json& j);
Json vector_to_json(const ComplexVector& v);

using State = std::variant<DensityMatrix, PureState>;

// One-dimensional "re" gives a PureState, two-dimensional a DensityMatrix.
State state_from_json(const Json& j, const Tolerances& tol = kDefaultTolerances);
Json state_to_json(const State& s);
State load_state(const std::string& path, const Tolerances& tol = kDefaultTolerances);
DensityMatrix as_density(const State& s);
// Throws ValidationError for a mixed state.
PureState as_pure(const State& s);

struct LoadedHamiltonian {
  HermitianObservable h;
  bool from_levels = false;
  std::vector<long> levels;  // when from_levels
};

// Either a dense matrix or {"levels_in_2pi_over_tau": [ints], "basis": matrix}
// with H = basis diag(2 pi n / tau) basis^dag.
LoadedHamiltonian hamiltonian_from_json(const Json& j, double tau,
                                        const Tolerances& tol = kDefaultTolerances);
LoadedHamiltonian load_hamiltonian(const std::string& path, double tau,
                                   const Tolerances& tol = kDefaultTolerances);

// Moves every eigenvalue within level_tol of the 2*pi/tau grid (relative to
// the lowest one) onto it. `moved` reports whether anything changed.
HermitianObservable snap_levels(const HermitianObservable& h, double tau,
                                bool* moved,
                                const Tolerances& tol = kDefaultTolerances);

Json read_json_file(const std::string& path);

}  // namespace coherence

#endif  // COHERENCE_IO_H_
