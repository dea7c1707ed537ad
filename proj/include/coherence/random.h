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

#ifndef COHERENCE_RANDOM_H_
#define COHERENCE_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

#include "coherence/linalg.h"

namespace coherence {

using Rng = std::mt19937_64;

// Independent stream for (seed, index), e.g. one per trial.
Rng rng_for(std::uint64_t seed, std::uint64_t index = 0);

ComplexMatrix random_gaussian(int rows, int cols, Rng& rng);
ComplexMatrix random_unitary(int d, Rng& rng);
HermitianObservable random_hamiltonian(int d, Rng& rng);
// exp(-iHt)-periodic Hamiltonian: integer levels in [0, max_level] placed
// in a random eigenbasis. tau = 2*pi so level n has energy n.
HermitianObservable random_level_hamiltonian(int d, int max_level, Rng& rng,
                                             std::vector<int>* levels = nullptr);
PureState random_pure(int d, Rng& rng);
// Rank-r state G G^dag / Tr with G a d x r Gaussian matrix.
DensityMatrix random_density(int d, int rank, Rng& rng);
DensityMatrix random_density(int d, Rng& rng);  // full rank
int uniform_int(int lo, int hi, Rng& rng);      // inclusive
double uniform_real(double lo, double hi, Rng& rng);

}  // namespace coherence

#endif  // COHERENCE_RANDOM_H_
