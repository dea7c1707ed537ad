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

#include "coherence/random.h"

#include <cmath>

namespace coherence {

Rng rng_for(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

ComplexMatrix random_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = Complex(n(rng), n(rng));
  return g;
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  ComplexMatrix g = random_gaussian(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  // Fix the phases of R's diagonal so the draw is Haar.
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    Complex z = r(j, j);
    if (std::abs(z) > 0) q.col(j) *= z / std::abs(z);
  }
  return q;
}

HermitianObservable random_hamiltonian(int d, Rng& rng) {
  ComplexMatrix g = random_gaussian(d, d, rng);
  return HermitianObservable((g + g.adjoint()) * 0.5);
}

HermitianObservable random_level_hamiltonian(int d, int max_level, Rng& rng,
                                             std::vector<int>* levels) {
  std::vector<int> n(d);
  RealVector e(d);
  for (int i = 0; i < d; ++i) {
    n[i] = uniform_int(0, max_level, rng);
    e[i] = n[i];
  }
  ComplexMatrix u = random_unitary(d, rng);
  if (levels) *levels = n;
  return HermitianObservable(u * e.cast<Complex>().asDiagonal() * u.adjoint());
}

PureState random_pure(int d, Rng& rng) {
  return PureState::normalized(random_gaussian(d, 1, rng).col(0));
}

DensityMatrix random_density(int d, int rank, Rng& rng) {
  ComplexMatrix g = random_gaussian(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  return DensityMatrix::trusted(m / m.trace().real());
}

DensityMatrix random_density(int d, Rng& rng) { return random_density(d, d, rng); }

int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(double lo, double hi, Rng& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace coherence
