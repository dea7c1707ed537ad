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

#ifndef COHERENCE_CLOCK_H_
#define COHERENCE_CLOCK_H_

#include <vector>

#include "coherence/linalg.h"

namespace coherence {

// Probability mass on the integers offset, offset+1, ...
struct IntegerDistribution {
  long offset = 0;
  std::vector<double> probs;

  long lo() const { return offset; }
  long hi() const { return offset + static_cast<long>(probs.size()) - 1; }
  double at(long n) const;
  double mass() const;
  double mean() const;
  double variance() const;
  // q(n) = p(n - k)
  IntegerDistribution shifted(long k) const;
  // Drops zero entries at both ends.
  IntegerDistribution trimmed() const;
  std::vector<long> support() const;

  static IntegerDistribution point(long n);
  static IntegerDistribution from_masses(const std::vector<long>& n,
                                         const std::vector<double>& p);
};

struct PeriodicClockState {
  PureState state;
  HermitianObservable hamiltonian;
  double tau = 0.0;
  double reference_energy = 0.0;  // energy of level n = 0
  std::vector<long> levels;       // occupied, ascending
  IntegerDistribution distribution;
};

// Projector weights p(n) on energies reference + 2*pi*n/tau. Throws
// IncommensurateSpectrum when an occupied gap is off the grid.
PeriodicClockState extract_distribution(
    const PureState& psi, const HermitianObservable& h, double tau,
    const Tolerances& tol = kDefaultTolerances);

long support_gcd(const IntegerDistribution& p);

// tau / gcd(occupied level differences); 0 for an energy eigenstate.
double period(const PureState& psi, const HermitianObservable& h, double tau,
              const Tolerances& tol = kDefaultTolerances);

// True when every coherence of rho between eigenspaces of H sits at a
// multiple of 2*pi/tau, i.e. the dynamics of rho repeats after tau.
bool coherences_commensurate(const DensityMatrix& rho,
                             const HermitianObservable& h, double tau,
                             const Tolerances& tol = kDefaultTolerances);

IntegerDistribution convolve(const IntegerDistribution& p,
                             const IntegerDistribution& q);
IntegerDistribution convolve_n(const IntegerDistribution& p, int m);

double tv_distance(const IntegerDistribution& p, const IntegerDistribution& q);

// Smallest L <= l_max for which p^{*L} overlaps its own unit shift.
int overlap_copy_count(const IntegerDistribution& p, int l_max = 64);

struct TranslatedPoisson {
  double mu = 0.0;
  double sigma2 = 0.0;
  long shift = 0;
  double gamma = 0.0;
  IntegerDistribution distribution;
};

// s = floor(mu - sigma2), gamma = mu - sigma2 - s, Z - s ~ Poisson(sigma2 + gamma).
TranslatedPoisson translated_poisson(double mu, double sigma2,
                                     const Tolerances& tol = kDefaultTolerances);

struct BarbourTerms {
  double a = 0.0;    // per-copy standard deviation
  double b = 0.0;    // nu
  double c = 0.0;    // phi / sigma^2
  double phi = 0.0;
  double nu = 0.0;
};

BarbourTerms barbour_terms(const IntegerDistribution& p);
// c / sqrt(m b - 1/2) + 2 / (m a); infinite when m b <= 1/2.
double barbour_bound(const IntegerDistribution& p, int m);

// min{x, sqrt(2/e) (sqrt(sigma2 + x) - sqrt(sigma2))}
double poisson_distance_bound(double sigma2, double x);

}  // namespace coherence

#endif  // COHERENCE_CLOCK_H_
