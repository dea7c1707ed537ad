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

#ifndef COHERENCE_PURIFICATION_H_
#define COHERENCE_PURIFICATION_H_

#include <vector>

#include "coherence/linalg.h"

namespace coherence {

struct Purification {
  PureState joint_state;                  // system index major
  HermitianObservable aux_hamiltonian;    // on A
  HermitianObservable total_hamiltonian;  // H_S x I + I x H_A
  double total_variance = 0.0;
  double kkt_residual = 0.0;
};

struct PureEnsemble {
  std::vector<double> weights;
  std::vector<PureState> states;
  double average_variance = 0.0;

  ComplexMatrix mixture() const;
};

// Eigenbasis of rho, made unique inside degenerate eigenspaces by also
// diagonalizing H there. Spectrum descending and clamped at rank_cutoff.
struct SpectralFrame {
  RealVector p;
  ComplexMatrix phi;    // columns |phi_i>
  ComplexMatrix h_phi;  // <phi_i|H|phi_j>
};
SpectralFrame adapted_frame(const DensityMatrix& rho,
                            const HermitianObservable& h,
                            const Tolerances& tol = kDefaultTolerances);

// sum_i sqrt(p_i) |phi_i>|phi_i>
PureState canonical_purification(const DensityMatrix& rho);
PureState canonical_purification(const SpectralFrame& frame);

// H_A = sum_ij c_ij <phi_i|H|phi_j> |phi_j><phi_i| with
// c_ij = -2 sqrt(p_i p_j) / (p_i + p_j), zero off the support.
HermitianObservable optimal_aux_hamiltonian(
    const DensityMatrix& rho, const HermitianObservable& h_s,
    const Tolerances& tol = kDefaultTolerances);

// ||(G rho + rho G)/2 + sqrt(rho) H sqrt(rho)||_max where G is H_A
// transposed in the purification basis.
double aux_kkt_residual(const DensityMatrix& rho, const HermitianObservable& h_s,
                        const Tolerances& tol = kDefaultTolerances);

Purification build_optimal_purification(
    const DensityMatrix& rho, const HermitianObservable& h_s,
    const Tolerances& tol = kDefaultTolerances);

// Closed form of the QFI of rho under the optimal H_A.
double aux_qfi(const DensityMatrix& rho, const HermitianObservable& h_s,
               const Tolerances& tol = kDefaultTolerances);

// Variance of the canonical purification when H_A = -H_S^T.
double transpose_purification_variance(
    const DensityMatrix& rho, const HermitianObservable& h_s,
    const Tolerances& tol = kDefaultTolerances);

// Outcome states of measuring A in the columns of `basis_a`.
PureEnsemble measured_ensemble(const PureState& joint, int d_s,
                               const ComplexMatrix& basis_a,
                               const HermitianObservable& h_s);

// Measure A of the optimal purification in the eigenbasis of H_A.
PureEnsemble optimal_ensemble(const DensityMatrix& rho,
                              const HermitianObservable& h_s,
                              const Tolerances& tol = kDefaultTolerances);

// Optimal ensemble with every member projected onto the energy partitions
// of rho (levels linked by nonzero coherence). Throws PeriodMismatch when
// some coherence of rho is not a multiple of 2*pi/tau.
PureEnsemble period_respecting_ensemble(
    const DensityMatrix& rho, const HermitianObservable& h, double tau,
    const Tolerances& tol = kDefaultTolerances);

double average_variance(const PureEnsemble& ens, const HermitianObservable& h);

}  // namespace coherence

#endif  // COHERENCE_PURIFICATION_H_
