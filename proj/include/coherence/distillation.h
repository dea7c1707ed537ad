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

#ifndef COHERENCE_DISTILLATION_H_
#define COHERENCE_DISTILLATION_H_

#include "coherence/linalg.h"
#include "coherence/measures.h"

namespace coherence {

// Coherent, yet with bounded purity of coherence: no c-bits can be
// distilled at a nonzero rate.
bool is_bound_resource(const DensityMatrix& rho, const HermitianObservable& h,
                       const Tolerances& tol = kDefaultTolerances);

// prob V(target) (2/eps - 3) / P(rho) copies. Zero when P(rho) is infinite
// or the target is incoherent; infinite when P(rho) = 0 and the target is
// coherent.
MeasureValue distillation_copy_floor(const DensityMatrix& rho,
                                     const HermitianObservable& h,
                                     const PureState& target,
                                     const HermitianObservable& h_target,
                                     double eps, double prob,
                                     const Tolerances& tol = kDefaultTolerances);

struct OmegaState {
  DensityMatrix matrix;  // on A (x) B
  int d_a = 0;
  int d_b = 0;
  HermitianObservable h_a;
  HermitianObservable h_b;

  // No symmetry: zero Hamiltonians on both factors.
  static OmegaState generic(const DensityMatrix& m, int d_a, int d_b);
};

// sigma_A (x) |psi_bar><psi_bar| dephased in the eigenspaces of
// H_A (x) I - I (x) H_B; psi_bar is psi conjugated in the eigenbasis of H_B.
OmegaState omega_state(const DensityMatrix& sigma_a, const HermitianObservable& h_a,
                       const PureState& psi_b, const HermitianObservable& h_b,
                       const Tolerances& tol = kDefaultTolerances);

struct SdpResult {
  double optimum = 0.0;  // min Tr tau, primal (upper) value
  double hmin = 0.0;     // -log2(optimum)
  ComplexMatrix tau;
  ComplexMatrix dual_certificate;
  double dual_value = 0.0;  // Tr(Omega X), lower value
  double primal_dual_gap = 0.0;
  double min_slack_eig = 0.0;         // lambda_min(tau (x) I - Omega)
  double partial_trace_residual = 0.0;  // ||Tr_B X - I||_max
  int iterations = 0;
};

// min Tr tau s.t. tau (x) I >= Omega. tau is restricted to the commutant
// of H_A and the constraint is split over the eigenspaces of the
// difference Hamiltonian. Throws SolverStall when gap_tol is not met.
SdpResult conditional_min_entropy(const OmegaState& omega,
                                  const Tolerances& tol = kDefaultTolerances);

double max_distill_fidelity(const DensityMatrix& sigma_a,
                            const HermitianObservable& h_a, const PureState& psi_b,
                            const HermitianObservable& h_b,
                            const Tolerances& tol = kDefaultTolerances);

struct QubitBound {
  double exact = 0.0;
  double asymptotic = 0.0;
};

// Infidelity floor for n copies of lambda Phi + (1 - lambda) I/2.
QubitBound qubit_infidelity_bound(double lambda, int n);

// Achievable infidelity of the covariant qubit purification protocol,
// (1 - lambda) / (2 lambda^2 n).
double cirac_comparison(double lambda, int n);

// [eps P(rho) + 2 (d_chi - 1) V(chi) / n] / (1 - 3 eps), eps in (0, 1/3).
MeasureValue helper_bound(const DensityMatrix& rho, const HermitianObservable& h,
                          const PureState& chi, const HermitianObservable& h_help,
                          int n, double eps,
                          const Tolerances& tol = kDefaultTolerances);

DensityMatrix tensor_power(const DensityMatrix& rho, int n);
// H (x) I ... + ... + I ... (x) H on n copies.
HermitianObservable copies_hamiltonian(const HermitianObservable& h, int n);

}  // namespace coherence

#endif  // COHERENCE_DISTILLATION_H_
