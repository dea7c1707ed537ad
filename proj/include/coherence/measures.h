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

#ifndef COHERENCE_MEASURES_H_
#define COHERENCE_MEASURES_H_

#include "coherence/linalg.h"

namespace coherence {

// Value of a coherence quantifier. `infinite` is only ever set for the
// purity-of-coherence family and the Q2 divergence.
struct MeasureValue {
  double value = 0.0;
  bool infinite = false;

  static MeasureValue finite(double v) { return {v, false}; }
  static MeasureValue inf() { return {0.0, true}; }
};

// Quantum Fisher information of the orbit exp(-iHt) rho exp(iHt).
MeasureValue qfi(const DensityMatrix& rho, const HermitianObservable& h,
                 const Tolerances& tol = kDefaultTolerances);

double energy_variance(const PureState& psi, const HermitianObservable& h);
double energy_mean(const PureState& psi, const HermitianObservable& h);

// True iff the support projector of rho commutes with H.
bool support_commutes(const DensityMatrix& rho, const HermitianObservable& h,
                      const Tolerances& tol = kDefaultTolerances);

// Tr(H rho^2 H rho^-1) - Tr(rho H^2); infinite unless support_commutes.
MeasureValue purity_of_coherence(const DensityMatrix& rho,
                                 const HermitianObservable& h,
                                 const Tolerances& tol = kDefaultTolerances);

// Wigner-Yanase skew information -Tr([sqrt(rho), H]^2) / 2.
double skew_information(const DensityMatrix& rho, const HermitianObservable& h,
                        const Tolerances& tol = kDefaultTolerances);

// Tr(rho^2 sigma^-1), infinite when supp(rho) is not inside supp(sigma).
MeasureValue q2_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol = kDefaultTolerances);

// Tr(rho^a H rho^(1-a) H) - Tr(rho H^2) for a in (1, 2].
MeasureValue renyi_purity_monotone(const DensityMatrix& rho,
                                   const HermitianObservable& h, double alpha,
                                   const Tolerances& tol = kDefaultTolerances);

// -4 d^2/dt^2 of the fidelity between rho and its time-evolved copy,
// by a central difference with one Richardson step. h in [1e-4, 1e-2].
double qfi_via_fidelity(const DensityMatrix& rho, const HermitianObservable& h,
                        double step = 2e-3);

// (F(psi_max)/4) (p_max^2 / (1 - p_max) - 1), a lower bound on P.
double near_pure_bound(const DensityMatrix& rho, const HermitianObservable& h,
                       const Tolerances& tol = kDefaultTolerances);

// V(psi) (2/eps - 3): least purity of coherence of any state within trace
// distance eps of psi. eps in (0, 2/3].
double cor_var_ceiling(const PureState& target, const HermitianObservable& h,
                       double eps);

}  // namespace coherence

#endif  // COHERENCE_MEASURES_H_
