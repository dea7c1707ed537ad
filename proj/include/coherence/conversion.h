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

#ifndef COHERENCE_CONVERSION_H_
#define COHERENCE_CONVERSION_H_

#include <utility>
#include <vector>

#include "coherence/clock.h"
#include "coherence/linalg.h"

namespace coherence {

struct ConversionPlan {
  double rate = 0.0;     // output copies per input copy
  int input_copies = 1;  // m
  int input_copies_used = 1;  // after discarding surplus inputs
  int output_copies = 1;      // ceil(R m)
  long shift_k = 0;
  double tv_error = 1.0;
  double fidelity_lower_bound = 0.0;  // max(0, 1 - 2 tv_error)
};

// V1 / V2. Throws ZeroTargetVariance, PeriodMismatch.
double max_rate(const PureState& psi1, const HermitianObservable& h1,
                const PureState& psi2, const HermitianObservable& h2,
                double tau, const Tolerances& tol = kDefaultTolerances);

struct ShiftMatch {
  long k = 0;
  double eps = 1.0;
};

// k minimizing tv(p, q shifted by k); ties go to smaller |k|, then k < 0.
ShiftMatch best_shift(const IntegerDistribution& p, const IntegerDistribution& q);

ConversionPlan single_shot_bound(const PureState& psi1,
                                 const HermitianObservable& h1,
                                 const PureState& psi2,
                                 const HermitianObservable& h2, double tau,
                                 const Tolerances& tol = kDefaultTolerances);

// Best rational approximation with denominator <= max_den.
std::pair<long long, long long> snap_rational(double x,
                                              long long max_den = 1000000);

// For each m: m copies of psi1 against ceil(R m) copies of psi2. Surplus
// input copies may be discarded (a TI operation) when that lowers the
// shift-matching error.
std::vector<ConversionPlan> iid_sweep(const PureState& psi1,
                                      const HermitianObservable& h1,
                                      const PureState& psi2,
                                      const HermitianObservable& h2, double tau,
                                      double rate, const std::vector<int>& m_list,
                                      const Tolerances& tol = kDefaultTolerances);

// R <= F_in / F_out (+ tol_num). Throws ZeroTargetQFI.
bool rate_feasibility(const DensityMatrix& rho_in, const HermitianObservable& h_in,
                      const DensityMatrix& rho_out,
                      const HermitianObservable& h_out, double rate,
                      const Tolerances& tol = kDefaultTolerances);

// (tau / 2 pi)^2 F. Throws PeriodMismatch when rho is not tau-periodic.
double coherence_cost(const DensityMatrix& rho, const HermitianObservable& h,
                      double tau, const Tolerances& tol = kDefaultTolerances);

}  // namespace coherence

#endif  // COHERENCE_CONVERSION_H_
