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

#ifndef COHERENCE_CHANNELS_H_
#define COHERENCE_CHANNELS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "coherence/linalg.h"

namespace coherence {

struct KrausChannel {
  std::vector<ComplexMatrix> kraus;  // each d_out x d_in
  int d_in = 0;
  int d_out = 0;

  // Row-major vectorization: vec(E(X)) = S vec(X), S = sum K (x) conj(K).
  ComplexMatrix superoperator() const;
  // ||sum K^dag K - I||_max
  double cptp_residual() const;
};

KrausChannel identity_channel(int d);
KrausChannel dephasing_channel(const HermitianObservable& h);
// Stinespring isometry from the QR factor of a seeded complex Gaussian
// matrix, cut into `rank` Kraus operators.
KrausChannel random_channel(int d_in, int d_out, int rank, std::uint64_t seed);

struct TIChannel {
  KrausChannel base;
  HermitianObservable h_in;
  HermitianObservable h_out;
  double tau = 0.0;
  std::vector<int> mode_index;  // Bohr frequency of each Kraus operator
};

// Level of each eigenvector of H (ascending order) in units of 2*pi/tau,
// relative to the ground level. Throws IncommensurateSpectrum.
std::vector<long> integer_levels(const HermitianObservable& h, double tau,
                                 const Tolerances& tol = kDefaultTolerances);

// Time average of the conjugated channel over one period: the superoperator
// keeps only its zero-frequency part, then Kraus operators are read off
// the Choi matrix mode by mode.
TIChannel twirl(const KrausChannel& ch, const HermitianObservable& h_in,
                const HermitianObservable& h_out, double tau,
                const Tolerances& tol = kDefaultTolerances);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);
inline DensityMatrix apply(const TIChannel& ch, const DensityMatrix& rho) {
  return apply(ch.base, rho);
}

struct TiCheck {
  bool ok = false;
  double residual = 0.0;
};

// Covariance residual sampled at 2B + 1 equally spaced times in [0, tau),
// B the largest Bohr frequency that can appear.
TiCheck is_ti(const KrausChannel& ch, const HermitianObservable& h_in,
              const HermitianObservable& h_out, double tau,
              const Tolerances& tol = kDefaultTolerances);

enum class MeasureId { kF, kP, kW, kRenyi, kCost };

struct MeasureSpec {
  MeasureId id = MeasureId::kF;
  double alpha = 2.0;  // only for kRenyi

  // "F", "P", "W", "cost", "renyi" (alpha from the argument) or "renyi:1.5".
  static MeasureSpec parse(const std::string& name, double alpha = 2.0);
  std::string name() const;
};

struct MonotonicityReport {
  std::string measure;
  int trials = 0;
  double max_violation = 0.0;  // (after - before) / max(1, before)
  int worst_trial = -1;
  double worst_before = 0.0;
  double worst_after = 0.0;
  int infinite_inputs = 0;
  bool passed = true;  // max_violation < 1e-8
};

// Random (rho, H_in, H_out, channel) per trial, channel twirled, measure
// compared before and after. Trial t uses the stream rng_for(seed, t).
MonotonicityReport monotonicity_suite(const MeasureSpec& measure, int trials,
                                      std::uint64_t seed,
                                      const Tolerances& tol = kDefaultTolerances);

}  // namespace coherence

#endif  // COHERENCE_CHANNELS_H_
