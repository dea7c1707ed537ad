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

#ifndef COHERENCE_TOLERANCES_H_
#define COHERENCE_TOLERANCES_H_

namespace coherence {

// Every numeric threshold used by the library lives here. Functions take a
// `const Tolerances&` that defaults to kDefaultTolerances.
struct Tolerances {
  double tol_herm = 1e-9;      // max-abs asymmetry accepted as Hermitian
  double tol_recon = 1e-10;    // eigendecomposition reconstruction
  double tol_trace = 1e-9;     // |Tr rho - 1| for input states
  double tol_psd = 1e-9;       // most negative eigenvalue accepted
  double tol_norm = 1e-9;      // |<psi|psi> - 1| for input vectors
  double tol_num = 1e-10;      // generic numerical slack
  double tol_commute = 1e-8;   // ||[Pi_rho, H]||_max for the support test
  double gap_cutoff = 1e-8;    // eigenvalues closer than this share an eigenspace
  double rank_cutoff = 1e-10;  // eigenvalues above this are in the support
  double pair_cutoff = 1e-14;  // p_j + p_k below this drops a QFI term
  double tol_prob = 1e-12;     // mass conservation of integer distributions
  double tail_eps = 1e-12;     // Poisson tail truncation
  double level_tol = 1e-9;     // in units of 2*pi/tau
  double tol_cptp = 1e-10;     // ||sum K^dag K - I||_max
  double tol_ti = 1e-9;        // covariance residual accepted by is_ti
  double tol_sdp = 1e-9;       // SDP feasibility slack
  double gap_tol = 1e-7;       // SDP duality gap contract
  int sdp_max_iter = 500;
  double fd_rel = 1e-5;        // qfi_via_fidelity agreement, times max(1, F)
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace coherence

#endif  // COHERENCE_TOLERANCES_H_
