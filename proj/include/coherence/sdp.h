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

#ifndef COHERENCE_SDP_H_
#define COHERENCE_SDP_H_

#include <vector>

#include "coherence/linalg.h"

namespace coherence {

// minimize b.y  subject to  S = sum_i y_i A_i - C >= 0, with every matrix
// block diagonal. The dual is  maximize Tr(C X)  s.t.  Tr(A_i X) = b_i,
// X >= 0.
struct BlockLmi {
  std::vector<int> sizes;
  std::vector<std::vector<ComplexMatrix>> a;  // a[i][block], Hermitian
  std::vector<ComplexMatrix> c;               // per block, Hermitian
  RealVector b;

  int num_vars() const { return static_cast<int>(a.size()); }
};

struct SdpOptions {
  int max_iter = 500;
  double target_gap = 1e-11;  // stop once Tr(XS) falls below this
};

struct SdpSolution {
  RealVector y;
  std::vector<ComplexMatrix> s;
  std::vector<ComplexMatrix> x;
  double primal_value = 0.0;  // b.y
  double dual_value = 0.0;    // Tr(C X)
  double complementarity = 0.0;
  double primal_residual = 0.0;  // max |Tr(A_i X) - b_i|
  int iterations = 0;
  bool converged = false;
};

// Primal-dual path following (HKM direction, Mehrotra predictor-corrector)
// from a strictly feasible start: S(y0) > 0, X0 > 0 with Tr(A_i X0) = b_i.
SdpSolution solve_block_lmi(const BlockLmi& lmi, const RealVector& y0,
                            const std::vector<ComplexMatrix>& x0,
                            const SdpOptions& opts = {});

// Largest step t in (0, 1] keeping z + t dz PSD, scaled by `fraction`.
double max_psd_step(const ComplexMatrix& z, const ComplexMatrix& dz,
                    double fraction);

}  // namespace coherence

#endif  // COHERENCE_SDP_H_
