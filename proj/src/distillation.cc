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

#include "coherence/distillation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "coherence/errors.h"
#include "coherence/sdp.h"

namespace coherence {

bool is_bound_resource(const DensityMatrix& rho, const HermitianObservable& h,
                       const Tolerances& tol) {
  return support_commutes(rho, h, tol) && qfi(rho, h, tol).value > tol.tol_num;
}

MeasureValue distillation_copy_floor(const DensityMatrix& rho,
                                     const HermitianObservable& h,
                                     const PureState& target,
                                     const HermitianObservable& h_target,
                                     double eps, double prob,
                                     const Tolerances& tol) {
  if (!(eps > 0.0 && eps < 2.0 / 3.0)) {
    throw CoherenceError(ErrorCode::kEpsOutOfRange, "eps " + std::to_string(eps));
  }
  if (!(prob > 0.0 && prob <= 1.0)) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "prob must lie in (0, 1]");
  }
  double need = prob * cor_var_ceiling(target, h_target, eps);
  if (need <= tol.tol_num) return MeasureValue::finite(0.0);
  MeasureValue p = purity_of_coherence(rho, h, tol);
  if (p.infinite) return MeasureValue::finite(0.0);
  if (p.value <= tol.tol_num) return MeasureValue::inf();
  return MeasureValue::finite(need / p.value);
}

OmegaState OmegaState::generic(const DensityMatrix& m, int d_a, int d_b) {
  if (m.dim() != d_a * d_b) throw CoherenceError(ErrorCode::kDimMismatch, "omega dims");
  OmegaState o;
  o.matrix = m;
  o.d_a = d_a;
  o.d_b = d_b;
  o.h_a = HermitianObservable(ComplexMatrix::Zero(d_a, d_a));
  o.h_b = HermitianObservable(ComplexMatrix::Zero(d_b, d_b));
  return o;
}

namespace {

struct DifferenceBlocks {
  ComplexMatrix frame;                   // W_A (x) W_B
  std::vector<std::vector<int>> blocks;  // product indices a * d_b + b
};

// Eigenspaces of H_A (x) I - I (x) H_B in the product eigenbasis.
DifferenceBlocks difference_blocks(const HermitianObservable& h_a,
                                   const HermitianObservable& h_b,
                                   const Tolerances& tol) {
  int da = h_a.dim(), db = h_b.dim();
  std::vector<std::pair<double, int>> d;
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      d.push_back({h_a.eigenvalues()[a] - h_b.eigenvalues()[b], a * db + b});
  std::sort(d.begin(), d.end());
  DifferenceBlocks out;
  out.frame = tensor(h_a.eigenvectors(), h_b.eigenvectors());
  for (size_t i = 0; i < d.size(); ++i) {
    double gap = i == 0 ? std::numeric_limits<double>::infinity() : d[i].first - d[i - 1].first;
    if (gap > tol.gap_cutoff && gap < 1e-6) {
      throw CoherenceError(ErrorCode::kIncommensurateSpectrum,
                           "difference energies " + std::to_string(gap) + " apart");
    }
    if (gap > tol.gap_cutoff) out.blocks.emplace_back();
    out.blocks.back().push_back(d[i].second);
  }
  for (auto& blk : out.blocks) std::sort(blk.begin(), blk.end());
  return out;
}

}  // namespace

OmegaState omega_state(const DensityMatrix& sigma_a, const HermitianObservable& h_a,
                       const PureState& psi_b, const HermitianObservable& h_b,
                       const Tolerances& tol) {
  if (sigma_a.dim() != h_a.dim() || psi_b.dim() != h_b.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "omega_state dims");
  }
  ComplexVector coeff = h_b.eigenvectors().adjoint() * psi_b.amplitudes();
  ComplexVector bar = h_b.eigenvectors() * coeff.conjugate();
  ComplexMatrix joint = tensor(sigma_a.matrix(), ComplexMatrix(bar * bar.adjoint()));
  DifferenceBlocks db = difference_blocks(h_a, h_b, tol);
  ComplexMatrix in_frame = db.frame.adjoint() * joint * db.frame;
  ComplexMatrix kept = ComplexMatrix::Zero(joint.rows(), joint.cols());
  for (const auto& blk : db.blocks)
    for (int r : blk)
      for (int c : blk) kept(r, c) = in_frame(r, c);
  OmegaState o;
  o.matrix = DensityMatrix::trusted(db.frame * kept * db.frame.adjoint());
  o.d_a = h_a.dim();
  o.d_b = h_b.dim();
  o.h_a = h_a;
  o.h_b = h_b;
  return o;
}

SdpResult conditional_min_entropy(const OmegaState& omega, const Tolerances& tol) {
  const int da = omega.d_a, db = omega.d_b;
  DifferenceBlocks diff = difference_blocks(omega.h_a, omega.h_b, tol);
  ComplexMatrix w_a = omega.h_a.eigenvectors();
  ComplexMatrix om = diff.frame.adjoint() * omega.matrix.matrix() * diff.frame;

  // Hermitian basis of the commutant of H_A, in its eigenbasis.
  std::vector<ComplexMatrix> basis;
  const double r2 = std::sqrt(0.5);
  for (const auto& g : group_levels(omega.h_a.eigenvalues(), tol.gap_cutoff)) {
    for (size_t x = 0; x < g.size(); ++x) {
      for (size_t y = x; y < g.size(); ++y) {
        int j = g[x], k = g[y];
        if (j == k) {
          ComplexMatrix e = ComplexMatrix::Zero(da, da);
          e(j, j) = 1.0;
          basis.push_back(e);
          continue;
        }
        ComplexMatrix re = ComplexMatrix::Zero(da, da), im = ComplexMatrix::Zero(da, da);
        re(j, k) = re(k, j) = r2;
        im(j, k) = Complex(0, r2);
        im(k, j) = Complex(0, -r2);
        basis.push_back(re);
        basis.push_back(im);
      }
    }
  }

  BlockLmi lmi;
  int m = static_cast<int>(basis.size());
  lmi.b.resize(m);
  lmi.a.assign(m, {});
  for (const auto& blk : diff.blocks) {
    int len = static_cast<int>(blk.size());
    lmi.sizes.push_back(len);
    ComplexMatrix c(len, len);
    for (int r = 0; r < len; ++r)
      for (int s = 0; s < len; ++s) c(r, s) = om(blk[r], blk[s]);
    lmi.c.push_back(c);
    for (int i = 0; i < m; ++i) {
      ComplexMatrix a = ComplexMatrix::Zero(len, len);
      for (int r = 0; r < len; ++r)
        for (int s = 0; s < len; ++s)
          if (blk[r] % db == blk[s] % db) a(r, s) = basis[i](blk[r] / db, blk[s] / db);
      lmi.a[i].push_back(a);
    }
  }
  for (int i = 0; i < m; ++i) lmi.b[i] = basis[i].trace().real();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(omega.matrix.matrix(),
                                                  Eigen::EigenvaluesOnly);
  double start = es.eigenvalues().maxCoeff() + 1.0;
  RealVector y0 = RealVector::Zero(m);
  for (int i = 0; i < m; ++i)
    if (lmi.b[i] != 0.0) y0[i] = start;
  std::vector<ComplexMatrix> x0;
  for (int len : lmi.sizes) x0.push_back(ComplexMatrix::Identity(len, len) / db);

  SdpSolution sol = solve_block_lmi(lmi, y0, x0, {tol.sdp_max_iter, 1e-11});

  SdpResult out;
  out.iterations = sol.iterations;
  out.optimum = sol.primal_value;
  out.dual_value = sol.dual_value;
  out.primal_dual_gap = sol.primal_value - sol.dual_value;
  out.hmin = -std::log2(out.optimum);
  ComplexMatrix tau_frame = ComplexMatrix::Zero(da, da);
  for (int i = 0; i < m; ++i) tau_frame += sol.y[i] * basis[i];
  out.tau = w_a * tau_frame * w_a.adjoint();
  ComplexMatrix x_frame = ComplexMatrix::Zero(da * db, da * db);
  for (size_t k = 0; k < diff.blocks.size(); ++k) {
    const auto& blk = diff.blocks[k];
    for (size_t r = 0; r < blk.size(); ++r)
      for (size_t s = 0; s < blk.size(); ++s) x_frame(blk[r], blk[s]) = sol.x[k](r, s);
  }
  out.dual_certificate = diff.frame * x_frame * diff.frame.adjoint();

  ComplexMatrix slack = tensor(out.tau, ComplexMatrix::Identity(db, db)) -
                        omega.matrix.matrix();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ss(hermitian_part(slack),
                                                  Eigen::EigenvaluesOnly);
  out.min_slack_eig = ss.eigenvalues()[0];
  out.partial_trace_residual =
      max_abs(partial_trace(out.dual_certificate, da, db, Keep::kA) -
              ComplexMatrix::Identity(da, da));
  if (!(std::abs(out.primal_dual_gap) < tol.gap_tol) ||
      out.min_slack_eig < -tol.tol_sdp) {
    throw CoherenceError(ErrorCode::kSolverStall,
                         "gap " + std::to_string(out.primal_dual_gap) + " after " +
                             std::to_string(out.iterations) + " iterations");
  }
  return out;
}

double max_distill_fidelity(const DensityMatrix& sigma_a,
                            const HermitianObservable& h_a, const PureState& psi_b,
                            const HermitianObservable& h_b, const Tolerances& tol) {
  return conditional_min_entropy(omega_state(sigma_a, h_a, psi_b, h_b, tol), tol).optimum;
}

QubitBound qubit_infidelity_bound(double lambda, int n) {
  if (!(lambda > 0.0 && lambda <= 1.0) || n < 1) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "need lambda in (0, 1], n >= 1");
  }
  double l2 = lambda * lambda;
  QubitBound b;
  b.exact = 0.5 * (1.0 - std::sqrt(n * l2 / (1.0 + (n - 1) * l2)));
  b.asymptotic = (1.0 - l2) / (4.0 * l2 * n);
  return b;
}

double cirac_comparison(double lambda, int n) {
  if (!(lambda > 0.0 && lambda <= 1.0) || n < 1) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "need lambda in (0, 1], n >= 1");
  }
  return (1.0 - lambda) / (2.0 * lambda * lambda * n);
}

MeasureValue helper_bound(const DensityMatrix& rho, const HermitianObservable& h,
                          const PureState& chi, const HermitianObservable& h_help,
                          int n, double eps, const Tolerances& tol) {
  if (!(eps > 0.0 && eps < 1.0 / 3.0)) {
    throw CoherenceError(ErrorCode::kEpsOutOfRange, "eps " + std::to_string(eps));
  }
  if (n < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "n must be >= 1");
  MeasureValue p = purity_of_coherence(rho, h, tol);
  if (p.infinite) return MeasureValue::inf();
  double helper = 2.0 * (chi.dim() - 1) * energy_variance(chi, h_help) / n;
  return MeasureValue::finite((eps * p.value + helper) / (1.0 - 3.0 * eps));
}

DensityMatrix tensor_power(const DensityMatrix& rho, int n) {
  if (n < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "n must be >= 1");
  ComplexMatrix m = rho.matrix();
  for (int i = 1; i < n; ++i) m = tensor(m, rho.matrix());
  return DensityMatrix::trusted(m);
}

HermitianObservable copies_hamiltonian(const HermitianObservable& h, int n) {
  if (n < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "n must be >= 1");
  HermitianObservable total = h;
  for (int i = 1; i < n; ++i) total = noninteracting_hamiltonian(total, h);
  return total;
}

}  // namespace coherence
