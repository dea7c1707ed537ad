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

#include "coherence/measures.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "coherence/errors.h"

namespace coherence {

namespace {

void check_dims(const DensityMatrix& rho, const HermitianObservable& h) {
  if (rho.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch,
                         "state dim " + std::to_string(rho.dim()) +
                             ", hamiltonian dim " + std::to_string(h.dim()));
  }
}

// |<psi_j|H|psi_k>|^2 in the eigenbasis of rho.
Eigen::MatrixXd squared_elements(const DensityMatrix& rho,
                                 const HermitianObservable& h) {
  ComplexMatrix hp = rho.eigenbasis().adjoint() * h.matrix() * rho.eigenbasis();
  return hp.cwiseAbs2();
}

}  // namespace

MeasureValue qfi(const DensityMatrix& rho, const HermitianObservable& h,
                 const Tolerances& tol) {
  check_dims(rho, h);
  RealVector p = rho.clamped_spectrum();
  Eigen::MatrixXd h2 = squared_elements(rho, h);
  double f = 0.0;
  for (int j = 0; j < rho.dim(); ++j) {
    for (int k = j + 1; k < rho.dim(); ++k) {
      double s = p[j] + p[k];
      if (s <= tol.pair_cutoff) continue;
      double d = p[j] - p[k];
      f += 4.0 * d * d / s * h2(j, k);
    }
  }
  return MeasureValue::finite(std::max(0.0, f));
}

double energy_mean(const PureState& psi, const HermitianObservable& h) {
  if (psi.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "energy_mean dims");
  }
  return psi.amplitudes().dot(h.matrix() * psi.amplitudes()).real();
}

double energy_variance(const PureState& psi, const HermitianObservable& h) {
  if (psi.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "energy_variance dims");
  }
  // Shift by the mean first so the subtraction does not cancel.
  double mean = energy_mean(psi, h);
  ComplexVector v = h.matrix() * psi.amplitudes() - mean * psi.amplitudes();
  return std::max(0.0, v.squaredNorm());
}

bool support_commutes(const DensityMatrix& rho, const HermitianObservable& h,
                      const Tolerances& tol) {
  check_dims(rho, h);
  ComplexMatrix pi = rho.support_projector();
  return max_abs(pi * h.matrix() - h.matrix() * pi) < tol.tol_commute;
}

// Symmetrized eigen-sum: each unordered pair contributes
// (p_j^a p_k^(1-a) + p_k^a p_j^(1-a) - p_j - p_k) |H_jk|^2, which is
// termwise nonnegative.
MeasureValue renyi_purity_monotone(const DensityMatrix& rho,
                                   const HermitianObservable& h, double alpha,
                                   const Tolerances& tol) {
  check_dims(rho, h);
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw CoherenceError(ErrorCode::kAlphaOutOfRange,
                         "alpha " + std::to_string(alpha));
  }
  if (!support_commutes(rho, h, tol)) return MeasureValue::inf();
  RealVector p = rho.clamped_spectrum();
  Eigen::MatrixXd h2 = squared_elements(rho, h);
  int r = rho.support_rank();
  double total = 0.0;
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      double pj = p[j], pk = p[k];
      double term = std::pow(pj, alpha) * std::pow(pk, 1.0 - alpha) +
                    std::pow(pk, alpha) * std::pow(pj, 1.0 - alpha) - pj - pk;
      total += term * h2(j, k);
    }
  }
  return MeasureValue::finite(std::max(0.0, total));
}

MeasureValue purity_of_coherence(const DensityMatrix& rho,
                                 const HermitianObservable& h,
                                 const Tolerances& tol) {
  check_dims(rho, h);
  if (!support_commutes(rho, h, tol)) return MeasureValue::inf();
  RealVector p = rho.clamped_spectrum();
  Eigen::MatrixXd h2 = squared_elements(rho, h);
  int r = rho.support_rank();
  double total = 0.0;
  for (int j = 0; j < r; ++j) {
    for (int k = j + 1; k < r; ++k) {
      double pj = p[j], pk = p[k];
      // p_j^2/p_k + p_k^2/p_j - p_j - p_k = (p_j - p_k)^2 (p_j + p_k) / (p_j p_k)
      double d = pj - pk;
      total += d * d * (pj + pk) / (pj * pk) * h2(j, k);
    }
  }
  return MeasureValue::finite(total);
}

double skew_information(const DensityMatrix& rho, const HermitianObservable& h,
                        const Tolerances& /*tol*/) {
  check_dims(rho, h);
  RealVector p = rho.clamped_spectrum();
  Eigen::MatrixXd h2 = squared_elements(rho, h);
  double w = 0.0;
  for (int j = 0; j < rho.dim(); ++j) {
    for (int k = j + 1; k < rho.dim(); ++k) {
      double d = std::sqrt(p[j]) - std::sqrt(p[k]);
      w += d * d * h2(j, k);
    }
  }
  return w;
}

MeasureValue q2_divergence(const DensityMatrix& rho, const DensityMatrix& sigma,
                           const Tolerances& tol) {
  if (rho.dim() != sigma.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "q2_divergence dims");
  }
  ComplexMatrix kernel = ComplexMatrix::Identity(rho.dim(), rho.dim()) -
                         sigma.support_projector();
  if (max_abs(kernel * rho.matrix()) > tol.tol_commute) {
    return MeasureValue::inf();
  }
  ComplexMatrix rho2 = rho.matrix() * rho.matrix();
  double total = 0.0;
  for (int k = 0; k < sigma.support_rank(); ++k) {
    auto v = sigma.eigenbasis().col(k);
    total += v.dot(rho2 * v).real() / sigma.spectrum()[k];
  }
  return MeasureValue::finite(total);
}

double qfi_via_fidelity(const DensityMatrix& rho, const HermitianObservable& h,
                        double step) {
  if (rho.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "qfi_via_fidelity dims");
  }
  if (!(step >= 1e-4 && step <= 1e-2)) {
    throw CoherenceError(ErrorCode::kInvalidArgument,
                         "step must lie in [1e-4, 1e-2]");
  }
  auto fid_at = [&](double t) {
    ComplexMatrix u = h.evolution(t);
    return fidelity(rho, DensityMatrix::trusted(u * rho.matrix() * u.adjoint()));
  };
  double f0 = fid_at(0.0);
  auto second_diff = [&](double s) {
    return -4.0 * (fid_at(s) - 2.0 * f0 + fid_at(-s)) / (s * s);
  };
  double coarse = second_diff(step);
  double fine = second_diff(step / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

double near_pure_bound(const DensityMatrix& rho, const HermitianObservable& h,
                       const Tolerances& tol) {
  check_dims(rho, h);
  double pmax = rho.spectrum()[0];
  if (pmax >= 1.0 - tol.rank_cutoff) {
    throw CoherenceError(ErrorCode::kPureInput, "largest eigenvalue is 1");
  }
  PureState top = PureState::normalized(rho.eigenbasis().col(0));
  return energy_variance(top, h) * (pmax * pmax / (1.0 - pmax) - 1.0);
}

double cor_var_ceiling(const PureState& target, const HermitianObservable& h,
                       double eps) {
  if (!(eps > 0.0 && eps <= 2.0 / 3.0)) {
    throw CoherenceError(ErrorCode::kEpsOutOfRange,
                         "eps " + std::to_string(eps));
  }
  return energy_variance(target, h) * std::max(0.0, 2.0 / eps - 3.0);
}

}  // namespace coherence
