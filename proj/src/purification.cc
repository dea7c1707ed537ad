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

#include "coherence/purification.h"

#include <cmath>
#include <numbers>
#include <numeric>

#include "coherence/errors.h"
#include "coherence/measures.h"

namespace coherence {

namespace {

void check_dims(const DensityMatrix& rho, const HermitianObservable& h) {
  if (rho.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "state and hamiltonian dims");
  }
}

Eigen::MatrixXd aux_coefficients(const RealVector& p) {
  int d = static_cast<int>(p.size());
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (p[i] > 0 && p[j] > 0) c(i, j) = -2.0 * std::sqrt(p[i] * p[j]) / (p[i] + p[j]);
  return c;
}

// (H_A) in the phi basis.
ComplexMatrix aux_in_frame(const SpectralFrame& f) {
  return aux_coefficients(f.p).cast<Complex>().cwiseProduct(f.h_phi).transpose();
}

ComplexMatrix from_frame(const SpectralFrame& f, const ComplexMatrix& m) {
  return f.phi * m * f.phi.adjoint();
}

ComplexMatrix as_matrix(const PureState& joint, int d_s) {
  int d_a = joint.dim() / d_s;
  ComplexMatrix m(d_s, d_a);
  for (int s = 0; s < d_s; ++s)
    for (int a = 0; a < d_a; ++a) m(s, a) = joint.amplitudes()[s * d_a + a];
  return m;
}

double joint_variance(const PureState& joint, const HermitianObservable& h_s,
                      const ComplexMatrix& h_a) {
  int d = h_s.dim();
  ComplexMatrix id_s = ComplexMatrix::Identity(d, d);
  ComplexMatrix id_a = ComplexMatrix::Identity(h_a.rows(), h_a.rows());
  HermitianObservable tot(tensor(h_s.matrix(), id_a) + tensor(id_s, h_a));
  return energy_variance(joint, tot);
}

}  // namespace

ComplexMatrix PureEnsemble::mixture() const {
  ComplexMatrix m = ComplexMatrix::Zero(states.at(0).dim(), states.at(0).dim());
  for (size_t k = 0; k < states.size(); ++k) m += weights[k] * states[k].projector();
  return m;
}

SpectralFrame adapted_frame(const DensityMatrix& rho,
                            const HermitianObservable& h,
                            const Tolerances& tol) {
  check_dims(rho, h);
  SpectralFrame f;
  f.p = rho.clamped_spectrum();
  f.phi = rho.eigenbasis();
  RealVector ascending = -rho.spectrum();
  for (const auto& g : group_levels(ascending, tol.gap_cutoff)) {
    if (g.size() < 2) continue;
    int start = g.front(), len = static_cast<int>(g.size());
    ComplexMatrix block = f.phi.middleCols(start, len);
    ComplexMatrix hb = block.adjoint() * h.matrix() * block;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(hb));
    f.phi.middleCols(start, len) = block * es.eigenvectors();
  }
  f.h_phi = f.phi.adjoint() * h.matrix() * f.phi;
  return f;
}

PureState canonical_purification(const SpectralFrame& frame) {
  int d = static_cast<int>(frame.p.size());
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) {
    if (frame.p[i] <= 0) continue;
    v += std::sqrt(frame.p[i]) * tensor(ComplexVector(frame.phi.col(i)),
                                        ComplexVector(frame.phi.col(i)));
  }
  return PureState::normalized(v);
}

PureState canonical_purification(const DensityMatrix& rho) {
  SpectralFrame f;
  f.p = rho.clamped_spectrum();
  f.phi = rho.eigenbasis();
  return canonical_purification(f);
}

HermitianObservable optimal_aux_hamiltonian(const DensityMatrix& rho,
                                            const HermitianObservable& h_s,
                                            const Tolerances& tol) {
  SpectralFrame f = adapted_frame(rho, h_s, tol);
  return HermitianObservable(from_frame(f, aux_in_frame(f)), tol);
}

double aux_kkt_residual(const DensityMatrix& rho, const HermitianObservable& h_s,
                        const Tolerances& tol) {
  SpectralFrame f = adapted_frame(rho, h_s, tol);
  ComplexMatrix g = from_frame(f, aux_in_frame(f).transpose());
  RealVector sp = f.p.cwiseSqrt();
  ComplexMatrix rho_c = from_frame(f, f.p.cast<Complex>().asDiagonal().toDenseMatrix());
  ComplexMatrix sqrt_rho = from_frame(f, sp.cast<Complex>().asDiagonal().toDenseMatrix());
  ComplexMatrix r = (g * rho_c + rho_c * g) * 0.5 + sqrt_rho * h_s.matrix() * sqrt_rho;
  return max_abs(r);
}

Purification build_optimal_purification(const DensityMatrix& rho,
                                        const HermitianObservable& h_s,
                                        const Tolerances& tol) {
  SpectralFrame f = adapted_frame(rho, h_s, tol);
  int d = rho.dim();
  Purification out;
  out.joint_state = canonical_purification(f);
  ComplexMatrix h_a = from_frame(f, aux_in_frame(f));
  ComplexMatrix id = ComplexMatrix::Identity(d, d);
  HermitianObservable unshifted(tensor(h_s.matrix(), id) + tensor(id, h_a));
  // Reference shift so that the joint state has zero mean energy.
  double mean = energy_mean(out.joint_state, unshifted);
  h_a -= mean * id;
  out.aux_hamiltonian = HermitianObservable(h_a, tol);
  out.total_hamiltonian = HermitianObservable(tensor(h_s.matrix(), id) + tensor(id, h_a));
  out.total_variance = energy_variance(out.joint_state, out.total_hamiltonian);
  out.kkt_residual = aux_kkt_residual(rho, h_s, tol);
  return out;
}

double aux_qfi(const DensityMatrix& rho, const HermitianObservable& h_s,
               const Tolerances& tol) {
  SpectralFrame f = adapted_frame(rho, h_s, tol);
  double total = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    for (int j = 0; j < rho.dim(); ++j) {
      double s = f.p[i] + f.p[j];
      if (s <= tol.pair_cutoff) continue;
      double d = f.p[i] - f.p[j];
      total += 8.0 * f.p[i] * f.p[j] * d * d / (s * s * s) * std::norm(f.h_phi(i, j));
    }
  }
  return total;
}

double transpose_purification_variance(const DensityMatrix& rho,
                                       const HermitianObservable& h_s,
                                       const Tolerances& tol) {
  SpectralFrame f = adapted_frame(rho, h_s, tol);
  ComplexMatrix h_a = from_frame(f, -f.h_phi.transpose());
  return joint_variance(canonical_purification(f), h_s, h_a);
}

double average_variance(const PureEnsemble& ens, const HermitianObservable& h) {
  double v = 0.0;
  for (size_t k = 0; k < ens.states.size(); ++k) {
    v += ens.weights[k] * energy_variance(ens.states[k], h);
  }
  return v;
}

PureEnsemble measured_ensemble(const PureState& joint, int d_s,
                               const ComplexMatrix& basis_a,
                               const HermitianObservable& h_s) {
  ComplexMatrix m = as_matrix(joint, d_s);
  PureEnsemble ens;
  for (int k = 0; k < basis_a.cols(); ++k) {
    ComplexVector eta = m * basis_a.col(k).conjugate();
    double w = eta.squaredNorm();
    if (w <= 1e-15) continue;
    ens.weights.push_back(w);
    ens.states.push_back(PureState::normalized(eta));
  }
  ens.average_variance = average_variance(ens, h_s);
  return ens;
}

PureEnsemble optimal_ensemble(const DensityMatrix& rho,
                              const HermitianObservable& h_s,
                              const Tolerances& tol) {
  Purification pur = build_optimal_purification(rho, h_s, tol);
  return measured_ensemble(pur.joint_state, rho.dim(),
                           pur.aux_hamiltonian.eigenvectors(), h_s);
}

PureEnsemble period_respecting_ensemble(const DensityMatrix& rho,
                                        const HermitianObservable& h,
                                        double tau, const Tolerances& tol) {
  check_dims(rho, h);
  std::vector<ComplexMatrix> proj = h.eigenprojectors();
  const auto& groups = h.eigenspaces();
  int ng = static_cast<int>(groups.size());
  std::vector<double> energy(ng);
  for (int g = 0; g < ng; ++g) energy[g] = h.eigenvalues()[groups[g].front()];

  std::vector<int> parent(ng);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < ng; ++a) {
    for (int b = a + 1; b < ng; ++b) {
      if (max_abs(proj[a] * rho.matrix() * proj[b]) <= tol.tol_num) continue;
      double x = (energy[b] - energy[a]) * tau / (2.0 * std::numbers::pi);
      if (std::abs(x - std::round(x)) > tol.level_tol) {
        throw CoherenceError(ErrorCode::kPeriodMismatch,
                             "coherence at a frequency incommensurate with tau");
      }
      parent[find(a)] = find(b);
    }
  }
  std::vector<ComplexMatrix> parts;
  for (int a = 0; a < ng; ++a) {
    if (find(a) != a) continue;
    ComplexMatrix q = ComplexMatrix::Zero(h.dim(), h.dim());
    for (int b = 0; b < ng; ++b)
      if (find(b) == a) q += proj[b];
    parts.push_back(q);
  }

  PureEnsemble base = optimal_ensemble(rho, h, tol);
  PureEnsemble out;
  for (size_t k = 0; k < base.states.size(); ++k) {
    for (const ComplexMatrix& q : parts) {
      ComplexVector v = q * base.states[k].amplitudes();
      double w = base.weights[k] * v.squaredNorm();
      if (w <= 1e-15) continue;
      out.weights.push_back(w);
      out.states.push_back(PureState::normalized(v));
    }
  }
  out.average_variance = average_variance(out, h);
  return out;
}

}  // namespace coherence
