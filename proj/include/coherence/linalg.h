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

#ifndef COHERENCE_LINALG_H_
#define COHERENCE_LINALG_H_

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "coherence/tolerances.h"

namespace coherence {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns
};

// Throws NonHermitian when M is not Hermitian within tol_herm.
EigenSystem eig_hermitian(const ComplexMatrix& m,
                          const Tolerances& tol = kDefaultTolerances);

double max_abs(const ComplexMatrix& m);
ComplexMatrix hermitian_part(const ComplexMatrix& m);

// Kronecker product, row index of A major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

// Indices of eigenvalues grouped into eigenspaces. Consecutive ascending
// values closer than `cutoff` land in the same group.
std::vector<std::vector<int>> group_levels(const RealVector& ascending,
                                           double cutoff);

class HermitianObservable {
 public:
  HermitianObservable() = default;
  explicit HermitianObservable(const ComplexMatrix& m,
                               const Tolerances& tol = kDefaultTolerances);
  static HermitianObservable diagonal(const std::vector<double>& energies);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eig_.values; }
  const ComplexMatrix& eigenvectors() const { return eig_.vectors; }
  // Eigenspaces as index lists into eigenvalues(), ascending energy.
  const std::vector<std::vector<int>>& eigenspaces() const { return groups_; }
  std::vector<ComplexMatrix> eigenprojectors() const;
  // exp(-i H t)
  ComplexMatrix evolution(double t) const;

 private:
  ComplexMatrix matrix_;
  EigenSystem eig_;
  std::vector<std::vector<int>> groups_;
};

class PureState {
 public:
  PureState() = default;
  // Throws NotNormalized unless | ||v||^2 - 1 | <= tol_norm.
  explicit PureState(const ComplexVector& amplitudes,
                     const Tolerances& tol = kDefaultTolerances);
  // Rescales v to unit norm first.
  static PureState normalized(const ComplexVector& v);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

 private:
  ComplexVector amps_;
};

class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates Hermiticity, unit trace and positivity.
  explicit DensityMatrix(const ComplexMatrix& m,
                         const Tolerances& tol = kDefaultTolerances);
  DensityMatrix(const PureState& psi);  // NOLINT: pure states are states
  // For matrices produced internally: Hermitian part is taken and the
  // checks are skipped.
  static DensityMatrix trusted(const ComplexMatrix& m,
                               const Tolerances& tol = kDefaultTolerances);
  static DensityMatrix maximally_mixed(int d);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const RealVector& spectrum() const { return spectrum_; }  // descending
  const ComplexMatrix& eigenbasis() const { return basis_; }
  int support_rank() const { return support_rank_; }
  // Spectrum with entries at or below rank_cutoff set to exactly 0.
  RealVector clamped_spectrum() const;
  ComplexMatrix support_projector() const;
  double purity() const;  // Tr rho^2

 private:
  void decompose(const Tolerances& tol);

  ComplexMatrix matrix_;
  RealVector spectrum_;
  ComplexMatrix basis_;
  int support_rank_ = 0;
  double rank_cutoff_ = kDefaultTolerances.rank_cutoff;
};

// f applied to the eigenvalues of a Hermitian matrix.
template <typename F>
ComplexMatrix hermitian_function(const EigenSystem& es, F f) {
  RealVector fv(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) fv[i] = f(es.values[i]);
  return es.vectors * fv.asDiagonal() * es.vectors.adjoint();
}

// Square root of a PSD matrix; negative eigenvalues are clamped to 0.
ComplexMatrix psd_sqrt(const ComplexMatrix& m,
                       const Tolerances& tol = kDefaultTolerances);

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

enum class Keep { kA, kB };
ComplexMatrix partial_trace(const ComplexMatrix& m, int d_a, int d_b,
                            Keep keep);
DensityMatrix partial_trace(const DensityMatrix& rho, int d_a, int d_b,
                            Keep keep);

HermitianObservable noninteracting_hamiltonian(const HermitianObservable& h_a,
                                               const HermitianObservable& h_b);

// Sum_n P_n rho P_n over the eigenspaces of H.
DensityMatrix dephase(const DensityMatrix& rho, const HermitianObservable& h);

}  // namespace coherence

#endif  // COHERENCE_LINALG_H_
