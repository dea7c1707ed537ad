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

#include "coherence/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "coherence/errors.h"

namespace coherence {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

EigenSystem eig_hermitian(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "matrix is not square");
  }
  double asym = max_abs(m - m.adjoint());
  if (asym > tol.tol_herm) {
    throw CoherenceError(ErrorCode::kNonHermitian,
                         "asymmetry " + std::to_string(asym));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(m));
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a[i] * b;
  }
  return out;
}

std::vector<std::vector<int>> group_levels(const RealVector& ascending,
                                           double cutoff) {
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < ascending.size(); ++i) {
    if (groups.empty() || ascending[i] - ascending[i - 1] > cutoff) {
      groups.emplace_back();
    }
    groups.back().push_back(i);
  }
  return groups;
}

HermitianObservable::HermitianObservable(const ComplexMatrix& m,
                                         const Tolerances& tol)
    : matrix_(hermitian_part(m)), eig_(eig_hermitian(m, tol)) {
  groups_ = group_levels(eig_.values, tol.gap_cutoff);
}

HermitianObservable HermitianObservable::diagonal(
    const std::vector<double>& energies) {
  RealVector e = Eigen::Map<const RealVector>(energies.data(),
                                              static_cast<Eigen::Index>(energies.size()));
  return HermitianObservable(e.cast<Complex>().asDiagonal().toDenseMatrix());
}

std::vector<ComplexMatrix> HermitianObservable::eigenprojectors() const {
  std::vector<ComplexMatrix> out;
  for (const auto& g : groups_) {
    ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
    for (int i : g) p += eig_.vectors.col(i) * eig_.vectors.col(i).adjoint();
    out.push_back(p);
  }
  return out;
}

ComplexMatrix HermitianObservable::evolution(double t) const {
  ComplexVector phases(dim());
  for (int i = 0; i < dim(); ++i) {
    phases[i] = std::exp(Complex(0.0, -eig_.values[i] * t));
  }
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

PureState::PureState(const ComplexVector& amplitudes, const Tolerances& tol)
    : amps_(amplitudes) {
  if (amps_.size() == 0) {
    throw CoherenceError(ErrorCode::kDimMismatch, "empty state vector");
  }
  double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > tol.tol_norm) {
    throw CoherenceError(ErrorCode::kNotNormalized,
                         "squared norm " + std::to_string(n2));
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  double n = v.norm();
  if (n == 0.0) throw CoherenceError(ErrorCode::kInvalidArgument, "zero vector");
  return PureState(v / n);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw CoherenceError(ErrorCode::kDimMismatch, "density matrix not square");
  }
  double asym = max_abs(m - m.adjoint());
  if (asym > tol.tol_herm) {
    throw CoherenceError(ErrorCode::kNonHermitian,
                         "asymmetry " + std::to_string(asym));
  }
  matrix_ = hermitian_part(m);
  double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > tol.tol_trace) {
    throw CoherenceError(ErrorCode::kValidationError,
                         "trace " + std::to_string(tr));
  }
  decompose(tol);
  if (spectrum_[spectrum_.size() - 1] < -tol.tol_psd) {
    throw CoherenceError(ErrorCode::kNotPsd,
                         "eigenvalue " + std::to_string(spectrum_[spectrum_.size() - 1]));
  }
}

DensityMatrix::DensityMatrix(const PureState& psi)
    : DensityMatrix(trusted(psi.projector())) {}

DensityMatrix DensityMatrix::trusted(const ComplexMatrix& m,
                                     const Tolerances& tol) {
  DensityMatrix out;
  out.matrix_ = hermitian_part(m);
  out.decompose(tol);
  return out;
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  return trusted(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
}

void DensityMatrix::decompose(const Tolerances& tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_);
  spectrum_ = solver.eigenvalues().reverse();
  basis_ = solver.eigenvectors().rowwise().reverse();
  rank_cutoff_ = tol.rank_cutoff;
  support_rank_ = 0;
  for (Eigen::Index i = 0; i < spectrum_.size(); ++i) {
    if (spectrum_[i] > rank_cutoff_) ++support_rank_;
  }
}

RealVector DensityMatrix::clamped_spectrum() const {
  RealVector p = spectrum_;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] <= rank_cutoff_) p[i] = 0.0;
  }
  return p;
}

ComplexMatrix DensityMatrix::support_projector() const {
  auto v = basis_.leftCols(support_rank_);
  return v * v.adjoint();
}

double DensityMatrix::purity() const { return matrix_.squaredNorm(); }

ComplexMatrix psd_sqrt(const ComplexMatrix& m, const Tolerances& tol) {
  return hermitian_function(eig_hermitian(m, tol), [](double x) {
    return x > 0.0 ? std::sqrt(x) : 0.0;
  });
}

namespace {

void check_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch,
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
}

ComplexMatrix sqrt_of(const DensityMatrix& rho) {
  RealVector p = rho.spectrum();
  for (Eigen::Index i = 0; i < p.size(); ++i) p[i] = p[i] > 0 ? std::sqrt(p[i]) : 0.0;
  return rho.eigenbasis() * p.asDiagonal() * rho.eigenbasis().adjoint();
}

}  // namespace

// Trace norm of sqrt(rho) sqrt(sigma). Equal to Tr sqrt(sqrt(rho) sigma
// sqrt(rho)) but keeps full precision when either state is rank deficient.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  ComplexMatrix prod = sqrt_of(rho) * sqrt_of(sigma);
  Eigen::JacobiSVD<ComplexMatrix> svd(prod);
  return std::min(1.0, svd.singularValues().sum());
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_dim(rho, sigma);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      hermitian_part(rho.matrix() - sigma.matrix()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int d_a, int d_b,
                            Keep keep) {
  if (m.rows() != d_a * d_b || m.cols() != d_a * d_b) {
    throw CoherenceError(ErrorCode::kDimMismatch, "partial_trace dims");
  }
  if (keep == Keep::kA) {
    ComplexMatrix out = ComplexMatrix::Zero(d_a, d_a);
    for (int i = 0; i < d_a; ++i)
      for (int j = 0; j < d_a; ++j)
        out(i, j) = m.block(i * d_b, j * d_b, d_b, d_b).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d_b, d_b);
  for (int i = 0; i < d_a; ++i) out += m.block(i * d_b, i * d_b, d_b, d_b);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int d_a, int d_b,
                            Keep keep) {
  return DensityMatrix::trusted(partial_trace(rho.matrix(), d_a, d_b, keep));
}

HermitianObservable noninteracting_hamiltonian(const HermitianObservable& h_a,
                                               const HermitianObservable& h_b) {
  ComplexMatrix ia = ComplexMatrix::Identity(h_a.dim(), h_a.dim());
  ComplexMatrix ib = ComplexMatrix::Identity(h_b.dim(), h_b.dim());
  return HermitianObservable(tensor(h_a.matrix(), ib) + tensor(ia, h_b.matrix()));
}

DensityMatrix dephase(const DensityMatrix& rho, const HermitianObservable& h) {
  if (rho.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "dephase dims");
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const ComplexMatrix& p : h.eigenprojectors()) {
    out += p * rho.matrix() * p;
  }
  return DensityMatrix::trusted(out);
}

}  // namespace coherence
