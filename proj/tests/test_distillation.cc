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

#include <gtest/gtest.h>

#include <cmath>

#include "coherence/distillation.h"
#include "coherence/errors.h"
#include "coherence/measures.h"
#include "coherence/random.h"
#include "coherence/sdp.h"
#include "test_util.h"

namespace coherence {
namespace {

using testing::cbit_h;
using testing::noisy_plus;
using testing::plus;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const CoherenceError& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

double lambda_max(const ComplexMatrix& m) { return eig_hermitian(m).values.maxCoeff(); }

void expect_certified(const SdpResult& r) {
  EXPECT_LT(std::abs(r.primal_dual_gap), 1e-7);
  EXPECT_GE(r.min_slack_eig, -kDefaultTolerances.tol_sdp);
  EXPECT_GE(eig_hermitian(hermitian_part(r.dual_certificate)).values[0], -1e-9);
  EXPECT_LT(r.partial_trace_residual, 1e-7);
}

TEST(SolveBlockLmi, OneVariableGivesLargestEigenvalue) {
  ComplexMatrix c(2, 2);
  c << 1, 0.5, 0.5, 0;
  BlockLmi lmi;
  lmi.sizes = {2};
  lmi.a = {{ComplexMatrix::Identity(2, 2)}};
  lmi.c = {c};
  lmi.b = RealVector::Ones(1);
  RealVector y0 = RealVector::Constant(1, 3.0);
  SdpSolution sol = solve_block_lmi(lmi, y0, {ComplexMatrix::Identity(2, 2) / 2.0});
  EXPECT_TRUE(sol.converged);
  EXPECT_NEAR(sol.y[0], (1 + std::sqrt(2.0)) / 2, 1e-9);
  EXPECT_NEAR(sol.primal_value, sol.dual_value, 1e-9);
}

TEST(SolveBlockLmi, TwoBlocksShareAVariable) {
  // min y1 + y2 s.t. y1 - 1 >= 0, y2 - 2 >= 0, y1 + y2 - 4 >= 0.
  BlockLmi lmi;
  lmi.sizes = {1, 1, 1};
  auto s = [](double v) { return ComplexMatrix::Constant(1, 1, v); };
  lmi.a = {{s(1), s(0), s(1)}, {s(0), s(1), s(1)}};
  lmi.c = {s(1), s(2), s(4)};
  lmi.b = RealVector::Ones(2);
  RealVector y0 = RealVector::Constant(2, 10.0);
  SdpSolution sol = solve_block_lmi(lmi, y0, {s(1), s(1), s(1)});
  EXPECT_TRUE(sol.converged);
  EXPECT_NEAR(sol.primal_value, 4.0, 1e-8);
  EXPECT_GE(sol.y[0], 1 - 1e-8);
  EXPECT_GE(sol.y[1], 2 - 1e-8);
}

TEST(MaxPsdStep, Examples) {
  ComplexMatrix z = ComplexMatrix::Identity(2, 2);
  EXPECT_EQ(max_psd_step(z, ComplexMatrix::Identity(2, 2), 0.95), 1.0);
  EXPECT_NEAR(max_psd_step(z, -2.0 * ComplexMatrix::Identity(2, 2), 0.95), 0.475, 1e-14);
}

TEST(ConditionalMinEntropy, MaximallyMixed) {
  for (auto [da, db] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    OmegaState o = OmegaState::generic(DensityMatrix::maximally_mixed(da * db), da, db);
    SdpResult r = conditional_min_entropy(o);
    EXPECT_NEAR(r.optimum, 1.0 / db, 1e-8);
    EXPECT_NEAR(r.hmin, std::log2(double(db)), 1e-7);
    EXPECT_LT(max_abs(r.tau - ComplexMatrix::Identity(da, da) / double(da * db)), 1e-6);
    expect_certified(r);
  }
}

TEST(ConditionalMinEntropy, MaximallyEntangled) {
  ComplexVector v = ComplexVector::Zero(4);
  v[0] = v[3] = 1 / std::sqrt(2.0);
  SdpResult r = conditional_min_entropy(OmegaState::generic(DensityMatrix(PureState(v)), 2, 2));
  EXPECT_NEAR(r.optimum, 2.0, 1e-8);
  EXPECT_LT(max_abs(r.tau - ComplexMatrix::Identity(2, 2)), 1e-6);
  expect_certified(r);
}

TEST(ConditionalMinEntropy, PureStatesMatchSchmidtFormula) {
  // For pure |psi> the optimum is (sum_i sqrt(lambda_i))^2.
  for (int t = 0; t < 30; ++t) {
    Rng rng = rng_for(100, t);
    int da = uniform_int(2, 3, rng), db = uniform_int(2, 3, rng);
    PureState psi = random_pure(da * db, rng);
    DensityMatrix red = partial_trace(DensityMatrix(psi), da, db, Keep::kA);
    double s = 0;
    for (Eigen::Index i = 0; i < red.spectrum().size(); ++i) s += std::sqrt(std::max(0.0, red.spectrum()[i]));
    SdpResult r = conditional_min_entropy(OmegaState::generic(DensityMatrix(psi), da, db));
    ASSERT_NEAR(r.optimum, s * s, 1e-7) << t;
    expect_certified(r);
  }
}

TEST(ConditionalMinEntropy, ProductAndBlockDiagonal) {
  for (int t = 0; t < 30; ++t) {
    Rng rng = rng_for(101, t);
    DensityMatrix ra = random_density(2, rng), rb = random_density(3, rng);
    SdpResult prod = conditional_min_entropy(
        OmegaState::generic(DensityMatrix::trusted(tensor(ra.matrix(), rb.matrix())), 2, 3));
    ASSERT_NEAR(prod.optimum, lambda_max(rb.matrix()), 1e-7);

    // Classical on A: p |0><0| (x) w1 + (1-p) |1><1| (x) w2.
    DensityMatrix w1 = random_density(2, rng), w2 = random_density(2, rng);
    double p = uniform_real(0.1, 0.9, rng);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.block(0, 0, 2, 2) = p * w1.matrix();
    m.block(2, 2, 2, 2) = (1 - p) * w2.matrix();
    SdpResult blk = conditional_min_entropy(OmegaState::generic(DensityMatrix(m), 2, 2));
    ASSERT_NEAR(blk.optimum, p * lambda_max(w1.matrix()) + (1 - p) * lambda_max(w2.matrix()), 1e-7);
    expect_certified(blk);
  }
}

TEST(ConditionalMinEntropy, RandomStatesAreCertified) {
  for (int t = 0; t < 30; ++t) {
    Rng rng = rng_for(102, t);
    int da = uniform_int(2, 3, rng), db = uniform_int(2, 3, rng);
    DensityMatrix rho = random_density(da * db, uniform_int(1, da * db, rng), rng);
    SdpResult r = conditional_min_entropy(OmegaState::generic(rho, da, db));
    ASSERT_GT(r.optimum, 0.0);
    ASSERT_LE(r.optimum, da + 1e-9);
    expect_certified(r);
    // tau (x) I - Omega is PSD for the returned tau.
    ComplexMatrix slack = tensor(r.tau, ComplexMatrix::Identity(db, db)) - rho.matrix();
    ASSERT_GE(eig_hermitian(hermitian_part(slack)).values[0], -1e-8);
  }
}

TEST(OmegaState, EigenstateTargetFactorizes) {
  Rng rng = rng_for(103);
  DensityMatrix sigma = random_density(3, rng);
  HermitianObservable ha = testing::ladder(3), hb = testing::ladder(2);
  PureState e1 = testing::superposition(2, {1});
  OmegaState o = omega_state(sigma, ha, e1, hb);
  ComplexMatrix expect = tensor(dephase(sigma, ha).matrix(), e1.projector());
  EXPECT_LT(max_abs(o.matrix.matrix() - expect), 1e-12);
}

TEST(OmegaState, IncoherentSourceAndCbitTarget) {
  DensityMatrix sigma = testing::diag_state({0.3, 0.7});
  OmegaState o = omega_state(sigma, cbit_h(), plus(), cbit_h());
  // Only the zero-difference pair |00>, |11> can keep a coherence, and an
  // incoherent source gives none.
  ComplexMatrix expect = tensor(sigma.matrix(), ComplexMatrix(ComplexMatrix::Identity(2, 2) / 2.0));
  EXPECT_LT(max_abs(o.matrix.matrix() - expect), 1e-14);
}

TEST(OmegaState, CbitOnCbitKeepsZeroDifferenceBlock) {
  OmegaState o = omega_state(DensityMatrix(plus()), cbit_h(), plus(), cbit_h());
  ComplexMatrix m = o.matrix.matrix();
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(m(i, i).real(), 0.25, 1e-14);
  EXPECT_NEAR(std::abs(m(0, 3)), 0.25, 1e-14);
  EXPECT_NEAR(std::abs(m(1, 2)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(m(0, 1)), 0.0, 1e-14);
  EXPECT_NEAR(conditional_min_entropy(o).optimum, 1.0, 1e-8);
}

TEST(OmegaState, CommutesWithDifferenceHamiltonian) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = rng_for(104, t);
    int da = uniform_int(2, 4, rng), db = uniform_int(2, 3, rng);
    HermitianObservable ha = random_level_hamiltonian(da, 3, rng);
    HermitianObservable hb = random_level_hamiltonian(db, 3, rng);
    OmegaState o = omega_state(random_density(da, rng), ha, random_pure(db, rng), hb);
    ComplexMatrix diff = tensor(ha.matrix(), ComplexMatrix::Identity(db, db)) -
                         tensor(ComplexMatrix::Identity(da, da), hb.matrix());
    ASSERT_LT(max_abs(diff * o.matrix.matrix() - o.matrix.matrix() * diff), 1e-10);
    ASSERT_NEAR(o.matrix.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(MaxDistillFidelity, Examples) {
  EXPECT_NEAR(max_distill_fidelity(DensityMatrix(plus()), cbit_h(), plus(), cbit_h()), 1.0, 1e-7);
  EXPECT_NEAR(max_distill_fidelity(testing::diag_state({0.6, 0.4}), cbit_h(), plus(), cbit_h()), 0.5, 1e-6);
  double f2 = max_distill_fidelity(tensor_power(noisy_plus(0.6), 2), copies_hamiltonian(cbit_h(), 2), plus(),
                                   cbit_h());
  EXPECT_GE(f2, 0.8 - 1e-7);
  EXPECT_LE(f2, 1 - qubit_infidelity_bound(0.6, 2).exact + 1e-7);
}

TEST(MaxDistillFidelity, QubitSandwichAndMonotoneInCopies) {
  for (double lambda : {0.3, 0.6, 0.9}) {
    double prev = 0;
    for (int n = 1; n <= 4; ++n) {
      double f = max_distill_fidelity(tensor_power(noisy_plus(lambda), n), copies_hamiltonian(cbit_h(), n), plus(),
                                      cbit_h());
      double lt = 2 * f - 1;
      EXPECT_LE(lt * lt / (1 - lt * lt), n * lambda * lambda / (1 - lambda * lambda) + 1e-6);
      EXPECT_GE(f, (1 + lambda) / 2 - 1e-6);
      EXPECT_GE(f, prev - 1e-7);
      prev = f;
    }
  }
}

TEST(IsBoundResource, Examples) {
  EXPECT_TRUE(is_bound_resource(noisy_plus(0.6), cbit_h()));
  EXPECT_FALSE(is_bound_resource(DensityMatrix(plus()), cbit_h()));
  EXPECT_FALSE(is_bound_resource(testing::diag_state({0.2, 0.8}), cbit_h()));
  for (int t = 0; t < 200; ++t) {
    Rng rng = rng_for(105, t);
    int d = uniform_int(2, 5, rng);
    ASSERT_TRUE(is_bound_resource(random_density(d, rng), random_hamiltonian(d, rng)));
  }
}

TEST(DistillationCopyFloor, Examples) {
  MeasureValue pure = distillation_copy_floor(DensityMatrix(plus()), cbit_h(), plus(), cbit_h(), 0.01, 1.0);
  EXPECT_FALSE(pure.infinite);
  EXPECT_EQ(pure.value, 0.0);
  EXPECT_EQ(distillation_copy_floor(noisy_plus(0.6), cbit_h(), testing::superposition(2, {0}), cbit_h(), 0.01, 1.0)
                .value,
            0.0);
  MeasureValue f = distillation_copy_floor(noisy_plus(0.6), cbit_h(), plus(), cbit_h(), 0.01, 1.0);
  EXPECT_NEAR(f.value, 0.25 * 197 / 0.5625, 1e-9);
  EXPECT_NEAR(f.value, 87.56, 0.01);
  EXPECT_NEAR(distillation_copy_floor(noisy_plus(0.6), cbit_h(), plus(), cbit_h(), 0.01, 0.5).value, f.value / 2,
              1e-9);
  EXPECT_TRUE(distillation_copy_floor(testing::diag_state({0.5, 0.5}), cbit_h(), plus(), cbit_h(), 0.01, 1.0)
                  .infinite);
  EXPECT_EQ(code_of([] { distillation_copy_floor(noisy_plus(0.6), cbit_h(), plus(), cbit_h(), 0.7, 1.0); }),
            ErrorCode::kEpsOutOfRange);
}

TEST(DistillationCopyFloor, ScalesLikeInverseEps) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = rng_for(106, t);
    int d = uniform_int(2, 4, rng);
    DensityMatrix rho = random_density(d, rng);
    HermitianObservable h = random_hamiltonian(d, rng);
    double a = distillation_copy_floor(rho, h, plus(), cbit_h(), 0.04, 1.0).value;
    double b = distillation_copy_floor(rho, h, plus(), cbit_h(), 0.02, 1.0).value;
    double c = distillation_copy_floor(rho, h, plus(), cbit_h(), 0.01, 1.0).value;
    ASSERT_GE(b / a, 1.9);
    ASSERT_LE(b / a, 2.1);
    ASSERT_GE(c / b, 1.9);
    ASSERT_LE(c / b, 2.1);
  }
}

TEST(QubitInfidelityBound, Examples) {
  for (int n : {1, 5, 50}) EXPECT_EQ(qubit_infidelity_bound(1.0, n).exact, 0.0);
  for (double l : {0.3, 0.6, 0.9}) EXPECT_NEAR(qubit_infidelity_bound(l, 1).exact, (1 - l) / 2, 1e-15);
  QubitBound b = qubit_infidelity_bound(0.6, 10);
  EXPECT_NEAR(b.exact, (1 - std::sqrt(3.6 / 4.24)) / 2, 1e-15);
  EXPECT_NEAR(b.exact, 0.03928, 1e-5);
  EXPECT_NEAR(b.asymptotic, 0.64 / 14.4, 1e-15);
  // Exact and asymptotic agree to first order at large n.
  QubitBound big = qubit_infidelity_bound(0.6, 1000000);
  EXPECT_NEAR(big.exact / big.asymptotic, 1.0, 1e-4);
}

TEST(CiracComparison, Examples) {
  EXPECT_EQ(cirac_comparison(1.0, 10), 0.0);
  EXPECT_NEAR(cirac_comparison(0.6, 10), 0.4 / 7.2, 1e-15);
  EXPECT_NEAR(cirac_comparison(0.6, 10) / qubit_infidelity_bound(0.6, 10).asymptotic, 1.25, 1e-12);
  for (int t = 0; t < 100; ++t) {
    Rng rng = rng_for(107, t);
    double l = uniform_real(0.01, 0.99, rng);
    int n = uniform_int(1, 1000, rng);
    double ratio = cirac_comparison(l, n) / qubit_infidelity_bound(l, n).asymptotic;
    ASSERT_NEAR(ratio, 2 / (1 + l), 1e-12);
    ASSERT_GT(ratio, 1.0);
    ASSERT_LE(ratio, 2.0);
  }
}

TEST(HelperBound, Examples) {
  DensityMatrix rho = noisy_plus(0.6);
  PureState e0 = testing::superposition(2, {0});
  MeasureValue eig = helper_bound(rho, cbit_h(), e0, cbit_h(), 10, 0.1);
  EXPECT_NEAR(eig.value, 0.1 * 0.5625 / 0.7, 1e-12);
  MeasureValue tiny = helper_bound(rho, cbit_h(), plus(), cbit_h(), 10, 1e-9);
  EXPECT_NEAR(tiny.value, 2 * 0.25 / 10, 1e-8);
  double v = helper_bound(rho, cbit_h(), plus(), cbit_h(), 100, 0.01).value;
  EXPECT_NEAR(v, (0.01 * 0.5625 + 0.005) / 0.97, 1e-12);
  EXPECT_GT(v, 0.0);
  EXPECT_LT(helper_bound(rho, cbit_h(), plus(), cbit_h(), 100, 0.005).value, v);
  EXPECT_LT(helper_bound(rho, cbit_h(), plus(), cbit_h(), 1000, 0.01).value, v);
  EXPECT_EQ(code_of([&] { helper_bound(rho, cbit_h(), plus(), cbit_h(), 10, 0.34); }), ErrorCode::kEpsOutOfRange);
}

}  // namespace
}  // namespace coherence
