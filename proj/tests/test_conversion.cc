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
#include <numbers>

#include "coherence/channels.h"
#include "coherence/clock.h"
#include "coherence/conversion.h"
#include "coherence/errors.h"
#include "coherence/measures.h"
#include "coherence/random.h"
#include "test_util.h"

namespace coherence {
namespace {

using testing::cbit_h;
using testing::kTau;
using testing::ladder;
using testing::plus;
using testing::superposition;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const CoherenceError& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

PureState g023() { return superposition(4, {0, 2, 3}); }

// sqrt(p)|0> + sqrt(1-p)|2> with 4p(1-p) = 1/4: variance 1/4, period tau/2.
PureState quarter_variance_even() {
  double p = (1 - std::sqrt(0.75)) / 2;
  ComplexVector v = ComplexVector::Zero(3);
  v[0] = std::sqrt(p);
  v[2] = std::sqrt(1 - p);
  return PureState(v);
}

// Brute-force minimum over a generous window, ignoring tie-breaking.
double brute_min_tv(const IntegerDistribution& p, const IntegerDistribution& q) {
  double best = 1.0;
  for (long k = -60; k <= 60; ++k) best = std::min(best, tv_distance(p, q.shifted(k)));
  return best;
}

TEST(MaxRate, Examples) {
  EXPECT_EQ(max_rate(g023(), ladder(4), g023(), ladder(4), kTau), 1.0);
  EXPECT_NEAR(max_rate(superposition(3, {0, 2}), ladder(3), quarter_variance_even(), ladder(3), kTau), 4.0, 1e-12);
  EXPECT_NEAR(max_rate(plus(), cbit_h(), g023(), ladder(4), kTau), 9.0 / 56, 1e-14);
  EXPECT_EQ(max_rate(superposition(2, {1}), cbit_h(), plus(), cbit_h(), kTau), 0.0);
}

TEST(MaxRate, Errors) {
  EXPECT_EQ(code_of([] { max_rate(plus(), cbit_h(), superposition(2, {0}), cbit_h(), kTau); }),
            ErrorCode::kZeroTargetVariance);
  EXPECT_EQ(code_of([] { max_rate(superposition(3, {0, 2}), ladder(3), plus(), cbit_h(), kTau); }),
            ErrorCode::kPeriodMismatch);
}

TEST(MaxRate, Reversibility) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = rng_for(70, t);
    int d1 = uniform_int(2, 5, rng), d2 = uniform_int(2, 5, rng);
    // Levels 0 and 1 always present keeps both periods equal to tau.
    PureState a = random_pure(d1, rng), b = random_pure(d2, rng);
    double r = max_rate(a, ladder(d1), b, ladder(d2), kTau) * max_rate(b, ladder(d2), a, ladder(d1), kTau);
    ASSERT_NEAR(r, 1.0, 4e-16);
  }
}

TEST(BestShift, Examples) {
  IntegerDistribution p = IntegerDistribution::from_masses({0, 2, 3}, {0.2, 0.5, 0.3});
  ShiftMatch s = best_shift(p, p.shifted(5));
  EXPECT_EQ(s.k, -5);
  EXPECT_EQ(s.eps, 0.0);
  ShiftMatch same = best_shift(p, p);
  EXPECT_EQ(same.k, 0);
  EXPECT_EQ(same.eps, 0.0);
  IntegerDistribution b = IntegerDistribution::from_masses({0, 1}, {0.5, 0.5});
  ShiftMatch bq = best_shift(b, convolve_n(b, 2));
  EXPECT_NEAR(bq.eps, 0.25, 1e-15);
  EXPECT_EQ(bq.k, 0);
}

TEST(BestShift, ExactAgainstIndependentScan) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = rng_for(71, t);
    auto draw = [&] {
      std::vector<long> n;
      std::vector<double> w;
      int len = uniform_int(1, 6, rng);
      for (int k = 0; k < len; ++k) {
        n.push_back(k);
        w.push_back(uniform_real(0, 1, rng));
      }
      double s = 0;
      for (double x : w) s += x;
      for (double& x : w) x /= s;
      return IntegerDistribution::from_masses(n, w).shifted(uniform_int(-20, 20, rng));
    };
    IntegerDistribution p = draw(), q = draw();
    ShiftMatch s = best_shift(p, q);
    ASSERT_NEAR(s.eps, tv_distance(p, q.shifted(s.k)), 1e-15);
    ASSERT_NEAR(s.eps, brute_min_tv(p, q), 1e-15);
  }
}

TEST(SingleShot, Examples) {
  ComplexVector v(4);
  v << 1, 0, Complex(0, 1), -1;
  PureState phased = PureState::normalized(v);
  ConversionPlan same = single_shot_bound(g023(), ladder(4), phased, ladder(4), kTau);
  EXPECT_EQ(same.tv_error, 0.0);
  EXPECT_EQ(same.fidelity_lower_bound, 1.0);
  // Eigenstate against a four-level uniform superposition: tv 3/4.
  ConversionPlan far = single_shot_bound(superposition(4, {2}), ladder(4),
                                         superposition(4, {0, 1, 2, 3}), ladder(4), kTau);
  EXPECT_NEAR(far.tv_error, 0.75, 1e-15);
  EXPECT_EQ(far.fidelity_lower_bound, 0.0);
  // Distributions are referenced to the lowest occupied level, so {2,3}
  // and the c-bit both land on {0,1}.
  ConversionPlan shift = single_shot_bound(superposition(4, {2, 3}), ladder(4), plus(), cbit_h(), kTau);
  EXPECT_EQ(shift.shift_k, 0);
  EXPECT_EQ(shift.tv_error, 0.0);
}

TEST(SnapRational, Examples) {
  EXPECT_EQ(snap_rational(0.9 * 56.0 / 9), (std::pair<long long, long long>{28, 5}));
  EXPECT_EQ(snap_rational(1.0), (std::pair<long long, long long>{1, 1}));
  EXPECT_EQ(snap_rational(9.0 / 56), (std::pair<long long, long long>{9, 56}));
  auto [n, d] = snap_rational(std::numbers::pi);
  EXPECT_LE(d, 1000000);
  EXPECT_NEAR(double(n) / d, std::numbers::pi, 1e-10);
}

TEST(IidSweep, CbitIdentityIsExact) {
  auto plans = iid_sweep(plus(), cbit_h(), plus(), cbit_h(), kTau, 1.0, {16, 64, 256});
  ASSERT_EQ(plans.size(), 3u);
  for (const ConversionPlan& p : plans) {
    EXPECT_LT(p.tv_error, 1e-12);
    EXPECT_EQ(p.output_copies, p.input_copies);
    EXPECT_NEAR(p.fidelity_lower_bound, 1.0, 1e-12);
  }
}

TEST(IidSweep, AboveRateStaysAwayFromZero) {
  auto plans = iid_sweep(plus(), cbit_h(), plus(), cbit_h(), kTau, 1.2, {16, 64, 256});
  for (const ConversionPlan& p : plans) EXPECT_GT(p.tv_error, 0.03);
}

TEST(IidSweep, BelowRateDecreases) {
  double r = 0.9 * (14.0 / 9) / 0.25;
  auto plans = iid_sweep(g023(), ladder(4), plus(), cbit_h(), kTau, r, {16, 64, 256});
  EXPECT_LT(plans[1].tv_error, plans[0].tv_error);
  EXPECT_LT(plans[2].tv_error, plans[1].tv_error);
  EXPECT_LT(plans[2].tv_error, 0.05);
}

TEST(IidSweep, AtTheRateDecreases) {
  auto a = iid_sweep(g023(), ladder(4), plus(), cbit_h(), kTau, 56.0 / 9, {16, 64, 256});
  auto b = iid_sweep(plus(), cbit_h(), g023(), ladder(4), kTau, 9.0 / 56, {16, 64, 256});
  for (const auto& plans : {a, b}) {
    EXPECT_LT(plans[1].tv_error, plans[0].tv_error);
    EXPECT_LT(plans[2].tv_error, plans[1].tv_error);
  }
}

TEST(IidSweep, PlanInvariantsAndIndependentRecomputation) {
  IntegerDistribution p1 = extract_distribution(g023(), ladder(4), kTau).distribution;
  IntegerDistribution p2 = extract_distribution(plus(), cbit_h(), kTau).distribution;
  for (double rate : {3.0, 5.5, 6.0, 7.0}) {
    for (const ConversionPlan& p : iid_sweep(g023(), ladder(4), plus(), cbit_h(), kTau, rate, {4, 16, 40})) {
      ASSERT_EQ(p.output_copies, static_cast<int>(std::ceil(rate * p.input_copies - 1e-12)));
      ASSERT_LE(p.input_copies_used, p.input_copies);
      ASSERT_GE(p.input_copies_used, 1);
      ASSERT_EQ(p.fidelity_lower_bound, std::max(0.0, 1 - 2 * p.tv_error));
      double e = tv_distance(convolve_n(p1, p.input_copies_used),
                             convolve_n(p2, p.output_copies).shifted(p.shift_k));
      ASSERT_NEAR(e, p.tv_error, 1e-13);
    }
  }
}

TEST(IidSweep, Errors) {
  EXPECT_EQ(code_of([] { iid_sweep(plus(), cbit_h(), plus(), cbit_h(), kTau, 0.0, {4}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] {
              iid_sweep(superposition(3, {0, 2}), ladder(3), superposition(3, {0, 2}), ladder(3), kTau, 1.0, {4});
            }),
            ErrorCode::kGcdNotOne);
}

TEST(RateFeasibility, Examples) {
  DensityMatrix noisy = testing::noisy_plus(0.6), cbit(plus());
  EXPECT_TRUE(rate_feasibility(testing::diag_state({0.5, 0.5}), cbit_h(), cbit, cbit_h(), 0.0));
  EXPECT_TRUE(rate_feasibility(noisy, cbit_h(), cbit, cbit_h(), 0.36));
  EXPECT_TRUE(rate_feasibility(noisy, cbit_h(), cbit, cbit_h(), 0.3));
  EXPECT_FALSE(rate_feasibility(noisy, cbit_h(), cbit, cbit_h(), 0.37));
  EXPECT_EQ(code_of([&] { rate_feasibility(noisy, cbit_h(), testing::diag_state({0.5, 0.5}), cbit_h(), 0.1); }),
            ErrorCode::kZeroTargetQfi);
}

TEST(CoherenceCost, Examples) {
  EXPECT_NEAR(coherence_cost(DensityMatrix(plus()), cbit_h(), kTau), 1.0, 1e-12);
  EXPECT_NEAR(coherence_cost(testing::diag_state({0.3, 0.7}), cbit_h(), kTau), 0.0, 1e-15);
  EXPECT_NEAR(coherence_cost(testing::noisy_plus(0.6), cbit_h(), kTau), 0.36, 1e-12);
  // Period tau' = 2: energies in units of 2 pi / tau' = pi.
  HermitianObservable h = HermitianObservable::diagonal({0.5 * std::numbers::pi, -0.5 * std::numbers::pi});
  EXPECT_NEAR(coherence_cost(DensityMatrix(plus()), h, 2.0), 1.0, 1e-12);
  HermitianObservable irr = HermitianObservable::diagonal({0, std::sqrt(2.0)});
  EXPECT_EQ(code_of([&] { coherence_cost(testing::noisy_plus(0.5), irr, kTau); }), ErrorCode::kPeriodMismatch);
}

TEST(CoherenceCost, Additivity) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = rng_for(72, t);
    int d1 = uniform_int(2, 3, rng), d2 = uniform_int(2, 3, rng);
    HermitianObservable h1 = random_level_hamiltonian(d1, 3, rng), h2 = random_level_hamiltonian(d2, 3, rng);
    DensityMatrix r1 = random_density(d1, rng), r2 = random_density(d2, rng);
    DensityMatrix r12 = DensityMatrix::trusted(tensor(r1.matrix(), r2.matrix()));
    ASSERT_NEAR(coherence_cost(r12, noninteracting_hamiltonian(h1, h2), kTau),
                coherence_cost(r1, h1, kTau) + coherence_cost(r2, h2, kTau), 1e-9);
  }
}

TEST(CoherenceCost, MonotoneUnderTiChannels) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = rng_for(73, t);
    int di = uniform_int(2, 4, rng), dout = uniform_int(2, 4, rng);
    HermitianObservable hi = random_level_hamiltonian(di, 3, rng);
    HermitianObservable ho = random_level_hamiltonian(dout, 3, rng);
    DensityMatrix rho = random_density(di, rng);
    int rank = std::max(1, (di + dout - 1) / dout) + uniform_int(0, 2, rng);
    TIChannel ch = twirl(random_channel(di, dout, rank, 1000 + t), hi, ho, kTau);
    double before = coherence_cost(rho, hi, kTau);
    double after = coherence_cost(apply(ch, rho), ho, kTau);
    ASSERT_LE(after, before + 1e-8 * std::max(1.0, before));
  }
}

}  // namespace
}  // namespace coherence
