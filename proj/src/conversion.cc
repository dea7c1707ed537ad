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

#include "coherence/conversion.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "coherence/errors.h"
#include "coherence/measures.h"

namespace coherence {

double max_rate(const PureState& psi1, const HermitianObservable& h1,
                const PureState& psi2, const HermitianObservable& h2,
                double tau, const Tolerances& tol) {
  double v2 = energy_variance(psi2, h2);
  if (v2 <= tol.tol_num) {
    throw CoherenceError(ErrorCode::kZeroTargetVariance, "target is an eigenstate");
  }
  double v1 = energy_variance(psi1, h1);
  if (v1 <= tol.tol_num) return 0.0;
  double t1 = period(psi1, h1, tau, tol);
  double t2 = period(psi2, h2, tau, tol);
  if (std::abs(t1 - t2) > 1e-12 * tau) {
    throw CoherenceError(ErrorCode::kPeriodMismatch,
                         "periods " + std::to_string(t1) + " and " + std::to_string(t2));
  }
  return v1 / v2;
}

namespace {

double shifted_tv(const IntegerDistribution& p, const IntegerDistribution& q,
                  long k) {
  long qlo = q.lo() + k, qhi = q.hi() + k;
  long lo = std::min(p.lo(), qlo), hi = std::max(p.hi(), qhi);
  double s = 0.0;
  for (long n = lo; n <= hi; ++n) s += std::abs(p.at(n) - q.at(n - k));
  return std::min(1.0, 0.5 * s);
}

bool preferred(long k, long best) {
  if (std::labs(k) != std::labs(best)) return std::labs(k) < std::labs(best);
  return k < best;
}

}  // namespace

ShiftMatch best_shift(const IntegerDistribution& p, const IntegerDistribution& q) {
  long lo = std::min(p.lo() - q.hi(), 0L);
  long hi = std::max(p.hi() - q.lo(), 0L);
  ShiftMatch best{0, shifted_tv(p, q, 0)};
  for (long k = lo; k <= hi; ++k) {
    double e = shifted_tv(p, q, k);
    if (e < best.eps - 1e-15 || (e <= best.eps + 1e-15 && preferred(k, best.k))) {
      best = {k, e};
    }
  }
  return best;
}

ConversionPlan single_shot_bound(const PureState& psi1,
                                 const HermitianObservable& h1,
                                 const PureState& psi2,
                                 const HermitianObservable& h2, double tau,
                                 const Tolerances& tol) {
  IntegerDistribution p = extract_distribution(psi1, h1, tau, tol).distribution;
  IntegerDistribution q = extract_distribution(psi2, h2, tau, tol).distribution;
  ShiftMatch s = best_shift(p, q);
  ConversionPlan plan;
  plan.rate = 1.0;
  plan.shift_k = s.k;
  plan.tv_error = s.eps;
  plan.fidelity_lower_bound = std::max(0.0, 1.0 - 2.0 * s.eps);
  return plan;
}

std::pair<long long, long long> snap_rational(double x, long long max_den) {
  if (!(x >= 0) || !std::isfinite(x)) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "rate must be finite and >= 0");
  }
  // Continued-fraction convergents h/k, stopping before k exceeds max_den.
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a_d = std::floor(r);
    if (a_d > 1e15) break;
    long long a = static_cast<long long>(a_d);
    long long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = r - a_d;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return {h1, k1};
}

std::vector<ConversionPlan> iid_sweep(const PureState& psi1,
                                      const HermitianObservable& h1,
                                      const PureState& psi2,
                                      const HermitianObservable& h2, double tau,
                                      double rate, const std::vector<int>& m_list,
                                      const Tolerances& tol) {
  if (!(rate > 0)) throw CoherenceError(ErrorCode::kInvalidArgument, "rate must be > 0");
  double ratio = max_rate(psi1, h1, psi2, h2, tau, tol);
  IntegerDistribution p1 = extract_distribution(psi1, h1, tau, tol).distribution;
  IntegerDistribution p2 = extract_distribution(psi2, h2, tau, tol).distribution;
  // Both single-copy distributions must reach unit-shift overlap in finitely
  // many copies, otherwise the period is a proper fraction of tau.
  overlap_copy_count(p1);
  overlap_copy_count(p2);
  auto [num, den] = snap_rational(rate);

  std::vector<ConversionPlan> out;
  for (int m : m_list) {
    if (m < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "copies must be >= 1");
    long long n_out = (num * m + den - 1) / den;
    if (n_out < 1) n_out = 1;
    IntegerDistribution q = convolve_n(p2, static_cast<int>(n_out));
    // Input copies whose variance matches the target, plus a window.
    double matched = ratio > 0 ? static_cast<double>(n_out) / ratio : m;
    int centre = static_cast<int>(std::lround(std::min<double>(m, matched)));
    int w = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(m)))) + 2;
    int lo = std::max(1, centre - w);
    int hi = std::min(m, centre + w);
    if (lo > hi) lo = hi;

    ConversionPlan plan;
    plan.rate = rate;
    plan.input_copies = m;
    plan.output_copies = static_cast<int>(n_out);
    plan.tv_error = 2.0;
    IntegerDistribution pm = convolve_n(p1, lo);
    for (int used = lo; used <= hi; ++used) {
      if (used > lo) pm = convolve(pm, p1);
      ShiftMatch s = best_shift(pm, q);
      if (s.eps <= plan.tv_error) {
        plan.input_copies_used = used;
        plan.shift_k = s.k;
        plan.tv_error = s.eps;
      }
    }
    plan.fidelity_lower_bound = std::max(0.0, 1.0 - 2.0 * plan.tv_error);
    out.push_back(plan);
  }
  return out;
}

bool rate_feasibility(const DensityMatrix& rho_in, const HermitianObservable& h_in,
                      const DensityMatrix& rho_out,
                      const HermitianObservable& h_out, double rate,
                      const Tolerances& tol) {
  double f_out = qfi(rho_out, h_out, tol).value;
  if (f_out <= tol.tol_num) {
    throw CoherenceError(ErrorCode::kZeroTargetQfi, "target carries no coherence");
  }
  return rate <= qfi(rho_in, h_in, tol).value / f_out + tol.tol_num;
}

double coherence_cost(const DensityMatrix& rho, const HermitianObservable& h,
                      double tau, const Tolerances& tol) {
  if (!coherences_commensurate(rho, h, tau, tol)) {
    throw CoherenceError(ErrorCode::kPeriodMismatch, "state is not tau-periodic");
  }
  double s = tau / (2.0 * std::numbers::pi);
  return s * s * qfi(rho, h, tol).value;
}

}  // namespace coherence
