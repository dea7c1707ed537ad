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

#include "coherence/clock.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "coherence/errors.h"

namespace coherence {

double IntegerDistribution::at(long n) const {
  if (n < lo() || n > hi()) return 0.0;
  return probs[static_cast<size_t>(n - offset)];
}

double IntegerDistribution::mass() const {
  return std::accumulate(probs.begin(), probs.end(), 0.0);
}

double IntegerDistribution::mean() const {
  double s = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) s += probs[i] * static_cast<double>(i);
  return s / mass() + static_cast<double>(offset);
}

double IntegerDistribution::variance() const {
  // Centered at the window start to keep the sums small.
  double m = mean() - static_cast<double>(offset);
  double s = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    double d = static_cast<double>(i) - m;
    s += probs[i] * d * d;
  }
  return s / mass();
}

IntegerDistribution IntegerDistribution::shifted(long k) const {
  IntegerDistribution out = *this;
  out.offset += k;
  return out;
}

IntegerDistribution IntegerDistribution::trimmed() const {
  size_t a = 0, b = probs.size();
  while (a < b && probs[a] == 0.0) ++a;
  while (b > a && probs[b - 1] == 0.0) --b;
  IntegerDistribution out;
  out.offset = offset + static_cast<long>(a);
  out.probs.assign(probs.begin() + a, probs.begin() + b);
  return out;
}

std::vector<long> IntegerDistribution::support() const {
  std::vector<long> s;
  for (size_t i = 0; i < probs.size(); ++i)
    if (probs[i] > 0.0) s.push_back(offset + static_cast<long>(i));
  return s;
}

IntegerDistribution IntegerDistribution::point(long n) { return {n, {1.0}}; }

IntegerDistribution IntegerDistribution::from_masses(const std::vector<long>& n,
                                                     const std::vector<double>& p) {
  if (n.empty() || n.size() != p.size()) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "mass list shape");
  }
  long lo = *std::min_element(n.begin(), n.end());
  long hi = *std::max_element(n.begin(), n.end());
  IntegerDistribution out{lo, std::vector<double>(static_cast<size_t>(hi - lo + 1), 0.0)};
  for (size_t i = 0; i < n.size(); ++i) out.probs[static_cast<size_t>(n[i] - lo)] += p[i];
  return out;
}

PeriodicClockState extract_distribution(const PureState& psi,
                                        const HermitianObservable& h, double tau,
                                        const Tolerances& tol) {
  if (psi.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "state and hamiltonian dims");
  }
  if (!(tau > 0)) throw CoherenceError(ErrorCode::kInvalidArgument, "tau must be > 0");
  ComplexVector c = h.eigenvectors().adjoint() * psi.amplitudes();
  std::vector<double> energy, weight;
  for (const auto& g : h.eigenspaces()) {
    double w = 0.0;
    for (int i : g) w += std::norm(c[i]);
    if (w <= tol.tol_prob) continue;
    energy.push_back(h.eigenvalues()[g.front()]);
    weight.push_back(w);
  }
  PeriodicClockState out;
  out.state = psi;
  out.hamiltonian = h;
  out.tau = tau;
  out.reference_energy = energy.front();
  std::vector<long> n;
  double unit = 2.0 * std::numbers::pi / tau;
  for (double e : energy) {
    double x = (e - out.reference_energy) / unit;
    long k = std::lround(x);
    if (std::abs(x - static_cast<double>(k)) > tol.level_tol) {
      throw CoherenceError(ErrorCode::kIncommensurateSpectrum,
                           "energy gap " + std::to_string(x) + " in units of 2pi/tau");
    }
    n.push_back(k);
  }
  double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  for (double& w : weight) w /= total;
  out.distribution = IntegerDistribution::from_masses(n, weight);
  out.levels = out.distribution.support();
  return out;
}

long support_gcd(const IntegerDistribution& p) {
  std::vector<long> s = p.support();
  long g = 0;
  for (long n : s) g = std::gcd(g, n - s.front());
  return g;
}

double period(const PureState& psi, const HermitianObservable& h, double tau,
              const Tolerances& tol) {
  long g = support_gcd(extract_distribution(psi, h, tau, tol).distribution);
  return g == 0 ? 0.0 : tau / static_cast<double>(g);
}

bool coherences_commensurate(const DensityMatrix& rho,
                             const HermitianObservable& h, double tau,
                             const Tolerances& tol) {
  if (rho.dim() != h.dim()) {
    throw CoherenceError(ErrorCode::kDimMismatch, "state and hamiltonian dims");
  }
  std::vector<ComplexMatrix> proj = h.eigenprojectors();
  const auto& groups = h.eigenspaces();
  for (size_t a = 0; a < proj.size(); ++a) {
    for (size_t b = a + 1; b < proj.size(); ++b) {
      if (max_abs(proj[a] * rho.matrix() * proj[b]) <= tol.tol_num) continue;
      double gap = h.eigenvalues()[groups[b].front()] - h.eigenvalues()[groups[a].front()];
      double x = gap * tau / (2.0 * std::numbers::pi);
      if (std::abs(x - std::round(x)) > tol.level_tol) return false;
    }
  }
  return true;
}

IntegerDistribution convolve(const IntegerDistribution& p,
                             const IntegerDistribution& q) {
  IntegerDistribution out{p.offset + q.offset,
                          std::vector<double>(p.probs.size() + q.probs.size() - 1, 0.0)};
  for (size_t i = 0; i < p.probs.size(); ++i) {
    double a = p.probs[i];
    if (a == 0.0) continue;
    double* dst = out.probs.data() + i;
    for (size_t j = 0; j < q.probs.size(); ++j) dst[j] += a * q.probs[j];
  }
  return out;
}

IntegerDistribution convolve_n(const IntegerDistribution& p, int m) {
  if (m < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "copies must be >= 1");
  IntegerDistribution result;
  IntegerDistribution base = p;
  bool have = false;
  while (m > 0) {
    if (m & 1) {
      result = have ? convolve(result, base) : base;
      have = true;
    }
    m >>= 1;
    if (m > 0) base = convolve(base, base);
  }
  return result;
}

double tv_distance(const IntegerDistribution& p, const IntegerDistribution& q) {
  long lo = std::min(p.lo(), q.lo());
  long hi = std::max(p.hi(), q.hi());
  double s = 0.0;
  for (long n = lo; n <= hi; ++n) s += std::abs(p.at(n) - q.at(n));
  return std::min(1.0, 0.5 * s);
}

int overlap_copy_count(const IntegerDistribution& p, int l_max) {
  if (support_gcd(p) != 1) {
    throw CoherenceError(ErrorCode::kGcdNotOne,
                         "support gcd is " + std::to_string(support_gcd(p)));
  }
  IntegerDistribution pl = p;
  for (int l = 1; l <= l_max; ++l) {
    if (l > 1) pl = convolve(pl, p);
    if (tv_distance(pl, pl.shifted(1)) < 1.0 - 1e-12) return l;
  }
  throw CoherenceError(ErrorCode::kSearchExhausted,
                       "no overlap up to L = " + std::to_string(l_max));
}

TranslatedPoisson translated_poisson(double mu, double sigma2,
                                     const Tolerances& tol) {
  if (!(sigma2 >= 0)) throw CoherenceError(ErrorCode::kInvalidArgument, "sigma2 < 0");
  TranslatedPoisson tp;
  tp.mu = mu;
  tp.sigma2 = sigma2;
  double floor_v = std::floor(mu - sigma2);
  tp.shift = static_cast<long>(floor_v);
  tp.gamma = mu - sigma2 - floor_v;
  double lambda = sigma2 + tp.gamma;
  if (lambda <= 0.0) {
    tp.distribution = IntegerDistribution::point(tp.shift);
    return tp;
  }
  long kmax = static_cast<long>(lambda + 40.0 * std::sqrt(lambda) + 60.0);
  std::vector<double> pmf(static_cast<size_t>(kmax + 1));
  for (long k = 0; k <= kmax; ++k) {
    double kk = static_cast<double>(k);
    pmf[static_cast<size_t>(k)] = std::exp(kk * std::log(lambda) - lambda - std::lgamma(kk + 1.0));
  }
  size_t a = 0, b = pmf.size();
  double cut = 0.0;
  while (a < b && cut + pmf[a] < 0.5 * tol.tail_eps) cut += pmf[a++];
  cut = 0.0;
  while (b > a && cut + pmf[b - 1] < 0.5 * tol.tail_eps) cut += pmf[--b];
  std::vector<double> kept(pmf.begin() + a, pmf.begin() + b);
  double total = std::accumulate(kept.begin(), kept.end(), 0.0);
  for (double& x : kept) x /= total;
  tp.distribution = {tp.shift + static_cast<long>(a), kept};
  return tp;
}

BarbourTerms barbour_terms(const IntegerDistribution& p) {
  double mu = p.mean();
  double s2 = p.variance();
  if (s2 <= 0.0) throw CoherenceError(ErrorCode::kZeroVariance, "point mass");
  double f2 = 0.0, f2b = 0.0, f3 = 0.0;
  for (long n = p.lo(); n <= p.hi(); ++n) {
    double x = static_cast<double>(n), w = p.at(n);
    f2 += w * x * (x - 1.0);
    f2b += w * (x - 1.0) * (x - 2.0);
    f3 += w * std::abs(x * (x - 1.0) * (x - 2.0));
  }
  BarbourTerms t;
  t.phi = f2 + std::abs(mu - s2) / s2 * f2b + f3 / s2;
  t.nu = std::min(0.5, 1.0 - tv_distance(p, p.shifted(1)));
  if (t.nu <= 0.0) {
    throw CoherenceError(ErrorCode::kZeroNu, "distribution never overlaps its shift");
  }
  t.a = std::sqrt(s2);
  t.b = t.nu;
  t.c = t.phi / s2;
  return t;
}

double barbour_bound(const IntegerDistribution& p, int m) {
  BarbourTerms t = barbour_terms(p);
  double mb = m * t.b - 0.5;
  if (mb <= 0.0) return std::numeric_limits<double>::infinity();
  return t.c / std::sqrt(mb) + 2.0 / (m * t.a);
}

double poisson_distance_bound(double sigma2, double x) {
  if (sigma2 < 0 || x < 0) {
    throw CoherenceError(ErrorCode::kInvalidArgument, "negative argument");
  }
  return std::min(x, std::sqrt(2.0 / std::numbers::e) *
                         (std::sqrt(sigma2 + x) - std::sqrt(sigma2)));
}

}  // namespace coherence
