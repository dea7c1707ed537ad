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

#include "coherence/channels.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "coherence/conversion.h"
#include "coherence/errors.h"
#include "coherence/measures.h"
#include "coherence/random.h"

namespace coherence {

ComplexMatrix KrausChannel::superoperator() const {
  ComplexMatrix s = ComplexMatrix::Zero(d_out * d_out, d_in * d_in);
  for (const ComplexMatrix& k : kraus) s += tensor(k, ComplexMatrix(k.conjugate()));
  return s;
}

double KrausChannel::cptp_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(d_in, d_in);
  for (const ComplexMatrix& k : kraus) sum += k.adjoint() * k;
  return max_abs(sum - ComplexMatrix::Identity(d_in, d_in));
}

KrausChannel identity_channel(int d) {
  return {{ComplexMatrix::Identity(d, d)}, d, d};
}

KrausChannel dephasing_channel(const HermitianObservable& h) {
  return {h.eigenprojectors(), h.dim(), h.dim()};
}

KrausChannel random_channel(int d_in, int d_out, int rank, std::uint64_t seed) {
  if (d_in < 1 || d_out < 1 || rank < 1 || rank > d_in * d_out ||
      rank * d_out < d_in) {
    throw CoherenceError(ErrorCode::kInvalidArgument,
                         "need 1 <= rank <= d_in d_out and rank d_out >= d_in");
  }
  Rng rng = rng_for(seed);
  ComplexMatrix g = random_gaussian(rank * d_out, d_in, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(rank * d_out, d_in);
  KrausChannel ch{{}, d_in, d_out};
  for (int r = 0; r < rank; ++r) ch.kraus.push_back(v.block(r * d_out, 0, d_out, d_in));
  return ch;
}

std::vector<long> integer_levels(const HermitianObservable& h, double tau,
                                 const Tolerances& tol) {
  double unit = 2.0 * std::numbers::pi / tau;
  const RealVector& e = h.eigenvalues();
  std::vector<long> n(e.size());
  for (Eigen::Index i = 0; i < e.size(); ++i) {
    double x = (e[i] - e[0]) / unit;
    n[i] = std::lround(x);
    if (std::abs(x - static_cast<double>(n[i])) > tol.level_tol) {
      throw CoherenceError(ErrorCode::kIncommensurateSpectrum,
                           "level " + std::to_string(x) + " in units of 2pi/tau");
    }
  }
  return n;
}

TIChannel twirl(const KrausChannel& ch, const HermitianObservable& h_in,
                const HermitianObservable& h_out, double tau,
                const Tolerances& tol) {
  if (h_in.dim() != ch.d_in || h_out.dim() != ch.d_out) {
    throw CoherenceError(ErrorCode::kDimMismatch, "channel and hamiltonian dims");
  }
  std::vector<long> n = integer_levels(h_in, tau, tol);
  std::vector<long> m = integer_levels(h_out, tau, tol);
  const ComplexMatrix& w_in = h_in.eigenvectors();
  const ComplexMatrix& w_out = h_out.eigenvectors();
  int di = ch.d_in, d_o = ch.d_out;

  // Choi matrix in the energy bases, J[(a,i),(b,j)] = <i|E(|a><b|)|j>,
  // restricted to entries with m_i - n_a == m_j - n_b.
  ComplexMatrix choi = ComplexMatrix::Zero(di * d_o, di * d_o);
  for (const ComplexMatrix& k : ch.kraus) {
    ComplexMatrix kt = w_out.adjoint() * k * w_in;
    ComplexVector v(di * d_o);
    for (int a = 0; a < di; ++a)
      for (int i = 0; i < d_o; ++i) v[a * d_o + i] = kt(i, a);
    choi += v * v.adjoint();
  }
  std::map<long, std::vector<int>> modes;
  for (int a = 0; a < di; ++a)
    for (int i = 0; i < d_o; ++i) modes[m[i] - n[a]].push_back(a * d_o + i);

  TIChannel out;
  out.base = {{}, di, d_o};
  out.h_in = h_in;
  out.h_out = h_out;
  out.tau = tau;
  for (const auto& [omega, idx] : modes) {
    int len = static_cast<int>(idx.size());
    ComplexMatrix block(len, len);
    for (int r = 0; r < len; ++r)
      for (int c = 0; c < len; ++c) block(r, c) = choi(idx[r], idx[c]);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(block));
    for (int e = 0; e < len; ++e) {
      double lam = es.eigenvalues()[e];
      if (lam <= 1e-14) continue;
      ComplexMatrix kt = ComplexMatrix::Zero(d_o, di);
      for (int r = 0; r < len; ++r) {
        int a = idx[r] / d_o, i = idx[r] % d_o;
        kt(i, a) = std::sqrt(lam) * es.eigenvectors()(r, e);
      }
      out.base.kraus.push_back(w_out * kt * w_in.adjoint());
      out.mode_index.push_back(static_cast<int>(omega));
    }
  }
  return out;
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.d_in) {
    throw CoherenceError(ErrorCode::kDimMismatch, "channel input dim");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.d_out, ch.d_out);
  for (const ComplexMatrix& k : ch.kraus) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::trusted(out);
}

TiCheck is_ti(const KrausChannel& ch, const HermitianObservable& h_in,
              const HermitianObservable& h_out, double tau,
              const Tolerances& tol) {
  std::vector<long> n = integer_levels(h_in, tau, tol);
  std::vector<long> m = integer_levels(h_out, tau, tol);
  long bound = n.back() + m.back();
  long samples = 2 * bound + 1;
  ComplexMatrix s = ch.superoperator();
  TiCheck out;
  for (long k = 0; k < samples; ++k) {
    double t = tau * static_cast<double>(k) / static_cast<double>(samples);
    ComplexMatrix ui = h_in.evolution(t), uo = h_out.evolution(t);
    ComplexMatrix left = tensor(uo, ComplexMatrix(uo.conjugate())) * s;
    ComplexMatrix right = s * tensor(ui, ComplexMatrix(ui.conjugate()));
    out.residual = std::max(out.residual, max_abs(left - right));
  }
  out.ok = out.residual < tol.tol_ti;
  return out;
}

MeasureSpec MeasureSpec::parse(const std::string& name, double alpha) {
  MeasureSpec s;
  s.alpha = alpha;
  if (name == "F") {
    s.id = MeasureId::kF;
  } else if (name == "P") {
    s.id = MeasureId::kP;
  } else if (name == "W") {
    s.id = MeasureId::kW;
  } else if (name == "cost") {
    s.id = MeasureId::kCost;
  } else if (name.rfind("renyi", 0) == 0) {
    s.id = MeasureId::kRenyi;
    if (name.size() > 6 && name[5] == ':') s.alpha = std::stod(name.substr(6));
    if (!(s.alpha > 1.0 && s.alpha <= 2.0)) {
      throw CoherenceError(ErrorCode::kAlphaOutOfRange, "alpha must lie in (1, 2]");
    }
  } else {
    throw CoherenceError(ErrorCode::kUsageError, "unknown measure " + name);
  }
  return s;
}

std::string MeasureSpec::name() const {
  switch (id) {
    case MeasureId::kF: return "F";
    case MeasureId::kP: return "P";
    case MeasureId::kW: return "W";
    case MeasureId::kCost: return "cost";
    case MeasureId::kRenyi: {
      std::string a = std::to_string(alpha);
      a.erase(a.find_last_not_of('0') + 1);
      if (!a.empty() && a.back() == '.') a.pop_back();
      return "renyi:" + a;
    }
  }
  return "?";
}

namespace {

MeasureValue evaluate(const MeasureSpec& spec, const DensityMatrix& rho,
                      const HermitianObservable& h, double tau,
                      const Tolerances& tol) {
  switch (spec.id) {
    case MeasureId::kF: return qfi(rho, h, tol);
    case MeasureId::kP: return purity_of_coherence(rho, h, tol);
    case MeasureId::kW: return MeasureValue::finite(skew_information(rho, h, tol));
    case MeasureId::kRenyi: return renyi_purity_monotone(rho, h, spec.alpha, tol);
    case MeasureId::kCost: return MeasureValue::finite(coherence_cost(rho, h, tau, tol));
  }
  return {};
}

}  // namespace

MonotonicityReport monotonicity_suite(const MeasureSpec& measure, int trials,
                                      std::uint64_t seed, const Tolerances& tol) {
  if (trials < 1) throw CoherenceError(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const double tau = 2.0 * std::numbers::pi;
  MonotonicityReport rep;
  rep.measure = measure.name();
  rep.trials = trials;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    Rng rng = rng_for(seed, static_cast<std::uint64_t>(t));
    int d_in = uniform_int(2, 4, rng), d_out = uniform_int(2, 4, rng);
    HermitianObservable h_in = random_level_hamiltonian(d_in, 3, rng);
    HermitianObservable h_out = random_level_hamiltonian(d_out, 3, rng);
    int rank = uniform_int(0, 4, rng) == 0 ? uniform_int(1, d_in, rng) : d_in;
    DensityMatrix rho = random_density(d_in, rank, rng);
    int min_rank = (d_in + d_out - 1) / d_out;
    int k = uniform_int(min_rank, std::max(min_rank, 4), rng);
    KrausChannel raw = random_channel(d_in, d_out, k, rng());
    TIChannel ch = twirl(raw, h_in, h_out, tau, tol);

    MeasureValue before = evaluate(measure, rho, h_in, tau, tol);
    if (before.infinite) {
      ++rep.infinite_inputs;
      continue;
    }
    MeasureValue after = evaluate(measure, apply(ch, rho), h_out, tau, tol);
    double v = after.infinite ? std::numeric_limits<double>::infinity()
                              : (after.value - before.value) / std::max(1.0, before.value);
    if (v > rep.max_violation) {
      rep.max_violation = v;
      rep.worst_trial = t;
      rep.worst_before = before.value;
      rep.worst_after = after.infinite ? std::numeric_limits<double>::infinity()
                                       : after.value;
    }
  }
  if (rep.worst_trial < 0) rep.max_violation = 0.0;
  rep.passed = rep.max_violation < 1e-8;
  return rep;
}

}  // namespace coherence
