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

#include "coherence/sdp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coherence/errors.h"

namespace coherence {

namespace {

using Blocks = std::vector<ComplexMatrix>;

// Re Tr(P Q) without forming the product.
double re_trace_product(const ComplexMatrix& p, const ComplexMatrix& q) {
  return (p.array() * q.transpose().array()).sum().real();
}

Blocks slack(const BlockLmi& lmi, const RealVector& y) {
  Blocks s;
  for (size_t k = 0; k < lmi.sizes.size(); ++k) {
    ComplexMatrix m = -lmi.c[k];
    for (int i = 0; i < lmi.num_vars(); ++i)
      if (y[i] != 0.0) m += y[i] * lmi.a[i][k];
    s.push_back(hermitian_part(m));
  }
  return s;
}

Blocks combine(const BlockLmi& lmi, const RealVector& dy) {
  Blocks out;
  for (size_t k = 0; k < lmi.sizes.size(); ++k) {
    ComplexMatrix m = ComplexMatrix::Zero(lmi.sizes[k], lmi.sizes[k]);
    for (int i = 0; i < lmi.num_vars(); ++i)
      if (dy[i] != 0.0) m += dy[i] * lmi.a[i][k];
    out.push_back(m);
  }
  return out;
}

double trace_inner(const Blocks& x, const Blocks& s) {
  double t = 0.0;
  for (size_t k = 0; k < x.size(); ++k) t += re_trace_product(x[k], s[k]);
  return t;
}

double blocks_step(const Blocks& z, const Blocks& dz, double fraction) {
  double t = 1.0;
  for (size_t k = 0; k < z.size(); ++k) t = std::min(t, max_psd_step(z[k], dz[k], fraction));
  return t;
}

}  // namespace

double max_psd_step(const ComplexMatrix& z, const ComplexMatrix& dz,
                    double fraction) {
  Eigen::LLT<ComplexMatrix> llt(z);
  double lam_min;
  if (llt.info() == Eigen::Success) {
    ComplexMatrix li = llt.matrixL().solve(dz);
    ComplexMatrix w = llt.matrixL().solve(ComplexMatrix(li.adjoint()));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(w),
                                                    Eigen::EigenvaluesOnly);
    lam_min = es.eigenvalues()[0];
  } else {
    return 0.0;
  }
  if (lam_min >= 0.0) return 1.0;
  return std::min(1.0, fraction * (-1.0 / lam_min));
}

SdpSolution solve_block_lmi(const BlockLmi& lmi, const RealVector& y0,
                            const Blocks& x0, const SdpOptions& opts) {
  const int m = lmi.num_vars();
  const size_t nb = lmi.sizes.size();
  int n_total = 0;
  for (int s : lmi.sizes) n_total += s;

  SdpSolution sol;
  sol.y = y0;
  sol.x = x0;
  sol.s = slack(lmi, sol.y);

  for (int it = 0; it < opts.max_iter; ++it) {
    sol.iterations = it;
    double mu = trace_inner(sol.x, sol.s) / n_total;
    RealVector rp(m);
    for (int i = 0; i < m; ++i) {
      double t = 0.0;
      for (size_t k = 0; k < nb; ++k) t += re_trace_product(lmi.a[i][k], sol.x[k]);
      rp[i] = lmi.b[i] - t;
    }
    sol.complementarity = mu * n_total;
    sol.primal_residual = rp.size() ? rp.cwiseAbs().maxCoeff() : 0.0;
    if (sol.complementarity < opts.target_gap && sol.primal_residual < 1e-12) {
      sol.converged = true;
      break;
    }

    Blocks s_inv(nb);
    for (size_t k = 0; k < nb; ++k) {
      s_inv[k] = sol.s[k].llt().solve(ComplexMatrix::Identity(lmi.sizes[k], lmi.sizes[k]));
    }
    // Schur complement M_ij = Re Tr(A_i X A_j S^-1).
    std::vector<Blocks> g(m, Blocks(nb));
    for (int j = 0; j < m; ++j)
      for (size_t k = 0; k < nb; ++k) g[j][k] = sol.x[k] * lmi.a[j][k] * s_inv[k];
    Eigen::MatrixXd schur(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        double t = 0.0;
        for (size_t k = 0; k < nb; ++k) t += re_trace_product(lmi.a[i][k], g[j][k]);
        schur(i, j) = schur(j, i) = t;
      }
    }
    Eigen::LDLT<Eigen::MatrixXd> factor(schur);
    RealVector tr_a_sinv(m);
    for (int i = 0; i < m; ++i) {
      double t = 0.0;
      for (size_t k = 0; k < nb; ++k) t += re_trace_product(lmi.a[i][k], s_inv[k]);
      tr_a_sinv[i] = t;
    }

    auto direction = [&](double sigma_mu, const Blocks* corr, RealVector& dy,
                         Blocks& ds, Blocks& dx) {
      RealVector rhs = sigma_mu * tr_a_sinv - lmi.b;
      if (corr) {
        for (int i = 0; i < m; ++i) {
          double t = 0.0;
          for (size_t k = 0; k < nb; ++k) t += re_trace_product(lmi.a[i][k], (*corr)[k]);
          rhs[i] -= t;
        }
      }
      dy = factor.solve(rhs);
      ds = combine(lmi, dy);
      dx.assign(nb, ComplexMatrix());
      for (size_t k = 0; k < nb; ++k) {
        ComplexMatrix d = sigma_mu * s_inv[k] - sol.x[k] - sol.x[k] * ds[k] * s_inv[k];
        if (corr) d -= (*corr)[k];
        dx[k] = hermitian_part(d);
      }
    };

    RealVector dy_a;
    Blocks ds_a, dx_a;
    direction(0.0, nullptr, dy_a, ds_a, dx_a);
    double ap = blocks_step(sol.x, dx_a, 1.0);
    double ad = blocks_step(sol.s, ds_a, 1.0);
    Blocks xa(nb), sa(nb);
    for (size_t k = 0; k < nb; ++k) {
      xa[k] = sol.x[k] + ap * dx_a[k];
      sa[k] = sol.s[k] + ad * ds_a[k];
    }
    double mu_aff = trace_inner(xa, sa) / n_total;
    double sigma = std::pow(std::max(0.0, mu_aff) / mu, 3.0);
    sigma = std::min(1.0, sigma);

    Blocks corr(nb);
    for (size_t k = 0; k < nb; ++k) corr[k] = dx_a[k] * ds_a[k] * s_inv[k];
    RealVector dy;
    Blocks ds, dx;
    direction(sigma * mu, &corr, dy, ds, dx);
    double step_p = blocks_step(sol.x, dx, 0.95);
    double step_d = blocks_step(sol.s, ds, 0.95);
    if (step_p <= 0.0 && step_d <= 0.0) break;
    for (size_t k = 0; k < nb; ++k) sol.x[k] = hermitian_part(sol.x[k] + step_p * dx[k]);
    sol.y += step_d * dy;
    sol.s = slack(lmi, sol.y);
    sol.iterations = it + 1;
  }
  sol.primal_value = lmi.b.dot(sol.y);
  double dual = 0.0;
  for (size_t k = 0; k < nb; ++k) dual += re_trace_product(lmi.c[k], sol.x[k]);
  sol.dual_value = dual;
  sol.complementarity = trace_inner(sol.x, sol.s);
  return sol;
}

}  // namespace coherence
