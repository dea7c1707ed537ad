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

#include "coherence/cli.h"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "coherence/acceptance.h"
#include "coherence/channels.h"
#include "coherence/clock.h"
#include "coherence/conversion.h"
#include "coherence/distillation.h"
#include "coherence/errors.h"
#include "coherence/io.h"
#include "coherence/measures.h"
#include "coherence/purification.h"

namespace coherence {

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

Json number_or_inf(const MeasureValue& v) {
  if (v.infinite) return "inf";
  return v.value;
}

Json number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("COHERENCE_FORGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CoherenceError(ErrorCode::kUsageError, "COHERENCE_FORGE_SEED is not an integer");
    }
  }
  return kDefaultSeed;
}

HermitianObservable ham(const std::string& path, double tau, std::ostream& err) {
  LoadedHamiltonian lh = load_hamiltonian(path, tau);
  if (lh.from_levels) return lh.h;
  bool moved = false;
  HermitianObservable h = snap_levels(lh.h, tau, &moved);
  err << "warning: " << path << " is a dense Hamiltonian; levels "
      << (moved ? "were snapped" : "checked") << " against the 2pi/tau grid\n";
  return h;
}

std::vector<int> parse_copies(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CoherenceError(ErrorCode::kUsageError, "bad copy count '" + item + "'");
    }
  }
  if (out.empty()) throw CoherenceError(ErrorCode::kUsageError, "no copy counts given");
  return out;
}

std::ostream& full(std::ostream& os) {
  os.precision(17);
  return os;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence and asymmetry resource-theory toolkit", "coherence_forge"};
  app.require_subcommand(1);
  const double two_pi = 2.0 * std::numbers::pi;

  std::string state, hamf, state2, ham2;
  std::vector<std::string> in_pair, out_pair, target_pair;
  double tau = two_pi, alpha = 0.0, rate = 0.0, lambda = 0.0;
  int copies = 1, n_max = 10, trials = 1000;
  std::string copies_list = "16,64,256", suite = "monotonicity", measure = "F";
  bool with_ensemble = false;
  std::uint64_t seed = kDefaultSeed;

  auto* measures = app.add_subcommand("measures", "F, P, W of a state");
  measures->add_option("--state", state, "state JSON")->required();
  measures->add_option("--ham", hamf, "Hamiltonian JSON")->required();
  measures->add_option("--tau", tau, "period used for level lists");
  auto* alpha_opt = measures->add_option("--alpha", alpha, "Renyi order in (1, 2]");

  auto* purify = app.add_subcommand("purify", "optimal purification");
  purify->add_option("--state", state)->required();
  purify->add_option("--ham", hamf)->required();
  purify->add_option("--tau", tau);
  purify->add_flag("--ensemble", with_ensemble, "also print the optimal ensemble");

  auto* dist = app.add_subcommand("dist", "energy distribution of m copies");
  dist->add_option("--state", state)->required();
  dist->add_option("--ham", hamf)->required();
  dist->add_option("--tau", tau)->required();
  dist->add_option("--copies", copies)->check(CLI::PositiveNumber);

  auto* convert = app.add_subcommand("convert", "iid conversion sweep");
  convert->add_option("--in", in_pair, "state.json ham.json")->expected(2)->required();
  convert->add_option("--out", out_pair, "state.json ham.json")->expected(2)->required();
  convert->add_option("--rate", rate)->required();
  convert->add_option("--copies", copies_list, "comma separated m values");
  convert->add_option("--tau", tau);

  auto* distill = app.add_subcommand("distill", "single-shot distillation fidelity");
  distill->add_option("--in", in_pair, "state.json ham.json")->expected(2)->required();
  distill->add_option("--target", target_pair, "state.json ham.json")->expected(2)->required();
  distill->add_option("--copies", copies)->check(CLI::PositiveNumber);
  distill->add_option("--tau", tau);

  auto* qbound = app.add_subcommand("qubit-bound", "qubit distillation bounds, CSV over n");
  qbound->add_option("--lambda", lambda)->required();
  qbound->add_option("--n", n_max, "largest n")->check(CLI::PositiveNumber);

  auto* proptest = app.add_subcommand("proptest", "randomized property suites");
  proptest->add_option("--suite", suite)->check(CLI::IsMember({"monotonicity"}));
  proptest->add_option("--measure", measure, "F, P, W, cost, renyi or renyi:a");
  proptest->add_option("--alpha", alpha);
  proptest->add_option("--trials", trials)->check(CLI::PositiveNumber);
  auto* seed_opt = proptest->add_option("--seed", seed);

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");
  auto* accept_seed = accept->add_option("--seed", seed);

  std::vector<const char*> argv{"coherence_forge"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*measures) {
      DensityMatrix rho = as_density(load_state(state));
      HermitianObservable h = ham(hamf, tau, err);
      Json j;
      j["F"] = qfi(rho, h).value;
      j["P"] = number_or_inf(purity_of_coherence(rho, h));
      j["W"] = skew_information(rho, h);
      if (rho.support_rank() == 1) {
        j["variance_if_pure"] = energy_variance(PureState::normalized(rho.eigenbasis().col(0)), h);
      } else {
        j["variance_if_pure"] = nullptr;
      }
      j["support_commutes"] = support_commutes(rho, h);
      if (alpha_opt->count() > 0) {
        j["renyi"] = number_or_inf(renyi_purity_monotone(rho, h, alpha));
        j["alpha"] = alpha;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*purify) {
      DensityMatrix rho = as_density(load_state(state));
      HermitianObservable h = ham(hamf, tau, err);
      Purification p = build_optimal_purification(rho, h);
      Json j;
      j["aux_hamiltonian"] = matrix_to_json(p.aux_hamiltonian.matrix());
      j["total_variance"] = p.total_variance;
      j["qfi_over_4"] = qfi(rho, h).value / 4.0;
      j["kkt_residual"] = p.kkt_residual;
      if (with_ensemble) {
        PureEnsemble e = optimal_ensemble(rho, h);
        Json list = Json::array();
        for (size_t k = 0; k < e.states.size(); ++k) {
          list.push_back({{"weight", e.weights[k]},
                          {"state", vector_to_json(e.states[k].amplitudes())},
                          {"variance", energy_variance(e.states[k], h)}});
        }
        j["ensemble"] = list;
        j["ensemble_average_variance"] = e.average_variance;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*dist) {
      PureState psi = as_pure(load_state(state));
      HermitianObservable h = ham(hamf, tau, err);
      PeriodicClockState clk = extract_distribution(psi, h, tau);
      IntegerDistribution pm = convolve_n(clk.distribution, copies);
      Json summary;
      summary["period"] = period(psi, h, tau);
      try {
        summary["L"] = overlap_copy_count(clk.distribution);
      } catch (const CoherenceError& e) {
        summary["L"] = nullptr;
        summary["L_error"] = std::string(error_name(e.code()));
      }
      TranslatedPoisson tp = translated_poisson(copies * clk.distribution.mean(),
                                                copies * clk.distribution.variance());
      summary["tv_to_tp"] = tv_distance(pm, tp.distribution);
      try {
        summary["barbour_bound"] = number_or_inf(barbour_bound(clk.distribution, copies));
      } catch (const CoherenceError& e) {
        summary["barbour_bound"] = nullptr;
        summary["barbour_error"] = std::string(error_name(e.code()));
      }
      out << "# summary " << summary.dump() << "\n";
      out << "n,p\n";
      full(out);
      for (long n = pm.lo(); n <= pm.hi(); ++n) out << n << "," << pm.at(n) << "\n";
      return 0;
    }
    if (*convert) {
      PureState a = as_pure(load_state(in_pair[0]));
      HermitianObservable ha = ham(in_pair[1], tau, err);
      PureState b = as_pure(load_state(out_pair[0]));
      HermitianObservable hb = ham(out_pair[1], tau, err);
      auto plans = iid_sweep(a, ha, b, hb, tau, rate, parse_copies(copies_list));
      out << "m,k,tv_error,fidelity_floor\n";
      full(out);
      for (const ConversionPlan& p : plans) {
        out << p.input_copies << "," << p.shift_k << "," << p.tv_error << ","
            << p.fidelity_lower_bound << "\n";
      }
      return 0;
    }
    if (*distill) {
      DensityMatrix rho = as_density(load_state(in_pair[0]));
      HermitianObservable h = ham(in_pair[1], tau, err);
      PureState t = as_pure(load_state(target_pair[0]));
      HermitianObservable ht = ham(target_pair[1], tau, err);
      SdpResult r = conditional_min_entropy(
          omega_state(tensor_power(rho, copies), copies_hamiltonian(h, copies), t, ht));
      Json j;
      j["fidelity"] = r.optimum;
      j["hmin"] = r.hmin;
      j["gap"] = r.primal_dual_gap;
      // Purity-of-coherence converse for a qubit target: the output
      // lambda~ obeys lambda~^2/(1 - lambda~^2) <= x = n P(rho) / (4 V(target)).
      MeasureValue p = purity_of_coherence(rho, h);
      double v = energy_variance(t, ht);
      if (t.dim() == 2 && v > 0) {
        if (p.infinite) {
          j["bound_exact"] = 0.0;
          j["bound_asymptotic"] = 0.0;
        } else {
          double x = copies * p.value / (4.0 * v);
          j["bound_exact"] = 0.5 * (1.0 - std::sqrt(x / (1.0 + x)));
          j["bound_asymptotic"] = number_or_inf(x > 0 ? 1.0 / (4.0 * x)
                                                      : std::numeric_limits<double>::infinity());
        }
      } else {
        j["bound_exact"] = nullptr;
        j["bound_asymptotic"] = nullptr;
      }
      out << j.dump(2) << "\n";
      return 0;
    }
    if (*qbound) {
      out << "n,exact_bound,asymptotic,cirac,ratio\n";
      full(out);
      for (int n = 1; n <= n_max; ++n) {
        QubitBound b = qubit_infidelity_bound(lambda, n);
        double c = cirac_comparison(lambda, n);
        out << n << "," << b.exact << "," << b.asymptotic << "," << c << ","
            << (b.asymptotic > 0 ? c / b.asymptotic : 1.0) << "\n";
      }
      return 0;
    }
    if (*proptest) {
      std::uint64_t s = resolve_seed(seed_opt, seed);
      MeasureSpec spec = MeasureSpec::parse(measure, alpha > 0 ? alpha : 2.0);
      MonotonicityReport r = monotonicity_suite(spec, trials, s);
      Json j{{"suite", suite},
             {"measure", r.measure},
             {"trials", r.trials},
             {"seed", s},
             {"max_violation", r.max_violation},
             {"worst_trial", r.worst_trial},
             {"worst_before", r.worst_before},
             {"worst_after", number_or_inf(r.worst_after)},
             {"infinite_inputs", r.infinite_inputs},
             {"tolerance", 1e-8},
             {"passed", r.passed}};
      out << j.dump(2) << "\n";
      return r.passed ? 0 : 2;
    }
    if (*accept) {
      std::uint64_t s = resolve_seed(accept_seed, seed);
      bool ok = print_acceptance(run_acceptance_suite(s), out);
      return ok ? 0 : 2;
    }
  } catch (const CoherenceError& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace coherence
