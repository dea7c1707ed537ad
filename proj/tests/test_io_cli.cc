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
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "coherence/cli.h"
#include "coherence/errors.h"
#include "coherence/io.h"
#include "coherence/random.h"
#include "test_util.h"

namespace coherence {
namespace {

std::string fx(const std::string& name) { return std::string(COHERENCE_FIXTURE_DIR) + "/" + name; }

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorCode load_code(const std::string& name) {
  try {
    load_state(fx(name));
  } catch (const CoherenceError& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

TEST(Io, LoadsFixtures) {
  State cbit = load_state(fx("cbit.json"));
  ASSERT_TRUE(std::holds_alternative<PureState>(cbit));
  EXPECT_EQ(std::get<PureState>(cbit).dim(), 2);
  State noisy = load_state(fx("noisy_cbit_0.6.json"));
  ASSERT_TRUE(std::holds_alternative<DensityMatrix>(noisy));
  EXPECT_LT(max_abs(as_density(noisy).matrix() - testing::noisy_plus(0.6).matrix()), 1e-15);

  LoadedHamiltonian h = load_hamiltonian(fx("ladder4.json"), testing::kTau);
  EXPECT_TRUE(h.from_levels);
  EXPECT_LT(max_abs(h.h.matrix() - testing::ladder(4).matrix()), 1e-15);
  // tau = 1: levels scale by 2 pi
  LoadedHamiltonian h1 = load_hamiltonian(fx("ladder3.json"), 1.0);
  EXPECT_NEAR(h1.h.eigenvalues()[2], 4 * std::numbers::pi, 1e-12);
  LoadedHamiltonian rot = load_hamiltonian(fx("rotated_levels.json"), testing::kTau);
  EXPECT_NEAR(rot.h.matrix()(0, 1).real(), -0.5, 1e-12);
}

TEST(Io, RejectsBadInput) {
  EXPECT_EQ(load_code("bad_trace.json"), ErrorCode::kValidationError);
  EXPECT_EQ(load_code("non_hermitian.json"), ErrorCode::kValidationError);
  EXPECT_EQ(load_code("malformed.json"), ErrorCode::kSchemaError);
  EXPECT_EQ(load_code("wrong_schema.json"), ErrorCode::kSchemaError);
  EXPECT_EQ(load_code("does_not_exist.json"), ErrorCode::kSchemaError);
  EXPECT_THROW(hamiltonian_from_json(Json{{"levels_in_2pi_over_tau", {0, 1.5}}}, 1.0), CoherenceError);
  EXPECT_THROW(state_from_json(Json{{"re", {1.0, 0.5}}}), CoherenceError);
}

TEST(Io, RoundTrip) {
  for (int t = 0; t < 100; ++t) {
    Rng rng = rng_for(120, t);
    int d = uniform_int(1, 6, rng);
    State s = t % 2 ? State(random_pure(d, rng)) : State(random_density(d, uniform_int(1, d, rng), rng));
    // Through text, as a file would carry it.
    Json j = Json::parse(state_to_json(s).dump());
    State back = state_from_json(j);
    ASSERT_EQ(back.index(), s.index());
    ASSERT_LT(max_abs(as_density(back).matrix() - as_density(s).matrix()), 1e-12);
  }
}

TEST(Io, SnapLevels) {
  HermitianObservable near = HermitianObservable::diagonal({0.0, 1.0 + 1e-11, 3.0 - 2e-11});
  bool moved = false;
  HermitianObservable snapped = snap_levels(near, testing::kTau, &moved);
  EXPECT_TRUE(moved);
  EXPECT_EQ(snapped.eigenvalues()[1] - snapped.eigenvalues()[0], 1.0);
  EXPECT_NEAR(snapped.eigenvalues()[2], 3.0, 1e-15);
  snap_levels(testing::ladder(3), testing::kTau, &moved);
  EXPECT_FALSE(moved);
}

TEST(Cli, MeasuresOnNoisyCbit) {
  CliRun r = cli({"measures", "--state", fx("noisy_cbit_0.6.json"), "--ham", fx("cbit_h.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j["F"].get<double>(), 0.36, 1e-12);
  EXPECT_NEAR(j["P"].get<double>(), 0.5625, 1e-12);
  EXPECT_TRUE(j["variance_if_pure"].is_null());
  EXPECT_TRUE(j["support_commutes"].get<bool>());
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, MeasuresOnPureCbitAndRenyi) {
  CliRun r = cli({"measures", "--state", fx("cbit.json"), "--ham", fx("cbit_h.json"), "--alpha", "1.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j["F"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["P"], "inf");
  EXPECT_EQ(j["renyi"], "inf");
  EXPECT_NEAR(j["variance_if_pure"].get<double>(), 0.25, 1e-12);
  EXPECT_NEAR(j["W"].get<double>(), 0.25, 1e-12);
}

TEST(Cli, DenseHamiltonianWarns) {
  CliRun r = cli({"measures", "--state", fx("cbit.json"), "--ham", fx("cbit_h_dense.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, InputErrorsExitOne) {
  CliRun mal = cli({"measures", "--state", fx("malformed.json"), "--ham", fx("cbit_h.json")});
  EXPECT_EQ(mal.code, 1);
  EXPECT_NE(mal.err.find("SchemaError"), std::string::npos);
  EXPECT_NE(mal.err.find("parse"), std::string::npos);
  EXPECT_EQ(cli({"measures", "--state", fx("bad_trace.json"), "--ham", fx("cbit_h.json")}).code, 1);
  EXPECT_EQ(cli({"measures", "--state", fx("cbit.json"), "--ham", fx("ladder3.json")}).code, 1);
  EXPECT_EQ(cli({"nonsense"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"measures", "--state", fx("cbit.json")}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Purify) {
  CliRun r = cli({"purify", "--state", fx("noisy_cbit_0.6.json"), "--ham", fx("cbit_h.json"), "--ensemble"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j["total_variance"].get<double>(), 0.09, 1e-12);
  EXPECT_NEAR(j["qfi_over_4"].get<double>(), 0.09, 1e-12);
  EXPECT_LT(j["kkt_residual"].get<double>(), 1e-10);
  EXPECT_NEAR(j["ensemble_average_variance"].get<double>(), 0.09, 1e-12);
  EXPECT_EQ(matrix_from_json(j["aux_hamiltonian"]).rows(), 2);
}

TEST(Cli, Dist) {
  CliRun r = cli({"dist", "--state", fx("gamma_023.json"), "--ham", fx("ladder4.json"), "--tau", "6.283185307179586",
               "--copies", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  ASSERT_EQ(line.rfind("# summary ", 0), 0u);
  Json s = Json::parse(line.substr(10));
  EXPECT_NEAR(s["period"].get<double>(), testing::kTau, 1e-15);
  EXPECT_EQ(s["L"].get<int>(), 1);
  std::getline(in, line);
  EXPECT_EQ(line, "n,p");
  std::map<long, double> rows;
  while (std::getline(in, line)) {
    auto c = line.find(',');
    rows[std::stol(line.substr(0, c))] = std::stod(line.substr(c + 1));
  }
  EXPECT_NEAR(rows[5], 2.0 / 9, 1e-15);
  EXPECT_EQ(rows[1], 0.0);

  CliRun even = cli({"dist", "--state", fx("eta_02.json"), "--ham", fx("ladder3.json"), "--tau", "6.283185307179586"});
  ASSERT_EQ(even.code, 0) << even.err;
  Json se = Json::parse(even.out.substr(10, even.out.find('\n') - 10));
  EXPECT_NEAR(se["period"].get<double>(), testing::kTau / 2, 1e-15);
  EXPECT_TRUE(se["L"].is_null());
  EXPECT_EQ(se["L_error"], "GcdNotOne");
}

TEST(Cli, Convert) {
  CliRun r = cli({"convert", "--in", fx("cbit.json"), fx("cbit_h.json"), "--out", fx("cbit.json"), fx("cbit_h.json"),
               "--rate", "1", "--copies", "4,16"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "m,k,tv_error,fidelity_floor");
  EXPECT_NE(r.out.find("\n4,0,0,1\n"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"convert", "--in", fx("cbit.json"), fx("cbit_h.json"), "--out", fx("cbit.json"),
                 fx("cbit_h.json"), "--rate", "1", "--copies", "4,x"})
                .code,
            1);
}

TEST(Cli, Distill) {
  CliRun r = cli({"distill", "--in", fx("noisy_cbit_0.6.json"), fx("cbit_h.json"), "--target", fx("cbit.json"),
               fx("cbit_h.json"), "--copies", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_NEAR(j["fidelity"].get<double>(), 0.8, 1e-7);
  EXPECT_LT(std::abs(j["gap"].get<double>()), 1e-7);
  // Noisy c-bit input: the generic bound reduces to the qubit formulas.
  EXPECT_NEAR(j["bound_exact"].get<double>(), (1 - std::sqrt(0.72 / 1.36)) / 2, 1e-12);
  EXPECT_NEAR(j["bound_asymptotic"].get<double>(), 0.64 / (4 * 0.36 * 2), 1e-12);
}

TEST(Cli, QubitBound) {
  CliRun r = cli({"qubit-bound", "--lambda", "0.6", "--n", "10"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,exact_bound,asymptotic,cirac,ratio");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    if (rows == 10) {
      EXPECT_EQ(line.substr(0, 3), "10,");
      double ratio = std::stod(line.substr(line.rfind(',') + 1));
      EXPECT_NEAR(ratio, 1.25, 1e-12);
    }
  }
  EXPECT_EQ(rows, 10);
}

TEST(Cli, ProptestSeedPrecedenceAndDeterminism) {
  CliRun a = cli({"proptest", "--suite", "monotonicity", "--measure", "F", "--trials", "20", "--seed", "11"});
  CliRun b = cli({"proptest", "--suite", "monotonicity", "--measure", "F", "--trials", "20", "--seed", "11"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["seed"].get<int>(), 11);

  CliRun d = cli({"proptest", "--measure", "W", "--trials", "5"});
  EXPECT_EQ(Json::parse(d.out)["seed"].get<int>(), 7);
  setenv("COHERENCE_FORGE_SEED", "99", 1);
  CliRun e = cli({"proptest", "--measure", "W", "--trials", "5"});
  CliRun f = cli({"proptest", "--measure", "W", "--trials", "5", "--seed", "3"});
  unsetenv("COHERENCE_FORGE_SEED");
  EXPECT_EQ(Json::parse(e.out)["seed"].get<int>(), 99);
  EXPECT_EQ(Json::parse(f.out)["seed"].get<int>(), 3);

  CliRun r = cli({"proptest", "--measure", "renyi:1.5", "--trials", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["measure"], "renyi:1.5");
  EXPECT_EQ(cli({"proptest", "--measure", "bogus"}).code, 1);
}

}  // namespace
}  // namespace coherence
