// Copyright 2026 The qindis authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qindis/cli.hpp"
#include "qindis/scenarios.hpp"
#include "test_helpers.hpp"

using namespace qindis;
using namespace qindis::testing;

namespace {

struct RunResult {
  int exit_code = 0;
  std::string out;
  Json payload;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.exit_code = dispatch(args, out, err);
  r.out = out.str();
  if (!r.out.empty() && r.out.front() == '{') {
    r.payload = Json::parse(r.out);
  }
  return r;
}

class TempDir {
 public:
  TempDir() {
    dir_ = std::filesystem::temp_directory_path() /
           ("qindis_cli_" + std::to_string(std::rand()));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const Json& content) const {
    const auto path = dir_ / name;
    std::ofstream f(path);
    f << content.dump(2);
    return path.string();
  }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST_CASE("bell stats command reproduces the closed form") {
  const auto r = run_cli(
      {"bell", "stats", "--gamma-a", "0.0", "--gamma-b",
       "0.5235987755982988"});
  REQUIRE(r.exit_code == 0);
  const auto probs = r.payload["probabilities"];
  CHECK(probs[0].get<double>() == doctest::Approx(0.375));
  CHECK(probs[1].get<double>() == doctest::Approx(0.125));
  CHECK(probs[2].get<double>() == doctest::Approx(0.125));
  CHECK(probs[3].get<double>() == doctest::Approx(0.375));
}

TEST_CASE("degree conversion") {
  const auto r = run_cli({"--degrees", "bell", "stats", "--gamma-a", "30",
                          "--gamma-b", "0"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["probabilities"][0].get<double>() ==
        doctest::Approx(0.375));
}

TEST_CASE("indisc check round trip through files") {
  TempDir tmp;
  const PVM p3 = pvm_from_hermitian(pauli(3));
  const std::string pvm_path = tmp.write("pvm.json", pvm_to_json(p3));
  const std::string a_path =
      tmp.write("a.json", pure_state_to_json(qubit(1.1, 0.3)));
  const std::string b_path =
      tmp.write("b.json", pure_state_to_json(qubit(1.1, 2.2)));
  const auto r = run_cli({"indisc", "check", "--pvm", pvm_path, "--state-a",
                          a_path, "--state-b", b_path});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["indiscernible"].get<bool>());
  CHECK(r.payload["max_deviation"].get<double>() < 1e-9);

  const std::string c_path =
      tmp.write("c.json", pure_state_to_json(qubit(2.0, 0.0)));
  const auto r2 = run_cli({"indisc", "check", "--pvm", pvm_path, "--state-a",
                           a_path, "--state-b", c_path});
  REQUIRE(r2.exit_code == 0);
  CHECK_FALSE(r2.payload["indiscernible"].get<bool>());
}

TEST_CASE("indisc witness through files") {
  TempDir tmp;
  const std::string gens = tmp.write(
      "gens.json",
      Json::array({matrix_to_json(diag({1, 0})), matrix_to_json(diag({0, 1}))}));
  const double s = 1.0 / std::sqrt(2.0);
  CVector plus(2), minus(2);
  plus << Complex(s, 0), Complex(s, 0);
  minus << Complex(s, 0), Complex(-s, 0);
  const std::string a =
      tmp.write("a.json", pure_state_to_json(PureState(plus)));
  const std::string b =
      tmp.write("b.json", pure_state_to_json(PureState(minus)));
  const auto r = run_cli({"indisc", "witness", "--generators", gens,
                          "--state-a", a, "--state-b", b});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["mapping_error"].get<double>() < 1e-10);
  CHECK(r.payload["residual_commutation"].get<double>() < 1e-10);
  const Matrix u = matrix_from_json(r.payload["matrix"]);
  CHECK(matrix_dist(u, diag({1, -1})) < 1e-10);
}

TEST_CASE("algebra subcommands") {
  TempDir tmp;
  const std::string gens = tmp.write(
      "gens.json", Json::array({matrix_to_json(diag({1, 0, 0}))}));
  const auto atoms = run_cli({"algebra", "atoms", "--generators", gens});
  REQUIRE(atoms.exit_code == 0);
  CHECK(atoms.payload["atom_count"].get<int>() == 2);

  const auto commutant =
      run_cli({"algebra", "commutant", "--generators", gens});
  REQUIRE(commutant.exit_code == 0);
  CHECK(commutant.payload["size"].get<int>() == 5);  // 1^2 + 2^2

  const std::string projs = tmp.write(
      "projs.json", Json::array({matrix_to_json(diag({1, 1, 0})),
                                 matrix_to_json(diag({1, 0, 1}))}));
  const auto gen = run_cli({"algebra", "generator", "--projections", projs});
  REQUIRE(gen.exit_code == 0);
  const Matrix a = matrix_from_json(gen.payload["matrix"]);
  CHECK(matrix_dist(a, diag({4.0 / 3.0, 1.0, 1.0 / 3.0})) < 1e-12);

  const std::string a_path = tmp.write("a.json", gen.payload["matrix"]);
  const auto rec = run_cli({"algebra", "recover", "--matrix", a_path,
                            "--index", "1", "--count", "2"});
  REQUIRE(rec.exit_code == 0);
  CHECK(matrix_dist(matrix_from_json(rec.payload["projection"]),
                    diag({1, 0, 1})) < 1e-10);
}

TEST_CASE("holevo subcommands") {
  TempDir tmp;
  const std::string gens =
      tmp.write("gens.json", Json::array({matrix_to_json(diag({1, 0}))}));
  const std::string state =
      tmp.write("state.json", pure_state_to_json(qubit(M_PI / 2, 0.4)));
  const auto density = run_cli(
      {"holevo", "density", "--generators", gens, "--state", state});
  REQUIRE(density.exit_code == 0);
  CHECK(density.payload["probabilities"][0].get<double>() ==
        doctest::Approx(0.5));

  const std::string p = tmp.write("p.json", Json{{"probabilities", {0.5, 0.5}}});
  const std::string q = tmp.write("q.json", Json{{"probabilities", {1.0, 0.0}}});
  const auto dist = run_cli({"holevo", "distance", "--p", p, "--q", q});
  REQUIRE(dist.exit_code == 0);
  CHECK(dist.payload["quotient_hs"].get<double>() == doctest::Approx(1.0));
  CHECK(dist.payload["hellinger_sq"].get<double>() ==
        doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
  CHECK(dist.payload["paper_dsq"].get<double>() ==
        doctest::Approx(2.0 - std::sqrt(2.0)));

  const std::string s3 = tmp.write("s3.json", matrix_to_json(pauli(3)));
  const auto lift = run_cli({"holevo", "lift", "--generators", gens,
                             "--matrix", s3, "--p", p});
  REQUIRE(lift.exit_code == 0);
  CHECK(lift.payload["value"][0].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("classical quotient with witness") {
  TempDir tmp;
  const std::string sys = tmp.write(
      "sys.json", Json{{"points", {"1", "2", "3"}},
                       {"observables", {{"odd", "even", "odd"}}}});
  const auto r = run_cli({"classical", "quotient", "--system", sys,
                          "--witness-a", "1", "--witness-b", "3"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["classes"].size() == 2);
  CHECK(r.payload["witness"]["permutation"] == Json::array({2, 1, 0}));
}

TEST_CASE("epr subcommands") {
  TempDir tmp;
  const std::string bell =
      tmp.write("bell.json", pure_state_to_json(bell_state()));
  const auto cls = run_cli({"epr", "class", "--state", bell});
  REQUIRE(cls.exit_code == 0);
  CHECK(cls.payload["theta"][0].get<double>() == doctest::Approx(M_PI / 2));

  const auto stats = run_cli({"epr", "stats", "--theta", "1.5707963267948966",
                              "3.141592653589793", "3.141592653589793"});
  REQUIRE(stats.exit_code == 0);
  CHECK(stats.payload["probabilities"][0].get<double>() ==
        doctest::Approx(0.5));
  CHECK(stats.payload["probabilities"][3].get<double>() ==
        doctest::Approx(0.5));

  const auto mmap = run_cli({"epr", "mmap", "--state", bell});
  REQUIRE(mmap.exit_code == 0);
  CHECK(mmap.payload["m"][0].get<double>() == doctest::Approx(0.0));

  const auto inv =
      run_cli({"epr", "mmap", "--invert", "--m1", "1", "--m2", "1"});
  REQUIRE(inv.exit_code == 0);
  CHECK(inv.payload["state"]["amplitudes"][0][0].get<double>() ==
        doctest::Approx(1.0));

  // Triple projection onto the marginal Holevo space.
  const auto proj = run_cli({"epr", "mmap", "--theta", "0", "0", "0"});
  REQUIRE(proj.exit_code == 0);
  CHECK(proj.payload["m"][0].get<double>() == doctest::Approx(1.0));
  CHECK(proj.payload["m"][1].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("bell theta, invariants, incompat") {
  const auto theta =
      run_cli({"bell", "theta", "--gamma-a", "0", "--gamma-b", "0", "--theta",
               "0.4", "1.3", "2.2"});
  REQUIRE(theta.exit_code == 0);
  CHECK(theta.payload["theta"][0].get<double>() == doctest::Approx(0.4));
  CHECK(theta.payload["theta"][2].get<double>() == doctest::Approx(2.2));

  const auto inv = run_cli({"bell", "invariants"});
  REQUIRE(inv.exit_code == 0);
  CHECK(inv.payload["states"].size() == 4);

  const auto inc = run_cli({"bell", "incompat", "--gamma-a1", "0",
                            "--gamma-b1", "0", "--gamma-a2",
                            "0.7853981633974483", "--gamma-b2", "0"});
  REQUIRE(inc.exit_code == 0);
  CHECK_FALSE(inc.payload["compatible"].get<bool>());
  CHECK(inc.payload["max_commutator_norm"].get<double>() ==
        doctest::Approx(0.5));
}

TEST_CASE("aspect run is byte-identical per seed") {
  const std::vector<std::string> args = {
      "aspect", "run",  "--a1",   "0", "--a2", "0.7853981633974483",
      "--b1",   "0",    "--b2",   "0.7853981633974483",
      "--runs", "10",   "--seed", "1"};
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  REQUIRE(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  std::int64_t total = 0;
  for (const auto& [key, counts] : r1.payload["counts"].items()) {
    for (const auto& [outcome, n] : counts.items()) {
      total += n.get<std::int64_t>();
    }
  }
  CHECK(total == 10);
}

TEST_CASE("particle subcommands") {
  TempDir tmp;
  const std::string grid = tmp.write(
      "grid.json",
      Json{{"axes", {{0, 1, 2}, {0, 1, 2}}},
           {"masses", {0.25, 0.25, 0.25, 0.25}}});
  const auto marginal =
      run_cli({"particle", "marginal", "--grid", grid, "--keep", "0"});
  REQUIRE(marginal.exit_code == 0);
  CHECK(marginal.payload["masses"][0].get<double>() == doctest::Approx(0.5));

  const auto lift = run_cli(
      {"particle", "lift", "--grid", grid, "--axis", "0", "--cells", "0"});
  REQUIRE(lift.exit_code == 0);
  CHECK(lift.payload["mass"].get<double>() == doctest::Approx(0.5));

  const std::string grid_b = tmp.write(
      "grid_b.json", Json{{"axes", {{0, 1, 2}, {0, 1, 2}}},
                          {"masses", {0.5, 0.0, 0.0, 0.5}}});
  const auto dist = run_cli({"particle", "distance", "--grid-a", grid,
                             "--grid-b", grid_b});
  REQUIRE(dist.exit_code == 0);
  CHECK(dist.payload["paper_dsq"].get<double>() ==
        doctest::Approx(2.0 * dist.payload["hellinger_sq"].get<double>()));
}

TEST_CASE("deterministic output for identical invocations") {
  TempDir tmp;
  const std::string bell =
      tmp.write("bell.json", pure_state_to_json(bell_state()));
  const std::vector<std::string> args = {"epr", "class", "--state", bell};
  CHECK(run_cli(args).out == run_cli(args).out);
}

TEST_CASE("error paths emit machine-readable JSON") {
  const auto unknown = run_cli({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.payload["error"]["code"].get<std::string>() ==
        "unknown_command");

  const auto missing = run_cli({"epr", "class"});
  CHECK(missing.exit_code == 2);
  CHECK(missing.payload["error"].contains("code"));

  const auto nofile = run_cli({"epr", "class", "--state", "/no/such.json"});
  CHECK(nofile.exit_code == 2);
  CHECK(nofile.payload["error"]["code"].get<std::string>() == "bad_input");

  const auto badrange = run_cli(
      {"epr", "mmap", "--invert", "--m1", "2.0", "--m2", "0.0"});
  CHECK(badrange.exit_code == 2);
  CHECK(badrange.payload["error"]["code"].get<std::string>() ==
        "out_of_range");
}

TEST_CASE("csv rendering of sweep tables") {
  const auto r = run_cli({"--csv", "bell", "stats", "--gamma-a", "0",
                          "--gamma-b", "0", "--sweep", "3"});
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "delta,p(1,1),p(-1,1),p(1,-1),p(-1,-1)");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 3);
  CHECK(r.out.find("\r") == std::string::npos);

  // Non-tabular payload with --csv is a validation error.
  const auto bad = run_cli({"--csv", "bell", "stats", "--gamma-a", "0",
                            "--gamma-b", "0"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.payload["error"]["code"].get<std::string>() == "not_tabular");
}

TEST_CASE("emit_plot_table shapes") {
  // A qubit lift sweep: theta in {0, pi/2, pi} gives lifts (1, 0, -1).
  const auto alg = AbelianAlgebra::from_projections({diag({1, 0})}, 2);
  Json rows = Json::array();
  for (double theta : {0.0, M_PI / 2, M_PI}) {
    const auto p = density_vector(alg, density_from_pure(qubit(theta, 0.0)));
    rows.push_back(
        {theta, lift_observable(alg, pauli(3), p).real()});
  }
  const Json payload{{"columns", {"theta", "lift"}}, {"rows", rows}};
  const std::string csv = emit_plot_table(payload);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "theta,lift");
  std::vector<double> lifts;
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    lifts.push_back(std::stod(line.substr(comma + 1)));
  }
  REQUIRE(lifts.size() == 3);
  CHECK(lifts[0] == doctest::Approx(1.0));
  CHECK(lifts[1] == doctest::Approx(0.0));
  CHECK(lifts[2] == doctest::Approx(-1.0));

  // Empty sweep -> header only.
  const std::string empty = emit_plot_table(
      Json{{"columns", {"x", "y"}}, {"rows", Json::array()}});
  CHECK(empty == "x,y\n");

  CHECK_THROWS_AS(emit_plot_table(Json{{"foo", 1}}), Error);
}

TEST_CASE("JSON round trips preserve values bit-exactly") {
  Rng rng(211);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + static_cast<int>(rng.below(5));
    Matrix m(d, d);
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) m(i, j) = rng.complex_normal();
    }
    const Matrix back = matrix_from_json(matrix_to_json(m));
    CHECK(max_abs(back - m) == 0.0);

    const PureState h = random_pure(d, rng);
    const PureState hb = pure_state_from_json(pure_state_to_json(h));
    CHECK((hb.amplitudes() - h.amplitudes()).norm() == 0.0);
  }
  const PVM pvm = bell_pvm({0.3, 1.2});
  const PVM back = pvm_from_json(pvm_to_json(pvm));
  REQUIRE(back.size() == pvm.size());
  for (std::size_t i = 0; i < pvm.size(); ++i) {
    CHECK(back.outcomes()[i].label == pvm.outcomes()[i].label);
    CHECK(max_abs(back.outcomes()[i].projection -
                  pvm.outcomes()[i].projection) == 0.0);
  }
}

TEST_CASE("pure_state_required rejects mixed-state files") {
  const Json mixed = matrix_to_json(0.5 * Matrix::Identity(2, 2));
  CHECK_THROWS_AS((void)pure_state_required(mixed), Error);
  CHECK_NOTHROW((void)state_from_json(mixed));
}

TEST_CASE("manifest files are deterministic and digest inputs") {
  TempDir tmp;
  const std::string bell =
      tmp.write("bell.json", pure_state_to_json(bell_state()));
  const std::string mpath = tmp.path("manifest.json");
  const auto read_file = [](const std::string& path) {
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
  };
  const auto r1 = run_cli(
      {"--manifest", mpath, "epr", "class", "--state", bell});
  REQUIRE(r1.exit_code == 0);
  const std::string first = read_file(mpath);
  const auto r2 = run_cli(
      {"--manifest", mpath, "epr", "class", "--state", bell});
  REQUIRE(r2.exit_code == 0);
  const std::string second = read_file(mpath);
  CHECK(first == second);
  std::stringstream s1(first);
  const Json manifest = Json::parse(s1.str());
  CHECK(manifest["version"].get<std::string>() == kVersion);
  CHECK(manifest["inputs"][bell].get<std::string>().substr(0, 6) == "fnv1a:");
  CHECK(manifest["outputs"]["theta"][0].get<double>() ==
        doctest::Approx(M_PI / 2));
  CHECK(manifest["command"].get<std::string>().find("epr class") !=
        std::string::npos);
}
