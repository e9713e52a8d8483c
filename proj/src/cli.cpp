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

#include "qindis/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qindis/numerics.hpp"

namespace qindis {

namespace {

struct CliContext {
  Tolerance tol;
  bool degrees = false;
  bool csv = false;
  std::string manifest_path;
  std::optional<std::int64_t> seed;
  std::vector<std::string> raw_args;
  std::map<std::string, std::string> input_digests;
  Json payload;

  double angle(double v) const { return degrees ? v * M_PI / 180.0 : v; }

  Json load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("bad_input", "cannot open file", {{"path", path}});
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();
    input_digests[path] = "fnv1a:" + fnv1a_hex(bytes);
    try {
      return Json::parse(bytes);
    } catch (const Json::parse_error& e) {
      throw Error("bad_input", std::string("invalid JSON: ") + e.what(),
                  {{"path", path}});
    }
  }

  AbelianAlgebra load_algebra(const std::string& path) {
    GeneratorFile gens = generators_from_json(load(path));
    return AbelianAlgebra::from_projections(std::move(gens.generators),
                                            gens.dim, tol);
  }

  Json manifest() const {
    Json inputs = Json::object();
    for (const auto& [path, digest] : input_digests) inputs[path] = digest;
    std::string command;
    for (const auto& a : raw_args) {
      if (!command.empty()) command += ' ';
      command += a;
    }
    Json m{{"command", command},
           {"inputs", inputs},
           {"tolerance",
            {{"abs_eq", tol.abs_eq},
             {"eig_cluster", tol.eig_cluster},
             {"opt_conv", tol.opt_conv}}},
           {"outputs", payload},
           {"version", kVersion}};
    m["seed"] = seed ? Json(*seed) : Json(nullptr);
    return m;
  }
};

std::string format_sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

Json error_json(const std::string& code, const std::string& message,
                const std::map<std::string, std::string>& context = {}) {
  Json ctx = Json::object();
  for (const auto& [k, v] : context) ctx[k] = v;
  return Json{{"error", {{"code", code}, {"message", message}, {"context", ctx}}}};
}

Json probabilities_payload(const std::array<double, 4>& probs) {
  Json outcomes = Json::array();
  for (const auto& label : epr_outcome_order()) {
    outcomes.push_back(outcome_label_to_json(label));
  }
  return Json{{"probabilities", probs}, {"outcomes", outcomes}};
}

std::string setting_key(int ia, int ib) {
  return std::string("a") + std::to_string(ia + 1) + "|b" +
         std::to_string(ib + 1);
}

std::string outcome_key(int k) {
  static const std::array<std::string, 4> keys = {"1,1", "-1,1", "1,-1",
                                                  "-1,-1"};
  return keys[static_cast<std::size_t>(k)];
}

void register_commands(CLI::App& app, CliContext& ctx) {
  app.require_subcommand(1);

  // ---- indisc ------------------------------------------------------------
  auto* indisc = app.add_subcommand("indisc", "Indiscernibility decisions");
  indisc->require_subcommand(1);
  {
    auto* check = indisc->add_subcommand("check",
                                         "Decide indiscernibility of two "
                                         "states for an observable algebra");
    auto pvm_path = std::make_shared<std::string>();
    auto gen_path = std::make_shared<std::string>();
    auto a_path = std::make_shared<std::string>();
    auto b_path = std::make_shared<std::string>();
    check->add_option("--pvm", *pvm_path, "PVM JSON file");
    check->add_option("--generators", *gen_path, "generator projections file");
    check->add_option("--state-a", *a_path, "first state file")->required();
    check->add_option("--state-b", *b_path, "second state file")->required();
    check->callback([&ctx, pvm_path, gen_path, a_path, b_path] {
      AbelianAlgebra alg = [&] {
        if (!pvm_path->empty()) {
          PVM pvm = pvm_from_json(ctx.load(*pvm_path), ctx.tol);
          std::vector<Matrix> projections;
          for (const auto& o : pvm.outcomes()) {
            projections.push_back(o.projection);
          }
          return AbelianAlgebra::from_projections(std::move(projections),
                                                  pvm.dim(), ctx.tol);
        }
        if (!gen_path->empty()) return ctx.load_algebra(*gen_path);
        throw Error("bad_input", "provide --pvm or --generators");
      }();
      const DensityMatrix a = state_from_json(ctx.load(*a_path), ctx.tol);
      const DensityMatrix b = state_from_json(ctx.load(*b_path), ctx.tol);
      const auto rep = indiscernible(alg, a, b, ctx.tol);
      ctx.payload = Json{{"indiscernible", rep.equal},
                         {"max_deviation", rep.max_deviation}};
    });

    auto* witness = indisc->add_subcommand(
        "witness", "Construct the commutant witness unitary for an "
                   "indiscernible pair of pure states");
    auto wpvm = std::make_shared<std::string>();
    auto wgen = std::make_shared<std::string>();
    auto wa = std::make_shared<std::string>();
    auto wb = std::make_shared<std::string>();
    witness->add_option("--pvm", *wpvm, "PVM JSON file");
    witness->add_option("--generators", *wgen, "generator projections file");
    witness->add_option("--state-a", *wa, "first pure state")->required();
    witness->add_option("--state-b", *wb, "second pure state")->required();
    witness->callback([&ctx, wpvm, wgen, wa, wb] {
      AbelianAlgebra alg = [&] {
        if (!wpvm->empty()) {
          PVM pvm = pvm_from_json(ctx.load(*wpvm), ctx.tol);
          std::vector<Matrix> projections;
          for (const auto& o : pvm.outcomes()) {
            projections.push_back(o.projection);
          }
          return AbelianAlgebra::from_projections(std::move(projections),
                                                  pvm.dim(), ctx.tol);
        }
        if (!wgen->empty()) return ctx.load_algebra(*wgen);
        throw Error("bad_input", "provide --pvm or --generators");
      }();
      const PureState a = pure_state_required(ctx.load(*wa), ctx.tol);
      const PureState b = pure_state_required(ctx.load(*wb), ctx.tol);
      ctx.payload = witness_to_json(witness_unitary(alg, a, b, ctx.tol));
    });
  }

  // ---- algebra -----------------------------------------------------------
  auto* algebra = app.add_subcommand("algebra", "Abelian algebra toolkit");
  algebra->require_subcommand(1);
  {
    auto* atoms = algebra->add_subcommand("atoms", "Atom decomposition");
    auto gen = std::make_shared<std::string>();
    atoms->add_option("--generators", *gen, "generator projections file")
        ->required();
    atoms->callback([&ctx, gen] {
      ctx.payload = algebra_to_json(ctx.load_algebra(*gen));
    });

    auto* commutant = algebra->add_subcommand(
        "commutant", "Orthonormal basis of the commutant");
    auto cgen = std::make_shared<std::string>();
    commutant->add_option("--generators", *cgen, "generator matrices file")
        ->required();
    commutant->callback([&ctx, cgen] {
      GeneratorFile gens = generators_from_json(ctx.load(*cgen));
      auto basis = commutant_basis(gens.generators, gens.dim, ctx.tol);
      Json jbasis = Json::array();
      for (const auto& b : basis) jbasis.push_back(matrix_to_json(b));
      ctx.payload = Json{{"dim", gens.dim},
                         {"size", basis.size()},
                         {"basis", jbasis}};
    });

    auto* generator = algebra->add_subcommand(
        "generator", "Single self-adjoint generator sum_k 3^-k P_k");
    auto pgen = std::make_shared<std::string>();
    generator->add_option("--projections", *pgen, "projections file")
        ->required();
    generator->callback([&ctx, pgen] {
      GeneratorFile gens = generators_from_json(ctx.load(*pgen));
      ctx.payload =
          Json{{"matrix",
                matrix_to_json(single_generator(gens.generators, ctx.tol))}};
    });

    auto* recover = algebra->add_subcommand(
        "recover", "Recover a projection from the single generator");
    auto mat = std::make_shared<std::string>();
    auto index = std::make_shared<int>(0);
    auto count = std::make_shared<int>(1);
    recover->add_option("--matrix", *mat, "generator matrix file")->required();
    recover->add_option("--index", *index, "digit index k")->required();
    recover->add_option("--count", *count, "number of projections n")
        ->required();
    recover->callback([&ctx, mat, index, count] {
      const Matrix a = matrix_from_json(ctx.load(*mat));
      ctx.payload = Json{{"projection", matrix_to_json(recover_projection(
                                            a, *index, *count, ctx.tol))}};
    });
  }

  // ---- holevo ------------------------------------------------------------
  auto* holevo = app.add_subcommand("holevo", "Holevo space toolkit");
  holevo->require_subcommand(1);
  {
    auto* atoms = holevo->add_subcommand("atoms", "Atoms and simplex shape");
    auto gen = std::make_shared<std::string>();
    atoms->add_option("--generators", *gen, "generator projections file")
        ->required();
    atoms->callback([&ctx, gen] {
      const AbelianAlgebra alg = ctx.load_algebra(*gen);
      Json j = algebra_to_json(alg);
      Json ranks = Json::array();
      for (const auto& atom : alg.atoms()) ranks.push_back(atom.rank);
      j["ranks"] = ranks;
      ctx.payload = std::move(j);
    });

    auto* density = holevo->add_subcommand(
        "density", "Atom probability vector of a state");
    auto dgen = std::make_shared<std::string>();
    auto dstate = std::make_shared<std::string>();
    density->add_option("--generators", *dgen, "generator projections file")
        ->required();
    density->add_option("--state", *dstate, "state file")->required();
    density->callback([&ctx, dgen, dstate] {
      const AbelianAlgebra alg = ctx.load_algebra(*dgen);
      const DensityMatrix rho = state_from_json(ctx.load(*dstate), ctx.tol);
      ctx.payload = holevo_point_to_json(density_vector(alg, rho, ctx.tol));
    });

    auto* distance = holevo->add_subcommand(
        "distance", "Quotient Hilbert-Schmidt and Hellinger distances");
    auto pp = std::make_shared<std::string>();
    auto qq = std::make_shared<std::string>();
    distance->add_option("--p", *pp, "first Holevo point file")->required();
    distance->add_option("--q", *qq, "second Holevo point file")->required();
    distance->callback([&ctx, pp, qq] {
      const HolevoPoint p = holevo_point_from_json(ctx.load(*pp), ctx.tol);
      const HolevoPoint q = holevo_point_from_json(ctx.load(*qq), ctx.tol);
      const double h2 = hellinger_sq(p, q);
      ctx.payload = Json{{"quotient_hs", quotient_hs_distance(p, q)},
                         {"hellinger_sq", h2},
                         {"paper_dsq", 2.0 * h2},
                         {"bhattacharyya", bhattacharyya(p, q)}};
    });

    auto* lift = holevo->add_subcommand("lift", "Observable lift at a point");
    auto lgen = std::make_shared<std::string>();
    auto lmat = std::make_shared<std::string>();
    auto lp = std::make_shared<std::string>();
    lift->add_option("--generators", *lgen, "generator projections file")
        ->required();
    lift->add_option("--matrix", *lmat, "algebra element file")->required();
    lift->add_option("--p", *lp, "Holevo point file")->required();
    lift->callback([&ctx, lgen, lmat, lp] {
      const AbelianAlgebra alg = ctx.load_algebra(*lgen);
      const Matrix a = matrix_from_json(ctx.load(*lmat));
      const HolevoPoint p = holevo_point_from_json(ctx.load(*lp), ctx.tol);
      const Complex v = lift_observable(alg, a, p, ctx.tol);
      ctx.payload = Json{{"value", {v.real(), v.imag()}}};
    });
  }

  // ---- classical ---------------------------------------------------------
  auto* classical = app.add_subcommand("classical", "Classical quotient");
  classical->require_subcommand(1);
  {
    auto* quotient = classical->add_subcommand(
        "quotient", "Partition points by observable values");
    auto sys_path = std::make_shared<std::string>();
    auto wa = std::make_shared<std::string>();
    auto wb = std::make_shared<std::string>();
    quotient->add_option("--system", *sys_path, "classical system file")
        ->required();
    quotient->add_option("--witness-a", *wa, "first point id for a witness");
    quotient->add_option("--witness-b", *wb, "second point id for a witness");
    quotient->callback([&ctx, sys_path, wa, wb] {
      const ClassicalSystem sys =
          classical_system_from_json(ctx.load(*sys_path));
      const auto classes = classical_quotient(sys);
      Json jclasses = Json::array();
      for (const auto& cls : classes) {
        Json members = Json::array();
        for (int i : cls) members.push_back(sys.points[i]);
        jclasses.push_back(members);
      }
      ctx.payload = Json{{"classes", jclasses}};
      if (!wa->empty() || !wb->empty()) {
        const auto find = [&](const std::string& id) {
          const auto it = std::find(sys.points.begin(), sys.points.end(), id);
          if (it == sys.points.end()) {
            throw Error("bad_input", "unknown point id", {{"id", id}});
          }
          return static_cast<int>(it - sys.points.begin());
        };
        const auto perm = transposition_witness(sys, find(*wa), find(*wb));
        ctx.payload["witness"] =
            Json{{"a", *wa}, {"b", *wb}, {"permutation", perm}};
      }
    });
  }

  // ---- epr ---------------------------------------------------------------
  auto* epr = app.add_subcommand("epr", "EPR experiment");
  epr->require_subcommand(1);
  {
    auto* cls = epr->add_subcommand("class", "Class triple of a state");
    auto spath = std::make_shared<std::string>();
    cls->add_option("--state", *spath, "two-qubit pure state file")
        ->required();
    cls->callback([&ctx, spath] {
      const PureState h = pure_state_required(ctx.load(*spath), ctx.tol);
      ctx.payload = Json{{"theta", epr_class(h, ctx.tol)}};
    });

    auto* stats = epr->add_subcommand("stats", "Lifted outcome probabilities");
    auto theta = std::make_shared<std::vector<double>>();
    auto sstate = std::make_shared<std::string>();
    stats->add_option("--theta", *theta, "class triple (three angles)")
        ->expected(3);
    stats->add_option("--state", *sstate, "two-qubit pure state file");
    stats->callback([&ctx, theta, sstate] {
      std::array<double, 3> triple{};
      if (theta->size() == 3) {
        for (int i = 0; i < 3; ++i) triple[i] = ctx.angle((*theta)[i]);
      } else if (!sstate->empty()) {
        triple =
            epr_class(pure_state_required(ctx.load(*sstate), ctx.tol), ctx.tol);
      } else {
        throw Error("bad_input", "provide --theta or --state");
      }
      Json j = probabilities_payload(epr_lifts(triple));
      j["theta"] = triple;
      ctx.payload = std::move(j);
    });

    auto* mmap = epr->add_subcommand(
        "mmap", "Marginal spin expectations (m1, m2), their inverse, and "
                "the projection from class triples");
    auto mstate = std::make_shared<std::string>();
    auto invert = std::make_shared<bool>(false);
    auto m1 = std::make_shared<double>(0.0);
    auto m2 = std::make_shared<double>(0.0);
    auto mtheta = std::make_shared<std::vector<double>>();
    mmap->add_option("--state", *mstate, "two-qubit pure state file");
    mmap->add_flag("--invert", *invert, "construct a state from (m1, m2)");
    mmap->add_option("--m1", *m1, "first marginal expectation");
    mmap->add_option("--m2", *m2, "second marginal expectation");
    mmap->add_option("--theta", *mtheta,
                     "class triple to project to (m1, m2)")
        ->expected(3);
    mmap->callback([&ctx, mstate, invert, m1, m2, mtheta] {
      if (*invert) {
        const PureState h = m_inverse(*m1, *m2);
        ctx.payload = Json{{"state", pure_state_to_json(h)},
                           {"m", m_map(h)}};
      } else if (mtheta->size() == 3) {
        std::array<double, 3> triple{};
        for (int i = 0; i < 3; ++i) triple[i] = ctx.angle((*mtheta)[i]);
        ctx.payload = Json{{"m", holevo_projection_A(triple)}};
      } else if (!mstate->empty()) {
        const PureState h = pure_state_required(ctx.load(*mstate), ctx.tol);
        ctx.payload = Json{{"m", m_map(h)}};
      } else {
        throw Error("bad_input",
                    "provide --state, --theta, or --invert with --m1/--m2");
      }
    });
  }

  // ---- bell --------------------------------------------------------------
  auto* bell = app.add_subcommand("bell", "Bell experiment");
  bell->require_subcommand(1);
  {
    auto* stats = bell->add_subcommand("stats", "Rotated outcome statistics");
    auto ga = std::make_shared<double>(0.0);
    auto gb = std::make_shared<double>(0.0);
    auto sstate = std::make_shared<std::string>();
    auto sweep = std::make_shared<int>(0);
    stats->add_option("--gamma-a", *ga, "polariser angle for A")->required();
    stats->add_option("--gamma-b", *gb, "polariser angle for B")->required();
    stats->add_option("--state", *sstate,
                      "two-qubit pure state file (default: Bell state)");
    stats->add_option("--sweep", *sweep,
                      "emit a table over N values of delta = gamma_a - "
                      "gamma_b in [0, 2 pi)");
    stats->callback([&ctx, ga, gb, sstate, sweep] {
      const PureState h =
          sstate->empty() ? bell_state()
                          : pure_state_required(ctx.load(*sstate), ctx.tol);
      if (*sweep > 0) {
        Json rows = Json::array();
        for (int k = 0; k < *sweep; ++k) {
          const double delta = 2.0 * M_PI * k / *sweep;
          const auto p = bell_stats({delta, 0.0}, h, ctx.tol);
          rows.push_back({delta, p[0], p[1], p[2], p[3]});
        }
        ctx.payload = Json{
            {"columns",
             {"delta", "p(1,1)", "p(-1,1)", "p(1,-1)", "p(-1,-1)"}},
            {"rows", rows}};
      } else {
        const BellSettings s{ctx.angle(*ga), ctx.angle(*gb)};
        Json j = probabilities_payload(bell_stats(s, h, ctx.tol));
        j["gamma_a"] = s.gamma_a;
        j["gamma_b"] = s.gamma_b;
        ctx.payload = std::move(j);
      }
    });

    auto* theta = bell->add_subcommand(
        "theta", "Rotated parameter triple of a class");
    auto tga = std::make_shared<double>(0.0);
    auto tgb = std::make_shared<double>(0.0);
    auto ttheta = std::make_shared<std::vector<double>>();
    theta->add_option("--gamma-a", *tga, "polariser angle for A")->required();
    theta->add_option("--gamma-b", *tgb, "polariser angle for B")->required();
    theta->add_option("--theta", *ttheta, "class triple (three angles)")
        ->expected(3)
        ->required();
    theta->callback([&ctx, tga, tgb, ttheta] {
      std::array<double, 3> triple{};
      for (int i = 0; i < 3; ++i) triple[i] = ctx.angle((*ttheta)[i]);
      const BellSettings s{ctx.angle(*tga), ctx.angle(*tgb)};
      ctx.payload = Json{{"theta", theta_recover(s, triple, ctx.tol)}};
    });

    auto* invariants = bell->add_subcommand(
        "invariants", "States indiscernible under every polariser setting");
    invariants->callback([&ctx] {
      const auto states = invariant_states(ctx.tol);
      Json jstates = Json::array();
      for (const auto& st : states) jstates.push_back(pure_state_to_json(st));
      ctx.payload = Json{{"states", jstates}};
    });

    auto* incompat = bell->add_subcommand(
        "incompat", "Commutator check between two rotated observables");
    auto ga1 = std::make_shared<double>(0.0);
    auto gb1 = std::make_shared<double>(0.0);
    auto ga2 = std::make_shared<double>(0.0);
    auto gb2 = std::make_shared<double>(0.0);
    incompat->add_option("--gamma-a1", *ga1, "first A angle")->required();
    incompat->add_option("--gamma-b1", *gb1, "first B angle")->required();
    incompat->add_option("--gamma-a2", *ga2, "second A angle")->required();
    incompat->add_option("--gamma-b2", *gb2, "second B angle")->required();
    incompat->callback([&ctx, ga1, gb1, ga2, gb2] {
      const PVM p = bell_pvm({ctx.angle(*ga1), ctx.angle(*gb1)}, ctx.tol);
      const PVM q = bell_pvm({ctx.angle(*ga2), ctx.angle(*gb2)}, ctx.tol);
      const auto rep = incompatibility_check(p, q, ctx.tol);
      ctx.payload = Json{
          {"compatible", rep.compatible},
          {"max_commutator_norm", rep.max_commutator_norm},
          {"witness_pair", {rep.witness_pair.first, rep.witness_pair.second}}};
    });
  }

  // ---- aspect ------------------------------------------------------------
  auto* aspect = app.add_subcommand("aspect", "Randomised-settings sampler");
  aspect->require_subcommand(1);
  {
    auto* run = aspect->add_subcommand("run", "Simulate an Aspect experiment");
    auto a1 = std::make_shared<double>(0.0);
    auto a2 = std::make_shared<double>(0.0);
    auto b1 = std::make_shared<double>(0.0);
    auto b2 = std::make_shared<double>(0.0);
    auto runs = std::make_shared<std::int64_t>(1);
    auto seed = std::make_shared<std::int64_t>(0);
    auto sstate = std::make_shared<std::string>();
    run->add_option("--a1", *a1, "first A angle")->required();
    run->add_option("--a2", *a2, "second A angle")->required();
    run->add_option("--b1", *b1, "first B angle")->required();
    run->add_option("--b2", *b2, "second B angle")->required();
    run->add_option("--runs", *runs, "number of runs")->required();
    run->add_option("--seed", *seed, "random seed")->required();
    run->add_option("--state", *sstate,
                    "two-qubit pure state file (default: Bell state)");
    run->callback([&ctx, a1, a2, b1, b2, runs, seed, sstate] {
      ctx.seed = *seed;
      AspectConfig cfg;
      cfg.a1 = ctx.angle(*a1);
      cfg.a2 = ctx.angle(*a2);
      cfg.b1 = ctx.angle(*b1);
      cfg.b2 = ctx.angle(*b2);
      cfg.runs = *runs;
      cfg.seed = static_cast<std::uint64_t>(*seed);
      const PureState h =
          sstate->empty() ? bell_state()
                          : pure_state_required(ctx.load(*sstate), ctx.tol);
      const AspectResult result = aspect_simulate(cfg, h, ctx.tol);
      Json counts = Json::object();
      Json freqs = Json::object();
      Json setting_counts = Json::object();
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          Json c = Json::object();
          Json f = Json::object();
          for (int k = 0; k < 4; ++k) {
            c[outcome_key(k)] = result.counts[i][j][k];
            f[outcome_key(k)] = result.frequencies[i][j][k];
          }
          counts[setting_key(i, j)] = c;
          freqs[setting_key(i, j)] = f;
          setting_counts[setting_key(i, j)] = result.setting_counts[i][j];
        }
      }
      ctx.payload = Json{{"runs", *runs},
                         {"seed", *seed},
                         {"counts", counts},
                         {"frequencies", freqs},
                         {"setting_counts", setting_counts}};
    });
  }

  // ---- particle ----------------------------------------------------------
  auto* particle = app.add_subcommand("particle", "Discretised free particle");
  particle->require_subcommand(1);
  {
    auto* marginal = particle->add_subcommand("marginal", "Axis marginal");
    auto grid = std::make_shared<std::string>();
    auto keep = std::make_shared<std::vector<int>>();
    marginal->add_option("--grid", *grid, "grid density file")->required();
    marginal->add_option("--keep", *keep, "axes to keep")->required();
    marginal->callback([&ctx, grid, keep] {
      const GridDensity g = grid_from_json(ctx.load(*grid), ctx.tol);
      ctx.payload = grid_to_json(grid_marginal(g, *keep));
    });

    auto* lift = particle->add_subcommand("lift", "Cylinder-set mass");
    auto lgrid = std::make_shared<std::string>();
    auto axis = std::make_shared<int>(0);
    auto cells = std::make_shared<std::vector<int>>();
    lift->add_option("--grid", *lgrid, "grid density file")->required();
    lift->add_option("--axis", *axis, "axis index")->required();
    lift->add_option("--cells", *cells, "cell indices")->required();
    lift->callback([&ctx, lgrid, axis, cells] {
      const GridDensity g = grid_from_json(ctx.load(*lgrid), ctx.tol);
      ctx.payload = Json{{"mass", grid_lift(g, *axis, *cells)}};
    });

    auto* distance = particle->add_subcommand(
        "distance", "Hellinger distance between grid densities");
    auto ga = std::make_shared<std::string>();
    auto gb = std::make_shared<std::string>();
    distance->add_option("--grid-a", *ga, "first grid file")->required();
    distance->add_option("--grid-b", *gb, "second grid file")->required();
    distance->callback([&ctx, ga, gb] {
      const GridDensity a = grid_from_json(ctx.load(*ga), ctx.tol);
      const GridDensity b = grid_from_json(ctx.load(*gb), ctx.tol);
      const auto h = grid_hellinger(a, b);
      ctx.payload = Json{{"hellinger_sq", h.hellinger_sq},
                         {"paper_dsq", h.paper_dsq}};
    });
  }
}

}  // namespace

std::string emit_plot_table(const Json& payload) {
  if (!payload.is_object() || !payload.contains("columns") ||
      !payload.contains("rows") || !payload["columns"].is_array() ||
      !payload["rows"].is_array()) {
    throw Error("not_tabular", "payload is not a keyed numeric table");
  }
  const Json& columns = payload["columns"];
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ',';
    out += columns[i].get<std::string>();
  }
  out += '\n';
  for (const Json& row : payload["rows"]) {
    if (!row.is_array() || row.size() != columns.size()) {
      throw Error("not_tabular", "row shape does not match the header");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_number()) {
        throw Error("not_tabular", "table cells must be numeric");
      }
      if (i > 0) out += ',';
      out += format_sig17(row[i].get<double>());
    }
    out += '\n';
  }
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CliContext ctx;
  ctx.raw_args = args;
  CLI::App app{"Indiscernibility of quantum states: Holevo spaces, witness "
               "unitaries, and the qubit/EPR/Bell computations"};
  app.set_help_flag("-h,--help", "print help");
  app.add_option("--tol", ctx.tol.abs_eq, "absolute equality tolerance");
  app.add_option("--tol-eig", ctx.tol.eig_cluster,
                 "eigenvalue clustering tolerance");
  app.add_option("--tol-opt", ctx.tol.opt_conv,
                 "optimisation convergence tolerance");
  app.add_flag("--degrees", ctx.degrees, "interpret angle options as degrees");
  app.add_flag("--csv", ctx.csv, "render table payloads as CSV");
  app.add_option("--manifest", ctx.manifest_path,
                 "write a run manifest to this file");

  register_commands(app, ctx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    ctx.tol.validate();
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    // Distinguish an unknown command word from a malformed invocation of a
    // known one: look at the first non-flag token.
    static const std::vector<std::string> known = {
        "indisc", "algebra", "holevo", "classical",
        "epr",    "bell",    "aspect", "particle"};
    static const std::vector<std::string> value_flags = {
        "--tol", "--tol-eig", "--tol-opt", "--manifest"};
    std::string code = "bad_input";
    for (std::size_t i = 0; i < args.size(); ++i) {
      const std::string& a = args[i];
      if (!a.empty() && a.front() == '-') {
        if (std::find(value_flags.begin(), value_flags.end(), a) !=
            value_flags.end()) {
          ++i;  // skip the flag's value
        }
        continue;
      }
      if (std::find(known.begin(), known.end(), a) == known.end()) {
        code = "unknown_command";
      }
      break;
    }
    out << error_json(code, e.what()).dump(2) << '\n';
    return 2;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what(), e.context()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << error_json("internal", e.what()).dump(2) << '\n';
    err << "internal error\n";
    return 1;
  }

  try {
    // Callbacks ran during parse; payload is filled unless help was shown.
    if (ctx.payload.is_null()) {
      out << error_json("unknown_command", "no command executed").dump(2)
          << '\n';
      return 2;
    }
    if (ctx.csv) {
      out << emit_plot_table(ctx.payload);
    } else {
      out << ctx.payload.dump(2) << '\n';
    }
    if (!ctx.manifest_path.empty()) {
      std::ofstream mf(ctx.manifest_path);
      if (!mf) {
        throw Error("bad_input", "cannot write manifest file",
                    {{"path", ctx.manifest_path}});
      }
      mf << ctx.manifest().dump(2) << '\n';
    }
    return 0;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what(), e.context()).dump(2) << '\n';
    return 2;
  } catch (const std::exception& e) {
    out << error_json("internal", e.what()).dump(2) << '\n';
    err << "internal error\n";
    return 1;
  }
}

}  // namespace qindis
