// Command-line front end: membership tests, boundary optimization and sweeps,
// spectral factorization, see-saw bounds, the metrological game, two-setting
// randomness curves, certificate verification, Bell demos, and the bundled
// fixtures.  JSON on stdout (CSV for sweeps with --csv), diagnostics on
// stderr.  Exit codes: 0 success/feasible/verified, 1 infeasible/violated,
// 2 usage error, 3 numerical failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "rotbox/bell.hpp"
#include "rotbox/fejer.hpp"
#include "rotbox/fixtures.hpp"
#include "rotbox/games.hpp"
#include "rotbox/gpt.hpp"
#include "rotbox/json_io.hpp"
#include "rotbox/qset.hpp"
#include "rotbox/rset.hpp"

namespace {

using rotbox::TrigPoly;
using json = nlohmann::json;
namespace io = rotbox::io;

constexpr int kOk = 0, kInfeasible = 1, kUsage = 2, kNumerical = 3;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

TrigPoly load_poly(const std::string& path) {
  return io::poly_from_json(load_json(path));
}

rotbox::rset::Direction parse_direction(const std::string& csv, int two_j) {
  rotbox::rset::Direction d;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) d.w.push_back(std::stod(tok));
  if (static_cast<int>(d.w.size()) != 2 * two_j + 1)
    throw CLI::ValidationError("direction needs 4J+1 = " +
                               std::to_string(2 * two_j + 1) + " weights");
  return d;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"rotation-box correlation toolkit"};
  app.require_subcommand(1);

  // ---- membership ----------------------------------------------------
  auto* mem = app.add_subcommand("membership",
                                 "test whether boxes form a spin-J correlation");
  std::vector<std::string> mem_polys;
  int mem_two_j = 0;
  double mem_tol = 1e-9;
  mem->add_option("--poly", mem_polys, "box JSON file (repeat for a tuple)")
      ->required()
      ->expected(-1);
  mem->add_option("--two-j", mem_two_j, "doubled spin 2J")->required();
  mem->add_option("--tol", mem_tol, "solver tolerance");

  // ---- optimize -------------------------------------------------------
  auto* opt = app.add_subcommand("optimize",
                                 "maximize a coefficient functional over R_J");
  int opt_two_j = 0;
  std::string opt_dir;
  opt->add_option("--two-j", opt_two_j)->required();
  opt->add_option("--direction", opt_dir,
                  "comma list of 4J+1 weights on (c0, c1, s1, ...)")
      ->required();

  // ---- boundary -------------------------------------------------------
  auto* bnd = app.add_subcommand("boundary", "sweep a 2D boundary projection");
  int bnd_two_j = 0, bnd_angles = 64;
  std::string bnd_v1, bnd_v2;
  bool bnd_csv = false;
  bnd->add_option("--two-j", bnd_two_j)->required();
  bnd->add_option("--v1", bnd_v1, "first plane direction")->required();
  bnd->add_option("--v2", bnd_v2, "second plane direction")->required();
  bnd->add_option("--num-angles", bnd_angles);
  bnd->add_flag("--csv", bnd_csv, "emit CSV instead of JSON");

  // ---- factor ---------------------------------------------------------
  auto* fac = app.add_subcommand("factor",
                                 "spectral factorization of a nonnegative box");
  std::string fac_poly;
  fac->add_option("--poly", fac_poly)->required();

  // ---- seesaw ---------------------------------------------------------
  auto* ssw = app.add_subcommand("seesaw", "lower-bound the quantum maximum");
  int ssw_two_j = 0, ssw_restarts = 20;
  std::uint64_t ssw_seed = 1;
  std::string ssw_dir, ssw_trace;
  ssw->add_option("--two-j", ssw_two_j)->required();
  ssw->add_option("--direction", ssw_dir)->required();
  ssw->add_option("--restarts", ssw_restarts);
  ssw->add_option("--seed", ssw_seed);
  ssw->add_option("--trace", ssw_trace, "write per-restart iteration CSV");

  // ---- game -----------------------------------------------------------
  auto* gam = app.add_subcommand("game", "metrological game success");
  std::string gam_poly;
  bool gam_witness = false;
  std::int64_t gam_trials = 1000000;
  std::uint64_t gam_seed = 1;
  gam->add_option("--poly", gam_poly, "box JSON file");
  gam->add_flag("--witness", gam_witness,
                "use the quantum witness box instead of --poly");
  gam->add_option("--trials", gam_trials);
  gam->add_option("--seed", gam_seed);

  // ---- randomness-curve -------------------------------------------------
  auto* rc = app.add_subcommand("randomness-curve",
                                "two-setting boundary E2(E1) at fixed alpha");
  int rc_two_j = 1, rc_grid = 101;
  double rc_alpha = 0.0;
  bool rc_csv = false;
  rc->add_option("--two-j", rc_two_j)->required();
  rc->add_option("--alpha", rc_alpha, "rotation angle of the second setting")
      ->required();
  rc->add_option("--grid", rc_grid);
  rc->add_flag("--csv", rc_csv);

  // ---- certify ----------------------------------------------------------
  auto* cert = app.add_subcommand("certify", "verify a bundled fixture");
  std::string cert_name;
  cert->add_option("--fixture", cert_name)->required();

  // ---- bell-demo ----------------------------------------------------------
  auto* bd = app.add_subcommand("bell-demo",
                                "verification report of the PR wiring");

  // ---- nagata ----------------------------------------------------------
  auto* nag = app.add_subcommand("nagata", "planar correlation inequality");
  std::string nag_tensor;
  std::uint64_t nag_seed = 1;
  nag->add_option("--tensor", nag_tensor, "JSON {parties, t: [3^N entries]}")
      ->required();
  nag->add_option("--seed", nag_seed);

  // ---- approx ----------------------------------------------------------
  auto* apx = app.add_subcommand("approx",
                                 "finite-spin approximation of a continuous box");
  int apx_two_j = 0, apx_width = 10;
  std::string apx_poly, apx_preset;
  apx->add_option("--two-j", apx_two_j)->required();
  apx->add_option("--width", apx_width, "boxcar width parameter n");
  apx->add_option("--poly", apx_poly, "target box as a polynomial JSON");
  apx->add_option("--preset", apx_preset, "one of: half, cosine");

  // ---- fixtures ----------------------------------------------------------
  auto* fx = app.add_subcommand("fixtures", "list bundled fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (mem->parsed()) {
    std::vector<TrigPoly> polys;
    for (const auto& path : mem_polys) polys.push_back(load_poly(path));
    json out;
    bool feasible = false;
    if (polys.size() == 1) {
      auto res = rotbox::rset::membership(polys[0], mem_two_j, mem_tol);
      feasible = res.feasible;
      out["feasible"] = res.feasible;
      out["solver_status"] = rotbox::sdp::to_string(res.solver_status);
      if (res.feasible) {
        out["certificate"] = io::certificate_to_json(res.cert);
      } else {
        out["violation"] = {{"bound", res.violated_bound},
                            {"angle", res.violation_angle},
                            {"value", res.violation_value}};
      }
    } else {
      auto res = rotbox::rset::membership_multi(polys, mem_two_j, mem_tol);
      feasible = res.feasible;
      out["feasible"] = res.feasible;
      out["solver_status"] = rotbox::sdp::to_string(res.solver_status);
      if (res.feasible) {
        json blocks = json::array();
        for (const auto& q : res.Q) blocks.push_back(io::matrix_to_json(q));
        out["Q_blocks"] = std::move(blocks);
        out["S"] = io::matrix_to_json(res.S);
      }
    }
    emit(out);
    return feasible ? kOk : kInfeasible;
  }

  if (opt->parsed()) {
    auto dir = parse_direction(opt_dir, opt_two_j);
    auto res = rotbox::rset::optimize_direction(dir, opt_two_j);
    if (res.status != rotbox::sdp::SolveStatus::Optimal) {
      std::cerr << "solve failed: " << rotbox::sdp::to_string(res.status) << "\n";
      return kNumerical;
    }
    emit(json{{"value", res.value},
              {"dual_bound", res.dual_bound},
              {"optimizer", io::poly_to_json(res.optimizer)},
              {"certificate", io::certificate_to_json(res.cert)}});
    return kOk;
  }

  if (bnd->parsed()) {
    auto rows = rotbox::rset::boundary_sweep(parse_direction(bnd_v1, bnd_two_j),
                                             parse_direction(bnd_v2, bnd_two_j),
                                             bnd_two_j, bnd_angles);
    if (bnd_csv) {
      std::cout << io::sweep_to_csv(rows, bnd_two_j);
    } else {
      json out = json::array();
      for (const auto& r : rows)
        out.push_back({{"phi", r.phi},
                       {"value", r.value},
                       {"ok", r.ok},
                       {"optimizer", io::poly_to_json(r.optimizer)}});
      emit(out);
    }
    for (const auto& r : rows)
      if (!r.ok) return kNumerical;
    return kOk;
  }

  if (fac->parsed()) {
    const TrigPoly p = load_poly(fac_poly);
    auto f = rotbox::fejer::factorize(p);
    json b = json::array();
    for (const auto& z : f.b) b.push_back({z.real(), z.imag()});
    const TrigPoly rec = rotbox::fejer::reconstruct(f);
    double err = 0.0;
    for (int k = 0; k <= p.degree(); ++k)
      err = std::max({err, std::abs(rec.c_coeff(k) - p.c_coeff(k)),
                      std::abs(rec.s_coeff(k) - p.s_coeff(k))});
    emit(json{{"b", std::move(b)}, {"reconstruction_error", err}});
    return kOk;
  }

  if (ssw->parsed()) {
    auto dir = parse_direction(ssw_dir, ssw_two_j);
    rotbox::qset::SeesawOptions opts;
    opts.restarts = ssw_restarts;
    opts.seed = ssw_seed;
    auto res = rotbox::qset::seesaw(dir, ssw_two_j, opts);
    if (!ssw_trace.empty()) {
      std::ofstream trace(ssw_trace);
      trace << "restart,round,value\n";
      for (size_t r = 0; r < res.traces.size(); ++r)
        for (size_t i = 0; i < res.traces[r].size(); ++i)
          trace << r << "," << i << "," << res.traces[r][i] << "\n";
    }
    emit(json{{"value", res.value},
              {"best_restart", res.best_restart},
              {"restart_values", res.restart_values},
              {"rho", io::matrix_to_json(res.best.rho)},
              {"effect", io::matrix_to_json(res.best.effect)}});
    return kOk;
  }

  if (gam->parsed()) {
    TrigPoly box = TrigPoly::constant(0.5);
    if (gam_witness) {
      const auto gap = rotbox::qset::analytic_gap_bound(3);
      box = rotbox::qset::born_polynomial(gap.rho, gap.effect);
    } else if (!gam_poly.empty()) {
      box = load_poly(gam_poly);
    } else {
      std::cerr << "need --poly or --witness\n";
      return kUsage;
    }
    const double analytic = rotbox::games::game_success(box);
    auto mc = rotbox::games::game_monte_carlo(box, gam_trials, gam_seed);
    emit(json{{"analytic", analytic},
              {"empirical", mc.empirical},
              {"stderr", mc.stderr_estimate},
              {"trials", mc.trials}});
    return kOk;
  }

  if (rc->parsed()) {
    std::ostringstream csv;
    csv.precision(12);
    csv << "e1,e2_boundary\n";
    json rows = json::array();
    for (int i = 0; i < rc_grid; ++i) {
      const double e1 = -1.0 + 2.0 * i / (rc_grid - 1);
      auto iv = rotbox::games::two_setting_quantum_boundary(rc_two_j, rc_alpha, e1);
      csv << e1 << "," << iv.lo << "\n";
      rows.push_back({{"e1", e1}, {"e2_boundary", iv.lo}, {"e2_max", iv.hi}});
    }
    if (rc_csv)
      std::cout << csv.str();
    else
      emit(rows);
    return kOk;
  }

  if (cert->parsed()) {
    const auto& f = rotbox::fixtures::get(cert_name);
    const auto rep = f.verify();
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name},
                        {"measured", c.measured},
                        {"expected", c.expected},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass}});
    emit(json{{"fixture", rep.fixture},
              {"description", f.description},
              {"pass", rep.pass},
              {"checks", std::move(checks)}});
    return rep.pass ? kOk : kInfeasible;
  }

  if (bd->parsed()) {
    const auto p = rotbox::bell::pr_wiring_behavior();
    const double ns = rotbox::bell::no_signalling_error(p);
    const double norm = rotbox::bell::normalization_error(p);
    const double pos = rotbox::bell::positivity_violation(p);
    double table_err = 0.0;
    const std::array<double, 2> angle_of = {std::numbers::pi, 0.0};
    for (int a : {+1, -1})
      for (int b : {+1, -1})
        for (int x : {0, 1})
          for (int y : {0, 1})
            table_err = std::max(
                table_err,
                std::abs(p.probability(a, b, angle_of[static_cast<size_t>(x)],
                                       angle_of[static_cast<size_t>(y)]) -
                         rotbox::bell::pr_table(a, b, x, y)));
    const TrigPoly cond =
        rotbox::bell::conditional_box(p, 0, -1, std::numbers::pi / 3);
    const bool biased = !rotbox::bell::is_unbiased(cond);
    const bool pass = ns < 1e-12 && norm < 1e-12 && pos < 1e-12 &&
                      table_err < 1e-12 && biased;
    emit(json{{"no_signalling_error", ns},
              {"normalization_error", norm},
              {"positivity_violation", pos},
              {"pr_table_error", table_err},
              {"conditional_c0_at_pi_over_3", cond.c_coeff(0)},
              {"locally_unbiased", !biased},
              {"pass", pass}});
    return pass ? kOk : kInfeasible;
  }

  if (nag->parsed()) {
    auto t = io::tensor_from_json(load_json(nag_tensor));
    auto res = rotbox::bell::nagata_inequality(t, rotbox::Exec::Parallel, nag_seed);
    emit(json{{"lhs", res.lhs},
              {"rhs", res.rhs},
              {"t_max", res.t_max},
              {"argmax", res.argmax},
              {"violated", res.violated}});
    return res.violated ? kInfeasible : kOk;
  }

  if (apx->parsed()) {
    std::function<double(double)> f;
    if (!apx_poly.empty()) {
      const TrigPoly p = load_poly(apx_poly);
      f = [p](double t) { return p.evaluate(t); };
    } else if (apx_preset == "half") {
      f = [](double) { return 0.5; };
    } else if (apx_preset == "cosine" || apx_preset.empty()) {
      f = [](double t) { return 0.5 * (1.0 + std::cos(t)); };
    } else {
      std::cerr << "unknown preset\n";
      return kUsage;
    }
    auto res = rotbox::qset::approximate_continuous(f, apx_two_j, apx_width);
    emit(json{{"epsilon", res.epsilon},
              {"bound", res.bound},
              {"averaging_error", res.averaging_error},
              {"measured_sup_error", res.measured_sup_error},
              {"clip_magnitude", res.clip_magnitude},
              {"realization", io::realization_to_json(res.realization)}});
    return kOk;
  }

  if (fx->parsed()) {
    json out = json::array();
    for (const auto& f : rotbox::fixtures::all())
      out.push_back({{"name", f.name},
                     {"description", f.description},
                     {"two_j", f.two_j},
                     {"pass", f.verify().pass}});
    emit(out);
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
}
