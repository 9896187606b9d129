// polaris: polarization multipoles, Majorana constellations, spherical
// designs, unpolarized-state search, and rotation metrology for spin-S states.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polaris/design.hpp"
#include "polaris/fixtures.hpp"
#include "polaris/io.hpp"
#include "polaris/metrology.hpp"
#include "polaris/search.hpp"

namespace {

using polaris::Json;

bool g_no_meta = false;

void emit(Json j) {
  if (!g_no_meta) {
    const auto now = std::chrono::system_clock::now();
    j["meta"] = {{"generated_at",
                  std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()}};
  }
  std::cout << j.dump(2) << '\n';
}

Eigen::Vector3d parse_axis(const std::string& s) {
  std::istringstream in(s);
  Eigen::Vector3d v;
  char c1 = 0, c2 = 0;
  if (!(in >> v.x() >> c1 >> v.y() >> c2 >> v.z()) || c1 != ',' || c2 != ',') {
    throw std::invalid_argument("--axis: expected x,y,z");
  }
  if (v.norm() < 1e-12) throw std::invalid_argument("--axis: zero vector");
  return v.normalized();
}

std::vector<polaris::SpherePoint> load_points(const std::string& path) {
  return polaris::points_from_json(polaris::read_json_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-S polarization multipole toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--no-meta", g_no_meta, "omit timestamp metadata for byte-stable output");

  std::string state_arg, points_arg, out_arg = "json", axis_arg = "0,0,1", spin_arg;
  int m_arg = 1, nt = 64, np = 128, tmax = 10, starts = 64, axes = 2000;
  long long seed = 0;
  double angle = 0.0, eps = 1e-8;
  bool verify = false, per_axis = false;

  auto* c_mult = app.add_subcommand("multipoles", "state multipole spectrum");
  c_mult->add_option("--state", state_arg, "state JSON file or fixture:S")->required();
  c_mult->add_option("--out", out_arg, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* c_cum = app.add_subcommand("cumulative", "cumulative distribution A_M and its maximum");
  c_cum->add_option("--state", state_arg)->required();
  c_cum->add_option("--M", m_arg, "highest multipole order")->required();

  auto* c_con = app.add_subcommand("constellation", "Majorana constellation of a state");
  c_con->add_option("--state", state_arg)->required();

  auto* c_rec = app.add_subcommand("reconstruct", "state from constellation points");
  c_rec->add_option("--points", points_arg, "constellation JSON file")->required();

  auto* c_q = app.add_subcommand("qgrid", "Husimi Q function on a theta/phi grid");
  c_q->add_option("--state", state_arg)->required();
  c_q->add_option("--nt", nt, "theta samples");
  c_q->add_option("--np", np, "phi samples");
  std::string qout;
  c_q->add_option("--out", qout, "output CSV path")->required();

  auto* c_des = app.add_subcommand("design-order", "spherical t-design order of a point set");
  c_des->add_option("--points", points_arg)->required();
  c_des->add_option("--tmax", tmax, "highest order tested");

  auto* c_sea = app.add_subcommand("search", "minimize A_M over pure states");
  c_sea->add_option("--S", spin_arg, "spin, e.g. 7/2")->required();
  c_sea->add_option("--M", m_arg)->required();
  c_sea->add_option("--starts", starts);
  c_sea->add_option("--seed", seed);

  auto* c_max = app.add_subcommand("max-order", "highest M whose A_M can be driven to zero");
  c_max->add_option("--S", spin_arg)->required();
  c_max->add_option("--starts", starts);
  c_max->add_option("--seed", seed);
  c_max->add_option("--eps", eps, "zero threshold");

  auto* c_ov = app.add_subcommand("overlap", "rotation overlap |<psi|U|psi>|^2");
  c_ov->add_option("--state", state_arg)->required();
  c_ov->add_option("--axis", axis_arg, "unit axis as x,y,z");
  c_ov->add_option("--angle", angle, "rotation angle in radians")->required();

  auto* c_sen = app.add_subcommand("sensitivity", "rotation sensitivity Var(n.S) statistics");
  c_sen->add_option("--state", state_arg)->required();
  c_sen->add_option("--axes", axes);
  c_sen->add_option("--seed", seed);
  c_sen->add_flag("--per-axis", per_axis, "include the per-axis table");

  auto* c_fix = app.add_subcommand("fixtures", "tabulated reference states");
  c_fix->add_flag("--verify", verify, "run verification checks per record");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_mult) {
      const auto spec = polaris::multipoles(polaris::load_state(state_arg));
      if (out_arg == "csv") polaris::write_spectrum_csv(std::cout, spec);
      else emit(polaris::spectrum_to_json(spec));
    } else if (*c_cum) {
      const auto psi = polaris::load_state(state_arg);
      emit({{"S", psi.spin().str()},
            {"M", m_arg},
            {"A_M", polaris::cumulative_pure(psi, m_arg)},
            {"max_value", polaris::max_value(psi.spin(), m_arg)}});
    } else if (*c_con) {
      emit(polaris::constellation_to_json(polaris::constellation(polaris::load_state(state_arg))));
    } else if (*c_rec) {
      const polaris::Json j = polaris::read_json_file(points_arg);
      emit(polaris::state_to_json(
          polaris::constellation_to_state(polaris::constellation_from_json(j))));
    } else if (*c_q) {
      const auto grid = polaris::q_grid(polaris::load_state(state_arg), nt, np);
      std::ofstream os(qout);
      if (!os) throw std::runtime_error("cannot write " + qout);
      polaris::write_qgrid_csv(os, grid);
    } else if (*c_des) {
      const auto pts = load_points(points_arg);
      const auto res = polaris::moment_residuals(pts, tmax);
      Json residuals = Json::array();
      for (int l = 1; l <= tmax; ++l) {
        residuals.push_back({{"l", l}, {"max_abs_moment", res[l - 1]}});
      }
      emit({{"points", pts.size()},
            {"design_order", polaris::design_order(pts, tmax)},
            {"residuals", residuals}});
    } else if (*c_sea) {
      polaris::SearchConfig cfg;
      cfg.S = polaris::HalfInt::parse(spin_arg);
      cfg.M = m_arg;
      cfg.multistarts = starts;
      cfg.rng_seed = static_cast<std::uint64_t>(seed);
      const auto res = polaris::minimize(cfg);
      emit({{"config",
             {{"S", cfg.S.str()},
              {"M", cfg.M},
              {"multistarts", cfg.multistarts},
              {"max_iters", cfg.max_iters},
              {"seed", cfg.rng_seed}}},
            {"best_value", res.best_value},
            {"certified_order", res.certified_order},
            {"starts_converged", res.starts_converged},
            {"iterations_total", res.iterations_total},
            {"note", "nonzero best_value is evidence of nonexistence, not proof"},
            {"best_state", polaris::state_to_json(res.best_state)},
            {"constellation",
             polaris::constellation_to_json(polaris::constellation(res.best_state))}});
    } else if (*c_max) {
      polaris::SearchConfig cfg;
      cfg.multistarts = starts;
      cfg.rng_seed = static_cast<std::uint64_t>(seed);
      const polaris::HalfInt S = polaris::HalfInt::parse(spin_arg);
      emit({{"S", S.str()}, {"max_killable_order", polaris::max_killable_order(S, cfg, eps)}});
    } else if (*c_ov) {
      const auto psi = polaris::load_state(state_arg);
      const polaris::AxisAngle r{parse_axis(axis_arg), angle};
      emit({{"overlap", polaris::rotation_overlap(psi, r)}});
    } else if (*c_sen) {
      const auto psi = polaris::load_state(state_arg);
      const auto st = polaris::sensitivity_scan(psi, axes, static_cast<std::uint64_t>(seed));
      Json j{{"axes", axes}, {"min", st.min}, {"max", st.max}, {"mean", st.mean}};
      if (per_axis) {
        Json table = Json::array();
        for (const auto& n : polaris::fibonacci_axes(axes, static_cast<std::uint64_t>(seed))) {
          table.push_back({{"axis", {n.x(), n.y(), n.z()}},
                           {"sensitivity", polaris::sensitivity(psi, n)}});
        }
        j["per_axis"] = std::move(table);
      }
      emit(j);
    } else if (*c_fix) {
      Json out = Json::array();
      for (const polaris::HalfInt S : polaris::tabulated_spins()) {
        const auto& rec = polaris::load_fixture(S);
        const auto psi = rec.state();
        Json j{{"S", S.str()},
               {"claimed_M", rec.claimed_M},
               {"constellation_name", rec.constellation_name},
               {"design_relation", rec.design_relation == polaris::DesignRelation::same ? "same"
                                   : rec.design_relation == polaris::DesignRelation::similar
                                       ? "similar"
                                       : "different"},
               {"state", polaris::state_to_json(psi)},
               {"constellation", polaris::constellation_to_json(polaris::constellation(psi))}};
        if (rec.design_t) j["design_t"] = *rec.design_t;
        if (verify) {
          const auto rep = polaris::verify_fixture(S);
          j["verify"] = {{"norm_error", rep.norm_error},
                         {"cumulative_at_M", rep.cumulative_at_M},
                         {"passed", rep.passed}};
          if (rep.cumulative_next) j["verify"]["cumulative_next"] = *rep.cumulative_next;
          if (rep.design_order) j["verify"]["design_order"] = *rep.design_order;
        }
        out.push_back(std::move(j));
      }
      emit({{"fixtures", out}});
    }
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
