#pragma once

// Experiment drivers behind the CLI subcommands: single solve, convergence
// study against the manufactured solution, inf-sup sweep, and the singular
// potential tabulation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qlc/assembly.hpp"
#include "qlc/config.hpp"
#include "qlc/fe_space.hpp"
#include "qlc/gmsh_io.hpp"
#include "qlc/manufactured.hpp"
#include "qlc/mesh.hpp"
#include "qlc/newton.hpp"
#include "qlc/vtk_writer.hpp"

namespace qlc {

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace detail

struct RunSetup {
  TetMesh mesh;
  ElasticConstants elastic;
  std::unique_ptr<BulkPotential> potential;
  std::function<QTensor(const Vec3&)> boundary;
  NewtonConfig newton;
  bool allow_nonelliptic = false;
  int quad_degree = 4;
  std::string potential_kind;  // "ldg" or "bm"
};

inline RunSetup build_setup(const KeyValueConfig& cfg) {
  RunSetup setup;
  std::string domain = cfg.get("domain", "cube");
  if (domain == "cube") {
    setup.mesh = unit_cube_mesh(cfg.get_int("n", 4));
  } else if (domain == "gmsh") {
    setup.mesh = read_gmsh(cfg.require("mesh"));
  } else {
    throw ConfigError("domain must be 'cube' or 'gmsh'");
  }

  setup.elastic = {cfg.get_double("L1", 1.0), cfg.get_double("L2", 0.0),
                   cfg.get_double("L3", 0.0)};
  setup.allow_nonelliptic = cfg.get_int("allow_nonelliptic", 0) != 0;
  if (!setup.allow_nonelliptic && !ellipticity_check(setup.elastic).ok)
    throw EllipticityError(
        "elastic constants violate the ellipticity conditions "
        "(use --allow-nonelliptic to proceed anyway)");

  setup.potential_kind = cfg.get("potential", "ldg");
  if (setup.potential_kind == "ldg") {
    LdgParams p{cfg.get_double("a", 1.0), cfg.get_double("b", 1.0),
                cfg.get_double("c", 1.0)};
    p.validate();
    setup.potential = std::make_unique<LdgPotential>(p);
  } else if (setup.potential_kind == "bm") {
    BmParams p{cfg.get_double("T", 2.0), cfg.get_double("kappa", 1.0)};
    p.validate();
    setup.potential = std::make_unique<BmPotential>(
        p, lebedev_rule(cfg.get_int("lebedev_degree", 23)),
        cfg.get_double("dual_tol", 1e-10));
  } else {
    throw ConfigError("potential must be 'ldg' or 'bm'");
  }

  std::string boundary = cfg.get("boundary", "uniaxial");
  if (boundary == "uniaxial") {
    double s = cfg.get_double("s", 0.3);
    setup.boundary = [s](const Vec3&) { return uniaxial(s, Vec3(0, 0, 1)); };
  } else if (boundary == "twisted") {
    double s = cfg.get_double("s", 0.3);
    double twist = cfg.get_double("twist", M_PI / 2.0);
    setup.boundary = [s, twist](const Vec3& x) {
      Vec3 n(std::cos(twist * x.z()), std::sin(twist * x.z()), 0.0);
      return uniaxial(s, n);
    };
  } else if (boundary == "manufactured") {
    setup.boundary = ManufacturedSolution::value;
  } else {
    throw ConfigError("boundary must be 'uniaxial', 'twisted' or "
                      "'manufactured'");
  }

  setup.newton.abs_tol = cfg.get_double("abs_tol", 1e-10);
  setup.newton.rel_tol = cfg.get_double("rel_tol", 0.0);
  setup.newton.max_iters = cfg.get_int("max_iters", 30);
  setup.newton.min_margin = cfg.get_double("min_margin", 1e-3);
  setup.newton.damping = cfg.get_int("damping", 1) != 0;
  setup.quad_degree = cfg.get_int("quad_degree", 4);
  return setup;
}

// Initial iterate: solve the pure elastic problem with the given Dirichlet
// data; fall back to plain interpolation of the boundary preset if the
// extension leaves the BM safeguard margin.
inline DiscreteField elastic_extension(const FeSpace& space,
                                       const RunSetup& setup) {
  DiscreteField field = interpolate(space, setup.boundary);
  ElasticMatrices elastic =
      assemble_elastic(space, setup.elastic, setup.allow_nonelliptic);
  Eigen::VectorXd ax = elastic.full * field.values;
  Eigen::VectorXd rhs(space.n_free_dofs());
  for (std::size_t i = 0; i < space.free_vertices.size(); ++i)
    rhs.segment<5>(5 * i) = -ax.segment<5>(5 * space.free_vertices[i]);
  Eigen::VectorXd x = linear_solve(elastic.ff, rhs, 1e-10);
  DiscreteField ext = field;
  detail::add_free(ext, space, x, 1.0);
  if (setup.potential->requires_physical() &&
      ext.min_vertex_margin() < setup.newton.min_margin)
    return field;  // interpolated boundary preset, physical by construction
  return ext;
}

inline int cmd_solve(const KeyValueConfig& cfg, const std::string& out_dir) {
  RunSetup setup = build_setup(cfg);
  FeSpace space(setup.mesh);
  DiscreteField initial = elastic_extension(space, setup);
  auto [solution, report] =
      newton_solve(space, setup.elastic, *setup.potential, initial,
                   setup.newton, std::nullopt, setup.quad_degree);

  std::filesystem::create_directories(out_dir);
  write_vtk(solution, out_dir + "/solution.vtk");
  std::ofstream rep(out_dir + "/report.txt");
  rep << "converged " << (report.converged ? 1 : 0) << "\n";
  rep << "final_residual " << detail::fmt17(report.final_residual) << "\n";
  rep << "final_margin " << detail::fmt17(report.final_margin) << "\n";
  rep << "energy "
      << detail::fmt17(energy(space, solution, setup.elastic,
                              *setup.potential, setup.quad_degree))
      << "\n";
  rep << "iterations " << report.iterates.size() << "\n";
  for (std::size_t i = 0; i < report.iterates.size(); ++i)
    rep << "iter " << i << " residual "
        << detail::fmt17(report.iterates[i].residual) << " step "
        << detail::fmt17(report.iterates[i].step_norm) << "\n";
  return report.converged ? 0 : 3;
}

struct ConvergenceRow {
  int n = 0;
  double h_max = 0.0;
  std::size_t dofs = 0;
  double h1_error = 0.0;
  double l2_error = 0.0;
  double observed_order_h1 = std::numeric_limits<double>::quiet_NaN();
  double observed_order_l2 = std::numeric_limits<double>::quiet_NaN();
  int newton_iters = 0;
  double h_star = std::numeric_limits<double>::quiet_NaN();
  double min_margin = 0.0;
};

inline std::vector<ConvergenceRow> run_convergence(
    const KeyValueConfig& cfg, const std::vector<int>& levels,
    bool with_kantorovich = true) {
  std::vector<ConvergenceRow> rows;
  for (int n : levels) {
    TetMesh mesh = unit_cube_mesh(n);
    FeSpace space(mesh);
    KeyValueConfig level_cfg = cfg;
    level_cfg.set("domain", "cube");
    level_cfg.set("n", std::to_string(n));
    level_cfg.set("boundary", "manufactured");
    RunSetup setup = build_setup(level_cfg);

    Eigen::VectorXd forcing = assemble_exact_weak_residual(
        space, setup.elastic, *setup.potential, ManufacturedSolution::value,
        ManufacturedSolution::gradient, 6);
    DiscreteField initial = interpolate(space, ManufacturedSolution::value);
    auto [solution, report] =
        newton_solve(space, setup.elastic, *setup.potential, initial,
                     setup.newton, forcing, setup.quad_degree);
    ErrorNorms err =
        error_norms(space, solution, ManufacturedSolution::value,
                    ManufacturedSolution::gradient, 6);

    ConvergenceRow row;
    row.n = n;
    row.h_max = mesh.h_max;
    row.dofs = space.n_free_dofs();
    row.h1_error = err.h1();
    row.l2_error = err.l2;
    row.newton_iters = static_cast<int>(report.iterates.size());
    row.min_margin = report.final_margin;
    if (with_kantorovich && space.n_free_dofs() <= 4000) {
      KantorovichRecord kr = kantorovich_estimates(
          space, setup.elastic, *setup.potential, initial, forcing,
          setup.quad_degree);
      row.h_star = kr.h_star;
    }
    if (!rows.empty()) {
      const ConvergenceRow& prev = rows.back();
      double lh = std::log(prev.h_max / row.h_max);
      row.observed_order_h1 = std::log(prev.h1_error / row.h1_error) / lh;
      row.observed_order_l2 = std::log(prev.l2_error / row.l2_error) / lh;
    }
    rows.push_back(row);
  }
  return rows;
}

inline int cmd_convergence(const KeyValueConfig& cfg,
                           const std::string& out_dir) {
  build_setup(cfg);  // validate before the sweep starts
  std::vector<int> levels = cfg.get_int_list("levels", {2, 4, 8});
  auto rows = run_convergence(cfg, levels);
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir + "/convergence.csv");
  csv << "n,h_max,dofs,h1_error,l2_error,observed_order_h1,observed_order_l2,"
         "newton_iters,h_star\n";
  for (const auto& r : rows)
    csv << r.n << "," << detail::fmt17(r.h_max) << "," << r.dofs << ","
        << detail::fmt17(r.h1_error) << "," << detail::fmt17(r.l2_error) << ","
        << detail::fmt17(r.observed_order_h1) << ","
        << detail::fmt17(r.observed_order_l2) << "," << r.newton_iters << ","
        << detail::fmt17(r.h_star) << "\n";
  return 0;
}

inline int cmd_infsup(const KeyValueConfig& cfg, const std::string& out_dir) {
  std::vector<int> levels = cfg.get_int_list("levels", {2, 3, 4});
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir + "/infsup.csv");
  csv << "n,h,beta_h\n";
  for (int n : levels) {
    TetMesh mesh = unit_cube_mesh(n);
    FeSpace space(mesh);
    KeyValueConfig level_cfg = cfg;
    level_cfg.set("domain", "cube");
    level_cfg.set("n", std::to_string(n));
    RunSetup setup = build_setup(level_cfg);
    DiscreteField at = interpolate(space, ManufacturedSolution::value);
    double beta = discrete_infsup(space, setup.elastic, setup.potential.get(),
                                  at, setup.quad_degree);
    csv << n << "," << detail::fmt17(mesh.h_max) << "," << detail::fmt17(beta)
        << "\n";
  }
  return 0;
}

inline int cmd_potential_table(const KeyValueConfig& cfg,
                               const std::string& out_dir) {
  BmParams params{cfg.get_double("T", 2.0), cfg.get_double("kappa", 1.0)};
  params.validate();
  SphereRule rule = lebedev_rule(cfg.get_int("lebedev_degree", 23));
  double dual_tol = cfg.get_double("dual_tol", 1e-10);
  double s_min = cfg.get_double("s_min", -0.99 * 0.5);
  double s_max = cfg.get_double("s_max", 0.99);
  int steps = cfg.get_int("steps", 50);

  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir + "/potential.csv");
  csv << "s,lambda_min,f,grad_norm,hess_min_eig,hess_max_eig\n";
  std::optional<QTensor> warm;
  for (int i = 0; i < steps; ++i) {
    double s = steps == 1 ? s_min
                          : s_min + (s_max - s_min) * i / double(steps - 1);
    QTensor q = uniaxial(s, Vec3(0, 0, 1));
    if (!(physicality_margin(q) > 0))
      throw NotPhysicalError("potential-table: sweep point s=" +
                             std::to_string(s) + " is not physical");
    MaierSaupeState st = solve_multiplier(q, rule, warm, dual_tol);
    warm = st.lambda;
    Mat5 h = f_hessian(st);
    Eigen::SelfAdjointEigenSolver<Mat5> es(h);
    csv << detail::fmt17(s) << ","
        << detail::fmt17(eigenvalues(q).min()) << ","
        << detail::fmt17(f_value(st)) << ","
        << detail::fmt17(st.lambda.frobenius_norm()) << ","
        << detail::fmt17(es.eigenvalues().minCoeff()) << ","
        << detail::fmt17(es.eigenvalues().maxCoeff()) << "\n";
  }
  return 0;
}

}  // namespace qlc
