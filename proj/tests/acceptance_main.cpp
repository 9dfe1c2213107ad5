// Acceptance harness: one pass/fail line per criterion, exit code equals the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "qlc/drivers.hpp"
#include "qlc/manufactured.hpp"
#include "qlc/newton.hpp"

using namespace qlc;

namespace {

std::mt19937 g_rng(987654321);

Vec5 random_vec5(double scale = 1.0) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec5 v;
  for (int i = 0; i < 5; ++i) v[i] = scale * g(g_rng);
  return v;
}

QTensor random_physical(double min_margin) {
  std::uniform_real_distribution<double> u(0.0, 0.55);
  for (;;) {
    Vec5 v = random_vec5();
    QTensor q(v.normalized() * u(g_rng));
    if (physicality_margin(q) >= min_margin) return q;
  }
}

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// --------------------------------------------------------------------------

// 1. LDG convergence on n = 2, 4, 8, 16 with anisotropic elastic constants:
//    finest observed H1 order in [0.8, 1.2].
void criterion_1() {
  KeyValueConfig cfg;
  cfg.set("L1", "1");
  cfg.set("L2", "0.2");
  cfg.set("L3", "0.2");
  cfg.set("potential", "ldg");
  auto rows = run_convergence(cfg, {2, 4, 8, 16}, /*with_kantorovich=*/false);
  for (const auto& r : rows)
    expect(std::isfinite(r.h1_error) && r.h1_error > 0,
           "nonfinite H1 error at n=" + std::to_string(r.n));
  double order = rows.back().observed_order_h1;
  expect(order >= 0.8 && order <= 1.2,
         "finest LDG H1 order " + std::to_string(order) + " outside [0.8,1.2]");
}

// 2. BM convergence on n = 2, 4, 8 (T=2, kappa=1, Lebedev degree 23):
//    finest H1 order in [0.7, 1.3] with all iterates physical.
void criterion_2() {
  KeyValueConfig cfg;
  cfg.set("L1", "1");
  cfg.set("L2", "0.2");
  cfg.set("L3", "0.2");
  cfg.set("potential", "bm");
  cfg.set("T", "2");
  cfg.set("kappa", "1");
  cfg.set("lebedev_degree", "23");
  cfg.set("dual_tol", "1e-10");
  auto rows = run_convergence(cfg, {2, 4, 8}, /*with_kantorovich=*/false);
  for (const auto& r : rows)
    expect(r.min_margin > 0,
           "unphysical iterate at n=" + std::to_string(r.n));
  double order = rows.back().observed_order_h1;
  expect(order >= 0.7 && order <= 1.3,
         "finest BM H1 order " + std::to_string(order) + " outside [0.7,1.3]");
}

// 3. Singular-potential oracles: f(0), Hessian at 0, duality round trip,
//    finite-difference consistency and convexity.
void criterion_3() {
  SphereRule rule = lebedev_rule(23);
  MaierSaupeState st0 = solve_multiplier(QTensor{}, rule);
  expect(std::abs(f_value(st0) + std::log(4.0 * M_PI)) <= 1e-10,
         "f(0) != -ln(4 pi)");
  expect((f_hessian(st0) - 7.5 * Mat5::Identity()).cwiseAbs().maxCoeff() <=
             1e-8,
         "Hessian at 0 is not 7.5 I");

  for (int i = 0; i < 100; ++i) {
    QTensor q = random_physical(0.02);
    MaierSaupeState st = solve_multiplier(q, rule);
    double gap = (moment_map(st.lambda, rule) - q).frobenius_norm();
    expect(gap <= 1e-10, "duality round trip gap " + std::to_string(gap));
  }

  // The dual solves inside the difference quotients use a tightened
  // tolerance so truncation (O(h^2)) dominates the error.
  for (int i = 0; i < 20; ++i) {
    QTensor q = random_physical(0.02);
    MaierSaupeState st = solve_multiplier(q, rule, std::nullopt, 1e-12);
    const double h = 1e-5;
    for (int c = 0; c < 5; ++c) {
      Vec5 p = q.coeffs, m = q.coeffs;
      p[c] += h;
      m[c] -= h;
      MaierSaupeState stp = solve_multiplier(QTensor(p), rule, st.lambda, 1e-12);
      MaierSaupeState stm = solve_multiplier(QTensor(m), rule, st.lambda, 1e-12);
      double fd = (f_value(stp) - f_value(stm)) / (2 * h);
      expect(std::abs(fd - st.lambda.coeffs[c]) <= 1e-6,
             "gradient FD mismatch");
      Vec5 col = (stp.lambda.coeffs - stm.lambda.coeffs) / (2 * h);
      expect((col - f_hessian(st).col(c)).cwiseAbs().maxCoeff() <= 1e-5,
             "Hessian FD mismatch");
    }
  }

  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    QTensor a = random_physical(0.02);
    QTensor b = random_physical(0.02);
    double t = u(g_rng);
    QTensor mid(t * a.coeffs + (1 - t) * b.coeffs);
    double fa = f_value(solve_multiplier(a, rule));
    double fb = f_value(solve_multiplier(b, rule));
    double fm = f_value(solve_multiplier(mid, rule));
    expect(fm <= t * fa + (1 - t) * fb + 1e-9, "convexity violated");
  }
}

// 4. Boundary blow-up sweep: f increases as the minimal eigenvalue approaches
//    -1/3 and f + (1/2) ln(t) stays bounded.
void criterion_4() {
  SphereRule rule = lebedev_rule(35);
  double prev = -1e300;
  std::optional<QTensor> warm;
  for (double t : {1e-1, 1e-2, 1e-3}) {
    QTensor q = uniaxial(1.0 - 3.0 * t, Vec3(0, 0, 1));
    MaierSaupeState st = solve_multiplier(q, rule, warm);
    warm = st.lambda;
    double f = f_value(st);
    expect(f > prev, "f not increasing toward the boundary");
    prev = f;
    double shifted = f + 0.5 * std::log(t);
    expect(std::isfinite(shifted) && std::abs(shifted) < 50.0,
           "f + (1/2) ln t unbounded");
  }
}

// 5. Eigenvalue stability (Weyl): 1000 random pairs.
void criterion_5() {
  for (int i = 0; i < 1000; ++i) {
    Mat3 a = to_matrix(QTensor(random_vec5()));
    Mat3 b = to_matrix(QTensor(random_vec5()));
    EigenTriple la = eigenvalues_traceless(a);
    EigenTriple lb = eigenvalues_traceless(b);
    for (int k = 0; k < 3; ++k)
      expect(std::abs(la.lambda[k] - lb.lambda[k]) <=
                 (a - b).norm() + 1e-10,
             "Weyl bound violated");
  }
}

// 6. 20 random elliptic triples give coercive matrices; violating triples
//    are rejected.
void criterion_6() {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int accepted = 0;
  while (accepted < 20) {
    ElasticConstants c;
    c.L1 = 0.2 + 1.8 * u(g_rng);
    c.L3 = -0.9 * c.L1 + u(g_rng) * 2.7 * c.L1;  // inside (-L1, 2 L1)
    double lb = -0.6 * c.L1 - 0.1 * c.L3;
    c.L2 = lb + 0.05 + 2.0 * u(g_rng);
    if (!ellipticity_check(c).ok) continue;
    ++accepted;
    ElasticMatrices mats = assemble_elastic(space, c);
    Eigen::MatrixXd a(mats.ff);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        0.5 * (a + a.transpose()));
    expect(es.eigenvalues().minCoeff() > 0,
           "elliptic triple yields non-coercive matrix");
  }
  for (ElasticConstants c :
       {ElasticConstants{1, 0, 2.5}, ElasticConstants{1, -0.8, 0},
        ElasticConstants{-1, 0, 0}}) {
    bool threw = false;
    try {
      assemble_elastic(space, c);
    } catch (const EllipticityError&) {
      threw = true;
    }
    expect(threw, "non-elliptic triple was not rejected");
  }
}

// 7. Discrete inf-sup stays positive across n = 2, 3, 4 for both potentials
//    with no collapse toward zero under refinement.
void criterion_7() {
  for (const std::string kind : {"ldg", "bm"}) {
    std::vector<double> betas;
    for (int n : {2, 3, 4}) {
      TetMesh mesh = unit_cube_mesh(n);
      FeSpace space(mesh);
      ElasticConstants c{1.0, 0.2, 0.2};
      std::unique_ptr<BulkPotential> pot;
      if (kind == "ldg")
        pot = std::make_unique<LdgPotential>(LdgParams{1, 1, 1});
      else
        pot = std::make_unique<BmPotential>(BmParams{2.0, 1.0},
                                            lebedev_rule(23));
      DiscreteField at = interpolate(space, ManufacturedSolution::value);
      double beta = discrete_infsup(space, c, pot.get(), at);
      expect(beta > 0, "beta_h <= 0 for " + kind + " at n=" +
                           std::to_string(n));
      betas.push_back(beta);
    }
    double lo = *std::min_element(betas.begin(), betas.end());
    double hi = *std::max_element(betas.begin(), betas.end());
    expect(lo > 0.05 * hi, "beta_h collapses under refinement for " + kind);
  }
}

// 8. Kantorovich radius h* decreases under refinement, is below 1/2 at the
//    finest level, and Newton converges superlinearly.
void criterion_8() {
  KeyValueConfig cfg;
  cfg.set("L1", "1");
  cfg.set("L2", "0.2");
  cfg.set("L3", "0.2");
  cfg.set("potential", "ldg");
  auto rows = run_convergence(cfg, {2, 3, 4}, /*with_kantorovich=*/true);
  for (std::size_t i = 1; i < rows.size(); ++i)
    expect(rows[i].h_star < rows[i - 1].h_star, "h* not decreasing");
  expect(rows.back().h_star <= 0.5, "h* above 1/2 at the finest level");

  TetMesh mesh = unit_cube_mesh(4);
  FeSpace space(mesh);
  ElasticConstants c{1.0, 0.2, 0.2};
  LdgPotential pot({1, 1, 1});
  Eigen::VectorXd forcing = assemble_exact_weak_residual(
      space, c, pot, ManufacturedSolution::value,
      ManufacturedSolution::gradient, 6);
  DiscreteField initial = interpolate(space, ManufacturedSolution::value);
  ElasticMatrices elastic = assemble_elastic(space, c);
  H1Metric metric(space);
  double r0 = metric.dual_norm(
      detail::full_residual(space, initial, elastic, pot, forcing, 4));
  auto [solution, report] = newton_solve(space, c, pot, initial, {}, forcing);
  expect(report.converged && report.final_residual <= 1e-10,
         "Newton did not converge to tolerance");
  std::vector<double> res{r0};
  for (const auto& it : report.iterates) res.push_back(it.residual);
  expect(res.size() >= 3, "too few Newton iterations to assess decay");
  for (std::size_t k = 1; k + 1 < res.size(); ++k)
    expect(res[k + 1] / res[k] <= 0.5 * res[k] / res[k - 1],
           "Newton residual decay is not superlinear");
}

// 9. Interpolation error orders for the smooth reference field:
//    H1 order near 1 and L2 order near 2 (within 0.2) at the finest pair.
void criterion_9() {
  double prev_h = 0, prev_h1 = 0, prev_l2 = 0;
  double order_h1 = 0, order_l2 = 0;
  for (int n : {2, 4, 8, 16}) {
    TetMesh mesh = unit_cube_mesh(n);
    FeSpace space(mesh);
    DiscreteField f = interpolate(space, ManufacturedSolution::value);
    ErrorNorms err = error_norms(space, f, ManufacturedSolution::value,
                                 ManufacturedSolution::gradient, 6);
    if (prev_h > 0) {
      double lh = std::log(prev_h / mesh.h_max);
      order_h1 = std::log(prev_h1 / err.h1()) / lh;
      order_l2 = std::log(prev_l2 / err.l2) / lh;
    }
    prev_h = mesh.h_max;
    prev_h1 = err.h1();
    prev_l2 = err.l2;
  }
  expect(std::abs(order_h1 - 1.0) <= 0.2,
         "H1 interpolation order " + std::to_string(order_h1));
  expect(std::abs(order_l2 - 2.0) <= 0.2,
         "L2 interpolation order " + std::to_string(order_l2));
}

// 10. Assembled tangent agrees with a finite-difference Jacobian of the
//     residual for both potentials.
void criterion_10() {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  DiscreteField field = interpolate(space, ManufacturedSolution::value);
  LdgPotential ldg({1, 1, 1});
  BmPotential bm({2.0, 1.0}, lebedev_rule(23));
  for (const BulkPotential* pot :
       std::initializer_list<const BulkPotential*>{&ldg, &bm}) {
    Eigen::MatrixXd tangent(assemble_bulk_tangent(space, field, *pot));
    int fv = space.free_vertices[0];
    const double h = 1e-6;
    Eigen::MatrixXd fd(5, 5);
    for (int c = 0; c < 5; ++c) {
      DiscreteField p = field, m = field;
      p.values[5 * fv + c] += h;
      m.values[5 * fv + c] -= h;
      fd.col(c) = (assemble_bulk_residual(space, p, *pot) -
                   assemble_bulk_residual(space, m, *pot)) /
                  (2 * h);
    }
    double gap = (tangent - fd).cwiseAbs().maxCoeff();
    expect(gap <= 1e-5, "tangent vs FD gap " + std::to_string(gap));
  }
}

using CriterionFn = void (*)();

struct Criterion {
  const char* name;
  CriterionFn fn;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"LDG manufactured convergence, O(h) energy-norm rate", criterion_1},
      {"BM manufactured convergence with physical iterates", criterion_2},
      {"singular potential oracles (duality, FD, convexity)", criterion_3},
      {"singular potential blow-up toward the physical boundary",
       criterion_4},
      {"eigenvalue stability (Weyl bound, 1000 pairs)", criterion_5},
      {"ellipticity: coercive assembly, violators rejected", criterion_6},
      {"discrete inf-sup positive across refinement", criterion_7},
      {"Kantorovich radius decreasing, quadratic Newton decay", criterion_8},
      {"interpolation orders (H1 ~ 1, L2 ~ 2)", criterion_9},
      {"tangent consistency with finite differences", criterion_10},
  };

  int failures = 0;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.fn();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
      ++failures;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
      ++failures;
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("[%2d] %s %s (%.1fs)%s%s\n", idx, verdict.c_str(), c.name,
                secs, detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
