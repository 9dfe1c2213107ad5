#pragma once

// Newton solve of the discrete problem with physicality safeguard, the
// H1-dual residual norm, Kantorovich diagnostics and the discrete inf-sup
// constant.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <optional>
#include <random>
#include <vector>

#include "qlc/assembly.hpp"
#include "qlc/errors.hpp"
#include "qlc/fe_space.hpp"

namespace qlc {

// Direct sparse solve with a relative-residual contract.
inline Eigen::VectorXd linear_solve(const SpMat& a, const Eigen::VectorXd& b,
                                    double tol = 1e-12) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw LinearSolveError("linear_solve: dimension mismatch", 0.0);
  double bnorm = b.norm();
  if (bnorm == 0.0) return Eigen::VectorXd::Zero(b.size());
  Eigen::SparseLU<SpMat> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success)
    throw LinearSolveError("linear_solve: factorization failed",
                           std::numeric_limits<double>::infinity());
  Eigen::VectorXd x = lu.solve(b);
  double res = (a * x - b).norm() / bnorm;
  if (!(res <= tol))
    throw LinearSolveError("linear_solve: residual contract violated", res);
  return x;
}

// H1 metric on the free dofs: block-diagonal scalar mass + stiffness.
class H1Metric {
 public:
  explicit H1Metric(const FeSpace& space)
      : space_(&space),
        gram_(restrict_scalar_free(space,
                                   SpMat(scalar_mass(space) +
                                         scalar_stiffness(space)))) {
    ldlt_.compute(gram_);
    if (ldlt_.info() != Eigen::Success)
      throw LinearSolveError("H1Metric: Gram factorization failed", 0.0);
  }

  std::size_t n_free_vertices() const { return gram_.rows(); }

  double norm(const Eigen::VectorXd& v) const {
    double acc = 0.0;
    for (int c = 0; c < 5; ++c) {
      Eigen::VectorXd vc = component(v, c);
      acc += vc.dot(gram_ * vc);
    }
    return std::sqrt(acc);
  }

  double dual_norm(const Eigen::VectorXd& r) const {
    double acc = 0.0;
    for (int c = 0; c < 5; ++c) {
      Eigen::VectorXd rc = component(r, c);
      acc += rc.dot(ldlt_.solve(rc));
    }
    return std::sqrt(acc);
  }

  Eigen::MatrixXd dense_block_gram() const {
    Eigen::MatrixXd s = Eigen::MatrixXd(gram_);
    std::size_t nf = 5 * s.rows();
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(nf, nf);
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < s.cols(); ++j)
        for (int c = 0; c < 5; ++c) g(5 * i + c, 5 * j + c) = s(i, j);
    return g;
  }

 private:
  Eigen::VectorXd component(const Eigen::VectorXd& v, int c) const {
    Eigen::VectorXd out(gram_.rows());
    for (int i = 0; i < gram_.rows(); ++i) out[i] = v[5 * i + c];
    return out;
  }

  const FeSpace* space_;
  SpMat gram_;
  Eigen::SimplicialLDLT<SpMat> ldlt_;
};

struct NewtonConfig {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_iters = 30;
  bool damping = true;
  double min_margin = 1e-3;  // BM safeguard on vertex margins
  double linear_tol = 1e-10;
};

struct KantorovichRecord {
  double a1_est = std::numeric_limits<double>::quiet_NaN();
  double b1 = 0.0;
  double L_est = 0.0;
  double h_star = std::numeric_limits<double>::quiet_NaN();
};

struct IterationRecord {
  double residual = 0.0;
  double step_norm = 0.0;
};

struct SolveReport {
  std::vector<IterationRecord> iterates;
  KantorovichRecord kantorovich;
  double final_margin = 0.0;
  bool converged = false;
  double final_residual = 0.0;
};

namespace detail {

inline Eigen::VectorXd full_residual(const FeSpace& space,
                                     const DiscreteField& field,
                                     const ElasticMatrices& elastic,
                                     const BulkPotential& pot,
                                     const std::optional<Eigen::VectorXd>& forcing,
                                     int quad_degree) {
  Eigen::VectorXd ax = elastic.full * field.values;
  Eigen::VectorXd r(space.n_free_dofs());
  for (std::size_t i = 0; i < space.free_vertices.size(); ++i)
    r.segment<5>(5 * i) = ax.segment<5>(5 * space.free_vertices[i]);
  r += assemble_bulk_residual(space, field, pot, quad_degree);
  if (forcing) r -= *forcing;
  return r;
}

inline void add_free(DiscreteField& field, const FeSpace& space,
                     const Eigen::VectorXd& step, double alpha) {
  for (std::size_t i = 0; i < space.free_vertices.size(); ++i)
    field.values.segment<5>(5 * space.free_vertices[i]) +=
        alpha * step.segment<5>(5 * i);
}

}  // namespace detail

inline std::pair<DiscreteField, SolveReport> newton_solve(
    const FeSpace& space, const ElasticConstants& c, const BulkPotential& pot,
    const DiscreteField& initial, const NewtonConfig& config = {},
    const std::optional<Eigen::VectorXd>& forcing = std::nullopt,
    int quad_degree = 4) {
  ElasticMatrices elastic = assemble_elastic(space, c);
  H1Metric metric(space);
  DiscreteField field = initial;
  SolveReport report;

  if (pot.requires_physical() &&
      !(field.min_vertex_margin() >= config.min_margin))
    throw NotPhysicalError("newton_solve: initial iterate violates the "
                           "vertex physicality margin");

  Eigen::VectorXd r =
      detail::full_residual(space, field, elastic, pot, forcing, quad_degree);
  double rn = metric.dual_norm(r);
  const double target = std::max(config.abs_tol, config.rel_tol * rn);

  for (int it = 0; it < config.max_iters; ++it) {
    if (rn <= target) break;
    SpMat j = elastic.ff + assemble_bulk_tangent(space, field, pot, quad_degree);
    Eigen::VectorXd step = linear_solve(j, Eigen::VectorXd(-r), config.linear_tol);

    double alpha = 1.0;
    bool accepted = false;
    for (int half = 0; half <= 20; ++half) {
      DiscreteField trial = field;
      detail::add_free(trial, space, step, alpha);
      if (config.damping && pot.requires_physical() &&
          trial.min_vertex_margin() < config.min_margin) {
        alpha *= 0.5;
        continue;
      }
      Eigen::VectorXd rt;
      double rtn;
      try {
        rt = detail::full_residual(space, trial, elastic, pot, forcing,
                                   quad_degree);
        rtn = metric.dual_norm(rt);
      } catch (const NotPhysicalAtQuadPointError&) {
        alpha *= 0.5;
        continue;
      }
      if (config.damping && rtn > 10.0 * rn && rn > target) {
        alpha *= 0.5;
        continue;
      }
      field = trial;
      r = rt;
      report.iterates.push_back({rtn, alpha * metric.norm(step)});
      rn = rtn;
      accepted = true;
      break;
    }
    if (!accepted)
      throw StepRejectedError(
          "newton_solve: damping reached minimum step without an acceptable "
          "iterate");
  }

  report.converged = rn <= target;
  report.final_residual = rn;
  report.final_margin = field.min_vertex_margin();
  if (!report.converged) {
    // return best iterate with diagnostics; callers decide how to react
  }
  return {std::move(field), std::move(report)};
}

// beta_h at a given state: smallest |generalized eigenvalue| of the tangent
// against the H1 Gram on free dofs.
inline double discrete_infsup(const FeSpace& space, const ElasticConstants& c,
                              const BulkPotential* pot,
                              const DiscreteField& at, int quad_degree = 4,
                              std::size_t dof_guard = 4000) {
  if (space.n_free_dofs() > dof_guard)
    throw TooLargeError("discrete_infsup: free dof count exceeds dense guard");
  ElasticMatrices elastic = assemble_elastic(space, c);
  Eigen::MatrixXd j = Eigen::MatrixXd(elastic.ff);
  if (pot)
    j += Eigen::MatrixXd(assemble_bulk_tangent(space, at, *pot, quad_degree));
  H1Metric metric(space);
  Eigen::MatrixXd g = metric.dense_block_gram();
  Eigen::MatrixXd jsym = 0.5 * (j + j.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(jsym, g);
  return es.eigenvalues().cwiseAbs().minCoeff();
}

// Numerical Kantorovich quantities at x0: inverse bound a1 = 1/beta_h,
// first-step norm b1, and a secant Lipschitz estimate over random probe
// pairs in a ball of radius b1 around x0.
inline KantorovichRecord kantorovich_estimates(
    const FeSpace& space, const ElasticConstants& c, const BulkPotential& pot,
    const DiscreteField& x0,
    const std::optional<Eigen::VectorXd>& forcing = std::nullopt,
    int quad_degree = 4, int n_probes = 10, unsigned seed = 1234,
    std::size_t infsup_guard = 4000) {
  ElasticMatrices elastic = assemble_elastic(space, c);
  H1Metric metric(space);
  KantorovichRecord rec;

  Eigen::VectorXd r =
      detail::full_residual(space, x0, elastic, pot, forcing, quad_degree);
  SpMat j0 = elastic.ff + assemble_bulk_tangent(space, x0, pot, quad_degree);
  Eigen::VectorXd s = linear_solve(j0, r, 1e-10);
  rec.b1 = metric.norm(s);

  if (space.n_free_dofs() <= infsup_guard)
    rec.a1_est = 1.0 / discrete_infsup(space, c, &pot, x0, quad_degree,
                                       infsup_guard);

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_free = [&](double radius) {
    Eigen::VectorXd v(space.n_free_dofs());
    for (int i = 0; i < v.size(); ++i) v[i] = gauss(rng);
    double n = metric.norm(v);
    return Eigen::VectorXd(v * (radius / n));
  };

  double lmax = 0.0;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int p = 0; p < n_probes; ++p) {
    double radius = rec.b1 > 0 ? rec.b1 : 1e-3;
    for (int attempt = 0; attempt < 30; ++attempt) {
      DiscreteField x = x0, y = x0;
      detail::add_free(x, space, random_free(radius * unif(rng)), 1.0);
      detail::add_free(y, space, random_free(radius * unif(rng)), 1.0);
      Eigen::VectorXd d = random_free(1.0);
      try {
        SpMat jx = elastic.ff + assemble_bulk_tangent(space, x, pot, quad_degree);
        SpMat jy = elastic.ff + assemble_bulk_tangent(space, y, pot, quad_degree);
        Eigen::VectorXd diff = (jx - jy) * d;
        Eigen::VectorXd xy = x.values - y.values;
        Eigen::VectorXd xyf(space.n_free_dofs());
        for (std::size_t i = 0; i < space.free_vertices.size(); ++i)
          xyf.segment<5>(5 * i) = xy.segment<5>(5 * space.free_vertices[i]);
        double denom = metric.norm(xyf);
        if (denom > 0) lmax = std::max(lmax, metric.dual_norm(diff) / denom);
        break;
      } catch (const NotPhysicalAtQuadPointError&) {
        radius *= 0.5;  // BM probes must stay physical
      }
    }
  }
  rec.L_est = lmax;
  rec.h_star = rec.a1_est * rec.b1 * rec.L_est;
  return rec;
}

}  // namespace qlc
