#pragma once

// Singular (Maier-Saupe / Ball-Majumdar) bulk potential evaluated through its
// dual formulation: for a strictly physical Q, solve for the Lagrange
// multiplier L with moment_map(L) = Q under the density
// rho_L(p) = exp(p . L p) / Z(L) on the unit sphere. Then
//   f(Q)  = L : Q - ln Z(L),
//   df/dQ = L,   d2f/dQ2 = inverse of the covariance of the moment map.

#include <Eigen/Dense>
#include <cmath>
#include <optional>

#include "qlc/errors.hpp"
#include "qlc/sphere_quad.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

struct BmParams {
  double T = 2.0;      // absolute temperature, nondimensionalized
  double kappa = 1.0;  // interaction strength

  void validate() const {
    if (!(T > 0 && kappa > 0))
      throw ConfigError("BmParams: T and kappa must be positive");
  }
};

struct MaierSaupeState {
  QTensor lambda;
  double logZ = 0.0;
  Mat5 covariance = Mat5::Zero();
  QTensor q_target;
  double residual_norm = 0.0;
};

namespace detail {

// m_i(p) = E_i : (p x p) for the fixed orthonormal basis.
inline Vec5 sphere_moments(const Vec3& p) {
  const double s6 = 1.0 / std::sqrt(6.0);
  const double s2 = std::sqrt(2.0);
  Vec5 m;
  m[0] = s6 * (-p.x() * p.x() - p.y() * p.y() + 2.0 * p.z() * p.z());
  m[1] = (p.x() * p.x() - p.y() * p.y()) / s2;
  m[2] = s2 * p.x() * p.y();
  m[3] = s2 * p.x() * p.z();
  m[4] = s2 * p.y() * p.z();
  return m;
}

struct Moments {
  double logZ;
  Vec5 mean;
  Mat5 cov;
};

// Mean and covariance of m under rho_L, with max-subtraction in the
// exponent so large |L| does not overflow.
inline Moments density_moments(const Vec5& lambda, const SphereRule& rule) {
  const std::size_t n = rule.nodes.size();
  std::vector<Vec5> ms(n);
  std::vector<double> s(n);
  double smax = -1e300;
  for (std::size_t k = 0; k < n; ++k) {
    ms[k] = sphere_moments(rule.nodes[k]);
    s[k] = lambda.dot(ms[k]);
    smax = std::max(smax, s[k]);
  }
  double z = 0.0;
  Vec5 m1 = Vec5::Zero();
  Mat5 m2 = Mat5::Zero();
  for (std::size_t k = 0; k < n; ++k) {
    double e = rule.weights[k] * std::exp(s[k] - smax);
    z += e;
    m1 += e * ms[k];
    m2 += e * ms[k] * ms[k].transpose();
  }
  Moments out;
  out.logZ = smax + std::log(z);
  out.mean = m1 / z;
  out.cov = m2 / z - out.mean * out.mean.transpose();
  return out;
}

}  // namespace detail

inline QTensor moment_map(const QTensor& lambda, const SphereRule& rule) {
  return QTensor(detail::density_moments(lambda.coeffs, rule).mean);
}

// Newton solve of moment_map(L) = q_target with the (SPD) covariance as
// Jacobian, step halving when the residual fails to decrease.
inline MaierSaupeState solve_multiplier(
    const QTensor& q_target, const SphereRule& rule,
    std::optional<QTensor> warm_start = std::nullopt, double tol = 1e-10,
    int max_iters = 100) {
  if (!(physicality_margin(q_target) > 0))
    throw NotPhysicalError("solve_multiplier: target outside physical regime");

  Vec5 lambda = warm_start ? warm_start->coeffs : Vec5::Zero();
  detail::Moments mom = detail::density_moments(lambda, rule);
  double res = (mom.mean - q_target.coeffs).norm();
  for (int it = 0; it < max_iters && res > tol; ++it) {
    Vec5 step = mom.cov.ldlt().solve(q_target.coeffs - mom.mean);
    double alpha = 1.0;
    for (int half = 0; half < 40; ++half) {
      Vec5 trial = lambda + alpha * step;
      detail::Moments tm = detail::density_moments(trial, rule);
      double tres = (tm.mean - q_target.coeffs).norm();
      if (tres < res || half == 39) {
        lambda = trial;
        mom = tm;
        res = tres;
        break;
      }
      alpha *= 0.5;
    }
  }
  if (res > tol)
    throw NoConvergenceError("solve_multiplier: dual Newton stalled", res);

  MaierSaupeState st;
  st.lambda = QTensor(lambda);
  st.logZ = mom.logZ;
  st.covariance = mom.cov;
  st.q_target = q_target;
  st.residual_norm = res;
  return st;
}

inline double f_value(const MaierSaupeState& st) {
  return dot(st.lambda, st.q_target) - st.logZ;
}

inline QTensor f_gradient(const MaierSaupeState& st) { return st.lambda; }

inline Mat5 f_hessian(const MaierSaupeState& st) {
  Eigen::LLT<Mat5> llt(st.covariance);
  if (llt.info() != Eigen::Success)
    throw SingularCovarianceError(
        "f_hessian: covariance numerically singular");
  return llt.solve(Mat5::Identity());
}

// Bulk density T f(Q) - kappa tr(Q^2) and the weak-form pairings
// (T/2) L : P - kappa Q : P and (T/2) d2f - kappa I. The T/2 and kappa
// factors follow the weak form as stated, not the variational derivative
// of the density; see the consistency tests.
inline double bm_density(const BmParams& p, const MaierSaupeState& st) {
  return p.T * f_value(st) - p.kappa * st.q_target.coeffs.squaredNorm();
}

inline QTensor bm_gradient(const BmParams& p, const MaierSaupeState& st) {
  return QTensor(0.5 * p.T * st.lambda.coeffs - p.kappa * st.q_target.coeffs);
}

inline Mat5 bm_hessian(const BmParams& p, const MaierSaupeState& st) {
  return 0.5 * p.T * f_hessian(st) - p.kappa * Mat5::Identity();
}

}  // namespace qlc
