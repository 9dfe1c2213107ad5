#pragma once

// Quartic Landau-de Gennes bulk potential
//   psi(Q) = -(a/2) tr(Q^2) - (b/3) tr(Q^3) + (c/2) (tr(Q^2))^2
// with gradient and Hessian in basis coefficients, consistent with finite
// differences of the density.

#include "qlc/errors.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

struct LdgParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;

  void validate() const {
    if (!(a > 0 && b > 0 && c > 0))
      throw ConfigError("LdgParams: a, b, c must be positive");
  }
};

inline double ldg_density(const LdgParams& p, const QTensor& q) {
  Mat3 m = to_matrix(q);
  double t2 = (m * m).trace();
  double t3 = (m * m * m).trace();
  return -0.5 * p.a * t2 - p.b / 3.0 * t3 + 0.5 * p.c * t2 * t2;
}

inline QTensor ldg_gradient(const LdgParams& p, const QTensor& q) {
  double t2 = q.coeffs.squaredNorm();
  Vec5 g = -p.a * q.coeffs - p.b * tr_q2_basis(q) + 2.0 * p.c * t2 * q.coeffs;
  return QTensor(g);
}

inline Mat5 ldg_hessian(const LdgParams& p, const QTensor& q) {
  double t2 = q.coeffs.squaredNorm();
  Mat5 h = -p.a * Mat5::Identity() - p.b * tr_q_basis_pair(q) +
           2.0 * p.c * (t2 * Mat5::Identity() +
                        2.0 * q.coeffs * q.coeffs.transpose());
  return h;
}

}  // namespace qlc
