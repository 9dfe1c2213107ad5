#pragma once

// Algebra of symmetric traceless 3x3 matrices represented by 5 coefficients
// in the orthonormal basis
//   E1 = diag(-1,-1,2)/sqrt(6)
//   E2 = diag(1,-1,0)/sqrt(2)
//   E3 = (e1 x e2 + e2 x e1)/sqrt(2)
//   E4 = (e1 x e3 + e3 x e1)/sqrt(2)
//   E5 = (e2 x e3 + e3 x e2)/sqrt(2)
// so that tr(Ei Ej) = delta_ij and |Q|_F equals the Euclidean norm of the
// coefficient vector.

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "qlc/errors.hpp"

namespace qlc {

using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat5 = Eigen::Matrix<double, 5, 5>;

inline const std::array<Mat3, 5>& tensor_basis() {
  static const std::array<Mat3, 5> basis = [] {
    std::array<Mat3, 5> e;
    const double s6 = 1.0 / std::sqrt(6.0);
    const double s2 = 1.0 / std::sqrt(2.0);
    e[0] << -s6, 0, 0, 0, -s6, 0, 0, 0, 2 * s6;
    e[1] << s2, 0, 0, 0, -s2, 0, 0, 0, 0;
    e[2] << 0, s2, 0, s2, 0, 0, 0, 0, 0;
    e[3] << 0, 0, s2, 0, 0, 0, s2, 0, 0;
    e[4] << 0, 0, 0, 0, 0, s2, 0, s2, 0;
    return e;
  }();
  return basis;
}

struct QTensor {
  Vec5 coeffs = Vec5::Zero();

  QTensor() = default;
  explicit QTensor(const Vec5& c) : coeffs(c) {}
  QTensor(double q1, double q2, double q3, double q4, double q5) {
    coeffs << q1, q2, q3, q4, q5;
  }

  static QTensor zero() { return QTensor{}; }

  double frobenius_norm() const { return coeffs.norm(); }

  QTensor operator+(const QTensor& o) const { return QTensor(coeffs + o.coeffs); }
  QTensor operator-(const QTensor& o) const { return QTensor(coeffs - o.coeffs); }
  QTensor operator*(double s) const { return QTensor(coeffs * s); }
  QTensor operator-() const { return QTensor(-coeffs); }
  QTensor& operator+=(const QTensor& o) {
    coeffs += o.coeffs;
    return *this;
  }
};

inline QTensor operator*(double s, const QTensor& q) { return q * s; }

struct EigenTriple {
  std::array<double, 3> lambda{};  // sorted ascending
  double min() const { return lambda[0]; }
  double max() const { return lambda[2]; }
};

inline Mat3 to_matrix(const QTensor& q) {
  const auto& e = tensor_basis();
  Mat3 m = Mat3::Zero();
  for (int i = 0; i < 5; ++i) m += q.coeffs[i] * e[i];
  return m;
}

inline QTensor from_matrix(const Mat3& m, double tol = 1e-10) {
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol)
    throw NonSymmetricError("from_matrix: matrix is not symmetric");
  if (std::abs(m.trace()) > tol)
    throw NonTracelessError("from_matrix: matrix is not traceless");
  const auto& e = tensor_basis();
  QTensor q;
  for (int i = 0; i < 5; ++i) q.coeffs[i] = (m * e[i]).trace();
  return q;
}

// Uniaxial state Q = s (n x n - I/3) for a unit director n.
inline QTensor uniaxial(double s, const Vec3& n) {
  Mat3 m = s * (n * n.transpose() - Mat3::Identity() / 3.0);
  return from_matrix(0.5 * (m + m.transpose()));
}

// Eigenvalues of a symmetric traceless matrix by the closed-form solve of the
// depressed cubic lambda^3 + p lambda + r = 0 with p = -tr(M^2)/2,
// r = -det(M). The acos argument is clamped for near-degenerate spectra.
inline EigenTriple eigenvalues_traceless(const Mat3& m) {
  const double p = 0.5 * (m * m).trace();
  EigenTriple t;
  if (p < 1e-30) {
    t.lambda = {0.0, 0.0, 0.0};
    return t;
  }
  const double det = m.determinant();
  const double rho = std::sqrt(p / 3.0);
  double arg = det / (2.0 * rho * rho * rho);
  arg = std::clamp(arg, -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  const double two_pi_3 = 2.0943951023931953;
  double l0 = 2.0 * rho * std::cos(theta);
  double l1 = 2.0 * rho * std::cos(theta - two_pi_3);
  double l2 = 2.0 * rho * std::cos(theta + two_pi_3);
  std::array<double, 3> ls{l0, l1, l2};
  std::sort(ls.begin(), ls.end());
  t.lambda = ls;
  return t;
}

inline EigenTriple eigenvalues(const QTensor& q) {
  return eigenvalues_traceless(to_matrix(q));
}

// Distance of the spectrum to the boundary of the physical set
// {-1/3 < lambda_i < 2/3}; positive iff strictly physical.
inline double physicality_margin(const QTensor& q) {
  EigenTriple t = eigenvalues(q);
  return std::min(t.min() + 1.0 / 3.0, 2.0 / 3.0 - t.max());
}

struct TraceProducts {
  double qr;    // tr(QR)
  double q2;    // tr(Q^2)
  double q3;    // tr(Q^3)
  double qrp;   // tr(QRP)
  double q2p;   // tr(Q^2 P)
};

inline double dot(const QTensor& a, const QTensor& b) {
  return a.coeffs.dot(b.coeffs);
}

inline TraceProducts trace_products(const QTensor& q, const QTensor& r,
                                    const QTensor& p) {
  Mat3 mq = to_matrix(q), mr = to_matrix(r), mp = to_matrix(p);
  TraceProducts t;
  t.qr = (mq * mr).trace();
  t.q2 = (mq * mq).trace();
  t.q3 = (mq * mq * mq).trace();
  t.qrp = (mq * mr * mp).trace();
  t.q2p = (mq * mq * mp).trace();
  return t;
}

// Coefficients of the quadratic map q -> tr(Q^2 E_i), used by the LDG
// derivative formulas.
inline Vec5 tr_q2_basis(const QTensor& q) {
  Mat3 mq = to_matrix(q);
  Mat3 m2 = mq * mq;
  const auto& e = tensor_basis();
  Vec5 out;
  for (int i = 0; i < 5; ++i) out[i] = (m2 * e[i]).trace();
  return out;
}

// tr(Q (Ei Ej + Ej Ei)) for all i, j.
inline Mat5 tr_q_basis_pair(const QTensor& q) {
  Mat3 mq = to_matrix(q);
  const auto& e = tensor_basis();
  Mat5 out;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j <= i; ++j) {
      double v = (mq * (e[i] * e[j] + e[j] * e[i])).trace();
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

}  // namespace qlc
