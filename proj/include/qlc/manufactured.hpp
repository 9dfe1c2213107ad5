#pragma once

// Smooth exact solution for convergence studies: a uniaxial field about e_z
// with s(x) = 0.2 + 0.1 sin(pi x) sin(pi y) sin(pi z). Its eigenvalues stay
// in [-0.1, 0.2], strictly physical with a comfortable margin.

#include <cmath>

#include "qlc/fe_space.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

struct ManufacturedSolution {
  static double s(const Vec3& x) {
    return 0.2 + 0.1 * std::sin(M_PI * x.x()) * std::sin(M_PI * x.y()) *
                     std::sin(M_PI * x.z());
  }

  static Vec3 grad_s(const Vec3& x) {
    const double sx = std::sin(M_PI * x.x()), cx = std::cos(M_PI * x.x());
    const double sy = std::sin(M_PI * x.y()), cy = std::cos(M_PI * x.y());
    const double sz = std::sin(M_PI * x.z()), cz = std::cos(M_PI * x.z());
    return 0.1 * M_PI * Vec3(cx * sy * sz, sx * cy * sz, sx * sy * cz);
  }

  // Q = s(x) (e_z x e_z - I/3); only the first basis coefficient is nonzero.
  static QTensor value(const Vec3& x) {
    QTensor q;
    q.coeffs[0] = std::sqrt(2.0 / 3.0) * s(x);
    return q;
  }

  static Mat5x3 gradient(const Vec3& x) {
    Mat5x3 g = Mat5x3::Zero();
    g.row(0) = std::sqrt(2.0 / 3.0) * grad_s(x).transpose();
    return g;
  }
};

}  // namespace qlc
