#pragma once

// Quadrature on the unit sphere for the moment integrals of the singular
// bulk potential. Node sets are the classical octahedrally symmetric
// Lebedev rules, embedded as static tables.

#include <cmath>
#include <functional>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/lebedev_data.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

struct SphereRule {
  std::vector<Vec3> nodes;
  std::vector<double> weights;  // sum to 4*pi
  int exactness_degree = 0;
};

// Supported exactness degrees: 11, 17, 23, 35.
inline SphereRule lebedev_rule(int exactness_degree) {
  for (const auto& tab : detail::kLebedevTables) {
    if (tab.exactness != exactness_degree) continue;
    SphereRule rule;
    rule.exactness_degree = tab.exactness;
    rule.nodes.reserve(tab.size);
    rule.weights.reserve(tab.size);
    for (std::size_t i = 0; i < tab.size; ++i) {
      const double* row = tab.xyzw + 4 * i;
      rule.nodes.emplace_back(row[0], row[1], row[2]);
      rule.weights.push_back(row[3]);
    }
    return rule;
  }
  throw UnsupportedOrderError("lebedev_rule: no rule with exactness degree " +
                              std::to_string(exactness_degree));
}

template <class F>
double integrate(const SphereRule& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double v = f(rule.nodes[k]);
    if (!std::isfinite(v))
      throw NonFiniteIntegrandError(
          "integrate: integrand not finite at node " + std::to_string(k));
    sum += rule.weights[k] * v;
  }
  return sum;
}

}  // namespace qlc
