#pragma once

// P1 conforming space for Q-tensor fields: 5 scalar unknowns per vertex,
// boundary vertices constrained by Dirichlet data.

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "qlc/mesh.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

using Mat5x3 = Eigen::Matrix<double, 5, 3>;
using Mat3x4 = Eigen::Matrix<double, 3, 4>;

struct FeSpace {
  const TetMesh* mesh = nullptr;
  static constexpr int dofs_per_vertex = 5;

  std::vector<int> free_vertices;         // interior vertices
  std::vector<int> vertex_to_free;        // -1 for boundary vertices
  std::vector<Mat3x4> shape_gradients;    // per tet, columns = grad lambda_m
  std::vector<double> volumes;            // per tet

  explicit FeSpace(const TetMesh& m) : mesh(&m) {
    vertex_to_free.assign(m.n_vertices(), -1);
    for (std::size_t v = 0; v < m.n_vertices(); ++v) {
      if (!m.boundary_vertices.count(static_cast<int>(v))) {
        vertex_to_free[v] = static_cast<int>(free_vertices.size());
        free_vertices.push_back(static_cast<int>(v));
      }
    }
    shape_gradients.reserve(m.n_tets());
    volumes.reserve(m.n_tets());
    for (const auto& t : m.tets) {
      Mat3 edges;
      for (int i = 0; i < 3; ++i)
        edges.col(i) = m.vertices[t[i + 1]] - m.vertices[t[0]];
      Mat3 inv = edges.inverse();  // rows = grad lambda_{1..3}
      Mat3x4 g;
      g.col(0) = -(inv.row(0) + inv.row(1) + inv.row(2)).transpose();
      for (int i = 0; i < 3; ++i) g.col(i + 1) = inv.row(i).transpose();
      shape_gradients.push_back(g);
      volumes.push_back(std::abs(tet_volume(m, t)));
    }
  }

  std::size_t n_dofs() const { return 5 * mesh->n_vertices(); }
  std::size_t n_free_dofs() const { return 5 * free_vertices.size(); }
  // Free dofs are ordered component-major within each free vertex.
  int free_dof(int vertex, int comp) const {
    int fv = vertex_to_free[vertex];
    return fv < 0 ? -1 : 5 * fv + comp;
  }
};

struct DiscreteField {
  const FeSpace* space = nullptr;
  Eigen::VectorXd values;  // length 5V, component-major per vertex

  explicit DiscreteField(const FeSpace& s)
      : space(&s), values(Eigen::VectorXd::Zero(s.n_dofs())) {}

  QTensor at_vertex(int v) const {
    return QTensor(values.segment<5>(5 * v));
  }
  void set_vertex(int v, const QTensor& q) {
    values.segment<5>(5 * v) = q.coeffs;
  }

  // Value at a point of element `elem` given barycentric coordinates.
  QTensor at_barycentric(std::size_t elem,
                         const std::array<double, 4>& bary) const {
    const Tet& t = space->mesh->tets[elem];
    Vec5 q = Vec5::Zero();
    for (int m = 0; m < 4; ++m) q += bary[m] * values.segment<5>(5 * t[m]);
    return QTensor(q);
  }

  // Constant coefficient gradient on element `elem` (5 x 3).
  Mat5x3 gradient_on(std::size_t elem) const {
    const Tet& t = space->mesh->tets[elem];
    const Mat3x4& g = space->shape_gradients[elem];
    Mat5x3 grad = Mat5x3::Zero();
    for (int m = 0; m < 4; ++m)
      grad += values.segment<5>(5 * t[m]) * g.col(m).transpose();
    return grad;
  }

  double min_vertex_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < space->mesh->n_vertices(); ++v)
      m = std::min(m, physicality_margin(at_vertex(v)));
    return m;
  }
};

// Nodal interpolation of a continuous Q-tensor field.
inline DiscreteField interpolate(
    const FeSpace& space, const std::function<QTensor(const Vec3&)>& g) {
  DiscreteField f(space);
  for (std::size_t v = 0; v < space.mesh->n_vertices(); ++v)
    f.set_vertex(static_cast<int>(v), g(space.mesh->vertices[v]));
  return f;
}

}  // namespace qlc
