#pragma once

// Tetrahedral meshes: Kuhn-subdivided structured cube meshes, metrics,
// and invariant fixup (orientation, boundary detection).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

using Tet = std::array<int, 4>;

struct TetMesh {
  std::vector<Vec3> vertices;
  std::vector<Tet> tets;
  std::set<int> boundary_vertices;
  double h_max = 0.0;

  std::size_t n_vertices() const { return vertices.size(); }
  std::size_t n_tets() const { return tets.size(); }
};

inline double tet_signed_volume(const Vec3& a, const Vec3& b, const Vec3& c,
                                const Vec3& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.0;
}

inline double tet_volume(const TetMesh& mesh, const Tet& t) {
  return tet_signed_volume(mesh.vertices[t[0]], mesh.vertices[t[1]],
                           mesh.vertices[t[2]], mesh.vertices[t[3]]);
}

inline double tet_diameter(const TetMesh& mesh, const Tet& t) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      d = std::max(d, (mesh.vertices[t[i]] - mesh.vertices[t[j]]).norm());
  return d;
}

namespace detail {

inline double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * (b - a).cross(c - a).norm();
}

// Orientation fixup, boundary-vertex detection and h_max.
inline void finalize_mesh(TetMesh& mesh) {
  if (mesh.tets.empty()) throw EmptyMeshError("mesh has no tetrahedra");
  for (auto& t : mesh.tets) {
    if (tet_volume(mesh, t) < 0) std::swap(t[2], t[3]);
  }
  std::map<std::array<int, 3>, int> face_count;
  for (const auto& t : mesh.tets) {
    for (int skip = 0; skip < 4; ++skip) {
      std::array<int, 3> f;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = t[i];
      std::sort(f.begin(), f.end());
      ++face_count[f];
    }
  }
  mesh.boundary_vertices.clear();
  for (const auto& [f, cnt] : face_count) {
    if (cnt == 1)
      for (int v : f) mesh.boundary_vertices.insert(v);
  }
  mesh.h_max = 0.0;
  for (const auto& t : mesh.tets)
    mesh.h_max = std::max(mesh.h_max, tet_diameter(mesh, t));
}

}  // namespace detail

// n^3 cubes, 6 Kuhn tets each, all sharing the cell's main diagonal so the
// subdivision is conforming across cells.
inline TetMesh unit_cube_mesh(int n) {
  if (n < 1) throw ConfigError("unit_cube_mesh: n must be >= 1");
  TetMesh mesh;
  auto vid = [n](int i, int j, int k) {
    return (i * (n + 1) + j) * (n + 1) + k;
  };
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        mesh.vertices.emplace_back(double(i) / n, double(j) / n,
                                   double(k) / n);
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (const auto& p : perms) {
          std::array<int, 3> c = {i, j, k};
          Tet t;
          t[0] = vid(c[0], c[1], c[2]);
          for (int step = 0; step < 3; ++step) {
            ++c[p[step]];
            t[step + 1] = vid(c[0], c[1], c[2]);
          }
          mesh.tets.push_back(t);
        }
  detail::finalize_mesh(mesh);
  return mesh;
}

// Max over tets of diameter / inradius, with inradius = 3 V / surface area.
inline double shape_regularity(const TetMesh& mesh) {
  double worst = 0.0;
  for (const auto& t : mesh.tets) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    const Vec3& d = mesh.vertices[t[3]];
    double vol = std::abs(tet_signed_volume(a, b, c, d));
    double area = detail::triangle_area(a, b, c) +
                  detail::triangle_area(a, b, d) +
                  detail::triangle_area(a, c, d) +
                  detail::triangle_area(b, c, d);
    double inradius = 3.0 * vol / area;
    double diam = tet_diameter(mesh, t);
    if (inradius > 0)
      worst = std::max(worst, diam / inradius);
    else
      worst = std::numeric_limits<double>::infinity();
  }
  return worst;
}

}  // namespace qlc
