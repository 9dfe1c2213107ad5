#include <catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>

#include "qlc/gmsh_io.hpp"
#include "qlc/mesh.hpp"

using namespace qlc;
using Catch::Approx;

namespace {

double total_volume(const TetMesh& mesh) {
  double v = 0.0;
  for (const auto& t : mesh.tets) v += std::abs(tet_volume(mesh, t));
  return v;
}

std::string write_temp(const std::string& contents) {
  static int counter = 0;
  std::string path =
      "/tmp/qlc_test_mesh_" + std::to_string(counter++) + ".msh";
  std::ofstream out(path);
  out << contents;
  return path;
}

}  // namespace

TEST_CASE("structured cube mesh counts and metrics") {
  for (int n : {1, 2, 4}) {
    TetMesh mesh = unit_cube_mesh(n);
    CHECK(mesh.n_vertices() == std::size_t((n + 1) * (n + 1) * (n + 1)));
    CHECK(mesh.n_tets() == std::size_t(6 * n * n * n));
    CHECK(mesh.h_max == Approx(std::sqrt(3.0) / n).margin(1e-14));
    CHECK(total_volume(mesh) == Approx(1.0).margin(1e-13));
    for (const auto& t : mesh.tets) CHECK(tet_volume(mesh, t) > 0.0);
  }
  // all 8 vertices of the single-cell mesh touch the boundary
  CHECK(unit_cube_mesh(1).boundary_vertices.size() == 8);
  // n = 2: only the center vertex is interior
  CHECK(unit_cube_mesh(2).boundary_vertices.size() == 26);
  CHECK_THROWS_AS(unit_cube_mesh(0), ConfigError);
}

TEST_CASE("shape regularity is mesh-size independent for Kuhn meshes") {
  double r2 = shape_regularity(unit_cube_mesh(2));
  double r4 = shape_regularity(unit_cube_mesh(4));
  CHECK(r2 == Approx(r4).margin(1e-12));
  CHECK(r2 > 1.0);
  CHECK(r2 < 20.0);
}

TEST_CASE("shape regularity oracle: regular tetrahedron") {
  TetMesh mesh;
  double h = std::sqrt(3.0) / 2.0;
  mesh.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0.5, h, 0),
                   Vec3(0.5, h / 3.0, std::sqrt(6.0) / 3.0)};
  mesh.tets = {{0, 1, 2, 3}};
  detail::finalize_mesh(mesh);
  // diameter / inradius = a / (a / (2 sqrt 6)) = 2 sqrt 6
  CHECK(shape_regularity(mesh) == Approx(2.0 * std::sqrt(6.0)).margin(1e-12));
  CHECK(mesh.boundary_vertices.size() == 4);
}

TEST_CASE("shape regularity stays finite on a sliver") {
  TetMesh mesh;
  mesh.vertices = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0),
                   Vec3(1, 1, 1e-8)};
  mesh.tets = {{0, 1, 2, 3}};
  detail::finalize_mesh(mesh);
  double r = shape_regularity(mesh);
  CHECK(std::isfinite(r));
  CHECK(r > 1e6);
}

TEST_CASE("gmsh reader on a minimal single-tet file") {
  std::string path = write_temp(
      "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
      "$Nodes\n4\n"
      "10 0 0 0\n11 1 0 0\n12 0 1 0\n17 0 0 1\n"  // non-contiguous ids
      "$EndNodes\n"
      "$Elements\n1\n"
      "1 4 2 99 1 10 11 12 17\n"
      "$EndElements\n");
  TetMesh mesh = read_gmsh(path);
  CHECK(mesh.n_vertices() == 4);
  CHECK(mesh.n_tets() == 1);
  CHECK(tet_volume(mesh, mesh.tets[0]) == Approx(1.0 / 6.0).margin(1e-14));
  CHECK(mesh.boundary_vertices.size() == 4);
  std::remove(path.c_str());
}

TEST_CASE("gmsh writer round trip") {
  TetMesh mesh = unit_cube_mesh(2);
  std::string path = write_temp("");
  write_gmsh(mesh, path);
  TetMesh back = read_gmsh(path);
  REQUIRE(back.n_vertices() == mesh.n_vertices());
  REQUIRE(back.n_tets() == mesh.n_tets());
  for (std::size_t v = 0; v < mesh.n_vertices(); ++v)
    CHECK((back.vertices[v] - mesh.vertices[v]).norm() <= 1e-14);
  CHECK(back.boundary_vertices == mesh.boundary_vertices);
  CHECK(back.h_max == Approx(mesh.h_max).margin(1e-14));
  std::remove(path.c_str());
}

TEST_CASE("gmsh reader rejects bad input") {
  std::string tri = write_temp(
      "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
      "$Nodes\n3\n1 0 0 0\n2 1 0 0\n3 0 1 0\n$EndNodes\n"
      "$Elements\n1\n1 2 0 1 2 3\n$EndElements\n");
  CHECK_THROWS_AS(read_gmsh(tri), NonTetElementsError);
  std::remove(tri.c_str());

  std::string empty = write_temp(
      "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
      "$Nodes\n1\n1 0 0 0\n$EndNodes\n");
  CHECK_THROWS_AS(read_gmsh(empty), EmptyMeshError);
  std::remove(empty.c_str());

  std::string binary = write_temp("$MeshFormat\n2.2 1 8\n$EndMeshFormat\n");
  CHECK_THROWS_AS(read_gmsh(binary), ParseError);
  std::remove(binary.c_str());

  std::string garbled = write_temp(
      "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n"
      "$Nodes\n2\n1 0 0\n$EndNodes\n");
  CHECK_THROWS_AS(read_gmsh(garbled), ParseError);
  std::remove(garbled.c_str());

  CHECK_THROWS_AS(read_gmsh("/nonexistent/mesh.msh"), ParseError);
}
