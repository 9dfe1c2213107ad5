#pragma once

// Legacy ASCII VTK 3.0 unstructured grid writer (cell type 10) for Q-tensor
// fields: basis coefficients, eigenvalues, scalar order parameter, director
// and physicality margin per vertex.

#include <Eigen/Dense>
#include <fstream>
#include <string>

#include "qlc/errors.hpp"
#include "qlc/fe_space.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

inline void write_vtk(const DiscreteField& field, const std::string& path) {
  const TetMesh& mesh = *field.space->mesh;
  std::ofstream out(path);
  if (!out) throw ParseError("write_vtk: cannot open " + path);
  out.precision(17);
  out << "# vtk DataFile Version 3.0\n"
      << "Q-tensor field\nASCII\nDATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << mesh.n_vertices() << " double\n";
  for (const auto& v : mesh.vertices)
    out << v.x() << " " << v.y() << " " << v.z() << "\n";
  out << "CELLS " << mesh.n_tets() << " " << 5 * mesh.n_tets() << "\n";
  for (const auto& t : mesh.tets)
    out << "4 " << t[0] << " " << t[1] << " " << t[2] << " " << t[3] << "\n";
  out << "CELL_TYPES " << mesh.n_tets() << "\n";
  for (std::size_t i = 0; i < mesh.n_tets(); ++i) out << "10\n";

  out << "POINT_DATA " << mesh.n_vertices() << "\n";
  for (int c = 0; c < 5; ++c) {
    out << "SCALARS q" << (c + 1) << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t v = 0; v < mesh.n_vertices(); ++v)
      out << field.values[5 * v + c] << "\n";
  }
  out << "SCALARS eigenvalues double 3\nLOOKUP_TABLE default\n";
  for (std::size_t v = 0; v < mesh.n_vertices(); ++v) {
    EigenTriple t = eigenvalues(field.at_vertex(static_cast<int>(v)));
    out << t.lambda[0] << " " << t.lambda[1] << " " << t.lambda[2] << "\n";
  }
  out << "SCALARS order_parameter double 1\nLOOKUP_TABLE default\n";
  for (std::size_t v = 0; v < mesh.n_vertices(); ++v) {
    EigenTriple t = eigenvalues(field.at_vertex(static_cast<int>(v)));
    out << 1.5 * t.max() << "\n";
  }
  out << "VECTORS director double\n";
  for (std::size_t v = 0; v < mesh.n_vertices(); ++v) {
    Mat3 m = to_matrix(field.at_vertex(static_cast<int>(v)));
    Eigen::SelfAdjointEigenSolver<Mat3> es(m);
    Vec3 n = es.eigenvectors().col(2);  // eigenvector of lambda_max
    out << n.x() << " " << n.y() << " " << n.z() << "\n";
  }
  out << "SCALARS physicality_margin double 1\nLOOKUP_TABLE default\n";
  for (std::size_t v = 0; v < mesh.n_vertices(); ++v)
    out << physicality_margin(field.at_vertex(static_cast<int>(v))) << "\n";
}

}  // namespace qlc
