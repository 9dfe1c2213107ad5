#pragma once

// Gmsh ASCII v2.2 reader/writer (sections $MeshFormat, $Nodes, $Elements),
// tetrahedral elements only (type 4).

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "qlc/errors.hpp"
#include "qlc/mesh.hpp"

namespace qlc {

inline TetMesh read_gmsh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("read_gmsh: cannot open " + path);

  TetMesh mesh;
  std::map<long, int> id_map;  // gmsh node ids need not be contiguous
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("$MeshFormat", 0) == 0) {
      if (!std::getline(in, line))
        throw ParseError("read_gmsh: truncated $MeshFormat");
      std::istringstream fmt(line);
      double version = 0;
      int file_type = -1;
      fmt >> version >> file_type;
      if (!fmt || version < 2.0 || version >= 3.0 || file_type != 0)
        throw ParseError("read_gmsh: expected ASCII v2.x format");
    } else if (line.rfind("$Nodes", 0) == 0) {
      std::size_t count = 0;
      if (!(in >> count)) throw ParseError("read_gmsh: bad node count");
      for (std::size_t i = 0; i < count; ++i) {
        long id;
        double x, y, z;
        if (!(in >> id >> x >> y >> z))
          throw ParseError("read_gmsh: malformed node line");
        id_map[id] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.emplace_back(x, y, z);
      }
    } else if (line.rfind("$Elements", 0) == 0) {
      std::size_t count = 0;
      if (!(in >> count)) throw ParseError("read_gmsh: bad element count");
      for (std::size_t i = 0; i < count; ++i) {
        long id;
        int type, ntags;
        if (!(in >> id >> type >> ntags))
          throw ParseError("read_gmsh: malformed element line");
        for (int t = 0; t < ntags; ++t) {
          long tag;
          if (!(in >> tag)) throw ParseError("read_gmsh: malformed tags");
        }
        if (type != 4)
          throw NonTetElementsError("read_gmsh: element " +
                                    std::to_string(id) + " has type " +
                                    std::to_string(type) +
                                    ", only tetrahedra (4) supported");
        Tet t;
        for (int v = 0; v < 4; ++v) {
          long node;
          if (!(in >> node)) throw ParseError("read_gmsh: malformed tet");
          auto it = id_map.find(node);
          if (it == id_map.end())
            throw ParseError("read_gmsh: tet references unknown node " +
                             std::to_string(node));
          t[v] = it->second;
        }
        mesh.tets.push_back(t);
      }
    }
  }
  if (mesh.tets.empty()) throw EmptyMeshError("read_gmsh: no tetrahedra");
  detail::finalize_mesh(mesh);
  return mesh;
}

inline void write_gmsh(const TetMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("write_gmsh: cannot open " + path);
  out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
  out << "$Nodes\n" << mesh.n_vertices() << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < mesh.n_vertices(); ++i) {
    const Vec3& v = mesh.vertices[i];
    out << (i + 1) << " " << v.x() << " " << v.y() << " " << v.z() << "\n";
  }
  out << "$EndNodes\n$Elements\n" << mesh.n_tets() << "\n";
  for (std::size_t i = 0; i < mesh.n_tets(); ++i) {
    const Tet& t = mesh.tets[i];
    out << (i + 1) << " 4 0 " << (t[0] + 1) << " " << (t[1] + 1) << " "
        << (t[2] + 1) << " " << (t[3] + 1) << "\n";
  }
  out << "$EndElements\n";
}

}  // namespace qlc
