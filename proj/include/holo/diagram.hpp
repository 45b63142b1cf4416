#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holo/angleform.hpp"
#include "holo/geometry.hpp"
#include "holo/holonomy.hpp"

namespace holo {

// Conventions used throughout:
//   - triangle vertices are listed in ccw order, angle i at vertex i;
//   - edge k is opposite vertex k, i.e. it joins vertices k+1 and k+2 (mod 3)
//     and is traversed k+1 -> k+2 along the ccw boundary;
//   - a gluing identifies two edges traversed in opposite directions, so all
//     triangles stay ccw in the developed plane.

struct TriangleSpec {
  std::string id;
  Shape shape;
};

struct Gluing {
  int t0 = 0, e0 = 0, t1 = 0, e1 = 0;
};

// Interior vertex: (triangle index, pivot angle index) around the vertex,
// consecutive entries sharing a glued edge.
struct VertexRing {
  std::vector<std::pair<int, int>> entries;
};

struct Metadata {
  std::string name;
  std::string figure;
  std::string notes;
  // Doughnut builds record the enclosing triangle here; it is not a glued
  // part of the complex.
  std::vector<std::string> frame_angles;
};

class DiagramSpec {
 public:
  int n = 2;
  std::vector<TriangleSpec> triangles;
  std::vector<Gluing> gluings;
  std::vector<VertexRing> interior_vertices;
  Metadata metadata;

  int triangle_index(const std::string& id) const;  // -1 when absent

  // Checks edge-use, connectivity, ring consistency. Throws SpecError.
  void validate() const;

  // Vertex classes: each (triangle, corner) slot mapped to a class id, glued
  // corners identified. Classes are the diagram's geometric vertices.
  std::vector<std::array<int, 3>> vertex_classes() const;

  // Ring of (triangle, pivot) entries around every occurrence of the given
  // vertex class, in gluing-chain order. Used to validate shipped rings and
  // to assemble rings at hole vertices.
  Ring ring_at(int vertex_class) const;

  const Gluing* gluing_for(int t, int e) const;
};

struct SeedPose {
  std::string triangle_id;  // empty selects the first triangle
  Point anchor0 = Point(0, 0);
  Point anchor1 = Point(1, 0);
};

struct PlacedDiagram {
  std::vector<std::array<Point, 3>> placements;  // by triangle index
  std::vector<double> residuals;                 // by gluing index, absolute
  double max_residual = 0;                       // absolute
  double normalized_residual = 0;                // / bbox diagonal
  BBox bbox;
  std::string seed_id;
  SeedPose seed;
};

// Breadth-first development of the gluing graph from the seed triangle.
// Throws UnrealizableShape / DisconnectedSpec.
PlacedDiagram develop(const DiagramSpec& spec, const Assignment& asg,
                      const SeedPose& seed = SeedPose{});

struct ExistenceReport {
  std::vector<std::pair<std::string, bool>> shape_verdicts;   // per triangle
  std::vector<EzVerdict> vertex_verdicts;                     // per interior vertex
  bool symbolic_ok = false;
  double normalized_residual = 0;
  double tolerance = 0;
  bool numeric_ok = false;
  bool exists = false;
};

ExistenceReport verify_existence(const DiagramSpec& spec, const Assignment& asg,
                                 double tolerance = 1e-9);

// JSON round trip; the wire format keeps rational coefficients as strings.
std::string to_json(const DiagramSpec& spec, int indent = 2);
DiagramSpec spec_from_json(const std::string& text);

std::string report_to_json(const ExistenceReport& report, int indent = 2);

}  // namespace holo
