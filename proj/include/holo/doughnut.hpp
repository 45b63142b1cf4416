#pragma once

#include <optional>
#include <vector>

#include "holo/diagram.hpp"

namespace holo {

// Fan of n shapes hinged at one corner of the enclosing triangle with angles
// n*a, n*b, n*c. Corner 0 carries angle n*a; corners 1 and 2 are the cyclic
// relabelings a->b->c->a.
std::vector<Shape> corner_fan(int n, int corner);

// The n-doughnut: three corner fans inside the big triangle, shared extreme
// triangles merged. For n=3 the triangular gap is closed by the equilateral
// center, for n=4 by three constant caps leaving a triangular hole, for
// n >= 5 the ring stays open. The enclosing triangle is carried in metadata,
// not glued (the flattened-cone gluing cannot close up in the plane; the
// corner holonomy identity certifies it instead).
DiagramSpec build_doughnut(int n);

struct HolePolygon {
  std::vector<Point> vertices;           // ccw, after collinear merging
  std::vector<int> corner_association;   // per edge i -> i+1: fan corner 0..2, -1 none
  double area = 0;
  double big_area = 0;                   // area of the outer boundary
  bool absent() const { return vertices.empty(); }
};

// Walks the unglued inner edges of a developed doughnut. Throws
// OverlappingFans when fan triangles overlap beyond tolerance.
HolePolygon hole_polygon(const PlacedDiagram& placed, const DiagramSpec& spec);

// Attaches an inward isosceles triangle (base angles beta) to every hole
// edge. beta <= 0 is a no-op; beta defaults to the parameter that puts each
// apex on the corner-to-hole-center line at equilateral parameters, snapped
// to a fraction of tau. Throws ApexCollision when adjacent apexes cross.
DiagramSpec isosceles_fill(const DiagramSpec& spec, std::optional<double> beta = std::nullopt);

double default_fill_beta(const DiagramSpec& spec);

// Points on { z : Im(z^(tau/(2A))) = 1 } in the sector arg z in (0, A).
std::vector<Point> limit_curve(double corner_angle, int samples);

struct BoundaryStudy {
  std::vector<Point> renormalized;  // corner at origin, bisector on +x axis
  double max_distance = 0;          // to the limit curve, within the window
};

// Renormalizes the hole boundary near one corner of the n-doughnut and
// reports the maximum distance to the limit curve for that corner angle.
// Vertices farther than `window` from the corner (renormalized) are ignored.
BoundaryStudy renormalized_boundary(int n, const Assignment& asg, int corner,
                                    double window = 4.0);

// Distance helper used by the study: aligned frame has the corner at the
// origin and the sector bisector on the positive real axis.
double boundary_distance_to_limit_curve(const std::vector<Point>& aligned, double corner_angle,
                                        double window = 4.0);

// Principal-branch power map p -> (p - center)^exponent. Throws
// BranchCutCrossing when a segment between consecutive points crosses the
// negative real axis of the centered coordinates.
std::vector<Point> power_transform(const std::vector<Point>& points, double exponent,
                                   Point center);

}  // namespace holo
