#pragma once

#include <array>
#include <string>
#include <vector>

#include "holo/geometry.hpp"

namespace holo {

struct PackingParams {
  double ratio_s = 1.0;  // radius ratio along the first lattice direction
  double ratio_t = 1.0;  // and along the second
  int rows = 5;
  int cols = 5;
};

// Angle triples (radians, ccw) of the two alternating triangles on circle
// centers with radius triples (1, s, t) and (s, st, t). Throws NotRealizable
// when tangent circles with those radii cannot close a triangle.
std::pair<std::array<double, 3>, std::array<double, 3>> shapes_from_ratios(double ratio_s,
                                                                           double ratio_t);

// Numeric analog of the ring condition for two shapes alternating around a
// vertex: angles sum to a full turn and the sine-ratio product is 1.
struct FitVerdict {
  bool angle_sum_ok = false;
  bool scale_ok = false;
  double angle_residual = 0;
  double log_scale_residual = 0;
  bool pass() const { return angle_sum_ok && scale_ok; }
};

FitVerdict vertex_fit_check(const std::array<double, 3>& shape1,
                            const std::array<double, 3>& shape2);

struct Circle {
  Point center;
  double radius = 0;
};

struct PackedPatch {
  int rows = 0, cols = 0;
  std::vector<Point> centers;     // (cols+1) x (rows+1), row-major
  std::vector<double> radii;
  std::vector<std::array<int, 3>> triangles;  // indices into centers
  double max_tangency_residual = 0;           // relative
  double max_vertex_angle_residual = 0;       // radians, interior vertices

  int index(int i, int j) const { return j * (cols + 1) + i; }
  std::vector<Circle> circles() const;
};

// Develops the rows x cols patch of the hexagonal-combinatorics packing with
// radii s^i * t^j. Throws NotRealizable via shapes_from_ratios.
PackedPatch develop_packing(const PackingParams& params);

std::string packing_to_json(const PackedPatch& patch, int indent = 2);

}  // namespace holo
