#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holo/diagram.hpp"
#include "holo/packing.hpp"

namespace holo {

struct RenderStyle {
  double stroke_width = 1.5;          // user units
  std::vector<std::string> palette = {"#5b8dd9", "#e0a458", "#6fb07f", "#c76a6a",
                                      "#9577c9", "#c9a0c4", "#7fb8c9", "#b8b16a"};
  bool labels = false;
  int canvas = 800;
  double margin_fraction = 0.06;
};

// Scene layers, rendered in insertion order (later layers on top).
struct Scene {
  struct Tri {
    std::array<Point, 3> pts;
    std::string key;  // shape class key for the cyclic palette
    std::string label;
  };
  std::vector<Tri> triangles;
  struct Poly {
    std::vector<Point> pts;
    bool closed = true;
    std::string cls;  // "hole", "curve", "outline"
  };
  std::vector<Poly> polys;
  std::vector<Circle> circles;

  bool empty() const { return triangles.empty() && polys.empty() && circles.empty(); }

  void add_placed(const DiagramSpec& spec, const PlacedDiagram& placed);
  void add_polygon(const std::vector<Point>& pts, const std::string& cls, bool closed = true);
  void add_circles(const std::vector<Circle>& circles);

  // Optional fixed world window; otherwise fit to the scene bounding box.
  std::optional<BBox> fixed_window;
};

// Standalone SVG 1.1 document: one similarity maps the scene into the canvas,
// y axis flipped, 6-digit fixed decimals. Byte-identical for equal inputs.
// Throws EmptyScene.
std::string to_svg(const Scene& scene, const RenderStyle& style);

struct FlipbookPolicy {
  // a : b : c stays fixed across frames, rescaled to each constraint.
  double ratio_a = 4, ratio_b = 3, ratio_c = 2;
  bool fill = false;  // apply the isosceles fill where available (n >= 5)
};

struct FlipbookFrame {
  int n = 0;
  std::string svg;    // empty when the frame failed
  std::string error;  // failure note, empty on success
};

// One frame per n, descending; all frames share the first frame's window so
// the big triangle keeps identical coordinates.
std::vector<FlipbookFrame> flipbook(int n_from, int n_to, const FlipbookPolicy& policy,
                                    const RenderStyle& style);

}  // namespace holo
