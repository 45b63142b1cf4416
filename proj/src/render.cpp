#include "holo/render.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "holo/doughnut.hpp"
#include "holo/errors.hpp"

namespace holo {

void Scene::add_placed(const DiagramSpec& spec, const PlacedDiagram& placed) {
  for (size_t t = 0; t < spec.triangles.size(); ++t) {
    Tri tri;
    tri.pts = placed.placements[t];
    tri.key = spec.triangles[t].shape.class_key(spec.n);
    tri.label = spec.triangles[t].id;
    triangles.push_back(std::move(tri));
  }
}

void Scene::add_polygon(const std::vector<Point>& pts, const std::string& cls, bool closed) {
  polys.push_back({pts, closed, cls});
}

void Scene::add_circles(const std::vector<Circle>& cs) {
  circles.insert(circles.end(), cs.begin(), cs.end());
}

namespace {

std::string fmt(double v) {
  // Fixed 6-decimal formatting; normalize negative zero.
  char buf[64];
  if (v == 0.0) v = 0.0;
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Mapper {
  double scale = 1, ox = 0, oy = 0;
  int canvas = 800;
  std::string x(double wx) const { return fmt(ox + scale * wx); }
  std::string y(double wy) const { return fmt(canvas - (oy + scale * wy)); }
};

}  // namespace

std::string to_svg(const Scene& scene, const RenderStyle& style) {
  if (scene.empty()) throw EmptyScene("nothing to render");
  if (style.canvas <= 0 || style.palette.empty()) throw Error("bad render style");

  BBox box;
  if (scene.fixed_window) {
    box = *scene.fixed_window;
  } else {
    for (const auto& t : scene.triangles) {
      for (auto p : t.pts) box.add(p);
    }
    for (const auto& p : scene.polys) {
      for (auto q : p.pts) box.add(q);
    }
    for (const auto& c : scene.circles) {
      box.add(c.center + Point(c.radius, c.radius));
      box.add(c.center - Point(c.radius, c.radius));
    }
  }
  double w = std::max(box.xmax - box.xmin, 1e-12);
  double h = std::max(box.ymax - box.ymin, 1e-12);
  double margin = style.margin_fraction * style.canvas;
  Mapper map;
  map.canvas = style.canvas;
  map.scale = (style.canvas - 2 * margin) / std::max(w, h);
  map.ox = margin - map.scale * box.xmin + 0.5 * (style.canvas - 2 * margin - map.scale * w);
  map.oy = margin - map.scale * box.ymin + 0.5 * (style.canvas - 2 * margin - map.scale * h);

  // Stable palette assignment: shape keys in first-appearance order.
  std::map<std::string, size_t> key_color;
  std::vector<std::string> key_order;
  for (const auto& t : scene.triangles) {
    if (key_color.emplace(t.key, key_color.size()).second) key_order.push_back(t.key);
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(style.canvas) + "\" height=\"" + std::to_string(style.canvas) + "\">\n";
  for (const auto& t : scene.triangles) {
    const std::string& color = style.palette[key_color[t.key] % style.palette.size()];
    out += "  <path class=\"tri\" d=\"M " + map.x(t.pts[0].real()) + " " + map.y(t.pts[0].imag()) +
           " L " + map.x(t.pts[1].real()) + " " + map.y(t.pts[1].imag()) + " L " +
           map.x(t.pts[2].real()) + " " + map.y(t.pts[2].imag()) + " Z\" fill=\"" + color +
           "\" fill-opacity=\"0.55\" stroke=\"#222222\" stroke-width=\"" + fmt(style.stroke_width) +
           "\"/>\n";
    if (style.labels) {
      Point c = (t.pts[0] + t.pts[1] + t.pts[2]) / 3.0;
      out += "  <text x=\"" + map.x(c.real()) + "\" y=\"" + map.y(c.imag()) +
             "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#111111\">" + t.label +
             "</text>\n";
    }
  }
  for (const auto& p : scene.polys) {
    if (p.pts.empty()) continue;
    std::string d = "M " + map.x(p.pts[0].real()) + " " + map.y(p.pts[0].imag());
    for (size_t i = 1; i < p.pts.size(); ++i) {
      d += " L " + map.x(p.pts[i].real()) + " " + map.y(p.pts[i].imag());
    }
    if (p.closed) d += " Z";
    std::string paint = p.cls == "hole"
                            ? "fill=\"#ffffff\" stroke=\"#aa3333\""
                            : "fill=\"none\" stroke=\"#333333\"";
    out += "  <path class=\"" + p.cls + "\" d=\"" + d + "\" " + paint + " stroke-width=\"" +
           fmt(style.stroke_width) + "\"/>\n";
  }
  for (const auto& c : scene.circles) {
    out += "  <circle cx=\"" + map.x(c.center.real()) + "\" cy=\"" + map.y(c.center.imag()) +
           "\" r=\"" + fmt(map.scale * c.radius) +
           "\" fill=\"none\" stroke=\"#336688\" stroke-width=\"" + fmt(style.stroke_width) +
           "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::vector<FlipbookFrame> flipbook(int n_from, int n_to, const FlipbookPolicy& policy,
                                    const RenderStyle& style) {
  if (n_from < n_to) throw Error("flip book runs in decreasing order of n");
  if (n_to < 2) throw Error("flip book frames need n >= 2");
  std::vector<FlipbookFrame> frames;
  std::optional<BBox> shared_window;
  for (int n = n_from; n >= n_to; --n) {
    FlipbookFrame frame;
    frame.n = n;
    try {
      double total = kTau / (2.0 * n);
      double sum = policy.ratio_a + policy.ratio_b + policy.ratio_c;
      Assignment asg{total * policy.ratio_a / sum, total * policy.ratio_b / sum,
                     total * policy.ratio_c / sum};
      DiagramSpec spec = build_doughnut(n);
      if (policy.fill && n >= 5) spec = isosceles_fill(spec);
      PlacedDiagram placed = develop(spec, asg);
      Scene scene;
      scene.add_placed(spec, placed);
      HolePolygon hole = hole_polygon(placed, spec);
      if (!hole.absent()) scene.add_polygon(hole.vertices, "hole");
      if (!shared_window) {
        // The ratios are rescaled per frame, so the big triangle has the same
        // shape and seed edge in every frame; freeze the first window.
        shared_window = placed.bbox;
      }
      scene.fixed_window = shared_window;
      frame.svg = to_svg(scene, style);
    } catch (const Error& e) {
      frame.error = e.what();
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace holo
