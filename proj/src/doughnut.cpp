#include "holo/doughnut.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "holo/errors.hpp"

namespace holo {

namespace {

AngleForm base_angle(int corner) {
  switch (corner) {
    case 0: return AngleForm::a();
    case 1: return AngleForm::b();
    default: return AngleForm::c();
  }
}

}  // namespace

std::vector<Shape> corner_fan(int n, int corner) {
  if (n < 2) throw Error("corner fan needs n >= 2");
  if (corner < 0 || corner > 2) throw Error("corner index must be 0, 1 or 2");
  AngleForm x = base_angle(corner);
  AngleForm y = base_angle((corner + 1) % 3);
  AngleForm z = base_angle((corner + 2) % 3);
  std::vector<Shape> fan;
  fan.reserve(n);
  for (int k = 0; k < n; ++k) {
    AngleForm yk = y + AngleForm::tau_times(Rational(k, 2LL * n));
    AngleForm zk = z + AngleForm::tau_times(Rational(n - 1 - k, 2LL * n));
    fan.emplace_back(x, yk, zk);
  }
  return fan;
}

DiagramSpec build_doughnut(int n) {
  if (n < 2) throw Error("doughnut needs n >= 2");
  DiagramSpec spec;
  spec.n = n;
  spec.metadata.name = "doughnut-n" + std::to_string(n);
  spec.metadata.figure = "ring of three corner fans inside the triangle with angles na, nb, nc";
  for (int corner = 0; corner < 3; ++corner) {
    spec.metadata.frame_angles.push_back(base_angle(corner).scaled(Rational(n)).to_string());
  }

  const char* corner_tag[3] = {"a", "b", "c"};
  const char* side_tag[3] = {"ab", "bc", "ca"};

  // Extreme fan triangles coincide pairwise across adjacent corners (same
  // base side, same two base angles), so each pair ships as one side
  // triangle; only the n-2 middle triangles are per-fan.
  for (int s = 0; s < 3; ++s) {
    TriangleSpec t;
    t.id = std::string("side-") + side_tag[s];
    t.shape = corner_fan(n, s)[0];
    spec.triangles.push_back(t);
  }
  for (int corner = 0; corner < 3; ++corner) {
    auto fan = corner_fan(n, corner);
    for (int k = 1; k <= n - 2; ++k) {
      TriangleSpec t;
      t.id = std::string("fan-") + corner_tag[corner] + "-" + std::to_string(k);
      t.shape = fan[k];
      spec.triangles.push_back(t);
    }
  }
  if (n == 3) {
    spec.triangles.push_back(
        {"center", Shape(AngleForm::tau_times(Rational(1, 6)), AngleForm::tau_times(Rational(1, 6)),
                         AngleForm::tau_times(Rational(1, 6)))});
  }
  if (n == 4) {
    Shape cap(AngleForm::tau_times(Rational(1, 8)), AngleForm::tau_times(Rational(1, 8)),
              AngleForm::tau_times(Rational(1, 4)));
    for (int s = 0; s < 3; ++s) {
      spec.triangles.push_back({std::string("cap-") + side_tag[s], cap});
    }
  }

  auto idx = [&](const std::string& id) {
    int i = spec.triangle_index(id);
    if (i < 0) throw Error("internal: missing " + id);
    return i;
  };
  auto glue = [&](const std::string& id0, int e0, const std::string& id1, int e1) {
    spec.gluings.push_back({idx(id0), e0, idx(id1), e1});
  };

  // Chain of corner `x`: side-x, fan-x-1 .. fan-x-(n-2), side-(x+2 mod 3).
  for (int corner = 0; corner < 3; ++corner) {
    std::string first = std::string("side-") + side_tag[corner];
    std::string last = std::string("side-") + side_tag[(corner + 2) % 3];
    if (n == 2) {
      glue(first, 1, last, 0);
      continue;
    }
    std::string prev = first;
    for (int k = 1; k <= n - 2; ++k) {
      std::string cur = std::string("fan-") + corner_tag[corner] + "-" + std::to_string(k);
      glue(prev, 1, cur, 2);
      prev = cur;
    }
    glue(prev, 1, last, 0);
  }

  if (n == 3) {
    glue("fan-a-1", 0, "center", 0);
    glue("fan-b-1", 0, "center", 1);
    glue("fan-c-1", 0, "center", 2);
  }
  if (n == 4) {
    glue("cap-ab", 0, "fan-a-1", 0);
    glue("cap-ab", 1, "fan-b-2", 0);
    glue("cap-bc", 0, "fan-b-1", 0);
    glue("cap-bc", 1, "fan-c-2", 0);
    glue("cap-ca", 0, "fan-c-1", 0);
    glue("cap-ca", 1, "fan-a-2", 0);
  }

  auto ring = [&](std::initializer_list<std::pair<const char*, int>> entries) {
    VertexRing vr;
    for (auto& [id, p] : entries) vr.entries.emplace_back(idx(id), p);
    spec.interior_vertices.push_back(vr);
  };
  if (n == 2) {
    ring({{"side-ab", 2}, {"side-bc", 2}, {"side-ca", 2}});
  } else if (n == 3) {
    ring({{"side-ab", 2}, {"fan-b-1", 2}, {"center", 2}, {"fan-a-1", 1}});
    ring({{"side-bc", 2}, {"fan-c-1", 2}, {"center", 0}, {"fan-b-1", 1}});
    ring({{"side-ca", 2}, {"fan-a-1", 2}, {"center", 1}, {"fan-c-1", 1}});
  } else if (n == 4) {
    ring({{"side-ab", 2}, {"fan-a-1", 1}, {"cap-ab", 2}, {"fan-b-2", 2}});
    ring({{"side-bc", 2}, {"fan-b-1", 1}, {"cap-bc", 2}, {"fan-c-2", 2}});
    ring({{"side-ca", 2}, {"fan-c-1", 1}, {"cap-ca", 2}, {"fan-a-2", 2}});
  }
  // n >= 5: every non-corner vertex borders the hole; no interior rings.

  spec.validate();
  return spec;
}

namespace {

struct BoundaryEdge {
  int tri = 0, edge = 0;
  int from_class = 0, to_class = 0;  // reversed traversal (enclosed region left)
  Point from, to;
};

int corner_of_triangle_id(const std::string& id) {
  if (id.rfind("fan-a", 0) == 0) return 0;
  if (id.rfind("fan-b", 0) == 0) return 1;
  if (id.rfind("fan-c", 0) == 0) return 2;
  return -1;
}

std::vector<std::vector<BoundaryEdge>> boundary_loops(const PlacedDiagram& placed,
                                                      const DiagramSpec& spec) {
  auto classes = spec.vertex_classes();
  std::vector<BoundaryEdge> edges;
  for (int t = 0; t < static_cast<int>(spec.triangles.size()); ++t) {
    for (int e = 0; e < 3; ++e) {
      if (spec.gluing_for(t, e)) continue;
      BoundaryEdge be;
      be.tri = t;
      be.edge = e;
      be.from_class = classes[t][(e + 2) % 3];
      be.to_class = classes[t][(e + 1) % 3];
      be.from = placed.placements[t][(e + 2) % 3];
      be.to = placed.placements[t][(e + 1) % 3];
      edges.push_back(be);
    }
  }
  std::map<int, int> start_at;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (!start_at.emplace(edges[i].from_class, static_cast<int>(i)).second) {
      throw SpecError("boundary is not a 1-manifold");
    }
  }
  std::vector<std::vector<BoundaryEdge>> loops;
  std::set<int> used;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (used.count(static_cast<int>(i))) continue;
    std::vector<BoundaryEdge> loop;
    int cur = static_cast<int>(i);
    while (!used.count(cur)) {
      used.insert(cur);
      loop.push_back(edges[cur]);
      auto it = start_at.find(edges[cur].to_class);
      if (it == start_at.end()) throw SpecError("open boundary chain");
      cur = it->second;
    }
    loops.push_back(std::move(loop));
  }
  return loops;
}

double loop_area(const std::vector<BoundaryEdge>& loop) {
  double s = 0;
  for (const auto& e : loop) s += cross(e.from, e.to);
  return 0.5 * s;
}

}  // namespace

HolePolygon hole_polygon(const PlacedDiagram& placed, const DiagramSpec& spec) {
  double diag = placed.bbox.diagonal();

  int m = static_cast<int>(spec.triangles.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      double ov = triangle_overlap_area(placed.placements[i].data(), placed.placements[j].data());
      if (ov > 1e-9 * diag * diag) {
        throw OverlappingFans("triangles " + spec.triangles[i].id + " and " + spec.triangles[j].id +
                              " overlap with area " + std::to_string(ov));
      }
    }
  }

  auto loops = boundary_loops(placed, spec);
  HolePolygon hole;
  double outer_area = 0;
  const std::vector<BoundaryEdge>* inner = nullptr;
  double inner_area = 0;
  for (const auto& loop : loops) {
    double area = loop_area(loop);
    if (area < 0) {
      outer_area = std::max(outer_area, -area);
    } else if (!inner || area > inner_area) {
      inner = &loop;
      inner_area = area;
    }
  }
  hole.big_area = outer_area;
  if (!inner || inner_area < 1e-9 * outer_area) return hole;

  std::vector<Point> pts;
  std::vector<int> owners;  // association of the edge leaving pts[i]
  for (const auto& e : *inner) {
    pts.push_back(e.from);
    owners.push_back(corner_of_triangle_id(spec.triangles[e.tri].id));
  }
  auto drop = [&](size_t i) {
    pts.erase(pts.begin() + i);
    owners.erase(owners.begin() + i);
  };
  for (size_t i = 0; i < pts.size() && pts.size() > 3;) {
    size_t j = (i + 1) % pts.size();
    if (std::abs(pts[i] - pts[j]) < 1e-9 * diag) {
      drop(j);
      i = 0;  // wraparound drops shift indices; rescan
    } else {
      ++i;
    }
  }
  for (size_t i = 0; i < pts.size() && pts.size() > 3;) {
    size_t prev = (i + pts.size() - 1) % pts.size();
    size_t next = (i + 1) % pts.size();
    Point u = pts[i] - pts[prev];
    Point v = pts[next] - pts[i];
    if (std::abs(std::arg(v / u)) < 1e-9) {
      drop(i);
      i = 0;
    } else {
      ++i;
    }
  }
  hole.vertices = std::move(pts);
  hole.corner_association = std::move(owners);
  hole.area = polygon_area(hole.vertices);
  return hole;
}

double default_fill_beta(const DiagramSpec& spec) {
  int n = spec.n;
  double v = kTau / (6.0 * n);
  Assignment eq{v, v, v};
  PlacedDiagram placed = develop(spec, eq);
  HolePolygon hole = hole_polygon(placed, spec);
  if (hole.absent()) throw HoleAbsent("doughnut has no hole to fill");

  Point center(0, 0);
  for (auto p : hole.vertices) center += p;
  center /= static_cast<double>(hole.vertices.size());

  Point corners[3] = {
      placed.placements[spec.triangle_index("side-ab")][0],
      placed.placements[spec.triangle_index("side-bc")][0],
      placed.placements[spec.triangle_index("side-ca")][0],
  };

  double beta_min = kTau / 8;
  size_t k = hole.vertices.size();
  // Adjacent fills meeting at a hole vertex occupy 2*beta there; stay inside
  // the interior angle.
  for (size_t i = 0; i < k; ++i) {
    Point u = hole.vertices[(i + k - 1) % k] - hole.vertices[i];
    Point w = hole.vertices[(i + 1) % k] - hole.vertices[i];
    double interior = std::arg(u / w);
    if (interior < 0) interior += kTau;
    beta_min = std::min(beta_min, 0.45 * interior);
  }
  for (size_t i = 0; i < k; ++i) {
    int corner = hole.corner_association[i];
    if (corner < 0) continue;
    Point p = hole.vertices[i], q = hole.vertices[(i + 1) % k];
    Point mid = 0.5 * (p + q);
    Point dir = q - p;
    Point inward(-dir.imag(), dir.real());  // hole interior lies left of p->q
    inward /= std::abs(inward);
    // Apex on the corner-to-center line: solve mid + h*inward on that line.
    Point cdir = center - corners[corner];
    Point normal(-cdir.imag(), cdir.real());
    double denom = dot(inward, normal);
    if (std::abs(denom) < 1e-15) continue;
    double h = -dot(mid - corners[corner], normal) / denom;
    if (h <= 0) continue;
    beta_min = std::min(beta_min, std::atan2(h, 0.5 * std::abs(dir)));
  }
  double grid = kTau / (16.0 * n);
  double snapped = std::floor(beta_min / grid) * grid;
  if (snapped <= 0) snapped = beta_min / 2;
  return snapped;
}

DiagramSpec isosceles_fill(const DiagramSpec& spec, std::optional<double> beta_opt) {
  if (spec.n < 5) throw Error("isosceles fill applies to doughnuts with n >= 5");
  double beta = beta_opt.has_value() ? *beta_opt : default_fill_beta(spec);
  if (beta <= 0) return spec;
  if (beta >= kTau / 4) throw ApexCollision("base angle must stay below tau/4");

  // Express beta as an exact fraction of tau (nearest fine grid point).
  long long denom = 16LL * spec.n * 64;
  long long num = std::llround(beta / kTau * static_cast<double>(denom));
  if (num <= 0) return spec;
  Rational beta_r(num, denom);
  AngleForm beta_form = AngleForm::tau_times(beta_r);
  AngleForm apex_form = AngleForm::tau_times(Rational(1, 2) - beta_r - beta_r);
  Shape fill_shape(beta_form, beta_form, apex_form);

  DiagramSpec out = spec;
  int counter = 0;
  std::vector<int> fill_indices;
  int m = static_cast<int>(spec.triangles.size());
  for (int t = 0; t < m; ++t) {
    for (int e = 0; e < 3; ++e) {
      if (spec.gluing_for(t, e)) continue;
      if (corner_of_triangle_id(spec.triangles[t].id) < 0) continue;  // outer side
      TriangleSpec fill;
      fill.id = "fill-" + std::to_string(counter++);
      fill.shape = fill_shape;
      out.triangles.push_back(fill);
      int ft = static_cast<int>(out.triangles.size()) - 1;
      out.gluings.push_back({ft, 2, t, e});
      fill_indices.push_back(ft);
    }
  }
  out.metadata.name = spec.metadata.name + "-filled";
  out.validate();

  double v = kTau / (6.0 * spec.n);
  PlacedDiagram placed = develop(out, Assignment{v, v, v});
  for (size_t i = 0; i < fill_indices.size(); ++i) {
    for (size_t j = i + 1; j < fill_indices.size(); ++j) {
      double ov = triangle_overlap_area(placed.placements[fill_indices[i]].data(),
                                        placed.placements[fill_indices[j]].data());
      if (ov > 1e-12 * placed.bbox.diagonal() * placed.bbox.diagonal()) {
        throw ApexCollision("fill triangles overlap; reduce the base angle");
      }
    }
  }
  return out;
}

std::vector<Point> limit_curve(double corner_angle, int samples) {
  if (!(corner_angle > 0) || !(corner_angle <= kTau / 2)) {
    throw Error("corner angle must lie in (0, tau/2)");
  }
  if (samples < 1) throw Error("need at least one sample");
  double expo = kTau / (2.0 * corner_angle);
  std::vector<Point> pts;
  pts.reserve(samples);
  for (int j = 1; j <= samples; ++j) {
    double phi = corner_angle * j / (samples + 1.0);
    double r = std::pow(1.0 / std::sin(phi * expo), 1.0 / expo);
    pts.push_back(std::polar(r, phi));
  }
  return pts;
}

namespace {

// Max distance from aligned points (corner at origin, bisector on +x) to the
// limit curve, ignoring points beyond `window`.
double max_distance_to_curve(const std::vector<Point>& aligned, double corner_angle,
                             double window) {
  double expo = kTau / (2.0 * corner_angle);
  auto curve_point = [&](double phi) {
    double r = std::pow(1.0 / std::sin(phi * expo), 1.0 / expo);
    return std::polar(r, phi - corner_angle / 2);
  };
  const int kSamples = 20000;
  std::vector<Point> curve(kSamples);
  for (int j = 1; j <= kSamples; ++j) {
    curve[j - 1] = curve_point(corner_angle * j / (kSamples + 1.0));
  }
  double worst = 0;
  for (Point z : aligned) {
    if (std::abs(z) > window) continue;
    double best = 1e300;
    int best_j = 1;
    for (int j = 1; j <= kSamples; ++j) {
      double d = std::abs(z - curve[j - 1]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    double step = corner_angle / (kSamples + 1.0);
    double lo = std::max(step * 1e-3, (best_j - 2) * step);
    double hi = std::min(corner_angle - step * 1e-3, (best_j + 2) * step);
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = std::abs(z - curve_point(x1)), f2 = std::abs(z - curve_point(x2));
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = std::abs(z - curve_point(x1));
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = std::abs(z - curve_point(x2));
      }
    }
    best = std::min({best, f1, f2});
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double boundary_distance_to_limit_curve(const std::vector<Point>& aligned, double corner_angle,
                                        double window) {
  return max_distance_to_curve(aligned, corner_angle, window);
}

BoundaryStudy renormalized_boundary(int n, const Assignment& asg, int corner, double window) {
  if (corner < 0 || corner > 2) throw Error("corner index must be 0, 1 or 2");
  DiagramSpec spec = build_doughnut(n);
  PlacedDiagram placed = develop(spec, asg);
  HolePolygon hole = hole_polygon(placed, spec);
  if (hole.absent()) throw HoleAbsent("doughnut for n=" + std::to_string(n) + " has no hole");

  const char* side_ids[3] = {"side-ab", "side-bc", "side-ca"};
  int side = spec.triangle_index(side_ids[corner]);
  Point corner_pt = placed.placements[side][0];
  Point next_pt = placed.placements[side][1];
  double base[3] = {asg.a, asg.b, asg.c};
  double corner_angle = n * base[corner];
  double bisector_dir = std::arg(next_pt - corner_pt) + corner_angle / 2;

  std::vector<Point> arc;
  size_t k = hole.vertices.size();
  bool any_for_corner = false;
  for (size_t i = 0; i < k; ++i) {
    if (hole.corner_association[i] == corner) any_for_corner = true;
  }
  for (size_t i = 0; i < k; ++i) {
    bool take = !any_for_corner;
    if (hole.corner_association[i] == corner) take = true;
    if (hole.corner_association[(i + k - 1) % k] == corner) take = true;
    if (take) arc.push_back(hole.vertices[i]);
  }

  BoundaryStudy study;
  Point rot = std::polar(1.0, -bisector_dir);
  for (Point p : arc) study.renormalized.push_back((p - corner_pt) * rot);

  size_t anchor = 0;
  double best = 1e300;
  for (size_t i = 0; i < study.renormalized.size(); ++i) {
    double off = std::abs(std::arg(study.renormalized[i]));
    if (off < best) {
      best = off;
      anchor = i;
    }
  }
  Point z0 = study.renormalized[anchor];
  if (std::abs(z0) == 0.0) throw Error("degenerate boundary vertex at the corner");
  for (auto& z : study.renormalized) z /= z0;
  study.max_distance = max_distance_to_curve(study.renormalized, corner_angle, window);
  return study;
}

std::vector<Point> power_transform(const std::vector<Point>& points, double exponent,
                                   Point center) {
  std::vector<Point> out;
  out.reserve(points.size());
  Point prev;
  bool have_prev = false;
  for (Point p : points) {
    Point z = p - center;
    if (std::abs(z) == 0.0) throw Error("input point coincides with the transform center");
    if (z.imag() == 0.0 && z.real() < 0.0) {
      throw BranchCutCrossing("point on the negative real axis of the centered frame");
    }
    if (have_prev) {
      bool s0 = prev.imag() > 0, s1 = z.imag() > 0;
      if (s0 != s1) {
        double t = prev.imag() / (prev.imag() - z.imag());
        double xc = prev.real() + t * (z.real() - prev.real());
        if (xc < 0) {
          throw BranchCutCrossing("segment between consecutive points crosses the cut");
        }
      }
    }
    prev = z;
    have_prev = true;
    out.push_back(std::exp(exponent * std::log(z)));
  }
  return out;
}

}  // namespace holo
