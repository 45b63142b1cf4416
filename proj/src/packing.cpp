#include "holo/packing.hpp"

#include <json.hpp>

#include <cmath>

#include "holo/angleform.hpp"
#include "holo/errors.hpp"

namespace holo {

namespace {

// Angles of the triangle whose circle radii are (r0, r1, r2): side lengths
// are sums of adjacent radii by tangency, angles by the law of cosines.
std::array<double, 3> tangent_triangle_angles(double r0, double r1, double r2) {
  double s01 = r0 + r1, s12 = r1 + r2, s20 = r2 + r0;
  if (s01 + s12 <= s20 || s12 + s20 <= s01 || s20 + s01 <= s12) {
    throw NotRealizable("tangent circles with radii " + std::to_string(r0) + ", " +
                        std::to_string(r1) + ", " + std::to_string(r2) +
                        " violate the triangle inequality");
  }
  auto angle = [](double adj1, double adj2, double opp) {
    double c = (adj1 * adj1 + adj2 * adj2 - opp * opp) / (2 * adj1 * adj2);
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  return {angle(s01, s20, s12), angle(s01, s12, s20), angle(s12, s20, s01)};
}

}  // namespace

std::pair<std::array<double, 3>, std::array<double, 3>> shapes_from_ratios(double ratio_s,
                                                                           double ratio_t) {
  if (!(ratio_s > 0) || !(ratio_t > 0)) throw NotRealizable("radius ratios must be positive");
  auto up = tangent_triangle_angles(1.0, ratio_s, ratio_t);
  auto down = tangent_triangle_angles(ratio_s, ratio_s * ratio_t, ratio_t);
  return {up, down};
}

FitVerdict vertex_fit_check(const std::array<double, 3>& s1, const std::array<double, 3>& s2) {
  FitVerdict v;
  double sum = 0;
  for (int i = 0; i < 3; ++i) sum += s1[i] + s2[i];
  v.angle_residual = std::abs(sum - kTau);
  v.angle_sum_ok = v.angle_residual < 1e-10 * kTau;
  // Alternating the two shapes around a vertex, each angle of either shape
  // shows up once as leading and once as trailing, so the law-of-sines
  // product telescopes; evaluate it directly.
  double log_scale = 0;
  for (int i = 0; i < 3; ++i) {
    log_scale += std::log(std::sin(s1[(i + 1) % 3])) - std::log(std::sin(s1[(i + 2) % 3]));
    log_scale += std::log(std::sin(s2[(i + 1) % 3])) - std::log(std::sin(s2[(i + 2) % 3]));
  }
  v.log_scale_residual = std::abs(log_scale);
  v.scale_ok = v.log_scale_residual < 1e-10;
  return v;
}

std::vector<Circle> PackedPatch::circles() const {
  std::vector<Circle> out;
  out.reserve(centers.size());
  for (size_t i = 0; i < centers.size(); ++i) out.push_back({centers[i], radii[i]});
  return out;
}

PackedPatch develop_packing(const PackingParams& params) {
  if (params.rows < 1 || params.cols < 1) throw Error("patch needs rows, cols >= 1");
  shapes_from_ratios(params.ratio_s, params.ratio_t);  // realizability gate

  PackedPatch patch;
  patch.rows = params.rows;
  patch.cols = params.cols;
  int w = params.cols + 1, h = params.rows + 1;
  patch.centers.assign(static_cast<size_t>(w) * h, Point(0, 0));
  patch.radii.assign(static_cast<size_t>(w) * h, 0.0);

  // Radii in log space: grid point (i, j) carries s^i * t^j.
  double ls = std::log(params.ratio_s), lt = std::log(params.ratio_t);
  auto radius = [&](int i, int j) { return std::exp(i * ls + j * lt); };
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) patch.radii[patch.index(i, j)] = radius(i, j);
  }

  // Two-circle intersection on the left of p -> q, so placed triangles stay
  // ccw.
  auto place_apex = [](Point p, double dp, Point q, double dq) {
    Point d = q - p;
    double dist = std::abs(d);
    double x = (dist * dist + dp * dp - dq * dq) / (2 * dist);
    double y2 = dp * dp - x * x;
    if (y2 < -1e-12 * dp * dp) throw NotRealizable("tangency circles do not intersect");
    Point ex = d / dist;
    Point ey(-ex.imag(), ex.real());
    return p + ex * x + ey * std::sqrt(std::max(y2, 0.0));
  };

  // Seed one edge, then develop triangle by triangle through shared edges;
  // rows are not straight lines once the ratios leave 1.
  std::vector<char> placed(patch.centers.size(), 0);
  patch.centers[patch.index(0, 0)] = Point(0, 0);
  patch.centers[patch.index(1, 0)] = Point(radius(0, 0) + radius(1, 0), 0);
  placed[patch.index(0, 0)] = 1;
  placed[patch.index(1, 0)] = 1;
  auto develop_triangle = [&](const std::array<int, 3>& t) {
    int missing = -1, count = 0;
    for (int k = 0; k < 3; ++k) {
      if (!placed[t[k]]) {
        missing = k;
        ++count;
      }
    }
    if (count == 0) return;
    if (count > 1) throw Error("internal: packing development order broke");
    int ka = t[(missing + 1) % 3], kb = t[(missing + 2) % 3];
    double da = patch.radii[ka] + patch.radii[t[missing]];
    double db = patch.radii[kb] + patch.radii[t[missing]];
    patch.centers[t[missing]] = place_apex(patch.centers[ka], da, patch.centers[kb], db);
    placed[t[missing]] = 1;
  };
  for (int j = 0; j < params.rows; ++j) {
    for (int i = 0; i < params.cols; ++i) {
      develop_triangle({patch.index(i, j), patch.index(i + 1, j), patch.index(i, j + 1)});
      develop_triangle({patch.index(i + 1, j), patch.index(i + 1, j + 1), patch.index(i, j + 1)});
    }
  }

  for (int j = 0; j < params.rows; ++j) {
    for (int i = 0; i < params.cols; ++i) {
      patch.triangles.push_back({patch.index(i, j), patch.index(i + 1, j), patch.index(i, j + 1)});
      patch.triangles.push_back(
          {patch.index(i + 1, j), patch.index(i + 1, j + 1), patch.index(i, j + 1)});
    }
  }

  // Tangency residual over every triangulation edge.
  auto check_edge = [&](int u, int v) {
    double want = patch.radii[u] + patch.radii[v];
    double got = std::abs(patch.centers[u] - patch.centers[v]);
    patch.max_tangency_residual =
        std::max(patch.max_tangency_residual, std::abs(got - want) / want);
  };
  for (const auto& t : patch.triangles) {
    check_edge(t[0], t[1]);
    check_edge(t[1], t[2]);
    check_edge(t[2], t[0]);
  }

  // Interior vertices are flat: six incident triangle angles sum to tau.
  for (int j = 1; j < params.rows; ++j) {
    for (int i = 1; i < params.cols; ++i) {
      int v = patch.index(i, j);
      double sum = 0;
      for (const auto& t : patch.triangles) {
        for (int k = 0; k < 3; ++k) {
          if (t[k] != v) continue;
          Point at = patch.centers[t[k]];
          Point u1 = patch.centers[t[(k + 1) % 3]] - at;
          Point u2 = patch.centers[t[(k + 2) % 3]] - at;
          sum += std::abs(std::arg(u2 / u1));
        }
      }
      patch.max_vertex_angle_residual =
          std::max(patch.max_vertex_angle_residual, std::abs(sum - kTau));
    }
  }
  return patch;
}

std::string packing_to_json(const PackedPatch& patch, int indent) {
  nlohmann::ordered_json j;
  j["rows"] = patch.rows;
  j["cols"] = patch.cols;
  nlohmann::ordered_json circles = nlohmann::ordered_json::array();
  for (const auto& c : patch.circles()) {
    circles.push_back({{"center", {c.center.real(), c.center.imag()}}, {"radius", c.radius}});
  }
  j["circles"] = circles;
  j["max_tangency_residual"] = patch.max_tangency_residual;
  j["max_vertex_angle_residual"] = patch.max_vertex_angle_residual;
  return j.dump(indent);
}

}  // namespace holo
