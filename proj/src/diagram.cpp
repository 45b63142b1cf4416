#include "holo/diagram.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <set>

#include "holo/errors.hpp"

namespace holo {

double triangle_overlap_area(const Point t1[3], const Point t2[3]) {
  // Clip t1 against each ccw half-plane of t2.
  std::vector<Point> poly(t1, t1 + 3);
  for (int k = 0; k < 3 && !poly.empty(); ++k) {
    Point a = t2[k], b = t2[(k + 1) % 3];
    std::vector<Point> out;
    size_t m = poly.size();
    for (size_t i = 0; i < m; ++i) {
      Point p = poly[i], q = poly[(i + 1) % m];
      double dp = cross(b - a, p - a);
      double dq = cross(b - a, q - a);
      if (dp >= 0) out.push_back(p);
      if ((dp > 0 && dq < 0) || (dp < 0 && dq > 0)) {
        double t = dp / (dp - dq);
        out.push_back(p + t * (q - p));
      }
    }
    poly = std::move(out);
  }
  if (poly.size() < 3) return 0.0;
  return std::abs(polygon_area(poly));
}

Point circumcenter(Point p, Point q, Point r) {
  double d = 2.0 * cross(q - p, r - p);
  double p2 = std::norm(p), q2 = std::norm(q), r2 = std::norm(r);
  double ux = (p2 * (q.imag() - r.imag()) + q2 * (r.imag() - p.imag()) + r2 * (p.imag() - q.imag())) / d;
  double uy = (p2 * (r.real() - q.real()) + q2 * (p.real() - r.real()) + r2 * (q.real() - p.real())) / d;
  return Point(ux, uy);
}

int DiagramSpec::triangle_index(const std::string& id) const {
  for (size_t i = 0; i < triangles.size(); ++i) {
    if (triangles[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

const Gluing* DiagramSpec::gluing_for(int t, int e) const {
  for (const auto& g : gluings) {
    if ((g.t0 == t && g.e0 == e) || (g.t1 == t && g.e1 == e)) return &g;
  }
  return nullptr;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

std::vector<std::array<int, 3>> DiagramSpec::vertex_classes() const {
  int m = static_cast<int>(triangles.size());
  UnionFind uf(3 * m);
  for (const auto& g : gluings) {
    // Edge e joins vertices e+1 -> e+2; opposite traversal identifies
    // (t0, e0+1) with (t1, e1+2) and (t0, e0+2) with (t1, e1+1).
    uf.unite(3 * g.t0 + (g.e0 + 1) % 3, 3 * g.t1 + (g.e1 + 2) % 3);
    uf.unite(3 * g.t0 + (g.e0 + 2) % 3, 3 * g.t1 + (g.e1 + 1) % 3);
  }
  std::vector<std::array<int, 3>> classes(m);
  std::map<int, int> renumber;
  for (int t = 0; t < m; ++t) {
    for (int v = 0; v < 3; ++v) {
      int root = uf.find(3 * t + v);
      auto [it, fresh] = renumber.emplace(root, static_cast<int>(renumber.size()));
      classes[t][v] = it->second;
    }
  }
  return classes;
}

Ring DiagramSpec::ring_at(int vertex_class) const {
  auto classes = vertex_classes();
  Ring ring;
  for (size_t t = 0; t < triangles.size(); ++t) {
    for (int v = 0; v < 3; ++v) {
      if (classes[t][v] == vertex_class) {
        ring.entries.push_back({triangles[t].shape, v});
      }
    }
  }
  return ring;
}

void DiagramSpec::validate() const {
  int m = static_cast<int>(triangles.size());
  if (m == 0) throw SpecError("diagram has no triangles");
  std::set<std::string> ids;
  for (const auto& t : triangles) {
    if (!ids.insert(t.id).second) throw SpecError("duplicate triangle id " + t.id);
  }
  std::set<std::pair<int, int>> used;
  for (const auto& g : gluings) {
    for (auto [t, e] : {std::pair{g.t0, g.e0}, std::pair{g.t1, g.e1}}) {
      if (t < 0 || t >= m || e < 0 || e > 2) throw SpecError("gluing out of range");
      if (!used.insert({t, e}).second) {
        throw SpecError("edge used twice: " + triangles[t].id + "/" + std::to_string(e));
      }
    }
  }
  // Connectivity.
  std::vector<char> seen(m, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (const auto& g : gluings) {
      int other = -1;
      if (g.t0 == t) other = g.t1;
      if (g.t1 == t) other = g.t0;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        ++count;
        queue.push_back(other);
      }
    }
  }
  if (count != m) throw SpecError("gluing graph is disconnected");
  // Interior vertex rings: all entries share one vertex class and
  // consecutive entries share a gluing at that vertex.
  auto classes = vertex_classes();
  for (const auto& ring : interior_vertices) {
    if (ring.entries.empty()) throw SpecError("empty interior vertex ring");
    int cls = classes[ring.entries[0].first][ring.entries[0].second];
    for (const auto& [t, p] : ring.entries) {
      if (t < 0 || t >= m || p < 0 || p > 2) throw SpecError("ring entry out of range");
      if (classes[t][p] != cls) throw SpecError("ring entries do not share a vertex");
    }
    size_t k = ring.entries.size();
    for (size_t i = 0; i < k; ++i) {
      int t0 = ring.entries[i].first;
      int t1 = ring.entries[(i + 1) % k].first;
      bool linked = false;
      for (const auto& g : gluings) {
        if ((g.t0 == t0 && g.t1 == t1) || (g.t0 == t1 && g.t1 == t0)) {
          // The shared edge must touch the ring vertex.
          int ta = g.t0, ea = g.e0;
          if (classes[ta][(ea + 1) % 3] == cls || classes[ta][(ea + 2) % 3] == cls) {
            linked = true;
            break;
          }
        }
      }
      if (!linked && k > 1) {
        throw SpecError("consecutive ring entries do not share a glued edge at vertex");
      }
    }
  }
}

namespace {

// Places vertex `k` of a triangle whose other two vertices are known.
// Angles are the evaluated ccw interior angles.
Point place_third(const std::array<double, 3>& ang, int k, Point pk1, Point pk2) {
  int i = (k + 1) % 3;  // known
  int j = (k + 2) % 3;  // known
  // |Pi - Pk| / |Pi - Pj| = sin(angle j) / sin(angle k); rotate the edge
  // i->j ccw by angle i around Pi.
  double ratio = std::sin(ang[j]) / std::sin(ang[k]);
  Point rot = std::polar(ratio, ang[i]);
  return pk1 + (pk2 - pk1) * rot;
}

}  // namespace

PlacedDiagram develop(const DiagramSpec& spec, const Assignment& asg, const SeedPose& seed) {
  spec.validate();
  int m = static_cast<int>(spec.triangles.size());

  std::vector<std::array<double, 3>> angles(m);
  for (int t = 0; t < m; ++t) {
    try {
      angles[t] = eval_shape(spec.triangles[t].shape, asg, spec.n);
    } catch (const UnrealizableShape& e) {
      throw UnrealizableShape(std::string(e.what()) + " in triangle " + spec.triangles[t].id);
    }
  }

  PlacedDiagram placed;
  placed.placements.assign(m, {});
  placed.residuals.assign(spec.gluings.size(), 0.0);
  std::vector<char> done(m, 0);

  int seed_t = seed.triangle_id.empty() ? 0 : spec.triangle_index(seed.triangle_id);
  if (seed_t < 0) throw UnknownName("seed triangle " + seed.triangle_id + " not in spec");
  placed.seed_id = spec.triangles[seed_t].id;
  placed.seed = seed;

  auto& sp = placed.placements[seed_t];
  sp[0] = seed.anchor0;
  sp[1] = seed.anchor1;
  sp[2] = place_third(angles[seed_t], 2, sp[0], sp[1]);
  done[seed_t] = 1;

  std::deque<int> queue{seed_t};
  int reached = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < spec.gluings.size(); ++gi) {
      const Gluing& g = spec.gluings[gi];
      int from = -1, efrom = -1, to = -1, eto = -1;
      if (g.t0 == t) {
        from = g.t0; efrom = g.e0; to = g.t1; eto = g.e1;
      } else if (g.t1 == t) {
        from = g.t1; efrom = g.e1; to = g.t0; eto = g.e0;
      } else {
        continue;
      }
      Point q1 = placed.placements[from][(efrom + 1) % 3];
      Point q2 = placed.placements[from][(efrom + 2) % 3];
      if (!done[to]) {
        auto& tp = placed.placements[to];
        tp[(eto + 1) % 3] = q2;  // opposite traversal
        tp[(eto + 2) % 3] = q1;
        tp[eto] = place_third(angles[to], eto, q2, q1);
        done[to] = 1;
        ++reached;
        queue.push_back(to);
      } else {
        double r = std::max(std::abs(placed.placements[to][(eto + 1) % 3] - q2),
                            std::abs(placed.placements[to][(eto + 2) % 3] - q1));
        placed.residuals[gi] = std::max(placed.residuals[gi], r);
      }
    }
  }
  if (reached != m) throw DisconnectedSpec("development did not reach every triangle");

  for (int t = 0; t < m; ++t) {
    for (auto p : placed.placements[t]) placed.bbox.add(p);
    double area = triangle_area(placed.placements[t][0], placed.placements[t][1],
                                placed.placements[t][2]);
    double scale = std::norm(placed.placements[t][1] - placed.placements[t][0]);
    if (!(area > 1e-12 * scale)) {
      throw UnrealizableShape("triangle " + spec.triangles[t].id +
                              " developed degenerate or clockwise");
    }
  }
  placed.max_residual = 0;
  for (double r : placed.residuals) placed.max_residual = std::max(placed.max_residual, r);
  double diag = placed.bbox.diagonal();
  placed.normalized_residual = diag > 0 ? placed.max_residual / diag : placed.max_residual;
  return placed;
}

ExistenceReport verify_existence(const DiagramSpec& spec, const Assignment& asg, double tolerance) {
  ExistenceReport rep;
  rep.tolerance = tolerance;
  rep.symbolic_ok = true;
  for (const auto& t : spec.triangles) {
    bool ok = shape_sum_check(t.shape, spec.n);
    rep.shape_verdicts.emplace_back(t.id, ok);
    if (!ok) rep.symbolic_ok = false;
  }
  for (const auto& vr : spec.interior_vertices) {
    Ring ring;
    for (auto [t, p] : vr.entries) ring.entries.push_back({spec.triangles[t].shape, p});
    EzVerdict v = ez_check(ring, spec.n);
    rep.vertex_verdicts.push_back(v);
    if (!v.pass()) rep.symbolic_ok = false;
  }
  PlacedDiagram placed = develop(spec, asg);
  rep.normalized_residual = placed.normalized_residual;
  rep.numeric_ok = rep.normalized_residual < tolerance;
  rep.exists = rep.symbolic_ok && rep.numeric_ok;
  return rep;
}

}  // namespace holo
