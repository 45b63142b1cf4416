#include "holo/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <thread>

#include "holo/doughnut.hpp"
#include "holo/errors.hpp"
#include "holo/sampling.hpp"

namespace holo {

std::vector<Triangulation> enumerate_hole_triangulations(int m, TriangulationPolicy policy) {
  if (m < 3) throw Error("hole needs at least 3 vertices");
  // All triangulations of the convex m-gon 0..m-1 (Catalan numbers), built by
  // recursing on the triangle attached to edge (lo, hi).
  std::map<std::pair<int, int>, std::vector<Triangulation>> memo;
  auto solve = [&](auto&& self, int lo, int hi) -> const std::vector<Triangulation>& {
    auto key = std::make_pair(lo, hi);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Triangulation> out;
    if (hi - lo < 2) {
      out.push_back({});
    } else {
      for (int k = lo + 1; k < hi; ++k) {
        const auto& left = self(self, lo, k);
        const auto& right = self(self, k, hi);
        for (const auto& l : left) {
          for (const auto& r : right) {
            Triangulation t;
            t.push_back({lo, k, hi});
            t.insert(t.end(), l.begin(), l.end());
            t.insert(t.end(), r.begin(), r.end());
            out.push_back(std::move(t));
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::vector<Triangulation> all;
  for (const auto& t : solve(solve, 0, m - 1)) {
    Triangulation fixed = t;
    for (auto& tri : fixed) std::sort(tri.begin(), tri.end());
    std::sort(fixed.begin(), fixed.end());
    all.push_back(std::move(fixed));
  }
  std::sort(all.begin(), all.end());
  if (policy == TriangulationPolicy::kSingleInteriorVertex) {
    Triangulation fan;
    for (int i = 0; i < m; ++i) fan.push_back({i, (i + 1) % m, m});
    all.push_back(std::move(fan));
  }
  return all;
}

namespace {

// Reduced linear form P*a + Q*b + K*tau/(2n) (c eliminated by the
// constraint); exact in integers for everything the search touches.
struct RForm {
  long long p = 0, q = 0, k = 0;
  bool operator==(const RForm& o) const { return p == o.p && q == o.q && k == o.k; }
  bool operator<(const RForm& o) const {
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return k < o.k;
  }
  RForm operator+(const RForm& o) const { return {p + o.p, q + o.q, k + o.k}; }
};

struct RawForm {
  int p = 0, q = 0, r = 0, k = 0;  // k in units of tau/(2n)
  RForm reduced() const { return {p - r, q - r, k + r}; }
  double eval(const Assignment& asg, int n) const {
    return p * asg.a + q * asg.b + r * asg.c + k * kTau / (2.0 * n);
  }
  AngleForm to_form(int n) const {
    return make_form(Rational(p), Rational(q), Rational(r), Rational(k, 2LL * n));
  }
};

long long exact_int(const Rational& r, const char* what) {
  if (!r.is_integer()) throw Error(std::string("non-integer coefficient in ") + what);
  return std::llround(r.to_double());
}

RForm reduce_angleform(const AngleForm& f, int n) {
  AngleForm red = f.reduced(n);
  Rational kk = red.coeff_tau() * Rational(2LL * n);
  return {exact_int(red.coeff_a(), "ring shape"), exact_int(red.coeff_b(), "ring shape"),
          exact_int(kk, "ring shape")};
}

struct HoleVertexInfo {
  RForm pivot_sum;
  std::vector<RForm> leading;
  std::vector<RForm> trailing;
};

struct HoleEdgeRef {
  int tri = 0, edge = 0;
  int from = 0, to = 0;  // hole vertex indices, ccw
};

struct Instance {
  int n = 0;
  DiagramSpec ring;
  std::vector<HoleEdgeRef> cycle;
  std::vector<HoleVertexInfo> vertices;
  std::vector<Triangulation> triangulations;
  std::vector<RawForm> form_set;
  std::vector<char> form_positive;  // positivity on the sample box, by index
  uint64_t per_pair = 0;
  std::vector<uint64_t> tri_space;
  std::vector<uint64_t> tri_offset;
  uint64_t total_space = 0;
  std::vector<Assignment> box_samples;
  std::vector<Assignment> gate_samples;
};

Instance build_instance(int n, const SearchBounds& bounds, uint64_t seed) {
  if (n <= 3) throw HoleAbsent("the doughnut hole is absent for n = " + std::to_string(n));
  if (bounds.max_numerator < 1 || bounds.max_fill_triangles < 1) {
    throw Error("search bounds must be positive");
  }
  Instance inst;
  inst.n = n;
  inst.ring = build_doughnut(n);

  // Hole cycle: unglued edges that are not the outer sides, chained by vertex
  // class in reversed (hole-ccw) direction.
  auto classes = inst.ring.vertex_classes();
  std::vector<std::pair<int, int>> free_edges;
  for (int t = 0; t < static_cast<int>(inst.ring.triangles.size()); ++t) {
    bool outer_side = inst.ring.triangles[t].id.rfind("side-", 0) == 0;
    for (int e = 0; e < 3; ++e) {
      if (inst.ring.gluing_for(t, e)) continue;
      if (outer_side && e == 2) continue;
      free_edges.emplace_back(t, e);
    }
  }
  if (free_edges.empty()) {
    throw HoleAbsent("the doughnut hole is absent for n = " + std::to_string(n));
  }
  std::map<int, std::pair<int, int>> edge_from;
  for (auto [t, e] : free_edges) edge_from[classes[t][(e + 2) % 3]] = {t, e};
  int start = edge_from.begin()->first;
  int cur = start;
  std::map<int, int> class_to_hole;
  do {
    auto [t, e] = edge_from.at(cur);
    HoleEdgeRef ref;
    ref.tri = t;
    ref.edge = e;
    ref.from = static_cast<int>(inst.cycle.size());
    class_to_hole[cur] = ref.from;
    inst.cycle.push_back(ref);
    cur = classes[t][(e + 1) % 3];
  } while (cur != start);
  int m = static_cast<int>(inst.cycle.size());
  for (int i = 0; i < m; ++i) inst.cycle[i].to = (i + 1) % m;

  inst.vertices.resize(m);
  for (int t = 0; t < static_cast<int>(inst.ring.triangles.size()); ++t) {
    for (int v = 0; v < 3; ++v) {
      auto it = class_to_hole.find(classes[t][v]);
      if (it == class_to_hole.end()) continue;
      HoleVertexInfo& info = inst.vertices[it->second];
      const Shape& s = inst.ring.triangles[t].shape;
      info.pivot_sum = info.pivot_sum + reduce_angleform(s.angles[v], n);
      info.leading.push_back(reduce_angleform(s.angles[leading_index(v)], n));
      info.trailing.push_back(reduce_angleform(s.angles[trailing_index(v)], n));
    }
  }

  for (auto& t : enumerate_hole_triangulations(m, bounds.policy)) {
    if (static_cast<int>(t.size()) <= bounds.max_fill_triangles) {
      inst.triangulations.push_back(std::move(t));
    }
  }

  int N = bounds.max_numerator;
  for (int p = -N; p <= N; ++p) {
    for (int q = -N; q <= N; ++q) {
      for (int r = -N; r <= N; ++r) {
        for (int k = -N; k <= N; ++k) inst.form_set.push_back({p, q, r, k});
      }
    }
  }
  uint64_t f = inst.form_set.size();
  inst.per_pair = f * f;
  for (const auto& t : inst.triangulations) {
    uint64_t space = 1;
    for (size_t i = 0; i < t.size(); ++i) {
      if (space > UINT64_MAX / inst.per_pair) {
        throw Error("search space overflows; tighten max_numerator or max_fill_triangles");
      }
      space *= inst.per_pair;
    }
    inst.tri_offset.push_back(inst.total_space);
    inst.tri_space.push_back(space);
    if (inst.total_space > UINT64_MAX - space) {
      throw Error("search space overflows; tighten max_numerator or max_fill_triangles");
    }
    inst.total_space += space;
  }

  SplitMix64 box_rng(seed ^ 0xb0c5b0c5ULL);
  for (int i = 0; i < 20; ++i) {
    double total = kTau / (2.0 * n);
    double low = kTau / (40.0 * n);
    double span = total - 3 * low;
    double u = box_rng.uniform(), v = box_rng.uniform();
    if (u > v) std::swap(u, v);
    Assignment asg;
    asg.a = low + span * u;
    asg.b = low + span * (v - u);
    asg.c = total - asg.a - asg.b;
    inst.box_samples.push_back(asg);
  }
  SplitMix64 gate_rng(seed + 1);
  for (int i = 0; i < 10; ++i) inst.gate_samples.push_back(sample_assignment(n, gate_rng));

  inst.form_positive.resize(inst.form_set.size());
  for (size_t i = 0; i < inst.form_set.size(); ++i) {
    bool ok = true;
    for (const auto& asg : inst.box_samples) {
      double v = inst.form_set[i].eval(asg, n);
      if (v <= 1e-9 || v >= kTau / 2 - 1e-9) {
        ok = false;
        break;
      }
    }
    inst.form_positive[i] = ok ? 1 : 0;
  }
  return inst;
}

int form_index(const RawForm& f, int N) {
  int w = 2 * N + 1;
  return ((f.p + N) * w + (f.q + N)) * w * w + (f.r + N) * w + (f.k + N);
}

DiagramSpec splice(const Instance& inst, const Triangulation& tri,
                   const std::vector<std::array<RawForm, 3>>& shapes) {
  DiagramSpec out = inst.ring;
  int m = static_cast<int>(inst.cycle.size());
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> diagonal_sides;
  for (size_t f = 0; f < tri.size(); ++f) {
    TriangleSpec t;
    t.id = "fill-" + std::to_string(f);
    for (int i = 0; i < 3; ++i) t.shape.angles[i] = shapes[f][i].to_form(inst.n);
    out.triangles.push_back(t);
    int ft = static_cast<int>(out.triangles.size()) - 1;
    for (int i = 0; i < 3; ++i) {
      int v0 = tri[f][i], v1 = tri[f][(i + 1) % 3];
      int fe = (i + 2) % 3;
      if (v1 < m && v0 < m && v1 == (v0 + 1) % m) {
        const HoleEdgeRef& ref = inst.cycle[v0];
        out.gluings.push_back({ft, fe, ref.tri, ref.edge});
      } else {
        auto key = std::minmax(v0, v1);
        diagonal_sides[{key.first, key.second}].push_back({ft, fe});
      }
    }
  }
  for (const auto& [key, sides] : diagonal_sides) {
    if (sides.size() != 2) throw Error("internal: unmatched fill diagonal");
    out.gluings.push_back({sides[0].first, sides[0].second, sides[1].first, sides[1].second});
  }
  return out;
}

struct Worker {
  const Instance& inst;
  SearchBounds bounds;
  std::vector<FillSolution> solutions;
  uint64_t examined = 0;

  Worker(const Instance& i, const SearchBounds& b) : inst(i), bounds(b) {}

  bool positivity_ok(const RawForm& f) const {
    for (const auto& asg : inst.box_samples) {
      double v = f.eval(asg, inst.n);
      if (v <= 1e-9 || v >= kTau / 2 - 1e-9) return false;
    }
    return true;
  }

  bool ez_ok(const Triangulation& tri, const std::vector<std::array<RawForm, 3>>& shapes) const {
    int m = static_cast<int>(inst.cycle.size());
    RForm tau_r{0, 0, 2LL * inst.n};
    for (int v = 0; v < m; ++v) {
      RForm pivot = inst.vertices[v].pivot_sum;
      std::vector<RForm> lead = inst.vertices[v].leading;
      std::vector<RForm> trail = inst.vertices[v].trailing;
      for (size_t f = 0; f < tri.size(); ++f) {
        for (int i = 0; i < 3; ++i) {
          if (tri[f][i] != v) continue;
          pivot = pivot + shapes[f][i].reduced();
          lead.push_back(shapes[f][(i + 1) % 3].reduced());
          trail.push_back(shapes[f][(i + 2) % 3].reduced());
        }
      }
      if (!(pivot == tau_r)) return false;
      std::sort(lead.begin(), lead.end());
      std::sort(trail.begin(), trail.end());
      if (lead != trail) return false;
    }
    bool has_center = false;
    for (const auto& t : tri) {
      for (int i = 0; i < 3; ++i) {
        if (t[i] == m) has_center = true;
      }
    }
    if (has_center) {
      RForm pivot{0, 0, 0};
      std::vector<RForm> lead, trail;
      for (size_t f = 0; f < tri.size(); ++f) {
        for (int i = 0; i < 3; ++i) {
          if (tri[f][i] != m) continue;
          pivot = pivot + shapes[f][i].reduced();
          lead.push_back(shapes[f][(i + 1) % 3].reduced());
          trail.push_back(shapes[f][(i + 2) % 3].reduced());
        }
      }
      if (!(pivot == tau_r)) return false;
      std::sort(lead.begin(), lead.end());
      std::sort(trail.begin(), trail.end());
      if (lead != trail) return false;
    }
    return true;
  }

  bool numeric_ok(const Triangulation& tri, const std::vector<std::array<RawForm, 3>>& shapes) const {
    DiagramSpec spec = splice(inst, tri, shapes);
    for (const auto& asg : inst.gate_samples) {
      try {
        PlacedDiagram placed = develop(spec, asg);
        if (placed.normalized_residual >= 1e-9) return false;
      } catch (const Error&) {
        return false;
      }
    }
    return true;
  }

  void emit(int tri_index, const Triangulation& tri,
            const std::vector<std::array<RawForm, 3>>& shapes) {
    FillSolution sol;
    sol.triangulation_index = tri_index;
    sol.triangulation = tri;
    for (const auto& s : shapes) {
      sol.shapes.emplace_back(s[0].to_form(inst.n), s[1].to_form(inst.n), s[2].to_form(inst.n));
    }
    solutions.push_back(std::move(sol));
  }

  // Close each triangle's third corner to tau/2 modulo the constraint; every
  // in-bounds constraint shift K is a distinct raw candidate.
  void try_candidate(int tri_index, const Triangulation& tri,
                     std::vector<std::array<RawForm, 3>>& shapes, size_t depth) {
    int N = bounds.max_numerator;
    if (depth == tri.size()) {
      if (!ez_ok(tri, shapes)) return;
      if (!numeric_ok(tri, shapes)) return;
      emit(tri_index, tri, shapes);
      return;
    }
    const RawForm& f1 = shapes[depth][0];
    const RawForm& f2 = shapes[depth][1];
    if (!inst.form_positive[form_index(f1, N)] || !inst.form_positive[form_index(f2, N)]) return;
    int x = -f1.p - f2.p, y = -f1.q - f2.q, z = -f1.r - f2.r;
    int w = inst.n - f1.k - f2.k;
    int klo = std::max(-N - std::min({x, y, z}), w - N);
    int khi = std::min(N - std::max({x, y, z}), w + N);
    for (int K = klo; K <= khi; ++K) {
      shapes[depth][2] = RawForm{x + K, y + K, z + K, w - K};
      if (!inst.form_positive[form_index(shapes[depth][2], N)]) continue;
      try_candidate(tri_index, tri, shapes, depth + 1);
    }
  }

  void run(uint64_t begin, uint64_t end) {
    for (size_t ti = 0; ti < inst.triangulations.size(); ++ti) {
      uint64_t lo = inst.tri_offset[ti];
      uint64_t hi = lo + inst.tri_space[ti];
      if (end <= lo || begin >= hi) continue;
      uint64_t from = std::max(begin, lo) - lo;
      uint64_t to = std::min(end, hi) - lo;
      const Triangulation& tri = inst.triangulations[ti];
      size_t t = tri.size();
      uint64_t fcount = inst.form_set.size();
      std::vector<std::array<RawForm, 3>> shapes(t);
      for (uint64_t cursor = from; cursor < to; ++cursor) {
        uint64_t rem = cursor;
        for (size_t d = 0; d < t; ++d) {
          uint64_t pair = rem % inst.per_pair;
          rem /= inst.per_pair;
          shapes[d][0] = inst.form_set[pair / fcount];
          shapes[d][1] = inst.form_set[pair % fcount];
        }
        ++examined;
        try_candidate(static_cast<int>(ti), tri, shapes, 0);
      }
    }
  }
};

}  // namespace

uint64_t search_space_size(int n, const SearchBounds& bounds) {
  return build_instance(n, bounds, 0).total_space;
}

SearchResult search_hole_fill_range(int n, const SearchBounds& bounds, uint64_t cursor_begin,
                                    uint64_t cursor_end, uint64_t seed) {
  Instance inst = build_instance(n, bounds, seed);
  Worker w(inst, bounds);
  w.run(cursor_begin, std::min(cursor_end, inst.total_space));
  SearchResult res;
  res.n = n;
  res.bounds = bounds;
  res.solutions = std::move(w.solutions);
  res.candidates_examined = w.examined;
  res.space_size = inst.total_space;
  res.exhausted = cursor_begin == 0 && cursor_end >= inst.total_space;
  return res;
}

SearchResult merge_results(const SearchResult& lo, const SearchResult& hi) {
  SearchResult out = lo;
  out.solutions.insert(out.solutions.end(), hi.solutions.begin(), hi.solutions.end());
  out.candidates_examined += hi.candidates_examined;
  out.exhausted = out.candidates_examined == out.space_size;
  return out;
}

SearchResult search_hole_fill(int n, const SearchBounds& bounds, uint64_t seed) {
  Instance inst = build_instance(n, bounds, seed);
  uint64_t total = inst.total_space;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) workers.emplace_back(inst, bounds);
  if (total < 4096 || threads == 1) {
    workers[0].run(0, total);
  } else {
    std::vector<std::thread> pool;
    uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      uint64_t lo = i * chunk;
      uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back([&workers, i, lo, hi] { workers[i].run(lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  SearchResult res;
  res.n = n;
  res.bounds = bounds;
  res.space_size = total;
  for (auto& w : workers) {
    res.solutions.insert(res.solutions.end(), w.solutions.begin(), w.solutions.end());
    res.candidates_examined += w.examined;
  }
  res.exhausted = true;
  return res;
}

DiagramSpec splice_fill(int n, const FillSolution& solution) {
  SearchBounds bounds;
  Instance inst = build_instance(n, bounds, 0);
  std::vector<std::array<RawForm, 3>> raw(solution.shapes.size());
  for (size_t i = 0; i < solution.shapes.size(); ++i) {
    for (int j = 0; j < 3; ++j) {
      const AngleForm& f = solution.shapes[i].angles[j];
      raw[i][j].p = static_cast<int>(exact_int(f.coeff_a(), "fill"));
      raw[i][j].q = static_cast<int>(exact_int(f.coeff_b(), "fill"));
      raw[i][j].r = static_cast<int>(exact_int(f.coeff_c(), "fill"));
      raw[i][j].k = static_cast<int>(exact_int(f.coeff_tau() * Rational(2LL * n), "fill"));
    }
  }
  DiagramSpec out = splice(inst, solution.triangulation, raw);
  out.metadata.name = "doughnut-n" + std::to_string(n) + "-filled";
  out.validate();
  return out;
}

std::string search_result_to_json(const SearchResult& result, int indent) {
  nlohmann::ordered_json j;
  j["n"] = result.n;
  j["bounds"] = {{"max_numerator", result.bounds.max_numerator},
                 {"max_fill_triangles", result.bounds.max_fill_triangles},
                 {"policy", result.bounds.policy == TriangulationPolicy::kNoInteriorVertex
                                ? "no-interior-vertex"
                                : "single-interior-vertex"}};
  j["candidates_examined"] = result.candidates_examined;
  j["space_size"] = result.space_size;
  j["exhausted"] = result.exhausted;
  nlohmann::ordered_json sols = nlohmann::ordered_json::array();
  for (const auto& s : result.solutions) {
    nlohmann::ordered_json js;
    js["triangulation_index"] = s.triangulation_index;
    nlohmann::ordered_json tris = nlohmann::ordered_json::array();
    for (const auto& t : s.triangulation) tris.push_back({t[0], t[1], t[2]});
    js["triangulation"] = tris;
    nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
    for (const auto& sh : s.shapes) {
      shapes.push_back({sh.angles[0].to_string(), sh.angles[1].to_string(),
                        sh.angles[2].to_string()});
    }
    js["shapes"] = shapes;
    sols.push_back(js);
  }
  j["solutions"] = sols;
  return j.dump(indent);
}

}  // namespace holo
