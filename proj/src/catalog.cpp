#include "holo/catalog.hpp"

#include <map>

#include "holo/errors.hpp"

namespace holo {

// Each entry is a planar map of shaped triangles transcribed from a classical
// figure. Vertex naming used in the comments: A, B, C are the outer triangle
// corners (ccw); fan vertices V, W, U sit inside along the corner fans.

namespace {

const char* kBisector = R"json({
  "n": 2,
  "triangles": [
    {"id": "side-ab", "angles": ["a", "b", "c + 1/4*tau"]},
    {"id": "side-bc", "angles": ["b", "c", "a + 1/4*tau"]},
    {"id": "side-ca", "angles": ["c", "a", "b + 1/4*tau"]}
  ],
  "gluings": [
    ["side-ab", 0, "side-bc", 1],
    ["side-bc", 0, "side-ca", 1],
    ["side-ca", 0, "side-ab", 1]
  ],
  "interior_vertices": [
    [["side-ab", 2], ["side-bc", 2], ["side-ca", 2]]
  ],
  "metadata": {
    "name": "bisector",
    "figure": "three cevian triangles around the incenter of a triangle with angles 2a, 2b, 2c"
  }
})json";

const char* kMorley = R"json({
  "n": 3,
  "triangles": [
    {"id": "side-ab", "angles": ["a", "b", "c + 1/3*tau"]},
    {"id": "side-bc", "angles": ["b", "c", "a + 1/3*tau"]},
    {"id": "side-ca", "angles": ["c", "a", "b + 1/3*tau"]},
    {"id": "fan-a", "angles": ["a", "b + 1/6*tau", "c + 1/6*tau"]},
    {"id": "fan-b", "angles": ["b", "c + 1/6*tau", "a + 1/6*tau"]},
    {"id": "fan-c", "angles": ["c", "a + 1/6*tau", "b + 1/6*tau"]},
    {"id": "center", "angles": ["1/6*tau", "1/6*tau", "1/6*tau"]}
  ],
  "gluings": [
    ["fan-a", 2, "side-ab", 1],
    ["fan-a", 1, "side-ca", 0],
    ["side-ab", 0, "fan-b", 1],
    ["fan-b", 2, "side-bc", 1],
    ["side-bc", 0, "fan-c", 1],
    ["fan-c", 2, "side-ca", 1],
    ["fan-a", 0, "center", 0],
    ["fan-b", 0, "center", 1],
    ["fan-c", 0, "center", 2]
  ],
  "interior_vertices": [
    [["side-ab", 2], ["fan-b", 2], ["center", 2], ["fan-a", 1]],
    [["side-bc", 2], ["fan-c", 2], ["center", 0], ["fan-b", 1]],
    [["side-ca", 2], ["fan-a", 2], ["center", 1], ["fan-c", 1]]
  ],
  "metadata": {
    "name": "morley",
    "figure": "trisector diagram: equilateral center, three corner fans, three side triangles"
  }
})json";

const char* kConway = R"json({
  "n": 4,
  "triangles": [
    {"id": "side-ab", "angles": ["a", "b", "c + 3/8*tau"]},
    {"id": "side-bc", "angles": ["b", "c", "a + 3/8*tau"]},
    {"id": "side-ca", "angles": ["c", "a", "b + 3/8*tau"]},
    {"id": "fan-a-1", "angles": ["a", "b + 1/8*tau", "c + 1/4*tau"]},
    {"id": "fan-a-2", "angles": ["a", "b + 1/4*tau", "c + 1/8*tau"]},
    {"id": "fan-b-1", "angles": ["b", "c + 1/8*tau", "a + 1/4*tau"]},
    {"id": "fan-b-2", "angles": ["b", "c + 1/4*tau", "a + 1/8*tau"]},
    {"id": "fan-c-1", "angles": ["c", "a + 1/8*tau", "b + 1/4*tau"]},
    {"id": "fan-c-2", "angles": ["c", "a + 1/4*tau", "b + 1/8*tau"]},
    {"id": "cap-ab", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "cap-bc", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "cap-ca", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "center", "angles": ["a + 1/8*tau", "b + 1/8*tau", "c + 1/8*tau"]}
  ],
  "gluings": [
    ["side-ab", 1, "fan-a-1", 2],
    ["fan-a-1", 1, "fan-a-2", 2],
    ["fan-a-2", 1, "side-ca", 0],
    ["side-bc", 1, "fan-b-1", 2],
    ["fan-b-1", 1, "fan-b-2", 2],
    ["fan-b-2", 1, "side-ab", 0],
    ["side-ca", 1, "fan-c-1", 2],
    ["fan-c-1", 1, "fan-c-2", 2],
    ["fan-c-2", 1, "side-bc", 0],
    ["cap-ab", 0, "fan-a-1", 0],
    ["cap-ab", 1, "fan-b-2", 0],
    ["cap-bc", 0, "fan-b-1", 0],
    ["cap-bc", 1, "fan-c-2", 0],
    ["cap-ca", 0, "fan-c-1", 0],
    ["cap-ca", 1, "fan-a-2", 0],
    ["center", 0, "cap-bc", 2],
    ["center", 1, "cap-ca", 2],
    ["center", 2, "cap-ab", 2]
  ],
  "interior_vertices": [
    [["side-ab", 2], ["fan-a-1", 1], ["cap-ab", 2], ["fan-b-2", 2]],
    [["side-bc", 2], ["fan-b-1", 1], ["cap-bc", 2], ["fan-c-2", 2]],
    [["side-ca", 2], ["fan-c-1", 1], ["cap-ca", 2], ["fan-a-2", 2]],
    [["fan-a-1", 2], ["cap-ab", 1], ["center", 0], ["cap-ca", 0], ["fan-a-2", 1]],
    [["fan-b-1", 2], ["cap-bc", 1], ["center", 1], ["cap-ab", 0], ["fan-b-2", 1]],
    [["fan-c-1", 2], ["cap-ca", 1], ["center", 2], ["cap-bc", 0], ["fan-c-2", 1]]
  ],
  "metadata": {
    "name": "conway",
    "figure": "quadrisector diagram: three corner fans, three isoceles right caps, central triangle"
  }
})json";

const char* kIcos = R"json({
  "n": 4,
  "triangles": [
    {"id": "side-ab", "angles": ["a", "b", "c + 3/8*tau"]},
    {"id": "side-bc", "angles": ["b", "c", "a + 3/8*tau"]},
    {"id": "side-ca", "angles": ["c", "a", "b + 3/8*tau"]},
    {"id": "fan-a-1", "angles": ["a", "b + 1/8*tau", "c + 1/4*tau"]},
    {"id": "fan-a-2", "angles": ["a", "b + 1/4*tau", "c + 1/8*tau"]},
    {"id": "fan-b-1", "angles": ["b", "c + 1/8*tau", "a + 1/4*tau"]},
    {"id": "fan-b-2", "angles": ["b", "c + 1/4*tau", "a + 1/8*tau"]},
    {"id": "fan-c-1", "angles": ["c", "a + 1/8*tau", "b + 1/4*tau"]},
    {"id": "fan-c-2", "angles": ["c", "a + 1/4*tau", "b + 1/8*tau"]},
    {"id": "cap-ab-a", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "cap-ab-b", "angles": ["1/8*tau", "1/4*tau", "1/8*tau"]},
    {"id": "cap-bc-a", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "cap-bc-b", "angles": ["1/8*tau", "1/4*tau", "1/8*tau"]},
    {"id": "cap-ca-a", "angles": ["1/8*tau", "1/8*tau", "1/4*tau"]},
    {"id": "cap-ca-b", "angles": ["1/8*tau", "1/4*tau", "1/8*tau"]},
    {"id": "hub-a", "angles": ["a + 1/8*tau", "b + 1/8*tau", "c + 1/8*tau"]},
    {"id": "hub-b", "angles": ["b + 1/8*tau", "c + 1/8*tau", "a + 1/8*tau"]},
    {"id": "hub-c", "angles": ["c + 1/8*tau", "a + 1/8*tau", "b + 1/8*tau"]},
    {"id": "core", "angles": ["c + 1/8*tau", "a + 1/8*tau", "b + 1/8*tau"]}
  ],
  "gluings": [
    ["side-ab", 1, "fan-a-1", 2],
    ["fan-a-1", 1, "fan-a-2", 2],
    ["fan-a-2", 1, "side-ca", 0],
    ["side-bc", 1, "fan-b-1", 2],
    ["fan-b-1", 1, "fan-b-2", 2],
    ["fan-b-2", 1, "side-ab", 0],
    ["side-ca", 1, "fan-c-1", 2],
    ["fan-c-1", 1, "fan-c-2", 2],
    ["fan-c-2", 1, "side-bc", 0],
    ["cap-ab-a", 1, "cap-ab-b", 2],
    ["cap-ab-a", 2, "fan-b-2", 0],
    ["cap-ab-a", 0, "hub-b", 1],
    ["cap-ab-b", 1, "fan-a-1", 0],
    ["cap-ab-b", 0, "hub-a", 2],
    ["cap-bc-a", 1, "cap-bc-b", 2],
    ["cap-bc-a", 2, "fan-c-2", 0],
    ["cap-bc-a", 0, "hub-c", 1],
    ["cap-bc-b", 1, "fan-b-1", 0],
    ["cap-bc-b", 0, "hub-b", 2],
    ["cap-ca-a", 1, "cap-ca-b", 2],
    ["cap-ca-a", 2, "fan-a-2", 0],
    ["cap-ca-a", 0, "hub-a", 1],
    ["cap-ca-b", 1, "fan-c-1", 0],
    ["cap-ca-b", 0, "hub-c", 2],
    ["core", 0, "hub-c", 0],
    ["core", 1, "hub-a", 0],
    ["core", 2, "hub-b", 0]
  ],
  "interior_vertices": [
    [["side-ab", 2], ["fan-a-1", 1], ["cap-ab-b", 0], ["cap-ab-a", 0], ["fan-b-2", 2]],
    [["side-bc", 2], ["fan-b-1", 1], ["cap-bc-b", 0], ["cap-bc-a", 0], ["fan-c-2", 2]],
    [["side-ca", 2], ["fan-c-1", 1], ["cap-ca-b", 0], ["cap-ca-a", 0], ["fan-a-2", 2]],
    [["fan-a-1", 2], ["cap-ab-b", 2], ["hub-a", 0], ["cap-ca-a", 1], ["fan-a-2", 1]],
    [["fan-b-1", 2], ["cap-bc-b", 2], ["hub-b", 0], ["cap-ab-a", 1], ["fan-b-2", 1]],
    [["fan-c-1", 2], ["cap-ca-b", 2], ["hub-c", 0], ["cap-bc-a", 1], ["fan-c-2", 1]],
    [["cap-ab-a", 2], ["hub-b", 2], ["core", 0], ["hub-a", 1], ["cap-ab-b", 1]],
    [["cap-bc-a", 2], ["hub-c", 2], ["core", 1], ["hub-b", 1], ["cap-bc-b", 1]],
    [["cap-ca-a", 2], ["hub-a", 2], ["core", 2], ["hub-c", 1], ["cap-ca-b", 1]]
  ],
  "metadata": {
    "name": "icos",
    "figure": "quadrisector diagram refined to the planar map of an icosahedron",
    "notes": "caps split at the midpoint of their long edge; the central triangle splits into a medial core plus three half-scale copies"
  }
})json";

const char* kIcosvar = R"json({
  "n": 4,
  "triangles": [
    {"id": "s1-ab", "angles": ["2*a", "b + c", "3/8*tau - a"]},
    {"id": "s2-ab", "angles": ["2*a + b + c", "2*b + 2*c", "2*a + b + c"]},
    {"id": "s3-ab", "angles": ["a + c", "2*b", "3/8*tau - b"]},
    {"id": "s4-ab", "angles": ["a + 2*b + c", "a + 2*b + c", "2*a + 2*c"]},
    {"id": "s1-bc", "angles": ["2*b", "c + a", "3/8*tau - b"]},
    {"id": "s2-bc", "angles": ["2*b + c + a", "2*c + 2*a", "2*b + c + a"]},
    {"id": "s3-bc", "angles": ["b + a", "2*c", "3/8*tau - c"]},
    {"id": "s4-bc", "angles": ["b + 2*c + a", "b + 2*c + a", "2*b + 2*a"]},
    {"id": "s1-ca", "angles": ["2*c", "a + b", "3/8*tau - c"]},
    {"id": "s2-ca", "angles": ["2*c + a + b", "2*a + 2*b", "2*c + a + b"]},
    {"id": "s3-ca", "angles": ["c + b", "2*a", "3/8*tau - a"]},
    {"id": "s4-ca", "angles": ["c + 2*a + b", "c + 2*a + b", "2*c + 2*b"]}
  ],
  "gluings": [
    ["s1-ab", 0, "s2-ab", 1],
    ["s2-ab", 2, "s4-ab", 1],
    ["s4-ab", 2, "s3-ab", 1],
    ["s1-bc", 0, "s2-bc", 1],
    ["s2-bc", 2, "s4-bc", 1],
    ["s4-bc", 2, "s3-bc", 1],
    ["s1-ca", 0, "s2-ca", 1],
    ["s2-ca", 2, "s4-ca", 1],
    ["s4-ca", 2, "s3-ca", 1],
    ["s1-ab", 1, "s3-ca", 0],
    ["s2-ab", 0, "s4-ca", 0],
    ["s1-bc", 1, "s3-ab", 0],
    ["s2-bc", 0, "s4-ab", 0],
    ["s1-ca", 1, "s3-bc", 0],
    ["s2-ca", 0, "s4-bc", 0]
  ],
  "interior_vertices": [
    [["s1-ab", 2], ["s2-ab", 2], ["s4-ca", 1], ["s3-ca", 2]],
    [["s1-bc", 2], ["s2-bc", 2], ["s4-ab", 1], ["s3-ab", 2]],
    [["s1-ca", 2], ["s2-ca", 2], ["s4-bc", 1], ["s3-bc", 2]],
    [["s2-ab", 1], ["s4-ab", 2], ["s2-bc", 1], ["s4-bc", 2], ["s2-ca", 1], ["s4-ca", 2]]
  ],
  "metadata": {
    "name": "icosvar",
    "figure": "bisector diagram subdivided at the incircle contact points, with one new point on each angle bisector",
    "notes": "the three bisector points sit on the incircle, so their circumcenter is the incenter; transcription reconstructed to satisfy the ring conditions"
  }
})json";

const char* kCentersOrthocenter = R"json({
  "n": 2,
  "triangles": [
    {"id": "ortho-ab", "angles": ["b", "a", "c + 1/4*tau"]},
    {"id": "ortho-bc", "angles": ["c", "b", "a + 1/4*tau"]},
    {"id": "ortho-ca", "angles": ["a", "c", "b + 1/4*tau"]}
  ],
  "gluings": [
    ["ortho-ab", 0, "ortho-bc", 1],
    ["ortho-bc", 0, "ortho-ca", 1],
    ["ortho-ca", 0, "ortho-ab", 1]
  ],
  "interior_vertices": [
    [["ortho-ab", 2], ["ortho-bc", 2], ["ortho-ca", 2]]
  ],
  "metadata": {
    "name": "centers-orthocenter",
    "figure": "cevian triangles around the orthocenter of a triangle with angles b+c, c+a, a+b",
    "notes": "valid when all of b+c, c+a, a+b are acute at the chosen assignment"
  }
})json";

const char* kCentersCircumcenter = R"json({
  "n": 2,
  "triangles": [
    {"id": "circ-ab", "angles": ["a + b - c", "a + b - c", "4*c"]},
    {"id": "circ-bc", "angles": ["b + c - a", "b + c - a", "4*a"]},
    {"id": "circ-ca", "angles": ["c + a - b", "c + a - b", "4*b"]}
  ],
  "gluings": [
    ["circ-ab", 0, "circ-bc", 1],
    ["circ-bc", 0, "circ-ca", 1],
    ["circ-ca", 0, "circ-ab", 1]
  ],
  "interior_vertices": [
    [["circ-ab", 2], ["circ-bc", 2], ["circ-ca", 2]]
  ],
  "metadata": {
    "name": "centers-circumcenter",
    "figure": "isoceles triangles around the circumcenter of an acute triangle with angles 2a, 2b, 2c",
    "notes": "apex angle 4c over the edge whose far vertex has angle 2c: each edge is seen from the center at twice the opposite angle; requires an acute assignment"
  }
})json";

const char* kIsogonal = R"json({
  "n": 2,
  "triangles": [
    {"id": "iso-ab", "angles": ["a + c - b", "b + c - a", "2*a + 2*b"]},
    {"id": "iso-bc", "angles": ["b + a - c", "c + a - b", "2*b + 2*c"]},
    {"id": "iso-ca", "angles": ["c + b - a", "a + b - c", "2*c + 2*a"]}
  ],
  "gluings": [
    ["iso-ab", 0, "iso-bc", 1],
    ["iso-bc", 0, "iso-ca", 1],
    ["iso-ca", 0, "iso-ab", 1]
  ],
  "interior_vertices": [
    [["iso-ab", 2], ["iso-bc", 2], ["iso-ca", 2]]
  ],
  "metadata": {
    "name": "isogonal",
    "figure": "cevian triangles around the isogonal conjugate of the circumcenter of a triangle with angles 2a, 2b, 2c",
    "notes": "the conjugate partner of centers-circumcenter: corner angle splits swapped at every vertex; requires an acute assignment"
  }
})json";

const char* kChopsticks = R"json({
  "n": 2,
  "triangles": [
    {"id": "front-abc", "angles": ["b", "c + 1/4*tau", "a"]},
    {"id": "front-acd", "angles": ["c", "1/4*tau", "a + b"]}
  ],
  "gluings": [
    ["front-abc", 1, "front-acd", 2]
  ],
  "interior_vertices": [],
  "metadata": {
    "name": "chopsticks",
    "figure": "front of a doubled cyclic quadrilateral, split along one diagonal",
    "notes": "circle arcs 2a, 2b, 2c, 2d between consecutive vertices; the three-parameter angle model fixes the fourth arc at d = tau/4"
  }
})json";

const std::map<std::string, const char*>& registry() {
  static const std::map<std::string, const char*> reg = {
      {"bisector", kBisector},
      {"morley", kMorley},
      {"conway", kConway},
      {"icos", kIcos},
      {"icosvar", kIcosvar},
      {"centers-orthocenter", kCentersOrthocenter},
      {"centers-circumcenter", kCentersCircumcenter},
      {"isogonal", kIsogonal},
      {"chopsticks", kChopsticks},
  };
  return reg;
}

}  // namespace

const char* catalog_json(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownName("no catalog diagram named '" + name + "'");
  return it->second;
}

DiagramSpec catalog(const std::string& name) {
  DiagramSpec spec = spec_from_json(catalog_json(name));
  spec.validate();
  return spec;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  return names;
}

}  // namespace holo
