#include <doctest.h>

#include <cmath>

#include "holo/catalog.hpp"
#include "holo/diagram.hpp"
#include "holo/errors.hpp"
#include "holo/sampling.hpp"

#include <json.hpp>

using namespace holo;

TEST_CASE("develop the bisector diagram at equilateral parameters") {
  DiagramSpec spec = catalog("bisector");
  Assignment asg{kTau / 12, kTau / 12, kTau / 12};
  PlacedDiagram placed = develop(spec, asg);
  CHECK(placed.placements.size() == 3);
  CHECK(placed.max_residual < 1e-12);
  // The union is an equilateral triangle: corners A=(0,0), B=(1,0) and the
  // side-bc triangle's middle vertex is C.
  Point c_corner = placed.placements[1][1];
  CHECK(c_corner.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c_corner.imag() == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("single unglued triangle develops to its seed pose") {
  DiagramSpec spec;
  spec.n = 2;
  spec.triangles.push_back({"only", Shape(AngleForm::a(), AngleForm::b(), AngleForm::c().prime(2))});
  spec.metadata.name = "single";
  Assignment asg{0.5, 0.6, kTau / 4 - 1.1};
  SeedPose seed{"only", Point(2, 1), Point(4, 1.5)};
  PlacedDiagram placed = develop(spec, asg, seed);
  CHECK(std::abs(placed.placements[0][0] - Point(2, 1)) == 0.0);
  CHECK(std::abs(placed.placements[0][1] - Point(4, 1.5)) == 0.0);
  CHECK(placed.max_residual == 0.0);
}

TEST_CASE("morley diagram closes tightly") {
  DiagramSpec spec = catalog("morley");
  Assignment asg{kTau / 12, kTau / 18, kTau / 36};
  PlacedDiagram placed = develop(spec, asg);
  CHECK(placed.normalized_residual < 1e-9);
}

TEST_CASE("verify_existence on conway with random assignments") {
  DiagramSpec spec = catalog("conway");
  SplitMix64 rng(7);
  for (int k = 0; k < 20; ++k) {
    Assignment asg = sample_assignment(4, rng);
    ExistenceReport rep = verify_existence(spec, asg, 1e-9);
    CHECK(rep.symbolic_ok);
    CHECK(rep.numeric_ok);
    CHECK(rep.exists);
  }
}

TEST_CASE("broken permutation is caught symbolically") {
  DiagramSpec spec = catalog("bisector");
  std::swap(spec.triangles[0].shape.angles[1], spec.triangles[0].shape.angles[2]);
  Assignment asg{kTau / 12, kTau / 12, kTau / 12};
  ExistenceReport rep = verify_existence(spec, asg, 1e-9);
  CHECK_FALSE(rep.symbolic_ok);
  CHECK_FALSE(rep.exists);
}

TEST_CASE("seed independence up to similarity") {
  DiagramSpec spec = catalog("morley");
  Assignment asg{kTau / 14, kTau / 15, kTau / 6 - kTau / 14 - kTau / 15};
  PlacedDiagram p0 = develop(spec, asg, SeedPose{"side-ab", Point(0, 0), Point(1, 0)});
  PlacedDiagram p1 = develop(spec, asg, SeedPose{"center", Point(0.3, -0.2), Point(0.1, 0.9)});
  CHECK(std::abs(p0.normalized_residual - p1.normalized_residual) < 1e-12);
  // Fit the similarity from two reference points and check all placements.
  Point a0 = p0.placements[0][0], b0 = p0.placements[0][1];
  Point a1 = p1.placements[0][0], b1 = p1.placements[0][1];
  Point scale = (b1 - a1) / (b0 - a0);
  double worst = 0;
  for (size_t t = 0; t < p0.placements.size(); ++t) {
    for (int v = 0; v < 3; ++v) {
      Point mapped = a1 + (p0.placements[t][v] - a0) * scale;
      worst = std::max(worst, std::abs(mapped - p1.placements[t][v]));
    }
  }
  CHECK(worst < 1e-12 * p1.bbox.diagonal() + 1e-12);
}

TEST_CASE("disconnected specs are rejected") {
  DiagramSpec spec;
  spec.n = 2;
  Shape s(AngleForm::a(), AngleForm::b(), AngleForm::c().prime(2));
  spec.triangles.push_back({"t1", s});
  spec.triangles.push_back({"t2", s});
  Assignment asg{kTau / 12, kTau / 12, kTau / 12};
  CHECK_THROWS_AS(develop(spec, asg), SpecError);
}

TEST_CASE("unrealizable assignments are rejected") {
  // The circumcenter diagram needs an acute big triangle; an obtuse
  // assignment drives a base angle negative.
  DiagramSpec spec = catalog("centers-circumcenter");
  Assignment asg{0.05, 0.05, kTau / 4 - 0.1};
  CHECK_THROWS_AS(develop(spec, asg), UnrealizableShape);
}

TEST_CASE("json round trip is lossless") {
  for (const auto& name : catalog_names()) {
    DiagramSpec spec = catalog(name);
    std::string j1 = to_json(spec);
    DiagramSpec back = spec_from_json(j1);
    std::string j2 = to_json(back);
    CHECK(j1 == j2);
    CHECK(back.n == spec.n);
    REQUIRE(back.triangles.size() == spec.triangles.size());
    for (size_t i = 0; i < spec.triangles.size(); ++i) {
      CHECK(back.triangles[i].id == spec.triangles[i].id);
      CHECK(back.triangles[i].shape == spec.triangles[i].shape);
    }
  }
}

TEST_CASE("existence reports serialize to parseable json") {
  DiagramSpec spec = catalog("morley");
  Assignment asg{kTau / 12, kTau / 18, kTau / 36};
  ExistenceReport rep = verify_existence(spec, asg);
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j.at("exists").get<bool>());
  CHECK(j.at("shapes").size() == spec.triangles.size());
  CHECK(j.at("interior_vertices").size() == spec.interior_vertices.size());
  CHECK(j.at("normalized_residual").get<double>() < 1e-9);
}

TEST_CASE("unknown seed triangle is rejected") {
  DiagramSpec spec = catalog("bisector");
  Assignment asg{kTau / 12, kTau / 12, kTau / 12};
  CHECK_THROWS_AS(develop(spec, asg, SeedPose{"nope", Point(0, 0), Point(1, 0)}), UnknownName);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(spec_from_json("{"), ParseError);
  CHECK_THROWS_AS(spec_from_json("{}"), ParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"n": 2, "triangles": [{"id": "t", "angles": ["a", "b"]}],
                                    "gluings": []})"),
                  ParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"n": 2,
                                    "triangles": [{"id": "t", "angles": ["a", "b", "q"]}],
                                    "gluings": []})"),
                  ParseError);
  CHECK_THROWS_AS(spec_from_json(R"({"n": 2,
                                    "triangles": [{"id": "t", "angles": ["a", "b", "c"]}],
                                    "gluings": [["t", 0, "missing", 1]]})"),
                  ParseError);
}

TEST_CASE("spec validation rejects double-used edges") {
  DiagramSpec spec = catalog("bisector");
  spec.gluings.push_back(spec.gluings[0]);
  CHECK_THROWS_AS(spec.validate(), SpecError);
}
