#include <doctest.h>

#include <cmath>

#include "holo/catalog.hpp"
#include "holo/doughnut.hpp"
#include "holo/errors.hpp"
#include "holo/sampling.hpp"

using namespace holo;

TEST_CASE("corner fan shapes") {
  SUBCASE("n=2 corner 0") {
    auto fan = corner_fan(2, 0);
    REQUIRE(fan.size() == 2);
    CHECK(fan[0] == Shape(AngleForm::a(), AngleForm::b(), AngleForm::c().prime(2)));
    CHECK(fan[1] == Shape(AngleForm::a(), AngleForm::b().prime(2), AngleForm::c()));
  }
  SUBCASE("n=3 corner 0") {
    auto fan = corner_fan(3, 0);
    REQUIRE(fan.size() == 3);
    CHECK(fan[0].angles[2] == make_form(0, 0, 1, Rational(1, 3)));
    CHECK(fan[1] == Shape(AngleForm::a(), AngleForm::b().prime(3), AngleForm::c().prime(3)));
    CHECK(fan[2].angles[1] == make_form(0, 1, 0, Rational(1, 3)));
  }
  SUBCASE("pivot angles sum to the corner angle") {
    for (int n : {2, 3, 5, 9}) {
      for (int corner = 0; corner < 3; ++corner) {
        auto fan = corner_fan(n, corner);
        AngleForm sum = AngleForm::zero();
        for (const auto& s : fan) sum = sum + s.angles[0];
        AngleForm expect = (corner == 0   ? AngleForm::a()
                            : corner == 1 ? AngleForm::b()
                                          : AngleForm::c())
                               .scaled(Rational(n));
        CHECK(sum == expect);
      }
    }
  }
  SUBCASE("fan shapes are legal and satisfy the corner identity") {
    for (int n : {2, 3, 7}) {
      for (const auto& s : corner_fan(n, 0)) CHECK(shape_sum_check(s, n));
      SplitMix64 rng(41);
      for (int k = 0; k < 20; ++k) {
        Assignment asg = sample_assignment(n, rng);
        CHECK(corner_holonomy_residual(n, asg) < 1e-11);
      }
    }
  }
}

TEST_CASE("doughnut for n=2 merges into the bisector diagram") {
  DiagramSpec d2 = build_doughnut(2);
  DiagramSpec bis = catalog("bisector");
  REQUIRE(d2.triangles.size() == 3);
  // Same multiset of shape classes.
  for (const auto& t : d2.triangles) {
    bool found = false;
    for (const auto& u : bis.triangles) {
      if (t.shape.same_class(u.shape, 2)) found = true;
    }
    CHECK(found);
  }
  CHECK(d2.gluings.size() == 3);
  CHECK(d2.interior_vertices.size() == 1);
}

TEST_CASE("doughnut sizes by n") {
  CHECK(build_doughnut(3).triangles.size() == 7);   // trisector diagram
  CHECK(build_doughnut(4).triangles.size() == 12);  // ring of fans plus caps
  CHECK(build_doughnut(5).triangles.size() == 12);  // 3n-3 ring triangles
  CHECK(build_doughnut(8).triangles.size() == 21);
}

TEST_CASE("holes are absent for n=2,3 and triangular for n=4") {
  SplitMix64 rng(9);
  for (int n : {2, 3}) {
    for (int k = 0; k < 5; ++k) {
      Assignment asg = sample_assignment(n, rng);
      DiagramSpec spec = build_doughnut(n);
      PlacedDiagram placed = develop(spec, asg);
      HolePolygon hole = hole_polygon(placed, spec);
      CHECK(hole.absent());
      CHECK(hole.area < 1e-9 * hole.big_area);
    }
  }
  for (int k = 0; k < 5; ++k) {
    Assignment asg = sample_assignment(4, rng);
    DiagramSpec spec = build_doughnut(4);
    PlacedDiagram placed = develop(spec, asg);
    HolePolygon hole = hole_polygon(placed, spec);
    CHECK(hole.vertices.size() == 3);
    CHECK(hole.area > 0);
  }
}

TEST_CASE("n=5 equilateral hole is a symmetric nine-gon") {
  double v = kTau / 30;
  Assignment asg{v, v, v};
  DiagramSpec spec = build_doughnut(5);
  PlacedDiagram placed = develop(spec, asg);
  HolePolygon hole = hole_polygon(placed, spec);
  REQUIRE(hole.vertices.size() == 9);
  // Three-fold rotational symmetry about the hole centroid.
  Point center(0, 0);
  for (auto p : hole.vertices) center += p;
  center /= 9.0;
  Point rot = std::polar(1.0, kTau / 3);
  double diag = placed.bbox.diagonal();
  for (int i = 0; i < 9; ++i) {
    Point img = center + (hole.vertices[i] - center) * rot;
    double best = 1e300;
    for (int j = 0; j < 9; ++j) best = std::min(best, std::abs(img - hole.vertices[j]));
    CHECK(best < 1e-9 * diag);
  }
}

TEST_CASE("doughnut develops cleanly across n with random assignments") {
  SplitMix64 rng(101);
  for (int n = 2; n <= 9; ++n) {
    DiagramSpec spec = build_doughnut(n);
    for (int k = 0; k < 5; ++k) {
      Assignment asg = sample_assignment(n, rng);
      PlacedDiagram placed = develop(spec, asg);
      CHECK(placed.normalized_residual < 1e-9);
      HolePolygon hole = hole_polygon(placed, spec);  // throws on overlap
      if (n >= 4) CHECK(hole.vertices.size() == (n == 4 ? 3u : 3u * n - 6u));
    }
  }
}

TEST_CASE("isosceles fill") {
  DiagramSpec spec = build_doughnut(5);
  SUBCASE("default parameter develops") {
    DiagramSpec filled = isosceles_fill(spec);
    CHECK(filled.triangles.size() == spec.triangles.size() + 9);
    double v = kTau / 30;
    PlacedDiagram placed = develop(filled, Assignment{v, v, v});
    CHECK(placed.normalized_residual < 1e-9);
  }
  SUBCASE("zero parameter is a no-op") {
    DiagramSpec same = isosceles_fill(spec, 0.0);
    CHECK(same.triangles.size() == spec.triangles.size());
  }
  SUBCASE("excessive parameter collides") {
    CHECK_THROWS_AS(isosceles_fill(spec, kTau / 5), ApexCollision);
  }
  SUBCASE("not available below n=5") {
    CHECK_THROWS_AS(isosceles_fill(build_doughnut(4)), Error);
  }
}

TEST_CASE("limit curve satisfies its implicit equations") {
  SUBCASE("right angle: 2xy = 1") {
    for (Point z : limit_curve(kTau / 4, 64)) {
      CHECK(std::abs(2 * z.real() * z.imag() - 1.0) < 1e-12);
    }
  }
  SUBCASE("sixty degrees: 3x^2 y - y^3 = 1") {
    for (Point z : limit_curve(kTau / 6, 64)) {
      double x = z.real(), y = z.imag();
      CHECK(std::abs(3 * x * x * y - y * y * y - 1.0) < 1e-12);
    }
  }
  SUBCASE("half turn: y = 1") {
    for (Point z : limit_curve(kTau / 2, 16)) {
      CHECK(std::abs(z.imag() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("limit curve points have zero self distance") {
  double A = kTau / 4;
  auto pts = limit_curve(A, 40);
  // Align: rotate the sector bisector onto the positive real axis.
  std::vector<Point> aligned;
  Point rot = std::polar(1.0, -A / 2);
  for (Point p : pts) aligned.push_back(p * rot);
  CHECK(boundary_distance_to_limit_curve(aligned, A) < 1e-9);
}

TEST_CASE("renormalized boundary study runs at n=4") {
  double v = kTau / 24;
  BoundaryStudy study = renormalized_boundary(4, Assignment{v, v, v}, 0);
  CHECK(study.renormalized.size() >= 2);
  CHECK(std::isfinite(study.max_distance));
}

TEST_CASE("power transform") {
  std::vector<Point> pts = {Point(1, 0.2), Point(0.5, 0.5), Point(0.1, 1.2)};
  SUBCASE("exponent one is the identity") {
    auto out = power_transform(pts, 1.0, Point(0, 0));
    for (size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(out[i] - pts[i]) < 1e-15);
  }
  SUBCASE("k then 1/k returns the input") {
    auto mid = power_transform(pts, 0.7, Point(0, 0));
    auto back = power_transform(mid, 1.0 / 0.7, Point(0, 0));
    for (size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(back[i] - pts[i]) < 1e-12);
  }
  SUBCASE("a wedge is straightened by tau/(2A)") {
    // Points on the two sides of a wedge of angle A map to arg 0 and tau/2.
    double A = kTau / 6;
    std::vector<Point> wedge = {std::polar(1.0, 0.0), std::polar(1.0, A)};
    auto out = power_transform(wedge, kTau / (2 * A), Point(0, 0));
    CHECK(std::abs(std::arg(out[1]) - kTau / 2) < 1e-12);
  }
  SUBCASE("crossing the cut throws") {
    std::vector<Point> crossing = {Point(-1, 0.5), Point(-1, -0.5)};
    CHECK_THROWS_AS(power_transform(crossing, 0.5, Point(0, 0)), BranchCutCrossing);
  }
  SUBCASE("center among the points throws") {
    std::vector<Point> bad = {Point(0, 0)};
    CHECK_THROWS_AS(power_transform(bad, 2.0, Point(0, 0)), Error);
  }
}

TEST_CASE("doughnut specs round trip through json with their frame metadata") {
  for (int n : {2, 4, 7}) {
    DiagramSpec spec = build_doughnut(n);
    DiagramSpec back = spec_from_json(to_json(spec));
    back.validate();
    CHECK(to_json(back) == to_json(spec));
    REQUIRE(back.metadata.frame_angles.size() == 3);
    CHECK(back.metadata.frame_angles[0] == AngleForm::a().scaled(Rational(n)).to_string());
  }
}

TEST_CASE("conway catalog entry equals the n=4 doughnut plus its hole fill") {
  DiagramSpec ring = build_doughnut(4);
  DiagramSpec full = catalog("conway");
  CHECK(full.triangles.size() == ring.triangles.size() + 1);
  for (const auto& t : ring.triangles) {
    bool found = false;
    for (const auto& u : full.triangles) {
      if (t.shape.same_class(u.shape, 4)) found = true;
    }
    CHECK(found);
  }
}
