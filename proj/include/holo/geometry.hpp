#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

namespace holo {

using Point = std::complex<double>;

inline double cross(Point u, Point v) { return u.real() * v.imag() - u.imag() * v.real(); }
inline double dot(Point u, Point v) { return u.real() * v.real() + u.imag() * v.imag(); }

inline double triangle_area(Point p0, Point p1, Point p2) {
  return 0.5 * cross(p1 - p0, p2 - p0);  // signed, ccw positive
}

inline double polygon_area(const std::vector<Point>& poly) {
  double s = 0;
  for (size_t i = 0; i < poly.size(); ++i) {
    Point p = poly[i], q = poly[(i + 1) % poly.size()];
    s += cross(p, q);
  }
  return 0.5 * s;
}

struct BBox {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool empty = true;
  void add(Point p) {
    if (empty) {
      xmin = xmax = p.real();
      ymin = ymax = p.imag();
      empty = false;
      return;
    }
    xmin = std::min(xmin, p.real());
    xmax = std::max(xmax, p.real());
    ymin = std::min(ymin, p.imag());
    ymax = std::max(ymax, p.imag());
  }
  double diagonal() const {
    return empty ? 0.0 : std::hypot(xmax - xmin, ymax - ymin);
  }
};

// Area of the intersection of two triangles (Sutherland-Hodgman clip of
// tri against the half-planes of a ccw clip triangle).
double triangle_overlap_area(const Point t1[3], const Point t2[3]);

// Circumcenter of three non-collinear points.
Point circumcenter(Point p, Point q, Point r);

}  // namespace holo
