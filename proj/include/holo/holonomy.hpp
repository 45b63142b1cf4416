#pragma once

#include <vector>

#include "holo/angleform.hpp"

namespace holo {

// One shaped triangle parked at a shared vertex. The pivot indexes the angle
// sitting at that vertex; leading/trailing angles follow/precede it in ccw
// order.
struct RingEntry {
  Shape shape;
  int pivot = 0;
};

struct Ring {
  std::vector<RingEntry> entries;
};

inline int leading_index(int pivot) { return (pivot + 1) % 3; }
inline int trailing_index(int pivot) { return (pivot + 2) % 3; }

struct EzVerdict {
  bool shapes_ok = false;       // every shape passes shape_sum_check
  bool pivot_sum_ok = false;    // pivot forms sum to exactly tau (mod constraint)
  bool permutation_ok = false;  // trailing multiset equals leading multiset
  bool pass() const { return shapes_ok && pivot_sum_ok && permutation_ok; }
};

// Purely symbolic decision in exact rational arithmetic.
EzVerdict ez_check(const Ring& ring, int n);

// Net similarity accumulated around the ring.
struct HolonomyResult {
  double rotation = 0;   // radians, reported in [0, tau)
  double log_scale = 0;  // log of the law-of-sines side-ratio product
  bool trivial(double rot_tol = 1e-10, double scale_tol = 1e-10) const;
};

// Throws DegenerateAngle when an evaluated angle is within 1e-12 of 0 or tau/2.
HolonomyResult numeric_holonomy(const Ring& ring, const Assignment& asg, int n);

// | sin(n*theta) - 2^(n-1) * prod_k sin(theta + k*tau/(2n)) |
double cyclotomic_residual(int n, double theta);

// As above but with the leading constant scaled, for uniqueness checks.
double cyclotomic_residual_scaled(int n, double theta, double constant_scale);

// | log(sin(nb)/sin(nc)) - sum_k log(sin(b+k*tau/2n)/sin(c+(n-1-k)*tau/2n)) |
// Certifies the scale holonomy of a corner fan. Throws DegenerateAngle.
double corner_holonomy_residual(int n, const Assignment& asg);

}  // namespace holo
