#include "holo/holonomy.hpp"

#include <algorithm>
#include <cmath>

#include "holo/errors.hpp"

namespace holo {

EzVerdict ez_check(const Ring& ring, int n) {
  EzVerdict v;
  if (ring.entries.empty()) return v;

  v.shapes_ok = true;
  for (const auto& e : ring.entries) {
    if (!shape_sum_check(e.shape, n)) v.shapes_ok = false;
  }

  AngleForm pivot_sum = AngleForm::zero();
  for (const auto& e : ring.entries) pivot_sum = pivot_sum + e.shape.angles[e.pivot];
  v.pivot_sum_ok = pivot_sum.equivalent(AngleForm::tau_times(Rational(1)), n);

  std::vector<AngleForm> leading, trailing;
  for (const auto& e : ring.entries) {
    leading.push_back(e.shape.angles[leading_index(e.pivot)].reduced(n));
    trailing.push_back(e.shape.angles[trailing_index(e.pivot)].reduced(n));
  }
  std::sort(leading.begin(), leading.end());
  std::sort(trailing.begin(), trailing.end());
  v.permutation_ok = leading == trailing;
  return v;
}

bool HolonomyResult::trivial(double rot_tol, double scale_tol) const {
  double r = std::fmod(rotation, kTau);
  if (r < 0) r += kTau;
  double dist = std::min(r, kTau - r);
  return dist <= rot_tol && std::abs(log_scale) <= scale_tol;
}

namespace {

double checked_sin(double angle) {
  if (angle <= 1e-12 || angle >= kTau / 2 - 1e-12) {
    throw DegenerateAngle("angle " + std::to_string(angle) + " rad is within 1e-12 of 0 or tau/2");
  }
  return std::sin(angle);
}

}  // namespace

HolonomyResult numeric_holonomy(const Ring& ring, const Assignment& asg, int n) {
  HolonomyResult h;
  double rot = 0;
  for (const auto& e : ring.entries) {
    std::array<double, 3> vals;
    for (int i = 0; i < 3; ++i) {
      vals[i] = e.shape.angles[i].eval(asg, n);
      checked_sin(vals[i]);
    }
    rot += vals[e.pivot];
    h.log_scale += std::log(std::sin(vals[leading_index(e.pivot)]));
    h.log_scale -= std::log(std::sin(vals[trailing_index(e.pivot)]));
  }
  rot = std::fmod(rot, kTau);
  if (rot < 0) rot += kTau;
  h.rotation = rot;
  return h;
}

double cyclotomic_residual(int n, double theta) { return cyclotomic_residual_scaled(n, theta, 1.0); }

double cyclotomic_residual_scaled(int n, double theta, double constant_scale) {
  double prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= std::sin(theta + k * kTau / (2.0 * n));
  double rhs = constant_scale * std::ldexp(prod, n - 1);
  return std::abs(std::sin(n * theta) - rhs);
}

double corner_holonomy_residual(int n, const Assignment& asg) {
  if (!assignment_valid(asg, n)) {
    throw ConstraintViolation("assignment does not satisfy a+b+c = tau/" + std::to_string(2 * n));
  }
  double lhs = std::log(checked_sin(n * asg.b)) - std::log(checked_sin(n * asg.c));
  double rhs = 0;
  for (int k = 0; k < n; ++k) {
    rhs += std::log(checked_sin(asg.b + k * kTau / (2.0 * n)));
    rhs -= std::log(checked_sin(asg.c + (n - 1 - k) * kTau / (2.0 * n)));
  }
  return std::abs(lhs - rhs);
}

}  // namespace holo
