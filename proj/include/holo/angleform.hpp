#pragma once

#include <array>
#include <string>
#include <string_view>

#include "holo/bigint.hpp"

namespace holo {

inline constexpr double kTau = 6.283185307179586476925286766559;

// Numeric assignment of the three base angles, in radians.
// Valid for constraint index n when a + b + c == tau/(2n).
struct Assignment {
  double a = 0, b = 0, c = 0;
};

// Checks a + b + c == tau/(2n) within 1e-12 relative tolerance.
bool assignment_valid(const Assignment& asg, int n);

// Exact linear form  p*a + q*b + r*c + s*tau  with rational coefficients.
// Arithmetic is exact; evaluation uses tau = 2*pi in binary64.
class AngleForm {
 public:
  AngleForm() = default;
  AngleForm(Rational ca, Rational cb, Rational cc, Rational ct);

  static AngleForm zero() { return AngleForm(); }
  static AngleForm a() { return AngleForm(1, 0, 0, 0); }
  static AngleForm b() { return AngleForm(0, 1, 0, 0); }
  static AngleForm c() { return AngleForm(0, 0, 1, 0); }
  static AngleForm tau_times(Rational s) { return AngleForm(0, 0, 0, std::move(s)); }

  const Rational& coeff_a() const { return co_[0]; }
  const Rational& coeff_b() const { return co_[1]; }
  const Rational& coeff_c() const { return co_[2]; }
  const Rational& coeff_tau() const { return co_[3]; }

  AngleForm operator+(const AngleForm& o) const;
  AngleForm operator-(const AngleForm& o) const;
  AngleForm operator-() const;
  AngleForm scaled(const Rational& k) const;

  // Coefficient-wise equality, no constraint applied.
  bool operator==(const AngleForm& o) const { return co_ == o.co_; }
  bool operator!=(const AngleForm& o) const { return !(*this == o); }

  // Adds tau/(2n): the prime operation for the ambient constraint index.
  AngleForm prime(int n) const;

  // Canonical representative modulo a + b + c - tau/(2n): eliminates c.
  AngleForm reduced(int n) const;

  // Equality modulo the constraint for index n.
  bool equivalent(const AngleForm& o, int n) const;

  // Substitution a->b->c->a, used to relabel shapes between corners.
  AngleForm cycled() const;

  // Throws ConstraintViolation when the assignment is invalid for n.
  double eval(const Assignment& asg, int n) const;

  // Evaluation without the constraint check (for free-parameter uses).
  double eval_unchecked(const Assignment& asg) const;

  std::string to_string() const;

  // Accepts "p*a + q*b + r*c + s*tau" with rational literals, omitted unit
  // coefficients, divisor suffixes ("tau/4") and permuted term order.
  static AngleForm parse(std::string_view text);

  // Strict-weak order for use as map keys; no geometric meaning.
  bool operator<(const AngleForm& o) const;

 private:
  std::array<Rational, 4> co_;  // a, b, c, tau
};

AngleForm make_form(Rational ca, Rational cb, Rational cc, Rational ct);

// Similarity class: three angle forms in counter-clockwise vertex order.
struct Shape {
  std::array<AngleForm, 3> angles;

  Shape() = default;
  Shape(AngleForm a0, AngleForm a1, AngleForm a2) : angles{std::move(a0), std::move(a1), std::move(a2)} {}

  bool operator==(const Shape& o) const { return angles == o.angles; }

  // Equal as ccw cyclic sequences modulo the constraint (no reflections).
  bool same_class(const Shape& o, int n) const;

  Shape cycled_labels() const;  // a->b->c->a on every coefficient

  // Canonical key for color grouping and merge detection.
  std::string class_key(int n) const;
};

// Pass iff the three angles sum to exactly tau/2 modulo the constraint.
bool shape_sum_check(const Shape& shape, int n);

// Evaluates the three angles; throws UnrealizableShape when an angle falls
// outside (0, tau/2) by more than 1e-12.
std::array<double, 3> eval_shape(const Shape& shape, const Assignment& asg, int n);

}  // namespace holo
