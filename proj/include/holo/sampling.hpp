#pragma once

#include <cstdint>

#include "holo/angleform.hpp"

namespace holo {

// Deterministic PRNG so fixed seeds reproduce byte-identical outputs across
// platforms; the standard distributions are implementation-defined.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed = 0) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

// Uniform sample from the simplex {a, b, c > tau/(40n), a + b + c = tau/(2n)}.
inline Assignment sample_assignment(int n, SplitMix64& rng) {
  double total = kTau / (2.0 * n);
  double low = kTau / (40.0 * n);
  double free_mass = total - 3.0 * low;
  double u = rng.uniform(), v = rng.uniform();
  if (u > v) {
    double t = u;
    u = v;
    v = t;
  }
  double b0 = u, b1 = v - u;  // uniform barycentric weights; the third is implied
  Assignment asg;
  asg.a = low + free_mass * b0;
  asg.b = low + free_mass * b1;
  asg.c = total - asg.a - asg.b;
  return asg;
}

}  // namespace holo
