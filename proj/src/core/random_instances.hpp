#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/metric_space.hpp"
#include "core/rational.hpp"
#include "core/thread_limit.hpp"

namespace ghcloud {

// Deterministic generator for test and repro instances. Draws go through
// modulo reduction on the raw mt19937_64 stream, so a fixed seed produces
// the same instances on every platform.
class InstanceRng {
 public:
  explicit InstanceRng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }
  int uniform(int lo, int hi);  // inclusive

  // value in [lo, hi] with denominator in [1, max_den]
  Rational rational_in(int lo, int hi, int max_den = 4);

  std::vector<int> permutation(int n);
  std::vector<int> nonempty_subset(int n);

 private:
  std::mt19937_64 engine_;
};

// Shortest-path closure of random symmetric positive weights: a valid
// metric space with exact rational distances.
MetricSpace random_space(InstanceRng& rng, int points);

// Additive perturbation of every off-diagonal entry by a random value in
// (0, eps/2], re-closed under shortest paths. The identity correspondence
// between input and output has distortion strictly below eps.
MetricSpace perturbed_space(const MetricSpace& base, InstanceRng& rng,
                            const Rational& eps);

// Chain of `depth` spaces obtained by repeated perturbation within the
// default budgets 1/2^n, linked by identity correspondences.
ThreadSystem random_chain(InstanceRng& rng, int depth, int max_points);

}  // namespace ghcloud
