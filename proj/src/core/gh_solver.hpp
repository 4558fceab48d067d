#pragma once

#include <cstdint>

#include "core/correspondence.hpp"
#include "core/metric_space.hpp"
#include "core/rational.hpp"

namespace ghcloud {

struct GhOptions {
  int max_side = 8;                  // cap on max(|X|, |Y|)
  uint64_t max_nodes = 10'000'000;   // search-node budget
};

struct GhResult {
  Rational value;           // half the minimal distortion
  Correspondence witness;   // lexicographically smallest minimizer
  uint64_t nodes_explored;
};

struct GhBounds {
  Rational lower;  // |diam X - diam Y| / 2
  Rational upper;  // min(max diam, greedy-matching distortion) / 2
};

// Exact Gromov-Hausdorff distance between finite metric spaces as half the
// minimum correspondence distortion, by branch-and-bound over assignments of
// left points to non-empty right-point sets. Throws TooLarge beyond
// opts.max_side or when the node budget is exhausted.
GhResult gh_exact(const MetricSpace& x, const MetricSpace& y,
                  const GhOptions& opts = {});

GhBounds gh_bounds(const MetricSpace& x, const MetricSpace& y);

// Independent oracle: minimum over the full enumeration of bi-total
// relations. Only for n*m <= cell_cap.
GhResult gh_exhaustive(const MetricSpace& x, const MetricSpace& y,
                       int cell_cap = kExhaustiveCellCap);

// Ordering used for witness tie-breaking: plain lexicographic comparison of
// the sorted pair lists.
bool pair_set_less(const std::vector<std::pair<int, int>>& a,
                   const std::vector<std::pair<int, int>>& b);

}  // namespace ghcloud
