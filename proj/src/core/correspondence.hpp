#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "core/metric_space.hpp"
#include "core/rational.hpp"

namespace ghcloud {

// Relation between point sets {0..n-1} and {0..m-1} that is total in both
// directions. Pairs are kept sorted and deduplicated, so equal relations
// compare equal and serialize identically.
class Correspondence {
 public:
  Correspondence(int n, int m, std::vector<std::pair<int, int>> pairs);

  static Correspondence identity(int n);
  static Correspondence full(int n, int m);

  int left_size() const { return n_; }
  int right_size() const { return m_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  bool operator==(const Correspondence& rhs) const = default;

 private:
  int n_;
  int m_;
  std::vector<std::pair<int, int>> pairs_;
};

// max over (x,y),(x',y') in R of | d_X(x,x') - d_Y(y,y') |
Rational distortion(const Correspondence& r, const MetricSpace& x,
                    const MetricSpace& y);

inline constexpr int kExhaustiveCellCap = 12;  // n*m limit for enumeration

// Visits every bi-total relation between {0..n-1} and {0..m-1} exactly once,
// in increasing order of the pair-set bitmask (bit i*m+j = pair (i,j)).
// Throws TooLarge when n*m exceeds the cap.
void enumerate_correspondences(
    int n, int m, const std::function<void(const Correspondence&)>& visit,
    int cell_cap = kExhaustiveCellCap);

uint64_t count_correspondences(int n, int m, int cell_cap = kExhaustiveCellCap);

}  // namespace ghcloud
