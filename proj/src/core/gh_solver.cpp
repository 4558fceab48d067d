#include "core/gh_solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "core/error.hpp"

namespace ghcloud {

namespace {

// Deterministic greedy matching used to seed the branch-and-bound upper
// bound: assign every left point, then cover leftover right points, each
// time picking the partner that keeps the running distortion smallest.
std::vector<std::pair<int, int>> greedy_matching(const MetricSpace& x,
                                                 const MetricSpace& y) {
  std::vector<std::pair<int, int>> pairs;
  auto incremental = [&](int i, int j) {
    Rational worst(0);
    for (auto [a, b] : pairs)
      worst = max(worst, (x.dist(i, a) - y.dist(j, b)).abs());
    return worst;
  };
  for (int i = 0; i < x.size(); ++i) {
    int best_j = 0;
    Rational best_cost = incremental(i, 0);
    for (int j = 1; j < y.size(); ++j) {
      Rational cost = incremental(i, j);
      if (cost < best_cost) {
        best_cost = std::move(cost);
        best_j = j;
      }
    }
    pairs.emplace_back(i, best_j);
  }
  std::vector<bool> covered(static_cast<size_t>(y.size()), false);
  for (auto [i, j] : pairs) covered[static_cast<size_t>(j)] = true;
  for (int j = 0; j < y.size(); ++j) {
    if (covered[static_cast<size_t>(j)]) continue;
    int best_i = 0;
    Rational best_cost = incremental(0, j);
    for (int i = 1; i < x.size(); ++i) {
      Rational cost = incremental(i, j);
      if (cost < best_cost) {
        best_cost = std::move(cost);
        best_i = i;
      }
    }
    pairs.emplace_back(best_i, j);
  }
  return pairs;
}

// Non-empty subsets of {0..m-1} ordered by (popcount, mask): cheap singleton
// assignments are explored first while minimizing the value.
std::vector<uint32_t> masks_by_size(int m) {
  std::vector<uint32_t> masks;
  masks.reserve((uint32_t{1} << m) - 1);
  for (uint32_t s = 1; s < (uint32_t{1} << m); ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

// Subset orders that make depth-first completion order equal pair_set_less
// order of the finished relations. At inner left points a subset extending
// a common prefix sorts first, because its extra pairs precede every pair
// of the next left point; at the last left point the completed sequence
// simply ends, so there the shorter prefix sorts first.
std::vector<uint32_t> masks_by_pair_sequence(int m, bool last_point) {
  std::vector<uint32_t> masks;
  masks.reserve((uint32_t{1} << m) - 1);
  for (uint32_t s = 1; s < (uint32_t{1} << m); ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), [last_point](uint32_t a, uint32_t b) {
    while (a != 0 && b != 0) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return last_point ? b != 0 : a != 0;
  });
  return masks;
}

class Search {
 public:
  Search(const MetricSpace& x, const MetricSpace& y, uint64_t node_budget)
      : x_(x), y_(y), n_(x.size()), m_(y.size()), budget_(node_budget) {}

  uint64_t nodes() const { return nodes_; }

  // Phase 1: minimal distortion. `seed` is a known achievable distortion,
  // `floor` a proven lower bound (search stops early on reaching it).
  Rational minimize(Rational seed, const Rational& floor) {
    best_ = std::move(seed);
    floor_ = floor;
    order_.resize(static_cast<size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return x_.eccentricity(b) < x_.eccentricity(a);
    });
    masks_ = masks_by_size(m_);
    reset_state();
    descend_minimize(0, Rational(0), 0);
    return best_;
  }

  // Phase 2: lexicographically smallest relation attaining `target`.
  std::vector<std::pair<int, int>> reconstruct(const Rational& target) {
    target_ = target;
    order_.resize(static_cast<size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    masks_ = masks_by_pair_sequence(m_, false);
    last_masks_ = masks_by_pair_sequence(m_, true);
    reset_state();
    found_ = false;
    descend_reconstruct(0, Rational(0), 0);
    if (!found_)
      throw Error(ErrorKind::BadArgument,
                  "internal: optimal distortion not attained");
    std::vector<std::pair<int, int>> pairs;
    for (int pos = 0; pos < n_; ++pos)
      for (int j = 0; j < m_; ++j)
        if (chosen_[static_cast<size_t>(pos)] & (uint32_t{1} << j))
          pairs.emplace_back(order_[static_cast<size_t>(pos)], j);
    return pairs;
  }

 private:
  void reset_state() {
    chosen_.assign(static_cast<size_t>(n_), 0);
    nodes_cap_check();
  }

  void nodes_cap_check() {
    if (nodes_ > budget_)
      throw Error(ErrorKind::TooLarge,
                  "search exceeded node budget of " + std::to_string(budget_));
  }

  // Running distortion after adding subset `mask` for left point at `pos`.
  // Stops scanning once the value is certainly pruned: at >= cut when the
  // caller prunes non-improving costs, at > cut when the caller accepts
  // costs equal to the cut (phase 2). An early stop always returns a value
  // the caller will prune, so partial costs that descend are exact.
  Rational extend_cost(int pos, uint32_t mask, const Rational& sofar,
                       const Rational& cut, bool keep_equal) {
    Rational worst = sofar;
    const int left = order_[static_cast<size_t>(pos)];
    auto alive = [&] { return keep_equal ? worst <= cut : worst < cut; };
    for (int j = 0; j < m_ && alive(); ++j) {
      if (!(mask & (uint32_t{1} << j))) continue;
      for (int j2 = j + 1; j2 < m_; ++j2)
        if (mask & (uint32_t{1} << j2)) worst = max(worst, y_.dist(j, j2));
    }
    for (int t = 0; t < pos && alive(); ++t) {
      const Rational& dx = x_.dist(left, order_[static_cast<size_t>(t)]);
      const uint32_t other = chosen_[static_cast<size_t>(t)];
      for (int j = 0; j < m_ && alive(); ++j) {
        if (!(mask & (uint32_t{1} << j))) continue;
        for (int j2 = 0; j2 < m_; ++j2)
          if (other & (uint32_t{1} << j2))
            worst = max(worst, (dx - y_.dist(j, j2)).abs());
      }
    }
    return worst;
  }

  void descend_minimize(int pos, Rational partial, uint32_t covered) {
    if (best_ == floor_) return;  // cannot improve further
    if (pos == n_) {
      if (covered == full_right() && partial < best_) best_ = std::move(partial);
      return;
    }
    const bool last = pos == n_ - 1;
    const uint32_t missing = full_right() & ~covered;
    for (uint32_t mask : masks_) {
      if (best_ == floor_) return;
      if (last && (mask & missing) != missing) continue;
      ++nodes_;
      nodes_cap_check();
      Rational cost = extend_cost(pos, mask, partial, best_, false);
      if (!(cost < best_)) continue;
      chosen_[static_cast<size_t>(pos)] = mask;
      descend_minimize(pos + 1, std::move(cost), covered | mask);
    }
    chosen_[static_cast<size_t>(pos)] = 0;
  }

  void descend_reconstruct(int pos, Rational partial, uint32_t covered) {
    if (found_) return;
    if (pos == n_) {
      found_ = covered == full_right();
      return;
    }
    const bool last = pos == n_ - 1;
    const uint32_t missing = full_right() & ~covered;
    Rational cut = target_;  // prune strictly above the target
    for (uint32_t mask : last ? last_masks_ : masks_) {
      if (found_) return;
      if (last && (mask & missing) != missing) continue;
      ++nodes_;
      nodes_cap_check();
      Rational cost = extend_cost(pos, mask, partial, cut, true);
      if (cost > target_) continue;
      chosen_[static_cast<size_t>(pos)] = mask;
      descend_reconstruct(pos + 1, std::move(cost), covered | mask);
      if (found_) return;
    }
    chosen_[static_cast<size_t>(pos)] = 0;
  }

  uint32_t full_right() const { return (uint32_t{1} << m_) - 1; }

  const MetricSpace& x_;
  const MetricSpace& y_;
  const int n_;
  const int m_;
  const uint64_t budget_;
  uint64_t nodes_ = 0;
  Rational best_;
  Rational floor_;
  Rational target_;
  bool found_ = false;
  std::vector<int> order_;
  std::vector<uint32_t> chosen_;
  std::vector<uint32_t> masks_;
  std::vector<uint32_t> last_masks_;
};

}  // namespace

bool pair_set_less(const std::vector<std::pair<int, int>>& a,
                   const std::vector<std::pair<int, int>>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

GhBounds gh_bounds(const MetricSpace& x, const MetricSpace& y) {
  const Rational dx = x.diameter();
  const Rational dy = y.diameter();
  const Rational half(1, 2);
  Rational lower = (dx - dy).abs() * half;
  Correspondence greedy(x.size(), y.size(), greedy_matching(x, y));
  Rational upper = min(max(dx, dy), distortion(greedy, x, y)) * half;
  return GhBounds{std::move(lower), std::move(upper)};
}

GhResult gh_exact(const MetricSpace& x, const MetricSpace& y,
                  const GhOptions& opts) {
  if (std::max(x.size(), y.size()) > opts.max_side)
    throw Error(ErrorKind::TooLarge,
                "exact solver capped at " + std::to_string(opts.max_side) +
                    " points per side, got " + std::to_string(x.size()) +
                    " and " + std::to_string(y.size()));

  Correspondence greedy(x.size(), y.size(), greedy_matching(x, y));
  Rational seed = min(max(x.diameter(), y.diameter()), distortion(greedy, x, y));
  Rational floor = (x.diameter() - y.diameter()).abs();

  Search search(x, y, opts.max_nodes);
  Rational optimum = search.minimize(std::move(seed), floor);
  std::vector<std::pair<int, int>> pairs = search.reconstruct(optimum);
  return GhResult{optimum * Rational(1, 2),
                  Correspondence(x.size(), y.size(), std::move(pairs)),
                  search.nodes()};
}

GhResult gh_exhaustive(const MetricSpace& x, const MetricSpace& y,
                       int cell_cap) {
  bool have = false;
  Rational best;
  std::vector<std::pair<int, int>> best_pairs;
  uint64_t seen = 0;
  enumerate_correspondences(
      x.size(), y.size(),
      [&](const Correspondence& r) {
        ++seen;
        Rational dis = distortion(r, x, y);
        if (!have || dis < best ||
            (dis == best && pair_set_less(r.pairs(), best_pairs))) {
          have = true;
          best = std::move(dis);
          best_pairs = r.pairs();
        }
      },
      cell_cap);
  return GhResult{best * Rational(1, 2),
                  Correspondence(x.size(), y.size(), std::move(best_pairs)),
                  seen};
}

}  // namespace ghcloud
