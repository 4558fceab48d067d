#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "core/correspondence.hpp"
#include "core/metric_space.hpp"
#include "core/rational.hpp"

namespace ghcloud {

// Finite chain X_1 -R_1-> X_2 -R_2-> ... -R_{N-1}-> X_N with a distortion
// budget per link. The default budget rule is 1/2^n for link n, in which
// case the (conceptually infinite) continuation contributes a geometric
// tail; explicit custom budgets describe a chain that ends at depth N and
// contribute no tail.
class ThreadSystem {
 public:
  static ThreadSystem with_default_budgets(std::vector<MetricSpace> spaces,
                                           std::vector<Correspondence> links);
  static ThreadSystem with_budgets(std::vector<MetricSpace> spaces,
                                   std::vector<Correspondence> links,
                                   std::vector<Rational> budgets);

  int depth() const { return static_cast<int>(spaces_.size()); }
  const std::vector<MetricSpace>& spaces() const { return spaces_; }
  const std::vector<Correspondence>& links() const { return links_; }
  const Rational& budget(int n) const { return budgets_[static_cast<size_t>(n) - 1]; }  // 1-based link
  bool default_budget_rule() const { return default_rule_; }

  // Sum of budgets beyond the last link: 2^(1-N) under the default rule,
  // zero for an explicit finite budget list.
  Rational tail_bound() const;

  // Budget mass from link n on, including the tail: the bound on how far
  // level-n distances can drift from the limit. Equals 2^(1-n) under the
  // default rule.
  Rational level_bound(int n) const;

 private:
  ThreadSystem(std::vector<MetricSpace> spaces, std::vector<Correspondence> links,
               std::vector<Rational> budgets, bool default_rule);

  std::vector<MetricSpace> spaces_;
  std::vector<Correspondence> links_;
  std::vector<Rational> budgets_;
  bool default_rule_;
};

// One point per space, consecutive points joined by the chain's relations.
struct ThreadPath {
  std::vector<int> points;
  bool operator==(const ThreadPath&) const = default;
};

inline constexpr uint64_t kDefaultThreadCap = 100'000;

// Every thread through the chain, in lexicographic point order. Throws
// ThreadExplosion beyond the cap.
std::vector<ThreadPath> enumerate_threads(const ThreadSystem& ts,
                                          uint64_t cap = kDefaultThreadCap);

// Seeded random walk sample (with replacement); exploration aid for chains
// too branchy to enumerate.
std::vector<ThreadPath> sample_threads(const ThreadSystem& ts, size_t count,
                                       uint64_t seed);

// (approximate distance at the last level, certified drift bound)
std::pair<Rational, Rational> thread_distance(const ThreadPath& a,
                                              const ThreadPath& b,
                                              const ThreadSystem& ts);

struct LimitResult {
  MetricSpace space;
  std::vector<ThreadPath> threads;
  std::vector<int> classes;  // thread index -> point of the limit space
};

// Quotient of the thread set by exactly-zero approximate distance. The
// result is a genuine metric space over the surviving classes.
LimitResult limit_space(const ThreadSystem& ts, uint64_t cap = kDefaultThreadCap);

struct LevelReport {
  int level;                // n
  Rational bound;           // allowed distortion at this level
  Rational max_distortion;  // observed distortion of the projection
  bool ok;
};

// Projects threads onto each level and checks the projection's distortion
// against the budget bound. A violation means a broken invariant, so it
// throws BoundViolated rather than reporting it.
std::vector<LevelReport> verify_projection_bound(const ThreadSystem& ts,
                                                 const LimitResult& limit);

}  // namespace ghcloud
