#include "core/thread_limit.hpp"

#include <algorithm>
#include <random>

#include "core/error.hpp"

namespace ghcloud {

namespace {

std::vector<Rational> default_budgets(int links) {
  std::vector<Rational> budgets;
  budgets.reserve(static_cast<size_t>(links));
  for (int n = 1; n <= links; ++n)
    budgets.push_back(Rational::pow(Rational(1, 2), n));
  return budgets;
}

// successor lists succ[n][i]: right neighbors of point i under link n
std::vector<std::vector<std::vector<int>>> successor_table(const ThreadSystem& ts) {
  std::vector<std::vector<std::vector<int>>> succ;
  succ.reserve(ts.links().size());
  for (size_t n = 0; n < ts.links().size(); ++n) {
    const auto& link = ts.links()[n];
    std::vector<std::vector<int>> per_point(static_cast<size_t>(link.left_size()));
    for (auto [i, j] : link.pairs()) per_point[static_cast<size_t>(i)].push_back(j);
    succ.push_back(std::move(per_point));
  }
  return succ;
}

}  // namespace

ThreadSystem::ThreadSystem(std::vector<MetricSpace> spaces,
                           std::vector<Correspondence> links,
                           std::vector<Rational> budgets, bool default_rule)
    : spaces_(std::move(spaces)),
      links_(std::move(links)),
      budgets_(std::move(budgets)),
      default_rule_(default_rule) {
  if (spaces_.empty())
    throw Error(ErrorKind::BadArgument, "chain needs at least one space");
  if (links_.size() + 1 != spaces_.size())
    throw Error(ErrorKind::SizeMismatch,
                "chain of " + std::to_string(spaces_.size()) + " spaces needs " +
                    std::to_string(spaces_.size() - 1) + " correspondences, got " +
                    std::to_string(links_.size()));
  if (budgets_.size() != links_.size())
    throw Error(ErrorKind::SizeMismatch, "one distortion budget per link required");
  for (size_t n = 0; n < links_.size(); ++n) {
    const auto& link = links_[n];
    if (link.left_size() != spaces_[n].size() ||
        link.right_size() != spaces_[n + 1].size())
      throw Error(ErrorKind::SizeMismatch,
                  "correspondence " + std::to_string(n + 1) +
                      " does not match adjacent space sizes");
    if (budgets_[n].sign() <= 0)
      throw Error(ErrorKind::BadArgument, "budgets must be positive");
    Rational dis = distortion(link, spaces_[n], spaces_[n + 1]);
    if (!(dis < budgets_[n]))
      throw Error(ErrorKind::BadArgument,
                  "correspondence " + std::to_string(n + 1) + " has distortion " +
                      dis.to_string() + ", not below its budget " +
                      budgets_[n].to_string(),
                  static_cast<int>(n + 1));
  }
}

ThreadSystem ThreadSystem::with_default_budgets(std::vector<MetricSpace> spaces,
                                                std::vector<Correspondence> links) {
  const int n_links = static_cast<int>(links.size());
  return ThreadSystem(std::move(spaces), std::move(links),
                      default_budgets(n_links), true);
}

ThreadSystem ThreadSystem::with_budgets(std::vector<MetricSpace> spaces,
                                        std::vector<Correspondence> links,
                                        std::vector<Rational> budgets) {
  return ThreadSystem(std::move(spaces), std::move(links), std::move(budgets),
                      false);
}

Rational ThreadSystem::tail_bound() const {
  if (!default_rule_) return Rational(0);
  // sum_{k >= N} 2^-k = 2^(1-N)
  return Rational::pow(Rational(1, 2), depth() - 1);
}

Rational ThreadSystem::level_bound(int n) const {
  if (n < 1 || n > depth())
    throw Error(ErrorKind::BadArgument, "level out of range");
  Rational sum = tail_bound();
  for (int k = n; k <= depth() - 1; ++k) sum += budget(k);
  return sum;
}

std::vector<ThreadPath> enumerate_threads(const ThreadSystem& ts, uint64_t cap) {
  const auto succ = successor_table(ts);
  std::vector<ThreadPath> out;
  std::vector<int> current(static_cast<size_t>(ts.depth()));

  // iterative DFS over start points and successor choices
  auto extend = [&](auto&& self, int level) -> void {
    if (level == ts.depth()) {
      if (static_cast<uint64_t>(out.size()) >= cap)
        throw Error(ErrorKind::ThreadExplosion,
                    "thread count exceeds cap " + std::to_string(cap));
      out.push_back(ThreadPath{current});
      return;
    }
    for (int next : succ[static_cast<size_t>(level) - 1]
                        [static_cast<size_t>(current[static_cast<size_t>(level) - 1])]) {
      current[static_cast<size_t>(level)] = next;
      self(self, level + 1);
    }
  };
  for (int start = 0; start < ts.spaces().front().size(); ++start) {
    current[0] = start;
    extend(extend, 1);
  }
  return out;
}

std::vector<ThreadPath> sample_threads(const ThreadSystem& ts, size_t count,
                                       uint64_t seed) {
  const auto succ = successor_table(ts);
  std::mt19937_64 rng(seed);
  std::vector<ThreadPath> out;
  out.reserve(count);
  for (size_t c = 0; c < count; ++c) {
    ThreadPath path;
    path.points.resize(static_cast<size_t>(ts.depth()));
    path.points[0] = static_cast<int>(rng() % static_cast<uint64_t>(
                         ts.spaces().front().size()));
    for (int level = 1; level < ts.depth(); ++level) {
      const auto& options = succ[static_cast<size_t>(level) - 1]
                                [static_cast<size_t>(path.points[static_cast<size_t>(level) - 1])];
      path.points[static_cast<size_t>(level)] =
          options[static_cast<size_t>(rng() % options.size())];
    }
    out.push_back(std::move(path));
  }
  return out;
}

namespace {

void require_matching(const ThreadPath& t, const ThreadSystem& ts) {
  if (static_cast<int>(t.points.size()) != ts.depth())
    throw Error(ErrorKind::MixedSystems,
                "thread of length " + std::to_string(t.points.size()) +
                    " in a chain of depth " + std::to_string(ts.depth()));
  for (int level = 0; level < ts.depth(); ++level) {
    int p = t.points[static_cast<size_t>(level)];
    if (p < 0 || p >= ts.spaces()[static_cast<size_t>(level)].size())
      throw Error(ErrorKind::MixedSystems,
                  "thread point out of range at level " + std::to_string(level + 1));
  }
}

}  // namespace

std::pair<Rational, Rational> thread_distance(const ThreadPath& a,
                                              const ThreadPath& b,
                                              const ThreadSystem& ts) {
  require_matching(a, ts);
  require_matching(b, ts);
  const int last = ts.depth() - 1;
  Rational approx = ts.spaces()[static_cast<size_t>(last)].dist(
      a.points[static_cast<size_t>(last)], b.points[static_cast<size_t>(last)]);
  return {std::move(approx), ts.tail_bound()};
}

LimitResult limit_space(const ThreadSystem& ts, uint64_t cap) {
  std::vector<ThreadPath> threads = enumerate_threads(ts, cap);
  const MetricSpace& last = ts.spaces().back();

  // Approximate thread distance is the final-level distance, and in a true
  // metric space it vanishes exactly when the endpoints coincide, so the
  // zero-distance quotient groups threads by endpoint.
  std::vector<int> endpoint_class(static_cast<size_t>(last.size()), -1);
  std::vector<int> class_endpoint;
  std::vector<int> classes(threads.size());
  for (size_t t = 0; t < threads.size(); ++t) {
    const int end = threads[t].points.back();
    if (endpoint_class[static_cast<size_t>(end)] < 0) {
      endpoint_class[static_cast<size_t>(end)] = static_cast<int>(class_endpoint.size());
      class_endpoint.push_back(end);
    }
    classes[t] = endpoint_class[static_cast<size_t>(end)];
  }

  MetricSpace quotient = last.restriction(class_endpoint);
  return LimitResult{std::move(quotient), std::move(threads), std::move(classes)};
}

std::vector<LevelReport> verify_projection_bound(const ThreadSystem& ts,
                                                 const LimitResult& limit) {
  std::vector<LevelReport> reports;
  reports.reserve(static_cast<size_t>(ts.depth()));
  for (int level = 1; level <= ts.depth(); ++level) {
    std::vector<std::pair<int, int>> projected;
    projected.reserve(limit.threads.size());
    for (size_t t = 0; t < limit.threads.size(); ++t)
      projected.emplace_back(limit.classes[t],
                             limit.threads[t].points[static_cast<size_t>(level) - 1]);
    Correspondence proj(limit.space.size(),
                        ts.spaces()[static_cast<size_t>(level) - 1].size(),
                        std::move(projected));
    const MetricSpace& stage = ts.spaces()[static_cast<size_t>(level) - 1];
    Rational dis = distortion(proj, limit.space, stage);
    Rational bound = ts.level_bound(level);
    const bool ok = !(dis > bound);
    if (!ok) {
      // locate a witnessing pair of pairs for the report
      const auto& pairs = proj.pairs();
      for (size_t a = 0; a < pairs.size(); ++a)
        for (size_t b = a + 1; b < pairs.size(); ++b)
          if ((limit.space.dist(pairs[a].first, pairs[b].first) -
               stage.dist(pairs[a].second, pairs[b].second))
                  .abs() == dis)
            throw Error(ErrorKind::BoundViolated,
                        "projection at level " + std::to_string(level) +
                            " has distortion " + dis.to_string() +
                            " above the bound " + bound.to_string() +
                            ", witnessed by pairs (" +
                            std::to_string(pairs[a].first) + "," +
                            std::to_string(pairs[a].second) + ") and (" +
                            std::to_string(pairs[b].first) + "," +
                            std::to_string(pairs[b].second) + ")",
                        level);
      throw Error(ErrorKind::BoundViolated,
                  "projection at level " + std::to_string(level) +
                      " has distortion " + dis.to_string() +
                      " above the bound " + bound.to_string(),
                  level);
    }
    reports.push_back(LevelReport{level, std::move(bound), std::move(dis), ok});
  }
  return reports;
}

}  // namespace ghcloud
