#include <doctest.h>

#include <algorithm>

#include "core/error.hpp"
#include "core/gh_solver.hpp"
#include "core/random_instances.hpp"
#include "core/thread_limit.hpp"

using namespace ghcloud;

namespace {

MetricSpace space_of(std::initializer_list<std::initializer_list<int64_t>> rows,
                     int64_t den = 1) {
  MetricSpace::Matrix m;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (int64_t v : row) out.push_back(Rational(v, den));
    m.push_back(std::move(out));
  }
  return MetricSpace::validated(std::move(m));
}

ThreadSystem identity_chain(const MetricSpace& x, int depth) {
  std::vector<MetricSpace> spaces(static_cast<size_t>(depth), x);
  std::vector<Correspondence> links(static_cast<size_t>(depth) - 1,
                                    Correspondence::identity(x.size()));
  return ThreadSystem::with_default_budgets(std::move(spaces), std::move(links));
}

}  // namespace

TEST_CASE("thread enumeration") {
  MetricSpace x = space_of({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  ThreadSystem chain = identity_chain(x, 4);
  auto threads = enumerate_threads(chain);
  CHECK(threads.size() == 3);
  for (const auto& t : threads) CHECK(t.points == std::vector<int>(4, t.points[0]));

  ThreadSystem single = identity_chain(x, 1);
  CHECK(enumerate_threads(single).size() == 3);

  // two 2-point spaces joined by the full relation: every pair continues
  MetricSpace tiny = space_of({{0, 1}, {1, 0}}, 8);
  ThreadSystem full = ThreadSystem::with_default_budgets(
      {tiny, tiny}, {Correspondence::full(2, 2)});
  CHECK(enumerate_threads(full).size() == 4);

  CHECK_THROWS_AS(enumerate_threads(full, 3), Error);
}

TEST_CASE("budgets are enforced at construction") {
  MetricSpace far_apart = space_of({{0, 3}, {3, 0}});
  MetricSpace x = space_of({{0, 1}, {1, 0}});
  // full relation between distance-3 and distance-1 spaces has distortion 3
  CHECK_THROWS_AS(ThreadSystem::with_default_budgets(
                      {far_apart, x}, {Correspondence::full(2, 2)}),
                  Error);
  // a generous custom budget admits the same chain
  ThreadSystem ok = ThreadSystem::with_budgets(
      {far_apart, x}, {Correspondence::full(2, 2)}, {Rational(4)});
  CHECK(ok.depth() == 2);
  CHECK(ok.tail_bound() == Rational(0));
  CHECK(ok.level_bound(1) == Rational(4));
}

TEST_CASE("thread distance and the drift bound") {
  MetricSpace x = space_of({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  ThreadSystem chain = identity_chain(x, 5);
  auto threads = enumerate_threads(chain);

  auto [zero, tail] = thread_distance(threads[0], threads[0], chain);
  CHECK(zero == Rational(0));
  CHECK(tail == Rational::pow(Rational(1, 2), 4));

  // identity chains carry distances through unchanged
  auto [d01, bound] = thread_distance(threads[0], threads[1], chain);
  CHECK(d01 == Rational(1));
  CHECK(bound == chain.tail_bound());

  ThreadPath foreign{{0, 0}};
  CHECK_THROWS_AS(thread_distance(foreign, threads[0], chain), Error);
}

TEST_CASE("level distances drift by less than the remaining budget mass") {
  InstanceRng rng(51);
  for (int t = 0; t < 5; ++t) {
    ThreadSystem chain = random_chain(rng, 6, 4);
    auto threads = enumerate_threads(chain);
    for (size_t a = 0; a < threads.size(); ++a)
      for (size_t b = a + 1; b < threads.size(); ++b)
        for (int level = 1; level <= chain.depth(); ++level) {
          const auto& space = chain.spaces()[static_cast<size_t>(level) - 1];
          Rational at_level =
              space.dist(threads[a].points[static_cast<size_t>(level) - 1],
                         threads[b].points[static_cast<size_t>(level) - 1]);
          auto [approx, tail] = thread_distance(threads[a], threads[b], chain);
          CHECK((at_level - approx).abs() <= chain.level_bound(level));
        }
  }
}

TEST_CASE("limit of an identity chain is the original space") {
  MetricSpace x = space_of({{0, 2, 3}, {2, 0, 2}, {3, 2, 0}});
  ThreadSystem chain = identity_chain(x, 6);
  LimitResult limit = limit_space(chain);
  CHECK(limit.space.same_matrix(x));
  CHECK(limit.threads.size() == 3);
  for (size_t t = 0; t < limit.threads.size(); ++t)
    CHECK(limit.classes[t] == limit.threads[t].points.back());
}

TEST_CASE("limit of a chain of single points is the one-point space") {
  ThreadSystem chain = identity_chain(MetricSpace::single_point(), 4);
  LimitResult limit = limit_space(chain);
  CHECK(limit.space.size() == 1);
}

TEST_CASE("thread distances satisfy the triangle inequality") {
  InstanceRng rng(54);
  ThreadSystem chain = random_chain(rng, 5, 4);
  auto threads = enumerate_threads(chain);
  for (size_t a = 0; a < threads.size(); ++a)
    for (size_t b = 0; b < threads.size(); ++b)
      for (size_t c = 0; c < threads.size(); ++c) {
        Rational ab = thread_distance(threads[a], threads[b], chain).first;
        Rational bc = thread_distance(threads[b], threads[c], chain).first;
        Rational ac = thread_distance(threads[a], threads[c], chain).first;
        CHECK(ac <= ab + bc);
      }
}

TEST_CASE("perturbed chains stay close to their source") {
  InstanceRng rng(52);
  MetricSpace x = random_space(rng, 3);
  std::vector<MetricSpace> spaces{x};
  std::vector<Correspondence> links;
  const int depth = 6;
  for (int n = 1; n < depth; ++n) {
    spaces.push_back(perturbed_space(spaces.back(), rng,
                                     Rational::pow(Rational(1, 2), n)));
    links.push_back(Correspondence::identity(3));
  }
  ThreadSystem chain =
      ThreadSystem::with_default_budgets(std::move(spaces), std::move(links));
  LimitResult limit = limit_space(chain);
  CHECK_FALSE(MetricSpace::check(limit.space.matrix()).has_value());
  // the limit is within the level-1 drift bound of the first space
  CHECK(gh_exact(chain.spaces()[0], limit.space).value <=
        chain.level_bound(1) * Rational(1, 2));
}

TEST_CASE("projection bounds hold level by level") {
  MetricSpace x = space_of({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  ThreadSystem chain = identity_chain(x, 5);
  LimitResult limit = limit_space(chain);
  auto reports = verify_projection_bound(chain, limit);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) {
    CHECK(r.ok);
    CHECK(r.max_distortion == Rational(0));
    CHECK(r.bound == Rational::pow(Rational(1, 2), r.level - 1));
  }

  InstanceRng rng(53);
  for (int t = 0; t < 5; ++t) {
    ThreadSystem random = random_chain(rng, 6, 4);
    LimitResult rl = limit_space(random);
    for (const auto& r : verify_projection_bound(random, rl)) {
      CHECK(r.ok);
      CHECK(r.max_distortion <= r.bound);
    }
  }
}

TEST_CASE("point splits produce non-bijective threads") {
  // one point fans out to two points a tiny distance apart
  MetricSpace one = MetricSpace::single_point();
  MetricSpace split = space_of({{0, 1}, {1, 0}}, 8);  // distance 1/8 < 1/2
  ThreadSystem chain = ThreadSystem::with_default_budgets(
      {one, split}, {Correspondence::full(1, 2)});
  LimitResult limit = limit_space(chain);
  CHECK(limit.threads.size() == 2);
  CHECK(limit.space.size() == 2);
  auto reports = verify_projection_bound(chain, limit);
  CHECK(reports[0].max_distortion == Rational(1, 8));
  CHECK(reports[0].bound == Rational(1));
}

TEST_CASE("point merges collapse thread classes") {
  // two nearby points both map onto one point downstream
  MetricSpace pair = space_of({{0, 1}, {1, 0}}, 8);  // distance 1/8
  MetricSpace one = MetricSpace::single_point();
  ThreadSystem chain = ThreadSystem::with_default_budgets(
      {pair, one}, {Correspondence::full(2, 1)});
  LimitResult limit = limit_space(chain);
  CHECK(limit.threads.size() == 2);
  CHECK(limit.space.size() == 1);
  CHECK(limit.classes[0] == limit.classes[1]);
  auto reports = verify_projection_bound(chain, limit);
  CHECK(reports[0].max_distortion == Rational(1, 8));
}

TEST_CASE("custom budget example at depth two") {
  // distortion 1/4 against the default budget 1/2; level-1 bound is 1
  MetricSpace a = space_of({{0, 1}, {1, 0}});
  MetricSpace b = space_of({{0, 5}, {5, 0}}, 4);  // distances 5/4
  Correspondence id2 = Correspondence::identity(2);
  CHECK(distortion(id2, a, b) == Rational(1, 4));
  ThreadSystem chain = ThreadSystem::with_default_budgets({a, b}, {id2});
  LimitResult limit = limit_space(chain);
  auto reports = verify_projection_bound(chain, limit);
  CHECK(reports[0].bound == Rational(1));
  CHECK(reports[0].max_distortion <= Rational(1));
}

TEST_CASE("sampled threads are valid and reproducible") {
  MetricSpace tiny = space_of({{0, 1}, {1, 0}}, 8);
  ThreadSystem chain = ThreadSystem::with_default_budgets(
      {tiny, tiny, tiny},
      {Correspondence::full(2, 2), Correspondence::full(2, 2)});
  auto first = sample_threads(chain, 16, 99);
  auto second = sample_threads(chain, 16, 99);
  CHECK(first == second);
  auto all = enumerate_threads(chain);
  for (const auto& t : first)
    CHECK(std::count(all.begin(), all.end(), t) == 1);
}
