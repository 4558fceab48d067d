#include <doctest.h>

#include "core/error.hpp"
#include "core/gh_solver.hpp"
#include "core/random_instances.hpp"

using namespace ghcloud;

namespace {

MetricSpace two_point(int64_t d) {
  MetricSpace::Matrix m{{Rational(0), Rational(d)}, {Rational(d), Rational(0)}};
  return MetricSpace::validated(std::move(m));
}

}  // namespace

TEST_CASE("distortion") {
  MetricSpace a = two_point(3);
  MetricSpace b = two_point(1);
  CHECK(distortion(Correspondence::identity(2), a, a) == Rational(0));

  Correspondence bijection(2, 2, {{0, 0}, {1, 1}});
  CHECK(distortion(bijection, a, b) == Rational(2));

  CHECK(distortion(Correspondence::full(2, 2), a, b) == Rational(3));

  CHECK_THROWS_AS(distortion(bijection, a, MetricSpace::single_point()), Error);
  CHECK_THROWS_AS(Correspondence(2, 2, {{0, 0}}), Error);         // right 1 unmatched
  CHECK_THROWS_AS(Correspondence(2, 2, {{0, 0}, {0, 1}}), Error); // left 1 unmatched
  CHECK_THROWS_AS(Correspondence(2, 2, {{0, 5}}), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(count_correspondences(1, 1) == 1);
  CHECK(count_correspondences(2, 1) == 1);
  CHECK(count_correspondences(2, 2) == 7);
  // frozen counts from an independent brute force
  CHECK(count_correspondences(2, 3) == 25);
  CHECK(count_correspondences(3, 3) == 265);
  CHECK_THROWS_AS(count_correspondences(4, 4), Error);  // 16 cells > cap
}

TEST_CASE("gh_exact small identities") {
  InstanceRng rng(31);
  MetricSpace x = random_space(rng, 4);

  GhResult self = gh_exact(x, x);
  CHECK(self.value == Rational(0));
  CHECK(self.witness == Correspondence::identity(4));

  GhResult point = gh_exact(MetricSpace::single_point(), x);
  CHECK(point.value == x.diameter() * Rational(1, 2));

  GhResult pair = gh_exact(two_point(3), two_point(1));
  CHECK(pair.value == Rational(1));
  CHECK(distortion(pair.witness, two_point(3), two_point(1)) == Rational(2));
}

TEST_CASE("result invariants") {
  InstanceRng rng(32);
  for (int t = 0; t < 20; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 4));
    MetricSpace y = random_space(rng, rng.uniform(1, 4));
    GhResult r = gh_exact(x, y);
    CHECK(r.value * Rational(2) == distortion(r.witness, x, y));
    CHECK(r.value.sign() >= 0);
    GhBounds b = gh_bounds(x, y);
    CHECK(b.lower <= r.value);
    CHECK(r.value <= b.upper);
  }
}

TEST_CASE("bounds") {
  InstanceRng rng(33);
  MetricSpace x = random_space(rng, 4);
  GhBounds self = gh_bounds(x, x);
  CHECK(self.lower == Rational(0));
  CHECK(self.lower <= self.upper);

  MetricSpace diam4 = two_point(4);
  GhBounds point = gh_bounds(MetricSpace::single_point(), diam4);
  CHECK(point.lower == Rational(2));
  CHECK(gh_exact(MetricSpace::single_point(), diam4).value == Rational(2));

  GhBounds spread = gh_bounds(two_point(10), two_point(2));
  CHECK(spread.lower == Rational(4));
  CHECK(spread.upper <= Rational(5));
}

TEST_CASE("branch and bound equals exhaustive enumeration") {
  InstanceRng rng(34);
  for (int t = 0; t < 60; ++t) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, std::min(12 / n, 6));
    MetricSpace x = random_space(rng, n);
    MetricSpace y = random_space(rng, m);
    GhResult fast = gh_exact(x, y);
    GhResult oracle = gh_exhaustive(x, y);
    CHECK(fast.value == oracle.value);
    CHECK(fast.witness == oracle.witness);
  }
}

TEST_CASE("branch and bound equals enumeration on tie-heavy instances") {
  // uniform, path, two-scale and degenerate shapes: many optimal witnesses
  auto uniform = [](int n, int64_t d) {
    MetricSpace::Matrix m(static_cast<size_t>(n),
                          std::vector<Rational>(static_cast<size_t>(n), Rational(d)));
    for (int i = 0; i < n; ++i)
      m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(0);
    return MetricSpace::validated(std::move(m));
  };
  auto path = [](std::initializer_list<int64_t> xs) {
    std::vector<Rational> pts;
    for (int64_t v : xs) pts.push_back(Rational(v));
    return MetricSpace::from_points(pts);
  };
  std::vector<MetricSpace> zoo;
  zoo.push_back(MetricSpace::single_point());
  zoo.push_back(uniform(2, 1));
  zoo.push_back(uniform(3, 1));
  zoo.push_back(uniform(3, 2));
  zoo.push_back(uniform(4, 1));
  zoo.push_back(path({0, 1, 2}));
  zoo.push_back(path({0, 1, 3}));
  zoo.push_back(path({0, 2, 4, 6}));
  zoo.push_back(two_point(1));
  zoo.push_back(two_point(4));
  for (const auto& x : zoo)
    for (const auto& y : zoo) {
      if (x.size() * y.size() > 12) continue;
      GhResult fast = gh_exact(x, y);
      GhResult oracle = gh_exhaustive(x, y);
      CHECK(fast.value == oracle.value);
      CHECK(fast.witness == oracle.witness);
    }
}

TEST_CASE("frozen values from an external brute force") {
  auto space = [](std::initializer_list<std::initializer_list<const char*>> rows) {
    MetricSpace::Matrix m;
    for (const auto& row : rows) {
      std::vector<Rational> out;
      for (const char* v : row) out.push_back(Rational::parse(v));
      m.push_back(std::move(out));
    }
    return MetricSpace::validated(std::move(m));
  };
  MetricSpace x1 = space({{"0", "2", "3"}, {"2", "0", "4"}, {"3", "4", "0"}});
  MetricSpace y1 = space({{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
  CHECK(gh_exact(x1, y1).value == Rational(3, 2));

  MetricSpace x2 = space({{"0", "1", "3"}, {"1", "0", "2"}, {"3", "2", "0"}});
  MetricSpace y2 = space({{"0", "1/2"}, {"1/2", "0"}});
  CHECK(gh_exact(x2, y2).value == Rational(5, 4));

  MetricSpace x3 = space({{"0", "2", "4", "6"},
                          {"2", "0", "2", "4"},
                          {"4", "2", "0", "2"},
                          {"6", "4", "2", "0"}});
  MetricSpace y3 = space({{"0", "3", "5"}, {"3", "0", "2"}, {"5", "2", "0"}});
  CHECK(gh_exact(x3, y3).value == Rational(1));

  MetricSpace x4 = space({{"0", "7/3"}, {"7/3", "0"}});
  MetricSpace y4 = space({{"0", "1/2", "5/6"},
                          {"1/2", "0", "1/3"},
                          {"5/6", "1/3", "0"}});
  CHECK(gh_exact(x4, y4).value == Rational(11, 12));
}

TEST_CASE("symmetry and triangle inequality") {
  InstanceRng rng(35);
  for (int t = 0; t < 25; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 4));
    MetricSpace y = random_space(rng, rng.uniform(1, 4));
    MetricSpace z = random_space(rng, rng.uniform(1, 4));
    Rational xy = gh_exact(x, y).value;
    CHECK(xy == gh_exact(y, x).value);
    CHECK(gh_exact(x, z).value <= xy + gh_exact(y, z).value);
  }
}

TEST_CASE("isometry detection") {
  InstanceRng rng(36);
  for (int t = 0; t < 10; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(2, 4));
    MetricSpace y = x.permuted(rng.permutation(x.size()));
    CHECK(gh_exact(x, y).value == Rational(0));

    // perturbing one entry moves the space a positive distance away
    MetricSpace::Matrix m = x.matrix();
    m[0][1] += x.dist(0, 1) * Rational(1, 7);
    m[1][0] = m[0][1];
    if (!MetricSpace::check(m)) {
      MetricSpace bumped = MetricSpace::validated(std::move(m));
      CHECK(gh_exact(x, bumped).value > Rational(0));
    }
  }
}

TEST_CASE("scaling homogeneity and segment identity") {
  InstanceRng rng(37);
  const Rational lambdas[3] = {Rational(1, 3), Rational(2), Rational(7, 5)};
  for (int t = 0; t < 8; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(2, 4));
    MetricSpace y = random_space(rng, rng.uniform(2, 4));
    Rational base = gh_exact(x, y).value;
    for (const Rational& lam : lambdas)
      CHECK(gh_exact(x.scaled(lam), y.scaled(lam)).value == lam * base);

    Rational lam(3), mu(1, 2);
    CHECK(gh_exact(x.scaled(lam), x.scaled(mu)).value ==
          (lam - mu).abs() * x.diameter() * Rational(1, 2));
  }
}

TEST_CASE("embedding bound against the Hausdorff distance") {
  InstanceRng rng(38);
  for (int t = 0; t < 20; ++t) {
    MetricSpace ambient = random_space(rng, rng.uniform(2, 6));
    auto a = rng.nonempty_subset(ambient.size());
    auto b = rng.nonempty_subset(ambient.size());
    CHECK(gh_exact(ambient.restriction(a), ambient.restriction(b)).value <=
          hausdorff_distance(ambient, a, b));
  }
}

TEST_CASE("bounded contraction toward the one-point space") {
  InstanceRng rng(39);
  MetricSpace x = random_space(rng, 3);
  const MetricSpace point = MetricSpace::single_point();
  Rational prev;
  for (int k = 0; k <= 6; ++k) {
    Rational factor = Rational::pow(Rational(1, 2), k);
    Rational d = gh_exact(x.scaled(factor), point).value;
    CHECK(d == factor * x.diameter() * Rational(1, 2));
    if (k > 0) CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("size cap and node budget") {
  InstanceRng rng(40);
  MetricSpace big = random_space(rng, 9);
  CHECK_THROWS_AS(gh_exact(big, big), Error);

  MetricSpace x = random_space(rng, 5);
  MetricSpace y = random_space(rng, 5);
  GhOptions strangled;
  strangled.max_nodes = 2;
  CHECK_THROWS_AS(gh_exact(x, y, strangled), Error);
}

TEST_CASE("deterministic node counts") {
  InstanceRng rng(41);
  MetricSpace x = random_space(rng, 4);
  MetricSpace y = random_space(rng, 4);
  GhResult first = gh_exact(x, y);
  GhResult second = gh_exact(x, y);
  CHECK(first.nodes_explored == second.nodes_explored);
  CHECK(first.witness == second.witness);
}

TEST_CASE("witness ties break toward the identity") {
  // all distances equal: every zero-distortion relation is a permutation
  MetricSpace::Matrix m(3, std::vector<Rational>(3, Rational(1)));
  for (int i = 0; i < 3; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = Rational(0);
  MetricSpace x = MetricSpace::validated(std::move(m));
  GhResult r = gh_exact(x, x);
  CHECK(r.value == Rational(0));
  CHECK(r.witness == Correspondence::identity(3));
}
