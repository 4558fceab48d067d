#include <doctest.h>

#include <random>

#include "core/error.hpp"
#include "core/metric_space.hpp"
#include "core/random_instances.hpp"

using namespace ghcloud;

namespace {

MetricSpace::Matrix mat(std::initializer_list<std::initializer_list<int64_t>> rows) {
  MetricSpace::Matrix m;
  for (const auto& row : rows) {
    std::vector<Rational> out;
    for (int64_t v : row) out.push_back(Rational(v));
    m.push_back(std::move(out));
  }
  return m;
}

}  // namespace

TEST_CASE("validate accepts the smallest nontrivial metric") {
  MetricSpace x = MetricSpace::validated(mat({{0, 1}, {1, 0}}));
  CHECK(x.size() == 2);
  CHECK(x.dist(0, 1) == Rational(1));
}

TEST_CASE("validate reports the first violation with its witness") {
  auto issue = MetricSpace::check(mat({{0, 1}, {2, 0}}));
  REQUIRE(issue.has_value());
  CHECK(issue->kind == ErrorKind::Asymmetric);
  CHECK(issue->i == 0);
  CHECK(issue->j == 1);

  issue = MetricSpace::check(mat({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}));
  REQUIRE(issue.has_value());
  CHECK(issue->kind == ErrorKind::TriangleViolation);
  CHECK(issue->i == 0);
  CHECK(issue->j == 1);
  CHECK(issue->k == 2);

  issue = MetricSpace::check(mat({{0, 1}, {1, 0}, {1, 1}}));
  CHECK(issue->kind == ErrorKind::NotSquare);

  issue = MetricSpace::check(mat({{0, -1}, {-1, 0}}));
  CHECK(issue->kind == ErrorKind::NegativeEntry);

  issue = MetricSpace::check(mat({{1, 1}, {1, 0}}));
  CHECK(issue->kind == ErrorKind::NonzeroDiagonal);

  issue = MetricSpace::check(mat({{0, 0}, {0, 0}}));
  CHECK(issue->kind == ErrorKind::ZeroOffDiagonal);
  CHECK(issue->i == 0);
  CHECK(issue->j == 1);

  CHECK_THROWS_AS(MetricSpace::validated(mat({{0, 1}, {2, 0}})), Error);
}

TEST_CASE("diameter") {
  CHECK(MetricSpace::single_point().diameter() == Rational(0));
  MetricSpace two = MetricSpace::validated(mat({{0, 5}, {5, 0}}));
  CHECK(two.diameter() == Rational(5));
  std::vector<Rational> pts{Rational(1), Rational(4), Rational(9)};
  CHECK(MetricSpace::from_points(pts).diameter() == Rational(8));
}

TEST_CASE("scaling") {
  MetricSpace x = MetricSpace::validated(mat({{0, 2, 3}, {2, 0, 4}, {3, 4, 0}}));
  CHECK(x.scaled(Rational(1)).same_matrix(x));
  CHECK(x.scaled(Rational(3)).diameter() == Rational(3) * x.diameter());
  CHECK(x.scaled(Rational(2)).scaled(Rational(1, 2)).same_matrix(x));
  CHECK_THROWS_AS(x.scaled(Rational(0)), Error);
  CHECK_THROWS_AS(x.scaled(Rational(-1)), Error);

  // scale composition equals scaling by the product
  CHECK(x.scaled(Rational(2, 3)).scaled(Rational(5, 7))
            .same_matrix(x.scaled(Rational(10, 21))));
}

TEST_CASE("metric induced from the line") {
  std::vector<Rational> single{Rational(0)};
  CHECK(MetricSpace::from_points(single).size() == 1);

  std::vector<Rational> powers{Rational(3), Rational(9), Rational(27)};
  MetricSpace x = MetricSpace::from_points(powers);
  CHECK(x.dist(0, 1) == Rational(6));
  CHECK(x.dist(0, 2) == Rational(24));
  CHECK(x.dist(1, 2) == Rational(18));

  std::vector<Rational> unit{Rational(0), Rational(1)};
  CHECK(MetricSpace::from_points(unit).dist(0, 1) == Rational(1));

  std::vector<Rational> bad{Rational(1), Rational(1)};
  CHECK_THROWS_AS(MetricSpace::from_points(bad), Error);
}

TEST_CASE("from_points output always validates") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> xs;
    Rational cur(static_cast<int64_t>(rng() % 10));
    const int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) {
      xs.push_back(cur);
      cur += Rational(1 + static_cast<int64_t>(rng() % 20),
                      1 + static_cast<int64_t>(rng() % 5));
    }
    CHECK_FALSE(MetricSpace::check(MetricSpace::from_points(xs).matrix()).has_value());
  }
}

TEST_CASE("hausdorff distance on subsets of the line") {
  std::vector<Rational> pts{Rational(0), Rational(1), Rational(10)};
  MetricSpace ambient = MetricSpace::from_points(pts);
  std::vector<int> all{0, 1, 2};
  CHECK(hausdorff_distance(ambient, all, all) == Rational(0));
  std::vector<int> a{0}, b{1, 2};
  CHECK(hausdorff_distance(ambient, a, b) == Rational(10));
  std::vector<int> a2{0, 2}, b2{1, 2};
  CHECK(hausdorff_distance(ambient, a2, b2) == Rational(1));
  std::vector<int> empty;
  CHECK_THROWS_AS(hausdorff_distance(ambient, a, empty), Error);
  CHECK_THROWS_AS(SubsetPair(ambient, {0}, {}), Error);
}

TEST_CASE("hausdorff is a metric on subsets of a fixed ambient space") {
  InstanceRng rng(22);
  for (int t = 0; t < 40; ++t) {
    MetricSpace ambient = random_space(rng, rng.uniform(2, 6));
    auto a = rng.nonempty_subset(ambient.size());
    auto b = rng.nonempty_subset(ambient.size());
    auto c = rng.nonempty_subset(ambient.size());
    Rational ab = hausdorff_distance(ambient, a, b);
    CHECK(ab == hausdorff_distance(ambient, b, a));
    CHECK(ab.sign() >= 0);
    CHECK((ab.is_zero()) == (a == b));
    CHECK(hausdorff_distance(ambient, a, c) <= ab + hausdorff_distance(ambient, b, c));
  }
}

TEST_CASE("restriction checks its arguments") {
  MetricSpace x = MetricSpace::validated(mat({{0, 1}, {1, 0}}));
  std::vector<int> out_of_range{0, 2};
  CHECK_THROWS_AS(x.restriction(out_of_range), Error);
  std::vector<int> dup{0, 0};
  CHECK_THROWS_AS(x.restriction(dup), Error);
}
