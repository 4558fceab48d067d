#include "core/metric_space.hpp"

#include <algorithm>
#include <unordered_set>

namespace ghcloud {

namespace {

std::string idx2(std::string_view what, int i, int j) {
  return std::string(what) + " at (" + std::to_string(i) + ", " +
         std::to_string(j) + ")";
}

}  // namespace

std::optional<ValidationIssue> MetricSpace::check(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0)
    return ValidationIssue{ErrorKind::NotSquare, -1, -1, -1, "empty matrix"};
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[static_cast<size_t>(i)].size()) != n)
      return ValidationIssue{ErrorKind::NotSquare, i, -1, -1,
                             "row " + std::to_string(i) + " has " +
                                 std::to_string(m[static_cast<size_t>(i)].size()) +
                                 " entries, expected " + std::to_string(n)};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (i == j && !v.is_zero())
        return ValidationIssue{ErrorKind::NonzeroDiagonal, i, i, -1,
                               "diagonal entry " + std::to_string(i) + " is " +
                                   v.to_string()};
      if (v.sign() < 0)
        return ValidationIssue{ErrorKind::NegativeEntry, i, j, -1,
                               idx2("negative entry", i, j)};
      if (i != j && v.is_zero())
        return ValidationIssue{ErrorKind::ZeroOffDiagonal, i, j, -1,
                               idx2("zero distance between distinct points", i, j)};
      if (i < j && v != m[static_cast<size_t>(j)][static_cast<size_t>(i)])
        return ValidationIssue{ErrorKind::Asymmetric, i, j, -1,
                               idx2("asymmetric pair", i, j)};
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto& ik = m[static_cast<size_t>(i)][static_cast<size_t>(k)];
        const auto& ij = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
        const auto& jk = m[static_cast<size_t>(j)][static_cast<size_t>(k)];
        if (ik > ij + jk)
          return ValidationIssue{
              ErrorKind::TriangleViolation, i, j, k,
              "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
                  std::to_string(i) + "," + std::to_string(j) + ") + d(" +
                  std::to_string(j) + "," + std::to_string(k) + ")"};
      }
  return std::nullopt;
}

MetricSpace MetricSpace::validated(Matrix m) {
  if (auto issue = check(m)) throw issue->to_error();
  const int n = static_cast<int>(m.size());
  std::vector<Rational> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (auto& row : m)
    for (auto& v : row) flat.push_back(std::move(v));
  return MetricSpace(n, std::move(flat));
}

MetricSpace MetricSpace::from_points(std::span<const Rational> xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0)
    throw Error(ErrorKind::NotStrictlyIncreasing, "empty point list");
  for (int i = 0; i + 1 < n; ++i)
    if (!(xs[static_cast<size_t>(i)] < xs[static_cast<size_t>(i) + 1]))
      throw Error(ErrorKind::NotStrictlyIncreasing,
                  "points not strictly increasing at index " + std::to_string(i),
                  i, i + 1);
  std::vector<Rational> d(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d[static_cast<size_t>(i) * n + j] =
          (xs[static_cast<size_t>(std::max(i, j))] -
           xs[static_cast<size_t>(std::min(i, j))]);
  return MetricSpace(n, std::move(d));
}

MetricSpace MetricSpace::single_point() {
  return MetricSpace(1, {Rational(0)});
}

Rational MetricSpace::diameter() const {
  Rational best(0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) best = max(best, dist(i, j));
  return best;
}

Rational MetricSpace::eccentricity(int i) const {
  Rational best(0);
  for (int j = 0; j < n_; ++j) best = max(best, dist(i, j));
  return best;
}

MetricSpace MetricSpace::scaled(const Rational& lambda) const {
  if (lambda.sign() <= 0)
    throw Error(ErrorKind::NonPositiveLambda,
                "similarity coefficient must be positive, got " +
                    lambda.to_string());
  std::vector<Rational> d(d_.size());
  for (size_t i = 0; i < d_.size(); ++i) d[i] = d_[i] * lambda;
  return MetricSpace(n_, std::move(d));
}

MetricSpace MetricSpace::restriction(std::span<const int> points) const {
  if (points.empty()) throw Error(ErrorKind::EmptySet, "empty point set");
  std::unordered_set<int> seen;
  for (int p : points) {
    if (p < 0 || p >= n_)
      throw Error(ErrorKind::BadArgument,
                  "point label " + std::to_string(p) + " out of range", p);
    if (!seen.insert(p).second)
      throw Error(ErrorKind::BadArgument,
                  "duplicate point label " + std::to_string(p), p);
  }
  const int k = static_cast<int>(points.size());
  std::vector<Rational> d(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      d[static_cast<size_t>(i) * k + j] =
          dist(points[static_cast<size_t>(i)], points[static_cast<size_t>(j)]);
  return MetricSpace(k, std::move(d));
}

MetricSpace MetricSpace::permuted(std::span<const int> p) const {
  if (static_cast<int>(p.size()) != n_)
    throw Error(ErrorKind::SizeMismatch, "permutation size mismatch");
  return restriction(p);
}

bool MetricSpace::same_matrix(const MetricSpace& other) const {
  return n_ == other.n_ && d_ == other.d_;
}

MetricSpace::Matrix MetricSpace::matrix() const {
  Matrix m(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    m[static_cast<size_t>(i)].reserve(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) m[static_cast<size_t>(i)].push_back(dist(i, j));
  }
  return m;
}

SubsetPair::SubsetPair(const MetricSpace& space, std::vector<int> a_,
                       std::vector<int> b_)
    : ambient(space), a(std::move(a_)), b(std::move(b_)) {
  if (a.empty() || b.empty())
    throw Error(ErrorKind::EmptySet, "subset pair with empty side");
  for (int p : a)
    if (p < 0 || p >= ambient.size())
      throw Error(ErrorKind::BadArgument,
                  "subset label " + std::to_string(p) + " out of range", p);
  for (int p : b)
    if (p < 0 || p >= ambient.size())
      throw Error(ErrorKind::BadArgument,
                  "subset label " + std::to_string(p) + " out of range", p);
}

Rational hausdorff_distance(const MetricSpace& ambient, std::span<const int> a,
                            std::span<const int> b) {
  if (a.empty() || b.empty())
    throw Error(ErrorKind::EmptySet, "Hausdorff distance of an empty set");
  auto directed = [&](std::span<const int> from, std::span<const int> to) {
    Rational worst(0);
    for (int x : from) {
      Rational best = ambient.dist(x, to[0]);
      for (size_t t = 1; t < to.size(); ++t)
        best = min(best, ambient.dist(x, to[static_cast<size_t>(t)]));
      worst = max(worst, best);
    }
    return worst;
  };
  return max(directed(a, b), directed(b, a));
}

Rational hausdorff_distance(const SubsetPair& sp) {
  return hausdorff_distance(sp.ambient, sp.a, sp.b);
}

}  // namespace ghcloud
