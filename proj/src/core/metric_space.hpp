#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace ghcloud {

// First metric-axiom violation found in a candidate matrix, scanning
// entries and then triples in lexicographic index order.
struct ValidationIssue {
  ErrorKind kind;
  int i = -1;
  int j = -1;
  int k = -1;
  std::string message;

  Error to_error() const { return Error(kind, message, i, j, k); }
};

// Finite metric space: points are labels 0..n-1, distances are exact
// rationals. Instances are immutable and always satisfy the metric axioms.
class MetricSpace {
 public:
  using Matrix = std::vector<std::vector<Rational>>;

  // Returns the first violated axiom, or nullopt if the matrix is a metric.
  static std::optional<ValidationIssue> check(const Matrix& m);

  // Validating constructor; throws Error carrying the ValidationIssue.
  static MetricSpace validated(Matrix m);

  // Metric induced from the real line; xs must be strictly increasing.
  static MetricSpace from_points(std::span<const Rational> xs);

  static MetricSpace single_point();

  int size() const { return n_; }
  const Rational& dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }

  Rational diameter() const;
  Rational eccentricity(int i) const;  // max distance from point i

  // All distances multiplied by lambda > 0; throws NonPositiveLambda.
  MetricSpace scaled(const Rational& lambda) const;

  // Subspace on the given point labels (order preserved); labels must be
  // distinct and in range.
  MetricSpace restriction(std::span<const int> points) const;

  // Matrix permuted by p (point i of the result is point p[i] of *this).
  MetricSpace permuted(std::span<const int> p) const;

  bool same_matrix(const MetricSpace& other) const;

  Matrix matrix() const;

 private:
  MetricSpace(int n, std::vector<Rational> d) : n_(n), d_(std::move(d)) {}

  int n_ = 0;
  std::vector<Rational> d_;  // row-major n x n
};

// Two non-empty subsets of a common ambient space.
struct SubsetPair {
  const MetricSpace& ambient;
  std::vector<int> a;
  std::vector<int> b;

  SubsetPair(const MetricSpace& space, std::vector<int> a_, std::vector<int> b_);
};

// max( max_{a in A} min_{b in B} d(a,b), max_{b in B} min_{a in A} d(a,b) )
Rational hausdorff_distance(const SubsetPair& sp);
Rational hausdorff_distance(const MetricSpace& ambient, std::span<const int> a,
                            std::span<const int> b);

}  // namespace ghcloud
