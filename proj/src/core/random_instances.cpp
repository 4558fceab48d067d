#include "core/random_instances.hpp"

#include <algorithm>

#include "core/correspondence.hpp"
#include "core/error.hpp"

namespace ghcloud {

int InstanceRng::uniform(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rational InstanceRng::rational_in(int lo, int hi, int max_den) {
  const int den = uniform(1, max_den);
  const int num = uniform(lo * den, hi * den);
  return Rational(num, den);
}

std::vector<int> InstanceRng::permutation(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(uniform(0, i))]);
  return p;
}

std::vector<int> InstanceRng::nonempty_subset(int n) {
  std::vector<int> out;
  while (out.empty()) {
    out.clear();
    for (int i = 0; i < n; ++i)
      if (next() & 1) out.push_back(i);
  }
  return out;
}

namespace {

void shortest_path_closure(MetricSpace::Matrix& m) {
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rational via = m[i][k] + m[k][j];
        if (via < m[i][j]) m[i][j] = std::move(via);
      }
}

}  // namespace

MetricSpace random_space(InstanceRng& rng, int points) {
  MetricSpace::Matrix m(static_cast<size_t>(points),
                        std::vector<Rational>(static_cast<size_t>(points), Rational(0)));
  for (int i = 0; i < points; ++i)
    for (int j = i + 1; j < points; ++j) {
      Rational w = rng.rational_in(1, 4);
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = w;
      m[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::move(w);
    }
  shortest_path_closure(m);
  return MetricSpace::validated(std::move(m));
}

MetricSpace perturbed_space(const MetricSpace& base, InstanceRng& rng,
                            const Rational& eps) {
  MetricSpace::Matrix m = base.matrix();
  const size_t n = m.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      // delta in (0, eps/2]: closure keeps entries within [d, d + eps/2]
      Rational delta = eps * Rational(rng.uniform(1, 8), 16);
      m[i][j] += delta;
      m[j][i] = m[i][j];
    }
  shortest_path_closure(m);
  return MetricSpace::validated(std::move(m));
}

ThreadSystem random_chain(InstanceRng& rng, int depth, int max_points) {
  const int points = rng.uniform(2, max_points);
  std::vector<MetricSpace> spaces;
  spaces.reserve(static_cast<size_t>(depth));
  spaces.push_back(random_space(rng, points));
  std::vector<Correspondence> links;
  for (int n = 1; n < depth; ++n) {
    Rational budget = Rational::pow(Rational(1, 2), n);
    spaces.push_back(perturbed_space(spaces.back(), rng, budget));
    links.push_back(Correspondence::identity(points));
  }
  return ThreadSystem::with_default_budgets(std::move(spaces), std::move(links));
}

}  // namespace ghcloud
