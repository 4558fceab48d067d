#include "core/correspondence.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace ghcloud {

Correspondence::Correspondence(int n, int m,
                               std::vector<std::pair<int, int>> pairs)
    : n_(n), m_(m), pairs_(std::move(pairs)) {
  if (n_ <= 0 || m_ <= 0)
    throw Error(ErrorKind::BadArgument, "correspondence over empty point set");
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  std::vector<bool> left(static_cast<size_t>(n_), false);
  std::vector<bool> right(static_cast<size_t>(m_), false);
  for (auto [i, j] : pairs_) {
    if (i < 0 || i >= n_ || j < 0 || j >= m_)
      throw Error(ErrorKind::BadArgument,
                  "pair (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") out of range",
                  i, j);
    left[static_cast<size_t>(i)] = true;
    right[static_cast<size_t>(j)] = true;
  }
  for (int i = 0; i < n_; ++i)
    if (!left[static_cast<size_t>(i)])
      throw Error(ErrorKind::NotBiTotal,
                  "left point " + std::to_string(i) + " unmatched", i);
  for (int j = 0; j < m_; ++j)
    if (!right[static_cast<size_t>(j)])
      throw Error(ErrorKind::NotBiTotal,
                  "right point " + std::to_string(j) + " unmatched", -1, j);
}

Correspondence Correspondence::identity(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
  return Correspondence(n, n, std::move(pairs));
}

Correspondence Correspondence::full(int n, int m) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n) * static_cast<size_t>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) pairs.emplace_back(i, j);
  return Correspondence(n, m, std::move(pairs));
}

Rational distortion(const Correspondence& r, const MetricSpace& x,
                    const MetricSpace& y) {
  if (r.left_size() != x.size() || r.right_size() != y.size())
    throw Error(ErrorKind::SizeMismatch,
                "correspondence is over " + std::to_string(r.left_size()) +
                    "x" + std::to_string(r.right_size()) + ", spaces are " +
                    std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
  const auto& pairs = r.pairs();
  Rational worst(0);
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      Rational gap = (x.dist(pairs[a].first, pairs[b].first) -
                      y.dist(pairs[a].second, pairs[b].second))
                         .abs();
      worst = max(worst, gap);
    }
  return worst;
}

void enumerate_correspondences(
    int n, int m, const std::function<void(const Correspondence&)>& visit,
    int cell_cap) {
  if (n <= 0 || m <= 0)
    throw Error(ErrorKind::BadArgument, "correspondence over empty point set");
  const int cells = n * m;
  if (cells > cell_cap)
    throw Error(ErrorKind::TooLarge,
                "exhaustive enumeration over " + std::to_string(cells) +
                    " cells exceeds cap " + std::to_string(cell_cap));
  const uint32_t full = cells == 32 ? ~0u : (uint32_t{1} << cells) - 1;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    uint32_t rows = 0, cols = 0;
    for (int bit = 0; bit < cells; ++bit)
      if (mask & (uint32_t{1} << bit)) {
        rows |= uint32_t{1} << (bit / m);
        cols |= uint32_t{1} << (bit % m);
      }
    if (rows != (uint32_t{1} << n) - 1 || cols != (uint32_t{1} << m) - 1)
      continue;
    std::vector<std::pair<int, int>> pairs;
    for (int bit = 0; bit < cells; ++bit)
      if (mask & (uint32_t{1} << bit)) pairs.emplace_back(bit / m, bit % m);
    visit(Correspondence(n, m, std::move(pairs)));
  }
}

uint64_t count_correspondences(int n, int m, int cell_cap) {
  uint64_t count = 0;
  enumerate_correspondences(n, m, [&](const Correspondence&) { ++count; },
                            cell_cap);
  return count;
}

}  // namespace ghcloud
