#include "core/cloud_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <thread>

#include "core/error.hpp"

namespace ghcloud {

namespace {

struct IndexPair {
  int hi, lo;  // hi > lo
};

std::vector<IndexPair> pairs_from(int first, int window) {
  std::vector<IndexPair> out;
  for (int hi = first + 1; hi <= window; ++hi)
    for (int lo = first; lo < hi; ++lo) out.push_back({hi, lo});
  return out;
}

// Runs fn(block) over [0, blocks) on up to `threads` workers. Workers own
// disjoint block sets, so no synchronization is needed beyond join.
void parallel_blocks(int blocks, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, blocks));
  if (threads == 1) {
    for (int b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int b = t; b < blocks; b += threads) fn(b);
    });
  for (auto& th : pool) th.join();
}

void require_geometric(const SequenceSpace& x) {
  if (x.kind() == SequenceSpace::Kind::Explicit)
    throw Error(ErrorKind::BadArgument,
                "operation requires a geometric sequence space");
}

}  // namespace

DeltaCurve delta_curve(const SequenceSpace& x, const SequenceSpace& y,
                       int window, int threads, int base_x, int base_y) {
  if (window < 4)
    throw Error(ErrorKind::WindowTooSmall,
                "window must be at least 4, got " + std::to_string(window));
  if (base_x < 1 || base_y < 1)
    throw Error(ErrorKind::BadArgument, "base indices must be >= 1");
  const int first = std::max(base_x, base_y) + 1;
  if (first + 1 >= window)
    throw Error(ErrorKind::WindowTooSmall,
                "window leaves no room past the base points");
  if (x.max_index() < window || y.max_index() < window)
    throw Error(ErrorKind::BadWindow, "sequence shorter than the window");

  const auto xs = x.elements(window);
  const auto ys = y.elements(window);
  const auto xp = pairs_from(first, window);
  const auto yp = pairs_from(first, window);

  // exact-level minima: level[t] = min |dx - dy| over quadruples whose
  // smallest index is exactly t
  std::vector<std::optional<Rational>> level(static_cast<size_t>(window), std::nullopt);
  std::vector<std::vector<std::optional<Rational>>> local(
      static_cast<size_t>(std::max(1, threads)),
      std::vector<std::optional<Rational>>(static_cast<size_t>(window), std::nullopt));

  const int workers = std::max(1, threads);
  parallel_blocks(static_cast<int>(xp.size()), workers, [&](int block) {
    auto& mine = local[static_cast<size_t>(block % workers)];
    const auto& px = xp[static_cast<size_t>(block)];
    const Rational dx = xs[static_cast<size_t>(px.hi) - 1] -
                        xs[static_cast<size_t>(px.lo) - 1];
    for (const auto& py : yp) {
      const Rational dy = ys[static_cast<size_t>(py.hi) - 1] -
                          ys[static_cast<size_t>(py.lo) - 1];
      Rational delta = (dx - dy).abs();
      const int t = std::min(px.lo, py.lo);
      auto& slot = mine[static_cast<size_t>(t)];
      if (!slot || delta < *slot) slot = std::move(delta);
    }
  });
  for (const auto& mine : local)
    for (int t = 0; t < window; ++t)
      if (mine[static_cast<size_t>(t)]) {
        auto& slot = level[static_cast<size_t>(t)];
        if (!slot || *mine[static_cast<size_t>(t)] < *slot)
          slot = mine[static_cast<size_t>(t)];
      }

  DeltaCurve curve;
  curve.window = window;
  curve.rows.resize(static_cast<size_t>(window - first));
  std::optional<Rational> running;
  for (int s = window - 1; s >= first; --s) {
    const auto& slot = level[static_cast<size_t>(s)];
    if (slot && (!running || *slot < *running)) running = slot;
    curve.rows[static_cast<size_t>(s - first)] = DeltaCurveRow{s, *running};
  }
  return curve;
}

DropReport drop_witness(int64_t p, int window, int threads) {
  if (p <= 2 || !is_prime(p))
    throw Error(ErrorKind::NotOddPrime,
                "expected an odd prime, got " + std::to_string(p));
  if (window < 2)
    throw Error(ErrorKind::WindowTooSmall,
                "window must be at least 2, got " + std::to_string(window));

  std::vector<BigInt> pow(static_cast<size_t>(window) + 1);
  pow[0] = BigInt(1);
  for (int i = 1; i <= window; ++i) pow[static_cast<size_t>(i)] = pow[static_cast<size_t>(i) - 1] * BigInt(p);

  const auto mp = pairs_from(1, window);  // (m, l) and (n, k) share this list
  const int workers = std::max(1, threads);
  std::vector<std::vector<std::optional<BigInt>>> local(
      static_cast<size_t>(workers),
      std::vector<std::optional<BigInt>>(static_cast<size_t>(window), std::nullopt));
  std::vector<char> zero(static_cast<size_t>(workers), 0);

  parallel_blocks(static_cast<int>(mp.size()), workers, [&](int block) {
    auto& mine = local[static_cast<size_t>(block % workers)];
    const auto& a = mp[static_cast<size_t>(block)];
    const BigInt dx = pow[static_cast<size_t>(a.hi)] - pow[static_cast<size_t>(a.lo)];
    for (const auto& b : mp) {
      BigInt delta = dx - BigInt(2) * (pow[static_cast<size_t>(b.hi)] -
                                       pow[static_cast<size_t>(b.lo)]);
      if (delta.is_zero()) {
        zero[static_cast<size_t>(block % workers)] = 1;
        continue;
      }
      BigInt mag = delta.abs();
      const int s = std::min(a.lo, b.lo);
      auto& slot = mine[static_cast<size_t>(s)];
      if (!slot || mag < *slot) slot = std::move(mag);
    }
  });

  DropReport report;
  report.prime = p;
  report.window = window;
  report.zero_found = std::any_of(zero.begin(), zero.end(), [](char c) { return c != 0; });
  std::vector<std::optional<BigInt>> level(static_cast<size_t>(window), std::nullopt);
  for (const auto& mine : local)
    for (int s = 0; s < window; ++s)
      if (mine[static_cast<size_t>(s)]) {
        auto& slot = level[static_cast<size_t>(s)];
        if (!slot || *mine[static_cast<size_t>(s)] < *slot)
          slot = mine[static_cast<size_t>(s)];
      }
  for (int s = 1; s < window; ++s)
    if (level[static_cast<size_t>(s)])
      report.min_delta_by_s.emplace_back(s, *level[static_cast<size_t>(s)]);
  return report;
}

std::vector<Representation> representation_search(const Rational& lambda,
                                                  const SequenceSpace& x,
                                                  int window, int floor) {
  require_geometric(x);
  if (lambda.sign() <= 0)
    throw Error(ErrorKind::BadArgument, "lambda must be positive");
  if (floor < 0 || window < floor + 2)
    throw Error(ErrorKind::BadWindow,
                "need window >= floor + 2, got window " +
                    std::to_string(window) + ", floor " + std::to_string(floor));
  if (x.max_index() < window)
    throw Error(ErrorKind::BadWindow, "sequence shorter than the window");

  // coefficient cancels in the ratio; use raw powers of q
  std::vector<Rational> pw(static_cast<size_t>(window) + 1);
  for (int i = floor + 1; i <= window; ++i)
    pw[static_cast<size_t>(i)] = Rational::pow(x.q(), x.phi()(i));

  std::vector<Representation> out;
  for (int n = floor + 2; n <= window; ++n)
    for (int k = floor + 1; k < n; ++k) {
      const Rational dx = pw[static_cast<size_t>(n)] - pw[static_cast<size_t>(k)];
      for (int m = floor + 2; m <= window; ++m)
        for (int l = floor + 1; l < m; ++l) {
          const Rational dy = pw[static_cast<size_t>(m)] - pw[static_cast<size_t>(l)];
          if (lambda * dy == dx) out.push_back({n, k, m, l});
        }
    }
  return out;
}

std::vector<Representation> representation_search_float(double lambda, double q,
                                                        const Phi& phi,
                                                        int window, int floor,
                                                        double tol) {
  if (!(q > 1.0) || !(lambda > 0.0))
    throw Error(ErrorKind::BadArgument, "need q > 1 and lambda > 0");
  if (floor < 0 || window < floor + 2)
    throw Error(ErrorKind::BadWindow,
                "need window >= floor + 2, got window " +
                    std::to_string(window) + ", floor " + std::to_string(floor));
  std::vector<double> pw(static_cast<size_t>(window) + 1, 0.0);
  for (int i = floor + 1; i <= window; ++i)
    pw[static_cast<size_t>(i)] = std::pow(q, static_cast<double>(phi(i)));
  std::vector<Representation> out;
  for (int n = floor + 2; n <= window; ++n)
    for (int k = floor + 1; k < n; ++k) {
      const double dx = pw[static_cast<size_t>(n)] - pw[static_cast<size_t>(k)];
      for (int m = floor + 2; m <= window; ++m)
        for (int l = floor + 1; l < m; ++l) {
          const double dy = pw[static_cast<size_t>(m)] - pw[static_cast<size_t>(l)];
          if (std::abs(dx / dy - lambda) <= tol) out.push_back({n, k, m, l});
        }
    }
  return out;
}

RatioTailReport ratio_tail_scan(const Phi& phi, const Rational& q,
                               const Rational& lambda, int window,
                               int tail_floor) {
  if (!(q > Rational(1)))
    throw Error(ErrorKind::BadArgument, "need q > 1");
  if (window < 4)
    throw Error(ErrorKind::WindowTooSmall,
                "window must be at least 4, got " + std::to_string(window));
  if (phi.max_index() < window)
    throw Error(ErrorKind::BadWindow, "exponent list shorter than the window");
  if (!phi.gaps_strictly_increasing(window))
    throw Error(ErrorKind::GapsNotGrowing,
                "phi(n+1) - phi(n) must be strictly increasing over the window");
  if (tail_floor < 0) tail_floor = window / 2;

  std::vector<Rational> pw(static_cast<size_t>(window) + 1);
  for (int i = 1; i <= window; ++i)
    pw[static_cast<size_t>(i)] = Rational::pow(q, phi(i));

  struct LevelEnvelope {
    std::optional<Rational> lo, hi;
    void feed(const Rational& v) {
      if (!lo || v < *lo) lo = v;
      if (!hi || *hi < v) hi = v;
    }
  };
  const auto idx = pairs_from(1, window);
  std::array<std::vector<LevelEnvelope>, 3> levels;
  for (auto& l : levels) l.resize(static_cast<size_t>(window));
  std::array<bool, 3> exact{false, false, false};

  for (const auto& a : idx) {
    const Rational dx = pw[static_cast<size_t>(a.hi)] - pw[static_cast<size_t>(a.lo)];
    for (const auto& b : idx) {
      const Rational dy = pw[static_cast<size_t>(b.hi)] - pw[static_cast<size_t>(b.lo)];
      Rational ratio = dx / dy;
      const int c = a.hi == b.hi ? 0 : (a.hi < b.hi ? 1 : 2);
      const int s = std::min(a.lo, b.lo);
      levels[static_cast<size_t>(c)][static_cast<size_t>(s)].feed(ratio);
      if (s > tail_floor && ratio == lambda) exact[static_cast<size_t>(c)] = true;
    }
  }

  RatioTailReport report;
  report.window = window;
  report.tail_floor = tail_floor;
  RatioCaseReport* cases[3] = {&report.case_n_eq_m, &report.case_n_lt_m,
                               &report.case_n_gt_m};
  for (int c = 0; c < 3; ++c) {
    cases[c]->exact_lambda_in_tail = exact[static_cast<size_t>(c)];
    std::optional<Rational> lo, hi;
    std::vector<EnvelopeRow> reversed;
    for (int s = window - 1; s >= 1; --s) {
      const auto& lev = levels[static_cast<size_t>(c)][static_cast<size_t>(s)];
      if (lev.lo && (!lo || *lev.lo < *lo)) lo = lev.lo;
      if (lev.hi && (!hi || *hi < *lev.hi)) hi = lev.hi;
      if (lo) reversed.push_back(EnvelopeRow{s, *lo, *hi});
    }
    cases[c]->envelope.assign(reversed.rbegin(), reversed.rend());
  }
  report.any_exact_lambda = exact[0] || exact[1] || exact[2];
  return report;
}

std::optional<std::pair<int, int>> far_pair(const Correspondence& r,
                                            const MetricSpace& x,
                                            const MetricSpace& y, int x0,
                                            int y0, const Rational& radius) {
  if (r.left_size() != x.size() || r.right_size() != y.size())
    throw Error(ErrorKind::SizeMismatch,
                "correspondence does not match the given spaces");
  if (x0 < 0 || x0 >= x.size() || y0 < 0 || y0 >= y.size())
    throw Error(ErrorKind::BadArgument, "base point out of range");
  for (auto [i, j] : r.pairs())
    if (!(x.dist(x0, i) < radius) && !(y.dist(y0, j) < radius))
      return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace ghcloud
