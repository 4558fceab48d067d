#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "core/bigint.hpp"
#include "core/correspondence.hpp"
#include "core/metric_space.hpp"
#include "core/rational.hpp"
#include "core/sequence_space.hpp"

namespace ghcloud {

// Minimum of | (x_n - x_k) - (y_m - y_l) | over index quadruples, reported
// per window tail: row s covers all n > k >= s, m > l >= s with indices
// bounded by the window. A finite window yields an upper bound on the true
// tail infimum, which is why these curves are evidence, not proof.
struct DeltaCurveRow {
  int s;
  Rational min_abs_delta;
};

struct DeltaCurve {
  std::vector<DeltaCurveRow> rows;  // s = 2 .. window-1
  int window;
};

// base_x/base_y are the 1-indexed base points; rows start past the larger
// base, since for increasing sequences the far set at large radius is
// exactly an index tail beyond the base.
DeltaCurve delta_curve(const SequenceSpace& x, const SequenceSpace& y,
                       int window, int threads = 1, int base_x = 1,
                       int base_y = 1);

// Exhaustive scan of delta = p^m - p^l - 2 p^n + 2 p^k for m > l, n > k in
// [1, window]. For an odd prime p no quadruple vanishes, and the minimum
// |delta| at level s = min(l, k) is at least p^s.
struct DropReport {
  int64_t prime;
  int window;
  bool zero_found;
  std::vector<std::pair<int, BigInt>> min_delta_by_s;  // (s, min |delta|)
};

DropReport drop_witness(int64_t p, int window, int threads = 1);

// One exact solution of lambda = (q^phi(n) - q^phi(k)) / (q^phi(m) - q^phi(l)).
struct Representation {
  int n, k, m, l;
  bool operator==(const Representation&) const = default;
};

// All exact solutions with n > k > floor and m > l > floor, indices up to
// the window, in lexicographic (n, k, m, l) order. Emptiness is evidence
// (within the window) that lambda is not attained, never a proof.
std::vector<Representation> representation_search(const Rational& lambda,
                                                  const SequenceSpace& x,
                                                  int window, int floor);

// Float exploration mode for irrational parameters; matches the ratio up to
// |ratio - lambda| <= tol. Excluded from exact guarantees.
std::vector<Representation> representation_search_float(double lambda,
                                                        double q,
                                                        const Phi& phi,
                                                        int window, int floor,
                                                        double tol = 1e-9);

// Range scan of the attainable difference ratios for gap-growing exponent
// functions, split by the relative position of the two larger indices. As
// the tail start s grows, the n = m case pinches toward 1, n < m toward 0,
// and n > m grows without bound; no ratio equal to lambda != 1 appears.
struct EnvelopeRow {
  int s;
  Rational lo, hi;
};

struct RatioCaseReport {
  std::vector<EnvelopeRow> envelope;  // per tail start s = 1 .. window-1
  bool exact_lambda_in_tail = false;
};

struct RatioTailReport {
  RatioCaseReport case_n_eq_m;
  RatioCaseReport case_n_lt_m;
  RatioCaseReport case_n_gt_m;
  int window;
  int tail_floor;
  bool any_exact_lambda = false;
};

RatioTailReport ratio_tail_scan(const Phi& phi, const Rational& q,
                               const Rational& lambda, int window,
                               int tail_floor = -1);

// First pair of R whose members are both at distance >= radius from the
// base points, in pair order; nullopt when no such pair exists.
std::optional<std::pair<int, int>> far_pair(const Correspondence& r,
                                            const MetricSpace& x,
                                            const MetricSpace& y, int x0,
                                            int y0, const Rational& radius);

}  // namespace ghcloud
