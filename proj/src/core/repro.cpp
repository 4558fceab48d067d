#include "core/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

#include "core/cloud_analysis.hpp"
#include "core/error.hpp"
#include "core/gh_solver.hpp"
#include "core/metric_space.hpp"
#include "core/random_instances.hpp"
#include "core/stabilizer.hpp"
#include "core/thread_limit.hpp"

namespace ghcloud {

namespace {

using Check = std::function<std::string()>;  // returns "" on pass

// Each scenario returns an empty string on success or a description of the
// first failure. Exceptions count as failures with the message as detail.
CriterionResult run_one(int id, const std::string& name, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    detail = check();
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  const double seconds =
      std::chrono::duration_cast<std::chrono::duration<double>>(stop - start).count();
  return CriterionResult{id, name, pass, detail, seconds};
}

MetricSpace scale_or_point(const MetricSpace& x, const Rational& lambda) {
  return lambda.is_zero() ? MetricSpace::single_point() : x.scaled(lambda);
}

// GHC_MAX_NODES caps the solver node budget for these scenarios too.
GhOptions solver_options() {
  GhOptions opts;
  if (const char* env = std::getenv("GHC_MAX_NODES")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) opts.max_nodes = v;
  }
  return opts;
}

std::string check_one_point_identity(uint64_t seed) {
  InstanceRng rng(seed);
  const MetricSpace point = MetricSpace::single_point();
  for (int t = 0; t < 50; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 6));
    GhResult got = gh_exact(point, x, solver_options());
    Rational want = x.diameter() * Rational(1, 2);
    if (got.value != want)
      return "instance " + std::to_string(t) + ": got " + got.value.to_string() +
             ", want " + want.to_string();
  }
  return "";
}

std::string check_scaling_homogeneity(uint64_t seed) {
  InstanceRng rng(seed);
  const Rational lambdas[4] = {Rational(1, 3), Rational(1, 2), Rational(2),
                               Rational(7, 5)};
  for (int t = 0; t < 30; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 4));
    MetricSpace y = random_space(rng, rng.uniform(1, 4));
    Rational base = gh_exact(x, y, solver_options()).value;
    for (const Rational& lambda : lambdas) {
      Rational scaled =
          gh_exact(x.scaled(lambda), y.scaled(lambda), solver_options()).value;
      if (scaled != lambda * base)
        return "instance " + std::to_string(t) + " at lambda " +
               lambda.to_string() + ": got " + scaled.to_string() + ", want " +
               (lambda * base).to_string();
    }
  }
  return "";
}

std::string check_segment_identity(uint64_t seed) {
  InstanceRng rng(seed);
  const Rational grid[4] = {Rational(0), Rational(1, 2), Rational(1), Rational(3)};
  for (int t = 0; t < 20; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 4));
    Rational diam = x.diameter();
    for (const Rational& lambda : grid)
      for (const Rational& mu : grid) {
        Rational got = gh_exact(scale_or_point(x, lambda),
                                scale_or_point(x, mu), solver_options())
                           .value;
        Rational want = (lambda - mu).abs() * diam * Rational(1, 2);
        if (got != want)
          return "instance " + std::to_string(t) + " at (" + lambda.to_string() +
                 ", " + mu.to_string() + "): got " + got.to_string() + ", want " +
                 want.to_string();
      }
  }
  return "";
}

std::string check_solver_oracle_equivalence(uint64_t seed) {
  InstanceRng rng(seed);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, std::min(12 / n, 6));
    MetricSpace x = random_space(rng, n);
    MetricSpace y = random_space(rng, m);
    GhResult fast = gh_exact(x, y, solver_options());
    GhResult oracle = gh_exhaustive(x, y);
    if (fast.value != oracle.value)
      return "instance " + std::to_string(t) + " (" + std::to_string(n) + "x" +
             std::to_string(m) + "): solver " + fast.value.to_string() +
             ", enumeration " + oracle.value.to_string();
    if (!(fast.witness == oracle.witness))
      return "instance " + std::to_string(t) + ": witnesses differ";
  }
  return "";
}

std::string check_pseudometric_properties(uint64_t seed) {
  InstanceRng rng(seed);
  for (int t = 0; t < 50; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(1, 4));
    MetricSpace y = random_space(rng, rng.uniform(1, 4));
    MetricSpace z = random_space(rng, rng.uniform(1, 4));
    Rational xy = gh_exact(x, y, solver_options()).value;
    Rational yx = gh_exact(y, x, solver_options()).value;
    if (xy != yx)
      return "symmetry broke at instance " + std::to_string(t);
    Rational xz = gh_exact(x, z, solver_options()).value;
    Rational yz = gh_exact(y, z, solver_options()).value;
    if (xz > xy + yz)
      return "triangle broke at instance " + std::to_string(t);
  }
  for (int t = 0; t < 20; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(2, 4));
    MetricSpace y = x.permuted(rng.permutation(x.size()));
    Rational d = gh_exact(x, y, solver_options()).value;
    if (!d.is_zero())
      return "permuted copy at distance " + d.to_string() + " at instance " +
             std::to_string(t);
  }
  return "";
}

std::string check_hausdorff_dominates(uint64_t seed) {
  InstanceRng rng(seed);
  for (int t = 0; t < 50; ++t) {
    MetricSpace ambient = random_space(rng, rng.uniform(2, 7));
    std::vector<int> a = rng.nonempty_subset(ambient.size());
    std::vector<int> b = rng.nonempty_subset(ambient.size());
    Rational haus = hausdorff_distance(ambient, a, b);
    Rational gh = gh_exact(ambient.restriction(a), ambient.restriction(b),
                           solver_options())
                      .value;
    if (gh > haus)
      return "instance " + std::to_string(t) + ": gh " + gh.to_string() +
             " above Hausdorff " + haus.to_string();
  }
  return "";
}

std::string check_gcd_power_grid(uint64_t) {
  for (int64_t q = 2; q <= 10; ++q)
    for (uint64_t n = 1; n <= 30; ++n)
      for (uint64_t m = 1; m <= 30; ++m) {
        BigInt got = gcd_qpow(q, n, m);  // cross-checks internally
        BigInt want = BigInt::pow(BigInt(q), std::gcd(n, m)) - BigInt(1);
        if (got != want)
          return "mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                 " m=" + std::to_string(m);
      }
  return "";
}

std::string check_eq3_grid(uint64_t) {
  for (int64_t q = 2; q <= 7; ++q)
    for (uint64_t n = 1; n <= 20; ++n)
      for (uint64_t m = 1; m <= 20; ++m) {
        auto [a1, a2] = solve_eq3(q, n, m);
        BigInt lhs = a1 * (BigInt::pow(BigInt(q), n) - BigInt(1));
        BigInt rhs = a2 * (BigInt::pow(BigInt(q), m) - BigInt(1));
        if (lhs != rhs)
          return "equation fails at q=" + std::to_string(q) + " n=" +
                 std::to_string(n) + " m=" + std::to_string(m);
        if (BigInt::gcd(a1, a2) != BigInt(1))
          return "solution not coprime at q=" + std::to_string(q) + " n=" +
                 std::to_string(n) + " m=" + std::to_string(m);
      }
  auto [a1, a2] = solve_eq3(2, 4, 6);
  if (a1 != BigInt(21) || a2 != BigInt(5))
    return "spot value (2,4,6) gave (" + a1.to_string() + ", " + a2.to_string() + ")";
  return "";
}

std::string check_stabilizer_decision(uint64_t) {
  for (int64_t q : {2, 3, 5}) {
    // reference member set: exact powers of q with entries up to 200
    std::set<std::pair<int64_t, int64_t>> members;  // (num, den) reduced
    std::vector<std::pair<Rational, int64_t>> powers;
    for (int64_t v = 1, a = 0; v <= 200; v *= q, ++a) {
      members.insert({v, 1});
      powers.push_back({Rational(v), a});
      if (v > 1) {
        members.insert({1, v});
        powers.push_back({Rational(1, v), -a});
      }
    }
    for (int64_t a = 1; a <= 200; ++a)
      for (int64_t b = 1; b <= 200; ++b) {
        if (std::gcd(a, b) != 1) continue;
        auto got = stabilizer_member(Rational(a, b), q);
        const bool want = members.count({a, b}) != 0;
        if (got.has_value() != want)
          return "q=" + std::to_string(q) + " lambda=" + std::to_string(a) + "/" +
                 std::to_string(b) + ": member=" + (got ? "yes" : "no");
      }
    for (const auto& [lam, alpha] : powers) {
      auto inv = stabilizer_member(lam.reciprocal(), q);
      if (!inv || *inv != -alpha)
        return "inverse closure fails at q=" + std::to_string(q) + " alpha=" +
               std::to_string(alpha);
      for (const auto& [mu, beta] : powers) {
        auto prod = stabilizer_member(lam * mu, q);
        if (!prod || *prod != alpha + beta)
          return "product closure fails at q=" + std::to_string(q) + " (" +
                 std::to_string(alpha) + ", " + std::to_string(beta) + ")";
      }
    }
  }
  return "";
}

std::string check_drop_scan(uint64_t) {
  for (int64_t p : {3, 5, 7}) {
    DropReport report = drop_witness(p, 20);
    if (report.zero_found)
      return "vanishing delta at p=" + std::to_string(p);
    for (const auto& [s, min_delta] : report.min_delta_by_s) {
      if (s > 17) continue;
      if (min_delta < BigInt::pow(BigInt(p), static_cast<uint64_t>(s)))
        return "p=" + std::to_string(p) + " level " + std::to_string(s) +
               ": min " + min_delta.to_string() + " below p^s";
    }
  }
  return "";
}

std::string check_return_jump(uint64_t) {
  for (int64_t p : {3, 5}) {
    auto reps = representation_search(Rational(p), SequenceSpace::prime_power(p),
                                      10, 0);
    if (reps.empty())
      return "no representation of lambda=" + std::to_string(p) + " in window 10";
  }
  return "";
}

std::string check_square_gap_representations(uint64_t) {
  const Rational offenders[3] = {Rational(3), Rational(1, 3), Rational(5, 2)};
  for (int64_t q : {2, 3}) {
    SequenceSpace seq = SequenceSpace::geometric(Rational(q), Phi::square());
    for (const Rational& lambda : offenders) {
      auto reps = representation_search(lambda, seq, 14, 3);
      if (!reps.empty())
        return "q=" + std::to_string(q) + " lambda=" + lambda.to_string() +
               ": unexpected representation (" + std::to_string(reps[0].n) + "," +
               std::to_string(reps[0].k) + "," + std::to_string(reps[0].m) + "," +
               std::to_string(reps[0].l) + ")";
    }
    auto diag = representation_search(Rational(1), seq, 14, 3);
    std::vector<Representation> want;
    for (int n = 5; n <= 14; ++n)
      for (int k = 4; k < n; ++k) want.push_back({n, k, n, k});
    if (diag != want)
      return "q=" + std::to_string(q) + ": lambda=1 solutions are not exactly "
             "the diagonal family";
  }
  return "";
}

std::string check_thread_chains(uint64_t seed) {
  InstanceRng rng(seed);
  for (int t = 0; t < 20; ++t) {
    ThreadSystem ts = random_chain(rng, 6, 4);
    LimitResult limit = limit_space(ts);
    auto reports = verify_projection_bound(ts, limit);  // throws on violation
    for (const auto& r : reports)
      if (!r.ok) return "level report not ok at instance " + std::to_string(t);
    for (int n = 1; n <= ts.depth(); ++n) {
      Rational d = gh_exact(ts.spaces()[static_cast<size_t>(n) - 1], limit.space,
                            solver_options())
                       .value;
      if (d > Rational::pow(Rational(1, 2), n))
        return "instance " + std::to_string(t) + " level " + std::to_string(n) +
               ": gh " + d.to_string() + " above 1/2^n";
    }
  }
  return "";
}

std::string check_bounded_contraction(uint64_t seed) {
  InstanceRng rng(seed);
  const MetricSpace point = MetricSpace::single_point();
  const Rational half(1, 2);
  for (int t = 0; t < 10; ++t) {
    MetricSpace x = random_space(rng, rng.uniform(2, 4));
    Rational diam = x.diameter();
    Rational previous;
    for (int k = 0; k <= 10; ++k) {
      Rational factor = Rational::pow(half, k);
      Rational got = gh_exact(x.scaled(factor), point, solver_options()).value;
      Rational want = factor * diam * half;
      if (got != want)
        return "instance " + std::to_string(t) + " k=" + std::to_string(k) +
               ": got " + got.to_string() + ", want " + want.to_string();
      if (k > 0 && !(got < previous))
        return "instance " + std::to_string(t) + " k=" + std::to_string(k) +
               ": sequence not strictly decreasing";
      previous = std::move(got);
    }
  }
  return "";
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(uint64_t seed) {
  std::vector<CriterionResult> results;
  const struct {
    const char* name;
    std::string (*fn)(uint64_t);
  } scenarios[] = {
      {"point_vs_space_is_half_diameter", check_one_point_identity},
      {"scaling_homogeneity", check_scaling_homogeneity},
      {"segment_identity_grid", check_segment_identity},
      {"solver_matches_exhaustive_enumeration", check_solver_oracle_equivalence},
      {"symmetry_triangle_isometry", check_pseudometric_properties},
      {"hausdorff_dominates_gh", check_hausdorff_dominates},
      {"gcd_of_power_minus_one_grid", check_gcd_power_grid},
      {"coprime_power_equation_solutions", check_eq3_grid},
      {"power_membership_decision", check_stabilizer_decision},
      {"odd_prime_drop_scan", check_drop_scan},
      {"prime_coefficient_representation_exists", check_return_jump},
      {"square_exponent_gaps_admit_only_identity", check_square_gap_representations},
      {"chain_limit_projection_bounds", check_thread_chains},
      {"bounded_contraction_sequence", check_bounded_contraction},
  };
  int id = 1;
  for (const auto& scenario : scenarios) {
    results.push_back(run_one(id, scenario.name,
                              [&] { return scenario.fn(seed + static_cast<uint64_t>(id)); }));
    ++id;
  }
  return results;
}

nlohmann::json acceptance_report_json(const std::vector<CriterionResult>& results) {
  nlohmann::json rows = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    nlohmann::json row{{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"seconds", r.seconds}};
    if (!r.detail.empty()) row["detail"] = r.detail;
    rows.push_back(std::move(row));
    all = all && r.pass;
  }
  return nlohmann::json{{"criteria", std::move(rows)}, {"all_pass", all}};
}

}  // namespace ghcloud
