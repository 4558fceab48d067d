#include "ghcloud/ghcloud.h"

#include <cstring>
#include <new>
#include <string>

#include "core/cloud_analysis.hpp"
#include "core/error.hpp"
#include "core/gh_solver.hpp"
#include "core/json_io.hpp"
#include "core/metric_space.hpp"
#include "core/repro.hpp"
#include "core/sequence_space.hpp"
#include "core/stabilizer.hpp"
#include "core/thread_limit.hpp"

using namespace ghcloud;

struct ghc_space {
  MetricSpace space;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ghc_status fail(const Error& err) {
  g_last_error = dump_canonical(error_to_json(err));
  switch (err.category()) {
    case ErrorCategory::Usage:
      return GHC_ERROR_USAGE;
    case ErrorCategory::Limit:
      return GHC_ERROR_LIMIT;
    case ErrorCategory::Domain:
      return GHC_ERROR_DOMAIN;
  }
  return GHC_ERROR_DOMAIN;
}

ghc_status fail_usage(const char* message) {
  g_last_error = dump_canonical(
      Json{{"kind", "BadArgument"}, {"message", message}, {"category", "usage"}});
  return GHC_ERROR_USAGE;
}

// Uniform wrapper: maps domain errors, JSON parse errors, and everything
// else onto statuses and the thread-local error slot.
template <typename Fn>
ghc_status guarded(Fn&& fn) {
  try {
    fn();
    return GHC_OK;
  } catch (const Error& err) {
    return fail(err);
  } catch (const Json::exception& e) {
    return fail(Error(ErrorKind::ParseError, e.what()));
  } catch (const std::exception& e) {
    g_last_error = dump_canonical(Json{{"kind", "Internal"},
                                       {"message", e.what()},
                                       {"category", "domain"}});
    return GHC_ERROR_DOMAIN;
  }
}

Json parse_json_text(const char* text, const char* what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(ErrorKind::ParseError, std::string("malformed JSON ") + what);
  return j;
}

std::vector<int> labels_from_json(const char* text, const char* what) {
  Json j = parse_json_text(text, what);
  if (!j.is_array())
    throw Error(ErrorKind::ParseError,
                std::string(what) + " must be a JSON array of point labels");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& cell : j) {
    if (!cell.is_number_integer())
      throw Error(ErrorKind::ParseError,
                  std::string(what) + " must contain integer labels");
    out.push_back(cell.get<int>());
  }
  return out;
}

}  // namespace

extern "C" {

const char* ghc_version(void) { return "1.0.0"; }

const char* ghc_last_error(void) { return g_last_error.c_str(); }

void ghc_string_free(char* s) { delete[] s; }

ghc_status ghc_space_parse(const char* json, ghc_space** out) {
  if (!json || !out) return fail_usage("ghc_space_parse: null argument");
  return guarded([&] {
    MetricSpace space = space_from_json(parse_json_text(json, "space"));
    *out = new ghc_space{std::move(space)};
  });
}

void ghc_space_free(ghc_space* space) { delete space; }

int ghc_space_size(const ghc_space* space) {
  return space ? space->space.size() : 0;
}

ghc_status ghc_space_to_json(const ghc_space* space, char** out) {
  if (!space || !out) return fail_usage("ghc_space_to_json: null argument");
  return guarded([&] { *out = copy_out(dump_canonical(space_to_json(space->space))); });
}

ghc_status ghc_space_diameter(const ghc_space* space, char** out) {
  if (!space || !out) return fail_usage("ghc_space_diameter: null argument");
  return guarded([&] { *out = copy_out(space->space.diameter().to_string()); });
}

ghc_status ghc_space_scale(const ghc_space* space, const char* lambda,
                           ghc_space** out) {
  if (!space || !lambda || !out) return fail_usage("ghc_space_scale: null argument");
  return guarded([&] {
    *out = new ghc_space{space->space.scaled(Rational::parse(lambda))};
  });
}

ghc_status ghc_space_from_points(const char* points_json, ghc_space** out) {
  if (!points_json || !out)
    return fail_usage("ghc_space_from_points: null argument");
  return guarded([&] {
    Json j = parse_json_text(points_json, "points");
    if (!j.is_array())
      throw Error(ErrorKind::ParseError, "points must be a JSON array");
    std::vector<Rational> xs;
    xs.reserve(j.size());
    for (const auto& cell : j) xs.push_back(rational_from_json(cell));
    *out = new ghc_space{MetricSpace::from_points(xs)};
  });
}

ghc_status ghc_validate(const char* json, char** report) {
  if (!json || !report) return fail_usage("ghc_validate: null argument");
  Json parsed;
  try {
    parsed = parse_json_text(json, "space");
    MetricSpace space = space_from_json(parsed);
    *report = copy_out(dump_canonical(Json{{"valid", true}, {"n", space.size()}}));
    return GHC_OK;
  } catch (const Error& err) {
    ghc_status status = fail(err);
    *report = copy_out(
        dump_canonical(Json{{"valid", false}, {"error", error_to_json(err)}}));
    return status;
  } catch (const std::exception& e) {
    Error err(ErrorKind::ParseError, e.what());
    ghc_status status = fail(err);
    *report = copy_out(
        dump_canonical(Json{{"valid", false}, {"error", error_to_json(err)}}));
    return status;
  }
}

ghc_status ghc_hausdorff(const ghc_space* ambient, const char* a_json,
                         const char* b_json, char** out) {
  if (!ambient || !a_json || !b_json || !out)
    return fail_usage("ghc_hausdorff: null argument");
  return guarded([&] {
    SubsetPair pair(ambient->space, labels_from_json(a_json, "subset A"),
                    labels_from_json(b_json, "subset B"));
    *out = copy_out(hausdorff_distance(pair).to_string());
  });
}

ghc_status ghc_gh_exact(const ghc_space* left, const ghc_space* right,
                        uint64_t max_nodes, char** result) {
  if (!left || !right || !result) return fail_usage("ghc_gh_exact: null argument");
  return guarded([&] {
    GhOptions opts;
    if (max_nodes != 0) opts.max_nodes = max_nodes;
    GhResult r = gh_exact(left->space, right->space, opts);
    GhBounds b = gh_bounds(left->space, right->space);
    *result = copy_out(dump_canonical(gh_result_to_json(r, b)));
  });
}

ghc_status ghc_gh_bounds(const ghc_space* left, const ghc_space* right,
                         char** result) {
  if (!left || !right || !result) return fail_usage("ghc_gh_bounds: null argument");
  return guarded([&] {
    *result = copy_out(
        dump_canonical(gh_bounds_to_json(gh_bounds(left->space, right->space))));
  });
}

ghc_status ghc_cloud_delta(const char* seq_x, const char* seq_y, int window,
                           int threads, int base_x, int base_y,
                           char** json_out, char** csv_out) {
  if (!seq_x || !seq_y || (!json_out && !csv_out))
    return fail_usage("ghc_cloud_delta: null argument");
  return guarded([&] {
    DeltaCurve curve = delta_curve(SequenceSpace::parse(seq_x),
                                   SequenceSpace::parse(seq_y), window,
                                   threads > 0 ? threads : 1,
                                   base_x > 0 ? base_x : 1,
                                   base_y > 0 ? base_y : 1);
    if (json_out) *json_out = copy_out(dump_canonical(delta_curve_to_json(curve)));
    if (csv_out) *csv_out = copy_out(delta_curve_to_csv(curve));
  });
}

ghc_status ghc_cloud_drop(int64_t prime, int window, char** json_out) {
  if (!json_out) return fail_usage("ghc_cloud_drop: null argument");
  return guarded([&] {
    *json_out = copy_out(
        dump_canonical(drop_report_to_json(drop_witness(prime, window))));
  });
}

ghc_status ghc_cloud_represent(const char* lambda, const char* q,
                               const char* phi, int window, int floor,
                               char** json_out) {
  if (!lambda || !q || !phi || !json_out)
    return fail_usage("ghc_cloud_represent: null argument");
  return guarded([&] {
    SequenceSpace seq =
        SequenceSpace::geometric(Rational::parse(q), Phi::parse(phi));
    auto reps = representation_search(Rational::parse(lambda), seq, window, floor);
    *json_out = copy_out(dump_canonical(Json{
        {"lambda", lambda},
        {"window", window},
        {"floor", floor},
        {"count", reps.size()},
        {"representations", representations_to_json(reps)}}));
  });
}

ghc_status ghc_cloud_represent_float(double lambda, double q, const char* phi,
                                     int window, int floor, double tol,
                                     char** json_out) {
  if (!phi || !json_out)
    return fail_usage("ghc_cloud_represent_float: null argument");
  return guarded([&] {
    auto reps = representation_search_float(lambda, q, Phi::parse(phi), window,
                                            floor, tol > 0 ? tol : 1e-9);
    *json_out = copy_out(dump_canonical(Json{
        {"lambda", lambda},
        {"q", q},
        {"window", window},
        {"floor", floor},
        {"tolerance", tol > 0 ? tol : 1e-9},
        {"count", reps.size()},
        {"representations", representations_to_json(reps)}}));
  });
}

ghc_status ghc_stab_member(const char* lambda, int64_t q, char** json_out) {
  if (!lambda || !json_out) return fail_usage("ghc_stab_member: null argument");
  return guarded([&] {
    auto alpha = stabilizer_member(Rational::parse(lambda), q);
    Json out{{"lambda", lambda}, {"q", q}, {"member", alpha.has_value()}};
    if (alpha)
      out["alpha"] = *alpha;
    else
      out["alpha"] = nullptr;
    *json_out = copy_out(dump_canonical(out));
  });
}

ghc_status ghc_stab_form9(const char* lambda, int64_t q, uint64_t bound,
                          char** json_out) {
  if (!lambda || !json_out) return fail_usage("ghc_stab_form9: null argument");
  return guarded([&] {
    const uint64_t b = bound ? bound : kDefaultForm9Bound;
    auto form = form9_decompose(Rational::parse(lambda), q, b);
    Json out{{"lambda", lambda}, {"q", q}, {"bound", b}, {"found", form.has_value()}};
    out["decomposition"] = form ? form9_to_json(*form) : Json(nullptr);
    *json_out = copy_out(dump_canonical(out));
  });
}

ghc_status ghc_stab_eq3(int64_t q, uint64_t n, uint64_t m, char** json_out) {
  if (!json_out) return fail_usage("ghc_stab_eq3: null argument");
  return guarded([&] {
    auto [a1, a2] = solve_eq3(q, n, m);
    *json_out = copy_out(dump_canonical(Json{{"q", q},
                                             {"n", n},
                                             {"m", m},
                                             {"a1", a1.to_string()},
                                             {"a2", a2.to_string()}}));
  });
}

ghc_status ghc_stab_gcd(int64_t q, uint64_t n, uint64_t m, char** json_out) {
  if (!json_out) return fail_usage("ghc_stab_gcd: null argument");
  return guarded([&] {
    // evaluated before the braced JSON init: a throw inside an initializer
    // list leaks the built elements under gcc (PR 66139)
    std::string gcd = gcd_qpow(q, n, m).to_string();
    *json_out = copy_out(dump_canonical(
        Json{{"q", q}, {"n", n}, {"m", m}, {"gcd", std::move(gcd)}}));
  });
}

ghc_status ghc_threads_build(const char* chain_json, int depth, uint64_t cap,
                             char** json_out) {
  if (!chain_json || !json_out)
    return fail_usage("ghc_threads_build: null argument");
  return guarded([&] {
    ThreadSystem ts =
        chain_from_json(parse_json_text(chain_json, "chain"), depth);
    LimitResult limit = limit_space(ts, cap ? cap : kDefaultThreadCap);
    auto reports = verify_projection_bound(ts, limit);
    *json_out = copy_out(dump_canonical(limit_result_to_json(limit, reports, ts)));
  });
}

ghc_status ghc_threads_sample(const char* chain_json, int depth,
                              uint64_t count, uint64_t seed, char** json_out) {
  if (!chain_json || !json_out)
    return fail_usage("ghc_threads_sample: null argument");
  return guarded([&] {
    ThreadSystem ts =
        chain_from_json(parse_json_text(chain_json, "chain"), depth);
    auto sampled = sample_threads(ts, count, seed);
    Json rows = Json::array();
    for (const auto& t : sampled) rows.push_back(t.points);
    *json_out = copy_out(dump_canonical(Json{{"depth", ts.depth()},
                                             {"count", sampled.size()},
                                             {"seed", seed},
                                             {"threads", std::move(rows)}}));
  });
}

ghc_status ghc_repro_run(uint64_t seed, char** json_out) {
  if (!json_out) return fail_usage("ghc_repro_run: null argument");
  return guarded([&] {
    auto results = run_acceptance_suite(seed ? seed : kDefaultReproSeed);
    *json_out = copy_out(dump_canonical(acceptance_report_json(results)));
  });
}

}  // extern "C"
