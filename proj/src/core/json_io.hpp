#pragma once

#include <string>

#include <json.hpp>

#include "core/cloud_analysis.hpp"
#include "core/correspondence.hpp"
#include "core/error.hpp"
#include "core/gh_solver.hpp"
#include "core/metric_space.hpp"
#include "core/rational.hpp"
#include "core/stabilizer.hpp"
#include "core/thread_limit.hpp"

namespace ghcloud {

using Json = nlohmann::json;

// Exact values are serialized as lowest-terms strings ("6", "3/2"), never
// floats. Inputs additionally accept plain JSON integers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"n": <int>, "dist": [[...], ...]}
Json space_to_json(const MetricSpace& space);
MetricSpace space_from_json(const Json& j);

Json correspondence_to_json(const Correspondence& r);
Correspondence correspondence_from_json(const Json& j, int n, int m);

// {"spaces": [...], "correspondences": [...], "budgets": [...]?}
ThreadSystem chain_from_json(const Json& j, int depth = -1);

Json error_to_json(const Error& err);

Json gh_result_to_json(const GhResult& result, const GhBounds& bounds);
Json gh_bounds_to_json(const GhBounds& bounds);
Json delta_curve_to_json(const DeltaCurve& curve);
std::string delta_curve_to_csv(const DeltaCurve& curve);
Json drop_report_to_json(const DropReport& report);
Json representations_to_json(const std::vector<Representation>& reps);
Json form9_to_json(const Form9& f);
Json square_report_to_json(const SquareForm9Report& report);
Json limit_result_to_json(const LimitResult& limit,
                          const std::vector<LevelReport>& reports,
                          const ThreadSystem& ts);

// Compact dump with sorted object keys; the canonical output format.
std::string dump_canonical(const Json& j);

}  // namespace ghcloud
