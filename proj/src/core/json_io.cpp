#include "core/json_io.hpp"

namespace ghcloud {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer())
    return Rational(BigInt(j.get<int64_t>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorKind::ParseError,
              "expected an integer or a rational string, got " + j.dump());
}

Json space_to_json(const MetricSpace& space) {
  Json dist = Json::array();
  for (int i = 0; i < space.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < space.size(); ++j)
      row.push_back(rational_to_json(space.dist(i, j)));
    dist.push_back(std::move(row));
  }
  return Json{{"n", space.size()}, {"dist", std::move(dist)}};
}

MetricSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dist") || !j["dist"].is_array())
    throw Error(ErrorKind::ParseError,
                "space must be an object with a 'dist' matrix");
  MetricSpace::Matrix m;
  for (const auto& row : j["dist"]) {
    if (!row.is_array())
      throw Error(ErrorKind::ParseError, "'dist' rows must be arrays");
    std::vector<Rational> out;
    out.reserve(row.size());
    for (const auto& cell : row) out.push_back(rational_from_json(cell));
    m.push_back(std::move(out));
  }
  if (j.contains("n") && j["n"].is_number_integer() &&
      j["n"].get<int64_t>() != static_cast<int64_t>(m.size()))
    throw Error(ErrorKind::ParseError,
                "'n' does not match the matrix size");
  return MetricSpace::validated(std::move(m));
}

Json correspondence_to_json(const Correspondence& r) {
  Json pairs = Json::array();
  for (auto [i, j] : r.pairs()) pairs.push_back(Json::array({i, j}));
  return pairs;
}

Correspondence correspondence_from_json(const Json& j, int n, int m) {
  if (!j.is_array())
    throw Error(ErrorKind::ParseError, "correspondence must be a pair array");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(j.size());
  for (const auto& cell : j) {
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() ||
        !cell[1].is_number_integer())
      throw Error(ErrorKind::ParseError,
                  "correspondence entries must be [left, right] pairs");
    pairs.emplace_back(cell[0].get<int>(), cell[1].get<int>());
  }
  return Correspondence(n, m, std::move(pairs));
}

ThreadSystem chain_from_json(const Json& j, int depth) {
  if (!j.is_object() || !j.contains("spaces") || !j["spaces"].is_array() ||
      !j.contains("correspondences") || !j["correspondences"].is_array())
    throw Error(ErrorKind::ParseError,
                "chain must be an object with 'spaces' and 'correspondences'");
  std::vector<MetricSpace> spaces;
  for (const auto& s : j["spaces"]) spaces.push_back(space_from_json(s));
  if (depth > 0) {
    if (depth > static_cast<int>(spaces.size()))
      throw Error(ErrorKind::BadArgument,
                  "requested depth exceeds the chain length");
    spaces.erase(spaces.begin() + depth, spaces.end());
  }
  if (j["correspondences"].size() + 1 < spaces.size())
    throw Error(ErrorKind::SizeMismatch,
                "chain needs one correspondence per adjacent space pair");
  std::vector<Correspondence> links;
  for (size_t n = 0; n + 1 < spaces.size(); ++n)
    links.push_back(correspondence_from_json(j["correspondences"][n],
                                             spaces[n].size(),
                                             spaces[n + 1].size()));
  if (j.contains("budgets")) {
    if (!j["budgets"].is_array() || j["budgets"].size() + 1 < spaces.size())
      throw Error(ErrorKind::ParseError, "budgets must list one value per link");
    std::vector<Rational> budgets;
    for (size_t n = 0; n + 1 < spaces.size(); ++n)
      budgets.push_back(rational_from_json(j["budgets"][n]));
    return ThreadSystem::with_budgets(std::move(spaces), std::move(links),
                                      std::move(budgets));
  }
  return ThreadSystem::with_default_budgets(std::move(spaces), std::move(links));
}

Json error_to_json(const Error& err) {
  Json out{{"kind", std::string(err.kind_name())}, {"message", err.what()}};
  const char* names[3] = {"i", "j", "k"};
  for (int t = 0; t < 3; ++t)
    if (err.where()[static_cast<size_t>(t)] >= 0)
      out[names[t]] = err.where()[static_cast<size_t>(t)];
  switch (err.category()) {
    case ErrorCategory::Usage:
      out["category"] = "usage";
      break;
    case ErrorCategory::Limit:
      out["category"] = "limit";
      break;
    case ErrorCategory::Domain:
      out["category"] = "domain";
      break;
  }
  return out;
}

Json gh_bounds_to_json(const GhBounds& bounds) {
  return Json{{"lower", rational_to_json(bounds.lower)},
              {"upper", rational_to_json(bounds.upper)}};
}

Json gh_result_to_json(const GhResult& result, const GhBounds& bounds) {
  Json out = gh_bounds_to_json(bounds);
  out["value"] = rational_to_json(result.value);
  out["witness_pairs"] = correspondence_to_json(result.witness);
  out["nodes_explored"] = result.nodes_explored;
  return out;
}

Json delta_curve_to_json(const DeltaCurve& curve) {
  Json rows = Json::array();
  for (const auto& row : curve.rows)
    rows.push_back(Json{{"s", row.s},
                        {"min_abs_delta", rational_to_json(row.min_abs_delta)}});
  return Json{{"window", curve.window}, {"rows", std::move(rows)}};
}

std::string delta_curve_to_csv(const DeltaCurve& curve) {
  std::string out = "s,min_abs_delta\n";
  for (const auto& row : curve.rows) {
    out += std::to_string(row.s);
    out.push_back(',');
    out += row.min_abs_delta.to_string();
    out.push_back('\n');
  }
  return out;
}

Json drop_report_to_json(const DropReport& report) {
  Json by_s = Json::array();
  for (const auto& [s, delta] : report.min_delta_by_s)
    by_s.push_back(Json{{"s", s}, {"min_abs_delta", delta.to_string()}});
  return Json{{"prime", report.prime},
              {"window", report.window},
              {"zero_found", report.zero_found},
              {"min_delta_by_s", std::move(by_s)}};
}

Json representations_to_json(const std::vector<Representation>& reps) {
  Json out = Json::array();
  for (const auto& r : reps) out.push_back(Json::array({r.n, r.k, r.m, r.l}));
  return out;
}

Json form9_to_json(const Form9& f) {
  return Json{{"alpha", f.alpha}, {"d", f.d}, {"r1", f.r1}, {"r2", f.r2}};
}

Json square_report_to_json(const SquareForm9Report& report) {
  Json out{{"lambda", rational_to_json(report.lambda)},
           {"lambda_is_one", report.lambda_is_one},
           {"lambda_is_one_required", report.lambda_is_one_required}};
  if (report.counterexample)
    out["counterexample"] =
        Json::array({report.counterexample->first, report.counterexample->second});
  else
    out["counterexample"] = nullptr;
  return out;
}

Json limit_result_to_json(const LimitResult& limit,
                          const std::vector<LevelReport>& reports,
                          const ThreadSystem& ts) {
  Json verification = Json::array();
  for (const auto& r : reports)
    verification.push_back(Json{{"level", r.level},
                                {"bound", rational_to_json(r.bound)},
                                {"max_distortion", rational_to_json(r.max_distortion)},
                                {"slack", rational_to_json(r.bound - r.max_distortion)},
                                {"ok", r.ok}});
  return Json{{"depth", ts.depth()},
              {"thread_count", limit.threads.size()},
              {"tail_bound", rational_to_json(ts.tail_bound())},
              {"limit", space_to_json(limit.space)},
              {"verification", std::move(verification)}};
}

std::string dump_canonical(const Json& j) { return j.dump(); }

}  // namespace ghcloud
