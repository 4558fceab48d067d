// ghcloud — command-line front end over the ghcloud C API. Every
// subcommand is a thin adapter: read files and flags, call the shared
// library, print its JSON (or CSV) verbatim, map the status to an exit
// code. No numerical logic lives here.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ghcloud/ghcloud.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitReproFailures = 4;

struct Invocation {
  std::string command;
  json inputs = json::object();
  bool report = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class OwnedString {
 public:
  ~OwnedString() { ghc_string_free(ptr_); }
  char** slot() { return &ptr_; }
  const char* get() const { return ptr_; }
  bool empty() const { return ptr_ == nullptr; }

 private:
  char* ptr_ = nullptr;
};

class OwnedSpace {
 public:
  ~OwnedSpace() { ghc_space_free(ptr_); }
  ghc_space** slot() { return &ptr_; }
  const ghc_space* get() const { return ptr_; }

 private:
  ghc_space* ptr_ = nullptr;
};

// Prints the payload (or the library's error JSON) and maps the status to
// the process exit code; wraps into a run report when requested.
int finish(const Invocation& inv, ghc_status status, const char* payload,
           double ms) {
  std::string body;
  if (status == GHC_OK && payload != nullptr)
    body = payload;
  else if (payload != nullptr)
    body = payload;  // validate-style failure reports carry their own JSON
  else
    body = ghc_last_error();
  if (inv.report) {
    json wrapped{{"command", inv.command},
                 {"inputs", inv.inputs},
                 {"timing_ms", ms}};
    json parsed = json::parse(body, nullptr, false);
    wrapped["outputs"] = parsed.is_discarded() ? json(body) : parsed;
    std::cout << wrapped.dump() << "\n";
  } else {
    std::cout << body << "\n";
  }
  return static_cast<int>(status);
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

uint64_t node_budget_from(const std::optional<uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("GHC_MAX_NODES")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 0;  // library default
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gromov-Hausdorff distances and cloud geometry scans"};
  app.require_subcommand(1);
  int threads = 1;
  uint64_t seed = 0;
  bool report = false;
  app.add_option("--threads", threads, "worker threads for window scans")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized modes");
  app.add_flag("--report", report, "wrap output in a run report");

  int exit_code = 0;
  auto run = [&](const Invocation& inv, ghc_status status, const char* payload,
                 double ms) { exit_code = finish(inv, status, payload, ms); };

  // ---- validate ----
  auto* validate = app.add_subcommand("validate", "check the metric axioms");
  auto validate_space = std::make_shared<std::string>();
  validate->add_option("--space", *validate_space, "space JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  validate->callback([&, validate_space] {
    Invocation inv{"validate", {{"space", *validate_space}}, report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_validate(read_file(*validate_space).c_str(), out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  // ---- ghdist ----
  auto* ghdist = app.add_subcommand("ghdist", "Gromov-Hausdorff distance");
  auto left_path = std::make_shared<std::string>();
  auto right_path = std::make_shared<std::string>();
  auto bounds_only = std::make_shared<bool>(false);
  auto exact_flag = std::make_shared<bool>(false);
  auto max_nodes = std::make_shared<std::optional<uint64_t>>();
  ghdist->add_option("--left", *left_path, "left space JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  ghdist->add_option("--right", *right_path, "right space JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* exact_opt =
      ghdist->add_flag("--exact", *exact_flag, "run the exact solver (default)");
  ghdist->add_flag("--bounds", *bounds_only, "report bounds only")
      ->excludes(exact_opt);
  ghdist->add_option("--max-nodes", *max_nodes,
                     "search-node budget (also GHC_MAX_NODES)");
  ghdist->callback([&, left_path, right_path, bounds_only, max_nodes] {
    Invocation inv{"ghdist",
                   {{"left", *left_path},
                    {"right", *right_path},
                    {"mode", *bounds_only ? "bounds" : "exact"}},
                   report};
    Timer timer;
    OwnedSpace left, right;
    ghc_status status =
        ghc_space_parse(read_file(*left_path).c_str(), left.slot());
    if (status == GHC_OK)
      status = ghc_space_parse(read_file(*right_path).c_str(), right.slot());
    OwnedString out;
    if (status == GHC_OK) {
      status = *bounds_only
                   ? ghc_gh_bounds(left.get(), right.get(), out.slot())
                   : ghc_gh_exact(left.get(), right.get(),
                                  node_budget_from(*max_nodes), out.slot());
    }
    run(inv, status, out.get(), timer.ms());
  });

  // ---- cloud ----
  auto* cloud = app.add_subcommand("cloud", "window scans over sequence spaces");
  cloud->require_subcommand(1);

  auto* delta = cloud->add_subcommand("delta", "minimal distance-difference curve");
  auto seq_x = std::make_shared<std::string>();
  auto seq_y = std::make_shared<std::string>();
  auto delta_window = std::make_shared<int>(0);
  auto csv_path = std::make_shared<std::string>();
  auto base_x = std::make_shared<int>(1);
  auto base_y = std::make_shared<int>(1);
  delta->add_option("--seq-x", *seq_x, "left sequence spec")->required();
  delta->add_option("--seq-y", *seq_y, "right sequence spec")->required();
  delta->add_option("--window", *delta_window, "max index")->required();
  delta->add_option("--csv", *csv_path, "also write a CSV file");
  delta->add_option("--base-x", *base_x, "left base point index")
      ->capture_default_str();
  delta->add_option("--base-y", *base_y, "right base point index")
      ->capture_default_str();
  delta->callback([&, seq_x, seq_y, delta_window, csv_path, base_x, base_y] {
    Invocation inv{"cloud delta",
                   {{"seq_x", *seq_x},
                    {"seq_y", *seq_y},
                    {"window", *delta_window},
                    {"base_x", *base_x},
                    {"base_y", *base_y},
                    {"threads", threads}},
                   report};
    Timer timer;
    OwnedString out, csv;
    ghc_status status =
        ghc_cloud_delta(seq_x->c_str(), seq_y->c_str(), *delta_window, threads,
                        *base_x, *base_y, out.slot(),
                        csv_path->empty() ? nullptr : csv.slot());
    if (status == GHC_OK && !csv_path->empty())
      std::ofstream(*csv_path, std::ios::binary) << csv.get();
    run(inv, status, out.get(), timer.ms());
  });

  auto* drop = cloud->add_subcommand("drop", "odd-prime drop certificate scan");
  auto drop_prime = std::make_shared<int64_t>(0);
  auto drop_window = std::make_shared<int>(0);
  drop->add_option("--prime", *drop_prime, "odd prime p")->required();
  drop->add_option("--window", *drop_window, "max exponent")->required();
  drop->callback([&, drop_prime, drop_window] {
    Invocation inv{"cloud drop",
                   {{"prime", *drop_prime}, {"window", *drop_window}},
                   report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_cloud_drop(*drop_prime, *drop_window, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  auto* represent = cloud->add_subcommand(
      "represent", "exact coefficient representations in a window");
  auto rep_lambda = std::make_shared<std::string>();
  auto rep_q = std::make_shared<std::string>();
  auto rep_phi = std::make_shared<std::string>("id");
  auto rep_window = std::make_shared<int>(0);
  auto rep_floor = std::make_shared<int>(0);
  auto rep_float = std::make_shared<bool>(false);
  auto rep_tol = std::make_shared<double>(1e-9);
  represent->add_option("--lambda", *rep_lambda, "coefficient")->required();
  represent->add_option("--q", *rep_q, "geometric base, q > 1")->required();
  represent->add_option("--phi", *rep_phi, "exponent function: id|square|list")
      ->capture_default_str();
  represent->add_option("--window", *rep_window, "max index")->required();
  represent->add_option("--floor", *rep_floor, "exclusive index floor")
      ->capture_default_str();
  represent->add_flag("--float", *rep_float,
                      "tolerance-based float mode for irrational parameters");
  represent->add_option("--tol", *rep_tol, "float-mode tolerance")
      ->capture_default_str();
  represent->callback([&, rep_lambda, rep_q, rep_phi, rep_window, rep_floor,
                       rep_float, rep_tol] {
    Invocation inv{"cloud represent",
                   {{"lambda", *rep_lambda},
                    {"q", *rep_q},
                    {"phi", *rep_phi},
                    {"window", *rep_window},
                    {"floor", *rep_floor},
                    {"float", *rep_float}},
                   report};
    Timer timer;
    OwnedString out;
    ghc_status status;
    if (*rep_float) {
      status = ghc_cloud_represent_float(
          std::strtod(rep_lambda->c_str(), nullptr),
          std::strtod(rep_q->c_str(), nullptr), rep_phi->c_str(), *rep_window,
          *rep_floor, *rep_tol, out.slot());
    } else {
      status = ghc_cloud_represent(rep_lambda->c_str(), rep_q->c_str(),
                                   rep_phi->c_str(), *rep_window, *rep_floor,
                                   out.slot());
    }
    run(inv, status, out.get(), timer.ms());
  });

  // ---- stab ----
  auto* stab = app.add_subcommand("stab", "similarity-coefficient number theory");
  stab->require_subcommand(1);

  auto* member = stab->add_subcommand("member", "decide membership lambda = q^alpha");
  auto mem_lambda = std::make_shared<std::string>();
  auto mem_q = std::make_shared<int64_t>(0);
  member->add_option("--lambda", *mem_lambda, "coefficient a/b")->required();
  member->add_option("--q", *mem_q, "integer base >= 2")->required();
  member->callback([&, mem_lambda, mem_q] {
    Invocation inv{"stab member", {{"lambda", *mem_lambda}, {"q", *mem_q}}, report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_stab_member(mem_lambda->c_str(), *mem_q, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  auto* form9 = stab->add_subcommand("form9", "bounded canonical-form decomposition");
  auto f9_lambda = std::make_shared<std::string>();
  auto f9_q = std::make_shared<int64_t>(0);
  auto f9_bound = std::make_shared<uint64_t>(0);
  form9->add_option("--lambda", *f9_lambda, "coefficient a/b")->required();
  form9->add_option("--q", *f9_q, "integer base >= 2")->required();
  form9->add_option("--bound", *f9_bound, "exponent bound (default 64)");
  form9->callback([&, f9_lambda, f9_q, f9_bound] {
    Invocation inv{"stab form9",
                   {{"lambda", *f9_lambda}, {"q", *f9_q}, {"bound", *f9_bound}},
                   report};
    Timer timer;
    OwnedString out;
    ghc_status status =
        ghc_stab_form9(f9_lambda->c_str(), *f9_q, *f9_bound, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  auto* eq3 = stab->add_subcommand("eq3", "coprime solution of a1(q^n-1) = a2(q^m-1)");
  auto e3_q = std::make_shared<int64_t>(0);
  auto e3_n = std::make_shared<uint64_t>(0);
  auto e3_m = std::make_shared<uint64_t>(0);
  eq3->add_option("--q", *e3_q, "integer base >= 2")->required();
  eq3->add_option("--n", *e3_n, "left exponent")->required();
  eq3->add_option("--m", *e3_m, "right exponent")->required();
  eq3->callback([&, e3_q, e3_n, e3_m] {
    Invocation inv{"stab eq3", {{"q", *e3_q}, {"n", *e3_n}, {"m", *e3_m}}, report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_stab_eq3(*e3_q, *e3_n, *e3_m, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  auto* gcd = stab->add_subcommand("gcd", "gcd(q^n - 1, q^m - 1), cross-checked");
  auto gc_q = std::make_shared<int64_t>(0);
  auto gc_n = std::make_shared<uint64_t>(0);
  auto gc_m = std::make_shared<uint64_t>(0);
  gcd->add_option("--q", *gc_q, "integer base >= 2")->required();
  gcd->add_option("--n", *gc_n, "left exponent")->required();
  gcd->add_option("--m", *gc_m, "right exponent")->required();
  gcd->callback([&, gc_q, gc_n, gc_m] {
    Invocation inv{"stab gcd", {{"q", *gc_q}, {"n", *gc_n}, {"m", *gc_m}}, report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_stab_gcd(*gc_q, *gc_n, *gc_m, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  // ---- threads ----
  auto* threads_cmd = app.add_subcommand("threads", "chains of correspondences");
  threads_cmd->require_subcommand(1);
  auto* build = threads_cmd->add_subcommand("build", "limit of a finite chain");
  auto chain_path = std::make_shared<std::string>();
  auto chain_depth = std::make_shared<int>(0);
  auto chain_cap = std::make_shared<uint64_t>(0);
  build->add_option("--chain", *chain_path, "chain JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  build->add_option("--depth", *chain_depth, "truncate the chain to N spaces");
  build->add_option("--cap", *chain_cap, "max thread count (default 100000)");
  build->callback([&, chain_path, chain_depth, chain_cap] {
    Invocation inv{"threads build",
                   {{"chain", *chain_path}, {"depth", *chain_depth}, {"cap", *chain_cap}},
                   report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_threads_build(read_file(*chain_path).c_str(),
                                          *chain_depth, *chain_cap, out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  auto* sample = threads_cmd->add_subcommand(
      "sample", "seeded random thread sample (exploration aid)");
  auto sample_chain = std::make_shared<std::string>();
  auto sample_depth = std::make_shared<int>(0);
  auto sample_count = std::make_shared<uint64_t>(16);
  sample->add_option("--chain", *sample_chain, "chain JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sample->add_option("--depth", *sample_depth, "truncate the chain to N spaces");
  sample->add_option("--count", *sample_count, "threads to draw")
      ->capture_default_str();
  sample->callback([&, sample_chain, sample_depth, sample_count] {
    Invocation inv{"threads sample",
                   {{"chain", *sample_chain},
                    {"depth", *sample_depth},
                    {"count", *sample_count},
                    {"seed", seed}},
                   report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_threads_sample(read_file(*sample_chain).c_str(),
                                           *sample_depth, *sample_count, seed,
                                           out.slot());
    run(inv, status, out.get(), timer.ms());
  });

  // ---- repro ----
  auto* repro = app.add_subcommand("repro", "run every built-in scenario");
  repro->callback([&] {
    Invocation inv{"repro", {{"seed", seed}}, report};
    Timer timer;
    OwnedString out;
    ghc_status status = ghc_repro_run(seed, out.slot());
    double ms = timer.ms();
    if (status == GHC_OK && out.get() != nullptr) {
      json parsed = json::parse(out.get(), nullptr, false);
      if (!parsed.is_discarded() && parsed.contains("all_pass") &&
          !parsed["all_pass"].get<bool>()) {
        finish(inv, status, out.get(), ms);
        exit_code = kExitReproFailures;
        return;
      }
    }
    run(inv, status, out.get(), ms);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return exit_code;
}
