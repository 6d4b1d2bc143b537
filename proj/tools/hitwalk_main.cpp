// hitwalk: hitting times of simple and maximal-entropy random walks on finite
// connected graphs, with quotient-matrix shortcuts for graphs carrying
// (weight-)equitable structure.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 2 input
// error, 3 check failure, 4 numerical failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hitwalk/error.hpp"
#include "hitwalk/graph.hpp"
#include "hitwalk/json_io.hpp"
#include "hitwalk/linalg.hpp"
#include "hitwalk/partition.hpp"
#include "hitwalk/scheme.hpp"
#include "hitwalk/walks.hpp"

#include "verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kConventionNote =
    "column-stochastic: T(A)[i][j] = a_ij / colsum_j; hitting times are column sums of "
    "(I - T_{-target})^{-1}";

using hitwalk::Json;

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hitwalk::InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

// Shared run-record header so identical (inputs, seed, version) runs emit
// bit-identical payloads; timings go to stderr only.
Json run_record(const std::vector<std::string>& argv,
                const std::vector<std::string>& input_paths) {
  Json j;
  j["tool"] = "hitwalk";
  j["version"] = kVersion;
  j["command"] = argv;
  if (!input_paths.empty()) {
    Json inputs;
    for (const std::string& path : input_paths) inputs[path] = file_digest(path);
    j["inputs"] = std::move(inputs);
  }
  return j;
}

void emit(const Json& j) { std::cout << hitwalk::format_json(j) << "\n"; }

int fail_json(int code, const std::string& type, const std::string& message) {
  Json j;
  j["error"]["type"] = type;
  j["error"]["message"] = message;
  emit(j);
  std::cerr << "hitwalk: " << message << "\n";
  return code;
}

struct GenOptions {
  std::string family;
  std::vector<int> params;
  std::string base_path;
  std::string out_path;
};

struct HitOptions {
  std::string graph_path;
  int target = 0;
  std::optional<int> source;
  std::string walk = "simple";
  std::string method = "full";
  long long samples = 100000;
  std::uint64_t seed = 0;
};

struct PartitionOptions {
  std::string graph_path;
  int center = 0;
  std::string kind = "equitable";
};

struct SchemeOptions {
  std::string scheme_path;
  int relation = 1;
  std::vector<int> union_relations;
  int start = 1;
};

struct VerifyOptions {
  std::string graph_path;
  std::string suite;  // "families" pulls in the built-in family suite
  std::vector<std::string> checks;
};

int run_gen(const GenOptions& opt, const std::vector<std::string>& argv) {
  using namespace hitwalk;
  Graph g;
  std::vector<std::string> inputs;
  if (opt.family == "cone") {
    if (opt.base_path.empty()) throw InvalidInput("gen cone needs --base GRAPH");
    inputs.push_back(opt.base_path);
    g = cone(load_graph(opt.base_path));
  } else {
    g = generate(opt.family, opt.params);
  }
  save_graph(g, opt.out_path);
  Json j = run_record(argv, inputs);
  j["family"] = opt.family;
  j["n"] = g.n;
  j["edges"] = g.edge_count();
  j["out"] = opt.out_path;
  emit(j);
  return 0;
}

hitwalk::WalkKind parse_walk(const std::string& name) {
  if (name == "simple") return hitwalk::WalkKind::simple;
  if (name == "merw") return hitwalk::WalkKind::merw;
  throw hitwalk::InvalidInput("unknown walk: " + name);
}

int run_hit(const HitOptions& opt, const std::vector<std::string>& argv) {
  using namespace hitwalk;
  const Graph g = load_graph(opt.graph_path);
  if (opt.target < 0 || opt.target >= g.n) throw IndexOutOfRange("target out of range");
  const WalkKind walk = parse_walk(opt.walk);

  Json j = run_record(argv, {opt.graph_path});
  j["target"] = opt.target;
  j["walk"] = walk_kind_name(walk);
  j["convention"] = kConventionNote;

  if (opt.method == "full") {
    const HittingReport r = hit_full(g, opt.target, walk);
    j["method"] = "full";
    j["times"] = r.times;
    j["residual"] = r.residual;
  } else if (opt.method == "quotient") {
    const PerronData p = perron(g);
    const QuotientKind kind =
        walk == WalkKind::simple ? QuotientKind::equitable : QuotientKind::weight;
    const Partition part = coarsest_stabilized(g, opt.target, kind, &p);
    const EquitableCheck chk = kind == QuotientKind::equitable
                                   ? check_equitable(g, part)
                                   : check_weight_equitable(g, part, p);
    const std::vector<int> blocks = part.block_index(g.n);
    double residual = 0.0;
    std::vector<double> per_block(part.size(), 0.0);
    for (int b = 1; b < part.size(); ++b) {
      double r = 0.0;
      per_block[b] = hit_via_quotient(*chk.quotient, b, &r);
      residual = std::max(residual, r);
    }
    std::vector<double> times(g.n, 0.0);
    for (int v = 0; v < g.n; ++v)
      if (v != opt.target) times[v] = per_block[blocks[v]];
    j["method"] = "quotient";
    j["times"] = times;
    j["residual"] = residual;
    j["partition"] = partition_to_json(part);
    j["quotient"] = quotient_to_json(*chk.quotient);
  } else if (opt.method == "mc") {
    if (!opt.source) throw InvalidInput("--method mc needs --source");
    const McEstimate e =
        hit_monte_carlo(g, opt.target, *opt.source, walk, opt.samples, opt.seed);
    j["method"] = "monte_carlo";
    j["source"] = *opt.source;
    Json times = Json::array();
    for (int v = 0; v < g.n; ++v) {
      if (v == opt.target) times.push_back(0.0);
      else if (v == *opt.source) times.push_back(e.estimate);
      else times.push_back(nullptr);
    }
    j["times"] = std::move(times);
    j["residual"] = 0.0;
    j["samples"] = e.samples;
    j["stderr"] = e.std_error;
    j["seed"] = e.seed;
    j["rng"] = kMonteCarloRng;
  } else {
    throw InvalidInput("unknown method: " + opt.method);
  }
  emit(j);
  return 0;
}

int run_partition(const PartitionOptions& opt, const std::vector<std::string>& argv) {
  using namespace hitwalk;
  const Graph g = load_graph(opt.graph_path);
  const QuotientKind kind =
      opt.kind == "weight" ? QuotientKind::weight : QuotientKind::equitable;
  const PerronData p = perron(g);
  const Partition part = coarsest_stabilized(g, opt.center, kind, &p);
  EquitableCheck chk = kind == QuotientKind::equitable ? check_equitable(g, part)
                                                       : check_weight_equitable(g, part, p);
  if (kind == QuotientKind::equitable) attach_block_weights(*chk.quotient, part, p);
  Json j = run_record(argv, {opt.graph_path});
  j["center"] = opt.center;
  j["kind"] = opt.kind;
  j["partition"] = partition_to_json(part);
  j["quotient"] = quotient_to_json(*chk.quotient);
  emit(j);
  return 0;
}

int run_scheme(const SchemeOptions& opt, const std::vector<std::string>& argv) {
  using namespace hitwalk;
  const AssociationScheme s = load_scheme(opt.scheme_path);
  Json j = run_record(argv, {opt.scheme_path});
  j["n"] = s.n;
  j["classes"] = s.d;
  j["start"] = opt.start;
  if (!opt.union_relations.empty()) {
    j["union"] = opt.union_relations;
    j["hitting"] = hit_t_distance_regular(s, opt.union_relations, opt.start);
  } else {
    j["relation"] = opt.relation;
    j["hitting"] = hit_relation_graph(s, opt.relation, opt.start);
  }
  emit(j);
  return 0;
}

int run_verify(const VerifyOptions& opt, const std::vector<std::string>& argv) {
  using namespace hitwalk;
  std::vector<std::string> checks = opt.checks;
  if (checks.empty()) checks = verify::known_checks();

  std::vector<std::pair<std::string, Graph>> graphs;
  std::vector<std::string> inputs;
  std::vector<verify::CheckResult> results;

  if (!opt.graph_path.empty()) {
    inputs.push_back(opt.graph_path);
    std::ifstream in(opt.graph_path);
    if (!in) throw InvalidInput("cannot open " + opt.graph_path);
    if (opt.graph_path.size() >= 5 &&
        opt.graph_path.compare(opt.graph_path.size() - 5, 5, ".json") == 0) {
      Json fixture;
      try {
        in >> fixture;
      } catch (const std::exception& e) {
        throw InvalidInput("bad JSON in " + opt.graph_path + ": " + e.what());
      }
      if (fixture.contains("graph")) {
        // claimed-quotient fixture: validate the claim, then run the other
        // requested checks on the embedded graph
        results.push_back(verify::check_quotient_claim(fixture));
        graphs.emplace_back(opt.graph_path, graph_from_json(fixture["graph"]));
      } else {
        graphs.emplace_back(opt.graph_path, graph_from_json(fixture));
      }
    } else {
      graphs.emplace_back(opt.graph_path, parse_edge_list(in));
    }
  }
  if (!opt.suite.empty() && opt.suite != "families")
    throw InvalidInput("unknown suite: " + opt.suite);
  const bool use_families = opt.suite == "families" || graphs.empty();
  if (use_families) {
    for (auto& entry : family_suite()) graphs.push_back(std::move(entry));
  }

  const std::vector<verify::CheckResult> more = verify::run_checks(graphs, checks);
  results.insert(results.end(), more.begin(), more.end());

  bool all_pass = true;
  for (const verify::CheckResult& r : results) all_pass = all_pass && r.pass;

  Json j = run_record(argv, inputs);
  j["suite"] = use_families ? "families" : "file";
  j["results"] = verify::to_json(results);
  j["pass"] = all_pass;
  emit(j);
  return all_pass ? 0 : 3;
}

int classify_error(const std::exception& e) {
  using namespace hitwalk;
  if (dynamic_cast<const NoConvergence*>(&e) || dynamic_cast<const SingularMatrix*>(&e) ||
      dynamic_cast<const WalkLimitExceeded*>(&e))
    return 4;
  return 2;
}

std::string error_type(const std::exception& e) {
  using namespace hitwalk;
#define HITWALK_NAME(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  HITWALK_NAME(DisconnectedGraph)
  HITWALK_NAME(IndexOutOfRange)
  HITWALK_NAME(DuplicateEdge)
  HITWALK_NAME(UnknownFamily)
  HITWALK_NAME(BadParams)
  HITWALK_NAME(NoConvergence)
  HITWALK_NAME(SingularMatrix)
  HITWALK_NAME(WalkLimitExceeded)
  HITWALK_NAME(NotRegular)
  HITWALK_NAME(UnknownLabel)
  HITWALK_NAME(DisconnectedRelation)
  HITWALK_NAME(InvalidInput)
#undef HITWALK_NAME
  return "Error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hitting times of simple and maximal-entropy random walks"};
  app.require_subcommand(1);
  std::vector<std::string> raw_args(argv, argv + argc);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a graph file");
  cmd_gen->add_option("family", gen.family,
                      "cycle|path|complete|complete_bipartite|star|hypercube|petersen|wheel|cone")
      ->required();
  cmd_gen->add_option("params", gen.params, "family parameters");
  cmd_gen->add_option("--base", gen.base_path, "base graph file (family = cone)");
  cmd_gen->add_option("-o,--out", gen.out_path, "output path (.json or edge list)")->required();

  HitOptions hit;
  CLI::App* cmd_hit = app.add_subcommand("hit", "hitting times to a target vertex");
  cmd_hit->add_option("graph", hit.graph_path, "graph file")->required();
  cmd_hit->add_option("--target", hit.target, "target vertex")->required();
  cmd_hit->add_option("--source", hit.source, "source vertex (required for --method mc)");
  cmd_hit->add_option("--walk", hit.walk, "simple|merw");
  cmd_hit->add_option("--method", hit.method, "full|quotient|mc");
  cmd_hit->add_option("--samples", hit.samples, "Monte Carlo sample count");
  cmd_hit->add_option("--seed", hit.seed, "Monte Carlo seed");

  PartitionOptions part;
  CLI::App* cmd_part = app.add_subcommand("partition", "coarsest stabilized partition + quotient");
  cmd_part->add_option("graph", part.graph_path, "graph file")->required();
  cmd_part->add_option("--center", part.center, "center vertex")->required();
  cmd_part->add_option("--kind", part.kind, "equitable|weight");

  SchemeOptions sch;
  CLI::App* cmd_sch = app.add_subcommand("scheme", "association-scheme hitting times");
  cmd_sch->add_option("scheme", sch.scheme_path, "scheme file")->required();
  cmd_sch->add_option("--relation", sch.relation, "relation graph index");
  cmd_sch->add_option("--union", sch.union_relations, "relation indices of a union graph")
      ->delimiter(',');
  cmd_sch->add_option("--start", sch.start, "start relation class")->required();

  VerifyOptions ver;
  CLI::App* cmd_ver = app.add_subcommand("verify", "run identity checks over graphs or the built-in suite");
  cmd_ver->add_option("graph", ver.graph_path, "graph or fixture file (optional)");
  cmd_ver->add_option("--suite", ver.suite, "built-in suite name (families)");
  cmd_ver
      ->add_option("--checks", ver.checks,
                   "eqRw,stabHt,stabHtW,dbrgHT,genR,cone,merw-eq-simple,scheme")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::stringstream ss;
    ss << e.what();
    return fail_json(2, "ParseError", ss.str());
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (cmd_gen->parsed()) code = run_gen(gen, raw_args);
    else if (cmd_hit->parsed()) code = run_hit(hit, raw_args);
    else if (cmd_part->parsed()) code = run_partition(part, raw_args);
    else if (cmd_sch->parsed()) code = run_scheme(sch, raw_args);
    else if (cmd_ver->parsed()) code = run_verify(ver, raw_args);
  } catch (const std::exception& e) {
    return fail_json(classify_error(e), error_type(e), e.what());
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  std::cerr << "hitwalk: completed in " << elapsed.count() << " ms\n";
  return code;
}
