#include "verify.hpp"

#include <algorithm>
#include <cmath>

#include "hitwalk/error.hpp"
#include "hitwalk/linalg.hpp"
#include "hitwalk/partition.hpp"
#include "hitwalk/regularity.hpp"
#include "hitwalk/scheme.hpp"
#include "hitwalk/walks.hpp"

namespace hitwalk::verify {

namespace {

void bump(CheckResult& r, double residual, double tolerance) {
  r.applicable = true;
  ++r.instances;
  r.max_residual = std::max(r.max_residual, residual);
  if (residual > tolerance) r.pass = false;
}

CheckResult check_eqRw(const std::vector<std::pair<std::string, Graph>>& graphs) {
  CheckResult r;
  r.check = "eqRw";
  for (const auto& [name, g] : graphs) {
    const PerronData p = perron(g);
    for (int o = 0; o < g.n; ++o) {
      const Partition part = coarsest_stabilized(g, o, QuotientKind::equitable, &p);
      EquitableCheck eq = check_equitable(g, part);
      const EquitableCheck weight = check_weight_equitable(g, part, p);
      if (!eq.ok() || !weight.ok()) {
        r.pass = false;
        r.note = name + ": refinement output failed the partition check";
        return r;
      }
      attach_block_weights(*eq.quotient, part, p);
      const std::vector<double>& nu = eq.quotient->nu_block;
      double worst = 0.0;
      for (int i = 0; i < part.size(); ++i)
        for (int j = 0; j < part.size(); ++j)
          worst = std::max(worst, std::abs(weight.quotient->entries(i, j) -
                                           nu[i] / nu[j] * eq.quotient->entries(i, j)));
      bump(r, worst, 1e-9);
    }
  }
  return r;
}

CheckResult check_quotient_route(const std::vector<std::pair<std::string, Graph>>& graphs,
                                 QuotientKind kind) {
  CheckResult r;
  r.check = kind == QuotientKind::equitable ? "stabHt" : "stabHtW";
  for (const auto& [name, g] : graphs) {
    const PerronData p = perron(g);
    const TransitionMatrix t =
        kind == QuotientKind::equitable ? transition_simple(g) : transition_merw(g, p);
    for (int o = 0; o < g.n; ++o) {
      const HittingReport full = hit_full(t, o);
      const Partition part = coarsest_stabilized(g, o, kind, &p);
      const EquitableCheck chk = kind == QuotientKind::equitable
                                     ? check_equitable(g, part)
                                     : check_weight_equitable(g, part, p);
      const std::vector<int> blocks = part.block_index(g.n);
      double worst = 0.0;
      for (int v = 0; v < g.n; ++v)
        if (v != o)
          worst = std::max(worst,
                           std::abs(hit_via_quotient(*chk.quotient, blocks[v]) - full.times[v]));
      bump(r, worst, 1e-8);
    }
  }
  return r;
}

CheckResult check_dbrgHT(const std::vector<std::pair<std::string, Graph>>& graphs) {
  CheckResult r;
  r.check = "dbrgHT";
  int skipped = 0;
  for (const auto& [name, g] : graphs) {
    std::vector<ArrayCheck> arrays(g.n);
    bool regularized = true;
    for (int v = 0; v < g.n && regularized; ++v) {
      arrays[v] = intersection_array(g, v);
      regularized = arrays[v].ok();
    }
    if (!regularized) {
      ++skipped;
      continue;
    }
    double worst = 0.0;
    for (int v = 0; v < g.n; ++v) {
      const std::vector<int> dist = bfs_distances(g, v);
      const HittingReport simple = hit_full(g, v, WalkKind::simple);
      const HittingReport merw = hit_full(g, v, WalkKind::merw);
      for (int u = 0; u < g.n; ++u) {
        if (u == v) continue;
        const double h = hit_distance_regularized(*arrays[v].array, dist[u]);
        worst = std::max({worst, std::abs(h - simple.times[u]), std::abs(h - merw.times[u])});
      }
    }
    bump(r, worst, 1e-8);
  }
  if (skipped) r.note = std::to_string(skipped) + " instance(s) not distance-regularized";
  return r;
}

CheckResult check_genR(const std::vector<std::pair<std::string, Graph>>& graphs) {
  CheckResult r;
  r.check = "genR";
  int inapplicable = 0;
  for (const auto& [name, g] : graphs) {
    for (int v = 0; v < g.n; ++v) {
      const auto value = rao_hitting(g, v);
      if (!value) {
        ++inapplicable;
        continue;
      }
      const HittingReport full = hit_full(g, v, WalkKind::simple);
      double worst = 0.0;
      for (int u : g.neighbors(v)) worst = std::max(worst, std::abs(*value - full.times[u]));
      bump(r, worst, 1e-8);
    }
  }
  if (inapplicable) r.note = std::to_string(inapplicable) + " center(s) not applicable";
  return r;
}

CheckResult check_cone(const std::vector<std::pair<std::string, Graph>>& graphs) {
  CheckResult r;
  r.check = "cone";
  int skipped = 0;
  for (const auto& [name, g] : graphs) {
    if (!g.is_regular()) {
      ++skipped;
      continue;
    }
    const ConeHitting ch = cone_hitting(g);
    const Graph gplus = cone(g);
    const HittingReport simple = hit_full(gplus, g.n, WalkKind::simple);
    const HittingReport merw = hit_full(gplus, g.n, WalkKind::merw);
    double worst = 0.0;
    for (int v = 0; v < g.n; ++v) {
      worst = std::max(worst, std::abs(ch.to_apex_simple - simple.times[v]));
      worst = std::max(worst, std::abs(ch.to_apex_merw - merw.times[v]));
    }
    bump(r, worst, 1e-8);
  }
  if (skipped) r.note = std::to_string(skipped) + " non-regular instance(s) skipped";
  return r;
}

CheckResult check_merw_eq_simple(const std::vector<std::pair<std::string, Graph>>& graphs) {
  CheckResult r;
  r.check = "merw-eq-simple";
  int skipped = 0;
  for (const auto& [name, g] : graphs) {
    if (!g.is_regular() && !biregular(g).has_value()) {
      ++skipped;
      continue;
    }
    const TransitionMatrix ts = transition_simple(g);
    const TransitionMatrix tm = transition_merw(g, perron(g));
    bump(r, max_abs_diff(ts.probs, tm.probs), 1e-10);
    double worst = 0.0;
    for (int target = 0; target < g.n; ++target) {
      const HittingReport a = hit_full(ts, target);
      const HittingReport b = hit_full(tm, target);
      for (int u = 0; u < g.n; ++u) worst = std::max(worst, std::abs(a.times[u] - b.times[u]));
    }
    bump(r, worst, 1e-8);
  }
  if (skipped) r.note = std::to_string(skipped) + " irregular instance(s) skipped";
  return r;
}

CheckResult check_scheme() {
  CheckResult r;
  r.check = "scheme";
  for (const auto& [name, s] : scheme_catalog()) {
    double worst = std::abs(scheme_adjacent_hitting(s, 1) - (s.n - 1.0));
    for (int i = 1; i <= s.d; ++i) {
      Graph gi;
      try {
        gi = relation_graph(s, i);
      } catch (const DisconnectedRelation&) {
        continue;
      }
      const HittingReport full = hit_full(gi, 0, WalkKind::simple);
      for (int v = 1; v < s.n; ++v) {
        int j = -1;
        for (int rel = 1; rel <= s.d; ++rel)
          if (s.relations[rel].at(0, v) == 1) j = rel;
        worst = std::max(worst, std::abs(hit_relation_graph(s, i, j) - full.times[v]));
      }
    }
    bump(r, worst, 1e-8);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"eqRw",  "stabHt", "stabHtW",        "dbrgHT",
                                              "genR",  "cone",   "merw-eq-simple", "scheme"};
  return names;
}

std::vector<CheckResult> run_checks(const std::vector<std::pair<std::string, Graph>>& graphs,
                                    const std::vector<std::string>& checks) {
  std::vector<CheckResult> out;
  for (const std::string& name : checks) {
    if (name == "eqRw") out.push_back(check_eqRw(graphs));
    else if (name == "stabHt") out.push_back(check_quotient_route(graphs, QuotientKind::equitable));
    else if (name == "stabHtW") out.push_back(check_quotient_route(graphs, QuotientKind::weight));
    else if (name == "dbrgHT") out.push_back(check_dbrgHT(graphs));
    else if (name == "genR") out.push_back(check_genR(graphs));
    else if (name == "cone") out.push_back(check_cone(graphs));
    else if (name == "merw-eq-simple") out.push_back(check_merw_eq_simple(graphs));
    else if (name == "scheme") out.push_back(check_scheme());
    else throw InvalidInput("unknown check: " + name);
  }
  return out;
}

CheckResult check_quotient_claim(const Json& fixture) {
  const Graph g = graph_from_json(fixture.at("graph"));
  const int center = fixture.at("center").get<int>();
  const std::string kind_name = fixture.value("kind", "equitable");
  const QuotientKind kind =
      kind_name == "weight" ? QuotientKind::weight : QuotientKind::equitable;

  CheckResult r;
  r.check = kind == QuotientKind::equitable ? "stabHt" : "stabHtW";
  r.applicable = true;
  r.instances = 1;

  const PerronData p = perron(g);
  const Partition part = coarsest_stabilized(g, center, kind, &p);
  const EquitableCheck chk = kind == QuotientKind::equitable
                                 ? check_equitable(g, part)
                                 : check_weight_equitable(g, part, p);
  const auto& claimed = fixture.at("quotient");
  const Matrix& actual = chk.quotient->entries;
  if (static_cast<int>(claimed.size()) != actual.rows()) {
    r.pass = false;
    r.note = "claimed quotient has " + std::to_string(claimed.size()) + " blocks, expected " +
             std::to_string(actual.rows());
    return r;
  }
  for (int i = 0; i < actual.rows(); ++i)
    for (int j = 0; j < actual.cols(); ++j) {
      const double c = claimed[i][j].get<double>();
      const double diff = std::abs(c - actual(i, j));
      r.max_residual = std::max(r.max_residual, diff);
      if (diff > 1e-9) {
        r.pass = false;
        r.note = "quotient entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") claimed " + std::to_string(c) + " but refinement gives " +
                 std::to_string(actual(i, j));
        return r;
      }
    }
  return r;
}

Json to_json(const std::vector<CheckResult>& results) {
  Json rows = Json::array();
  for (const CheckResult& r : results) {
    Json row;
    row["check"] = r.check;
    row["pass"] = r.pass;
    row["applicable"] = r.applicable;
    row["instances"] = r.instances;
    row["max_residual"] = r.max_residual;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hitwalk::verify
