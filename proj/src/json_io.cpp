#include "hitwalk/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hitwalk/error.hpp"

namespace hitwalk {

namespace {

bool integral(double v) { return std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15; }

Json number(double v) {
  if (integral(v)) return Json(static_cast<long long>(v));
  return Json(v);
}

void dump(const Json& j, std::string& out, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad_in + Json(key).dump() + ": ";
        dump(value, out, indent, depth + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; nested arrays/objects get wrapped.
      const bool flat = std::all_of(j.begin(), j.end(),
                                    [](const Json& e) { return !e.is_structured(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump(j[i], out, indent, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad_in;
        dump(j[i], out, indent, depth + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InvalidInput("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(j[i].size()) != cols) throw InvalidInput("ragged matrix rows");
    for (int k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

}  // namespace

std::string format_json(const Json& j, int indent) {
  std::string out;
  dump(j, out, indent, 0);
  return out;
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  j["directed"] = g.directed;
  j["adj"] = matrix_to_json(g.adj);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("adj")) throw InvalidInput("graph JSON needs n and adj");
  const int n = j["n"].get<int>();
  const bool directed = j.value("directed", false);
  Matrix adj = matrix_from_json(j["adj"]);
  if (adj.rows() != n || adj.cols() != n) throw InvalidInput("adjacency size does not match n");
  return graph_from_adjacency(std::move(adj), directed);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int n = -1;
  int max_index = -1;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (!(ls >> n) || n <= 0) throw InvalidInput("bad 'n' header in edge list");
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw InvalidInput("bad edge-list line: " + line);
    }
    if (!(ls >> v)) throw InvalidInput("bad edge-list line: " + line);
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  if (n < 0) n = max_index + 1;
  return build_graph(edges, n);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  if (g.directed) throw InvalidInput("edge-list format is for undirected input graphs");
  out << "n " << g.n << "\n";
  for (int v = 0; v < g.n; ++v)
    for (int u = v + 1; u < g.n; ++u)
      if (g.adj(u, v) != 0.0) out << v << " " << u << "\n";
}

namespace {

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  if (has_json_extension(path)) {
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InvalidInput("bad JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(in);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  if (has_json_extension(path)) {
    out << format_json(graph_to_json(g)) << "\n";
  } else {
    write_edge_list(g, out);
  }
}

Json partition_to_json(const Partition& p) {
  Json j;
  if (p.center) j["center"] = *p.center;
  Json blocks = Json::array();
  for (const auto& block : p.blocks) blocks.push_back(block);
  j["blocks"] = std::move(blocks);
  return j;
}

Partition partition_from_json(const Json& j, int n) {
  std::optional<int> center;
  if (j.contains("center") && !j["center"].is_null()) center = j["center"].get<int>();
  std::vector<std::vector<int>> blocks;
  for (const auto& block : j.at("blocks")) blocks.push_back(block.get<std::vector<int>>());
  return make_partition(std::move(blocks), center, n);
}

Json quotient_to_json(const QuotientMatrix& q) {
  Json j;
  j["kind"] = q.kind == QuotientKind::equitable ? "equitable" : "weight";
  j["block_sizes"] = q.block_sizes;
  j["matrix"] = matrix_to_json(q.entries);
  if (q.kind == QuotientKind::equitable && !q.nu_block.empty()) {
    Json nu = Json::array();
    for (double v : q.nu_block) nu.push_back(v);
    j["nu_block"] = std::move(nu);
  }
  if (q.kind == QuotientKind::weight) j["lambda1"] = q.lambda1;
  return j;
}

Json report_to_json(const HittingReport& r) {
  Json j;
  j["target"] = r.target;
  j["method"] = hit_method_name(r.method);
  j["walk"] = walk_kind_name(r.walk);
  Json times = Json::array();
  for (double t : r.times) times.push_back(t);
  j["times"] = std::move(times);
  j["residual"] = r.residual;
  return j;
}

Json label_function_to_json(const LabelFunction& f) {
  Json j;
  j["alphabet"] = f.alphabet;
  Json rows = Json::array();
  for (int v = 0; v < f.n; ++v) {
    Json row = Json::array();
    for (int u = 0; u < f.n; ++u) row.push_back(f.code(v, u));
    rows.push_back(std::move(row));
  }
  j["labels"] = std::move(rows);
  return j;
}

LabelFunction label_function_from_json(const Json& j) {
  const auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
  const auto& rows = j.at("labels");
  const int n = static_cast<int>(rows.size());
  std::vector<int> codes;
  codes.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("label matrix must be square");
    for (const auto& e : row) codes.push_back(e.get<int>());
  }
  return make_label_function(n, std::move(codes), alphabet);
}

Json intersection_array_to_json(const IntersectionArray& a) {
  Json j;
  j["kind"] = a.kind == IntersectionArray::Kind::integer ? "integer" : "pseudo";
  j["d"] = a.d;
  j["c"] = a.c;
  j["a"] = a.a;
  j["b"] = a.b;
  return j;
}

Json verdict_to_json(const EquiWisRVerdict& v) {
  Json j;
  j["applicable"] = v.applicable;
  j["weight_certified"] = v.weight_certified;
  j["nu_constant"] = v.nu_constant;
  j["equitable_certified"] = v.equitable_certified;
  j["consistent"] = v.consistent();
  return j;
}

AssociationScheme scheme_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<IntMatrix> relations;
  if (j.contains("relations")) {
    for (const auto& rel : j["relations"]) {
      if (static_cast<int>(rel.size()) != n) throw InvalidInput("relation matrix size mismatch");
      IntMatrix m(n);
      for (int u = 0; u < n; ++u) {
        if (static_cast<int>(rel[u].size()) != n)
          throw InvalidInput("relation matrix size mismatch");
        for (int v = 0; v < n; ++v) m.at(u, v) = rel[u][v].get<long long>();
      }
      relations.push_back(std::move(m));
    }
  } else if (j.contains("labels")) {
    const auto& rows = j["labels"];
    if (static_cast<int>(rows.size()) != n) throw InvalidInput("label matrix size mismatch");
    long long classes = 0;
    for (const auto& row : rows)
      for (const auto& e : row) classes = std::max(classes, e.get<long long>());
    relations.assign(static_cast<std::size_t>(classes) + 1, IntMatrix(n));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const long long k = rows[u][v].get<long long>();
        if (k < 0) throw InvalidInput("relation labels must be non-negative");
        relations[static_cast<std::size_t>(k)].at(u, v) = 1;
      }
  } else {
    throw InvalidInput("scheme JSON needs 'relations' or 'labels'");
  }
  SchemeCheck check = validate_scheme(relations);
  if (!check.ok()) {
    const SchemeWitness& w = *check.witness;
    throw InvalidInput("not an association scheme: axiom '" + w.axiom + "' fails (i=" +
                       std::to_string(w.i) + ", j=" + std::to_string(w.j) + ", u=" +
                       std::to_string(w.u) + ", v=" + std::to_string(w.v) + ")");
  }
  return std::move(*check.scheme);
}

Json scheme_to_json(const AssociationScheme& s) {
  Json j;
  j["n"] = s.n;
  Json relations = Json::array();
  for (const IntMatrix& rel : s.relations) {
    Json rows = Json::array();
    for (int u = 0; u < s.n; ++u) {
      Json row = Json::array();
      for (int v = 0; v < s.n; ++v) row.push_back(rel.at(u, v));
      rows.push_back(std::move(row));
    }
    relations.push_back(std::move(rows));
  }
  j["relations"] = std::move(relations);
  return j;
}

AssociationScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidInput("bad JSON in " + path + ": " + e.what());
  }
  return scheme_from_json(j);
}

}  // namespace hitwalk
