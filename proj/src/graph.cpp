#include "hitwalk/graph.hpp"

#include <algorithm>
#include <set>

#include "hitwalk/error.hpp"

namespace hitwalk {

double Graph::weighted_degree(int v) const {
  double s = 0.0;
  for (int u = 0; u < n; ++u) s += adj(u, v);
  return s;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u)
    if (adj(u, v) != 0.0) ++d;
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (adj(u, v) != 0.0) out.push_back(u);
  return out;
}

int Graph::edge_count() const {
  int m = 0;
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (adj(u, v) != 0.0) ++m;
  return m;
}

bool Graph::is_regular(int* k) const {
  if (n == 0) return false;
  const int d0 = degree(0);
  for (int v = 1; v < n; ++v)
    if (degree(v) != d0) return false;
  if (k) *k = d0;
  return true;
}

namespace {

std::vector<char> reachable(const Matrix& adj, int source, bool along_columns) {
  const int n = adj.rows();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      const double w = along_columns ? adj(u, v) : adj(v, u);
      if (w != 0.0 && !seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

bool all_seen(const std::vector<char>& seen) {
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace

bool connected(const Matrix& adj, bool directed) {
  if (adj.rows() == 0) return false;
  if (!all_seen(reachable(adj, 0, true))) return false;
  if (directed && !all_seen(reachable(adj, 0, false))) return false;
  return true;
}

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n) {
  if (n <= 0) throw BadParams("vertex count must be positive");
  Matrix adj(n, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw IndexOutOfRange("edge endpoint out of range: (" + std::to_string(a) + "," +
                            std::to_string(b) + ") with n=" + std::to_string(n));
    if (a == b) throw InvalidInput("self loops are not allowed in input graphs");
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second)
      throw DuplicateEdge("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    adj(a, b) = 1.0;
    adj(b, a) = 1.0;
  }
  if (!connected(adj, false))
    throw DisconnectedGraph("graph on " + std::to_string(n) + " vertices is not connected");
  Graph g;
  g.n = n;
  g.adj = std::move(adj);
  g.directed = false;
  return g;
}

Graph graph_from_adjacency(Matrix adj, bool directed) {
  if (!adj.square() || adj.rows() == 0) throw InvalidInput("adjacency matrix must be square and non-empty");
  const int n = adj.rows();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (adj(i, j) < 0.0) throw InvalidInput("adjacency weights must be non-negative");
      if (!directed && adj(i, j) != adj(j, i)) throw InvalidInput("undirected adjacency must be symmetric");
    }
  if (!connected(adj, directed))
    throw DisconnectedGraph(directed ? "directed graph is not strongly connected"
                                     : "graph is not connected");
  Graph g;
  g.n = n;
  g.adj = std::move(adj);
  g.directed = directed;
  return g;
}

namespace {

Graph from_edges_unchecked(int n, const std::vector<std::pair<int, int>>& edges) {
  return build_graph(edges, n);
}

Graph make_cycle(int n) {
  if (n < 3) throw BadParams("cycle needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return from_edges_unchecked(n, e);
}

Graph make_path(int n) {
  if (n < 1) throw BadParams("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges_unchecked(n, e);
}

Graph make_complete(int n) {
  if (n < 1) throw BadParams("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return from_edges_unchecked(n, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw BadParams("complete bipartite needs both sides >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return from_edges_unchecked(a + b, e);
}

Graph make_hypercube(int d) {
  if (d < 1 || d > 20) throw BadParams("hypercube needs 1 <= d <= 20");
  const int n = 1 << d;
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int bit = 0; bit < d; ++bit) {
      const int y = x ^ (1 << bit);
      if (x < y) e.emplace_back(x, y);
    }
  return from_edges_unchecked(n, e);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return from_edges_unchecked(10, e);
}

}  // namespace

Graph cone(const Graph& g) {
  if (g.directed) throw InvalidInput("cone base must be undirected");
  const int n = g.n;
  Matrix adj(n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj(i, j) = g.adj(i, j);
  for (int v = 0; v < n; ++v) {
    adj(n, v) = 1.0;
    adj(v, n) = 1.0;
  }
  return graph_from_adjacency(std::move(adj), false);
}

Graph generate(const std::string& family, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw BadParams(family + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (family == "cycle") {
    need(1);
    return make_cycle(params[0]);
  }
  if (family == "path") {
    need(1);
    return make_path(params[0]);
  }
  if (family == "complete") {
    need(1);
    return make_complete(params[0]);
  }
  if (family == "complete_bipartite") {
    need(2);
    return make_complete_bipartite(params[0], params[1]);
  }
  if (family == "star") {
    need(1);
    if (params[0] < 1) throw BadParams("star needs m >= 1");
    return make_complete_bipartite(1, params[0]);
  }
  if (family == "hypercube") {
    need(1);
    return make_hypercube(params[0]);
  }
  if (family == "petersen") {
    need(0);
    return make_petersen();
  }
  if (family == "wheel") {
    need(1);
    if (params[0] < 4) throw BadParams("wheel needs n >= 4 total vertices");
    return cone(make_cycle(params[0] - 1));
  }
  throw UnknownFamily("unknown graph family: " + family);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n) throw IndexOutOfRange("bfs source out of range");
  std::vector<int> dist(g.n, -1);
  std::vector<int> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

std::optional<Bipartition> biregular(const Graph& g) {
  if (g.directed || g.n == 0) return std::nullopt;
  std::vector<int> side(g.n, -1);
  std::vector<int> queue{0};
  side[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : g.neighbors(v)) {
      if (side[u] < 0) {
        side[u] = 1 - side[v];
        queue.push_back(u);
      } else if (side[u] == side[v]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  int deg[2] = {-1, -1};
  for (int v = 0; v < g.n; ++v) {
    const int s = side[v];
    const int d = g.degree(v);
    if (deg[s] < 0) deg[s] = d;
    if (deg[s] != d) return std::nullopt;
  }
  if (deg[1] < 0) return std::nullopt;  // single vertex, no second side
  Bipartition b;
  b.side = std::move(side);
  b.degree0 = deg[0];
  b.degree1 = deg[1];
  return b;
}

std::vector<std::pair<std::string, Graph>> family_suite() {
  std::vector<std::pair<std::string, Graph>> out;
  auto add = [&](const std::string& name, const std::string& family, std::vector<int> p) {
    out.emplace_back(name, generate(family, p));
  };
  for (int n = 3; n <= 12; ++n) add("C" + std::to_string(n), "cycle", {n});
  for (int n = 2; n <= 8; ++n) add("K" + std::to_string(n), "complete", {n});
  for (int a = 1; a <= 5; ++a)
    for (int b = a; b <= 5; ++b)
      add("K" + std::to_string(a) + "," + std::to_string(b), "complete_bipartite", {a, b});
  for (int d = 2; d <= 4; ++d) add("Q" + std::to_string(d), "hypercube", {d});
  add("Petersen", "petersen", {});
  for (int n = 2; n <= 8; ++n) add("P" + std::to_string(n), "path", {n});
  for (int n = 4; n <= 8; ++n) add("W" + std::to_string(n), "wheel", {n});
  for (int m = 1; m <= 6; ++m) add("K1," + std::to_string(m), "star", {m});
  return out;
}

}  // namespace hitwalk
