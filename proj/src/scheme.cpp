#include "hitwalk/scheme.hpp"

#include <algorithm>

#include "hitwalk/error.hpp"
#include "hitwalk/walks.hpp"

namespace hitwalk {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int k = 0; k < a.n; ++k) {
      const long long aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

Matrix AssociationScheme::pmatrix(int k) const {
  Matrix m(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) m(i, j) = static_cast<double>(p[i][j][k]);
  return m;
}

SchemeCheck validate_scheme(const std::vector<IntMatrix>& relations) {
  if (relations.empty()) return {std::nullopt, SchemeWitness{"empty", -1, -1, -1, -1}};
  const int n = relations[0].n;
  const int d = static_cast<int>(relations.size()) - 1;
  for (int i = 0; i <= d; ++i) {
    if (relations[i].n != n) return {std::nullopt, SchemeWitness{"shape", i, -1, -1, -1}};
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const long long x = relations[i].at(u, v);
        if (x != 0 && x != 1) return {std::nullopt, SchemeWitness{"zero-one", i, -1, u, v}};
        if (relations[i].at(v, u) != x)
          return {std::nullopt, SchemeWitness{"symmetry", i, -1, u, v}};
        if (i >= 1 && u == v && x != 0)
          return {std::nullopt, SchemeWitness{"diagonal", i, -1, u, v}};
      }
  }
  if (relations[0] != IntMatrix::identity(n))
    return {std::nullopt, SchemeWitness{"identity", 0, -1, -1, -1}};

  // Class of each pair; also verifies that the relations partition V x V.
  std::vector<int> cls(static_cast<std::size_t>(n) * n, -1);
  for (int k = 0; k <= d; ++k)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (relations[k].at(u, v) == 1) {
          if (cls[static_cast<std::size_t>(u) * n + v] >= 0)
            return {std::nullopt, SchemeWitness{"sum-J", k, -1, u, v}};
          cls[static_cast<std::size_t>(u) * n + v] = k;
        }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (cls[static_cast<std::size_t>(u) * n + v] < 0)
        return {std::nullopt, SchemeWitness{"sum-J", -1, -1, u, v}};

  // One representative pair per class for O(1) extraction of p_ij^k.
  std::vector<std::pair<int, int>> rep(d + 1, {-1, -1});
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      const int k = cls[static_cast<std::size_t>(u) * n + v];
      if (rep[k].first < 0) rep[k] = {u, v};
    }

  AssociationScheme s;
  s.n = n;
  s.d = d;
  s.relations = relations;
  s.p.assign(d + 1, std::vector<std::vector<long long>>(d + 1, std::vector<long long>(d + 1, 0)));
  for (int i = 0; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      const IntMatrix product = relations[i] * relations[j];
      for (int k = 0; k <= d; ++k) {
        const auto [u, v] = rep[k];
        s.p[i][j][k] = product.at(u, v);
        s.p[j][i][k] = s.p[i][j][k];
      }
      // The product must be constant on every class.
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
          const int k = cls[static_cast<std::size_t>(u) * n + v];
          if (product.at(u, v) != s.p[i][j][k])
            return {std::nullopt, SchemeWitness{"closure", i, j, u, v}};
        }
    }
  return {std::move(s), std::nullopt};
}

namespace {

Matrix to_double(const IntMatrix& m) {
  Matrix out(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out(i, j) = static_cast<double>(m.at(i, j));
  return out;
}

void require_relation_range(const AssociationScheme& s, int i) {
  if (i < 1 || i > s.d) throw IndexOutOfRange("relation index out of range");
}

}  // namespace

Graph relation_graph(const AssociationScheme& s, int i) {
  require_relation_range(s, i);
  Matrix adj = to_double(s.relations[i]);
  if (!connected(adj, false))
    throw DisconnectedRelation("relation graph " + std::to_string(i) + " is disconnected");
  return graph_from_adjacency(std::move(adj), false);
}

Graph union_graph(const AssociationScheme& s, const std::vector<int>& relations) {
  if (relations.empty()) throw InvalidInput("union of relations must be non-empty");
  Matrix adj(s.n, s.n);
  for (int r : relations) {
    require_relation_range(s, r);
    for (int u = 0; u < s.n; ++u)
      for (int v = 0; v < s.n; ++v) adj(u, v) += static_cast<double>(s.relations[r].at(u, v));
  }
  if (!connected(adj, false)) throw DisconnectedRelation("union of relations is disconnected");
  return graph_from_adjacency(std::move(adj), false);
}

double hit_relation_graph(const AssociationScheme& s, int i, int j) {
  if (j < 1 || j > s.d) throw IndexOutOfRange("start relation out of range");
  relation_graph(s, i);  // connectivity gate
  const Matrix t = column_normalized(s.pmatrix(i));
  return hitting_vector(drop_index(t, 0))[j - 1];
}

double hit_t_distance_regular(const AssociationScheme& s, const std::vector<int>& relations,
                              int j) {
  if (j < 1 || j > s.d) throw IndexOutOfRange("start relation out of range");
  union_graph(s, relations);  // connectivity gate
  // Quotient of the union graph over the relation partition around any vertex:
  // q_ij counts, from a class-j vertex, the union-graph neighbours in class i,
  // which is sum_x p_{i, e_x}^j. Summing p_ij^{e_x} instead is correct only up
  // to per-column scale when all unioned relations share one valency, and
  // fails the absorbing-chain oracle otherwise (e.g. H(2,2) with e = {1,2}).
  Matrix q(s.d + 1, s.d + 1);
  for (int r : relations)
    for (int a = 0; a <= s.d; ++a)
      for (int b = 0; b <= s.d; ++b) q(a, b) += static_cast<double>(s.p[a][r][b]);
  const Matrix t = column_normalized(q);
  return hitting_vector(drop_index(t, 0))[j - 1];
}

double scheme_adjacent_hitting(const AssociationScheme& s, int i) {
  const double value = static_cast<double>(s.n - 1);
  const double via_quotient = hit_relation_graph(s, i, i);
  if (!approx_equal(value, via_quotient, 1e-8))
    throw Error("adjacent hitting disagrees with the relation quotient");
  return value;
}

AssociationScheme trivial_scheme(int n) {
  if (n < 2) throw BadParams("trivial scheme needs n >= 2");
  IntMatrix rest(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) rest.at(u, v) = 1;
  SchemeCheck check = validate_scheme({IntMatrix::identity(n), rest});
  if (!check.ok()) throw Error("trivial scheme failed validation");
  return std::move(*check.scheme);
}

SchemeCheck distance_scheme(const Graph& g) {
  int diameter = 0;
  std::vector<std::vector<int>> dist(g.n);
  for (int v = 0; v < g.n; ++v) {
    dist[v] = bfs_distances(g, v);
    diameter = std::max(diameter, *std::max_element(dist[v].begin(), dist[v].end()));
  }
  std::vector<IntMatrix> relations(diameter + 1, IntMatrix(g.n));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v) relations[dist[u][v]].at(u, v) = 1;
  return validate_scheme(relations);
}

namespace {

AssociationScheme distance_scheme_of(const Graph& g, const char* what) {
  SchemeCheck check = distance_scheme(g);
  if (!check.ok()) throw Error(std::string(what) + " distance scheme failed validation");
  return std::move(*check.scheme);
}

Graph johnson_graph_4_2() {
  // Vertices are the 2-subsets of {0,1,2,3} in lexicographic order; adjacent
  // when the subsets share exactly one element.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) subsets.emplace_back(a, b);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t x = 0; x < subsets.size(); ++x)
    for (std::size_t y = x + 1; y < subsets.size(); ++y) {
      const auto [a, b] = subsets[x];
      const auto [c, d] = subsets[y];
      const int common = (a == c) + (a == d) + (b == c) + (b == d);
      if (common == 1) edges.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
  return build_graph(edges, static_cast<int>(subsets.size()));
}

}  // namespace

AssociationScheme hamming_scheme(int d) {
  if (d < 1 || d > 4) throw BadParams("hamming scheme is bundled for 1 <= d <= 4");
  return distance_scheme_of(generate("hypercube", {d}), "hamming");
}

AssociationScheme johnson_scheme_4_2() {
  return distance_scheme_of(johnson_graph_4_2(), "johnson");
}

AssociationScheme petersen_scheme() {
  return distance_scheme_of(generate("petersen"), "petersen");
}

std::vector<std::pair<std::string, AssociationScheme>> scheme_catalog() {
  std::vector<std::pair<std::string, AssociationScheme>> out;
  out.emplace_back("trivial7", trivial_scheme(7));
  for (int d = 2; d <= 4; ++d)
    out.emplace_back("hamming" + std::to_string(d), hamming_scheme(d));
  out.emplace_back("johnson_4_2", johnson_scheme_4_2());
  out.emplace_back("petersen", petersen_scheme());
  return out;
}

}  // namespace hitwalk
