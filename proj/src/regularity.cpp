#include "hitwalk/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hitwalk/error.hpp"
#include "hitwalk/walks.hpp"

namespace hitwalk {

Partition distance_partition(const Graph& g, int v) {
  const std::vector<int> dist = bfs_distances(g, v);
  const int d = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<int>> blocks(d + 1);
  for (int u = 0; u < g.n; ++u) blocks[dist[u]].push_back(u);
  return make_partition(std::move(blocks), v, g.n);
}

Matrix IntersectionArray::tridiagonal() const {
  Matrix m(d + 1, d + 1);
  for (int i = 1; i <= d; ++i) {
    m(i - 1, i) = c[i - 1];
    m(i, i) = a[i - 1];
  }
  for (int i = 0; i < d; ++i) m(i + 1, i) = b[i];
  return m;
}

ArrayCheck intersection_array(const Graph& g, int v) {
  const std::vector<int> dist = bfs_distances(g, v);
  const int d = *std::max_element(dist.begin(), dist.end());
  IntersectionArray arr;
  arr.kind = IntersectionArray::Kind::integer;
  arr.d = d;
  arr.c.assign(d, 0.0);
  arr.a.assign(d, 0.0);
  arr.b.assign(d, 0.0);
  arr.b[0] = static_cast<double>(g.degree(v));

  std::vector<int> first(d + 1, -1);
  for (int u = 0; u < g.n; ++u) {
    const int i = dist[u];
    if (i == 0) continue;
    int closer = 0, same = 0, further = 0;
    for (int w : g.neighbors(u)) {
      if (dist[w] == i - 1) ++closer;
      else if (dist[w] == i) ++same;
      else ++further;
    }
    if (first[i] < 0) {
      first[i] = u;
      arr.c[i - 1] = closer;
      arr.a[i - 1] = same;
      if (i < d) arr.b[i] = further;
    } else if (arr.c[i - 1] != closer || arr.a[i - 1] != same ||
               (i < d && arr.b[i] != further) || (i == d && further != 0)) {
      return ArrayCheck{std::nullopt, ArrayWitness{i, first[i], u}};
    }
  }
  return ArrayCheck{std::move(arr), std::nullopt};
}

ArrayCheck pseudo_intersection(const Graph& g, int v, const PerronData& perron) {
  const Partition p = distance_partition(g, v);
  const EquitableCheck check = check_weight_equitable(g, p, perron);
  if (!check.ok()) {
    const PartitionWitness& w = *check.witness;
    return ArrayCheck{std::nullopt, ArrayWitness{w.block, w.u, w.v}};
  }
  const Matrix& q = check.quotient->entries;
  const int d = q.rows() - 1;
  IntersectionArray arr;
  arr.kind = IntersectionArray::Kind::pseudo;
  arr.d = d;
  for (int i = 1; i <= d; ++i) {
    arr.c.push_back(q(i - 1, i));
    arr.a.push_back(q(i, i));
  }
  for (int i = 0; i < d; ++i) arr.b.push_back(q(i + 1, i));
  return ArrayCheck{std::move(arr), std::nullopt};
}

double hit_distance_regularized(const IntersectionArray& array, int i) {
  if (array.kind != IntersectionArray::Kind::integer)
    throw InvalidInput("integer intersection array expected");
  if (i < 1 || i > array.d) throw IndexOutOfRange("distance class out of range");
  const Matrix t = column_normalized(array.tridiagonal());
  return hitting_vector(drop_index(t, 0))[i - 1];
}

double hit_pseudo(const IntersectionArray& array, int i, const PerronData& perron) {
  if (array.kind != IntersectionArray::Kind::pseudo)
    throw InvalidInput("pseudo intersection array expected");
  if (i < 1 || i > array.d) throw IndexOutOfRange("distance class out of range");
  const Matrix b = array.tridiagonal();
  // Columns of the pseudo quotient sum to lambda1, so T(.) is exactly B*/lambda1.
  for (int j = 0; j <= array.d; ++j) {
    double s = 0.0;
    for (int r = 0; r <= array.d; ++r) s += b(r, j);
    if (!approx_equal(s, perron.eigenvalue, 1e-8))
      throw InvalidInput("pseudo array column sums do not match lambda1");
  }
  const Matrix t = column_normalized(b);
  return hitting_vector(drop_index(t, 0))[i - 1];
}

std::vector<int> LabelFunction::color_codes() const {
  std::set<int> colors;
  for (int v = 0; v < n; ++v) colors.insert(code(v, v));
  return {colors.begin(), colors.end()};
}

LabelFunction make_label_function(int n, std::vector<int> codes,
                                  std::vector<std::string> alphabet) {
  if (n <= 0 || static_cast<int>(codes.size()) != n * n)
    throw InvalidInput("label function needs n*n codes");
  std::set<int> diagonal, off;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) {
      const int c = codes[static_cast<std::size_t>(v) * n + u];
      if (c < 0 || c >= static_cast<int>(alphabet.size()))
        throw InvalidInput("label code outside the alphabet");
      (v == u ? diagonal : off).insert(c);
    }
  for (int c : diagonal)
    if (off.count(c))
      throw InvalidInput("color and relation label sets must be disjoint: " + alphabet[c]);
  LabelFunction f;
  f.n = n;
  f.codes = std::move(codes);
  f.alphabet = std::move(alphabet);
  return f;
}

LabelFunction distance_label_function(const Graph& g) {
  return distance_label_function(g, std::vector<int>(g.n, 0));
}

LabelFunction distance_label_function(const Graph& g, const std::vector<int>& vertex_colors) {
  if (static_cast<int>(vertex_colors.size()) != g.n)
    throw InvalidInput("vertex_colors size mismatch");
  std::vector<std::vector<int>> dist(g.n);
  int diameter = 0;
  for (int v = 0; v < g.n; ++v) {
    dist[v] = bfs_distances(g, v);
    diameter = std::max(diameter, *std::max_element(dist[v].begin(), dist[v].end()));
  }
  // Alphabet: relation labels "1".."diameter", then one color name per
  // distinct input color, ranked by color value.
  std::vector<int> distinct(vertex_colors);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::map<int, int> color_code;
  std::vector<std::string> alphabet;
  for (int i = 1; i <= diameter; ++i) alphabet.push_back(std::to_string(i));
  for (std::size_t r = 0; r < distinct.size(); ++r) {
    color_code[distinct[r]] = static_cast<int>(alphabet.size());
    alphabet.push_back(distinct.size() == 1 ? "o" : "o" + std::to_string(r));
  }
  std::vector<int> codes(static_cast<std::size_t>(g.n) * g.n);
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u)
      codes[static_cast<std::size_t>(v) * g.n + u] =
          v == u ? color_code[vertex_colors[v]] : dist[v][u] - 1;
  return make_label_function(g.n, std::move(codes), std::move(alphabet));
}

LabelFunction cone_label_function(const LabelFunction& base) {
  const int n = base.n;
  const int np = n + 1;
  std::vector<std::string> alphabet = base.alphabet;
  const int apex_color = static_cast<int>(alphabet.size());
  alphabet.push_back("a0");
  const int apex_relation = apex_color + 1;
  alphabet.push_back("a1");
  std::vector<int> codes(static_cast<std::size_t>(np) * np, apex_relation);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u) codes[static_cast<std::size_t>(v) * np + u] = base.code(v, u);
  codes[static_cast<std::size_t>(n) * np + n] = apex_color;
  return make_label_function(np, std::move(codes), std::move(alphabet));
}

namespace {

// Partition of V by the labels of row o: the center class {o} first, then the
// non-empty relation classes in ascending code order.
std::pair<Partition, std::vector<int>> row_partition(const Graph& g, const LabelFunction& f,
                                                     int o) {
  std::map<int, std::vector<int>> by_code;
  for (int u = 0; u < g.n; ++u) {
    if (u == o) continue;
    by_code[f.code(o, u)].push_back(u);
  }
  std::vector<std::vector<int>> blocks{{o}};
  std::vector<int> class_codes{f.code(o, o)};
  for (auto& [code, vertices] : by_code) {
    class_codes.push_back(code);
    blocks.push_back(std::move(vertices));
  }
  return {make_partition(std::move(blocks), o, g.n), std::move(class_codes)};
}

bool quotient_entries_equal(const Matrix& a, const Matrix& b, QuotientKind kind) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (kind == QuotientKind::equitable ? a(i, j) != b(i, j)
                                          : !approx_equal(a(i, j), b(i, j)))
        return false;
    }
  return true;
}

}  // namespace

WeaklyFEquitable check_weakly_f_equitable(const Graph& g, const LabelFunction& f,
                                          QuotientKind kind) {
  if (f.n != g.n) throw InvalidInput("label function does not match the graph");
  const PerronData p = perron(g);

  WeaklyFEquitable result;
  result.kind = kind;
  result.lambda1 = p.eigenvalue;

  std::map<int, ColorQuotient> by_color;
  std::map<int, int> reference_vertex;
  for (int o = 0; o < g.n; ++o) {
    auto [partition, class_codes] = row_partition(g, f, o);
    EquitableCheck check = kind == QuotientKind::equitable
                               ? check_equitable(g, partition)
                               : check_weight_equitable(g, partition, p);
    if (!check.ok()) {
      const PartitionWitness& w = *check.witness;
      result.witness = "partition at vertex " + std::to_string(o) + " is not " +
                       (kind == QuotientKind::equitable ? "equitable" : "weight-equitable") +
                       ": counts into class " + f.name(class_codes[w.block]) +
                       " differ between vertices " + std::to_string(w.u) + " and " +
                       std::to_string(w.v);
      return result;
    }
    if (kind == QuotientKind::equitable) attach_block_weights(*check.quotient, partition, p);

    const int color = f.code(o, o);
    auto it = by_color.find(color);
    if (it == by_color.end()) {
      ColorQuotient cq;
      cq.color = color;
      cq.classes = std::move(class_codes);
      cq.quotient = std::move(*check.quotient);
      by_color.emplace(color, std::move(cq));
      reference_vertex[color] = o;
    } else {
      const ColorQuotient& ref = it->second;
      if (class_codes != ref.classes ||
          !quotient_entries_equal(check.quotient->entries, ref.quotient.entries, kind)) {
        result.witness = "vertices " + std::to_string(reference_vertex[color]) + " and " +
                         std::to_string(o) + " share color " + f.name(color) +
                         " but have different quotients";
        return result;
      }
    }
  }

  result.ok = true;
  for (auto& [color, cq] : by_color) result.quotients.push_back(std::move(cq));
  return result;
}

double hit_weakly_f_equitable(const WeaklyFEquitable& result, int color, int label,
                              QuotientKind kind) {
  if (!result.ok) throw InvalidInput("hit_weakly_f_equitable needs a successful certification");
  const ColorQuotient* cq = nullptr;
  for (const ColorQuotient& q : result.quotients)
    if (q.color == color) cq = &q;
  if (!cq) throw UnknownLabel("no quotient for color code " + std::to_string(color));
  int block = -1;
  for (std::size_t i = 1; i < cq->classes.size(); ++i)
    if (cq->classes[i] == label) block = static_cast<int>(i);
  if (block < 0) throw UnknownLabel("label code " + std::to_string(label) +
                                    " is not a relation class of this quotient");

  Matrix routed = cq->quotient.entries;
  if (kind == QuotientKind::weight && result.kind == QuotientKind::equitable) {
    // B* = D_nu B D_nu^{-1} with the per-block Perron values.
    const std::vector<double>& nu = cq->quotient.nu_block;
    if (nu.empty()) throw InvalidInput("equitable quotient lacks block weights");
    for (int i = 0; i < routed.rows(); ++i)
      for (int j = 0; j < routed.cols(); ++j) routed(i, j) *= nu[i] / nu[j];
  } else if (kind != result.kind) {
    throw InvalidInput("simple-walk routing needs an equitable certification");
  }
  const Matrix t = column_normalized(routed);
  return hitting_vector(drop_index(t, 0))[block - 1];
}

std::optional<double> rao_hitting(const Graph& g, int v) {
  if (g.directed) throw InvalidInput("rao_hitting needs an undirected graph");
  const Partition p = coarsest_stabilized(g, v, QuotientKind::equitable);
  const std::vector<int> nbrs = g.neighbors(v);
  const bool applies = std::any_of(p.blocks.begin(), p.blocks.end(),
                                   [&](const std::vector<int>& b) { return b == nbrs; });
  if (!applies) return std::nullopt;
  const double e = static_cast<double>(g.edge_count());
  const double k = static_cast<double>(g.degree(v));
  return 2.0 * e / k - 1.0;
}

namespace {

ConeHitting cone_closed_forms(const Graph& base, const Graph& gplus) {
  int k = 0;
  if (!base.is_regular(&k)) throw NotRegular("cone base must be regular");
  const double n = static_cast<double>(base.n);
  ConeHitting out;
  out.lambda1 = k / 2.0 + std::sqrt(n + k * k / 4.0);
  out.to_apex_simple = k + 1.0;
  out.to_apex_merw = out.lambda1 * out.lambda1 / n;
  // Built-in cross-check of the closed-form eigenvalue against the solver.
  const PerronData p = perron(gplus);
  if (!approx_equal(p.eigenvalue, out.lambda1))
    throw NoConvergence("cone lambda1 closed form disagrees with perron");
  return out;
}

}  // namespace

ConeHitting cone_hitting(const Graph& base) {
  const Graph gplus = cone(base);
  return cone_closed_forms(base, gplus);
}

ConeHitting cone_hitting(const Graph& base, const LabelFunction& f_base) {
  const Graph gplus = cone(base);
  ConeHitting out = cone_closed_forms(base, gplus);

  const WeaklyFEquitable base_check = check_weakly_f_equitable(base, f_base, QuotientKind::equitable);
  if (!base_check.ok || base_check.quotients.size() != 1)
    throw InvalidInput("per-label cone tables need an f-equitable base (single color)");

  const LabelFunction fplus = cone_label_function(f_base);
  const WeaklyFEquitable plus_check =
      check_weakly_f_equitable(gplus, fplus, QuotientKind::equitable);
  if (!plus_check.ok) throw Error("cone over an f-equitable base is not weakly f+-equitable");

  const int base_color = base_check.quotients[0].color;
  for (const ColorQuotient& cq : plus_check.quotients) {
    if (cq.color != base_color) continue;
    for (std::size_t i = 1; i < cq.classes.size(); ++i) {
      const int label = cq.classes[i];
      ConeHitting::Entry entry;
      entry.label = fplus.name(label);
      entry.simple = hit_weakly_f_equitable(plus_check, base_color, label, QuotientKind::equitable);
      entry.merw = hit_weakly_f_equitable(plus_check, base_color, label, QuotientKind::weight);
      out.table.push_back(std::move(entry));
    }
  }
  return out;
}

EquiWisRVerdict check_weight_f_equitable_implies_f_equitable(const Graph& g,
                                                             const LabelFunction& f) {
  EquiWisRVerdict verdict;
  verdict.applicable = f.color_codes().size() == 1;
  if (!verdict.applicable) return verdict;
  const WeaklyFEquitable weight = check_weakly_f_equitable(g, f, QuotientKind::weight);
  verdict.weight_certified = weight.ok;
  if (!weight.ok) return verdict;
  const PerronData p = perron(g);
  const auto [lo, hi] = std::minmax_element(p.eigenvector.begin(), p.eigenvector.end());
  verdict.nu_constant = approx_equal(*lo, *hi);
  verdict.equitable_certified = check_weakly_f_equitable(g, f, QuotientKind::equitable).ok;
  return verdict;
}

}  // namespace hitwalk
