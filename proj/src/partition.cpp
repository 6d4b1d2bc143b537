#include "hitwalk/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitwalk/error.hpp"
#include "hitwalk/walks.hpp"

namespace hitwalk {

std::vector<int> Partition::block_index(int n) const {
  std::vector<int> idx(n, -1);
  for (int b = 0; b < size(); ++b)
    for (int v : blocks[b]) idx[v] = b;
  return idx;
}

Partition make_partition(std::vector<std::vector<int>> blocks, std::optional<int> center, int n) {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw InvalidInput("partition blocks must be non-empty");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 0 || v >= n) throw IndexOutOfRange("partition vertex out of range");
      if (seen[v]) throw InvalidInput("partition blocks are not disjoint");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw InvalidInput("partition does not cover the vertex set");
  if (center) {
    if (blocks.empty() || blocks[0] != std::vector<int>{*center})
      throw InvalidInput("stabilized partition must have blocks[0] = {center}");
  }
  Partition p;
  p.blocks = std::move(blocks);
  p.center = center;
  return p;
}

namespace {

// Counts of vertex u into each block: plain neighbour counts for the
// equitable kind, Perron-weighted counts divided by nu_u otherwise.
std::vector<double> block_signature(const Graph& g, const std::vector<int>& block_of, int m, int u,
                                    QuotientKind kind, const PerronData* perron) {
  std::vector<double> sig(m, 0.0);
  for (int w = 0; w < g.n; ++w) {
    const double a = g.adj(w, u);
    if (a == 0.0) continue;
    sig[block_of[w]] += kind == QuotientKind::weight ? a * perron->eigenvector[w] : a;
  }
  if (kind == QuotientKind::weight) {
    const double nu = perron->eigenvector[u];
    for (double& s : sig) s /= nu;
  }
  return sig;
}

bool signature_equal(const std::vector<double>& a, const std::vector<double>& b,
                     QuotientKind kind) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (kind == QuotientKind::equitable ? a[i] != b[i] : !approx_equal(a[i], b[i])) return false;
  }
  return true;
}

// Descending lexicographic order; weight signatures compare with tolerance.
bool signature_greater(const std::vector<double>& a, const std::vector<double>& b,
                       QuotientKind kind) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (kind == QuotientKind::equitable) {
      if (a[i] != b[i]) return a[i] > b[i];
    } else if (!approx_equal(a[i], b[i])) {
      return a[i] > b[i];
    }
  }
  return false;
}

EquitableCheck check_partition(const Graph& g, const Partition& p, QuotientKind kind,
                               const PerronData* perron) {
  const int m = p.size();
  const std::vector<int> block_of = p.block_index(g.n);
  for (int v = 0; v < g.n; ++v)
    if (block_of[v] < 0) throw InvalidInput("partition does not cover the vertex set");

  Matrix entries(m, m);
  for (int j = 0; j < m; ++j) {
    const int rep = p.blocks[j][0];
    const std::vector<double> ref = block_signature(g, block_of, m, rep, kind, perron);
    std::vector<double> sum = ref;
    for (std::size_t k = 1; k < p.blocks[j].size(); ++k) {
      const int u = p.blocks[j][k];
      const std::vector<double> sig = block_signature(g, block_of, m, u, kind, perron);
      for (int i = 0; i < m; ++i) {
        const bool same =
            kind == QuotientKind::equitable ? sig[i] == ref[i] : approx_equal(sig[i], ref[i]);
        if (!same) return EquitableCheck{std::nullopt, PartitionWitness{i, rep, u}};
        sum[i] += sig[i];
      }
    }
    // Weight entries are averaged over the block for symmetric rounding; the
    // equitable kind is exact, so the mean equals every summand.
    const double count = static_cast<double>(p.blocks[j].size());
    for (int i = 0; i < m; ++i) entries(i, j) = sum[i] / count;
  }

  QuotientMatrix q;
  q.entries = std::move(entries);
  q.kind = kind;
  for (const auto& block : p.blocks) q.block_sizes.push_back(static_cast<int>(block.size()));
  if (kind == QuotientKind::weight) q.lambda1 = perron->eigenvalue;
  return EquitableCheck{std::move(q), std::nullopt};
}

}  // namespace

EquitableCheck check_equitable(const Graph& g, const Partition& p) {
  return check_partition(g, p, QuotientKind::equitable, nullptr);
}

EquitableCheck check_weight_equitable(const Graph& g, const Partition& p,
                                      const PerronData& perron) {
  return check_partition(g, p, QuotientKind::weight, &perron);
}

void attach_block_weights(QuotientMatrix& q, const Partition& p, const PerronData& perron) {
  if (q.kind != QuotientKind::equitable)
    throw InvalidInput("block weights are attached to equitable quotients only");
  q.nu_block.clear();
  for (const auto& block : p.blocks) {
    const double value = perron.eigenvector[block[0]];
    for (int v : block)
      if (!approx_equal(perron.eigenvector[v], value))
        throw Error("Perron value is not block-constant on an equitable partition");
    q.nu_block.push_back(value);
  }
}

Partition coarsest_refinement(const Graph& g, Partition initial, QuotientKind kind,
                              const PerronData* perron) {
  PerronData local;
  if (kind == QuotientKind::weight && !perron) {
    local = hitwalk::perron(g);
    perron = &local;
  }

  std::vector<std::vector<int>> blocks = initial.blocks;
  while (true) {
    const int m = static_cast<int>(blocks.size());
    std::vector<int> block_of(g.n, -1);
    for (int b = 0; b < m; ++b)
      for (int v : blocks[b]) block_of[v] = b;

    bool split = false;
    std::vector<std::vector<int>> next;
    for (const auto& block : blocks) {
      // Group the block's vertices by signature over the current blocks.
      std::vector<std::vector<double>> group_sig;
      std::vector<std::vector<int>> group_vertices;
      for (int v : block) {
        const std::vector<double> sig = block_signature(g, block_of, m, v, kind, perron);
        bool placed = false;
        for (std::size_t gidx = 0; gidx < group_sig.size(); ++gidx) {
          if (signature_equal(sig, group_sig[gidx], kind)) {
            group_vertices[gidx].push_back(v);
            placed = true;
            break;
          }
        }
        if (!placed) {
          group_sig.push_back(sig);
          group_vertices.push_back({v});
        }
      }
      if (group_vertices.size() == 1) {
        next.push_back(block);
        continue;
      }
      split = true;
      std::vector<std::size_t> order(group_vertices.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (signature_greater(group_sig[a], group_sig[b], kind)) return true;
        if (signature_greater(group_sig[b], group_sig[a], kind)) return false;
        return group_vertices[a][0] < group_vertices[b][0];
      });
      for (std::size_t idx : order) next.push_back(std::move(group_vertices[idx]));
    }
    if (!split) break;
    blocks = std::move(next);
  }

  Partition result = make_partition(std::move(blocks), std::nullopt, g.n);
  if (initial.center && result.blocks[0] == std::vector<int>{*initial.center})
    result.center = initial.center;

  const EquitableCheck check = kind == QuotientKind::equitable
                                   ? check_equitable(g, result)
                                   : check_weight_equitable(g, result, *perron);
  if (!check.ok()) throw Error("refinement did not reach a stable partition");
  return result;
}

Partition coarsest_stabilized(const Graph& g, int center, QuotientKind kind,
                              const PerronData* perron) {
  if (center < 0 || center >= g.n) throw IndexOutOfRange("center out of range");
  std::vector<int> rest;
  for (int v = 0; v < g.n; ++v)
    if (v != center) rest.push_back(v);
  std::vector<std::vector<int>> blocks{{center}};
  if (!rest.empty()) blocks.push_back(std::move(rest));
  Partition initial = make_partition(std::move(blocks), center, g.n);
  return coarsest_refinement(g, std::move(initial), kind, perron);
}

double hit_via_quotient(const QuotientMatrix& q, int block, double* residual) {
  const int m = q.entries.rows();
  if (block <= 0 || block >= m) throw IndexOutOfRange("block must be in [1, blocks)");
  const Matrix t = column_normalized(q.entries);
  const std::vector<double> h = hitting_vector(drop_index(t, 0), residual);
  return h[block - 1];
}

}  // namespace hitwalk
