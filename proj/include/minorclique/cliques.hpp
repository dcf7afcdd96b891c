#ifndef MINORCLIQUE_CLIQUES_HPP
#define MINORCLIQUE_CLIQUES_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "minorclique/big_count.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"

namespace minorclique {

/// Vertices sorted so that each one has the fewest neighbors among those not
/// yet placed (smallest-last); ties go to the smaller label.
inline std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> placed(n, false);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = VertexSet::npos;
    for (Vertex v = 0; v < n; ++v)
      if (!placed[v] && (best == VertexSet::npos || deg[v] < deg[best])) best = v;
    placed[best] = true;
    order.push_back(best);
    g.neighbors(best).for_each([&](Vertex w) {
      if (!placed[w]) --deg[w];
    });
  }
  return order;
}

namespace detail {

/// Elementary symmetric polynomial e_k of the given weights.
inline BigCount elementary_symmetric(const std::vector<BigCount>& w, std::size_t k) {
  if (k > w.size()) return 0;
  std::vector<BigCount> e(k + 1, BigCount(0));
  e[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = std::min(k, i + 1); j >= 1; --j) e[j] += e[j - 1] * w[i];
  return e[k];
}

/// Graph in which each vertex stands for a class of pairwise non-adjacent
/// vertices sharing one open neighborhood. A clique uses at most one member of
/// a class, so k-cliques of the host are weighted k-cliques here.
struct WeightedQuotient {
  Graph graph;  // relabeled by degeneracy order
  std::vector<BigCount> weight;
};

inline WeightedQuotient twin_quotient(const Graph& g) {
  const std::size_t n = g.order();
  std::map<std::vector<std::uint64_t>, std::size_t> cls;
  std::vector<std::size_t> class_of(n);
  std::vector<Vertex> rep;
  std::vector<std::size_t> size;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = cls.emplace(g.neighbors(v).words(), rep.size());
    if (fresh) {
      rep.push_back(v);
      size.push_back(0);
    }
    class_of[v] = it->second;
    ++size[it->second];
  }
  const std::size_t m = rep.size();
  std::vector<Edge> qe;
  for (std::size_t a = 0; a < m; ++a)
    g.neighbors(rep[a]).for_each([&](Vertex w) {
      std::size_t b = class_of[w];
      if (a < b) qe.emplace_back(a, b);
    });
  // Distinct classes can be adjacent through several host edges; keep one.
  std::sort(qe.begin(), qe.end());
  qe.erase(std::unique(qe.begin(), qe.end()), qe.end());
  Graph q(m, qe);

  std::vector<Vertex> ord = degeneracy_order(q);
  std::vector<std::size_t> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[ord[i]] = i;
  std::vector<Edge> re;
  for (auto [a, b] : q.edges()) re.emplace_back(pos[a], pos[b]);
  WeightedQuotient out{Graph(m, re), std::vector<BigCount>(m)};
  for (std::size_t i = 0; i < m; ++i) out.weight[pos[i]] = size[i];
  return out;
}

inline BigCount count_weighted(const WeightedQuotient& q, const VertexSet& cand, std::size_t j) {
  if (j == 0) return 1;
  if (j == 1) {
    BigCount s = 0;
    cand.for_each([&](Vertex v) { s += q.weight[v]; });
    return s;
  }
  std::size_t c = cand.count();
  if (c < j) return 0;
  if (is_clique(q.graph, cand)) {
    std::vector<BigCount> w;
    w.reserve(c);
    cand.for_each([&](Vertex v) { w.push_back(q.weight[v]); });
    return elementary_symmetric(w, j);
  }
  BigCount total = 0;
  cand.for_each([&](Vertex v) {
    VertexSet sub = cand & q.graph.neighbors(v);
    sub.erase_upto(v);
    if (sub.count() + 1 < j) return;
    BigCount inner = count_weighted(q, sub, j - 1);
    if (inner != 0) total += q.weight[v] * inner;
  });
  return total;
}

}  // namespace detail

/// Exact number of k-vertex cliques. k = 0 gives 1 and k = 1 gives n.
inline BigCount count_k_cliques(const Graph& g, std::size_t k) {
  if (k == 0) return 1;
  if (k == 1) return g.order();
  if (k > g.order()) return 0;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    BigCount total = 0;
    for (const auto& c : comps)
      if (c.count() >= k) total += count_k_cliques(induced_subgraph(g, c).graph, k);
    return total;
  }
  auto q = detail::twin_quotient(g);
  return detail::count_weighted(q, q.graph.all_vertices(), k);
}

/// A maximum clique, found by branch and bound with greedy-colouring bounds.
/// Deterministic for a given graph.
inline VertexSet maximum_clique(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet best(n), current(n);
  std::size_t best_size = 0;

  auto expand = [&](auto&& self, VertexSet cand, std::size_t depth) -> void {
    // Greedy colouring of cand gives an upper bound on the clique it can add.
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = cand;
    std::size_t col = 0;
    while (!uncoloured.empty()) {
      ++col;
      VertexSet avail = uncoloured;
      for (Vertex v = avail.first(); v != VertexSet::npos; v = avail.next(v + 1)) {
        order.push_back(v);
        colour.push_back(col);
        uncoloured.erase(v);
        avail -= g.neighbors(v);
        avail.erase(v);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (depth + colour[idx] <= best_size) return;
      Vertex v = order[idx];
      current.insert(v);
      VertexSet next = cand & g.neighbors(v);
      if (next.empty()) {
        if (depth + 1 > best_size) {
          best_size = depth + 1;
          best = current;
        }
      } else {
        self(self, next, depth + 1);
      }
      current.erase(v);
      cand.erase(v);
    }
  };
  if (n > 0) expand(expand, g.all_vertices(), 0);
  return best;
}

/// Order of the largest clique; 0 only for the graph with no vertices.
inline std::size_t clique_number(const Graph& g) { return maximum_clique(g).count(); }

/// n - delta - 1, the largest degree of the complement.
inline std::size_t max_missing_degree(const Graph& g) {
  detail::require(g.order() >= 1, "max_missing_degree needs at least one vertex");
  std::size_t delta = g.order();
  for (Vertex v = 0; v < g.order(); ++v) delta = std::min(delta, g.degree(v));
  return g.order() - delta - 1;
}

/// A maximal clique grown greedily along a uniformly shuffled vertex order.
template <typename Rng>
VertexSet random_maximal_clique(const Graph& g, Rng& rng) {
  std::vector<Vertex> order = g.all_vertices().members();
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet k(g.order());
  for (Vertex v : order)
    if (k.is_subset_of(g.neighbors(v))) k.insert(v);
  return k;
}

}  // namespace minorclique

#endif  // MINORCLIQUE_CLIQUES_HPP
