#ifndef MINORCLIQUE_GRAPH_HPP
#define MINORCLIQUE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "minorclique/errors.hpp"
#include "minorclique/vertex_set.hpp"

namespace minorclique {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with bitset adjacency rows.
/// Immutable once constructed; every constructor validates symmetry and the
/// absence of self-loops.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  /// Throws PreconditionError on out-of-range endpoints, self-loops or repeated pairs.
  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n = " + std::to_string(n));
      if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
      if (adj_[u].contains(v))
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") listed twice");
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  /// From adjacency rows; rows must be symmetric and loop-free.
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {
    const std::size_t n = adj_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (adj_[i].universe() != n) throw PreconditionError("adjacency row has wrong universe");
      if (adj_[i].contains(i)) throw PreconditionError("self-loop at vertex " + std::to_string(i));
      adj_[i].for_each([&](Vertex j) {
        if (!adj_[j].contains(i))
          throw PreconditionError("asymmetric adjacency between " + std::to_string(i) + " and " +
                                  std::to_string(j));
      });
    }
  }

  std::size_t order() const { return adj_.size(); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (const auto& r : adj_) s += r.count();
    return s / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      adj_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::full(order()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<VertexSet> adj_;
};

/// Induced subgraph with its relabeling: vertex i of `graph` is `original[i]` of the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) {
    // Members beyond the host order are an error; a smaller universe is fine.
    s.for_each([&](Vertex v) {
      if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " not in host graph");
    });
  }
  InducedSubgraph out;
  out.original = s.members();
  if (!out.original.empty() && out.original.back() >= g.order())
    throw PreconditionError("vertex " + std::to_string(out.original.back()) + " not in host graph");
  const std::size_t m = out.original.size();
  std::vector<std::size_t> index(g.order(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < m; ++i) index[out.original[i]] = i;
  std::vector<VertexSet> rows(m, VertexSet(m));
  for (std::size_t i = 0; i < m; ++i)
    g.neighbors(out.original[i]).for_each([&](Vertex w) {
      if (index[w] != static_cast<std::size_t>(-1)) rows[i].insert(index[w]);
    });
  out.graph = Graph(std::move(rows));
  return out;
}

inline Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> rows;
  rows.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    VertexSet r = VertexSet::full(n) - g.neighbors(v);
    r.erase(v);
    rows.push_back(std::move(r));
  }
  return Graph(std::move(rows));
}

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
inline Graph disjoint_union(const std::vector<Graph>& parts) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.order();
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (auto [u, v] : p.edges()) edges.emplace_back(u + offset, v + offset);
    offset += p.order();
  }
  return Graph(n, edges);
}

/// Vertex sets of the connected components, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> comps;
  VertexSet seen(n);
  for (Vertex s = 0; s < n; ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(n), frontier(n, {s});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(n);
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      frontier = next - comp;
    }
    seen |= comp;
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// True iff the subgraph induced by s is connected (the empty set is not).
inline bool is_connected_subset(const Graph& g, const VertexSet& s) {
  Vertex start = s.first();
  if (start == VertexSet::npos) return false;
  VertexSet reached(g.order(), {start}), frontier = reached;
  while (!frontier.empty()) {
    VertexSet next(g.order());
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    next &= s;
    frontier = next - reached;
    reached |= frontier;
  }
  return reached == (s & VertexSet::full(g.order()));
}

/// True iff some vertex of a is adjacent to some vertex of b.
inline bool sets_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool hit = false;
  a.for_each([&](Vertex v) {
    if (!hit && g.neighbors(v).intersects(b)) hit = true;
  });
  return hit;
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    if (!ok) return;
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

namespace graphs {

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  if (n <= 2) throw PreconditionError("cycle needs at least 3 vertices");
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, i + 5);
  }
  return Graph(10, e);
}

/// K_n with the single edge {0,1} removed.
inline Graph complete_minus_edge(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Complement of the perfect matching {2i, 2i+1} on 2m vertices.
inline Graph matching_complement(std::size_t m) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 2 * m; ++u)
    for (Vertex v = u + 1; v < 2 * m; ++v)
      if (!(u % 2 == 0 && v == u + 1)) e.emplace_back(u, v);
  return Graph(2 * m, e);
}

/// Erdos-Renyi G(n, p) driven by the caller's engine.
template <typename Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Graph whose pair (u, v), u < v, is present iff the matching bit of mask is
/// set. Pairs are numbered in the order (0,1), (0,2), (1,2), (0,3), ...
inline Graph from_pair_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t b = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++b)
      if ((mask >> b) & 1) e.emplace_back(u, v);
  return Graph(n, e);
}

/// The same graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm.at(u), perm.at(v));
  return Graph(g.order(), e);
}

}  // namespace graphs
}  // namespace minorclique

#endif  // MINORCLIQUE_GRAPH_HPP
