#ifndef MINORCLIQUE_PEELING_HPP
#define MINORCLIQUE_PEELING_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/cliques.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/minors.hpp"

namespace minorclique {

enum class StopReason { small_order, low_missing_degree, clique_exhausted };

inline const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::small_order: return "small_order";
    case StopReason::low_missing_degree: return "low_missing_degree";
    case StopReason::clique_exhausted: return "clique_exhausted";
  }
  return "?";
}

struct StepRecord {
  std::size_t i = 0;  // 1-based step index
  Vertex v = 0;
  VertexSet G;  // vertex set of G_i
  VertexSet D;  // non-neighbours of v in G_i
  VertexSet Y;  // extra deletions between G_i' and G_{i+1}
  std::vector<Vertex> y_order;  // Y in deletion order
  std::size_t n = 0;
  std::size_t d = 0;
  std::int64_t n_prime = 0;  // n + i - t
};

struct PeelingTrace {
  std::size_t t = 0;
  VertexSet clique;
  std::vector<StepRecord> steps;
  StopReason stop = StopReason::clique_exhausted;
  std::size_t r = 0;

  /// The encoding (v_1, ..., v_r).
  std::vector<Vertex> encoding() const {
    std::vector<Vertex> e;
    for (const auto& s : steps) e.push_back(s.v);
    return e;
  }
  const VertexSet& terminal() const { return steps.back().G; }
};

namespace detail {

/// Current vertex set with degrees kept up to date under deletion.
class ShrinkingGraph {
 public:
  explicit ShrinkingGraph(const Graph& g) : g_(g), alive_(VertexSet::full(g.order())), deg_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) deg_[v] = g.degree(v);
  }
  const VertexSet& alive() const { return alive_; }
  std::size_t degree(Vertex v) const { return deg_[v]; }
  void remove(Vertex v) {
    if (!alive_.contains(v)) return;
    alive_.erase(v);
    (g_.neighbors(v) & alive_).for_each([&](Vertex w) { --deg_[w]; });
  }
  /// Minimum degree vertex, ties to the smaller label.
  Vertex argmin() const {
    Vertex best = VertexSet::npos;
    alive_.for_each([&](Vertex v) {
      if (best == VertexSet::npos || deg_[v] < deg_[best]) best = v;
    });
    return best;
  }

 private:
  const Graph& g_;
  VertexSet alive_;
  std::vector<std::size_t> deg_;
};

inline std::optional<StopReason> stop_at(std::size_t i, std::size_t n, std::size_t d, std::size_t t,
                                         std::size_t clique_size) {
  const auto np = static_cast<std::int64_t>(n) + static_cast<std::int64_t>(i) - static_cast<std::int64_t>(t);
  if (np <= 0) return StopReason::small_order;
  // d <= sqrt(np) / 2, compared as 4 d^2 <= np.
  if (4 * static_cast<std::int64_t>(d) * static_cast<std::int64_t>(d) <= np) return StopReason::low_missing_degree;
  if (i == clique_size) return StopReason::clique_exhausted;
  return std::nullopt;
}

}  // namespace detail

/// Runs the peeling process for the clique K. Vertices are deleted one at a
/// time, always a minimum-degree vertex (smallest label on ties), until that
/// vertex lies in K; it becomes the next v_i.
inline PeelingTrace peel(const Graph& g, const VertexSet& clique, std::size_t t) {
  detail::require(t >= 2, "peel needs t >= 2");
  detail::require(clique.universe() == g.order(), "peel: clique is over a different vertex set");
  detail::require(!clique.empty(), "peel: clique must be nonempty");
  detail::require(is_clique(g, clique), "peel: the given vertex set is not a clique");

  PeelingTrace tr;
  tr.t = t;
  tr.clique = clique;
  const std::size_t csize = clique.count();
  detail::ShrinkingGraph cur(g);
  std::vector<Vertex> pending;  // deletions since the last v_i

  auto select = [&]() {
    pending.clear();
    while (true) {
      Vertex v = cur.argmin();
      if (clique.contains(v)) return v;
      cur.remove(v);
      pending.push_back(v);
    }
  };

  Vertex v = select();
  for (std::size_t i = 1;; ++i) {
    StepRecord s;
    s.i = i;
    s.v = v;
    s.G = cur.alive();
    s.D = s.G - g.neighbors(v);
    s.D.erase(v);
    s.n = s.G.count();
    s.d = s.D.count();
    s.n_prime = static_cast<std::int64_t>(s.n) + static_cast<std::int64_t>(i) - static_cast<std::int64_t>(t);
    s.Y = VertexSet(g.order());
    if (i >= 2) {
      auto& prev = tr.steps.back();
      prev.y_order = pending;
      prev.Y = VertexSet::of(g.order(), pending);
    }
    tr.steps.push_back(std::move(s));
    if (auto why = detail::stop_at(i, tr.steps.back().n, tr.steps.back().d, t, csize)) {
      tr.stop = *why;
      tr.r = i;
      return tr;
    }
    cur.remove(v);
    tr.steps.back().D.for_each([&](Vertex w) { cur.remove(w); });
    v = select();
  }
}

/// Re-derives every G_i, v_i, D_i and Y_i from v_1 and the orders n_2..n_r
/// alone, and reports whether the result matches the trace.
inline bool replay_matches(const Graph& g, const PeelingTrace& tr) {
  if (tr.steps.empty()) return false;
  detail::ShrinkingGraph cur(g);
  const Vertex v1 = tr.steps[0].v;
  while (true) {
    Vertex m = cur.argmin();
    if (m == VertexSet::npos) return false;
    if (m == v1) break;
    cur.remove(m);
  }
  Vertex v = v1;
  for (std::size_t idx = 0; idx < tr.steps.size(); ++idx) {
    const auto& s = tr.steps[idx];
    VertexSet D = cur.alive() - g.neighbors(v);
    D.erase(v);
    if (!(cur.alive() == s.G) || v != s.v || !(D == s.D)) return false;
    if (idx + 1 == tr.steps.size()) return s.Y.empty();
    cur.remove(v);
    D.for_each([&](Vertex w) { cur.remove(w); });
    std::vector<Vertex> ys;
    while (cur.alive().count() > tr.steps[idx + 1].n) {
      Vertex m = cur.argmin();
      cur.remove(m);
      ys.push_back(m);
    }
    if (ys != s.y_order) return false;
    v = cur.argmin();
  }
  return false;
}

/// Checks the structural facts of the peeling process (labelled selection,
/// deletion, clique-survives, common-neighbourhood, disk-property, last-y-degree,
/// last-y-overlap) plus the bookkeeping invariants: stop rule, layer partition
/// and Y_r empty. The disk property is checked on random subsets, `samples` of
/// each size per step. Returns human-readable
/// violations; empty means the trace is sound.
inline std::vector<std::string> verify_basic_facts(const PeelingTrace& tr, const Graph& g, std::uint64_t seed = 0,
                                                   std::size_t samples = 8) {
  const std::size_t N = g.order();
  if (tr.clique.universe() != N || tr.steps.empty())
    throw PreconditionError("verify_basic_facts: trace does not belong to this graph");
  for (const auto& s : tr.steps)
    if (s.G.universe() != N || s.D.universe() != N || s.Y.universe() != N || s.v >= N)
      throw PreconditionError("verify_basic_facts: trace does not belong to this graph");

  std::vector<std::string> out;
  auto fail = [&](const std::string& fact, std::size_t i, const std::string& what) {
    out.push_back(fact + " at step " + std::to_string(i) + ": " + what);
  };
  std::mt19937_64 rng(seed);
  const std::size_t r = tr.steps.size();
  if (tr.r != r) fail("trace", r, "r disagrees with the number of steps");
  VertexSet common = VertexSet::full(N);
  VertexSet used_k(N);

  for (std::size_t idx = 0; idx < r; ++idx) {
    const auto& s = tr.steps[idx];
    const std::size_t i = idx + 1;
    auto deg_in = [&](Vertex u, const VertexSet& S) { return g.neighbors(u).intersection_count(S); };

    if (!s.G.contains(s.v)) fail("selection", i, "v_i is not in G_i");
    if (!tr.clique.contains(s.v)) fail("selection", i, "v_i is not in K");
    const std::size_t dv = deg_in(s.v, s.G);
    s.G.for_each([&](Vertex u) {
      std::size_t du = deg_in(u, s.G);
      if (du < dv) fail("selection", i, "vertex " + std::to_string(u) + " has smaller degree than v_i");
      if (s.n - 1 - du > s.d) fail("selection", i, "vertex " + std::to_string(u) + " has missing degree above d_i");
    });
    VertexSet D = s.G - g.neighbors(s.v);
    D.erase(s.v);
    if (!(D == s.D)) fail("trace", i, "D_i is not the non-neighbourhood of v_i in G_i");
    if (s.n != s.G.count() || s.d != s.D.count()) fail("trace", i, "n_i or d_i disagrees with the sets");
    if (s.n_prime != static_cast<std::int64_t>(s.n) + static_cast<std::int64_t>(i) - static_cast<std::int64_t>(tr.t))
      fail("trace", i, "n'_i != n_i + i - t");

    // Stop rule: only the last step may satisfy a stop condition, and it must.
    auto why = detail::stop_at(i, s.n, s.d, tr.t, tr.clique.count());
    if (idx + 1 < r && why) fail("trace", i, "a stop condition already holds before the last step");
    if (idx + 1 == r && (!why || *why != tr.stop)) fail("trace", i, "stop reason does not match the stop rule");

    used_k.insert(s.v);
    common &= g.neighbors(s.v);

    if (idx + 1 == r) {
      if (!s.Y.empty()) fail("trace", i, "Y_r must be empty");
      if (!(tr.clique - used_k).is_subset_of(s.G) && !(tr.clique - used_k).empty())
        fail("clique-survives", i, "terminal graph misses a vertex of K");
      break;
    }
    const auto& nx = tr.steps[idx + 1];
    // Layer partition and G_{i+1} = G_i \ ({v_i} u D_i u Y_i).
    VertexSet layer = s.D | s.Y;
    layer.insert(s.v);
    if (s.D.intersects(s.Y) || s.Y.contains(s.v)) fail("trace", i, "{v_i}, D_i and Y_i overlap");
    if (!(nx.G == s.G - layer) || !layer.is_subset_of(s.G)) fail("trace", i, "G_{i+1} != G_i minus the layer");
    if (nx.G.contains(s.v) || nx.G.intersects(s.D) || !nx.G.is_subset_of(g.neighbors(s.v)))
      fail("deletion", i, "G_{i+1} contains v_i or one of its non-neighbours");
    if (!(tr.clique - used_k).is_subset_of(nx.G)) fail("clique-survives", i, "G_{i+1} misses a vertex of K");
    if (!nx.G.is_subset_of(common)) fail("common-neighbourhood", i, "G_{i+1} leaves the common neighbourhood of v_1..v_i");
    // Any d_i+1 vertices dominate G_i and any 2d_i+1 are connected; sampled.
    std::vector<Vertex> members = s.G.members();
    for (std::size_t size : {s.d + 1, 2 * s.d + 1}) {
      if (size > members.size()) continue;
      for (std::size_t rep = 0; rep < samples; ++rep) {
        std::shuffle(members.begin(), members.end(), rng);
        VertexSet A = VertexSet::of(N, std::vector<Vertex>(members.begin(), members.begin() + size));
        if (size == s.d + 1) {
          (s.G - A).for_each([&](Vertex u) {
            if (!g.neighbors(u).intersects(A)) fail("disk-property", i, "a vertex of G_i misses a (d_i+1)-subset");
          });
        } else if (!is_connected_subset(g, A)) {
          fail("disk-property", i, "a (2d_i+1)-subset of G_i is disconnected");
        }
      }
    }
    // The last vertex removed in Y_i bounds d_{i+1} from both sides.
    if (!s.Y.empty()) {
      if (s.y_order.empty() || !(VertexSet::of(N, s.y_order) == s.Y)) {
        fail("trace", i, "deletion order of Y_i is missing");
      } else {
        Vertex y = s.y_order.back();
        std::size_t miss_next = nx.G.count() - g.neighbors(y).intersection_count(nx.G);
        if (miss_next < nx.d) fail("last-y-degree", i, "last vertex of Y_i has fewer than d_{i+1} non-neighbours in G_{i+1}");
        std::size_t miss_d = s.D.count() - g.neighbors(y).intersection_count(s.D);
        if (s.d < nx.d || miss_d > s.d - nx.d) fail("last-y-overlap", i, "last vertex of Y_i misses too much of D_i");
      }
    }
  }
  return out;
}

/// n'_i - n'_{i+1} > sqrt(n'_i) / 2 for every i < r, as 4 gap^2 > n'_i with a
/// positive gap; this also forces the sequence to decrease strictly.
inline bool verify_gap(const PeelingTrace& tr) {
  for (std::size_t idx = 0; idx + 1 < tr.steps.size(); ++idx) {
    std::int64_t a = tr.steps[idx].n_prime, b = tr.steps[idx + 1].n_prime;
    if (a < 0) return false;
    std::int64_t gap = a - b;
    if (gap <= 0 || 4 * gap * gap <= a) return false;
  }
  return true;
}

/// ceil(4 sqrt(t) (log2 t)^(1/4)).
inline std::size_t r0_bound(std::size_t t) {
  detail::require(t >= 2, "r0_bound needs t >= 2");
  const double x = 4.0 * std::sqrt(static_cast<double>(t)) * std::sqrt(std::sqrt(std::log2(static_cast<double>(t))));
  return static_cast<std::size_t>(std::ceil(x));
}

/// Number of steps i < r with |Y_i| >= M.
inline std::size_t large_layer_count(const PeelingTrace& tr, double M) {
  std::size_t c = 0;
  for (std::size_t idx = 0; idx + 1 < tr.steps.size(); ++idx)
    if (static_cast<double>(tr.steps[idx].Y.count()) >= M) ++c;
  return c;
}

inline double default_M(std::size_t t) {
  double l = std::log(static_cast<double>(t));
  return l * l;
}

/// One JSON object per step, then {"stop": ..., "r": ...}.
inline std::vector<nlohmann::json> to_json_lines(const PeelingTrace& tr) {
  std::vector<nlohmann::json> lines;
  for (const auto& s : tr.steps)
    lines.push_back({{"i", s.i},
                     {"v", s.v},
                     {"G", s.G.members()},
                     {"D", s.D.members()},
                     {"Y", s.Y.members()},
                     {"n", s.n},
                     {"d", s.d},
                     {"n_prime", s.n_prime}});
  lines.push_back({{"stop", to_string(tr.stop)}, {"r", tr.r}});
  return lines;
}

struct BranchDiskCertificate {
  std::vector<VertexSet> disks;
  VertexSet host_clique;
  VertexSet terminal;
};

/// Disks are nonempty, pairwise disjoint, avoid K and V(G_r), induce connected
/// subgraphs, are pairwise adjacent, and every vertex of K u V(G_r) has a
/// neighbour in each of them.
inline bool validate_branch_certificate(const Graph& g, const BranchDiskCertificate& c) {
  const std::size_t N = g.order();
  if (c.host_clique.universe() != N || c.terminal.universe() != N) return false;
  VertexSet anchors = c.host_clique | c.terminal;
  VertexSet used(N);
  for (const auto& A : c.disks) {
    if (A.universe() != N || A.empty()) return false;
    if (A.intersects(anchors) || A.intersects(used)) return false;
    if (!is_connected_subset(g, A)) return false;
    bool all = true;
    anchors.for_each([&](Vertex u) { all = all && g.neighbors(u).intersects(A); });
    if (!all) return false;
    used |= A;
  }
  for (std::size_t a = 0; a < c.disks.size(); ++a)
    for (std::size_t b = a + 1; b < c.disks.size(); ++b)
      if (!sets_adjacent(g, c.disks[a], c.disks[b])) return false;
  return true;
}

/// Builds extra branch disks from a trace: (a) every Y_i with
/// |Y_i| >= 2 d_i + 1, and (b) within each bracket of layers 2..r-1 (a new
/// bracket starts once d drops to 7/8 of the bracket's first d), disjoint
/// triples D_a u D_{a+1} u D_{a+2} with 8 d_{a+2} >= 7 d_a.
inline BranchDiskCertificate greedy_branch_set(const Graph& g, const PeelingTrace& tr) {
  if (tr.steps.empty() || tr.r != tr.steps.size() || tr.clique.universe() != g.order())
    throw PreconditionError("greedy_branch_set: invalid trace");
  BranchDiskCertificate c{{}, tr.clique, tr.terminal()};
  const std::size_t r = tr.r;
  auto d = [&](std::size_t i) { return tr.steps[i - 1].d; };

  for (std::size_t i = 1; i < r; ++i) {
    const auto& s = tr.steps[i - 1];
    if (s.Y.count() >= 2 * s.d + 1) c.disks.push_back(s.Y);
  }

  std::size_t start = 2;
  while (start + 2 <= r - 1) {
    std::size_t end = start + 1;  // first index of the next bracket
    while (end <= r - 1 && 8 * d(end) > 7 * d(start)) ++end;
    for (std::size_t a = start; a + 2 < end; a += 3) {
      if (8 * d(a + 2) < 7 * d(a)) continue;
      c.disks.push_back(tr.steps[a - 1].D | tr.steps[a].D | tr.steps[a + 1].D);
    }
    start = end;
  }
  return c;
}

/// K_{r-1+c+|disks|} model: v_1..v_{r-1} and a clique of order c inside G_r as
/// singletons, plus the disks. With no clique given, the vertices of K that
/// survive to G_r are used.
inline BranchDecomposition minor_from_branches(const Graph& g, const PeelingTrace& tr,
                                               const BranchDiskCertificate& cert,
                                               std::optional<VertexSet> terminal_clique = std::nullopt) {
  if (!validate_branch_certificate(g, cert)) throw PreconditionError("minor_from_branches: invalid certificate");
  if (tr.steps.empty()) throw PreconditionError("minor_from_branches: empty trace");
  const std::size_t N = g.order();
  VertexSet early(N);
  for (std::size_t i = 0; i + 1 < tr.steps.size(); ++i) early.insert(tr.steps[i].v);
  VertexSet top = terminal_clique ? *terminal_clique : (tr.clique - early);
  if (!top.is_subset_of(tr.terminal()) || !is_clique(g, top))
    throw PreconditionError("minor_from_branches: terminal clique must be a clique inside G_r");
  BranchDecomposition bd;
  (early | top).for_each([&](Vertex v) { bd.branch_sets.push_back(VertexSet(N, {v})); });
  for (const auto& A : cert.disks) bd.branch_sets.push_back(A);
  if (!is_clique_minor_certificate(g, bd, bd.branch_sets.size()))
    throw PreconditionError("minor_from_branches: inputs do not assemble into a clique minor");
  return bd;
}

/// Largest number of pairwise adjacent, disjoint extra branch disks for the
/// trace's clique, by exhaustive search. Hosts are limited to 12 vertices.
inline std::size_t max_branch_disks_exhaustive(const Graph& g, const PeelingTrace& tr) {
  const std::size_t N = g.order();
  detail::require(N <= 12, "exhaustive branch-disk search is limited to 12 vertices");
  std::vector<std::uint32_t> adj(N, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t anchors = 0;
  (tr.clique | tr.terminal()).for_each([&](Vertex v) { anchors |= 1u << v; });
  const std::uint32_t free = ((1u << N) - 1) & ~anchors;
  auto connected = [&](std::uint32_t s) {
    std::uint32_t seen = s & (~s + 1), frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t x = frontier; x; x &= x - 1) next |= adj[std::countr_zero(x)];
      frontier = next & s & ~seen;
      seen |= frontier;
    }
    return seen == s;
  };
  auto nbhd = [&](std::uint32_t s) {
    std::uint32_t nb = 0;
    for (std::uint32_t x = s; x; x &= x - 1) nb |= adj[std::countr_zero(x)];
    return nb;
  };
  std::vector<std::uint32_t> disks;
  for (std::uint32_t s = free; s; s = (s - 1) & free) {
    if (!connected(s)) continue;
    bool ok = true;
    for (std::uint32_t x = anchors; x && ok; x &= x - 1)
      if (!(adj[std::countr_zero(x)] & s)) ok = false;
    if (ok) disks.push_back(s);
  }
  std::size_t best = 0;
  auto search = [&](auto&& self, std::size_t from, std::uint32_t used, std::vector<std::uint32_t>& chosen) -> void {
    best = std::max(best, chosen.size());
    for (std::size_t i = from; i < disks.size(); ++i) {
      std::uint32_t s = disks[i];
      if (s & used) continue;
      std::uint32_t nb = nbhd(s);
      bool adjacent_all = true;
      for (auto c : chosen)
        if (!(nb & c)) {
          adjacent_all = false;
          break;
        }
      if (!adjacent_all) continue;
      chosen.push_back(s);
      self(self, i + 1, used | s, chosen);
      chosen.pop_back();
    }
  };
  std::vector<std::uint32_t> chosen;
  search(search, 0, 0, chosen);
  return best;
}

/// Minimum of s(K) over all k-cliques K with r(K) = r and R_M(K) = r_l, or
/// nullopt when no clique has those indices (the +infinity convention).
/// Exhaustive, hosts of at most 12 vertices.
inline std::optional<std::size_t> s_M_exhaustive(const Graph& g, std::size_t k, std::size_t t, double M,
                                                 std::size_t r, std::size_t r_l) {
  const std::size_t N = g.order();
  detail::require(N <= 12, "s_M_exhaustive is limited to 12 vertices");
  std::optional<std::size_t> best;
  for (std::uint32_t s = 0; s < (1u << N); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k || k == 0) continue;
    VertexSet K(N);
    for (std::uint32_t x = s; x; x &= x - 1) K.insert(static_cast<Vertex>(std::countr_zero(x)));
    if (!is_clique(g, K)) continue;
    PeelingTrace tr = peel(g, K, t);
    if (tr.r != r || large_layer_count(tr, M) != r_l) continue;
    std::size_t v = max_branch_disks_exhaustive(g, tr);
    if (!best || v < *best) best = v;
  }
  return best;
}

}  // namespace minorclique

#endif  // MINORCLIQUE_PEELING_HPP
