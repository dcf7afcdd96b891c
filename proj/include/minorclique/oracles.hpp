#ifndef MINORCLIQUE_ORACLES_HPP
#define MINORCLIQUE_ORACLES_HPP

// Deliberately naive reference implementations. They share no code with the
// optimized routines they are compared against, apart from the Graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "minorclique/big_count.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"

namespace minorclique::oracle {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  detail::require(g.order() <= 32, "oracle: at most 32 vertices");
  std::vector<std::uint32_t> a(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    a[u] |= 1u << v;
    a[v] |= 1u << u;
  }
  return a;
}

inline bool mask_is_clique(const std::vector<std::uint32_t>& a, std::uint32_t s) {
  for (std::uint32_t x = s; x; x &= x - 1) {
    int v = std::countr_zero(x);
    if ((s & ~(1u << v)) & ~a[v]) return false;
  }
  return true;
}

/// Checks every k-subset (Gosper's hack). Intended for n <= 24.
inline BigCount count_k_cliques(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k == 0) return 1;
  if (k > n) return 0;
  auto a = adjacency_masks(g);
  std::uint64_t count = 0;
  std::uint64_t s = (std::uint64_t{1} << k) - 1, limit = std::uint64_t{1} << n;
  while (s < limit) {
    if (mask_is_clique(a, static_cast<std::uint32_t>(s))) ++count;
    std::uint64_t c = s & (~s + 1), r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return count;
}

inline std::size_t clique_number(const Graph& g) {
  auto a = adjacency_masks(g);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (static_cast<std::size_t>(std::popcount(s)) > best && mask_is_clique(a, static_cast<std::uint32_t>(s)))
      best = static_cast<std::size_t>(std::popcount(s));
  return best;
}

namespace detail_oracle {

// A graph as its sorted list of adjacency masks after compacting labels, so
// that states reached by different contraction orders can share memo entries.
using State = std::vector<std::uint32_t>;

inline State contract(const State& s, int u, int v) {
  // Merge v into u, then drop index v and shift higher labels down.
  const int n = static_cast<int>(s.size());
  State t(s);
  t[u] = (t[u] | t[v]) & ~((1u << u) | (1u << v));
  for (int w = 0; w < n; ++w)
    if (w != u && (t[w] >> v & 1u)) t[w] = (t[w] & ~(1u << v)) | (1u << u);
  State out;
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    std::uint32_t m = t[w];
    std::uint32_t low = m & ((1u << v) - 1), high = (m >> (v + 1)) << v;
    out.push_back(low | high);
  }
  return out;
}

inline State remove(const State& s, int v) {
  State out;
  for (int w = 0; w < static_cast<int>(s.size()); ++w) {
    if (w == v) continue;
    std::uint32_t m = s[w];
    out.push_back((m & ((1u << v) - 1)) | ((m >> (v + 1)) << v));
  }
  return out;
}

inline std::size_t clique_of(const State& s) {
  std::size_t best = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << s.size()); ++x)
    if (static_cast<std::size_t>(std::popcount(x)) > best && mask_is_clique(s, static_cast<std::uint32_t>(x)))
      best = static_cast<std::size_t>(std::popcount(x));
  return best;
}

inline std::size_t best_minor(const State& s, std::map<State, std::size_t>& memo) {
  if (auto it = memo.find(s); it != memo.end()) return it->second;
  std::size_t best = clique_of(s);
  const int n = static_cast<int>(s.size());
  // A minor strictly larger than the largest clique needs a contraction, so
  // only contractions and vertex deletions are explored.
  for (int u = 0; u < n && best < static_cast<std::size_t>(n); ++u) {
    for (int v = u + 1; v < n; ++v)
      if (s[u] >> v & 1u) best = std::max(best, best_minor(contract(s, u, v), memo));
    best = std::max(best, best_minor(remove(s, u), memo));
  }
  memo[s] = best;
  return best;
}

}  // namespace detail_oracle

/// Hadwiger number by exploring every sequence of contractions and vertex
/// deletions. Exponential, intended for n <= 9.
inline std::size_t hadwiger_by_contraction(const Graph& g) {
  detail::require(g.order() <= 10, "contraction oracle: at most 10 vertices");
  std::map<detail_oracle::State, std::size_t> memo;
  return detail_oracle::best_minor(adjacency_masks(g), memo);
}

/// Every labeled graph on n vertices, as pair masks (see graphs::from_pair_mask).
inline std::uint64_t labeled_graph_count(std::size_t n) {
  detail::require(n <= 8, "labeled_graph_count: n <= 8");
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

}  // namespace minorclique::oracle

#endif  // MINORCLIQUE_ORACLES_HPP
