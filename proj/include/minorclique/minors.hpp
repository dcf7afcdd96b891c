#ifndef MINORCLIQUE_MINORS_HPP
#define MINORCLIQUE_MINORS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/cliques.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"

namespace minorclique {

/// Disjoint connected vertex sets of a host graph.
struct BranchDecomposition {
  std::vector<VertexSet> branch_sets;
};

struct MinorOptions {
  /// Exhaustive search refuses graphs with more vertices than this (at most 64).
  std::size_t max_vertices = 14;
  /// Skip orders above floor((n + omega) / 2). Any K_m minor has at most omega
  /// singleton branch sets and the rest use two or more vertices each, so the
  /// bound always holds. Turn it off to force a genuinely exhaustive refutation.
  bool use_order_clique_bound = true;
};

/// Disjoint nonempty sets, each inducing a connected subgraph.
inline bool is_branch_decomposition(const Graph& g, const BranchDecomposition& bd) {
  VertexSet used(g.order());
  for (const auto& b : bd.branch_sets) {
    bool inside = true;
    b.for_each([&](Vertex v) { inside = inside && v < g.order(); });
    if (!inside || b.empty()) return false;
    VertexSet local = VertexSet::of(g.order(), b.members());
    if (local.intersects(used)) return false;
    if (!is_connected_subset(g, local)) return false;
    used |= local;
  }
  return true;
}

/// Independent check that bd witnesses a K_m minor: m sets, valid
/// decomposition, and a cross edge between every pair.
inline bool is_clique_minor_certificate(const Graph& g, const BranchDecomposition& bd, std::size_t m) {
  if (bd.branch_sets.size() != m || !is_branch_decomposition(g, bd)) return false;
  std::vector<VertexSet> local;
  for (const auto& b : bd.branch_sets) local.push_back(VertexSet::of(g.order(), b.members()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!sets_adjacent(g, local[i], local[j])) return false;
  return true;
}

inline nlohmann::json to_json(const BranchDecomposition& bd) {
  nlohmann::json sets = nlohmann::json::array();
  for (const auto& b : bd.branch_sets) sets.push_back(b.members());
  return nlohmann::json{{"branch_sets", sets}};
}

inline BranchDecomposition branch_decomposition_from_json(const nlohmann::json& j, std::size_t universe) {
  if (!j.is_object() || !j.contains("branch_sets") || !j["branch_sets"].is_array())
    throw ParseError("certificate JSON: expected {\"branch_sets\": [[...], ...]}");
  BranchDecomposition bd;
  for (const auto& s : j["branch_sets"]) {
    if (!s.is_array()) throw ParseError("certificate JSON: each branch set must be an array");
    VertexSet b(universe);
    for (const auto& v : s) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
          static_cast<std::size_t>(v.get<std::int64_t>()) >= universe)
        throw ParseError("certificate JSON: vertex out of range");
      b.insert(static_cast<Vertex>(v.get<std::int64_t>()));
    }
    bd.branch_sets.push_back(std::move(b));
  }
  return bd;
}

namespace detail {

/// Exhaustive K_m-minor search on one connected graph with at most 64
/// vertices. Failed states are remembered across calls, which is what makes
/// descending m cheap.
class MinorSearcher {
 public:
  explicit MinorSearcher(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (Vertex v = 0; v < n_; ++v) g.neighbors(v).for_each([&](Vertex w) { adj_[v] |= bit(w); });
  }

  /// Branch sets as masks, or nullopt when no K_m minor exists.
  std::optional<std::vector<std::uint64_t>> find(std::size_t m) {
    chosen_.clear();
    demands_.clear();
    if (m == 0) return std::vector<std::uint64_t>{};
    std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
    if (place(all, m)) return chosen_;
    return std::nullopt;
  }

  std::size_t memo_size() const { return failed_.size(); }

 private:
  static std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }
  static int pc(std::uint64_t x) { return std::popcount(x); }

  struct Key {
    std::uint64_t avail;
    std::size_t rem;
    std::vector<std::uint64_t> demands;
    bool operator==(const Key& o) const { return avail == o.avail && rem == o.rem && demands == o.demands; }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = k.avail * 0x9E3779B97F4A7C15ull ^ (k.rem + 0x632BE59BD9B4E019ull);
      for (auto d : k.demands) h = (h ^ d) * 0xBF58476D1CE4E5B9ull + (h >> 29);
      return static_cast<std::size_t>(h);
    }
  };

  // Every future branch set lies in avail and must meet each placed set's
  // neighbourhood. Demands that contain another demand are implied by it.
  Key canonical(std::uint64_t avail, std::size_t rem) const {
    std::vector<std::uint64_t> d;
    for (auto x : demands_) d.push_back(x & avail);
    std::sort(d.begin(), d.end(), [](std::uint64_t a, std::uint64_t b) {
      return pc(a) != pc(b) ? pc(a) < pc(b) : a < b;
    });
    d.erase(std::unique(d.begin(), d.end()), d.end());
    std::vector<std::uint64_t> minimal;
    for (auto x : d) {
      bool implied = false;
      for (auto y : minimal)
        if ((y & x) == y) {
          implied = true;
          break;
        }
      if (!implied) minimal.push_back(x);
    }
    std::sort(minimal.begin(), minimal.end());
    return Key{avail, rem, std::move(minimal)};
  }

  bool place(std::uint64_t avail, std::size_t rem) {
    if (rem == 0) return true;
    if (static_cast<std::size_t>(pc(avail)) < rem) return false;
    for (auto d : demands_)
      if (static_cast<std::size_t>(pc(d & avail)) < rem) return false;
    std::size_t edges2 = 0;
    for (std::uint64_t a = avail; a; a &= a - 1) edges2 += pc(adj_[std::countr_zero(a)] & avail);
    if (edges2 / 2 < rem * (rem - 1) / 2) return false;

    Key key = canonical(avail, rem);
    if (failed_.count(key)) return false;

    for (std::uint64_t rest = avail; rest; rest &= rest - 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
      std::uint64_t u = rest;  // avail restricted to labels >= v
      if (static_cast<std::size_t>(pc(u)) < rem) break;
      bool feasible = true;
      for (auto d : demands_)
        if (static_cast<std::size_t>(pc(d & u)) < rem) feasible = false;
      if (!feasible) break;

      std::size_t max_size = static_cast<std::size_t>(pc(u)) - (rem - 1);
      std::vector<std::uint64_t> sets;
      enumerate(bit(v), adj_[v] & u & ~bit(v), 0, u, max_size, sets);
      std::stable_sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) { return pc(a) < pc(b); });
      for (auto s : sets) {
        bool touches_all = true;
        for (auto d : demands_)
          if (!(d & s)) {
            touches_all = false;
            break;
          }
        if (!touches_all) continue;
        std::uint64_t nb = 0;
        for (std::uint64_t x = s; x; x &= x - 1) nb |= adj_[std::countr_zero(x)];
        chosen_.push_back(s);
        demands_.push_back(nb & ~s);
        if (place(u & ~s, rem - 1)) return true;
        chosen_.pop_back();
        demands_.pop_back();
      }
    }
    if (failed_.size() > kMemoLimit) failed_.clear();
    failed_.insert(std::move(key));
    return false;
  }

  // Connected sets containing s, grown through the frontier c while avoiding
  // the excluded vertices x; each set is emitted once.
  void enumerate(std::uint64_t s, std::uint64_t c, std::uint64_t x, std::uint64_t u, std::size_t max_size,
                 std::vector<std::uint64_t>& out) const {
    out.push_back(s);
    if (static_cast<std::size_t>(pc(s)) == max_size) return;
    while (c) {
      std::uint64_t w = c & (~c + 1);
      c &= ~w;
      std::size_t wi = static_cast<std::size_t>(std::countr_zero(w));
      std::uint64_t nc = (c | (adj_[wi] & u)) & ~(s | w | x);
      enumerate(s | w, nc, x, u, max_size, out);
      x |= w;
    }
  }

  static constexpr std::size_t kMemoLimit = 4'000'000;

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::uint64_t> demands_;
  std::unordered_set<Key, KeyHash> failed_;
};

inline void check_cap(const Graph& g, const MinorOptions& opt) {
  if (opt.max_vertices > 64) throw PreconditionError("minor search cap cannot exceed 64 vertices");
  if (g.order() > opt.max_vertices)
    throw CapExceeded("exact minor search refused: " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(opt.max_vertices));
}

struct ComponentSearch {
  InducedSubgraph sub;
  std::size_t edges;
  std::size_t omega;
  MinorSearcher searcher;

  explicit ComponentSearch(InducedSubgraph s)
      : sub(std::move(s)), edges(sub.graph.edge_count()), omega(clique_number(sub.graph)), searcher(sub.graph) {}

  std::size_t upper_bound(const MinorOptions& opt) const {
    std::size_t n = sub.graph.order(), m = 1;
    while (m + 1 <= n && (m + 1) * m / 2 <= edges) ++m;
    if (opt.use_order_clique_bound) m = std::min(m, (n + omega) / 2);
    return m;
  }

  BranchDecomposition lift(const std::vector<std::uint64_t>& masks, std::size_t host_order) const {
    BranchDecomposition bd;
    for (auto s : masks) {
      VertexSet b(host_order);
      for (std::uint64_t x = s; x; x &= x - 1) b.insert(sub.original[std::countr_zero(x)]);
      bd.branch_sets.push_back(std::move(b));
    }
    std::sort(bd.branch_sets.begin(), bd.branch_sets.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return bd;
  }

  std::optional<BranchDecomposition> find(std::size_t m, const MinorOptions& opt, std::size_t host_order) {
    if (m > upper_bound(opt)) return std::nullopt;
    if (m <= omega) {
      VertexSet k = maximum_clique(sub.graph);
      std::vector<std::uint64_t> singles;
      k.for_each([&](Vertex v) {
        if (singles.size() < m) singles.push_back(std::uint64_t{1} << v);
      });
      return lift(singles, host_order);
    }
    auto masks = searcher.find(m);
    if (!masks) return std::nullopt;
    return lift(*masks, host_order);
  }
};

}  // namespace detail

/// Exhaustive K_m-minor test. Returns a certificate on success.
/// Throws CapExceeded when g has more than opt.max_vertices vertices.
inline std::optional<BranchDecomposition> has_clique_minor(const Graph& g, std::size_t m,
                                                           const MinorOptions& opt = {}) {
  detail::check_cap(g, opt);
  if (m == 0) return BranchDecomposition{};
  for (const auto& comp : connected_components(g)) {
    detail::ComponentSearch cs(induced_subgraph(g, comp));
    if (auto bd = cs.find(m, opt, g.order())) return bd;
  }
  return std::nullopt;
}

/// Largest m with a K_m minor, together with a certificate for it.
struct HadwigerResult {
  std::size_t value = 0;
  BranchDecomposition certificate;
};

inline HadwigerResult hadwiger_with_certificate(const Graph& g, const MinorOptions& opt = {}) {
  detail::check_cap(g, opt);
  HadwigerResult best;
  for (const auto& comp : connected_components(g)) {
    detail::ComponentSearch cs(induced_subgraph(g, comp));
    // The largest clique is always a minor, so the descent can stop there.
    const std::size_t lo = std::max(best.value, cs.omega);
    for (std::size_t m = cs.upper_bound(opt); m > lo; --m) {
      if (auto bd = cs.find(m, opt, g.order())) {
        best = {m, *bd};
        break;
      }
    }
    if (cs.omega > best.value) best = {cs.omega, *cs.find(cs.omega, opt, g.order())};
  }
  return best;
}

inline std::size_t hadwiger_number(const Graph& g, const MinorOptions& opt = {}) {
  return hadwiger_with_certificate(g, opt).value;
}

/// Dense in the sense n >= omega + 2*Dbar^2 + 2, or Dbar <= 1.
inline bool is_dense(const Graph& g) {
  const std::size_t dbar = max_missing_degree(g);
  if (dbar <= 1) return true;
  return g.order() >= clique_number(g) + 2 * dbar * dbar + 2;
}

/// floor((n + omega) / 2), the Hadwiger number of a dense graph.
inline std::size_t dense_hadwiger(const Graph& g) {
  if (!is_dense(g)) throw PreconditionError("dense_hadwiger: graph is not dense");
  return (g.order() + clique_number(g)) / 2;
}

inline bool in_family_G(const Graph& g, std::size_t s) { return (g.order() + clique_number(g)) / 2 + 1 <= s; }

inline bool in_family_H(const Graph& g, std::size_t s, std::size_t m, const MinorOptions& opt = {}) {
  if (g.order() > m) return false;
  return hadwiger_number(g, opt) <= s;
}

}  // namespace minorclique

#endif  // MINORCLIQUE_MINORS_HPP
