#ifndef MINORCLIQUE_CONSTRUCTIONS_HPP
#define MINORCLIQUE_CONSTRUCTIONS_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/big_count.hpp"
#include "minorclique/bounds.hpp"
#include "minorclique/errors.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/log_value.hpp"
#include "minorclique/minors.hpp"
#include "minorclique/turan.hpp"

namespace minorclique {

enum class ConstructionKind { tstar_union, t2_tree, ktminus_union, matching_complement_union };

inline const char* to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::tstar_union: return "tstar_union";
    case ConstructionKind::t2_tree: return "t2_tree";
    case ConstructionKind::ktminus_union: return "ktminus_union";
    case ConstructionKind::matching_complement_union: return "matching_complement_union";
  }
  return "?";
}

inline ConstructionKind construction_kind_from_string(const std::string& s) {
  for (auto k : {ConstructionKind::tstar_union, ConstructionKind::t2_tree, ConstructionKind::ktminus_union,
                 ConstructionKind::matching_complement_union})
    if (s == to_string(k)) return k;
  throw ParseError("unknown construction kind '" + s + "'");
}

/// k is only read by tstar_union, which needs it to pick the optimizer.
struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::tstar_union;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t n = 0;
};

/// Vertex count of one block: T*_t(k), the initial K_{t-2}, K_t^-, or the
/// complement of a perfect matching on 4(t-1)/3 vertices.
inline std::size_t block_order(const ConstructionSpec& s) {
  switch (s.kind) {
    case ConstructionKind::tstar_union:
      detail::require(s.k >= 1 && s.k < s.t, "tstar_union needs 1 <= k < t");
      return 2 * s.t - t_star(s.t, s.k).omega_star - 1;
    case ConstructionKind::t2_tree:
      detail::require(s.t >= 2, "t2_tree needs t >= 2");
      return s.t - 2;
    case ConstructionKind::ktminus_union:
      detail::require(s.t >= 2, "ktminus_union needs t >= 2");
      return s.t;
    case ConstructionKind::matching_complement_union:
      detail::require(s.t >= 4 && s.t % 3 == 1, "matching_complement_union needs t = 1 mod 3 and t >= 4");
      return 4 * (s.t - 1) / 3;
  }
  return 0;
}

inline void validate(const ConstructionSpec& s) {
  const std::size_t b = block_order(s);
  detail::require(s.n >= b, "construction needs n at least the block size " + std::to_string(b));
  if (s.kind == ConstructionKind::matching_complement_union)
    detail::require(s.n % b == 0, "matching_complement_union needs n divisible by 4(t-1)/3");
}

/// Blocks occupy consecutive labels; tstar_union and ktminus_union pad with
/// isolated vertices at the end. Within a K_t^- block the missing edge is
/// between its first two vertices.
inline Graph build(const ConstructionSpec& s, std::size_t cap = kMaterializeCap) {
  validate(s);
  if (s.n > cap)
    throw CapExceeded("construction refused: " + std::to_string(s.n) + " vertices exceeds cap " + std::to_string(cap));
  const std::size_t b = block_order(s);
  switch (s.kind) {
    case ConstructionKind::tstar_union:
    case ConstructionKind::ktminus_union:
    case ConstructionKind::matching_complement_union: {
      Graph block = s.kind == ConstructionKind::tstar_union   ? materialize(t_star(s.t, s.k).spec)
                    : s.kind == ConstructionKind::ktminus_union ? graphs::complete_minus_edge(s.t)
                                                                : graphs::matching_complement(b / 2);
      std::vector<Graph> parts(s.n / b, block);
      if (s.n % b) parts.push_back(Graph(s.n % b));
      return disjoint_union(parts);
    }
    case ConstructionKind::t2_tree: {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < b; ++u)
        for (Vertex v = u + 1; v < b; ++v) edges.emplace_back(u, v);
      for (Vertex w = b; w < s.n; ++w)
        for (Vertex u = 0; u < b; ++u) edges.emplace_back(u, w);
      return Graph(s.n, edges);
    }
  }
  return Graph(0);
}

/// k-cliques of build(s), from the block formulas.
inline BigCount closed_form_count(const ConstructionSpec& s, std::size_t k) {
  validate(s);
  const std::size_t b = block_order(s);
  const BigCount copies = b ? s.n / b : 0;  // b = 0 only for the t = 2 tree
  const auto kk = static_cast<std::int64_t>(k);
  const auto tt = static_cast<std::int64_t>(s.t);
  switch (s.kind) {
    case ConstructionKind::tstar_union: {
      BigCount c = copies * multipartite_k_cliques(t_star(s.t, s.k).spec, k);
      if (k == 1) c += s.n % b;
      if (k == 0) c = 1;
      return c;
    }
    case ConstructionKind::t2_tree:
      if (k == 0) return 1;
      if (k + 1 > s.t) return 0;
      return tree_count(s.t, k, s.n);
    case ConstructionKind::ktminus_union: {
      if (k == 0) return 1;
      BigCount c = copies * (binomial(tt - 1, kk) + binomial(tt - 2, kk - 1));
      if (k == 1) c += s.n % b;
      return c;
    }
    case ConstructionKind::matching_complement_union:
      if (k == 0) return 1;
      return copies * binomial(static_cast<std::int64_t>(b / 2), kk) * pow2(k);
  }
  return 0;
}

/// True iff no connected component has a K_t minor. Isomorphic copies are
/// common, so identical components are searched once.
inline bool components_minor_free(const Graph& g, std::size_t t, const MinorOptions& opt = {}) {
  std::vector<Graph> seen;
  for (const auto& comp : connected_components(g)) {
    Graph h = induced_subgraph(g, comp).graph;
    if (h.order() < t) continue;
    bool dup = false;
    for (const auto& s : seen)
      if (s == h) dup = true;
    if (dup) continue;
    if (has_clique_minor(h, t, opt)) return false;
    seen.push_back(std::move(h));
  }
  return true;
}

inline bool verify_minor_free(const ConstructionSpec& s, const MinorOptions& opt = {}) {
  return components_minor_free(build(s), s.t, opt);
}

inline nlohmann::json to_json(const ConstructionSpec& s) {
  return {{"kind", to_string(s.kind)}, {"t", s.t}, {"k", s.k}, {"n", s.n}};
}

inline ConstructionSpec construction_spec_from_json(const nlohmann::json& j) {
  try {
    ConstructionSpec s;
    s.kind = construction_kind_from_string(j.at("kind").get<std::string>());
    s.t = j.at("t").get<std::size_t>();
    s.k = j.contains("k") ? j.at("k").get<std::size_t>() : 0;
    s.n = j.at("n").get<std::size_t>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad construction spec: ") + e.what());
  }
}

/// Total cliques (all orders, empty included) of the complement of a perfect
/// matching on 2m vertices: each missing pair contributes neither endpoint or
/// exactly one of the two.
inline BigCount matching_complement_total_cliques(std::size_t m) {
  return boost::multiprecision::pow(BigCount(3), static_cast<unsigned>(m));
}

struct WoodCheck {
  std::size_t t = 0;
  double lambda = 0;
  std::size_t k = 0;
  /// Per-vertex k-clique density C(m, k) 2^k / (2m) with m = 2(t-1)/3.
  LogValue construction_count;
  /// Per-vertex conjectured maximum C(t-2, k-1).
  LogValue conjecture_bound;
  bool exact = false;
  bool conclusive = true;
  /// construction_count > conjecture_bound; meaningful only when conclusive.
  bool verdict = false;
};

inline constexpr std::size_t kWoodExactMaxT = 3000;
inline constexpr double kWoodMargin = 1e-6;

inline WoodCheck wood_counterexample_check(std::size_t t, double lambda) {
  detail::require(lambda > 1.0 / 3.0 && lambda < 1.0, "check-wood needs 1/3 < lambda < 1");
  detail::require(t >= 4 && t % 3 == 1, "check-wood needs t = 1 mod 3 and t >= 4");
  WoodCheck w;
  w.t = t;
  w.lambda = lambda;
  w.k = static_cast<std::size_t>(std::llround(lambda * static_cast<double>(t)));
  detail::require(w.k >= 1 && w.k < t, "check-wood needs 1 <= round(lambda t) < t");
  const auto m = static_cast<std::int64_t>(2 * (t - 1) / 3);
  const auto kk = static_cast<std::int64_t>(w.k), tt = static_cast<std::int64_t>(t);
  if (t <= kWoodExactMaxT) {
    BigCount lhs = binomial(m, kk) * pow2(w.k);
    BigCount rhs = binomial(tt - 2, kk - 1);
    w.construction_count = lhs == 0 ? LogValue::zero() : LogValue::of(lhs) / LogValue::of(static_cast<double>(2 * m));
    w.conjecture_bound = LogValue::of(rhs);
    w.exact = true;
    w.verdict = lhs > rhs * (2 * m);
    return w;
  }
  w.construction_count =
      log_binomial(m, kk) * LogValue::from_log2(static_cast<double>(kk)) / LogValue::of(static_cast<double>(2 * m));
  w.conjecture_bound = log_binomial(tt - 2, kk - 1);
  if (w.construction_count.is_zero()) {
    w.verdict = false;
    return w;
  }
  const double diff = w.construction_count.log2() - w.conjecture_bound.log2();
  w.conclusive = std::fabs(diff) > kWoodMargin;
  w.verdict = diff > 0;
  return w;
}

inline nlohmann::json to_json(const WoodCheck& w) {
  nlohmann::json v = w.conclusive ? nlohmann::json(w.verdict) : nlohmann::json("inconclusive");
  return {{"t", w.t},
          {"lambda", w.lambda},
          {"k", w.k},
          {"construction_count", log_to_json(w.construction_count)},
          {"conjecture_bound", log_to_json(w.conjecture_bound)},
          {"exact", w.exact},
          {"verdict", v}};
}

/// Number of true/false changes along a sequence of conclusive verdicts.
inline std::size_t verdict_flips(const std::vector<WoodCheck>& grid) {
  std::size_t flips = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) flips += grid[i].verdict != grid[i - 1].verdict;
  return flips;
}

}  // namespace minorclique

#endif  // MINORCLIQUE_CONSTRUCTIONS_HPP
