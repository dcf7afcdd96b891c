#ifndef MINORCLIQUE_VERIFY_HPP
#define MINORCLIQUE_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minorclique/bounds.hpp"
#include "minorclique/cliques.hpp"
#include "minorclique/constructions.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/minors.hpp"
#include "minorclique/oracles.hpp"
#include "minorclique/parallel.hpp"
#include "minorclique/peeling.hpp"
#include "minorclique/turan.hpp"

namespace minorclique {

enum class Profile { quick, full };

inline Profile profile_from_string(const std::string& s) {
  if (s == "quick") return Profile::quick;
  if (s == "full") return Profile::full;
  throw PreconditionError("unknown profile '" + s + "' (expected quick or full)");
}

inline const char* to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

/// Deliberately wrong formula constants, used to show the suite notices.
enum class Fault { none, ratio_constant, tree_offset, main_exponent };

inline Fault fault_from_string(const std::string& s) {
  if (s.empty() || s == "none") return Fault::none;
  if (s == "ratio-constant") return Fault::ratio_constant;
  if (s == "tree-offset") return Fault::tree_offset;
  if (s == "main-exponent") return Fault::main_exponent;
  throw PreconditionError("unknown fault '" + s + "'");
}

struct VerifyOptions {
  Profile profile = Profile::quick;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  Fault fault = Fault::none;
};

struct CheckResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct VerifyReport {
  Profile profile = Profile::quick;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return !checks.empty();
  }
};

inline nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"first_failure", c.first_failure}});
  return {{"schema", "minorclique-verify/1"},
          {"profile", to_string(r.profile)},
          {"seed", r.seed},
          {"passed", r.passed()},
          {"checks", checks}};
}

namespace detail {

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { res_.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& why) {
    ++res_.cases;
    if (ok) return;
    if (res_.failures++ == 0) res_.first_failure = why();
  }
  /// Merge per-instance outcomes produced by parallel_map, in index order.
  void merge(const std::vector<std::optional<std::string>>& outcomes) {
    for (const auto& o : outcomes) expect(!o, [&] { return *o; });
  }
  CheckResult done() && { return std::move(res_); }

 private:
  CheckResult res_;
};

// splitmix64 finalizer, so neighbouring indices get unrelated streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return mix64(mix64(mix64(seed) ^ salt) ^ index);
}

inline std::string graph_tag(const Graph& g) { return "graph6 " + serialize_graph(g, GraphFormat::graph6); }

inline void check_counts(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t exhaustive_n = o.profile == Profile::quick ? 5 : 6;
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      bool ok = true;
      for (std::size_t k = 0; k <= n && ok; ++k) ok = count_k_cliques(g, k) == oracle::count_k_cliques(g, k);
      c.expect(ok, [&] { return graph_tag(g) + ": clique counts disagree"; });
    }
  const std::size_t samples = o.profile == Profile::quick ? 100 : 1000;
  c.merge(parallel_map(
      samples,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(instance_seed(o.seed, 1, i));
        Graph g = graphs::random_graph(7 + i % 4, 0.2 + 0.7 * static_cast<double>(i % 8) / 7.0, rng);
        for (std::size_t k = 0; k <= g.order(); ++k)
          if (count_k_cliques(g, k) != oracle::count_k_cliques(g, k))
            return graph_tag(g) + ": count disagrees at k = " + std::to_string(k);
        if (clique_number(g) != oracle::clique_number(g)) return graph_tag(g) + ": clique number disagrees";
        return std::nullopt;
      },
      o.threads));
}

inline void check_io(const VerifyOptions& o, CheckBuilder& c) {
  std::mt19937_64 rng(instance_seed(o.seed, 2, 0));
  const std::size_t samples = o.profile == Profile::quick ? 100 : 500;
  for (std::size_t i = 0; i < samples; ++i) {
    Graph g = graphs::random_graph(i % 70, 0.4, rng);
    for (auto fmt : {GraphFormat::graph6, GraphFormat::edge_list_json})
      c.expect(parse_graph(serialize_graph(g, fmt), fmt) == g, [&] { return graph_tag(g) + ": round trip failed"; });
  }
}

inline void check_hadwiger(const VerifyOptions& o, CheckBuilder& c) {
  MinorOptions ex;
  ex.use_order_clique_bound = false;
  const std::size_t exhaustive_n = o.profile == Profile::quick ? 5 : 6;
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      auto r = hadwiger_with_certificate(g, ex);
      c.expect(r.value == oracle::hadwiger_by_contraction(g) && is_clique_minor_certificate(g, r.certificate, r.value),
               [&] { return graph_tag(g) + ": Hadwiger number or certificate wrong"; });
    }
  const std::size_t samples = o.profile == Profile::quick ? 20 : 200;
  c.merge(parallel_map(
      samples,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(instance_seed(o.seed, 3, i));
        Graph g = graphs::random_graph(7 + i % 3, 0.25 + 0.5 * static_cast<double>(i % 5) / 4.0, rng);
        if (hadwiger_number(g) != oracle::hadwiger_by_contraction(g)) return graph_tag(g) + ": Hadwiger number wrong";
        return std::nullopt;
      },
      o.threads));
}

inline void check_dense(const VerifyOptions& o, CheckBuilder& c) {
  MinorOptions ex;
  ex.use_order_clique_bound = false;
  const std::size_t exhaustive_n = o.profile == Profile::quick ? 6 : 7;
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      if (!is_dense(g)) continue;
      c.expect(dense_hadwiger(g) == hadwiger_number(g, ex), [&] { return graph_tag(g) + ": dense formula wrong"; });
    }
  const std::size_t samples = o.profile == Profile::quick ? 50 : 500;
  c.merge(parallel_map(
      samples,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(instance_seed(o.seed, 4, i));
        for (;;) {
          Graph g = complement(graphs::random_graph(8 + i % 3, 0.12, rng));
          if (!is_dense(g)) continue;
          if (dense_hadwiger(g) != hadwiger_number(g, ex)) return graph_tag(g) + ": dense formula wrong";
          return std::nullopt;
        }
      },
      o.threads));
}

inline void check_turan_minor_free(const VerifyOptions& o, CheckBuilder& c) {
  MinorOptions ex;
  ex.use_order_clique_bound = false;
  const std::size_t top = o.profile == Profile::quick ? 6 : 7;
  for (std::size_t t = 2; t <= top; ++t)
    for (std::size_t l = 1; l < t; ++l)
      c.expect(!has_clique_minor(materialize(turan_spec(2 * t - l - 1, l)), t, ex), [&] {
        return "T(" + std::to_string(2 * t - l - 1) + "," + std::to_string(l) + ") has a K_" + std::to_string(t);
      });
}

inline void check_zykov(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t top = o.profile == Profile::quick ? 5 : 6;
  for (std::size_t n = 1; n <= top; ++n) {
    std::vector<std::vector<BigCount>> best(n + 1, std::vector<BigCount>(n + 1, BigCount(0)));
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      std::size_t w = oracle::clique_number(g);
      for (std::size_t k = 0; k <= w; ++k) {
        BigCount cnt = oracle::count_k_cliques(g, k);
        for (std::size_t ww = w; ww <= n; ++ww) best[ww][k] = std::max(best[ww][k], cnt);
      }
    }
    for (std::size_t w = 1; w <= n; ++w)
      for (std::size_t k = 1; k <= w; ++k)
        c.expect(multipartite_k_cliques(turan_spec(n, w), k) == best[w][k], [&] {
          return "n=" + std::to_string(n) + " w=" + std::to_string(w) + " k=" + std::to_string(k);
        });
  }
}

inline void check_tstar(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t top = o.profile == Profile::quick ? 40 : 120;
  for (std::size_t t = 2; t <= top; ++t)
    for (std::size_t k = 1; k < t; ++k) {
      auto a = t_star(t, k), b = t_star_exact(t, k);
      c.expect(a.omega_star == b.omega_star && a.count == b.count,
               [&] { return "t=" + std::to_string(t) + " k=" + std::to_string(k); });
    }
}

inline void check_sandwich(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t top = o.profile == Profile::quick ? 80 : 200;
  for (std::size_t t = 26; t <= top; ++t)
    for (std::size_t k = 25; k < t; ++k) {
      auto [lo, hi] = c_star_sandwich(t, k);
      double v = log2_of(t_star(t, k).count);
      c.expect(lo.log2() <= v + 1e-9 && v <= hi.log2() + 1e-9,
               [&] { return "t=" + std::to_string(t) + " k=" + std::to_string(k); });
    }
}

inline void check_ratio(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t top = o.profile == Profile::quick ? 30 : 60;
  for (std::size_t t = 3; t <= top; ++t)
    for (std::size_t k = 2; k < t; ++k) {
      BigCount factor = o.fault == Fault::ratio_constant ? BigCount(1) : BigCount(4 * t * t);
      c.expect(t_star(t, k - 1).count <= factor * t_star(t, k).count,
               [&] { return "t=" + std::to_string(t) + " k=" + std::to_string(k); });
    }
}

inline void check_omega(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t top = o.profile == Profile::quick ? 80 : 300;
  // k = 1 is left out: T(2t-2, 1) is the unique optimizer there, so the
  // lower end sqrt(t)/4 fails once t >= 17.
  for (std::size_t t = 3; t <= top; ++t)
    for (std::size_t k = 2; k < t; ++k)
      c.expect(omega_star_range_check(t, k), [&] { return "t=" + std::to_string(t) + " k=" + std::to_string(k); });
}

inline void check_peeling(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t samples = o.profile == Profile::quick ? 60 : 500;
  c.merge(parallel_map(
      samples,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(instance_seed(o.seed, 5, i));
        Graph g = graphs::random_graph(10 + i % 31, 0.3 + 0.6 * static_cast<double>(i % 7) / 6.0, rng);
        VertexSet k = random_maximal_clique(g, rng);
        std::size_t t = 2 + i % 25;
        auto tr = peel(g, k, t);
        auto v = verify_basic_facts(tr, g, i);
        if (!v.empty()) return graph_tag(g) + ": " + v.front();
        if (!verify_gap(tr)) return graph_tag(g) + ": gap property fails";
        if (!replay_matches(g, tr)) return graph_tag(g) + ": replay differs";
        if (tr.r > r0_bound(t)) return graph_tag(g) + ": r exceeds r0_bound";
        return std::nullopt;
      },
      o.threads));
}

inline void check_branches(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t samples = o.profile == Profile::quick ? 30 : 200;
  c.merge(parallel_map(
      samples,
      [&](std::size_t i) -> std::optional<std::string> {
        std::mt19937_64 rng(instance_seed(o.seed, 6, i));
        Graph g = graphs::random_graph(8 + i % 7, 0.5 + 0.45 * static_cast<double>(i % 5) / 4.0, rng);
        auto tr = peel(g, random_maximal_clique(g, rng), 2 + i % 9);
        auto cert = greedy_branch_set(g, tr);
        if (!validate_branch_certificate(g, cert)) return graph_tag(g) + ": invalid branch certificate";
        auto bd = minor_from_branches(g, tr, cert);
        if (!has_clique_minor(g, bd.branch_sets.size())) return graph_tag(g) + ": assembled minor not confirmed";
        return std::nullopt;
      },
      o.threads));
}

inline void check_ht_monotone(const VerifyOptions& o, CheckBuilder& c) {
  const std::int64_t top = o.profile == Profile::quick ? 150 : 500;
  for (std::int64_t t = 3; t <= top; ++t)
    for (std::int64_t k = 2; k < t; ++k) {
      if (3 * (t - k) > t) continue;
      // f(s+1) = f(s) * 2 (t-s-k) / (t-s), exactly.
      BigCount f = binomial(t, k);
      bool ok = true;
      for (std::int64_t s = 0; s < t - k && ok; ++s) {
        BigCount next = f * 2 * (t - s - k) / (t - s);
        ok = next < f && next == count_Ht_exact(t, k, 0, s + 1);
        f = next;
      }
      c.expect(ok, [&] { return "t=" + std::to_string(t) + " k=" + std::to_string(k); });
    }
}

inline std::vector<ConstructionSpec> construction_corpus(std::size_t max_t, std::size_t max_n) {
  std::vector<ConstructionSpec> out;
  for (std::size_t t = 3; t <= max_t; ++t) {
    for (std::size_t k = 1; k < t; ++k) out.push_back({ConstructionKind::tstar_union, t, k, std::min<std::size_t>(max_n, 5 * t)});
    out.push_back({ConstructionKind::t2_tree, t, 0, std::min<std::size_t>(max_n, 4 * t)});
    out.push_back({ConstructionKind::ktminus_union, t, 0, std::min<std::size_t>(max_n, 4 * t + 1)});
    if (t % 3 == 1 && t >= 4) {
      std::size_t b = 4 * (t - 1) / 3;
      out.push_back({ConstructionKind::matching_complement_union, t, 0, b * std::max<std::size_t>(1, max_n / (4 * b))});
    }
  }
  return out;
}

inline void check_closed_forms(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t max_t = o.profile == Profile::quick ? 10 : 16;
  for (const auto& s : construction_corpus(max_t, 500)) {
    if (s.n < block_order(s)) continue;
    Graph g = build(s);
    for (std::size_t k = 1; k < s.t; ++k) {
      BigCount expect = closed_form_count(s, k);
      if (o.fault == Fault::tree_offset && s.kind == ConstructionKind::t2_tree && k + 1 == s.t) expect += 1;
      c.expect(count_k_cliques(g, k) == expect, [&] { return to_json(s).dump() + " k=" + std::to_string(k); });
    }
  }
  for (std::size_t m = 0; m <= 12; ++m) {
    Graph g = graphs::matching_complement(m);
    BigCount total = 0;
    for (std::size_t k = 0; k <= g.order(); ++k) total += count_k_cliques(g, k);
    c.expect(total == matching_complement_total_cliques(m), [&] { return "3^m fails at m=" + std::to_string(m); });
  }
}

inline void check_wood(const VerifyOptions&, CheckBuilder& c) {
  for (double lambda : {0.40, 0.45, 0.50, 0.55}) {
    auto w = wood_counterexample_check(1000000, lambda);
    c.expect(w.conclusive && w.verdict, [&] { return "lambda=" + std::to_string(lambda) + " not a counterexample"; });
  }
  auto high = wood_counterexample_check(1000000, 0.70);
  c.expect(high.conclusive && !high.verdict, [&] { return std::string("lambda=0.70 unexpectedly beats the conjecture"); });
}

inline void check_main_dominance(const VerifyOptions& o, CheckBuilder& c) {
  const std::size_t max_t = o.profile == Profile::quick ? 12 : 30;
  for (const auto& s : construction_corpus(max_t, 400)) {
    if (s.n < block_order(s)) continue;
    Graph g = build(s);
    for (std::size_t k = 1; k < s.t; ++k) {
      double bound = theorem_main_bound(s.t, k, s.n).log2();
      if (o.fault == Fault::main_exponent) {
        const double lt = std::log2(static_cast<double>(s.t));
        bound -= 16.0 * std::sqrt(static_cast<double>(s.t)) * lt * std::sqrt(std::sqrt(lt));
      }
      BigCount cnt = count_k_cliques(g, k);
      c.expect(log2_of(cnt) <= bound + 1e-9, [&] { return to_json(s).dump() + " k=" + std::to_string(k); });
    }
  }
}

}  // namespace detail

/// Runs every oracle and property campaign at the chosen scale. Failures are
/// report entries; only invalid options throw.
inline VerifyReport verify_suite(const VerifyOptions& o = {}) {
  using Fn = void (*)(const VerifyOptions&, detail::CheckBuilder&);
  const std::pair<const char*, Fn> checks[] = {
      {"graph-core/count-vs-oracle", detail::check_counts},
      {"graph-core/io-round-trip", detail::check_io},
      {"minors/hadwiger-vs-contraction", detail::check_hadwiger},
      {"minors/dense-hadwiger", detail::check_dense},
      {"minors/turan-minor-free", detail::check_turan_minor_free},
      {"turan/zykov", detail::check_zykov},
      {"turan/t-star-vs-exact", detail::check_tstar},
      {"turan/sandwich", detail::check_sandwich},
      {"turan/ratio-lemma", detail::check_ratio},
      {"turan/omega-range", detail::check_omega},
      {"peeling/facts", detail::check_peeling},
      {"peeling/branch-certificates", detail::check_branches},
      {"bounds/ht-monotone", detail::check_ht_monotone},
      {"constructions/closed-forms", detail::check_closed_forms},
      {"constructions/wood", detail::check_wood},
      {"bounds/main-dominance", detail::check_main_dominance}};
  VerifyReport rep;
  rep.profile = o.profile;
  rep.seed = o.seed;
  for (const auto& [name, fn] : checks) {
    detail::CheckBuilder c(name);
    try {
      fn(o, c);
    } catch (const std::exception& e) {
      c.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    rep.checks.push_back(std::move(c).done());
  }
  return rep;
}

}  // namespace minorclique

#endif  // MINORCLIQUE_VERIFY_HPP
