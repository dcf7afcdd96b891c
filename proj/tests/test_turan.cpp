#include <catch_amalgamated.hpp>

#include <random>

#include "minorclique/cliques.hpp"
#include "minorclique/minors.hpp"
#include "minorclique/oracles.hpp"
#include "minorclique/turan.hpp"

using namespace minorclique;

namespace {

using Parts = std::vector<std::size_t>;

BigCount choose(std::int64_t n, std::int64_t k) { return binomial(n, k); }

}  // namespace

TEST_CASE("turan_spec examples") {
  CHECK(turan_spec(7, 3).parts() == Parts{3, 2, 2});
  CHECK(turan_spec(6, 6).parts() == Parts(6, 1));
  CHECK(turan_spec(13, 6).parts() == Parts{3, 2, 2, 2, 2, 2});
  CHECK(turan_spec(7, 3).balanced());
  CHECK_FALSE(MultipartiteSpec({3, 1}).balanced());
  CHECK_THROWS_AS(turan_spec(3, 0), PreconditionError);
  CHECK_THROWS_AS(turan_spec(3, 4), PreconditionError);
  CHECK_THROWS_AS(MultipartiteSpec({2, 0}), PreconditionError);
  CHECK_THROWS_AS(MultipartiteSpec(Parts{}), PreconditionError);
  CHECK(MultipartiteSpec({1, 3, 2}).parts() == Parts{3, 2, 1});
}

TEST_CASE("multipartite_k_cliques examples") {
  CHECK(multipartite_k_cliques(MultipartiteSpec({2, 2, 1}), 3) == 4);
  CHECK(multipartite_k_cliques(MultipartiteSpec({2, 2}), 3) == 0);
  MultipartiteSpec t94({3, 2, 2, 2});
  CHECK(multipartite_k_cliques(t94, 2) == 30);
  CHECK(count_k_cliques(materialize(t94), 2) == 30);
  CHECK(multipartite_k_cliques(t94, 0) == 1);
  CHECK(multipartite_k_cliques(t94, 1) == 9);
}

TEST_CASE("materialization agrees with direct counting for small specs") {
  // Every multiset of part sizes with total at most 12.
  std::vector<Parts> all;
  std::function<void(Parts&, std::size_t, std::size_t)> gen = [&](Parts& cur, std::size_t maxpart, std::size_t left) {
    if (!cur.empty()) all.push_back(cur);
    for (std::size_t a = std::min(maxpart, left); a >= 1; --a) {
      cur.push_back(a);
      gen(cur, a, left - a);
      cur.pop_back();
    }
  };
  Parts cur;
  gen(cur, 12, 12);
  REQUIRE(all.size() > 200);
  for (const auto& p : all) {
    MultipartiteSpec spec(p);
    Graph g = materialize(spec);
    REQUIRE(g.order() == spec.order());
    for (std::size_t k = 0; k <= spec.part_count() + 1; ++k) {
      BigCount c = multipartite_k_cliques(spec, k);
      REQUIRE(c == count_k_cliques(g, k));
      if (spec.balanced()) REQUIRE(c == balanced_k_cliques(spec, k));
    }
  }
  CHECK_THROWS_AS(materialize(MultipartiteSpec({5, 5}), 9), CapExceeded);
  CHECK_THROWS_AS(balanced_k_cliques(MultipartiteSpec({3, 1}), 1), PreconditionError);
}

TEST_CASE("Zykov: Turan graphs maximize k-cliques among K_{w+1}-free graphs") {
  for (std::size_t n = 1; n <= 6; ++n) {
    // best[w][k] = max k-clique count over graphs with clique number <= w.
    std::vector<std::vector<BigCount>> best(n + 1, std::vector<BigCount>(n + 1, BigCount(0)));
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      std::size_t w = oracle::clique_number(g);
      for (std::size_t k = 0; k <= w; ++k) {
        BigCount c = oracle::count_k_cliques(g, k);
        for (std::size_t ww = w; ww <= n; ++ww) best[ww][k] = std::max(best[ww][k], c);
      }
    }
    for (std::size_t w = 1; w <= n; ++w)
      for (std::size_t k = 1; k <= w; ++k) REQUIRE(multipartite_k_cliques(turan_spec(n, w), k) == best[w][k]);
  }

  // One-sided for n = 7, 8: random K_{w+1}-free graphs never beat T(n, w).
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 7 + trial % 2;
    Graph g = graphs::random_graph(n, 0.3 + 0.6 * (trial % 7) / 6.0, rng);
    std::size_t w = clique_number(g);
    for (std::size_t k = 1; k <= w; ++k) REQUIRE(count_k_cliques(g, k) <= multipartite_k_cliques(turan_spec(n, w), k));
  }
}

TEST_CASE("t_star examples") {
  auto r = t_star(10, 8);
  CHECK(r.omega_star == 9);
  Parts k10minus(9, 1);
  k10minus[0] = 2;
  CHECK(r.spec.parts() == k10minus);
  CHECK(r.count == 17);
  CHECK(r.count == choose(9, 8) + choose(8, 7));

  auto two = t_star(2, 1);
  CHECK(two.omega_star == 1);
  CHECK(two.spec.parts() == Parts{2});
  CHECK(two.count == 2);

  auto twelve = t_star(12, 4);
  BigCount brute = 0;
  std::size_t brute_w = 0;
  for (std::size_t w = 4; w <= 11; ++w) {
    BigCount c = count_k_cliques(materialize(turan_spec(23 - w, w)), 4);
    REQUIRE(c == multipartite_k_cliques(turan_spec(23 - w, w), 4));
    if (c > brute) brute = c, brute_w = w;
  }
  CHECK(twelve.count == brute);
  CHECK(twelve.omega_star == brute_w);
  CHECK(twelve.spec.order() == 2 * 12 - twelve.omega_star - 1);

  CHECK_THROWS_AS(t_star(5, 5), PreconditionError);
  CHECK_THROWS_AS(t_star(5, 0), PreconditionError);

  CHECK(to_json(two).dump() == R"({"count":"2","k":1,"omega":1,"parts":[2],"t":2})");
}

TEST_CASE("fast t_star agrees with the exact scan") {
  for (std::size_t t = 2; t <= 70; ++t)
    for (std::size_t k = 1; k < t; ++k) {
      auto a = t_star(t, k), b = t_star_exact(t, k);
      REQUIRE(a.omega_star == b.omega_star);
      REQUIRE(a.count == b.count);
      REQUIRE(a.spec == b.spec);
      REQUIRE(a.spec.balanced());
      REQUIRE(a.omega_star >= k);
      REQUIRE(a.omega_star + 1 <= t);
    }
  for (std::size_t k : {3, 40, 150, 299}) {
    auto a = t_star(300, k), b = t_star_exact(300, k);
    REQUIRE(a.omega_star == b.omega_star);
    REQUIRE(a.count == b.count);
  }
}

TEST_CASE("optimizer uses all 2t - 1 available vertices plus parts") {
  for (std::size_t t = 2; t <= 8; ++t)
    for (std::size_t k = 1; k < t; ++k) {
      BigCount best_any = 0, best_full = 0;
      for (std::size_t l = 1; l <= 2 * t - 2; ++l)
        for (std::size_t n = l; n + l <= 2 * t - 1; ++n) {
          BigCount c = multipartite_k_cliques(turan_spec(n, l), k);
          best_any = std::max(best_any, c);
          if (n + l == 2 * t - 1) best_full = std::max(best_full, c);
        }
      REQUIRE(best_any == best_full);
      REQUIRE(best_full == t_star(t, k).count);
    }
}

TEST_CASE("optimizer graphs have no K_t minor") {
  MinorOptions exhaustive;
  exhaustive.use_order_clique_bound = false;
  for (std::size_t t = 2; t <= 7; ++t)
    for (std::size_t k = 1; k < t; ++k)
      REQUIRE_FALSE(has_clique_minor(materialize(t_star(t, k).spec), t, exhaustive));
}

TEST_CASE("consecutive optimizer counts differ by at most 4t^2") {
  for (std::size_t t = 3; t <= 60; ++t)
    for (std::size_t k = 2; k < t; ++k)
      REQUIRE(t_star(t, k - 1).count <= BigCount(4 * t * t) * t_star(t, k).count);
}

TEST_CASE("optimizer count is monotone under shifting t and k together") {
  for (std::size_t t = 2; t <= 40; ++t)
    for (std::size_t k = 1; k < t; ++k) {
      BigCount top = t_star(t, k).count;
      for (std::size_t i = 1; i < k; ++i) REQUIRE(top >= t_star(t - i, k - i).count);
    }
}

TEST_CASE("c_star_sandwich brackets the optimizer") {
  auto [lo, hi] = c_star_sandwich(1000, 5);
  CHECK(lo.log2() == Catch::Approx(log_binomial(999, 5).log2() + 5 * std::log2(1.6)).epsilon(1e-12));
  double c = log2_of(t_star(1000, 5).count);
  CHECK(lo.log2() <= c);
  CHECK(c <= hi.log2());

  // Clamped once k >= t/8.
  auto [lo2, hi2] = c_star_sandwich(80, 10);
  CHECK(lo2.log2() == Catch::Approx(log_binomial(79, 10).log2()));
  CHECK(hi2.log2() == Catch::Approx(log_binomial(79, 10).log2() + 10));

  for (std::size_t t : {100, 160}) {
    for (std::size_t k = 25; k < t; ++k) {
      auto [l, h] = c_star_sandwich(t, k);
      double v = log2_of(t_star(t, k).count);
      REQUIRE(l.log2() <= v + 1e-9);
      REQUIRE(v <= h.log2() + 1e-9);
    }
  }
  CHECK_THROWS_AS(c_star_sandwich(5, 5), PreconditionError);
}

TEST_CASE("part size bound") {
  CHECK(part_size_bound_check(t_star(12, 4).spec, 4));
  CHECK(part_size_bound_check(MultipartiteSpec(Parts(7, 1)), 5));
  CHECK_FALSE(part_size_bound_check(MultipartiteSpec({10, 1, 1}), 3));
  CHECK_THROWS_AS(part_size_bound_check(MultipartiteSpec({2}), 1), PreconditionError);
  for (std::size_t t = 3; t <= 80; ++t)
    for (std::size_t k = 2; k < t; ++k) REQUIRE(part_size_bound_check(t_star(t, k).spec, k));
}

TEST_CASE("omega_star range") {
  CHECK(t_star(9, 6).omega_star == 8);
  CHECK(omega_star_range_check(9, 6));
  auto r = t_star(50, 8);
  CHECK(r.omega_star >= 5);
  CHECK(omega_star_range_check(50, 8));
  CHECK(t_star(2, 1).omega_star == 1);
  CHECK(omega_star_range_check(2, 1));
  CHECK_FALSE(omega_in_range(100, 1, 1));
  // With k = 1 the count 2t - w - 1 is largest at w = 1, below sqrt(t)/4 for t >= 17.
  CHECK(t_star(100, 1).omega_star == 1);
  CHECK_FALSE(omega_star_range_check(100, 1));
  CHECK(omega_star_range_check(16, 1));
  CHECK_FALSE(omega_star_range_check(17, 1));
  for (std::size_t t = 3; t <= 300; ++t)
    for (std::size_t k = 2; k < t; ++k) REQUIRE(omega_star_range_check(t, k));
  CHECK_FALSE(omega_in_range(9, 6, 7));
}

TEST_CASE("complement of the optimizer is a matching plus isolated vertices for large k") {
  // Empirical only: once k >= 4t/7 every part has size at most 2.
  for (std::size_t t = 8; t <= 120; ++t)
    for (std::size_t k = (4 * t + 6) / 7; k < t; ++k) REQUIRE(t_star(t, k).spec.parts().front() <= 2);
}
