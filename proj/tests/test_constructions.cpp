#include <catch_amalgamated.hpp>

#include "minorclique/cliques.hpp"
#include "minorclique/constructions.hpp"

using namespace minorclique;

namespace {

using Kind = ConstructionKind;

BigCount total_cliques(const Graph& g) {
  BigCount s = 0;
  for (std::size_t k = 0; k <= g.order(); ++k) s += count_k_cliques(g, k);
  return s;
}

}  // namespace

TEST_CASE("build examples") {
  ConstructionSpec tree{Kind::t2_tree, 5, 0, 10};
  Graph g = build(tree);
  CHECK(g.order() == 10);
  CHECK(count_k_cliques(g, 3) == 22);
  CHECK(closed_form_count(tree, 3) == 22);

  ConstructionSpec km{Kind::ktminus_union, 6, 0, 12};
  Graph h = build(km);
  CHECK(connected_components(h).size() == 2);
  CHECK(count_k_cliques(h, 4) == 18);
  CHECK(closed_form_count(km, 4) == 18);

  ConstructionSpec mc{Kind::matching_complement_union, 7, 0, 8};
  Graph c = build(mc);
  CHECK(c == graphs::matching_complement(4));
  CHECK(c.edge_count() == 28 - 4);

  ConstructionSpec ts{Kind::tstar_union, 10, 8, 25};
  Graph u = build(ts);
  CHECK(u.order() == 25);
  CHECK(count_k_cliques(u, 8) == 2 * 17);
  CHECK(closed_form_count(ts, 8) == 34);
}

TEST_CASE("construction validity checks") {
  CHECK_THROWS_AS(build({Kind::matching_complement_union, 8, 0, 12}), PreconditionError);
  CHECK_THROWS_AS(build({Kind::matching_complement_union, 7, 0, 12}), PreconditionError);
  CHECK_THROWS_AS(build({Kind::t2_tree, 10, 0, 5}), PreconditionError);
  CHECK_THROWS_AS(build({Kind::tstar_union, 10, 10, 100}), PreconditionError);
  CHECK_THROWS_AS(build({Kind::tstar_union, 10, 3, 5}), PreconditionError);
  CHECK_THROWS_AS(build({Kind::ktminus_union, 10, 0, 3000}), CapExceeded);
}

TEST_CASE("closed forms match direct counts on materializable specs") {
  std::vector<ConstructionSpec> specs;
  for (std::size_t t = 2; t <= 12; ++t) {
    for (std::size_t k = 1; k < t; ++k)
      for (std::size_t n : {2 * t, 3 * t + 1, std::size_t{31}}) specs.push_back({Kind::tstar_union, t, k, n});
    for (std::size_t n : {t - 2 + (t == 2), t + 3, std::size_t{60}}) specs.push_back({Kind::t2_tree, t, 0, std::max<std::size_t>(n, 1)});
    for (std::size_t n : {t, 2 * t + 1, std::size_t{50}}) specs.push_back({Kind::ktminus_union, t, 0, n});
    if (t % 3 == 1 && t >= 4)
      for (std::size_t c : {1, 3}) specs.push_back({Kind::matching_complement_union, t, 0, c * 4 * (t - 1) / 3});
  }
  specs.push_back({Kind::t2_tree, 8, 0, 500});
  specs.push_back({Kind::ktminus_union, 9, 0, 500});
  specs.push_back({Kind::tstar_union, 12, 5, 500});
  specs.push_back({Kind::matching_complement_union, 10, 0, 492});
  for (const auto& s : specs) {
    if (s.n < block_order(s)) continue;
    Graph g = build(s);
    REQUIRE(g.order() == s.n);
    for (std::size_t k = 0; k <= std::min<std::size_t>(s.t + 1, 14); ++k) {
      INFO(to_json(s).dump() << " k=" << k);
      REQUIRE(count_k_cliques(g, k) == closed_form_count(s, k));
    }
  }
}

TEST_CASE("constructions are K_t-minor-free") {
  for (std::size_t t = 2; t <= 8; ++t)
    for (std::size_t k = 1; k < t; ++k) CHECK(verify_minor_free({Kind::tstar_union, t, k, 3 * t}));
  for (std::size_t k = 1; k < 6; ++k) CHECK(verify_minor_free({Kind::tstar_union, 6, k, 40}));
  CHECK(verify_minor_free({Kind::t2_tree, 5, 0, 9}));
  for (std::size_t t = 3; t <= 8; ++t) CHECK(verify_minor_free({Kind::t2_tree, t, 0, 13}));
  for (std::size_t t = 2; t <= 10; ++t) CHECK(verify_minor_free({Kind::ktminus_union, t, 0, 3 * t}));
  CHECK(verify_minor_free({Kind::matching_complement_union, 7, 0, 24}));
  CHECK(verify_minor_free({Kind::matching_complement_union, 10, 0, 24}));

  // A K_7^- block has Hadwiger number 6, so it is K_7-minor-free; K_t itself is not.
  CHECK(components_minor_free(graphs::complete_minus_edge(7), 7));
  CHECK_FALSE(components_minor_free(graphs::complete_minus_edge(7), 6));
  CHECK_FALSE(components_minor_free(disjoint_union({graphs::cycle(5), graphs::complete(6)}), 6));
  CHECK_THROWS_AS(components_minor_free(graphs::cycle(15), 3), CapExceeded);
}

TEST_CASE("complement of a perfect matching has 3^m cliques") {
  for (std::size_t m = 0; m <= 12; ++m) {
    REQUIRE(total_cliques(graphs::matching_complement(m)) == matching_complement_total_cliques(m));
    REQUIRE(matching_complement_total_cliques(m) == boost::multiprecision::pow(BigCount(3), static_cast<unsigned>(m)));
  }
}

TEST_CASE("spec JSON round-trip") {
  ConstructionSpec s{Kind::matching_complement_union, 13, 0, 32};
  auto j = to_json(s);
  CHECK(j.dump() == R"({"k":0,"kind":"matching_complement_union","n":32,"t":13})");
  auto back = construction_spec_from_json(j);
  CHECK(back.kind == s.kind);
  CHECK(back.t == 13);
  CHECK(back.n == 32);
  auto nok = construction_spec_from_json(nlohmann::json::parse(R"({"kind":"t2_tree","t":5,"n":9})"));
  CHECK(nok.k == 0);
  CHECK_THROWS_AS(construction_spec_from_json(nlohmann::json::parse(R"({"kind":"star","t":5,"n":9})")), ParseError);
  CHECK_THROWS_AS(construction_spec_from_json(nlohmann::json::parse(R"({"kind":"t2_tree","n":9})")), ParseError);
}

TEST_CASE("Wood conjecture check") {
  auto small = wood_counterexample_check(13, 0.45);
  CHECK(small.exact);
  CHECK(small.k == 6);
  // Both sides by hand: C(8,6) 2^6 = 1792 against 16 C(11,5) = 7392.
  CHECK_FALSE(small.verdict);
  CHECK(small.conclusive);

  // 10^6 + 1 is 2 mod 3; 10^6 is the nearby admissible value.
  const std::size_t t = 1000000;
  for (double lambda : {0.40, 0.45, 0.50, 0.55}) {
    auto w = wood_counterexample_check(t, lambda);
    CHECK_FALSE(w.exact);
    CHECK(w.conclusive);
    CHECK(w.verdict);
    CHECK(w.construction_count.log2() - w.conjecture_bound.log2() > kWoodMargin);
  }
  auto high = wood_counterexample_check(t, 0.70);
  CHECK(high.conclusive);
  CHECK_FALSE(high.verdict);
  CHECK(high.construction_count.is_zero());
  CHECK(to_json(high)["verdict"] == false);

  // Exact and log-space paths agree near the switch.
  for (double lambda : {0.4, 0.5, 0.55, 0.6}) {
    auto e = wood_counterexample_check(2998, lambda);
    REQUIRE(e.exact);
    double diff = e.construction_count.log2() - e.conjecture_bound.log2();
    if (e.verdict) CHECK(diff > 0);
    else CHECK(diff <= 0);
  }

  CHECK_THROWS_AS(wood_counterexample_check(12, 0.5), PreconditionError);
  CHECK_THROWS_AS(wood_counterexample_check(13, 0.3), PreconditionError);
  CHECK_THROWS_AS(wood_counterexample_check(13, 1.0), PreconditionError);
}

TEST_CASE("Wood verdict grid changes once") {
  std::vector<WoodCheck> grid;
  for (int i = 7; i <= 14; ++i) grid.push_back(wood_counterexample_check(1000000, i * 0.05));
  for (const auto& w : grid) REQUIRE(w.conclusive);
  CHECK(verdict_flips(grid) == 1);
  CHECK(grid.front().verdict);
  CHECK_FALSE(grid.back().verdict);
}
