#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "minorclique/cliques.hpp"
#include "minorclique/graph.hpp"
#include "minorclique/graph_io.hpp"
#include "minorclique/oracles.hpp"

using namespace minorclique;

namespace {

// Independent graph6 decoder written straight from the format description:
// N(n) is one byte n+63 for n <= 62, then the upper triangle column by column.
std::vector<Edge> reference_graph6_edges(const std::string& s, std::size_t& n) {
  n = static_cast<std::size_t>(s[0] - 63);
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
  std::vector<Edge> e;
  std::size_t idx = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (bits[idx++]) e.emplace_back(i, j);
  std::sort(e.begin(), e.end());
  return e;
}

Graph t_7_3() {
  // Parts {0,1,2}, {3,4}, {5,6}.
  std::vector<int> part{0, 0, 0, 1, 1, 2, 2};
  std::vector<Edge> e;
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = u + 1; v < 7; ++v)
      if (part[u] != part[v]) e.emplace_back(u, v);
  return Graph(7, e);
}

}  // namespace

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("vertex set basics") {
  VertexSet s(130, {0, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.next(1) == 64);
  CHECK(s.next(65) == 129);
  CHECK(s.next(130) == VertexSet::npos);
  s.erase_upto(64);
  CHECK(s.members() == std::vector<Vertex>{129});
  CHECK_THROWS_AS(s.insert(130), PreconditionError);
  CHECK(VertexSet::full(70).count() == 70);
}

TEST_CASE("induced subgraph examples") {
  auto k3 = induced_subgraph(graphs::complete(4), VertexSet(4, {0, 1, 2}));
  CHECK(k3.graph == graphs::complete(3));

  Graph pet = graphs::petersen();
  CHECK(induced_subgraph(pet, pet.all_vertices()).graph == pet);

  auto p = induced_subgraph(graphs::cycle(5), VertexSet(5, {0, 1, 3}));
  CHECK(p.graph.order() == 3);
  CHECK(p.graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK(p.original == std::vector<Vertex>{0, 1, 3});

  CHECK_THROWS_AS(induced_subgraph(graphs::cycle(5), VertexSet(8, {0, 7})), PreconditionError);
}

TEST_CASE("count_k_cliques examples") {
  CHECK(count_k_cliques(graphs::complete(4), 3) == 4);
  CHECK(count_k_cliques(graphs::cycle(4), 3) == 0);
  CHECK(count_k_cliques(graphs::petersen(), 2) == 15);
  CHECK(count_k_cliques(graphs::petersen(), 3) == 0);
  CHECK(count_k_cliques(graphs::petersen(), 0) == 1);
  CHECK(count_k_cliques(graphs::petersen(), 1) == 10);
  CHECK(count_k_cliques(graphs::petersen(), 11) == 0);
  CHECK(count_k_cliques(Graph(0), 0) == 1);
}

TEST_CASE("clique number and missing degree examples") {
  CHECK(clique_number(graphs::complete(6)) == 6);
  CHECK(clique_number(graphs::cycle(5)) == 2);
  CHECK(clique_number(graphs::complete_minus_edge(5)) == 4);
  CHECK(clique_number(Graph(3)) == 1);
  CHECK(clique_number(Graph(0)) == 0);

  CHECK(max_missing_degree(graphs::complete(5)) == 0);
  CHECK(max_missing_degree(graphs::matching_complement(3)) == 1);
  CHECK(max_missing_degree(t_7_3()) == 2);
  CHECK_THROWS_AS(max_missing_degree(Graph(0)), PreconditionError);
}

TEST_CASE("count_k_cliques agrees with subset enumeration on every graph with at most 6 vertices") {
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
      Graph g = graphs::from_pair_mask(n, mask);
      for (std::size_t k = 0; k <= n; ++k) REQUIRE(count_k_cliques(g, k) == oracle::count_k_cliques(g, k));
      REQUIRE(clique_number(g) == oracle::clique_number(g));
    }
}

TEST_CASE("count_k_cliques agrees with subset enumeration on random graphs up to 10 vertices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 7 + trial % 4;
    double p = 0.15 + 0.8 * (trial % 9) / 8.0;
    Graph g = graphs::random_graph(n, p, rng);
    for (std::size_t k = 0; k <= n; ++k) REQUIRE(count_k_cliques(g, k) == oracle::count_k_cliques(g, k));
    REQUIRE(clique_number(g) == oracle::clique_number(g));
  }
}

TEST_CASE("clique counts of K_m sum to 2^m") {
  for (std::size_t m = 0; m <= 20; ++m) {
    BigCount s = 0;
    for (std::size_t k = 0; k <= m; ++k) s += count_k_cliques(graphs::complete(m), k);
    CHECK(s == pow2(m));
  }
}

TEST_CASE("clique counts are invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = graphs::random_graph(18, 0.6, rng);
    std::vector<Vertex> perm(18);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = graphs::relabel(g, perm);
    for (std::size_t k = 2; k <= 8; ++k) REQUIRE(count_k_cliques(g, k) == count_k_cliques(h, k));
    REQUIRE(clique_number(g) == clique_number(h));
  }
}

TEST_CASE("twin merging leaves counts on multipartite and glued graphs exact") {
  // K_{3,3,3}: e_3 = 27, e_2 = 27.
  std::vector<Edge> e;
  for (Vertex u = 0; u < 9; ++u)
    for (Vertex v = u + 1; v < 9; ++v)
      if (u / 3 != v / 3) e.emplace_back(u, v);
  Graph g(9, e);
  CHECK(count_k_cliques(g, 3) == 27);
  CHECK(count_k_cliques(g, 2) == 27);
  CHECK(count_k_cliques(g, 3) == oracle::count_k_cliques(g, 3));
  CHECK(count_k_cliques(disjoint_union({g, g, graphs::complete(4)}), 3) == 27 + 27 + 4);
}

TEST_CASE("graph6 decoding of D~{ is K_5 under an independent decoder") {
  std::size_t n = 0;
  auto ref = reference_graph6_edges("D~{", n);
  Graph g = parse_graph("D~{", GraphFormat::graph6);
  CHECK(n == 5);
  CHECK(g.order() == 5);
  CHECK(g.edges() == ref);
  CHECK(g == graphs::complete(5));
}

TEST_CASE("graph6 header forms and errors") {
  CHECK(parse_graph("?", GraphFormat::graph6).order() == 0);
  CHECK(parse_graph(">>graph6<<D~{\n", GraphFormat::graph6) == graphs::complete(5));
  CHECK_THROWS_AS(parse_graph("", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D~", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("D~{{", GraphFormat::graph6), ParseError);
  CHECK_THROWS_AS(parse_graph("A\x01", GraphFormat::graph6), ParseError);
  // "A_" is K_2; "A`" additionally sets a padding bit.
  CHECK(parse_graph("A_", GraphFormat::graph6) == graphs::complete(2));
  CHECK_THROWS_AS(parse_graph("A`", GraphFormat::graph6), ParseError);
  // Multi-byte header for n = 63 and beyond.
  Graph big = graphs::cycle(100);
  std::string s = serialize_graph(big, GraphFormat::graph6);
  CHECK(s[0] == '~');
  CHECK(parse_graph(s, GraphFormat::graph6) == big);
}

TEST_CASE("edge-list JSON examples") {
  CHECK(parse_graph(R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})", GraphFormat::edge_list_json) ==
        graphs::complete(3));
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,5]]})", GraphFormat::edge_list_json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[0,1],[1,0]]})", GraphFormat::edge_list_json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3,"edges":[[2,2]]})", GraphFormat::edge_list_json), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"n":3})", GraphFormat::edge_list_json), ParseError);
  CHECK_THROWS_AS(parse_graph("not json", GraphFormat::edge_list_json), ParseError);
}

TEST_CASE("parse and serialize round-trip in both formats") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = graphs::random_graph(static_cast<std::size_t>(trial * 3 % 80), 0.3, rng);
    for (auto f : {GraphFormat::graph6, GraphFormat::edge_list_json})
      REQUIRE(parse_graph(serialize_graph(g, f), f) == g);
  }
}
