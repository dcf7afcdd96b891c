#include <catch_amalgamated.hpp>

#include <random>

#include "minorclique/bounds.hpp"

using namespace minorclique;

namespace {

bool close(double a, double b, double rel = 1e-9) { return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b)); }

}  // namespace

TEST_CASE("log_binomial examples and exact cross-check") {
  CHECK(close(log_binomial(5, 2).log2(), std::log2(10.0)));
  CHECK(log_binomial(17, 0).log2() == 0);
  CHECK(close(log_binomial(999, 5).log2(), log_binomial_exact(999, 5).log2()));
  CHECK(log_binomial(3, 4).is_zero());
  CHECK(log_binomial(3, -1).is_zero());
  CHECK(log_binomial(-2, 1).is_zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t n = static_cast<std::int64_t>(rng() % 10000) + 1;
    std::int64_t k = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n + 1));
    REQUIRE(close(log_binomial(n, k).log2(), log_binomial_exact(n, k).log2()));
  }
  // Both sides of the direct-sum / lgamma switch.
  for (std::int64_t k : {999, 1000, 1001, 1002, 5000})
    REQUIRE(close(log_binomial(10000, k).log2(), log_binomial_exact(10000, k).log2()));
}

TEST_CASE("crude_upper") {
  for (std::size_t t : {10, 100, 5000}) {
    double expect = std::log2(0.64 * t * std::sqrt(std::log(static_cast<double>(t))) * 1000.0);
    CHECK(close(crude_upper(t, 2, 1000).log2(), expect));
  }
  double x = 0.64 * 100 * std::sqrt(std::log(100.0));
  double direct = std::log2(1e6);
  for (int i = 0; i < 9; ++i) direct += std::log2((x - i) / (i + 1));
  CHECK(close(crude_upper(100, 10, 1000000).log2(), direct));
  // d(3) is just over 2, so C(d, 3) is empty.
  CHECK(crude_upper(3, 4, 10).is_zero());
  CHECK_THROWS_AS(crude_upper(10, 1, 10), PreconditionError);
}

TEST_CASE("tree_count") {
  CHECK(tree_count(5, 3, 10) == 22);
  for (std::size_t t = 2; t <= 30; ++t)
    for (std::uint64_t n = t - 2; n <= 100; n += 7) {
      REQUIRE(tree_count(t, t - 1, n) == BigCount(n + 2 - t));
      REQUIRE(tree_count(t, t / 2, t - 2) == binomial(t - 2, t / 2));
    }
  CHECK_THROWS_AS(tree_count(10, 3, 7), PreconditionError);
  CHECK_THROWS_AS(tree_count(10, 10, 20), PreconditionError);
}

TEST_CASE("count_Ht_bound") {
  CHECK(close(count_Ht_bound(50, 30, 3, 0).log2(), log_binomial(47, 27).log2()));
  auto five = count_Ht_bound(3000, 2200, 10, 5), four = count_Ht_bound(3000, 2200, 10, 4);
  CHECK(five.log2() < four.log2());
  CHECK(std::isfinite(five.log2()));
  CHECK(count_Ht_bound(20, 18, 2, 5).is_zero());
  CHECK(count_Ht_exact(20, 18, 2, 5) == 0);
  CHECK(count_Ht_exact(10, 6, 1, 2) == binomial(7, 5) * 4);
  CHECK(close(LogValue::of(count_Ht_exact(300, 230, 4, 11)).log2(), count_Ht_bound(300, 230, 4, 11).log2()));

  for (std::int64_t t = 3; t <= 200; ++t)
    for (std::int64_t k = 2; k < t; ++k) {
      if (3 * (t - k) > t) continue;
      for (std::int64_t s = 0; s < t - k; ++s) REQUIRE(count_Ht_bound(t, k, 0, s + 1) < count_Ht_bound(t, k, 0, s));
    }
}

TEST_CASE("encoding_count_bound") {
  CHECK(close(encoding_count_bound(100, 12345, 1, 0, 7.0).log2(), std::log2(12345.0)));
  CHECK(encoding_count_bound(400, 99, 6, 5, 2.0).log2() == encoding_count_bound(400, 99, 6, 5, 1e6).log2());

  const std::size_t t = 10000;
  const double M = default_M(t);
  auto a = encoding_count_bound(t, 100000000, 50, 20, M);
  auto b = encoding_count_bound(t, 100000000, 50, 20, M);
  CHECK(a.log2() == b.log2());
  double r0 = r0_real(t), d = thomason_d(t);
  double expect = std::log2(1e8) + log_binomial(49, 20).log2() + 29 * std::log2(M) +
                  log_binomial_real(r0, 20).log2() + 20 * std::log2(d / r0);
  CHECK(close(a.log2(), expect));

  CHECK_THROWS_AS(encoding_count_bound(100, 10, 3, 3, 2.0), PreconditionError);
  CHECK_THROWS_AS(encoding_count_bound(100, 10, r0_bound(100) + 1, 0, 2.0), PreconditionError);
  CHECK_THROWS_AS(encoding_count_bound(100, 10, 3, 1, 0.5), PreconditionError);
}

TEST_CASE("key_lemma1_lower") {
  const std::size_t t = std::size_t{1} << 20;
  auto small = key_lemma1_lower(3, 0, t, 4.0, 1.0 / 6.0);
  CHECK(small.general == Catch::Approx(1.0 - 140.0));
  auto big = key_lemma1_lower(10000, 0, t, 4.0, 1.0 / 6.0);
  CHECK(big.general == Catch::Approx(10000.0 / 3.0 - 140.0));
  for (double eps : {0.01, 0.1, 1.0 / 6.0}) CHECK(key_lemma1_lower(10, 0, t, 400.0, eps).refined <= -1.0);
  CHECK_THROWS_AS(key_lemma1_lower(3, 0, t, 4.0, 0.0), PreconditionError);
  CHECK_THROWS_AS(key_lemma1_lower(3, 0, t, 4.0, 0.2), PreconditionError);
}

TEST_CASE("theorem_klarge0_bound") {
  const std::size_t t = 1000000;
  const double lt = std::log2(static_cast<double>(t));
  double extra = std::min(4 * r0_real(t) * lt, 160.0 * 1 * std::log(std::log(static_cast<double>(t))));
  CHECK(close(theorem_klarge0_bound(t, t - 1, 1000).log2(), std::log2(1000.0) + 1 - lt + 10 * lt * lt + extra));

  auto v = theorem_klarge0_bound(t, 800000, 1000000000000ULL);
  CHECK(std::isfinite(v.log2()));
  CHECK(v.log2() == theorem_klarge0_bound(t, 800000, 1000000000000ULL).log2());
  CHECK_THROWS_AS(theorem_klarge0_bound(t, 600000, 10), PreconditionError);

  for (std::size_t tt = 3; tt <= 200; ++tt)
    for (std::size_t k = 1; k < tt; ++k) {
      if (static_cast<double>(k) < klarge0_threshold(tt)) continue;
      for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{1000}}) {
        double lower = std::log2(static_cast<double>(n)) + log2_of(t_star(tt, k).count) - std::log2(static_cast<double>(tt));
        REQUIRE(theorem_klarge0_bound(tt, k, n).log2() >= lower);
      }
    }
}

TEST_CASE("theorem_main_bound") {
  auto r = t_star(30, 10);
  BigCount construction = BigCount(1000000 / r.spec.order()) * r.count;
  auto b = theorem_main_bound(30, 10, 1000000);
  CHECK(std::isfinite(b.log2()));
  CHECK(b.log2() >= log2_of(construction));
  CHECK(std::isfinite(theorem_main_bound(30, 29, 1000).log2()));
  auto big = theorem_main_bound(1000, 500, 1000000000);
  CHECK(big.log2() == theorem_main_bound(1000, 500, 1000000000).log2());
  CHECK_THROWS_AS(theorem_main_bound(10, 10, 5), PreconditionError);
}

TEST_CASE("reduce2_bound") {
  std::map<std::size_t, LogValue> h1{{1, LogValue::of(1.0)}};
  CHECK(close(reduce2_bound(50, 1, 777, h1).log2(), std::log2(777.0)));

  auto h = optimizer_h_values(40, 10);
  auto v = reduce2_bound(40, 10, 1000000, h);
  CHECK(std::isfinite(v.log2()));

  // Reverse-order summation lands on the same value.
  const double r0 = r0_real(40);
  std::vector<LogValue> terms;
  for (std::size_t r = 10; r >= 1; --r)
    terms.push_back(LogValue::of(1e6) * log_binomial_real(r0, static_cast<std::int64_t>(r) - 1) *
                    LogValue::of(thomason_d(40) / r0).pow(static_cast<double>(r - 1)) * h.at(r));
  CHECK(close(log_sum(terms).log2(), v.log2()));

  h.erase(4);
  CHECK_THROWS_AS(reduce2_bound(40, 10, 1000000, h), PreconditionError);
}

TEST_CASE("regimes, reports and serialization") {
  CHECK(regime_of(10000, 9999) == Regime::very_large_k);
  CHECK(regime_of(10000, 1000) == Regime::middle);
  CHECK(regime_of(10000, 100) == Regime::small_k);
  // 10000^(2/3) = 464.16...
  CHECK(regime_of(10000, 464) == Regime::small_k);
  CHECK(regime_of(10000, 465) == Regime::middle);

  auto rep = bound_report(30, 10, 1000);
  CHECK(rep.regime == Regime::middle);
  CHECK(rep.entries.count("main"));
  CHECK(rep.entries.count("crude"));
  CHECK(rep.entries.count("reduce2"));
  CHECK(rep.entries.count("tree"));
  CHECK_FALSE(rep.entries.count("klarge0"));
  CHECK_FALSE(rep.warnings.empty());
  auto j = to_json(rep);
  CHECK(j["regime"] == "middle");
  CHECK(j["bounds"]["main"].is_number());
  CHECK(j["t"] == 30);

  auto one = bound_report(30, 1, 1000);
  CHECK_FALSE(one.entries.count("crude"));

  auto large = bound_report(2000, 1500, 100000);
  CHECK(large.regime == Regime::very_large_k);
  CHECK(large.entries.count("klarge0"));
  CHECK_FALSE(large.entries.count("reduce2"));
  REQUIRE(large.warnings.size() == 1);
  CHECK(large.warnings[0].find("reduce2") != std::string::npos);

  auto sweep = bound_sweep(12, 100);
  CHECK(sweep.size() == 11);
  CHECK(csv_header() == "t,k,n,regime,crude,main,klarge0,reduce2,tree");
  std::string row = to_csv_row(sweep[0]);
  CHECK(row.rfind("12,1,100,small_k,,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 8);
  CHECK(log_to_json(LogValue::zero()).is_null());
}
