// For one t, lists the largest k-clique count among the constructions on
// n = 10t vertices next to the main and crude upper bounds, all in log2.

#include <cstdio>
#include <cstdlib>

#include "minorclique/bounds.hpp"
#include "minorclique/cliques.hpp"
#include "minorclique/constructions.hpp"

using namespace minorclique;

int main(int argc, char** argv) {
  const std::size_t t = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 12;
  std::printf("t = %zu, n = 10 t; bounds are not guaranteed below t = %zu\n", t, kLargeTThreshold);
  std::printf("%4s %10s %16s %12s %12s %12s\n", "k", "regime", "best kind", "log2 count", "log2 main", "log2 crude");
  const std::uint64_t n = 10 * t;
  for (std::size_t k = 1; k < t; ++k) {
    BigCount best = 0;
    const char* best_kind = "-";
    for (auto kind : {ConstructionKind::tstar_union, ConstructionKind::t2_tree, ConstructionKind::ktminus_union}) {
      ConstructionSpec s{kind, t, kind == ConstructionKind::tstar_union ? k : 0, n};
      if (n < block_order(s)) continue;
      BigCount c = closed_form_count(s, k);
      if (c > best) best = c, best_kind = to_string(kind);
    }
    const double crude = k >= 2 ? crude_upper(t, k, n).log2() : 0.0;
    std::printf("%4zu %10s %16s %12.3f %12.3f %12s\n", k, to_string(regime_of(t, k)), best_kind, log2_of(best),
                theorem_main_bound(t, k, n).log2(), k >= 2 ? std::to_string(crude).c_str() : "-");
  }
}
