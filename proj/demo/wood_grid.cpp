// Sweeps lambda = k/t for the matching-complement construction at a large t
// and prints where it stops beating the conjectured per-vertex maximum.

#include <cstdio>
#include <cstdlib>

#include "minorclique/constructions.hpp"

int main(int argc, char** argv) {
  const std::size_t t = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1000000;
  std::vector<minorclique::WoodCheck> grid;
  std::printf("%8s %10s %22s %22s  %s\n", "lambda", "k", "log2 construction", "log2 conjecture", "verdict");
  for (int step = 0; step <= 14; ++step) {
    const double lambda = 0.35 + 0.025 * step;
    auto w = minorclique::wood_counterexample_check(t, lambda);
    grid.push_back(w);
    std::printf("%8.3f %10zu %22.6f %22.6f  %s\n", lambda, w.k, w.construction_count.log2(), w.conjecture_bound.log2(),
                w.conclusive ? (w.verdict ? "beats" : "does not beat") : "inconclusive");
  }
  std::printf("verdict changes %zu time(s) over the grid\n", minorclique::verdict_flips(grid));
}
