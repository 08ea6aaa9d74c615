#include <iostream>

#include "tscolor/tscolor.hpp"

// Checks the sufficiency condition for a random 10-uniform hypergraph, then
// finds a (3,2)-coloring by resampling.
int main() {
  using namespace tscolor;

  const Hypergraph h = generate({Family::uniform_random, 400, 80, 10, 1});
  const std::size_t k = min_edge_size(h);
  const std::size_t d = max_overlap_degree(h);

  const Verdict v = lll_verdict(k, d, 3, 2);
  std::cout << "k=" << k << " d=" << d << " verdict=" << to_string(v.status) << " lhs<="
            << to_decimal(v.lhs_upper, 12, true) << '\n';

  SolveConfig config;
  config.seed = 7;
  config.t = 3;
  config.s = 2;
  const SolveResult r = moser_tardos_solve(h, config);
  std::cout << "outcome=" << to_string(r.outcome) << " resamples=" << r.resample_count << '\n';
  return r.outcome == SolveOutcome::solved ? 0 : 1;
}
