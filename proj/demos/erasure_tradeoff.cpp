// Success probability against average erasure cost for the partial-erasure
// strategy family.

#include <cstdio>

#include "chshstar/chshstar.hpp"

int main() {
  using namespace chshstar::landauer;
  std::printf("p        value          entropy [kT log2(2)]\n");
  for (int k = 0; k <= 10; ++k) {
    const double p = k / 10.0;
    std::printf("%.2f     %.10f   %.10f\n", p, erasure_value(p), entropy_ledger(p).average_entropy);
  }
  const double quantum = chshstar::evaluate(chshstar::GameSpec(2), chshstar::strategies::tsirelson_optimal()).average;
  const double p_star = solve_erasure_probability(quantum);
  std::printf("quantum-matching erasure probability: %.12f\n", p_star);
  return 0;
}
