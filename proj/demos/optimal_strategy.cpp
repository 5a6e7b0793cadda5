// Evaluates the optimal single-qubit strategy, lifts it to a Bell-pair
// CHSH strategy and prints both per-input tables side by side.

#include <cstdio>

#include "chshstar/chshstar.hpp"

int main() {
  using namespace chshstar;
  const Strategy s = strategies::tsirelson_optimal();
  const auto single = evaluate(GameSpec(2), s);
  const auto chsh = evaluate_chsh(lift(s));

  std::printf("a b   single-system   lifted CHSH\n");
  for (const auto& [k, p] : single.per_input)
    std::printf("%d %d   %.12f  %.12f\n", k.a, k.b, p, chsh.per_input.at(k));
  std::printf("average %.12f  %.12f\n", single.average, chsh.average);
  return 0;
}
