/**
 * @file chshstar/landauer.hpp
 * @brief Erasure accounting for the partial-erasure strategy family.
 *
 * Classical bit, initial 0, A = (I, NOT), B = (reset with probability p, I),
 * identity readout. The reset only destroys information on input (1, 0),
 * so the expected erasure is p bits there and zero elsewhere. Entropy is
 * reported in units of kT log2(2): one erased bit is one unit.
 */
#pragma once

#include <cmath>
#include <stdexcept>

#include "game.hpp"
#include "strategies.hpp"

namespace chshstar::landauer {

struct ErasureStrategy {
  double erase_probability;

  explicit ErasureStrategy(double p) : erase_probability(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::out_of_range("ErasureStrategy: p must lie in [0, 1]");
  }

  ClassicalStrategy base() const { return strategies::classical::partial_erase(erase_probability); }
};

struct EntropyReport {
  InputMap per_input_bits_erased;
  double average_bits = 0.0;
  double average_entropy = 0.0;  ///< in units of kT log2(2)
};

/// Success probability of the erasure strategy; analytically (3 + p) / 4.
inline double erasure_value(double p) {
  return evaluate_classical(GameSpec(2), ErasureStrategy(p).base()).average;
}

/// Inverse of erasure_value on [3/4, 1]: p = 4 t - 3.
inline double solve_erasure_probability(double target) {
  if (!(target >= 0.75 && target <= 1.0)) throw std::out_of_range("solve_erasure_probability: target must lie in [0.75, 1]");
  return 4.0 * target - 3.0;
}

inline EntropyReport entropy_ledger(double p) {
  const auto report = evaluate_classical(GameSpec(2), ErasureStrategy(p).base());
  EntropyReport out;
  if (report.erasure_ledger) {
    out.per_input_bits_erased = *report.erasure_ledger;
  } else {
    for (const auto& [key, v] : report.per_input) out.per_input_bits_erased[key] = 0.0;
  }
  out.average_bits = detail::mean_of(out.per_input_bits_erased);
  out.average_entropy = out.average_bits;
  return out;
}

}  // namespace chshstar::landauer
