/**
 * @file chshstar/game.hpp
 * @brief The single-system CHSH* game (and its mod-q variant) and exact
 *        strategy evaluation for quantum and classical systems.
 *
 * A referee draws inputs a and b uniformly from {0, ..., q-1}. The player
 * prepares a fixed initial state, applies A_a then B_b, measures, and wins
 * when the measured label equals a*b mod q.
 */
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcore.hpp"

namespace chshstar {

struct InputPair {
  int a;
  int b;
  auto operator<=>(const InputPair&) const = default;
};

class GameSpec {
public:
  explicit GameSpec(int q = 2) : q_(q) {
    if (q != 2 && q != 3) throw std::invalid_argument("GameSpec: only q = 2 and q = 3 are supported");
  }

  int modulus() const noexcept { return q_; }
  /// Each input ranges over {0, ..., q-1}.
  int alphabet_size() const noexcept { return q_; }

  std::vector<InputPair> input_pairs() const {
    std::vector<InputPair> out;
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) out.push_back({a, b});
    return out;
  }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

private:
  int q_;
};

inline int winning_answer(const GameSpec& spec, int a, int b) {
  if (a < 0 || b < 0 || a >= spec.alphabet_size() || b >= spec.alphabet_size())
    throw std::out_of_range("winning_answer: input outside the alphabet");
  return (a * b) % spec.modulus();
}

/// Quantum strategy: everything is fixed before the inputs are revealed.
struct Strategy {
  State initial;
  std::vector<Channel> a_gates;  ///< indexed by a
  std::vector<Channel> b_gates;  ///< indexed by b
  Measurement measurement;

  std::size_t dim() const noexcept { return initial.dim(); }
};

using InputMap = std::map<InputPair, double>;

struct EvaluationReport {
  InputMap per_input;                     ///< win probability per (a, b)
  double average = 0.0;                   ///< uniform mean of per_input
  std::optional<InputMap> erasure_ledger; ///< expected bits erased per (a, b), if any gate erases
};

namespace detail {

inline double mean_of(const InputMap& m) {
  double sum = 0.0;
  for (const auto& [k, v] : m) sum += v;
  return sum / static_cast<double>(m.size());
}

inline void check_gate_count(std::size_t n, const GameSpec& spec, const char* which) {
  if (n != static_cast<std::size_t>(spec.alphabet_size()))
    throw std::invalid_argument(std::string("strategy: ") + which + " gates must cover the input alphabet");
}

}  // namespace detail

inline void validate(const GameSpec& spec, const Strategy& s) {
  detail::check_gate_count(s.a_gates.size(), spec, "A");
  detail::check_gate_count(s.b_gates.size(), spec, "B");
  const std::size_t d = s.dim();
  for (const auto* gates : {&s.a_gates, &s.b_gates})
    for (const auto& g : *gates)
      if (g.dim() != d) throw DimensionError("strategy: gate dimension differs from the initial state");
  if (s.measurement.dim() != d) throw DimensionError("strategy: measurement dimension differs from the initial state");
  if (s.measurement.max_label() >= spec.modulus())
    throw std::invalid_argument("strategy: measurement label outside {0, ..., q-1}");
}

/// Exact success probabilities of a quantum strategy (trace formulas, no sampling).
inline EvaluationReport evaluate(const GameSpec& spec, const Strategy& s) {
  validate(spec, s);
  EvaluationReport report;
  InputMap ledger;
  bool erases = false;
  for (const auto* gates : {&s.a_gates, &s.b_gates})
    for (const auto& g : *gates) erases = erases || g.erases();

  for (int a = 0; a < spec.alphabet_size(); ++a) {
    const Channel& ga = s.a_gates[a];
    const State after_a = ga.apply(s.initial);
    const double erased_a = erases ? ga.expected_bits_erased(s.initial) : 0.0;
    for (int b = 0; b < spec.alphabet_size(); ++b) {
      const Channel& gb = s.b_gates[b];
      const State final_state = gb.apply(after_a);
      report.per_input[{a, b}] = s.measurement.probability_of(winning_answer(spec, a, b), final_state);
      if (erases) ledger[{a, b}] = erased_a + gb.expected_bits_erased(after_a);
    }
  }
  report.average = detail::mean_of(report.per_input);
  if (erases) report.erasure_ledger = std::move(ledger);
  return report;
}

// ---------------------------------------------------------------------------
// Classical systems

/// Left-stochastic map on d symbols: column j is the output distribution for input j.
///
/// `erasure_cost[j]` is the expected number of bits erased when the map acts
/// on symbol j. Bijections cost nothing; a reset charges one bit for every
/// symbol it overwrites.
class StochasticMap {
public:
  StochasticMap(std::size_t d, std::vector<double> column_major_probabilities, std::vector<double> erasure_cost = {})
      : d_(d), p_(std::move(column_major_probabilities)), cost_(std::move(erasure_cost)) {
    if (d == 0 || d > kMaxDim) throw DimensionError("StochasticMap: unsupported dimension");
    if (p_.size() != d * d) throw DimensionError("StochasticMap: expected d*d entries");
    for (std::size_t j = 0; j < d; ++j) {
      double col = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double v = (*this)(i, j);
        if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("StochasticMap: entries must lie in [0, 1]");
        col += v;
      }
      if (std::abs(col - 1.0) > kStructuralTol) throw std::invalid_argument("StochasticMap: columns must sum to 1");
    }
    if (cost_.empty()) cost_.assign(d, 0.0);
    if (cost_.size() != d) throw DimensionError("StochasticMap: one erasure cost per symbol required");
  }

  /// Deterministic map j -> f[j].
  static StochasticMap function(const std::vector<int>& f) {
    const std::size_t d = f.size();
    std::vector<double> p(d * d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      if (f[j] < 0 || static_cast<std::size_t>(f[j]) >= d) throw std::invalid_argument("StochasticMap: image out of range");
      p[static_cast<std::size_t>(f[j]) * d + j] = 1.0;
    }
    return StochasticMap(d, to_column_major(d, p));
  }

  static StochasticMap identity(std::size_t d) {
    std::vector<int> f(d);
    for (std::size_t i = 0; i < d; ++i) f[i] = static_cast<int>(i);
    return function(f);
  }

  /// Cyclic increment j -> j+1 mod d.
  static StochasticMap shift(std::size_t d) {
    std::vector<int> f(d);
    for (std::size_t i = 0; i < d; ++i) f[i] = static_cast<int>((i + 1) % d);
    return function(f);
  }

  /// With probability p reset to `target`, otherwise leave the symbol alone.
  static StochasticMap erase_to(std::size_t d, int target, double p = 1.0) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erase_to: p must lie in [0, 1]");
    if (target < 0 || static_cast<std::size_t>(target) >= d) throw std::invalid_argument("erase_to: target out of range");
    std::vector<double> rows(d * d, 0.0), cost(d, 0.0);
    for (std::size_t j = 0; j < d; ++j) {
      if (static_cast<int>(j) == target) {
        rows[j * d + j] = 1.0;
        continue;
      }
      rows[static_cast<std::size_t>(target) * d + j] = p;
      rows[j * d + j] = 1.0 - p;
      cost[j] = p;
    }
    return StochasticMap(d, to_column_major(d, rows), std::move(cost));
  }

  std::size_t dim() const noexcept { return d_; }
  /// P(output i | input j).
  double operator()(std::size_t i, std::size_t j) const { return p_[j * d_ + i]; }
  const std::vector<double>& erasure_cost() const noexcept { return cost_; }

  bool is_permutation() const {
    std::vector<int> hits(d_, 0);
    for (std::size_t j = 0; j < d_; ++j) {
      std::size_t ones = 0;
      for (std::size_t i = 0; i < d_; ++i)
        if ((*this)(i, j) == 1.0) {
          ++ones;
          ++hits[i];
        }
      if (ones != 1) return false;
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  }

  bool is_constant() const {
    for (std::size_t i = 0; i < d_; ++i) {
      bool all = true;
      for (std::size_t j = 0; j < d_; ++j) all = all && (*this)(i, j) == 1.0;
      if (all) return true;
    }
    return false;
  }

  std::vector<double> apply(const std::vector<double>& dist) const {
    if (dist.size() != d_) throw DimensionError("StochasticMap::apply: dimension mismatch");
    std::vector<double> out(d_, 0.0);
    for (std::size_t j = 0; j < d_; ++j)
      for (std::size_t i = 0; i < d_; ++i) out[i] += (*this)(i, j) * dist[j];
    return out;
  }

  double expected_bits_erased(const std::vector<double>& dist) const {
    double bits = 0.0;
    for (std::size_t j = 0; j < d_; ++j) bits += cost_[j] * dist[j];
    return bits;
  }

private:
  static std::vector<double> to_column_major(std::size_t d, const std::vector<double>& row_major) {
    std::vector<double> c(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) c[j * d + i] = row_major[i * d + j];
    return c;
  }

  std::size_t d_;
  std::vector<double> p_;
  std::vector<double> cost_;
};

struct ClassicalStrategy {
  std::vector<double> initial;  ///< distribution over symbols
  std::vector<StochasticMap> a_gates;
  std::vector<StochasticMap> b_gates;
  std::vector<int> readout;     ///< label of each symbol

  std::size_t dim() const noexcept { return initial.size(); }

  static std::vector<double> point_mass(std::size_t d, std::size_t symbol) {
    if (symbol >= d) throw std::invalid_argument("point_mass: symbol out of range");
    std::vector<double> v(d, 0.0);
    v[symbol] = 1.0;
    return v;
  }
};

inline void validate(const GameSpec& spec, const ClassicalStrategy& s) {
  detail::check_gate_count(s.a_gates.size(), spec, "A");
  detail::check_gate_count(s.b_gates.size(), spec, "B");
  const std::size_t d = s.dim();
  if (d == 0 || d > kMaxDim) throw DimensionError("classical strategy: unsupported dimension");
  double total = 0.0;
  for (double p : s.initial) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("classical strategy: initial distribution entries must lie in [0, 1]");
    total += p;
  }
  if (std::abs(total - 1.0) > kStructuralTol) throw std::invalid_argument("classical strategy: initial distribution must sum to 1");
  for (const auto* gates : {&s.a_gates, &s.b_gates})
    for (const auto& g : *gates)
      if (g.dim() != d) throw DimensionError("classical strategy: gate dimension mismatch");
  if (s.readout.size() != d) throw DimensionError("classical strategy: one readout label per symbol required");
  for (int l : s.readout)
    if (l < 0 || l >= spec.modulus()) throw std::invalid_argument("classical strategy: readout label outside {0, ..., q-1}");
}

inline EvaluationReport evaluate_classical(const GameSpec& spec, const ClassicalStrategy& s) {
  validate(spec, s);
  EvaluationReport report;
  InputMap ledger;
  bool erases = false;
  for (const auto* gates : {&s.a_gates, &s.b_gates})
    for (const auto& g : *gates)
      for (double c : g.erasure_cost()) erases = erases || c > 0.0;

  for (int a = 0; a < spec.alphabet_size(); ++a) {
    const auto& ga = s.a_gates[a];
    const auto mid = ga.apply(s.initial);
    for (int b = 0; b < spec.alphabet_size(); ++b) {
      const auto& gb = s.b_gates[b];
      const auto fin = gb.apply(mid);
      const int target = winning_answer(spec, a, b);
      double win = 0.0;
      for (std::size_t sym = 0; sym < fin.size(); ++sym)
        if (s.readout[sym] == target) win += fin[sym];
      report.per_input[{a, b}] = win;
      if (erases) ledger[{a, b}] = ga.expected_bits_erased(s.initial) + gb.expected_bits_erased(mid);
    }
  }
  report.average = detail::mean_of(report.per_input);
  if (erases) report.erasure_ledger = std::move(ledger);
  return report;
}

/// Quantum strategy with the same statistics: diagonal initial state,
/// Kraus operators sqrt(P(i|j)) |i><j|, computational-basis readout.
inline Strategy embed_classical(const ClassicalStrategy& s) {
  const std::size_t d = s.dim();
  auto to_channel = [d](const StochasticMap& m) {
    std::vector<ComplexMatrix> kraus;
    std::vector<double> weights;
    for (std::size_t j = 0; j < d; ++j) {
      const double stay = m(j, j);
      for (std::size_t i = 0; i < d; ++i) {
        const double pij = m(i, j);
        if (pij == 0.0) continue;
        kraus.push_back(ComplexMatrix::basis_operator(d, i, j) * std::sqrt(pij));
        // Spread symbol j's erasure cost over the branches that move it.
        const double moved = 1.0 - stay;
        weights.push_back(i != j && moved > 0.0 ? m.erasure_cost()[j] / moved : 0.0);
      }
    }
    return Channel(std::move(kraus), std::move(weights));
  };
  std::vector<Complex> diag(s.initial.begin(), s.initial.end());
  std::vector<Channel> a, b;
  for (const auto& g : s.a_gates) a.push_back(to_channel(g));
  for (const auto& g : s.b_gates) b.push_back(to_channel(g));
  return Strategy{State(ComplexMatrix::diagonal(diag)), std::move(a), std::move(b),
                  Measurement::computational(d, s.readout)};
}

}  // namespace chshstar
