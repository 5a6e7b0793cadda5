/**
 * @file chshstar/settings.hpp
 * @brief Game values for each physical setting, by exhaustive enumeration
 *        (finite settings) or multi-start simplex search (unitary setting).
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "game.hpp"
#include "nelder_mead.hpp"
#include "qcore.hpp"
#include "strategies.hpp"

namespace chshstar {

inline constexpr std::uint64_t kDefaultSeed = 20190514;

enum class SettingKind {
  unitary,
  clifford,
  classical_reversible,
  classical_irreversible,
  clifford_plus_rz,
  qutrit_unitary_fixed,
  classical_q3_reversible,
  classical_q3_shift,
};

inline std::string to_string(SettingKind k) {
  switch (k) {
    case SettingKind::unitary: return "unitary";
    case SettingKind::clifford: return "clifford";
    case SettingKind::classical_reversible: return "classical-reversible";
    case SettingKind::classical_irreversible: return "irreversible";
    case SettingKind::clifford_plus_rz: return "clifford-rz";
    case SettingKind::qutrit_unitary_fixed: return "qutrit";
    case SettingKind::classical_q3_reversible: return "classical-q3";
    case SettingKind::classical_q3_shift: return "classical-q3-shift";
  }
  return "unknown";
}

struct SettingSpec {
  SettingKind kind = SettingKind::unitary;
  std::size_t dimension = 2;
  double epsilon = gates::pi / 4;  ///< clifford_plus_rz only

  void validate() const {
    switch (kind) {
      case SettingKind::unitary:
      case SettingKind::clifford:
      case SettingKind::classical_irreversible:
        if (dimension != 2) throw std::invalid_argument(to_string(kind) + " setting requires dimension 2");
        break;
      case SettingKind::clifford_plus_rz:
        if (dimension != 2) throw std::invalid_argument("clifford-rz setting requires dimension 2");
        if (!(epsilon > 0.0 && epsilon < gates::pi / 2))
          throw std::invalid_argument("clifford-rz setting requires epsilon in (0, pi/2)");
        break;
      case SettingKind::classical_reversible:
        if (dimension != 2 && dimension != 3)
          throw std::invalid_argument("classical-reversible setting requires dimension 2 or 3");
        break;
      case SettingKind::qutrit_unitary_fixed:
      case SettingKind::classical_q3_reversible:
      case SettingKind::classical_q3_shift:
        if (dimension != 3) throw std::invalid_argument(to_string(kind) + " setting requires dimension 3");
        break;
    }
  }
};

enum class Method { exhaustive, optimized, fixed_construction };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::optimized: return "optimized";
    case Method::fixed_construction: return "fixed-construction";
  }
  return "unknown";
}

struct ValueResult {
  double value;
  Strategy witness;
  std::optional<ClassicalStrategy> classical_witness;
  Method method;
  std::uint64_t strategies_examined;
  GameSpec game;
  /// Clifford enumeration only: examined averages that are not a multiple of 1/8.
  std::optional<std::uint64_t> off_eighths;
};

struct OptimizerConfig {
  std::size_t restarts = 32;
  std::size_t max_iterations = 20000;  ///< objective evaluations per local search
  double tolerance = 1e-12;            ///< function-value spread at convergence
  std::uint64_t seed = kDefaultSeed;
  bool free_state_and_measurement = false;

  void validate() const {
    if (restarts < 32) throw std::invalid_argument("optimizer: at least 32 restarts are required");
    if (max_iterations < 100) throw std::invalid_argument("optimizer: max_iterations must be at least 100");
    if (!(tolerance > 0.0 && tolerance < 1e-3)) throw std::invalid_argument("optimizer: tolerance must lie in (0, 1e-3)");
  }
};

// ---------------------------------------------------------------------------
// Stabilizer objects

/// The 24 single-qubit Cliffords modulo phase, as the closure of {H, S}.
/// Identity comes first; the rest follow breadth-first order.
inline std::vector<ComplexMatrix> clifford_group_d2() {
  const std::array<ComplexMatrix, 2> generators{gates::hadamard(), gates::s_gate()};
  std::vector<ComplexMatrix> group{canonical_phase(gates::identity())};
  for (std::size_t next = 0; next < group.size(); ++next) {
    for (const auto& g : generators) {
      ComplexMatrix candidate = canonical_phase(matmul(g, group[next]));
      bool seen = false;
      for (const auto& h : group) seen = seen || approx_equal(h, candidate, 1e-9);
      if (!seen) group.push_back(std::move(candidate));
    }
  }
  if (group.size() != 24) throw std::logic_error("clifford_group_d2: closure does not have 24 elements");
  return group;
}

/// |0>, |1>, |+>, |->, |+i>, |-i>.
inline std::vector<ComplexMatrix> pauli_eigenstates() {
  using namespace gates;
  return {ket0(), ket1(), ket_plus(), ket_minus(), ket_plus_i(), ket_minus_i()};
}

/// X, Y, Z measurements, each with both outcome labelings.
inline std::vector<Measurement> labeled_pauli_measurements() {
  using gates::PauliAxis;
  std::vector<Measurement> out;
  for (auto axis : {PauliAxis::x, PauliAxis::y, PauliAxis::z})
    for (int plus_label : {0, 1}) out.push_back(gates::pauli_measurement(axis, plus_label));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive search over finite quantum strategy spaces (q = 2)

namespace detail {

inline std::vector<Channel> as_channels(const std::vector<ComplexMatrix>& us) {
  std::vector<Channel> out;
  out.reserve(us.size());
  for (const auto& u : us) out.push_back(Channel::unitary(u));
  return out;
}

}  // namespace detail

/// Maximizes over every (initial, A0, A1, B0, B1, measurement) drawn from
/// the given finite sets. Iteration is lexicographic in that order and the
/// first maximum wins.
inline ValueResult exhaustive_unitary_search(const std::vector<ComplexMatrix>& initial_kets,
                                             const std::vector<ComplexMatrix>& gate_set,
                                             const std::vector<Measurement>& measurements) {
  const GameSpec game(2);
  const auto channels = detail::as_channels(gate_set);
  std::vector<State> initials;
  for (const auto& k : initial_kets) initials.push_back(State::pure(k));
  const std::size_t ni = initials.size(), ng = channels.size(), nm = measurements.size();

  // p0[((i * ng + ga) * ng + gb) * nm + m] = P(label 0 | initial i, A = ga, B = gb, measurement m)
  std::vector<double> p0(ni * ng * ng * nm);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t ga = 0; ga < ng; ++ga) {
      const State mid = channels[ga].apply(initials[i]);
      for (std::size_t gb = 0; gb < ng; ++gb) {
        const State fin = channels[gb].apply(mid);
        for (std::size_t m = 0; m < nm; ++m)
          p0[((i * ng + ga) * ng + gb) * nm + m] = measurements[m].probability_of(0, fin);
      }
    }

  double best = -1.0;
  std::array<std::size_t, 6> arg{};
  std::uint64_t examined = 0, off_eighths = 0;
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t a0 = 0; a0 < ng; ++a0)
      for (std::size_t a1 = 0; a1 < ng; ++a1)
        for (std::size_t b0 = 0; b0 < ng; ++b0)
          for (std::size_t b1 = 0; b1 < ng; ++b1)
            for (std::size_t m = 0; m < nm; ++m) {
              auto p = [&](std::size_t ga, std::size_t gb) { return p0[((i * ng + ga) * ng + gb) * nm + m]; };
              // Target answer is 0 except for (a, b) = (1, 1).
              const double avg = (p(a0, b0) + p(a0, b1) + p(a1, b0) + (1.0 - p(a1, b1))) / 4.0;
              ++examined;
              if (std::abs(8.0 * avg - std::round(8.0 * avg)) > 1e-9) ++off_eighths;
              if (avg > best) {
                best = avg;
                arg = {i, a0, a1, b0, b1, m};
              }
            }

  Strategy witness{initials[arg[0]],
                   {channels[arg[1]], channels[arg[2]]},
                   {channels[arg[3]], channels[arg[4]]},
                   measurements[arg[5]]};
  return ValueResult{best, std::move(witness), std::nullopt, Method::exhaustive, examined, game, off_eighths};
}

/// Clifford setting: Pauli eigenstates, Clifford gates, labeled Pauli measurements.
inline ValueResult value_clifford() {
  return exhaustive_unitary_search(pauli_eigenstates(), clifford_group_d2(), labeled_pauli_measurements());
}

/// Clifford setting with Rz(eps) and Rz(eps)^dagger added to the gate set.
inline ValueResult value_clifford_plus_rz(double eps) {
  if (!(eps > 0.0 && eps < gates::pi / 2)) throw std::invalid_argument("value_clifford_plus_rz: eps must lie in (0, pi/2)");
  auto gate_set = clifford_group_d2();
  gate_set.push_back(gates::rz(eps));
  gate_set.push_back(dagger(gates::rz(eps)));
  auto r = exhaustive_unitary_search(pauli_eigenstates(), gate_set, labeled_pauli_measurements());
  r.off_eighths.reset();
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive search over classical strategies

/// Maximizes over initial symbol, every assignment of `alphabet` maps to the
/// 2q gate slots (A_0..A_{q-1}, B_0..B_{q-1}), and every listed readout.
/// Lexicographic in (initial, A_0, ..., B_{q-1}, readout); first maximum wins.
inline ValueResult exhaustive_classical_search(const GameSpec& game, std::size_t d,
                                               const std::vector<StochasticMap>& alphabet,
                                               const std::vector<std::vector<int>>& readouts) {
  if (alphabet.empty() || readouts.empty()) throw std::invalid_argument("exhaustive_classical_search: empty search space");
  const std::size_t q = static_cast<std::size_t>(game.alphabet_size());
  const std::size_t slots = 2 * q;

  std::optional<ClassicalStrategy> best_strategy;
  double best = -1.0;
  std::uint64_t examined = 0;
  std::vector<std::size_t> idx(slots, 0);
  for (std::size_t init = 0; init < d; ++init) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      ClassicalStrategy s{ClassicalStrategy::point_mass(d, init), {}, {}, {}};
      for (std::size_t k = 0; k < q; ++k) {
        s.a_gates.push_back(alphabet[idx[k]]);
        s.b_gates.push_back(alphabet[idx[q + k]]);
      }
      for (const auto& r : readouts) {
        s.readout = r;
        const double avg = evaluate_classical(game, s).average;
        ++examined;
        if (avg > best) {
          best = avg;
          best_strategy = s;
        }
      }
      // Odometer, last slot fastest.
      std::size_t k = slots;
      while (k > 0 && ++idx[k - 1] == alphabet.size()) idx[--k] = 0;
      if (k == 0) break;
    }
  }
  Strategy witness = embed_classical(*best_strategy);
  return ValueResult{best, std::move(witness), std::move(best_strategy), Method::exhaustive, examined, game, std::nullopt};
}

/// Permutations of d symbols: powers of the cyclic shift first (identity
/// leading), then the remaining permutations in lexicographic order.
/// The d cyclic shifts X^k, identity first.
inline std::vector<StochasticMap> shift_alphabet(std::size_t d) {
  std::vector<StochasticMap> out;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<int> f(d);
    for (std::size_t i = 0; i < d; ++i) f[i] = static_cast<int>((i + k) % d);
    out.push_back(StochasticMap::function(f));
  }
  return out;
}

/// All d! permutations; the cyclic shifts come first, then the rest in lexicographic order.
inline std::vector<StochasticMap> permutation_alphabet(std::size_t d) {
  std::vector<std::vector<int>> perms;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<int> f(d);
    for (std::size_t i = 0; i < d; ++i) f[i] = static_cast<int>((i + k) % d);
    perms.push_back(f);
  }
  std::vector<int> f(d);
  for (std::size_t i = 0; i < d; ++i) f[i] = static_cast<int>(i);
  do {
    if (std::find(perms.begin(), perms.end(), f) == perms.end()) perms.push_back(f);
  } while (std::next_permutation(f.begin(), f.end()));
  std::vector<StochasticMap> out;
  for (const auto& p : perms) out.push_back(StochasticMap::function(p));
  return out;
}

/// All 2^d labelings of d symbols into bits; labeling L sends symbol s to bit s of L.
inline std::vector<std::vector<int>> binary_readouts(std::size_t d) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<int> r(d);
    for (std::size_t s = 0; s < d; ++s) r[s] = static_cast<int>((mask >> s) & 1u);
    out.push_back(r);
  }
  return out;
}

/// The four functions on one bit: identity, NOT, constant 0, constant 1.
inline std::vector<StochasticMap> bit_function_alphabet() {
  return {StochasticMap::identity(2), StochasticMap::function({1, 0}), StochasticMap::erase_to(2, 0),
          StochasticMap::erase_to(2, 1)};
}

inline ValueResult value_classical_reversible(std::size_t d) {
  if (d != 2 && d != 3) throw std::invalid_argument("value_classical_reversible: d must be 2 or 3");
  return exhaustive_classical_search(GameSpec(2), d, permutation_alphabet(d), binary_readouts(d));
}

inline ValueResult value_classical_irreversible() {
  return exhaustive_classical_search(GameSpec(2), 2, bit_function_alphabet(), binary_readouts(2));
}

/// q = 3 on a trit: all permutation gates, identity readout. The optimum is 7/9:
/// with A_a = X^a the trit carries a, and B_1 = I, B_2 = (1 2) then answer a*b exactly.
inline ValueResult value_classical_q3() {
  return exhaustive_classical_search(GameSpec(3), 3, permutation_alphabet(3), {{0, 1, 2}});
}

/// q = 3 on a trit with gates restricted to the cyclic shifts. The answer is then
/// s + f(a) + g(b) mod 3, an additive strategy, and the optimum is 2/3.
inline ValueResult value_classical_q3_shifts() {
  return exhaustive_classical_search(GameSpec(3), 3, shift_alphabet(3), {{0, 1, 2}});
}

// ---------------------------------------------------------------------------
// Unitary setting

namespace detail {

inline Strategy strategy_from_angles(std::span<const double> x, bool free_state_and_measurement) {
  auto gate = [&](std::size_t k) { return Channel::unitary(gates::euler_zyz(x[3 * k], x[3 * k + 1], x[3 * k + 2])); };
  if (!free_state_and_measurement)
    return Strategy{State::pure(gates::ket_plus()), {gate(0), gate(1)}, {gate(2), gate(3)},
                    gates::pauli_measurement(gates::PauliAxis::x)};
  const ComplexMatrix up = gates::bloch_ket(x[14], x[15]);
  const ComplexMatrix down = gates::bloch_ket(gates::pi - x[14], x[15] + gates::pi);
  return Strategy{State::pure(gates::bloch_ket(x[12], x[13])), {gate(0), gate(1)}, {gate(2), gate(3)},
                  Measurement::in_basis({up, down}, {0, 1})};
}

inline std::size_t parameter_count(bool free_state_and_measurement) { return free_state_and_measurement ? 16 : 12; }

/// Local simplex search followed by re-started polishing passes from the incumbent.
inline optim::NelderMeadResult local_maximize(std::vector<double> start, const OptimizerConfig& cfg,
                                              std::uint64_t& evaluations) {
  const GameSpec game(2);
  auto neg_value = [&](const std::vector<double>& x) {
    return -evaluate(game, strategy_from_angles(x, cfg.free_state_and_measurement)).average;
  };
  optim::NelderMeadOptions opt;
  opt.max_evaluations = cfg.max_iterations;
  opt.ftol = cfg.tolerance;
  auto res = optim::nelder_mead(neg_value, std::move(start), opt);
  evaluations += res.evaluations;
  for (int pass = 0; pass < 4; ++pass) {
    opt.initial_step *= 0.25;
    auto again = optim::nelder_mead(neg_value, res.x, opt);
    evaluations += again.evaluations;
    const bool improved = again.value < res.value - cfg.tolerance;
    if (again.value < res.value) res = std::move(again);
    if (!improved) break;
  }
  return res;
}

}  // namespace detail

/// Euler angles of the optimal strategy: A = (I, S), B = (T^dagger, T), up to phase.
inline std::vector<double> tsirelson_angles() {
  const double pi = gates::pi;
  return {0, 0, 0, pi / 2, 0, 0, -pi / 4, 0, 0, pi / 4, 0, 0};
}

/// Single local search from a caller-supplied point (12 or 16 angles per config).
inline ValueResult optimize_unitary_from(std::vector<double> start, const OptimizerConfig& cfg) {
  if (start.size() != detail::parameter_count(cfg.free_state_and_measurement))
    throw std::invalid_argument("optimize_unitary_from: wrong number of parameters");
  std::uint64_t evals = 0;
  auto res = detail::local_maximize(std::move(start), cfg, evals);
  return ValueResult{-res.value, detail::strategy_from_angles(res.x, cfg.free_state_and_measurement), std::nullopt,
                     Method::optimized, evals, GameSpec(2), std::nullopt};
}

/// Multi-start simplex maximization of the success probability over four
/// Z-Y-Z parametrized unitaries (|+> and X measurement fixed unless the
/// config frees them).
inline ValueResult value_unitary(const OptimizerConfig& cfg = {}) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * gates::pi);
  const std::size_t n = detail::parameter_count(cfg.free_state_and_measurement);

  std::uint64_t evals = 0;
  optim::NelderMeadResult best{{}, std::numeric_limits<double>::infinity(), 0, false};
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    std::vector<double> start(n);
    for (double& v : start) v = angle(rng);
    auto res = detail::local_maximize(std::move(start), cfg, evals);
    if (res.value < best.value) best = std::move(res);
  }

  double value = -best.value;
  Strategy witness = detail::strategy_from_angles(best.x, cfg.free_state_and_measurement);
  if (cfg.free_state_and_measurement) {
    // Trivial PVMs {I, 0} answer a constant; they are part of the free space.
    const GameSpec game(2);
    for (int label : {0, 1}) {
      Strategy constant = witness;
      constant.measurement = Measurement({ComplexMatrix::identity(2), ComplexMatrix(2, 2)}, {label, 1 - label});
      const double v = evaluate(game, constant).average;
      ++evals;
      if (v > value) {
        value = v;
        witness = std::move(constant);
      }
    }
  }
  return ValueResult{value, std::move(witness), std::nullopt, Method::optimized, evals, GameSpec(2), std::nullopt};
}

/// Best value over a uniform grid of `points` angles eps in [0, 2 pi) for the
/// Z-rotation family A = (I, S), B = (Rz(eps)^dagger, Rz(eps)).
inline double zrotation_grid_value(std::size_t points) {
  if (points < 2) throw std::invalid_argument("zrotation_grid_value: need at least 2 points");
  const GameSpec game(2);
  double best = 0.0;
  for (std::size_t k = 0; k < points; ++k) {
    const double eps = 2 * gates::pi * static_cast<double>(k) / static_cast<double>(points);
    best = std::max(best, evaluate(game, strategies::clifford_plus_rz(eps)).average);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Clifford + Rz(eps) sweep

struct SweepPoint {
  double epsilon;
  double p_formula;
  double p_circuit;
};

/// `steps` interior points k (pi/2) / (steps + 1), k = 1..steps. Odd step
/// counts place the middle point at pi/4.
inline std::vector<double> uniform_open_grid(std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("uniform_open_grid: steps must be positive");
  std::vector<double> grid;
  grid.reserve(steps);
  for (std::size_t k = 1; k <= steps; ++k)
    grid.push_back(gates::pi / 2 * (static_cast<double>(k) / static_cast<double>(steps + 1)));
  return grid;
}

inline std::vector<SweepPoint> epsilon_sweep(std::span<const double> eps_grid) {
  const GameSpec game(2);
  std::vector<SweepPoint> out;
  out.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    if (!(eps > 0.0 && eps < gates::pi / 2)) throw std::invalid_argument("epsilon_sweep: grid value outside (0, pi/2)");
    out.push_back({eps, strategies::clifford_plus_rz_formula(eps), evaluate(game, strategies::clifford_plus_rz(eps)).average});
  }
  return out;
}

// ---------------------------------------------------------------------------
// q = 3

inline ValueResult value_qutrit_q3_fixed() {
  const GameSpec game(3);
  Strategy s = strategies::qutrit_fixed();
  const double v = evaluate(game, s).average;
  return ValueResult{v, std::move(s), std::nullopt, Method::fixed_construction, 1, game, std::nullopt};
}

// ---------------------------------------------------------------------------

inline ValueResult value_of(const SettingSpec& setting, const OptimizerConfig& cfg = {}) {
  setting.validate();
  switch (setting.kind) {
    case SettingKind::unitary: return value_unitary(cfg);
    case SettingKind::clifford: return value_clifford();
    case SettingKind::classical_reversible: return value_classical_reversible(setting.dimension);
    case SettingKind::classical_irreversible: return value_classical_irreversible();
    case SettingKind::clifford_plus_rz: return value_clifford_plus_rz(setting.epsilon);
    case SettingKind::qutrit_unitary_fixed: return value_qutrit_q3_fixed();
    case SettingKind::classical_q3_reversible: return value_classical_q3();
    case SettingKind::classical_q3_shift: return value_classical_q3_shifts();
  }
  throw std::invalid_argument("value_of: unknown setting");
}

}  // namespace chshstar
