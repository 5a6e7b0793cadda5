/**
 * @file chshstar/chshmap.hpp
 * @brief Lift of a single-qubit unitary CHSH* strategy to a two-player
 *        CHSH strategy on a Bell pair, and per-input comparison of the two.
 *
 * Alice applies the transpose of A_a to her half of |Phi+>, Bob applies
 * B_b to his, and both measure X with + -> 0 and - -> 1. Because
 * (A^T (x) I)|Phi+> = (I (x) A)|Phi+>, Alice's X outcome x leaves Bob with
 * A Z^x |+>, and the success probability of x XOR y = a*b matches the
 * single-system game input by input.
 */
#pragma once

#include <cmath>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "game.hpp"
#include "qcore.hpp"

namespace chshstar {

/// |Phi+> = (|00> + |11>) / sqrt(2) as a column vector.
inline ComplexMatrix bell_ket() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(4, 1, {h, 0.0, 0.0, h});
}

struct ChshStrategy {
  State shared_state;
  std::vector<ComplexMatrix> alice_gates;  ///< A_a^T, indexed by a
  std::vector<ComplexMatrix> bob_gates;    ///< B_b, indexed by b
  Measurement alice_measurement;
  Measurement bob_measurement;
};

struct JointOutcome {
  int a, b, x, y;
  auto operator<=>(const JointOutcome&) const = default;
};

struct ChshReport {
  InputMap per_input;                          ///< P(x XOR y = a*b | a, b)
  std::map<JointOutcome, double> joint_table;  ///< P(x, y | a, b)
  double average = 0.0;
};

class NotNormalFormError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Accepts only d = 2 strategies with single-Kraus unitary gates, initial |+>
/// and the X measurement (+ -> 0, - -> 1).
inline ChshStrategy lift(const Strategy& s) {
  if (s.dim() != 2) throw DimensionError("lift: only qubit strategies can be lifted");
  if (s.a_gates.size() != 2 || s.b_gates.size() != 2) throw NotNormalFormError("lift: expects two A gates and two B gates");
  if (!approx_equal(s.initial.density(), outer(gates::ket_plus()), kStructuralTol))
    throw NotNormalFormError("lift: initial state must be |+>");
  const auto& m = s.measurement;
  const std::vector<ComplexMatrix> x_basis{outer(gates::ket_plus()), outer(gates::ket_minus())};
  bool x_measurement = m.projectors().size() == 2 && m.labels()[0] + m.labels()[1] == 1;
  for (std::size_t i = 0; x_measurement && i < 2; ++i)
    x_measurement = approx_equal(m.projectors()[i], x_basis[static_cast<std::size_t>(m.labels()[i])], kStructuralTol);
  if (!x_measurement) throw NotNormalFormError("lift: measurement must be X with + -> 0 and - -> 1");

  ChshStrategy cs{State::pure(bell_ket()), {}, {}, gates::pauli_measurement(gates::PauliAxis::x),
                  gates::pauli_measurement(gates::PauliAxis::x)};
  for (const auto& g : s.a_gates) {
    if (!g.is_unitary()) throw NotNormalFormError("lift: A gates must be unitary");
    cs.alice_gates.push_back(transpose(g.kraus().front()));
  }
  for (const auto& g : s.b_gates) {
    if (!g.is_unitary()) throw NotNormalFormError("lift: B gates must be unitary");
    cs.bob_gates.push_back(g.kraus().front());
  }
  return cs;
}

namespace detail {

inline void check_chsh(const ChshStrategy& cs) {
  if (cs.shared_state.dim() != 4) throw DimensionError("evaluate_chsh: shared state must be two qubits");
  if (cs.alice_gates.size() != 2 || cs.bob_gates.size() != 2)
    throw std::invalid_argument("evaluate_chsh: expects two gates per party");
  for (const auto* gates : {&cs.alice_gates, &cs.bob_gates})
    for (const auto& g : *gates)
      if (g.rows() != 2 || g.cols() != 2) throw DimensionError("evaluate_chsh: gates must be 2x2");
  if (cs.alice_measurement.dim() != 2 || cs.bob_measurement.dim() != 2)
    throw DimensionError("evaluate_chsh: measurements must act on one qubit");
}

/// Projector onto outcome label `x` of a one-qubit measurement.
inline ComplexMatrix label_projector(const Measurement& m, int x) {
  ComplexMatrix p(2, 2);
  for (std::size_t i = 0; i < m.projectors().size(); ++i)
    if (m.labels()[i] == x) p += m.projectors()[i];
  return p;
}

}  // namespace detail

inline ChshReport evaluate_chsh(const ChshStrategy& cs) {
  detail::check_chsh(cs);
  const GameSpec game(2);
  ChshReport report;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const ComplexMatrix u = tensor(cs.alice_gates[a], cs.bob_gates[b]);
      const ComplexMatrix rho = matmul(matmul(u, cs.shared_state.density()), dagger(u));
      double win = 0.0;
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
          const ComplexMatrix proj =
              tensor(detail::label_projector(cs.alice_measurement, x), detail::label_projector(cs.bob_measurement, y));
          const double p = std::real(matmul(proj, rho).trace());
          report.joint_table[{a, b, x, y}] = p;
          if ((x ^ y) == winning_answer(game, a, b)) win += p;
        }
      report.per_input[{a, b}] = win;
    }
  report.average = detail::mean_of(report.per_input);
  return report;
}

/// Bob's normalized state after Alice applies her gate for input `a` and
/// obtains outcome `x`, before Bob acts.
inline State bob_conditional_state(const ChshStrategy& cs, int a, int x) {
  detail::check_chsh(cs);
  const ComplexMatrix u = tensor(cs.alice_gates.at(static_cast<std::size_t>(a)), ComplexMatrix::identity(2));
  const ComplexMatrix rho = matmul(matmul(u, cs.shared_state.density()), dagger(u));
  const ComplexMatrix proj = tensor(detail::label_projector(cs.alice_measurement, x), ComplexMatrix::identity(2));
  ComplexMatrix bob = partial_trace_first(matmul(matmul(proj, rho), proj), 2, 2);
  const double p = std::real(bob.trace());
  if (p <= kStructuralTol) throw std::invalid_argument("bob_conditional_state: outcome has zero probability");
  bob *= 1.0 / p;
  return State(detail::hermitian_part(bob));
}

struct EquivalenceCheck {
  bool passed;
  double max_deviation;
};

/// Compares per-input success of the single-system strategy and its lift.
inline EquivalenceCheck verify_equivalence(const Strategy& s, double tol) {
  const ChshStrategy cs = lift(s);
  const auto single = evaluate(GameSpec(2), s);
  const auto chsh = evaluate_chsh(cs);
  double dev = 0.0;
  for (const auto& [key, p] : single.per_input) dev = std::max(dev, std::abs(p - chsh.per_input.at(key)));
  return {dev <= tol, dev};
}

}  // namespace chshstar
