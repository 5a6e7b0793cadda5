/**
 * @file chshstar/strategies.hpp
 * @brief Named strategies for the CHSH* game.
 */
#pragma once

#include <cmath>
#include <vector>

#include "game.hpp"
#include "qcore.hpp"

namespace chshstar::strategies {

/// |+>, A = (I, S), B = (T^dagger, T), X measurement. Wins every input with cos^2(pi/8).
inline Strategy tsirelson_optimal() {
  using namespace gates;
  return Strategy{State::pure(ket_plus()),
                  {Channel::unitary(identity()), Channel::unitary(s_gate())},
                  {Channel::unitary(dagger(t_gate())), Channel::unitary(t_gate())},
                  pauli_measurement(PauliAxis::x)};
}

/// Normal form used by the CHSH lift: |+> initial state and X measurement
/// (+ -> 0, - -> 1), arbitrary unitaries.
inline Strategy unitary_normal_form(const ComplexMatrix& a0, const ComplexMatrix& a1, const ComplexMatrix& b0,
                                    const ComplexMatrix& b1) {
  using namespace gates;
  return Strategy{State::pure(ket_plus()),
                  {Channel::unitary(a0), Channel::unitary(a1)},
                  {Channel::unitary(b0), Channel::unitary(b1)},
                  pauli_measurement(PauliAxis::x)};
}

/// |0>, identity gates, Z measurement: always answers 0.
inline Strategy trivial() {
  using namespace gates;
  const auto id = Channel::unitary(identity());
  return Strategy{State::pure(ket0()), {id, id}, {id, id}, pauli_measurement(PauliAxis::z)};
}

/// |0>, A = (I, X), B = (ERASE, I), Z measurement: wins with certainty.
inline Strategy erase_perfect() {
  using namespace gates;
  return Strategy{State::pure(ket0()),
                  {Channel::unitary(identity()), Channel::unitary(pauli_x())},
                  {erase_channel(), Channel::unitary(identity())},
                  pauli_measurement(PauliAxis::z)};
}

/// The erase-perfect strategy with B_0 replaced by a probability-p reset.
inline Strategy partial_erase_quantum(double p) {
  using namespace gates;
  return Strategy{State::pure(ket0()),
                  {Channel::unitary(identity()), Channel::unitary(pauli_x())},
                  {partial_erase(p), Channel::unitary(identity())},
                  pauli_measurement(PauliAxis::z)};
}

/// The optimal strategy with T -> Rz(eps) and T^dagger -> Rz(eps)^dagger.
inline Strategy clifford_plus_rz(double eps) {
  using namespace gates;
  return unitary_normal_form(identity(), s_gate(), dagger(rz(eps)), rz(eps));
}

/// Closed-form success probability of clifford_plus_rz(eps), written term by
/// term for the inputs (0,0), (0,1), (1,0), (1,1).
inline double clifford_plus_rz_formula(double eps) {
  const double half_pi = gates::pi / 2;
  return 0.25 * ((0.5 + std::cos(eps) / 2) + (0.5 + std::cos(-eps) / 2) + (0.5 + std::cos(half_pi - eps) / 2) +
                 (1.0 - 0.5 - std::cos(half_pi + eps) / 2));
}

/// Qutrit strategy for q = 3: initial T3|+>, A = (I, V, W), B = (I, W, V), Fourier measurement.
inline Strategy qutrit_fixed() {
  const QuditGates g = qudit_gates(3);
  ComplexMatrix plus(3, 1);
  for (std::size_t i = 0; i < 3; ++i) plus(i, 0) = 1.0 / std::sqrt(3.0);
  const auto id = Channel::unitary(g.identity);
  const auto v = Channel::unitary(*g.v);
  const auto w = Channel::unitary(*g.w);
  return Strategy{State::pure(matmul(*g.t3, plus)), {id, v, w}, {id, w, v}, g.fourier};
}

/// Qutrit reversible strategy for q = 2: |0>, A = B = (I, X), readout {0,1 -> 0, 2 -> 1}.
inline Strategy qutrit_perfect() {
  const QuditGates g = qudit_gates(3);
  const auto id = Channel::unitary(g.identity);
  const auto x = Channel::unitary(g.shift);
  return Strategy{State::basis(3, 0), {id, x}, {id, x},
                  Measurement({ComplexMatrix::basis_operator(3, 0, 0) + ComplexMatrix::basis_operator(3, 1, 1),
                               ComplexMatrix::basis_operator(3, 2, 2)},
                              {0, 1})};
}

namespace classical {

/// Bit starts at 0, A = (I, NOT), B = (reset-to-0 with probability p, I), identity readout.
inline ClassicalStrategy partial_erase(double p) {
  return ClassicalStrategy{ClassicalStrategy::point_mass(2, 0),
                           {StochasticMap::identity(2), StochasticMap::function({1, 0})},
                           {StochasticMap::erase_to(2, 0, p), StochasticMap::identity(2)},
                           {0, 1}};
}

inline ClassicalStrategy erase_perfect() { return partial_erase(1.0); }

inline ClassicalStrategy trivial(std::size_t d = 2) {
  std::vector<int> readout(d);
  for (std::size_t i = 0; i < d; ++i) readout[i] = static_cast<int>(i % 2);
  const auto id = StochasticMap::identity(d);
  return ClassicalStrategy{ClassicalStrategy::point_mass(d, 0), {id, id}, {id, id}, readout};
}

/// Trit starts at 0, A = B = (I, +1 mod 3), readout {0,1 -> 0, 2 -> 1}.
inline ClassicalStrategy trit_perfect() {
  const auto id = StochasticMap::identity(3);
  const auto x = StochasticMap::shift(3);
  return ClassicalStrategy{ClassicalStrategy::point_mass(3, 0), {id, x}, {id, x}, {0, 0, 1}};
}

/// q = 3, trit starts at 0, A = (I, I, X), B = (I, X, I), identity readout.
inline ClassicalStrategy trit_q3_bell() {
  const auto id = StochasticMap::identity(3);
  const auto x = StochasticMap::shift(3);
  return ClassicalStrategy{ClassicalStrategy::point_mass(3, 0), {id, id, x}, {id, x, id}, {0, 1, 2}};
}

}  // namespace classical

}  // namespace chshstar::strategies
