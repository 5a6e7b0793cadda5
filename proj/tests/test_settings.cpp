#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

#include "chshstar/settings.hpp"
#include "oracle.hpp"

using namespace chshstar;
using namespace chshstar::gates;

namespace {

bool is_pauli_eigenstate(const ComplexMatrix& ket) {
  for (const auto& s : pauli_eigenstates())
    if (std::abs(std::abs(inner(s, ket)) - 1.0) < 1e-9) return true;
  return false;
}

/// Signed permutation matrix of the conjugation action U P U^dagger on (X, Y, Z).
std::array<int, 9> pauli_action(const ComplexMatrix& u) {
  const std::array<ComplexMatrix, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
  std::array<int, 9> r{};
  for (std::size_t j = 0; j < 3; ++j) {
    const auto image = matmul(matmul(u, paulis[j]), dagger(u));
    for (std::size_t i = 0; i < 3; ++i)
      r[i * 3 + j] = static_cast<int>(std::lround(std::real(matmul(paulis[i], image).trace()) / 2.0));
  }
  return r;
}

int det3(const std::array<int, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) + m[2] * (m[3] * m[7] - m[4] * m[6]);
}

bool same_map(const StochasticMap& a, const StochasticMap& b) {
  if (a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

void expect_witness_consistent(const ValueResult& r) {
  EXPECT_NEAR(evaluate(r.game, r.witness).average, r.value, 1e-9);
  if (r.classical_witness) {
    EXPECT_NEAR(evaluate_classical(r.game, *r.classical_witness).average, r.value, 1e-9);
  }
}

}  // namespace

TEST(CliffordGroup, HasTwentyFourElementsIncludingGenerators) {
  const auto g = clifford_group_d2();
  ASSERT_EQ(g.size(), 24u);
  for (const auto& named : {identity(), pauli_x(), pauli_z(), hadamard(), s_gate()}) {
    bool found = false;
    for (const auto& c : g) found = found || approx_equal(c, canonical_phase(named), 1e-9);
    EXPECT_TRUE(found);
  }
}

TEST(CliffordGroup, PreservesStabilizerStates) {
  for (const auto& c : clifford_group_d2())
    for (const auto& s : pauli_eigenstates()) EXPECT_TRUE(is_pauli_eigenstate(matmul(c, s)));
}

TEST(CliffordGroup, MatchesRotationGroupOfTheCube) {
  // Oracle: the 24 proper signed permutations of three axes, enumerated directly.
  std::set<std::array<int, 9>> rotations;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      std::array<int, 9> m{};
      for (int i = 0; i < 3; ++i) m[i * 3 + perm[i]] = (signs >> i) & 1 ? -1 : 1;
      if (det3(m) == 1) rotations.insert(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ASSERT_EQ(rotations.size(), 24u);

  std::set<std::array<int, 9>> actions;
  for (const auto& c : clifford_group_d2()) actions.insert(pauli_action(c));
  EXPECT_EQ(actions, rotations);
}

TEST(ValueClifford, IsThreeQuartersWithEighthsQuantization) {
  const auto r = value_clifford();
  EXPECT_EQ(r.value, 0.75);
  EXPECT_EQ(r.method, Method::exhaustive);
  EXPECT_EQ(r.strategies_examined, 6ull * 24 * 24 * 24 * 24 * 6);
  ASSERT_TRUE(r.off_eighths.has_value());
  EXPECT_EQ(*r.off_eighths, 0u);
  expect_witness_consistent(r);
  // First maximum in enumeration order is the constant-output strategy.
  EXPECT_TRUE(approx_equal(r.witness.initial.density(), outer(ket0()), 1e-12));
  EXPECT_NEAR(evaluate(GameSpec(2), strategies::trivial()).average, 0.75, 1e-15);
}

TEST(ValueClassicalReversible, QubitIsThreeQuarters) {
  const auto r = value_classical_reversible(2);
  EXPECT_EQ(r.value, 0.75);
  EXPECT_EQ(r.strategies_examined, 128u);
  expect_witness_consistent(r);
}

TEST(ValueClassicalReversible, TritIsPerfectWithShiftWitness) {
  const auto r = value_classical_reversible(3);
  EXPECT_EQ(r.value, 1.0);
  EXPECT_EQ(r.strategies_examined, 3ull * 6 * 6 * 6 * 6 * 8);
  expect_witness_consistent(r);
  ASSERT_TRUE(r.classical_witness);
  const auto& w = *r.classical_witness;
  const auto id = StochasticMap::identity(3), x = StochasticMap::shift(3);
  EXPECT_EQ(w.initial, ClassicalStrategy::point_mass(3, 0));
  EXPECT_TRUE(same_map(w.a_gates[0], id));
  EXPECT_TRUE(same_map(w.a_gates[1], x));
  EXPECT_TRUE(same_map(w.b_gates[0], id));
  EXPECT_TRUE(same_map(w.b_gates[1], x));
  EXPECT_EQ(w.readout, (std::vector<int>{0, 0, 1}));
  EXPECT_THROW(value_classical_reversible(4), std::invalid_argument);
}

TEST(ValueClassicalIrreversible, IsOneWithEraseWitness) {
  const auto r = value_classical_irreversible();
  EXPECT_EQ(r.value, 1.0);
  expect_witness_consistent(r);
  ASSERT_TRUE(r.classical_witness);
  const auto& w = *r.classical_witness;
  EXPECT_NE(w.b_gates[0].is_constant(), w.b_gates[1].is_constant());
  EXPECT_TRUE(w.b_gates[0].is_constant());
  EXPECT_TRUE(w.a_gates[0].is_permutation());
  EXPECT_TRUE(w.a_gates[1].is_permutation());
  EXPECT_EQ(w.readout, (std::vector<int>{0, 1}));
}

TEST(ValueClassicalIrreversible, BijectiveRestrictionRecoversThreeQuarters) {
  auto alphabet = bit_function_alphabet();
  alphabet.erase(alphabet.begin() + 2, alphabet.end());
  const auto r = exhaustive_classical_search(GameSpec(2), 2, alphabet, binary_readouts(2));
  EXPECT_EQ(r.value, 0.75);
}

TEST(ValueUnitary, FindsTsirelsonValue) {
  const auto r = value_unitary();
  EXPECT_NEAR(r.value, oracle::tsirelson(), 1e-6);
  EXPECT_LE(r.value, oracle::tsirelson() + 1e-12);
  EXPECT_EQ(r.method, Method::optimized);
  expect_witness_consistent(r);
}

TEST(ValueUnitary, SeededAtKnownOptimumStaysThere) {
  OptimizerConfig cfg;
  const auto r = optimize_unitary_from(tsirelson_angles(), cfg);
  EXPECT_GE(r.value, oracle::tsirelson() - 1e-12);
}

TEST(ValueUnitary, TsirelsonAnglesReproduceNamedGates) {
  const auto angles = tsirelson_angles();
  const std::array<ComplexMatrix, 4> named{identity(), s_gate(), dagger(t_gate()), t_gate()};
  for (std::size_t k = 0; k < 4; ++k)
    EXPECT_TRUE(equal_up_to_phase(euler_zyz(angles[3 * k], angles[3 * k + 1], angles[3 * k + 2]), named[k]));
}

TEST(ValueUnitary, ZRotationGrid) { EXPECT_NEAR(zrotation_grid_value(10000), oracle::tsirelson(), 1e-4); }

TEST(ValueUnitary, FreeStateAndMeasurementDoesNotHelp) {
  OptimizerConfig cfg;
  cfg.free_state_and_measurement = true;
  const auto r = value_unitary(cfg);
  EXPECT_NEAR(r.value, oracle::tsirelson(), 1e-6);
  expect_witness_consistent(r);
}

TEST(ValueUnitary, RejectsInvalidConfig) {
  OptimizerConfig cfg;
  cfg.restarts = 8;
  EXPECT_THROW(value_unitary(cfg), std::invalid_argument);
  cfg = {};
  cfg.tolerance = 0.0;
  EXPECT_THROW(value_unitary(cfg), std::invalid_argument);
  EXPECT_THROW(optimize_unitary_from({0.0, 1.0}, OptimizerConfig{}), std::invalid_argument);
}

TEST(EpsilonSweep, Examples) {
  const std::vector<double> grid{pi / 4, 1e-6};
  const auto pts = epsilon_sweep(grid);
  EXPECT_NEAR(pts[0].p_formula, oracle::tsirelson(), 1e-15);
  EXPECT_NEAR(pts[0].p_circuit, oracle::tsirelson(), 1e-12);
  EXPECT_NEAR(pts[1].p_formula, 0.75, 1e-6);
  EXPECT_GT(pts[1].p_formula, 0.75);
}

TEST(EpsilonSweep, FormulaAgreesWithOracleAndCircuit) {
  const auto grid = uniform_open_grid(1001);
  for (const auto& p : epsilon_sweep(grid)) {
    ASSERT_NEAR(p.p_formula, oracle::rz_family(p.epsilon), 1e-15);
    ASSERT_LT(std::abs(p.p_formula - p.p_circuit), 1e-12);
    ASSERT_GT(p.p_formula, 0.75);
  }
}

TEST(EpsilonSweep, SymmetricAboutPiOverFour) {
  for (const double eps : uniform_open_grid(257)) {
    EXPECT_NEAR(strategies::clifford_plus_rz_formula(eps), strategies::clifford_plus_rz_formula(pi / 2 - eps), 1e-12);
  }
}

TEST(EpsilonSweep, RejectsOutOfRangeGrid) {
  const std::vector<double> bad{0.0};
  EXPECT_THROW(epsilon_sweep(bad), std::invalid_argument);
  const std::vector<double> bad2{pi / 2};
  EXPECT_THROW(epsilon_sweep(bad2), std::invalid_argument);
}

TEST(UniformOpenGrid, OddStepsContainPiOverFour) {
  const auto g = uniform_open_grid(9);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_DOUBLE_EQ(g[4], pi / 4);
  EXPECT_GT(g.front(), 0.0);
  EXPECT_LT(g.back(), pi / 2);
}

TEST(CliffordPlusRz, ExhaustiveValueBeatsClifford) {
  const double eps = pi / 8;
  const auto r = value_clifford_plus_rz(eps);
  EXPECT_GE(r.value, strategies::clifford_plus_rz_formula(eps) - 1e-12);
  EXPECT_GT(r.value, 0.75);
  expect_witness_consistent(r);
  EXPECT_THROW(value_clifford_plus_rz(0.0), std::invalid_argument);
}

TEST(QutritFixed, MatchesFrozenValue) {
  const auto r = value_qutrit_q3_fixed();
  EXPECT_EQ(r.game.modulus(), 3);
  EXPECT_EQ(std::round(r.value * 100) / 100, 0.71);
  EXPECT_GT(r.value, 2.0 / 3.0 + 0.04);
  EXPECT_NEAR(r.value, 0.712386014201, 5e-13);  // regression constant, 12 digits
  EXPECT_NEAR(r.value, oracle::kQutritFixedNumpy, 1e-14);
}

TEST(QutritFixed, AgreesWithPureStateOracle) {
  const auto s = strategies::qutrit_fixed();
  const auto g = qudit_gates(3);
  ComplexMatrix plus(3, 1);
  for (std::size_t i = 0; i < 3; ++i) plus(i, 0) = 1.0 / std::sqrt(3.0);
  std::vector<oracle::Vec> basis;
  for (std::size_t k = 0; k < 3; ++k) basis.push_back(oracle::to_vec(fourier_ket(3, k)));
  const std::vector<oracle::Mat> a{oracle::to_mat(g.identity), oracle::to_mat(*g.v), oracle::to_mat(*g.w)};
  const std::vector<oracle::Mat> b{oracle::to_mat(g.identity), oracle::to_mat(*g.w), oracle::to_mat(*g.v)};
  const double expected = oracle::pure_success(3, oracle::to_vec(matmul(*g.t3, plus)), a, b, basis, {0, 1, 2});
  EXPECT_NEAR(evaluate(GameSpec(3), s).average, expected, 1e-12);
}

namespace {

/// Plain-array brute force over deterministic trit strategies: best number of
/// won inputs out of 9 when every gate is drawn from `alphabet`.
int brute_force_q3_wins(const std::vector<std::array<int, 3>>& alphabet) {
  int best = 0;
  const std::size_t n = alphabet.size();
  for (int s = 0; s < 3; ++s)
    for (std::size_t code = 0; code < n * n * n * n * n * n; ++code) {
      std::size_t c = code;
      std::array<std::size_t, 6> idx{};
      for (auto& i : idx) i = c % n, c /= n;
      int wins = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const int out = alphabet[idx[3 + b]][alphabet[idx[a]][s]];
          wins += out == (a * b) % 3;
        }
      best = std::max(best, wins);
    }
  return best;
}

}  // namespace

TEST(ClassicalQ3, PermutationGatesReachSevenNinths) {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  ASSERT_EQ(brute_force_q3_wins(perms), 7);

  const auto r = value_classical_q3();
  EXPECT_EQ(r.value, 7.0 / 9.0);
  EXPECT_EQ(r.strategies_examined, 3ull * 6 * 6 * 6 * 6 * 6 * 6);
  expect_witness_consistent(r);
}

TEST(ClassicalQ3, ShiftGatesReachTwoThirds) {
  ASSERT_EQ(brute_force_q3_wins({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}), 6);

  const auto r = value_classical_q3_shifts();
  EXPECT_EQ(r.value, 6.0 / 9.0);
  EXPECT_EQ(r.strategies_examined, 3ull * 3 * 3 * 3 * 3 * 3 * 3);
  expect_witness_consistent(r);
  // First maximum in enumeration order: A_2 = B_1 = X, all other gates identity.
  ASSERT_TRUE(r.classical_witness);
  const auto& w = *r.classical_witness;
  const auto id = StochasticMap::identity(3), x = StochasticMap::shift(3);
  EXPECT_EQ(w.initial, ClassicalStrategy::point_mass(3, 0));
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_TRUE(same_map(w.a_gates[k], k == 2 ? x : id)) << "A" << k;
    EXPECT_TRUE(same_map(w.b_gates[k], k == 1 ? x : id)) << "B" << k;
  }
}

TEST(ClassicalQ3, NamedStrategies) {
  EXPECT_EQ(evaluate_classical(GameSpec(3), strategies::classical::trit_q3_bell()).average, 6.0 / 9.0);
  const auto id = StochasticMap::identity(3);
  const ClassicalStrategy all_identity{ClassicalStrategy::point_mass(3, 0), {id, id, id}, {id, id, id}, {0, 1, 2}};
  EXPECT_EQ(evaluate_classical(GameSpec(3), all_identity).average, 5.0 / 9.0);
  const auto swap12 = StochasticMap::function({0, 2, 1});
  const auto x = StochasticMap::shift(3);
  const ClassicalStrategy carry_a{ClassicalStrategy::point_mass(3, 0),
                                  {id, x, StochasticMap::function({2, 0, 1})},
                                  {id, id, swap12},
                                  {0, 1, 2}};
  EXPECT_EQ(evaluate_classical(GameSpec(3), carry_a).average, 7.0 / 9.0);
}

TEST(ClassicalQ3, BeatsTheFixedQutritStrategy) {
  EXPECT_GT(value_classical_q3().value, value_qutrit_q3_fixed().value);
  EXPECT_LT(value_classical_q3_shifts().value, value_qutrit_q3_fixed().value);
}

TEST(Settings, ValueOrderingBellTsirelsonPr) {
  const double rev = value_classical_reversible(2).value;
  const double cliff = value_clifford().value;
  const double unit = value_unitary().value;
  const double irr = value_classical_irreversible().value;
  EXPECT_EQ(rev, 0.75);
  EXPECT_EQ(cliff, 0.75);
  EXPECT_LT(cliff, unit);
  EXPECT_NEAR(unit, oracle::tsirelson(), 1e-6);
  EXPECT_LT(unit, irr);
  EXPECT_EQ(irr, 1.0);
}

TEST(SettingSpec, RejectsIncompatibleDimensions) {
  EXPECT_THROW((SettingSpec{SettingKind::clifford, 3}.validate()), std::invalid_argument);
  EXPECT_THROW((SettingSpec{SettingKind::qutrit_unitary_fixed, 2}.validate()), std::invalid_argument);
  EXPECT_THROW((SettingSpec{SettingKind::classical_reversible, 4}.validate()), std::invalid_argument);
  EXPECT_THROW((SettingSpec{SettingKind::clifford_plus_rz, 2, 2.0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((SettingSpec{SettingKind::classical_reversible, 3}.validate()));
  EXPECT_THROW((SettingSpec{SettingKind::classical_q3_shift, 2}.validate()), std::invalid_argument);
  EXPECT_EQ(value_of({SettingKind::classical_irreversible, 2}).value, 1.0);
}
