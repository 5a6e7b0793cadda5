#include <gtest/gtest.h>

#include <cmath>

#include "chshstar/landauer.hpp"
#include "chshstar/strategies.hpp"

using namespace chshstar;
using namespace chshstar::landauer;

namespace {

const double kSqrt2Minus1 = std::sqrt(2.0) - 1.0;

}  // namespace

TEST(ErasureValue, Examples) {
  EXPECT_NEAR(erasure_value(1.0), 1.0, 1e-15);
  EXPECT_NEAR(erasure_value(0.0), 0.75, 1e-15);
  EXPECT_NEAR(erasure_value(kSqrt2Minus1), std::pow(std::cos(gates::pi / 8), 2), 1e-12);
  EXPECT_THROW(erasure_value(-0.1), std::out_of_range);
  EXPECT_THROW(erasure_value(1.1), std::out_of_range);
}

TEST(SolveErasureProbability, Examples) {
  EXPECT_NEAR(solve_erasure_probability(0.75), 0.0, 1e-15);
  EXPECT_NEAR(solve_erasure_probability(1.0), 1.0, 1e-15);
  EXPECT_NEAR(solve_erasure_probability(std::pow(std::cos(gates::pi / 8), 2)), kSqrt2Minus1, 1e-12);
  EXPECT_THROW(solve_erasure_probability(0.7), std::out_of_range);
  EXPECT_THROW(solve_erasure_probability(1.01), std::out_of_range);
}

TEST(EntropyLedger, OnlyInputOneZeroErases) {
  const auto r = entropy_ledger(kSqrt2Minus1);
  EXPECT_NEAR(r.per_input_bits_erased.at({1, 0}), kSqrt2Minus1, 1e-15);
  EXPECT_EQ(r.per_input_bits_erased.at({0, 0}), 0.0);
  EXPECT_EQ(r.per_input_bits_erased.at({0, 1}), 0.0);
  EXPECT_EQ(r.per_input_bits_erased.at({1, 1}), 0.0);
  EXPECT_NEAR(r.average_entropy, 0.25 * kSqrt2Minus1, 1e-15);
  EXPECT_EQ(r.average_entropy, r.average_bits);
}

TEST(EntropyLedger, NoErasureNoEntropy) {
  const auto r = entropy_ledger(0.0);
  EXPECT_EQ(r.average_bits, 0.0);
  EXPECT_EQ(r.per_input_bits_erased.size(), 4u);
}

TEST(Property, ValueIsLinearInP) {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    ASSERT_NEAR(erasure_value(p), (3.0 + p) / 4.0, 1e-15) << p;
    ASSERT_NEAR(entropy_ledger(p).average_entropy, p / 4.0, 1e-15) << p;
    ASSERT_NEAR(erasure_value(p) - 0.75, entropy_ledger(p).average_bits, 1e-15) << p;
  }
}

TEST(Property, SolveRoundTrip) {
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.75 + 0.25 * i / 100.0;
    ASSERT_NEAR(erasure_value(solve_erasure_probability(t)), t, 1e-12) << t;
  }
}

TEST(Property, EntropyMonotoneInValue) {
  double prev_value = -1.0, prev_entropy = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const double v = erasure_value(p), e = entropy_ledger(p).average_entropy;
    ASSERT_GT(v, prev_value);
    ASSERT_GT(e, prev_entropy);
    prev_value = v;
    prev_entropy = e;
  }
}

TEST(Property, QuantumEmbeddingChargesTheSameBits) {
  for (int i = 0; i <= 20; ++i) {
    const double p = i / 20.0;
    const auto q = evaluate(GameSpec(2), strategies::partial_erase_quantum(p));
    const auto c = entropy_ledger(p);
    ASSERT_NEAR(q.average, erasure_value(p), 1e-15);
    ASSERT_TRUE(q.erasure_ledger.has_value());
    for (const auto& [k, bits] : c.per_input_bits_erased) ASSERT_NEAR(q.erasure_ledger->at(k), bits, 1e-15);
  }
}
