// Formula/oracle equivalence and structural invariants over exhaustive and
// random samples.

#include "oracles.hpp"
#include "test_util.hpp"
#include "tourney/canonical.hpp"
#include "tourney/classify.hpp"
#include "tourney/counting.hpp"
#include "tourney/extremal.hpp"
#include "tourney/generators.hpp"

using namespace tourney;

namespace {

void expect_formulas_match_oracles(const Tournament& t) {
  const int n = t.order();
  ASSERT_EQ(c3_formula(t), oracle_cycles(t, 3));
  ASSERT_EQ(c4_formula(t), oracle_cycles(t, 4));
  ASSERT_EQ(c4_formula_converse(t), c4_formula(t));
  ASSERT_EQ(c5_km(t), oracle_cycles(t, 5));
  ASSERT_EQ(s_formula(t, 3), oracle_strong_subs(t, 3));
  ASSERT_EQ(s_formula(t, 4), oracle_strong_subs(t, 4));
  ASSERT_EQ(s5_formula(t), oracle_strong_subs(t, 5));
  for (int m = 3; m <= std::min(n, 7); ++m) ASSERT_EQ(w_m(t, m), oracle_no_sink_source(t, m)) << m;
  for (int m = 3; m <= 5; ++m) ASSERT_EQ(trace_m(t, m), m * oracle_cycles(t, m)) << m;
}

}  // namespace

TEST(Properties, ExhaustiveOrderFive) {
  for (std::uint64_t code = 0; code < 1024; ++code) expect_formulas_match_oracles(Tournament::from_upper_code(5, code));
}

TEST(Properties, RandomOrdersSixToEleven) {
  for (int n = 6; n <= 11; ++n)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      SCOPED_TRACE(testing::Message() << "n=" << n << " seed=" << seed);
      expect_formulas_match_oracles(gen_random(n, seed * 1000 + n));
    }
}

TEST(Properties, IndependentOraclesAgree) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Tournament t = gen_random(9, seed);
    EXPECT_EQ(c5_km(t), oracle::cycles(t, 5));
    EXPECT_EQ(s5_formula(t), oracle::strong_subsets(t, 5));
    EXPECT_EQ(trace_m(t, 6), oracle::trace(t, 6));
  }
}

TEST(Properties, InvariantUnderRelabelingAndConverse) {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 6 + rep % 20;
    const Tournament t = gen_random(n, rng());
    const Tournament u = t.relabeled(testutil::shuffled_labels(n, rng));
    const Tournament c = converse(t);
    for (const Tournament* x : {&u, &c}) {
      EXPECT_EQ(c3_formula(*x), c3_formula(t));
      EXPECT_EQ(c4_formula(*x), c4_formula(t));
      EXPECT_EQ(c5_km(*x), c5_km(t));
      EXPECT_EQ(s5_formula(*x), s5_formula(t));
      EXPECT_EQ(trace_m(*x, 7), trace_m(t, 7));
    }
    EXPECT_EQ(classify(u).flags, classify(t).flags);
  }
}

TEST(Properties, KmTotalDivisibleByEight) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Tournament t = gen_random(20 + static_cast<int>(seed % 40), seed);
    EXPECT_NO_THROW(c5_km(t));
  }
}

TEST(Properties, CycleBoundOnRandomRegularSamples) {
  // Rotational tournaments are regular; every valid symbol is checked at n = 11, 13.
  for (int n : {11, 13}) {
    const int half = (n - 1) / 2;
    for (int mask = 0; mask < (1 << half); ++mask) {
      RotationalSymbol sym{n, {}};
      for (int d = 1; d <= half; ++d) sym.residues.push_back((mask >> (d - 1)) & 1 ? d : n - d);
      const Tournament t = gen_rotational(sym);
      EXPECT_LE(Rational(c5_km(t)), c5_upper_bound(n));
      EXPECT_GE(s5_formula(t), n % 4 == 3 ? value_s5_dr(n) : value_s5_ndr(n));
      EXPECT_LE(s5_formula(t), value_s5_rlt(n));
      EXPECT_TRUE(cycle_identity(t).holds());
    }
  }
}
