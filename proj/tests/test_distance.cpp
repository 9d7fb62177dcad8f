#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace ldi;

TEST(Distance, SteaneAtSeveralPrimes) {
  const auto inv = embed(fx::steane());
  for (Int p : {2, 3, 5}) {
    const auto r = distance(instantiate(inv, p), 3);
    ASSERT_TRUE(r.distance) << p;
    EXPECT_EQ(*r.distance, 3u) << p;
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(weight(*r.witness), 3u);
  }
}

TEST(Distance, FiveQubitRawGenerators) {
  const auto rows = fx::load("five_qubit.code").rows.with_modulus(Modulus::integer());
  for (Int p : {2, 3, 5}) EXPECT_EQ(distance(instantiate(rows, p), 3).distance, 3u) << p;
}

TEST(Distance, BellNeedsKernelMode) {
  const auto rows = fx::load("bell_invariant.code").rows;
  for (Int p : {2, 3, 5}) {
    const auto code = instantiate(rows, p);
    EXPECT_EQ(distance(code, 2, DistanceMode::kernel_only).distance, 2u) << p;
    EXPECT_FALSE(distance(code, 2, DistanceMode::exclude_stabilizer).distance) << p;
  }
}

TEST(Distance, FourTwoTwoPrime) {
  const auto rows = fx::load("fourtwotwo_prime.code").rows;
  EXPECT_EQ(distance(instantiate(rows, 3), 2).distance, 2u);
  EXPECT_EQ(distance(fx::load("fourtwotwo.code").code(), 2).distance, 2u);
}

TEST(Distance, NoneBelowTrueDistance) {
  const auto r = distance(fx::steane(), 2);
  EXPECT_FALSE(r.distance);
  EXPECT_FALSE(r.witness);
}

TEST(Distance, ThreadsGiveSameWitness) {
  const auto code = instantiate(embed(fx::steane()), 3);
  const auto one = distance(code, 3, DistanceMode::exclude_stabilizer, 1);
  const auto four = distance(code, 3, DistanceMode::exclude_stabilizer, 4);
  EXPECT_EQ(one.distance, four.distance);
  EXPECT_EQ(one.witness, four.witness);
}

TEST(Distance, ArgumentChecks) {
  EXPECT_THROW(distance(fx::steane(), 0), std::invalid_argument);
  EXPECT_THROW(distance(fx::steane(), 8), std::invalid_argument);
  EXPECT_THROW(distance(fx::code({"XI", "ZI"}, 2), 1), validation_error);
}

TEST(Classify, PrintedFourTwoTwoArtifactAtThree) {
  const auto rows = fx::load("fourtwotwo_printed.code").rows;
  const auto e = phi_encode_integer(parse_pauli_exponents("X I I I", 3));
  const auto v = classify(e, rows, 3);
  EXPECT_EQ(v.verdict, Verdict::artifact);
  EXPECT_EQ(v.integer_syndrome, (std::vector<Int>{0, -3}));
  EXPECT_FALSE(v.in_stabilizer);
  // the same error is seen at 5
  EXPECT_EQ(classify(e, rows, 5).verdict, Verdict::detectable);
}

TEST(Classify, WeightOneArtifactFoundByEnumeration) {
  const auto rows = fx::load("fourtwotwo_printed.code").rows;
  const auto all = enumerate_undetectable(rows, 3, 1);
  bool artifact = false;
  for (const auto& v : all) {
    EXPECT_EQ(weight(v.error), 1u);
    EXPECT_NE(v.verdict, Verdict::detectable);
    artifact = artifact || v.verdict == Verdict::artifact;
  }
  EXPECT_TRUE(artifact);
}

TEST(Classify, UnavoidableErrors) {
  const auto rows = fx::load("bell_invariant.code").rows;
  const auto e = SymplecticVector::from_flat(std::vector<Int>{1, -1, 0, 0}, Modulus::integer());
  const auto v = classify(e, rows, 3);
  EXPECT_EQ(v.verdict, Verdict::unavoidable);
  EXPECT_TRUE(v.in_stabilizer);
  EXPECT_THROW(classify(SymplecticVector(3, Modulus::integer()), rows, 3), std::invalid_argument);
}

TEST(Classify, NoArtifactsBelowDistanceAbovePStar) {
  // Steane: B = 1, d = 3, p* = 16, so at 17 every undetectable error of
  // weight below 3 is unavoidable (there are none of weight 1 or 2 at all).
  const auto inv = embed(fx::load("steane_standard.code").code());
  for (const auto& v : enumerate_undetectable(inv, 17, 2)) EXPECT_NE(v.verdict, Verdict::artifact);
}

TEST(IntegerDistance, Fixtures) {
  const auto bell = fx::load("bell_invariant.code").rows;
  EXPECT_EQ(integer_distance(bell, 2).distance, 2u);
  EXPECT_FALSE(integer_distance(bell, 2, DistanceMode::exclude_stabilizer).distance);

  const auto inv = embed(fx::steane());
  const auto lit = integer_distance(inv, 7);
  ASSERT_TRUE(lit.distance);
  EXPECT_GE(*lit.distance, 3u);
  EXPECT_THROW(integer_distance(fx::load("fourtwotwo_printed.code").rows, 2), std::invalid_argument);
}

TEST(IntegerDistance, WitnessIsUnavoidable) {
  const auto rows = fx::load("fourtwotwo_prime.code").rows;
  const auto r = integer_distance(rows, 4);
  ASSERT_TRUE(r.witness);
  for (const auto& g : rows.rows()) EXPECT_EQ(symplectic_product(*r.witness, g), 0);
}

TEST(EvaluatePrimes, SteaneAllPreserved) {
  const auto inv = embed(fx::steane());
  for (const auto& pi : evaluate_primes(inv.matrix, {2, 3, 5}, 3)) {
    EXPECT_TRUE(pi.valid);
    EXPECT_EQ(pi.distance, 3u);
  }
}

TEST(Search, SolveRegister) {
  std::vector<std::pair<Int, Int>> out;
  // a·1 + b·0 ≡ 1 (mod 3): a = 1, b free
  detail::solve_register({1}, {0}, {1}, 3, out);
  EXPECT_EQ(out, (std::vector<std::pair<Int, Int>>{{1, 0}, {1, 1}, {1, 2}}));
  // inconsistent
  detail::solve_register({0}, {0}, {1}, 3, out);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(detail::supports(4, 2).size(), 6u);
}

TEST(Distance, MatchesNaiveOnSmallFixtures) {
  std::vector<SymplecticMatrix> rows = {fx::load("bell_invariant.code").rows, fx::load("fourtwotwo_prime.code").rows,
                                        embed(fx::load("fourtwotwo.code").code()).matrix,
                                        embed(fx::load("bell.code").code()).matrix};
  for (const auto& m : rows)
    for (Int p : {2, 3})
      for (bool exclude : {true, false}) {
        const auto code = instantiate(m, p);
        const auto fast = distance(code, m.num_registers(), exclude ? DistanceMode::exclude_stabilizer : DistanceMode::kernel_only);
        EXPECT_EQ(fast.distance, fx::naive_distance(code.generators(), p, exclude)) << "p=" << p;
      }
}
