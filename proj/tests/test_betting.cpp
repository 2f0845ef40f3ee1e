/*
 * Copyright 2026 The partialbet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "partialbet/betting.hpp"
#include "partialbet/random.hpp"

using namespace partialbet;

namespace {

Formula f(const char* text, int n) { return parse(text, n); }

void expect_pair(const RPair& got, double u, double v) {
  EXPECT_NEAR(got.u, u, 1e-12);
  EXPECT_NEAR(got.v, v, 1e-12);
}

}  // namespace

TEST(ClassicalPayoff, Examples) {
  const ClassicalBet bet{f("p1", 1), 0.3, 10.0};
  EXPECT_NEAR(classical_payoff(bet, World::parse("T")), 7.0, 1e-12);
  EXPECT_NEAR(classical_payoff(bet, World::parse("F")), -3.0, 1e-12);
  EXPECT_EQ(classical_payoff({f("p1", 1), 0.3, 0.0}, World::parse("T")), 0.0);
  EXPECT_THROW((void)classical_payoff(bet, World::parse("N")), Error);
  EXPECT_THROW((void)classical_payoff({f("p1 | n", 1), 0.3, 1.0}, World::parse("T")), Error);
}

TEST(PartialPayoff, Examples) {
  const PartialBet bet{f("p1", 1), {0.2, 0.3}, {10.0, 5.0}};
  expect_pair(partial_payoff(bet, World::parse("T")), 8.0, -1.5);
  expect_pair(partial_payoff(bet, World::parse("N")), -2.0, -1.5);
  expect_pair(partial_payoff(bet, World::parse("F")), -2.0, 3.5);
}

TEST(PartialPayoff, MatchesPointwiseDefinition) {
  Rng rng(17);
  std::uniform_real_distribution<double> stake(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    const Formula a = random_formula(2, rng);
    const PartialValue q = random_partial_value(rng);
    const RPair s{stake(rng), stake(rng)};
    for (std::size_t k = 0; k < 9; ++k) {
      const std::string w = oracle::world(k, 2);
      const auto [u, v] = oracle::partial_payoff(a, w, q.x(), q.y(), s.u, s.v);
      expect_pair(partial_payoff({a, q, s}, World::parse(w)), u, v);
    }
  }
}

TEST(BookPayoff, EmptySingletonAndLinearity) {
  PartialBook empty(1);
  expect_pair(book_payoff(empty, World::parse("N")), 0.0, 0.0);
  const PartialBet bet{f("p1", 1), {0.2, 0.3}, {10.0, 5.0}};
  const PartialBook one(1, {bet});
  expect_pair(book_payoff(one, World::parse("T")), 8.0, -1.5);

  Rng rng(19);
  std::uniform_real_distribution<double> stake(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    PartialBook a(2), b(2);
    for (int j = 0; j < 3; ++j) {
      a.add({random_formula(2, rng), random_partial_value(rng), {stake(rng), stake(rng)}});
      b.add({random_formula(2, rng), random_partial_value(rng), {stake(rng), stake(rng)}});
    }
    const PartialBook both = a + b;
    for_each_world(2, [&](const World& w, std::size_t) {
      const RPair sum = book_payoff(a, w) + book_payoff(b, w);
      expect_pair(book_payoff(both, w), sum.u, sum.v);
      const RPair flipped = book_payoff(flip_stakes(both), w);
      expect_pair(flipped, -sum.u, -sum.v);
    });
  }
}

TEST(BookPayoff, ArityChecks) {
  PartialBook book(2);
  EXPECT_THROW(book.add({f("p1", 1), {0.1, 0.1}, {1, 1}}), Error);
  book.add({f("p1", 2), {0.1, 0.1}, {1, 1}});
  EXPECT_THROW((void)book_payoff(book, World::parse("T")), Error);
  EXPECT_THROW(book.add({f("p1", 2), {0.1, 0.1}, {std::nan(""), 1}}), Error);
}

TEST(Classify, Regions) {
  EXPECT_EQ(classify(RPair{-1, 2}), Region::DeltaMinus);
  EXPECT_EQ(classify(RPair{3, 3}), Region::Delta);
  EXPECT_EQ(classify(RPair{0.5, -0.5}), Region::DeltaPlus);
  EXPECT_EQ(classify(RPair{0.3, 0.3 + 1e-12}), Region::Delta);
  EXPECT_EQ(classify(-0.1), Region::DeltaMinus);
  EXPECT_EQ(classify(0.0), Region::Delta);
}

TEST(Detect, Examples) {
  const PartialBook axiom1(1, {{f("1 | p1", 1), {0.6, 0.2}, {-1, -1}}});
  const Verdict v = detect(axiom1);
  EXPECT_EQ(v.kind, VerdictKind::DutchBook);
  EXPECT_FALSE(v.witness);
  for (const auto& row : payoff_table(axiom1)) expect_pair(row.payoff, -0.4, 0.2);

  const Verdict e = detect(PartialBook(1));
  EXPECT_EQ(e.kind, VerdictKind::Neither);
  EXPECT_TRUE(e.empty_book);

  const ClassicalBook classical(1, {{f("p1 | !p1", 1), 0.9, -1.0}});
  EXPECT_EQ(detect(classical).kind, VerdictKind::DutchBook);
  for (const auto& row : payoff_table(classical)) EXPECT_NEAR(row.payoff, -0.1, 1e-12);
}

TEST(Detect, WeakAndNeitherWitnesses) {
  // Loses at T and F, breaks even at N.
  const PartialBook weak(1, {{f("p1", 1), {0.5, 0.2}, {1.0, 0.25}}, {f("!p1", 1), {0.1, 0.4}, {0.0, 1.125}}});
  const Verdict w = detect(weak);
  EXPECT_EQ(w.kind, VerdictKind::WeakDutchBook);
  ASSERT_TRUE(w.witness);
  EXPECT_EQ(w.witness->to_string(), "F");

  const PartialBook gain(1, {{f("p1", 1), {0.2, 0.3}, {10.0, 5.0}}});
  const Verdict n = detect(gain);
  EXPECT_EQ(n.kind, VerdictKind::Neither);
  ASSERT_TRUE(n.witness);
  EXPECT_EQ(n.witness->to_string(), "T");

  EXPECT_TRUE(satisfies(VerdictKind::DutchBook, VerdictKind::WeakDutchBook));
  EXPECT_FALSE(satisfies(VerdictKind::WeakDutchBook, VerdictKind::DutchBook));
  EXPECT_FALSE(satisfies(VerdictKind::Neither, VerdictKind::WeakDutchBook));
}

TEST(Detect, FlippedDutchBookGainsEverywhere) {
  const PartialBook book(2, {{f("p1 | !p1 | 1", 2), {0.7, 0.1}, {-1, -1}}});
  ASSERT_EQ(detect(book).kind, VerdictKind::DutchBook);
  for (const auto& row : payoff_table(flip_stakes(book))) {
    EXPECT_EQ(classify(row.payoff), Region::DeltaPlus);
  }
}

TEST(Detect, AgreesWithBruteForceDefinition) {
  Rng rng(23);
  std::uniform_real_distribution<double> stake(-2.0, 2.0);
  for (int i = 0; i < 300; ++i) {
    PartialBook book(2);
    for (int j = 0; j < 2; ++j) {
      book.add({random_formula(2, rng), random_partial_value(rng), {stake(rng), stake(rng)}});
    }
    int loss = 0, even = 0, gain = 0;
    for (std::size_t k = 0; k < 9; ++k) {
      const std::string w = oracle::world(k, 2);
      double u = 0, v = 0;
      for (const auto& b : book.bets()) {
        const auto [du, dv] =
            oracle::partial_payoff(b.formula, w, b.quotient.x(), b.quotient.y(), b.stake.u, b.stake.v);
        u += du;
        v += dv;
      }
      if (std::abs(u - v) <= 1e-9) ++even;
      else if (u < v) ++loss;
      else ++gain;
    }
    const VerdictKind expected = gain > 0             ? VerdictKind::Neither
                                 : loss == 9          ? VerdictKind::DutchBook
                                 : loss > 0           ? VerdictKind::WeakDutchBook
                                                      : VerdictKind::Neither;
    EXPECT_EQ(detect(book).kind, expected);
  }
}

TEST(Detect, ClassicalUsesClassicalWorldsOnly) {
  // Strict loss at both classical worlds; the neutral world is not visited.
  const ClassicalBook book(1, {{f("p1", 1), 0.5, 1.0}, {f("!p1", 1), 0.6, 1.0}});
  EXPECT_EQ(detect(book).kind, VerdictKind::DutchBook);
  EXPECT_EQ(payoff_table(book).size(), 2u);
}
