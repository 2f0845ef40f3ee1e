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
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "partialbet/kleene.hpp"
#include "partialbet/random.hpp"

using namespace partialbet;

namespace {

Formula p(int i, int n) { return Formula::var(i, n); }

std::string encode(const PartialSet& s) {
  std::string r(s.universe()->size(), '.');
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s.pos().test(i) ? '+' : s.neg().test(i) ? '-' : '.';
  return r;
}

}  // namespace

// -- parsing and printing ---------------------------------------------------------

TEST(Parse, Grammar) {
  EXPECT_EQ(parse("p1 & !p2", 2), p(1, 2) & !p(2, 2));
  EXPECT_EQ(parse("p1 | p2 & p3", 3), p(1, 3) | (p(2, 3) & p(3, 3)));
  EXPECT_EQ(parse("p1 & p2 & p3", 3), (p(1, 3) & p(2, 3)) & p(3, 3));
  EXPECT_EQ(parse(" ( p1|p2 ) & n ", 2), (p(1, 2) | p(2, 2)) & Formula::neutral(2));
  const Formula zero = Formula::zero(0);
  const Formula lhs = !!zero;
  EXPECT_EQ(parse("!!0 | 1", 0), lhs | Formula::one(0));
}

TEST(Parse, VariableOutOfRange) {
  try {
    (void)parse("p3", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Arity);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  EXPECT_THROW((void)parse("p0", 2), Error);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  for (const char* bad : {"", "p1 &", "(p1", "p1 p2", "p1 ^ p2", "p", ")"}) {
    EXPECT_THROW((void)parse(bad, 2), ParseError) << bad;
  }
  try {
    (void)parse("p1 & )", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Parse, PrintRoundTrip) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Formula f = random_formula(3, rng);
    EXPECT_EQ(parse(f.to_string(), 3), f) << f;
  }
  EXPECT_EQ((p(1, 2) & !p(2, 2)).to_string(), "p1 & !p2");
  EXPECT_EQ((!(p(1, 2) & p(2, 2))).to_string(), "!(p1 & p2)");
  EXPECT_EQ((p(1, 3) | (p(2, 3) | p(3, 3))).to_string(), "p1 | (p2 | p3)");
}

TEST(Parse, InferArity) {
  EXPECT_EQ(infer_arity("p1 & p7"), 7);
  EXPECT_EQ(infer_arity("1 | n"), 0);
}

TEST(Formula, ArityMismatchIsAnError) {
  EXPECT_THROW((void)(p(1, 1) & p(1, 2)), Error);
  EXPECT_THROW((void)Formula::var(3, 2), Error);
  EXPECT_TRUE(parse("p1 | !p1", 1).is_classical());
  EXPECT_FALSE(parse("p1 | n", 1).is_classical());
}

// -- truth values and worlds ------------------------------------------------------

TEST(Truth, KleeneTables) {
  using enum TruthValue;
  EXPECT_EQ(kleene_and(N, F), F);
  EXPECT_EQ(kleene_or(N, N), N);
  EXPECT_EQ(kleene_not(N), N);
  EXPECT_EQ(kleene_not(T), F);
  EXPECT_EQ(kleene_and(T, N), N);
  EXPECT_EQ(kleene_or(F, N), N);
  EXPECT_TRUE(approx_equal(pair(F), PartialValue(0, 1)));
  EXPECT_TRUE(approx_equal(pair(N), PartialValue(0, 0)));
  EXPECT_TRUE(approx_equal(pair(T), PartialValue(1, 0)));
  EXPECT_TRUE(pv_leq(pair(F), pair(N)));
  EXPECT_TRUE(pv_leq(pair(N), pair(T)));
}

TEST(Truth, WorldParsingAndIndex) {
  const World w = World::parse("TNF");
  EXPECT_EQ(w.var(1), TruthValue::T);
  EXPECT_EQ(w.var(3), TruthValue::F);
  EXPECT_EQ(w.index(), 2u * 9 + 1u * 3 + 0u);
  EXPECT_EQ(World::from_index(w.index(), 3), w);
  EXPECT_THROW(World::parse("TXF"), ParseError);
  EXPECT_EQ(all_worlds(2).size(), 9u);
  EXPECT_EQ(all_worlds(2).front().to_string(), "FF");
  EXPECT_EQ(all_worlds(2).back().to_string(), "TT");
}

TEST(Truth, InformationOrder) {
  EXPECT_TRUE(info_leq(World::parse("NN"), World::parse("TF")));
  EXPECT_FALSE(info_leq(World::parse("TN"), World::parse("FN")));
  EXPECT_TRUE(info_leq(World::parse("TNF"), World::parse("TNF")));
  EXPECT_THROW((void)info_leq(World::parse("T"), World::parse("TT")), Error);
}

// -- evaluation ----------------------------------------------------------------

TEST(Eval, Examples) {
  EXPECT_EQ(eval(parse("p1 & p2", 2), World::parse("NF")), TruthValue::F);
  EXPECT_EQ(eval(parse("p1 | p2", 2), World::parse("NN")), TruthValue::N);
  EXPECT_EQ(eval(parse("!n", 1), World::parse("T")), TruthValue::N);
  EXPECT_EQ(eval(parse("p1 & !p1", 1), World::parse("N")), TruthValue::N);
  EXPECT_THROW((void)eval(parse("p1", 1), World::parse("TT")), Error);
}

TEST(Eval, AgreesWithNumericOracle) {
  Rng rng(3);
  for (int n = 0; n <= 3; ++n) {
    for (int i = 0; i < 300; ++i) {
      const Formula f = random_formula(n, rng);
      for (std::size_t k = 0; k < oracle::pow3(n); ++k) {
        const std::string w = oracle::world(k, n);
        ASSERT_EQ(to_char(eval(f, World::parse(w))), oracle::letter(oracle::value(f, w))) << f << " at " << w;
      }
    }
  }
}

// -- meaning ------------------------------------------------------------------

TEST(Meaning, Examples) {
  const auto u = world_universe(1);
  EXPECT_EQ(meaning(p(1, 1)), PartialSet::of(u, {"T"}, {"F"}));
  EXPECT_EQ(meaning(Formula::neutral(1)), PartialSet::neutral(u));
  EXPECT_EQ(meaning(parse("p1 | !p1", 1)), PartialSet::of(u, {"T", "F"}, {}));
  EXPECT_EQ(meaning(Formula::one(2)), PartialSet::top(world_universe(2)));
}

TEST(Meaning, RecursiveScanAndOracleAgree) {
  Rng rng(5);
  for (int n = 1; n <= 4; ++n) {
    for (int i = 0; i < 200; ++i) {
      const Formula f = random_formula(n, rng);
      const PartialSet m = meaning(f);
      EXPECT_EQ(m, meaning_scan(f)) << f;
      EXPECT_EQ(encode(m), oracle::meaning(f)) << f;
    }
  }
}

TEST(Meaning, ArityCap) {
  EXPECT_THROW((void)meaning(Formula::var(1, kMaxArity + 1)), Error);
  EXPECT_THROW((void)all_worlds(kMaxArity + 1), Error);
}

// -- consequence --------------------------------------------------------------

TEST(Entails, Examples) {
  const Formula excluded_middle = parse("p1 | !p1", 1);
  EXPECT_TRUE(entails({Formula::neutral(1)}, excluded_middle));
  EXPECT_FALSE(entails({Formula::one(1)}, excluded_middle));
  EXPECT_TRUE(entails(std::span<const Formula>{}, Formula::one(1)));
  EXPECT_FALSE(entails(std::span<const Formula>{}, Formula::neutral(1)));
  EXPECT_TRUE(entails({p(1, 2), p(2, 2)}, parse("p1 & p2", 2)));
}

TEST(Entails, MatchesOrderOnMeanings) {
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const Formula g = random_formula(2, rng);
    const Formula h = random_formula(2, rng);
    const Formula a = random_formula(2, rng);
    EXPECT_EQ(entails(g, a), leq(meaning(g), meaning(a)));
    EXPECT_EQ(entails({g, h}, a), leq(meet(meaning(g), meaning(h)), meaning(a)));
  }
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(equivalent(parse("p1 & p1", 1), p(1, 1)));
  EXPECT_FALSE(equivalent(parse("p1 | !p1", 1), Formula::one(1)));
  EXPECT_TRUE(equivalent(parse("!(p1 & p2)", 2), parse("!p1 | !p2", 2)));
  EXPECT_FALSE(equivalent(p(1, 2), p(2, 2)));
}

TEST(Classical, TwoValuedRestriction) {
  EXPECT_TRUE(classically_valid(parse("p1 | !p1", 1)));
  EXPECT_FALSE(classically_valid(p(1, 1)));
  EXPECT_TRUE(classically_equivalent(parse("p1 | !p1", 1), Formula::one(1)));
  EXPECT_THROW((void)classically_valid(Formula::neutral(1)), Error);
}

// -- monotonicity and persistence ---------------------------------------------

TEST(Monotonicity, ExhaustiveAtArityThree) {
  Rng rng(13);
  const auto worlds = all_worlds(3);
  for (int i = 0; i < 100; ++i) {
    const Formula f = random_formula(3, rng);
    const PartialSet m = meaning(f);
    for (const auto& s : worlds) {
      for (const auto& t : worlds) {
        if (!info_leq(s, t)) continue;
        ASSERT_TRUE(info_leq(eval(f, s), eval(f, t))) << f << ' ' << s << ' ' << t;
        if (m.pos().test(s.index())) {
          ASSERT_TRUE(m.pos().test(t.index()));
        }
        if (m.neg().test(s.index())) {
          ASSERT_TRUE(m.neg().test(t.index()));
        }
      }
    }
  }
}

// -- DNF ----------------------------------------------------------------------

TEST(Dnf, Examples) {
  EXPECT_EQ(dnf_formula_for(std::vector<World>{}, 2), Formula::zero(2));
  EXPECT_EQ(dnf_formula_for(std::vector<World>{World::parse("TF")}, 2), p(1, 2) & !p(2, 2));
  const std::vector<World> all{World::parse("TT"), World::parse("FF"), World::parse("TF"), World::parse("FT")};
  const Formula f = dnf_formula_for(all, 2);
  EXPECT_EQ(f.to_string(), "!p1 & !p2 | !p1 & p2 | p1 & !p2 | p1 & p2");
  for_each_classical_world(2, [&](const World& w) { EXPECT_EQ(eval(f, w), TruthValue::T); });
  EXPECT_THROW((void)dnf_formula_for(std::vector<World>{World::parse("TN")}, 2), Error);
}

TEST(Dnf, InvertsClassicalModels) {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
      std::vector<World> chosen;
      std::vector<std::string> names;
      std::size_t code = 0;
      for_each_classical_world(n, [&](const World& w) {
        if ((mask >> code++) & 1) chosen.push_back(w);
      });
      const Formula f = dnf_formula_for(chosen, n);
      ASSERT_TRUE(f.is_classical());
      code = 0;
      for_each_classical_world(n, [&](const World& w) {
        const bool in = (mask >> code++) & 1;
        ASSERT_EQ(oracle::value(f, w.to_string()) == 1.0, in);
      });
    }
  }
}
