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

// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// all of them pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "partialbet.hpp"

using namespace partialbet;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// AC1: fair die, (A,B) = ({2,4,6},{1,3,5}) and (C,D) = ({2,4},{5}).
Outcome die_example() {
  const UniversePtr die = Universe::of_atoms({"1", "2", "3", "4", "5", "6"});
  const PartialSet even_odd = PartialSet::of(die, {"2", "4", "6"}, {"1", "3", "5"});
  const PartialSet partial = PartialSet::of(die, {"2", "4"}, {"5"});
  const auto start = Clock::now();
  const auto mu = measure_from_classical(ClassicalMeasure::uniform(die));
  const PartialValue a = mu(even_odd);
  const PartialValue c = mu(partial);
  const double ms = elapsed_ms(start);
  Outcome o;
  o.ok = std::abs(a.x() - 0.5) <= 1e-9 && std::abs(a.y() - 0.5) <= 1e-9 &&
         std::abs(c.x() - 1.0 / 3.0) <= 1e-9 && std::abs(c.y() - 1.0 / 6.0) <= 1e-9 && ms < 1.0;
  o.detail = "mu(A,B)=" + to_string(a) + " mu(C,D)=" + to_string(c) + " in " + format_number(ms) + " ms";
  return o;
}

// AC2: sum rule at every world, 1000 random formula pairs per arity 1..3.
Outcome sum_rule() {
  Rng rng(101);
  const auto start = Clock::now();
  std::size_t failures = 0, checks = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 1000; ++i) {
      const Formula a = random_formula(n, rng), c = random_formula(n, rng);
      const Formula disj = a | c, conj = a & c;
      for_each_world(n, [&](const World& w, std::size_t) {
        const RPair lhs = pair(eval(disj, w)).pair() + pair(eval(conj, w)).pair();
        const RPair rhs = pair(eval(a, w)).pair() + pair(eval(c, w)).pair();
        ++checks;
        if (!(lhs == rhs)) ++failures;
      });
    }
  }
  const double ms = elapsed_ms(start);
  return {failures == 0 && ms < 5000.0, std::to_string(checks) + " world checks, " + std::to_string(failures) +
                                            " failures, " + format_number(ms) + " ms"};
}

// Random formula forced into a shape by the caller.
Formula random_classical(int n, Rng& rng, int depth = 3) { return random_formula(n, rng, {depth, false, true}); }

PartialValue value_not(const PartialValue& avoid, Rng& rng) {
  for (;;) {
    const PartialValue v = random_partial_value(rng);
    if (!approx_equal(v, avoid)) return v;
  }
}

// AC3: 500 violations of each axiom and of equivalence, n <= 3.
Outcome synthesis_soundness() {
  Rng rng(202);
  const auto start = Clock::now();
  std::size_t failures = 0, built = 0;
  std::string first;
  auto check = [&](const PartialCertificate& c, VerdictKind expected) {
    ++built;
    bool ok = satisfies(c.verdict.kind, expected);
    if (c.construction == "axiom3/case3") ok = ok && c.claim == VerdictKind::WeakDutchBook;
    else ok = ok && c.verdict.kind == VerdictKind::DutchBook;
    // Independent re-check over every world.
    const Verdict again = detect(c.book);
    ok = ok && again.kind == c.verdict.kind;
    if (!ok) {
      ++failures;
      if (first.empty()) first = c.construction + " on " + c.violation.witnesses[0].to_string();
    }
  };
  auto guarded = [&](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      ++failures;
      if (first.empty()) first = e.what();
    }
  };
  std::uniform_int_distribution<int> arity(1, 3);
  std::uniform_int_distribution<int> pick(0, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (int i = 0; i < 500; ++i) {  // axiom 1: 1 |= a
    const int n = arity(rng);
    const Formula a = random_formula(n, rng, {3}) | Formula::one(n);
    const Formula alpha = pick(rng) % 2 ? a : (a & (random_formula(n, rng, {2}) | !Formula::zero(n)));
    const BeliefAssignment b(n, {{alpha, value_not(PartialValue::top(), rng)}});
    guarded([&] { check(synth_axiom1(alpha, b), VerdictKind::DutchBook); });
  }
  for (int i = 0, made = 0; made < 500; ++i) {  // axiom 2, comparable sides
    const int n = arity(rng);
    const Formula a = random_formula(n, rng, {3}), c = random_formula(n, rng, {3});
    if (a == c) continue;
    BeliefAssignment b(n);
    b.add(a, random_partial_value(rng));
    b.add(c, random_partial_value(rng));
    if (b.find(a & c) || b.find(a | c)) continue;
    b.add(a & c, random_partial_value(rng));
    b.add(a | c, random_partial_value(rng));
    const RPair parts = b.at(a).pair() + b.at(c).pair();
    const RPair compounds = b.at(a | c).pair() + b.at(a & c).pair();
    if (approx_equal(parts, compounds) || !comparable(parts, compounds)) continue;
    ++made;
    guarded([&] { check(synth_axiom2(a, c, b), VerdictKind::DutchBook); });
  }
  for (int made = 0; made < 500;) {  // axiom 3, a third of them with equal sums
    const int n = arity(rng);
    const Formula a = random_formula(n, rng, {3});
    const PartialValue va = random_partial_value(rng);
    PartialValue vn = random_partial_value(rng);
    if (made % 3 == 0) {
      const double z = unit(rng), w = va.x() + z - va.y();
      if (w < 0.0 || z + w > 1.0) continue;
      vn = PartialValue(z, w);
    }
    if (approx_equal(vn, sigma(va))) continue;
    ++made;
    const BeliefAssignment b(n, {{a, va}, {!a, vn}});
    const bool equal_sums = approx_equal(va.x() + vn.x(), va.y() + vn.y());
    guarded([&] { check(synth_axiom3(a, b), equal_sums ? VerdictKind::WeakDutchBook : VerdictKind::DutchBook); });
  }
  for (int made = 0; made < 500;) {  // axiom 4: n |= a, second coordinate positive
    const int n = arity(rng);
    const Formula alpha = random_formula(n, rng, {3}) | Formula::neutral(n);
    const PartialValue v = random_partial_value(rng);
    if (v.y() <= kEpsilon) continue;
    ++made;
    const BeliefAssignment b(n, {{alpha, v}});
    guarded([&] { check(synth_axiom4(alpha, b), VerdictKind::DutchBook); });
  }
  for (int made = 0; made < 500;) {  // equivalence
    const int n = arity(rng);
    const Formula a = random_formula(n, rng, {3});
    const Formula g = random_formula(n, rng, {2});
    Formula c = a;
    switch (pick(rng)) {
      case 0: c = !!a; break;
      case 1: c = a & a; break;
      case 2: c = a | a; break;
      case 3: c = a & (a | g); break;
      case 4: c = a | (a & g); break;
      case 5: c = Formula::one(n) & a; break;
      default: c = Formula::zero(n) | a; break;
    }
    const PartialValue va = random_partial_value(rng);
    const PartialValue vc = value_not(va, rng);
    ++made;
    const BeliefAssignment b(n, {{a, va}, {c, vc}});
    guarded([&] { check(synth_equivalence(a, c, b), VerdictKind::DutchBook); });
  }
  const double ms = elapsed_ms(start);
  return {failures == 0 && built == 2500 && ms < 30000.0,
          std::to_string(built) + " certificates, " + std::to_string(failures) + " failures" +
              (first.empty() ? "" : " (first: " + first + ")") + ", " + format_number(ms) + " ms"};
}

// AC4: beliefs induced by uniform measures on K^n are coherent.
Outcome coherence_oracle() {
  Rng rng(303);
  std::size_t violations = 0, certificates = 0, entries = 0;
  for (int fam = 0; fam < 200; ++fam) {
    const int n = 1 + fam % 3;
    std::vector<Formula> fs;
    for (int j = 0; j < 4; ++j) {
      const Formula a = random_formula(n, rng, {3}), c = random_formula(n, rng, {3});
      for (const Formula& f : {a, c, !a, a & c, a | c}) fs.push_back(f);
    }
    fs.push_back(Formula::one(n));
    fs.push_back(Formula::neutral(n));
    const BeliefAssignment b = beliefs_from_measure(ClassicalMeasure::uniform(world_universe(n)), fs);
    entries += b.size();
    violations += check_belief_axioms(b).violations.size();
    certificates += synthesize_all(b).certificates.size();
  }
  return {violations == 0 && certificates == 0, "200 families, " + std::to_string(entries) + " entries, " +
                                                    std::to_string(violations) + " violations, " +
                                                    std::to_string(certificates) + " certificates"};
}

// AC5: stake solver on 10,000 admissible quadruples.
Outcome stake_solver_conditions() {
  Rng rng(404);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t failures = 0, y_zero = 0, w_zero = 0;
  double worst_balance = 0.0, worst_margin = 1.0;
  for (int i = 0; i < 10000;) {
    double x, y, z, w;
    switch (i % 10) {
      case 0:
        y = 0.0, x = unit(rng), z = unit(rng) * 0.5, w = x + z;
        break;
      case 1:
        w = 0.0, x = unit(rng) * 0.5, z = unit(rng), y = x + z;
        break;
      default:
        x = unit(rng), y = unit(rng), z = unit(rng), w = x + z - y;
        break;
    }
    if (w < 0.0 || y < 0.0 || x + y > 1.0 || z + w > 1.0) continue;
    if (approx_equal(y, z) && approx_equal(x, w)) continue;
    ++i;
    y_zero += y == 0.0;
    w_zero += w == 0.0;
    const StakeQuadruple s = stake_solver(x, y, z, w);
    const double balance = std::abs(s.h * x + s.hp * z - (s.k * y + s.kp * w));
    const double margin = std::min(s.kp - s.h, s.k - s.hp);
    worst_balance = std::max(worst_balance, balance);
    worst_margin = std::min(worst_margin, margin);
    if (!(balance <= 1e-9 && margin > 1e-12)) ++failures;
  }
  return {failures == 0 && y_zero > 0 && w_zero > 0,
          "10000 quadruples (" + std::to_string(y_zero) + " with y=0, " + std::to_string(w_zero) +
              " with w=0), " + std::to_string(failures) + " failures, worst balance " +
              format_number(worst_balance) + ", smallest margin " + format_number(worst_margin)};
}

// AC6: monotonicity and persistence, every comparable world pair.
Outcome monotonicity() {
  Rng rng(505);
  std::size_t failures = 0, checks = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::pair<World, World>> pairs;
    for (const auto& s : all_worlds(n)) {
      for (const auto& t : all_worlds(n)) {
        if (info_leq(s, t)) pairs.emplace_back(s, t);
      }
    }
    for (int i = 0; i < 1000; ++i) {
      const Formula a = random_formula(n, rng);
      const PartialSet m = meaning(a);
      for (const auto& [s, t] : pairs) {
        ++checks;
        const bool mono = info_leq(eval(a, s), eval(a, t));
        const bool pos = !m.pos().test(s.index()) || m.pos().test(t.index());
        const bool neg = !m.neg().test(s.index()) || m.neg().test(t.index());
        if (!(mono && pos && neg)) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checks) + " (formula, s, t) checks, " + std::to_string(failures) + " exceptions"};
}

// AC7: the variable meanings generate no Boolean partial set but top and bottom.
Outcome non_surjectivity() {
  const auto start = Clock::now();
  std::size_t generated = 0;
  std::string sizes;
  for (int n = 1; n <= 2; ++n) {
    const UniversePtr u = world_universe(n);
    std::vector<PartialSet> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(variable_meaning(i, n));
    const PartialSetFamily closure = generated_subalgebra(u, gens);
    std::size_t boolean = 0;
    for (const auto& s : closure) {
      if (s.is_boolean()) {
        ++boolean;
        if (!(s == PartialSet::top(u)) && !(s == PartialSet::bottom(u))) ++generated;
      }
    }
    sizes += (n > 1 ? ", " : "") + std::string("n=") + std::to_string(n) + ": " + std::to_string(closure.size()) +
             " elements, " + std::to_string(boolean) + " Boolean";
  }
  const double ms = elapsed_ms(start);
  return {generated == 0 && ms < 10000.0, sizes + ", " + format_number(ms) + " ms"};
}

// AC8: the three classical constructions on random violating values.
Outcome classical_regression() {
  Rng rng(606);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> arity(1, 4);
  std::size_t failures = 0, cases = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = arity(rng);
    const Formula g = random_classical(n, rng);
    ClassicalBelief b(n);
    ClassicalViolation v;
    switch (i % 3) {
      case 0: {
        const Formula a = g | !g;
        b.add(a, unit(rng) * 0.999);
        v = {ClassicalRule::Tautology, {a}, {b.at(a)}};
        break;
      }
      case 1: {
        const Formula a = g & !g;
        b.add(a, 0.001 + unit(rng) * 0.999);
        v = {ClassicalRule::Contradiction, {a}, {b.at(a)}};
        break;
      }
      default: {
        const Formula a = g, c = random_classical(n, rng);
        if (a == c) {
          --i;
          continue;
        }
        double x, y, z, w;
        do {
          x = unit(rng), y = unit(rng), z = unit(rng), w = unit(rng);
        } while (std::abs(z + w - x - y) < 1e-6);
        b.add(a, x);
        b.add(c, y);
        if (b.find(a | c) || b.find(a & c)) {
          --i;
          continue;
        }
        b.add(a | c, z);
        b.add(a & c, w);
        v = {ClassicalRule::Additivity, {a, c, a | c, a & c}, {x, y, z, w}};
        break;
      }
    }
    ++cases;
    try {
      const auto cert = synth_classical(v, b);
      bool ok = cert.verdict.kind == VerdictKind::DutchBook &&
                cert.payoffs.size() == (std::size_t{1} << n);
      for (const auto& row : cert.payoffs) {
        ok = ok && row.payoff < 0.0 && std::abs(row.payoff - cert.payoffs.front().payoff) <= 1e-9;
      }
      failures += !ok;
    } catch (const Error&) {
      ++failures;
    }
  }
  return {failures == 0 && cases == 500, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

// AC9: recursive meaning equals world-scan meaning.
Outcome meaning_equivalence() {
  Rng rng(707);
  std::size_t mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 3;
    const Formula a = random_formula(n, rng);
    const PartialSet rec = meaning(a);
    const PartialSet scan = meaning_scan(a);
    if (!(rec.pos() == scan.pos() && rec.neg() == scan.neg())) ++mismatches;
  }
  return {mismatches == 0, "1000 formulas, " + std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"AC1 die example", die_example},
      {"AC2 sum rule", sum_rule},
      {"AC3 synthesis soundness", synthesis_soundness},
      {"AC4 coherence oracle", coherence_oracle},
      {"AC5 stake solver", stake_solver_conditions},
      {"AC6 monotonicity and persistence", monotonicity},
      {"AC7 non-surjectivity", non_surjectivity},
      {"AC8 classical regression", classical_regression},
      {"AC9 recursive vs scanned meaning", meaning_equivalence},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %-34s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += !o.ok;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
