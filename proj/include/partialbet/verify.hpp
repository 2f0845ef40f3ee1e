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

/*!
  \file verify.hpp
  \brief Built-in self-check suites run by `pbook verify`.

  Each suite draws its cases from a generator seeded with the caller's seed
  (mixed with the suite name, so suites are independent of each other's
  iteration counts) and reports how many cases passed and failed, plus the
  first few failures.

    sum-rule      pair(V(a|c)) + pair(V(a&c)) = pair(V(a)) + pair(V(c)) at every world
    monotonicity  s <= t in the information order gives V_s(a) <= V_t(a), and
                  positive/negative models persist upwards
    meaning       recursive meaning = world-scan meaning; entailment matches the
                  partial-set order; DNF round-trips classical model sets
    measure       associated die measures satisfy the measure axioms on all of
                  D(S); measure-induced beliefs pass every belief check
    stake-solver  solver output balances and meets both strict inequalities
    corollary     no Boolean partial set other than top and bottom lies in the
                  subalgebra generated by the variable meanings
*/

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "partialbet/kleene.hpp"
#include "partialbet/probability.hpp"
#include "partialbet/random.hpp"
#include "partialbet/synth.hpp"

namespace partialbet {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool skipped = false;
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  int arity = 2;
  std::uint64_t seed = 0;
  std::size_t iterations = 200;
};

/// Largest arity at which the corollary suite builds the generated
/// subalgebra; beyond it the closure is too large to enumerate.
inline constexpr int kCorollaryMaxArity = 2;
inline constexpr std::size_t kMaxNotes = 5;

namespace detail {

inline Rng suite_rng(std::uint64_t seed, std::string_view name) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(std::hash<std::string_view>{}(name))};
  return Rng(seq);
}

inline void record(SuiteResult& r, bool ok, const std::function<std::string()>& why) {
  if (ok) {
    ++r.passed;
  } else {
    ++r.failed;
    if (r.notes.size() < kMaxNotes) r.notes.push_back(why());
  }
}

inline World random_world(int arity, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, world_count(arity) - 1);
  return World::from_index(pick(rng), arity);
}

/// A random world at or above `s` in the information order.
inline World random_refinement(const World& s, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 2);
  std::string text = s.to_string();
  for (char& c : text) {
    if (c != 'N') continue;
    const int r = coin(rng);
    c = r == 0 ? 'N' : r == 1 ? 'F' : 'T';
  }
  return World::parse(text);
}

}  // namespace detail

inline SuiteResult verify_sum_rule(const VerifyOptions& opt) {
  SuiteResult r{"sum-rule", 0, 0, false, {}};
  Rng rng = detail::suite_rng(opt.seed, r.name);
  for (std::size_t i = 0; i < opt.iterations; ++i) {
    const Formula a = random_formula(opt.arity, rng);
    const Formula c = random_formula(opt.arity, rng);
    const Formula disj = a | c, conj = a & c;
    bool ok = true;
    std::string where;
    for_each_world(opt.arity, [&](const World& w, std::size_t) {
      if (!ok) return;
      const RPair lhs = pair(eval(disj, w)).pair() + pair(eval(conj, w)).pair();
      const RPair rhs = pair(eval(a, w)).pair() + pair(eval(c, w)).pair();
      if (!(lhs == rhs)) {
        ok = false;
        where = w.to_string();
      }
    });
    detail::record(r, ok, [&] { return a.to_string() + " / " + c.to_string() + " at " + where; });
  }
  return r;
}

inline SuiteResult verify_monotonicity(const VerifyOptions& opt) {
  SuiteResult r{"monotonicity", 0, 0, false, {}};
  Rng rng = detail::suite_rng(opt.seed, r.name);
  // Up to arity 6 every comparable pair (5^n of them) is visited.
  const bool exhaustive = opt.arity <= 6;
  std::vector<std::pair<World, World>> pairs;
  if (exhaustive) {
    for_each_world(opt.arity, [&](const World& s, std::size_t) {
      for_each_world(opt.arity, [&](const World& t, std::size_t) {
        if (info_leq(s, t)) pairs.emplace_back(s, t);
      });
    });
  }
  for (std::size_t i = 0; i < opt.iterations; ++i) {
    const Formula a = random_formula(opt.arity, rng);
    const PartialSet m = meaning(a);
    if (!exhaustive) {
      pairs.clear();
      for (int j = 0; j < 256; ++j) {
        World s = detail::random_world(opt.arity, rng);
        World t = detail::random_refinement(s, rng);
        pairs.emplace_back(std::move(s), std::move(t));
      }
    }
    bool ok = true;
    std::string where;
    for (const auto& [s, t] : pairs) {
      const bool mono = info_leq(eval(a, s), eval(a, t));
      const std::size_t si = s.index(), ti = t.index();
      const bool persist = (!m.pos().test(si) || m.pos().test(ti)) && (!m.neg().test(si) || m.neg().test(ti));
      if (!mono || !persist) {
        ok = false;
        where = s.to_string() + " <= " + t.to_string();
        break;
      }
    }
    detail::record(r, ok, [&] { return a.to_string() + " at " + where; });
  }
  return r;
}

inline SuiteResult verify_meaning(const VerifyOptions& opt) {
  SuiteResult r{"meaning", 0, 0, false, {}};
  Rng rng = detail::suite_rng(opt.seed, r.name);
  for (std::size_t i = 0; i < opt.iterations; ++i) {
    const Formula a = random_formula(opt.arity, rng);
    const Formula g = random_formula(opt.arity, rng);
    const PartialSet ma = meaning(a);
    const PartialSet mg = meaning(g);
    detail::record(r, ma == meaning_scan(a),
                   [&] { return "recursive and scanned meaning differ for " + a.to_string(); });
    detail::record(r, entails(g, a) == leq(mg, ma),
                   [&] { return "entailment vs order mismatch for " + g.to_string() + " |= " + a.to_string(); });
  }
  // Classical model sets round-trip through the DNF construction.
  const std::size_t classical = std::size_t{1} << opt.arity;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < opt.iterations; ++i) {
    std::vector<World> chosen;
    std::vector<bool> in(classical, false);
    std::size_t code = 0;
    for_each_classical_world(opt.arity, [&](const World& w) {
      if (coin(rng)) {
        chosen.push_back(w);
        in[code] = true;
      }
      ++code;
    });
    const Formula f = dnf_formula_for(chosen, opt.arity);
    bool ok = f.is_classical();
    code = 0;
    for_each_classical_world(opt.arity, [&](const World& w) {
      ok = ok && ((eval(f, w) == TruthValue::T) == in[code]);
      ++code;
    });
    detail::record(r, ok, [&] { return "DNF " + f.to_string() + " has the wrong classical models"; });
  }
  return r;
}

inline SuiteResult verify_measure(const VerifyOptions& opt) {
  SuiteResult r{"measure", 0, 0, false, {}};
  Rng rng = detail::suite_rng(opt.seed, r.name);

  // The die: the fair measure plus one random reweighting, over all 729
  // partial sets of the six faces.
  const UniversePtr die = Universe::of_atoms({"1", "2", "3", "4", "5", "6"});
  const std::vector<PartialSet> field = all_partial_sets(die);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(6);
  double total = 0.0;
  for (double& w : weights) total += (w = unit(rng) + 1e-3);
  for (double& w : weights) w /= total;
  for (const auto& p : {ClassicalMeasure::uniform(die), ClassicalMeasure(die, weights)}) {
    const auto found = check_measure_axioms(measure_from_classical(p), field);
    detail::record(r, found.empty(), [&] {
      return "die measure violates axiom " + std::to_string(found.front().axiom) + ": " + found.front().detail;
    });
  }
  const AssociatedMeasure fair = measure_from_classical(ClassicalMeasure::uniform(die));
  detail::record(r, approx_equal(fair(PartialSet::of(die, {"2", "4", "6"}, {"1", "3", "5"})), {0.5, 0.5}),
                 [] { return "fair die: ({2,4,6},{1,3,5}) is not (1/2,1/2)"; });
  detail::record(r, approx_equal(fair(PartialSet::of(die, {"2", "4"}, {"5"})), {1.0 / 3.0, 1.0 / 6.0}),
                 [] { return "fair die: ({2,4},{5}) is not (1/3,1/6)"; });

  // Beliefs induced on formulas over K^n by a random classical measure.
  const UniversePtr worlds = world_universe(opt.arity);
  const std::size_t families = std::max<std::size_t>(1, opt.iterations / 10);
  for (std::size_t i = 0; i < families; ++i) {
    std::vector<double> ws(worlds->size());
    double sum = 0.0;
    for (double& w : ws) sum += (w = unit(rng));
    if (sum <= 0.0) continue;
    for (double& w : ws) w /= sum;
    const ClassicalMeasure p(worlds, ws);
    std::vector<Formula> fs;
    for (int j = 0; j < 6; ++j) {
      const Formula a = random_formula(opt.arity, rng, {3});
      const Formula c = random_formula(opt.arity, rng, {3});
      for (const Formula& f : {a, c, !a, a & c, a | c, a | Formula::neutral(opt.arity),
                               a & Formula::neutral(opt.arity)}) {
        fs.push_back(f);
      }
    }
    fs.push_back(Formula::neutral(opt.arity));
    const BeliefAssignment b = beliefs_from_measure(p, fs);
    const CheckReport axioms = check_belief_axioms(b);
    const CheckReport derived = check_derived_properties(b);
    const auto equiv = find_equivalence_violations(b);
    detail::record(r, axioms.violations.empty() && derived.violations.empty() && equiv.empty(), [&] {
      const auto& v = !axioms.violations.empty()   ? axioms.violations.front()
                      : !derived.violations.empty() ? derived.violations.front()
                                                    : equiv.front();
      return std::string("measure-induced beliefs flagged: ") + to_string(v.rule) + " " + v.detail;
    });
  }
  return r;
}

inline SuiteResult verify_stake_solver(const VerifyOptions& opt) {
  SuiteResult r{"stake-solver", 0, 0, false, {}};
  Rng rng = detail::suite_rng(opt.seed, r.name);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> family(0, 9);
  std::size_t drawn = 0;
  while (drawn < opt.iterations) {
    double x, y, z, w;
    const int fam = family(rng);
    if (fam == 0) {
      // y = 0 forces w = x + z.
      y = 0.0;
      x = unit(rng);
      z = unit(rng) * 0.5;
      w = x + z;
    } else if (fam == 1) {
      // w = 0 forces y = x + z.
      w = 0.0;
      x = unit(rng) * 0.5;
      z = unit(rng);
      y = x + z;
    } else {
      x = unit(rng), y = unit(rng), z = unit(rng);
      w = x + z - y;
    }
    if (x + y > 1.0 || z + w > 1.0 || w < 0.0 || y < 0.0) continue;
    if (approx_equal(y, z) && approx_equal(x, w)) continue;
    ++drawn;
    const StakeQuadruple s = stake_solver(x, y, z, w);
    const double lhs = s.h * x + s.hp * z;
    const double rhs = s.k * y + s.kp * w;
    const bool ok = approx_equal(lhs, rhs) && s.kp - s.h > 1e-12 && s.k - s.hp > 1e-12;
    detail::record(r, ok, [&] {
      return "(" + format_number(x) + "," + format_number(y) + "," + format_number(z) + "," +
             format_number(w) + ") -> h=" + format_number(s.h) + " h'=" + format_number(s.hp) +
             " k=" + format_number(s.k) + " k'=" + format_number(s.kp);
    });
  }
  return r;
}

inline SuiteResult verify_corollary(const VerifyOptions& opt) {
  SuiteResult r{"corollary", 0, 0, false, {}};
  if (opt.arity > kCorollaryMaxArity || opt.arity < 1) {
    r.skipped = true;
    r.notes.push_back("closure is only enumerated for arity 1.." + std::to_string(kCorollaryMaxArity));
    return r;
  }
  const UniversePtr u = world_universe(opt.arity);
  std::vector<PartialSet> gens;
  for (int i = 1; i <= opt.arity; ++i) gens.push_back(variable_meaning(i, opt.arity));
  const PartialSetFamily closure = generated_subalgebra(u, gens);
  std::optional<PartialSet> witness;
  const std::size_t n = u->size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    Bits pos(n, 0), neg(n, 0);
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? pos : neg).set(i);
    PartialSet s(u, std::move(pos), std::move(neg));
    const bool outside = !closure.contains(s);
    if (outside && !witness) witness = s;
    detail::record(r, outside, [&] { return "Boolean partial set " + s.to_string() + " is generated"; });
  }
  r.notes.insert(r.notes.begin(), "closure has " + std::to_string(closure.size()) + " elements");
  if (witness) r.notes.insert(r.notes.begin() + 1, "not generated: " + witness->to_string());
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sum-rule", "monotonicity", "meaning",
                                              "measure",  "stake-solver", "corollary"};
  return names;
}

/// Runs one suite by name, or all of them when `suite` is empty.
inline std::vector<SuiteResult> run_suites(const VerifyOptions& opt, std::string_view suite = {}) {
  require_enumerable(opt.arity);
  using Fn = SuiteResult (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string_view, Fn>> table{
      {"sum-rule", verify_sum_rule},   {"monotonicity", verify_monotonicity},
      {"meaning", verify_meaning},     {"measure", verify_measure},
      {"stake-solver", verify_stake_solver}, {"corollary", verify_corollary}};
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : table) {
    if (suite.empty() || suite == name) out.push_back(fn(opt));
  }
  if (out.empty()) throw Error(ErrorKind::Input, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace partialbet
