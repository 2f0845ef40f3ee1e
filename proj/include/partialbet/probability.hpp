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
  \file probability.hpp
  \brief Partial probability measures and belief assignments.

  Measure axioms checked on a field G of partial sets:

    1. mu(S, empty) = (1,0)
    2. mu(a) + mu(b) = mu(a join b) + mu(a meet b)
    3. mu(-a) = sigma(mu(a))
    4. (empty, empty) <= a implies (0,0) <= mu(a)

  Axiom 2 is checked in additive form. The printed source of these axioms
  has a minus sign in front of mu(a meet b), which the associated measure
  mu(A,B) = (p(A), p(B)) does not satisfy; the additive form is the one
  that measure (and the formula-level axiom below) actually obey.

  Belief axioms checked on an assignment b over formulas:

    1. 1 |= a implies b(a) = (1,0)
    2. b(a | c) = b(a) + b(c) - b(a & c)
    3. b(!a) = sigma(b(a))
    4. n |= a implies (0,0) <= b(a)

  Instances of axiom 2 are discovered structurally: an entry And(a,c) or
  Or(a,c) whose four partners a, c, a&c, a|c are all present. Compound
  entries whose partners are missing are reported as unchecked.
*/

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "partialbet/kleene.hpp"
#include "partialbet/partial_set.hpp"
#include "partialbet/values.hpp"

namespace partialbet {

// -- measures on partial sets -------------------------------------------------

class ClassicalMeasure {
 public:
  ClassicalMeasure(UniversePtr space, std::vector<double> weights)
      : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_->size()) {
      throw Error(ErrorKind::UniverseMismatch, "one weight per atom required");
    }
    double total = 0.0;
    for (double w : weights_) {
      if (!std::isfinite(w) || w < -kEpsilon) {
        throw Error(ErrorKind::InvalidValue, "classical weights must be nonnegative");
      }
      total += w;
    }
    if (!approx_equal(total, 1.0)) {
      throw Error(ErrorKind::InvalidValue, "classical weights sum to " + format_number(total));
    }
  }

  static ClassicalMeasure uniform(UniversePtr space) {
    const std::size_t n = space->size();
    return ClassicalMeasure(std::move(space), std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  const UniversePtr& space() const { return space_; }
  const std::vector<double>& weights() const { return weights_; }

  double of(const Bits& subset) const {
    double s = 0.0;
    for (auto i = subset.find_first(); i != Bits::npos; i = subset.find_next(i)) s += weights_[i];
    return s;
  }

 private:
  UniversePtr space_;
  std::vector<double> weights_;
};

using MeasureFn = std::function<PartialValue(const PartialSet&)>;

/// The associated measure mu(A,B) = (p(A), p(B)).
class AssociatedMeasure {
 public:
  explicit AssociatedMeasure(ClassicalMeasure p) : p_(std::move(p)) {}

  PartialValue operator()(const PartialSet& s) const {
    if (!same_universe(s.universe(), p_.space())) {
      throw Error(ErrorKind::UniverseMismatch, "partial set is not on the measure's sample space");
    }
    return {p_.of(s.pos()), p_.of(s.neg())};
  }

  const ClassicalMeasure& classical() const { return p_; }

 private:
  ClassicalMeasure p_;
};

inline AssociatedMeasure measure_from_classical(ClassicalMeasure p) {
  return AssociatedMeasure(std::move(p));
}

struct MeasureViolation {
  /// 1-4 for the axioms, 0 for a field that is not a subalgebra.
  int axiom = 0;
  std::string detail;
};

/// Checks the four measure axioms on every element (and pair) of `field`.
/// The field is first checked for closure; if it is not closed the closure
/// failures are returned and the axioms are not evaluated.
inline std::vector<MeasureViolation> check_measure_axioms(const MeasureFn& mu,
                                                          std::span<const PartialSet> field) {
  std::vector<MeasureViolation> out;
  if (field.empty()) {
    out.push_back({0, "empty field"});
    return out;
  }
  const UniversePtr universe = field.front().universe();
  const PartialSetFamily members(field.begin(), field.end());

  auto require_member = [&](const PartialSet& s, const std::string& what) {
    if (!members.contains(s)) out.push_back({0, what + " " + s.to_string() + " missing from field"});
  };
  require_member(PartialSet::top(universe), "constant");
  require_member(PartialSet::bottom(universe), "constant");
  require_member(PartialSet::neutral(universe), "constant");
  for (std::size_t i = 0; i < field.size() && out.empty(); ++i) {
    require_member(negate(field[i]), "negation");
    for (std::size_t j = i + 1; j < field.size() && out.empty(); ++j) {
      require_member(meet(field[i], field[j]), "meet");
      require_member(join(field[i], field[j]), "join");
    }
  }
  if (!out.empty()) return out;

  std::unordered_map<PartialSet, PartialValue> values;
  for (const auto& s : field) values.emplace(s, mu(s));
  auto value = [&](const PartialSet& s) { return values.at(s); };

  const PartialValue at_top = value(PartialSet::top(universe));
  if (!approx_equal(at_top, PartialValue::top())) {
    out.push_back({1, "mu(S,empty) = " + to_string(at_top)});
  }
  for (std::size_t i = 0; i < field.size(); ++i) {
    const PartialSet& a = field[i];
    const PartialValue va = value(a);
    for (std::size_t j = i; j < field.size(); ++j) {
      const PartialSet& b = field[j];
      const RPair lhs = va.pair() + value(b).pair();
      const RPair rhs = value(join(a, b)).pair() + value(meet(a, b)).pair();
      if (!approx_equal(lhs, rhs)) {
        out.push_back({2, a.to_string() + ", " + b.to_string() + ": " + to_string(lhs) +
                              " vs " + to_string(rhs)});
      }
    }
    const PartialValue vn = value(negate(a));
    if (!approx_equal(vn, sigma(va))) {
      out.push_back({3, a.to_string() + ": mu(-a) = " + to_string(vn) + ", sigma(mu(a)) = " +
                            to_string(sigma(va))});
    }
    if (leq(PartialSet::neutral(universe), a) && !pv_leq(PartialValue::zero(), va)) {
      out.push_back({4, a.to_string() + ": mu = " + to_string(va)});
    }
  }
  return out;
}

// -- beliefs over formulas ----------------------------------------------------

struct BeliefEntry {
  Formula formula;
  PartialValue value;
};

/// A finite map from formulas (one arity) to partial values. Keeps
/// insertion order; lookups are structural.
class BeliefAssignment {
 public:
  explicit BeliefAssignment(int arity) : arity_(arity) {
    if (arity < 0) throw Error(ErrorKind::Arity, "negative arity");
  }

  BeliefAssignment(int arity, std::initializer_list<BeliefEntry> entries)
      : BeliefAssignment(arity) {
    for (const auto& e : entries) add(e.formula, e.value);
  }

  void add(const Formula& f, const PartialValue& v) {
    if (f.arity() != arity_) {
      throw Error(ErrorKind::Arity, "belief on '" + f.to_string() + "' has arity " +
                                        std::to_string(f.arity()) + ", expected " +
                                        std::to_string(arity_));
    }
    if (index_.contains(f)) {
      throw Error(ErrorKind::Input, "duplicate belief entry for '" + f.to_string() + "'");
    }
    index_.emplace(f, entries_.size());
    entries_.push_back({f, v});
  }

  int arity() const { return arity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<BeliefEntry>& entries() const { return entries_; }

  std::optional<PartialValue> find(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].value;
  }

  /// Position of the entry in insertion order, if present.
  std::optional<std::size_t> position(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  PartialValue at(const Formula& f) const {
    auto v = find(f);
    if (!v) throw Error(ErrorKind::Input, "no belief entry for '" + f.to_string() + "'");
    return *v;
  }

 private:
  int arity_;
  std::vector<BeliefEntry> entries_;
  std::unordered_map<Formula, std::size_t> index_;
};

enum class Rule {
  Axiom1,
  Axiom2,
  Axiom3,
  Axiom4,
  Equivalence,
  NeutralIsZero,       // b(n) = (0,0)
  EntailsFalse,        // a |= 0 implies b(a) = (0,1)
  EntailsNeutral,      // a |= n implies b(a) <= (0,0)
  NeutralSplit,        // b(a) = b(a | n) + b(a & n)
};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::Axiom1: return "axiom1";
    case Rule::Axiom2: return "axiom2";
    case Rule::Axiom3: return "axiom3";
    case Rule::Axiom4: return "axiom4";
    case Rule::Equivalence: return "equivalence";
    case Rule::NeutralIsZero: return "neutral-is-zero";
    case Rule::EntailsFalse: return "entails-false";
    case Rule::EntailsNeutral: return "entails-neutral";
    case Rule::NeutralSplit: return "neutral-split";
  }
  return "unknown";
}

/// One failed axiom instance. `witnesses` and `observed` are parallel:
///   axiom1/axiom4/derived: {a}
///   axiom2: {a, c, a & c, a | c}
///   axiom3: {a, !a}
///   equivalence: {a, c}
///   neutral-split: {a, a | n, a & n}
struct Violation {
  Rule rule;
  std::vector<Formula> witnesses;
  std::vector<PartialValue> observed;
  /// False when no Dutch Book construction is known for this instance
  /// (axiom 2 with incomparable sides).
  bool synthesizable = true;
  std::string detail;
};

struct Unchecked {
  Rule rule;
  Formula entry;
  std::string missing;
};

struct CheckReport {
  std::vector<Violation> violations;
  std::vector<Unchecked> unchecked;

  bool clean() const { return violations.empty(); }
};

namespace detail {

inline Violation single(Rule rule, const BeliefEntry& e, std::string detail) {
  return Violation{rule, {e.formula}, {e.value}, true, std::move(detail)};
}

/// Sum sides of the additivity identity: b(a)+b(c) and b(a|c)+b(a&c).
struct AdditivitySides {
  RPair parts;
  RPair compounds;
};

inline AdditivitySides additivity_sides(const PartialValue& a, const PartialValue& c,
                                        const PartialValue& conj, const PartialValue& disj) {
  return {a.pair() + c.pair(), disj.pair() + conj.pair()};
}

}  // namespace detail

/// Reports axiom-instance violations (ordered by axiom, then entry order)
/// and compound entries whose axiom-2/axiom-3 instance cannot be checked.
inline CheckReport check_belief_axioms(const BeliefAssignment& b) {
  require_enumerable(b.arity());
  CheckReport report;
  const int n = b.arity();
  const Formula one = Formula::one(n);
  const Formula neutral = Formula::neutral(n);

  for (const auto& e : b.entries()) {
    if (entails(one, e.formula) && !approx_equal(e.value, PartialValue::top())) {
      report.violations.push_back(detail::single(
          Rule::Axiom1, e, "1 |= " + e.formula.to_string() + " but b = " + to_string(e.value)));
    }
  }

  std::unordered_set<Formula> pairs_seen;  // keyed by the And(a,c) node
  for (const auto& e : b.entries()) {
    if (e.formula.op() != Op::And && e.formula.op() != Op::Or) continue;
    const Formula a = e.formula.lhs();
    const Formula c = e.formula.rhs();
    const Formula conj = a & c;
    if (!pairs_seen.insert(conj).second) continue;
    const Formula disj = a | c;
    auto va = b.find(a), vc = b.find(c), vconj = b.find(conj), vdisj = b.find(disj);
    if (!va || !vc || !vconj || !vdisj) {
      std::string missing;
      auto note = [&](const std::optional<PartialValue>& v, const Formula& f) {
        if (v) return;
        if (!missing.empty()) missing += ", ";
        missing += f.to_string();
      };
      note(va, a);
      note(vc, c);
      note(vconj, conj);
      note(vdisj, disj);
      report.unchecked.push_back({Rule::Axiom2, e.formula, missing});
      continue;
    }
    const auto sides = detail::additivity_sides(*va, *vc, *vconj, *vdisj);
    if (!approx_equal(sides.parts, sides.compounds)) {
      Violation v{Rule::Axiom2, {a, c, conj, disj}, {*va, *vc, *vconj, *vdisj}, true, ""};
      v.synthesizable = comparable(sides.parts, sides.compounds);
      v.detail = "b(a)+b(c) = " + to_string(sides.parts) + ", b(a|c)+b(a&c) = " +
                 to_string(sides.compounds) + (v.synthesizable ? "" : " (incomparable)");
      report.violations.push_back(std::move(v));
    }
  }

  for (const auto& e : b.entries()) {
    if (e.formula.op() == Op::Not && !b.find(e.formula.lhs())) {
      report.unchecked.push_back({Rule::Axiom3, e.formula, e.formula.lhs().to_string()});
    }
    const Formula neg = !e.formula;
    auto vneg = b.find(neg);
    if (!vneg) continue;
    if (!approx_equal(*vneg, sigma(e.value))) {
      report.violations.push_back(Violation{
          Rule::Axiom3, {e.formula, neg}, {e.value, *vneg}, true,
          "b(!a) = " + to_string(*vneg) + ", sigma(b(a)) = " + to_string(sigma(e.value))});
    }
  }

  for (const auto& e : b.entries()) {
    if (entails(neutral, e.formula) && !pv_leq(PartialValue::zero(), e.value)) {
      report.violations.push_back(detail::single(
          Rule::Axiom4, e, "n |= " + e.formula.to_string() + " but b = " + to_string(e.value)));
    }
  }
  return report;
}

/// Properties every partial probability function has as a consequence of
/// the axioms: b(n) = (0,0); a |= 0 gives (0,1); a |= n gives b(a) <= (0,0);
/// b(a) = b(a | n) + b(a & n) where all three entries exist.
inline CheckReport check_derived_properties(const BeliefAssignment& b) {
  require_enumerable(b.arity());
  CheckReport report;
  const int n = b.arity();
  const Formula zero = Formula::zero(n);
  const Formula neutral = Formula::neutral(n);

  for (const auto& e : b.entries()) {
    if (e.formula == neutral && !approx_equal(e.value, PartialValue::zero())) {
      report.violations.push_back(
          detail::single(Rule::NeutralIsZero, e, "b(n) = " + to_string(e.value)));
    }
  }
  for (const auto& e : b.entries()) {
    if (entails(e.formula, zero) && !approx_equal(e.value, PartialValue::bottom())) {
      report.violations.push_back(detail::single(
          Rule::EntailsFalse, e, e.formula.to_string() + " |= 0 but b = " + to_string(e.value)));
    }
  }
  for (const auto& e : b.entries()) {
    if (entails(e.formula, neutral) && !pv_leq(e.value, PartialValue::zero())) {
      report.violations.push_back(detail::single(
          Rule::EntailsNeutral, e, e.formula.to_string() + " |= n but b = " + to_string(e.value)));
    }
  }
  for (const auto& e : b.entries()) {
    const Formula up = e.formula | neutral;
    const Formula down = e.formula & neutral;
    auto vup = b.find(up), vdown = b.find(down);
    if (!vup || !vdown) continue;
    const RPair sum = vup->pair() + vdown->pair();
    if (!approx_equal(sum, e.value.pair())) {
      report.violations.push_back(Violation{
          Rule::NeutralSplit, {e.formula, up, down}, {e.value, *vup, *vdown}, true,
          "b(a) = " + to_string(e.value) + ", b(a|n)+b(a&n) = " + to_string(sum)});
    }
  }
  return report;
}

/// Pairs of present entries that are equivalent in Kleene logic but carry
/// different values. Entries are grouped by meaning, so the cost is one
/// world scan per entry.
inline std::vector<Violation> find_equivalence_violations(const BeliefAssignment& b) {
  require_enumerable(b.arity());
  std::vector<Violation> out;
  const auto& es = b.entries();
  std::vector<PartialSet> meanings;
  meanings.reserve(es.size());
  for (const auto& e : es) meanings.push_back(meaning(e.formula));
  std::unordered_map<PartialSet, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < es.size(); ++i) groups[meanings[i]].push_back(i);
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j : groups.at(meanings[i])) {
      if (j <= i) continue;
      if (!approx_equal(es[i].value, es[j].value)) {
        out.push_back(Violation{Rule::Equivalence,
                                {es[i].formula, es[j].formula},
                                {es[i].value, es[j].value},
                                true,
                                es[i].formula.to_string() + " == " + es[j].formula.to_string() +
                                    " but values " + to_string(es[i].value) + " vs " +
                                    to_string(es[j].value)});
      }
    }
  }
  return out;
}

/// b(a) := mu(meaning(a)) for each formula, with mu associated to `p` on
/// the world space K^n. Coherent by construction.
inline BeliefAssignment beliefs_from_measure(const ClassicalMeasure& p,
                                            std::span<const Formula> formulas) {
  if (formulas.empty()) throw Error(ErrorKind::Input, "no formulas");
  const int n = formulas.front().arity();
  const AssociatedMeasure mu(p);
  BeliefAssignment b(n);
  for (const auto& f : formulas) {
    if (!b.find(f)) b.add(f, mu(meaning(f)));
  }
  return b;
}

// -- classical beliefs ---------------------------------------------------------

/// Real-valued degrees of belief over classical formulas.
class ClassicalBelief {
 public:
  explicit ClassicalBelief(int arity) : arity_(arity) {}

  void add(const Formula& f, double value) {
    require_classical(f);
    if (f.arity() != arity_) throw Error(ErrorKind::Arity, "classical belief arity mismatch");
    if (!std::isfinite(value) || value < -kEpsilon || value > 1.0 + kEpsilon) {
      throw Error(ErrorKind::InvalidValue, "classical belief outside [0,1]");
    }
    if (index_.contains(f)) throw Error(ErrorKind::Input, "duplicate classical belief");
    index_.emplace(f, entries_.size());
    entries_.emplace_back(f, std::clamp(value, 0.0, 1.0));
  }

  int arity() const { return arity_; }
  const std::vector<std::pair<Formula, double>>& entries() const { return entries_; }

  std::optional<double> find(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].second;
  }

  double at(const Formula& f) const {
    auto v = find(f);
    if (!v) throw Error(ErrorKind::Input, "no classical belief for '" + f.to_string() + "'");
    return *v;
  }

 private:
  int arity_;
  std::vector<std::pair<Formula, double>> entries_;
  std::unordered_map<Formula, std::size_t> index_;
};

enum class ClassicalRule {
  Tautology,      // |= a but b(a) < 1
  Contradiction,  // |= !a but b(a) > 0
  Additivity,     // b(a|c) + b(a&c) != b(a) + b(c)
  Equivalence,    // a == c but b(a) != b(c)
};

inline const char* to_string(ClassicalRule r) {
  switch (r) {
    case ClassicalRule::Tautology: return "tautology";
    case ClassicalRule::Contradiction: return "contradiction";
    case ClassicalRule::Additivity: return "additivity";
    case ClassicalRule::Equivalence: return "equivalence";
  }
  return "unknown";
}

/// witnesses: {a} for tautology/contradiction, {a, c, a|c, a&c} for
/// additivity, {a, c} for equivalence.
struct ClassicalViolation {
  ClassicalRule rule;
  std::vector<Formula> witnesses;
  std::vector<double> observed;
};

inline std::vector<ClassicalViolation> check_classical_beliefs(const ClassicalBelief& b) {
  std::vector<ClassicalViolation> out;
  for (const auto& [f, v] : b.entries()) {
    if (classically_valid(f) && v < 1.0 - kEpsilon) {
      out.push_back({ClassicalRule::Tautology, {f}, {v}});
    }
  }
  for (const auto& [f, v] : b.entries()) {
    if (classically_valid(!f) && v > kEpsilon) {
      out.push_back({ClassicalRule::Contradiction, {f}, {v}});
    }
  }
  std::unordered_set<Formula> seen;
  for (const auto& [f, v] : b.entries()) {
    if (f.op() != Op::And && f.op() != Op::Or) continue;
    const Formula a = f.lhs(), c = f.rhs();
    if (!seen.insert(a & c).second) continue;
    auto va = b.find(a), vc = b.find(c), vd = b.find(a | c), vk = b.find(a & c);
    if (!va || !vc || !vd || !vk) continue;
    if (!approx_equal(*vd + *vk, *va + *vc)) {
      out.push_back({ClassicalRule::Additivity, {a, c, a | c, a & c}, {*va, *vc, *vd, *vk}});
    }
  }
  const auto& es = b.entries();
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!approx_equal(es[i].second, es[j].second) &&
          classically_equivalent(es[i].first, es[j].first)) {
        out.push_back({ClassicalRule::Equivalence,
                       {es[i].first, es[j].first},
                       {es[i].second, es[j].second}});
      }
    }
  }
  return out;
}

}  // namespace partialbet
