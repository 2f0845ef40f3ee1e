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
  \file kleene.hpp
  \brief Valuation and meaning semantics of Kleene logic.

  Two semantics are provided and must agree:

  - eval(f, w): homomorphic extension of a world into K (min/max/swap);
  - meaning(f): the partial set (positive models, negative models) on K^n,
    built recursively with meet/join/negate. meaning_scan() computes the
    same thing by evaluating at every world.
*/

#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "partialbet/formula.hpp"
#include "partialbet/partial_set.hpp"
#include "partialbet/truth.hpp"

namespace partialbet {

namespace detail {

inline TruthValue eval_unchecked(const Formula& f, const World& w) {
  switch (f.op()) {
    case Op::Var: return w.var(f.var_index());
    case Op::Zero: return TruthValue::F;
    case Op::One: return TruthValue::T;
    case Op::Neutral: return TruthValue::N;
    case Op::Not: return kleene_not(eval_unchecked(f.lhs(), w));
    case Op::And: {
      const TruthValue a = eval_unchecked(f.lhs(), w);
      if (a == TruthValue::F) return a;
      return kleene_and(a, eval_unchecked(f.rhs(), w));
    }
    case Op::Or: {
      const TruthValue a = eval_unchecked(f.lhs(), w);
      if (a == TruthValue::T) return a;
      return kleene_or(a, eval_unchecked(f.rhs(), w));
    }
  }
  return TruthValue::N;
}

inline void require_same_arity(const Formula& f, const World& w) {
  if (f.arity() != w.arity()) {
    throw Error(ErrorKind::Arity, "formula of arity " + std::to_string(f.arity()) +
                                      " evaluated at a world of length " + std::to_string(w.arity()));
  }
}

}  // namespace detail

inline TruthValue eval(const Formula& f, const World& w) {
  detail::require_same_arity(f, w);
  return detail::eval_unchecked(f, w);
}

/// Values of f at every world of K^n, in world index order.
inline std::vector<TruthValue> truth_table(const Formula& f) {
  std::vector<TruthValue> out;
  out.reserve(world_count(f.arity()));
  for_each_world(f.arity(),
                 [&](const World& w, std::size_t) { out.push_back(detail::eval_unchecked(f, w)); });
  return out;
}

/// meaning of p_i: worlds where p_i is T, worlds where p_i is F.
inline PartialSet variable_meaning(int index, int arity) {
  auto universe = world_universe(arity);
  Bits pos(universe->size()), neg(universe->size());
  for_each_world(arity, [&](const World& w, std::size_t idx) {
    const TruthValue t = w.var(index);
    if (t == TruthValue::T) pos.set(idx);
    if (t == TruthValue::F) neg.set(idx);
  });
  return PartialSet(std::move(universe), std::move(pos), std::move(neg));
}

/// Recursive meaning via partial-set operations. This is the authoritative
/// path; see meaning_scan() for the world-by-world computation.
inline PartialSet meaning(const Formula& f) {
  require_enumerable(f.arity());
  switch (f.op()) {
    case Op::Var: return variable_meaning(f.var_index(), f.arity());
    case Op::Zero: return PartialSet::bottom(world_universe(f.arity()));
    case Op::One: return PartialSet::top(world_universe(f.arity()));
    case Op::Neutral: return PartialSet::neutral(world_universe(f.arity()));
    case Op::Not: return negate(meaning(f.lhs()));
    case Op::And: return meet(meaning(f.lhs()), meaning(f.rhs()));
    case Op::Or: return join(meaning(f.lhs()), meaning(f.rhs()));
  }
  throw Error(ErrorKind::Input, "unknown formula node");
}

/// ({w : eval = T}, {w : eval = F}) by evaluating at every world.
inline PartialSet meaning_scan(const Formula& f) {
  auto universe = world_universe(f.arity());
  Bits pos(universe->size()), neg(universe->size());
  for_each_world(f.arity(), [&](const World& w, std::size_t idx) {
    const TruthValue t = detail::eval_unchecked(f, w);
    if (t == TruthValue::T) pos.set(idx);
    if (t == TruthValue::F) neg.set(idx);
  });
  return PartialSet(std::move(universe), std::move(pos), std::move(neg));
}

/// Premises entail the conclusion iff at every world the minimum premise
/// value is at most the conclusion value. No premises means minimum T.
inline bool entails(std::span<const Formula> premises, const Formula& conclusion) {
  for (const auto& p : premises) {
    if (p.arity() != conclusion.arity()) {
      throw Error(ErrorKind::Arity, "premise and conclusion arities differ");
    }
  }
  bool ok = true;
  require_enumerable(conclusion.arity());
  for_each_world(conclusion.arity(), [&](const World& w, std::size_t) {
    if (!ok) return;
    TruthValue inf = TruthValue::T;
    for (const auto& p : premises) inf = kleene_and(inf, detail::eval_unchecked(p, w));
    if (inf > detail::eval_unchecked(conclusion, w)) ok = false;
  });
  return ok;
}

inline bool entails(std::initializer_list<Formula> premises, const Formula& conclusion) {
  return entails(std::span<const Formula>(premises.begin(), premises.size()), conclusion);
}

inline bool entails(const Formula& premise, const Formula& conclusion) {
  return entails(std::span<const Formula>(&premise, 1), conclusion);
}

inline bool equivalent(const Formula& a, const Formula& b) {
  if (a.arity() != b.arity()) throw Error(ErrorKind::Arity, "equivalence across arities");
  require_enumerable(a.arity());
  bool same = true;
  for_each_world(a.arity(), [&](const World& w, std::size_t) {
    if (same && detail::eval_unchecked(a, w) != detail::eval_unchecked(b, w)) same = false;
  });
  return same;
}

// -- classical fragment ----------------------------------------------------

inline void require_classical(const Formula& f) {
  if (!f.is_classical()) {
    throw Error(ErrorKind::Input, "formula '" + f.to_string() + "' contains the neutral constant");
  }
}

/// Two-valued consequence over the 2^n classical worlds.
inline bool classically_entails(std::span<const Formula> premises, const Formula& conclusion) {
  require_classical(conclusion);
  for (const auto& p : premises) {
    require_classical(p);
    if (p.arity() != conclusion.arity()) {
      throw Error(ErrorKind::Arity, "premise and conclusion arities differ");
    }
  }
  bool ok = true;
  for_each_classical_world(conclusion.arity(), [&](const World& w) {
    if (!ok) return;
    TruthValue inf = TruthValue::T;
    for (const auto& p : premises) inf = kleene_and(inf, detail::eval_unchecked(p, w));
    if (inf > detail::eval_unchecked(conclusion, w)) ok = false;
  });
  return ok;
}

inline bool classically_valid(const Formula& f) { return classically_entails({}, f); }

inline bool classically_equivalent(const Formula& a, const Formula& b) {
  require_classical(a);
  require_classical(b);
  if (a.arity() != b.arity()) throw Error(ErrorKind::Arity, "equivalence across arities");
  bool same = true;
  for_each_classical_world(a.arity(), [&](const World& w) {
    if (same && detail::eval_unchecked(a, w) != detail::eval_unchecked(b, w)) same = false;
  });
  return same;
}

/// A classical formula whose classical models are exactly `worlds`: the
/// disjunction of their minterms in lexicographic world order. The empty
/// set gives 0; a minterm over zero variables is 1.
inline Formula dnf_formula_for(std::span<const World> worlds, int arity) {
  require_enumerable(arity);
  std::vector<World> sorted(worlds.begin(), worlds.end());
  for (const auto& w : sorted) {
    if (w.arity() != arity) throw Error(ErrorKind::Arity, "world " + w.to_string() + " has wrong length");
    if (!w.is_classical()) {
      throw Error(ErrorKind::Input, "world " + w.to_string() + " is not classical");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  auto minterm = [arity](const World& w) {
    if (arity == 0) return Formula::one(0);
    auto literal = [&](int i) {
      Formula v = Formula::var(i, arity);
      return w.var(i) == TruthValue::T ? v : !v;
    };
    Formula m = literal(1);
    for (int i = 2; i <= arity; ++i) m = m & literal(i);
    return m;
  };

  if (sorted.empty()) return Formula::zero(arity);
  Formula f = minterm(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) f = f | minterm(sorted[i]);
  return f;
}

}  // namespace partialbet
