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
  \file betting.hpp
  \brief Classical and partial bets, book payoffs and Dutch Book detection.

  Payoffs are the buyer's. A classical bet (a, x, r) pays r(V(a) - x); a
  partial bet (a, (x,y), (h,k)) pays (h,k) * (pair(V(a)) - (x,y)):

      a true     (h(1-x), -ky)
      a neutral  (-hx,    -ky)
      a false    (-hx,    k(1-y))

  Partial payoffs are classified against the diagonal: below-left of it
  (u < v) is a net loss. Partial books are checked over all of K^n, classical
  books over the 2^n classical worlds.
*/

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partialbet/formula.hpp"
#include "partialbet/kleene.hpp"
#include "partialbet/truth.hpp"
#include "partialbet/values.hpp"

namespace partialbet {

struct ClassicalBet {
  Formula formula;
  double quotient;
  double stake;
};

struct PartialBet {
  Formula formula;
  PartialValue quotient;
  RPair stake;
};

/// A finite list of bets over one arity.
template <class Bet>
class Book {
 public:
  using bet_type = Bet;

  explicit Book(int arity) : arity_(arity) {}
  Book(int arity, std::vector<Bet> bets) : arity_(arity) {
    for (auto& b : bets) add(std::move(b));
  }

  void add(Bet bet) {
    if (bet.formula.arity() != arity_) {
      throw Error(ErrorKind::Arity, "bet on '" + bet.formula.to_string() + "' has arity " +
                                        std::to_string(bet.formula.arity()) + ", book has " +
                                        std::to_string(arity_));
    }
    if constexpr (std::is_same_v<Bet, ClassicalBet>) {
      require_classical(bet.formula);
      if (!std::isfinite(bet.quotient) || bet.quotient < -kEpsilon || bet.quotient > 1 + kEpsilon) {
        throw Error(ErrorKind::InvalidValue, "classical quotient outside [0,1]");
      }
      if (!std::isfinite(bet.stake)) throw Error(ErrorKind::InvalidValue, "stake is not finite");
    } else {
      if (!bet.stake.finite()) throw Error(ErrorKind::InvalidValue, "stake is not finite");
    }
    bets_.push_back(std::move(bet));
  }

  /// Concatenation of two books on the same arity.
  friend Book operator+(Book a, const Book& b) {
    if (a.arity_ != b.arity_) throw Error(ErrorKind::Arity, "joining books of different arity");
    for (const auto& bet : b.bets_) a.bets_.push_back(bet);
    return a;
  }

  int arity() const { return arity_; }
  bool empty() const { return bets_.empty(); }
  std::size_t size() const { return bets_.size(); }
  const std::vector<Bet>& bets() const { return bets_; }

 private:
  int arity_;
  std::vector<Bet> bets_;
};

using PartialBook = Book<PartialBet>;
using ClassicalBook = Book<ClassicalBet>;

// -- payoffs -------------------------------------------------------------------

inline double classical_payoff(const ClassicalBet& bet, const World& w) {
  require_classical(bet.formula);
  if (!w.is_classical()) {
    throw Error(ErrorKind::Input, "classical payoff at non-classical world " + w.to_string());
  }
  const TruthValue t = eval(bet.formula, w);
  return t == TruthValue::T ? bet.stake * (1.0 - bet.quotient) : -bet.stake * bet.quotient;
}

inline RPair partial_payoff(const PartialBet& bet, const World& w) {
  const TruthValue t = eval(bet.formula, w);
  const double x = bet.quotient.x(), y = bet.quotient.y();
  const double h = bet.stake.u, k = bet.stake.v;
  switch (t) {
    case TruthValue::T: return {h * (1.0 - x), -k * y};
    case TruthValue::N: return {-h * x, -k * y};
    case TruthValue::F: return {-h * x, k * (1.0 - y)};
  }
  return {};
}

inline double book_payoff(const ClassicalBook& book, const World& w) {
  if (w.arity() != book.arity()) throw Error(ErrorKind::Arity, "world length differs from book arity");
  double total = 0.0;
  for (const auto& b : book.bets()) total += classical_payoff(b, w);
  return total;
}

inline RPair book_payoff(const PartialBook& book, const World& w) {
  if (w.arity() != book.arity()) throw Error(ErrorKind::Arity, "world length differs from book arity");
  RPair total;
  for (const auto& b : book.bets()) total += partial_payoff(b, w);
  return total;
}

// -- classification and detection ---------------------------------------------

enum class Region { DeltaMinus, Delta, DeltaPlus };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::DeltaMinus: return "delta-";
    case Region::Delta: return "delta";
    case Region::DeltaPlus: return "delta+";
  }
  return "?";
}

/// u < v: net loss; u = v (within tolerance): neutral; u > v: net gain.
inline Region classify(const RPair& p) {
  if (approx_equal(p.u, p.v)) return Region::Delta;
  return p.u < p.v ? Region::DeltaMinus : Region::DeltaPlus;
}

/// Same trichotomy for classical payoffs, around 0.
inline Region classify(double payoff) {
  if (approx_equal(payoff, 0.0)) return Region::Delta;
  return payoff < 0.0 ? Region::DeltaMinus : Region::DeltaPlus;
}

enum class VerdictKind { DutchBook, WeakDutchBook, Neither };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::DutchBook: return "DutchBook";
    case VerdictKind::WeakDutchBook: return "WeakDutchBook";
    case VerdictKind::Neither: return "Neither";
  }
  return "?";
}

/// A DutchBook also qualifies as weak.
inline bool satisfies(VerdictKind actual, VerdictKind claimed) {
  if (claimed == VerdictKind::Neither) return true;
  if (claimed == VerdictKind::WeakDutchBook) return actual != VerdictKind::Neither;
  return actual == VerdictKind::DutchBook;
}

struct Verdict {
  VerdictKind kind = VerdictKind::Neither;
  /// Neither: first world outside the loss-or-neutral region (or, if every
  /// world is neutral, the first world). Weak: first strict-loss world.
  /// DutchBook: none.
  std::optional<World> witness;
  /// Set when the book had no bets.
  bool empty_book = false;
};

namespace detail {

template <class Book, class Enumerate>
Verdict detect_impl(const Book& book, Enumerate&& enumerate) {
  Verdict v;
  if (book.empty()) {
    v.empty_book = true;
    return v;
  }
  std::optional<World> first_gain, first_neutral, first_loss;
  enumerate([&](const World& w) {
    const Region r = classify(book_payoff(book, w));
    auto& slot = r == Region::DeltaPlus ? first_gain : r == Region::Delta ? first_neutral : first_loss;
    if (!slot) slot = w;
  });
  if (first_gain) {
    v.witness = first_gain;
  } else if (!first_loss) {
    v.witness = first_neutral;
  } else if (first_neutral) {
    v.kind = VerdictKind::WeakDutchBook;
    v.witness = first_loss;
  } else {
    v.kind = VerdictKind::DutchBook;
  }
  return v;
}

}  // namespace detail

/// Exhaustive over K^n. DutchBook iff every payoff is a net loss;
/// WeakDutchBook iff none is a net gain and some is a net loss.
inline Verdict detect(const PartialBook& book) {
  require_enumerable(book.arity());
  return detail::detect_impl(book, [&](auto&& fn) {
    for_each_world(book.arity(), [&](const World& w, std::size_t) { fn(w); });
  });
}

/// Exhaustive over the 2^n classical worlds; strict (< 0) and weak (<= 0,
/// somewhere < 0) sure loss.
inline Verdict detect(const ClassicalBook& book) {
  require_enumerable(book.arity());
  return detail::detect_impl(book, [&](auto&& fn) { for_each_classical_world(book.arity(), fn); });
}

template <class Payoff>
struct PayoffRow {
  World world;
  Payoff payoff;
};

inline std::vector<PayoffRow<RPair>> payoff_table(const PartialBook& book) {
  std::vector<PayoffRow<RPair>> rows;
  for_each_world(book.arity(),
                 [&](const World& w, std::size_t) { rows.push_back({w, book_payoff(book, w)}); });
  return rows;
}

inline std::vector<PayoffRow<double>> payoff_table(const ClassicalBook& book) {
  std::vector<PayoffRow<double>> rows;
  for_each_classical_world(book.arity(),
                           [&](const World& w) { rows.push_back({w, book_payoff(book, w)}); });
  return rows;
}

/// Every stake negated: the bookmaker's side of the same book.
inline PartialBook flip_stakes(const PartialBook& book) {
  PartialBook out(book.arity());
  for (const auto& b : book.bets()) out.add({b.formula, b.quotient, -b.stake});
  return out;
}

inline ClassicalBook flip_stakes(const ClassicalBook& book) {
  ClassicalBook out(book.arity());
  for (const auto& b : book.bets()) out.add({b.formula, b.quotient, -b.stake});
  return out;
}

}  // namespace partialbet
