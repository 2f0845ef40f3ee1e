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
  \file partial_set.hpp
  \brief Finite partial sets: disjoint (positive, negative) subset pairs.

  A PartialSet carries its universe. Operations between partial sets on
  different universes throw ErrorKind::UniverseMismatch.

    meet   (A,B) & (C,D) = (A n C, B u D)
    join   (A,B) | (C,D) = (A u C, B n D)
    negate -(A,B)        = (B,A)
    leq    (A,B) <= (C,D) iff A c C and D c B
*/

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "partialbet/error.hpp"

namespace partialbet {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A finite ordered set of atoms. Either an explicit list of labels, or a
/// generated family (size + tag + labeller) for universes too large to
/// spell out, such as the world space K^n.
class Universe {
 public:
  using Labeller = std::function<std::string(std::size_t)>;

  static std::shared_ptr<const Universe> of_atoms(std::vector<std::string> atoms) {
    std::unordered_set<std::string> seen;
    for (const auto& a : atoms) {
      if (!seen.insert(a).second) {
        throw Error(ErrorKind::Input, "duplicate atom '" + a + "' in universe");
      }
    }
    auto u = std::shared_ptr<Universe>(new Universe());
    u->size_ = atoms.size();
    u->atoms_ = std::move(atoms);
    return u;
  }

  static std::shared_ptr<const Universe> generated(std::string tag, std::size_t size,
                                                   Labeller labeller) {
    auto u = std::shared_ptr<Universe>(new Universe());
    u->tag_ = std::move(tag);
    u->size_ = size;
    u->labeller_ = std::move(labeller);
    return u;
  }

  std::size_t size() const { return size_; }

  std::string label(std::size_t i) const {
    assert(i < size_);
    return labeller_ ? labeller_(i) : atoms_[i];
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    if (!labeller_) {
      auto it = std::find(atoms_.begin(), atoms_.end(), label);
      if (it == atoms_.end()) return std::nullopt;
      return static_cast<std::size_t>(it - atoms_.begin());
    }
    for (std::size_t i = 0; i < size_; ++i) {
      if (labeller_(i) == label) return i;
    }
    return std::nullopt;
  }

  const std::string& tag() const { return tag_; }

  friend bool operator==(const Universe& a, const Universe& b) {
    if (&a == &b) return true;
    if (a.size_ != b.size_) return false;
    if (static_cast<bool>(a.labeller_) != static_cast<bool>(b.labeller_)) return false;
    if (a.labeller_) return a.tag_ == b.tag_;
    return a.atoms_ == b.atoms_;
  }

 private:
  Universe() = default;

  std::string tag_;
  std::size_t size_ = 0;
  std::vector<std::string> atoms_;
  Labeller labeller_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

class PartialSet {
 public:
  /// Validating constructor: sizes must match the universe and pos/neg must
  /// be disjoint.
  PartialSet(UniversePtr universe, Bits pos, Bits neg)
      : universe_(std::move(universe)), pos_(std::move(pos)), neg_(std::move(neg)) {
    if (!universe_) throw Error(ErrorKind::Input, "partial set without universe");
    if (pos_.size() != universe_->size() || neg_.size() != universe_->size()) {
      throw Error(ErrorKind::UniverseMismatch,
                  "subset size does not match universe size");
    }
    if (pos_.intersects(neg_)) {
      throw Error(ErrorKind::InvalidValue,
                  "positive and negative parts of a partial set must be disjoint");
    }
  }

  /// Builds from atom labels.
  static PartialSet of(UniversePtr universe, const std::vector<std::string>& pos,
                       const std::vector<std::string>& neg) {
    Bits p(universe->size()), n(universe->size());
    auto fill = [&](Bits& bits, const std::vector<std::string>& labels) {
      for (const auto& l : labels) {
        auto i = universe->index_of(l);
        if (!i) throw Error(ErrorKind::UniverseMismatch, "atom '" + l + "' not in universe");
        bits.set(*i);
      }
    };
    fill(p, pos);
    fill(n, neg);
    return PartialSet(std::move(universe), std::move(p), std::move(n));
  }

  /// (empty, S)
  static PartialSet bottom(UniversePtr u) {
    Bits all(u->size());
    all.set();
    Bits none(u->size());
    return PartialSet(trusted{}, std::move(u), std::move(none), std::move(all));
  }

  /// (S, empty)
  static PartialSet top(UniversePtr u) {
    Bits all(u->size());
    all.set();
    Bits none(u->size());
    return PartialSet(trusted{}, std::move(u), std::move(all), std::move(none));
  }

  /// (empty, empty)
  static PartialSet neutral(UniversePtr u) {
    Bits none(u->size());
    return PartialSet(trusted{}, std::move(u), none, none);
  }

  const UniversePtr& universe() const { return universe_; }
  const Bits& pos() const { return pos_; }
  const Bits& neg() const { return neg_; }

  bool is_boolean() const { return (pos_ | neg_).all(); }

  friend bool operator==(const PartialSet& a, const PartialSet& b) {
    return same_universe(a.universe_, b.universe_) && a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

  friend PartialSet meet(const PartialSet& a, const PartialSet& b);
  friend PartialSet join(const PartialSet& a, const PartialSet& b);
  friend PartialSet negate(const PartialSet& a);

  std::string to_string() const {
    auto side = [&](const Bits& bits) {
      std::string s = "{";
      bool first = true;
      for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) {
        if (!first) s += ",";
        s += universe_->label(i);
        first = false;
      }
      return s + "}";
    };
    return "(" + side(pos_) + "," + side(neg_) + ")";
  }

 private:
  struct trusted {};

  PartialSet(trusted, UniversePtr universe, Bits pos, Bits neg)
      : universe_(std::move(universe)), pos_(std::move(pos)), neg_(std::move(neg)) {
    assert(!pos_.intersects(neg_));
  }

  UniversePtr universe_;
  Bits pos_;
  Bits neg_;
};

inline void require_same_universe(const PartialSet& a, const PartialSet& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw Error(ErrorKind::UniverseMismatch, "partial sets live on different universes");
  }
}

inline PartialSet meet(const PartialSet& a, const PartialSet& b) {
  require_same_universe(a, b);
  return PartialSet(PartialSet::trusted{}, a.universe_, a.pos_ & b.pos_, a.neg_ | b.neg_);
}

inline PartialSet join(const PartialSet& a, const PartialSet& b) {
  require_same_universe(a, b);
  return PartialSet(PartialSet::trusted{}, a.universe_, a.pos_ | b.pos_, a.neg_ & b.neg_);
}

inline PartialSet negate(const PartialSet& a) {
  return PartialSet(PartialSet::trusted{}, a.universe_, a.neg_, a.pos_);
}

inline bool leq(const PartialSet& a, const PartialSet& b) {
  require_same_universe(a, b);
  return a.pos().is_subset_of(b.pos()) && b.neg().is_subset_of(a.neg());
}

inline bool is_boolean(const PartialSet& a) { return a.is_boolean(); }

}  // namespace partialbet

template <>
struct std::hash<partialbet::PartialSet> {
  std::size_t operator()(const partialbet::PartialSet& s) const noexcept {
    std::size_t h = std::hash<partialbet::Bits>{}(s.pos());
    return h ^ (std::hash<partialbet::Bits>{}(s.neg()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

namespace partialbet {

using PartialSetFamily = std::unordered_set<PartialSet>;

/// Smallest family containing the generators and the three constants that
/// is closed under meet, join and negate. Semi-naive fixpoint: each newly
/// discovered element is combined with everything found so far exactly once.
inline PartialSetFamily generated_subalgebra(const UniversePtr& universe,
                                             std::span<const PartialSet> generators) {
  PartialSetFamily closure;
  std::vector<PartialSet> found;
  std::size_t frontier = 0;

  auto add = [&](PartialSet s) {
    if (closure.insert(s).second) found.push_back(std::move(s));
  };
  for (const auto& g : generators) {
    if (!same_universe(g.universe(), universe)) {
      throw Error(ErrorKind::UniverseMismatch, "generator on a different universe");
    }
    add(g);
  }
  add(PartialSet::bottom(universe));
  add(PartialSet::top(universe));
  add(PartialSet::neutral(universe));

  while (frontier < found.size()) {
    const std::size_t end = found.size();
    for (std::size_t i = frontier; i < end; ++i) {
      add(negate(found[i]));
      // found may reallocate inside add(); index, don't hold references.
      for (std::size_t j = 0; j <= i; ++j) {
        add(meet(found[i], found[j]));
        add(join(found[i], found[j]));
      }
    }
    frontier = end;
  }
  return closure;
}

inline PartialSetFamily generated_subalgebra(const UniversePtr& universe,
                                             std::initializer_list<PartialSet> generators) {
  std::vector<PartialSet> g(generators);
  return generated_subalgebra(universe, std::span<const PartialSet>(g));
}

/// Enumerates all 3^|S| partial sets on a (small) universe, in base-3 order
/// with atom 0 most significant: digit 0 = negative, 1 = absent, 2 = positive.
inline std::vector<PartialSet> all_partial_sets(const UniversePtr& universe) {
  const std::size_t n = universe->size();
  if (n > 14) {
    throw Error(ErrorKind::Arity, "refusing to enumerate D(S) for |S| > 14");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<PartialSet> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    Bits p(n), q(n);
    std::size_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t d = c % 3;
      c /= 3;
      if (d == 0) q.set(i);
      if (d == 2) p.set(i);
    }
    out.emplace_back(universe, std::move(p), std::move(q));
  }
  return out;
}

}  // namespace partialbet
