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
  \file truth.hpp
  \brief Kleene truth values and possible worlds.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "partialbet/error.hpp"
#include "partialbet/partial_set.hpp"
#include "partialbet/values.hpp"

namespace partialbet {

/// Largest arity for which worlds are enumerated (3^12 = 531441 worlds).
inline constexpr int kMaxArity = 12;

inline void require_enumerable(int arity) {
  if (arity < 0 || arity > kMaxArity) {
    throw Error(ErrorKind::Arity, "arity " + std::to_string(arity) +
                                      " outside the enumerable range [0," +
                                      std::to_string(kMaxArity) + "]");
  }
}

/// Ordered F < N < T.
enum class TruthValue : std::uint8_t { F = 0, N = 1, T = 2 };

inline TruthValue kleene_and(TruthValue a, TruthValue b) { return a < b ? a : b; }
inline TruthValue kleene_or(TruthValue a, TruthValue b) { return a < b ? b : a; }
inline TruthValue kleene_not(TruthValue a) {
  return static_cast<TruthValue>(2 - static_cast<int>(a));
}

/// Embedding into T: F -> (0,1), N -> (0,0), T -> (1,0).
inline PartialValue pair(TruthValue t) {
  switch (t) {
    case TruthValue::F: return PartialValue::bottom();
    case TruthValue::N: return PartialValue::zero();
    case TruthValue::T: return PartialValue::top();
  }
  return PartialValue::zero();
}

/// Information order: N below both F and T, F and T incomparable.
inline bool info_leq(TruthValue a, TruthValue b) {
  return a == b || a == TruthValue::N;
}

inline char to_char(TruthValue t) {
  switch (t) {
    case TruthValue::F: return 'F';
    case TruthValue::N: return 'N';
    case TruthValue::T: return 'T';
  }
  return '?';
}

inline std::ostream& operator<<(std::ostream& os, TruthValue t) { return os << to_char(t); }

/// A point of K^n. Component i holds the value of p_{i+1}. Index order is
/// base 3 with p1 most significant and F < N < T, which is also the
/// lexicographic order of world strings read with F < N < T.
class World {
 public:
  World() = default;
  explicit World(std::vector<TruthValue> values) : values_(std::move(values)) {}

  /// Parses "TNF" (p1 = T, p2 = N, p3 = F).
  static World parse(std::string_view s) {
    std::vector<TruthValue> v;
    v.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      switch (s[i]) {
        case 'T': v.push_back(TruthValue::T); break;
        case 'N': v.push_back(TruthValue::N); break;
        case 'F': v.push_back(TruthValue::F); break;
        default:
          throw ParseError(i, std::string("world strings use T, N, F; got '") + s[i] + "'");
      }
    }
    return World(std::move(v));
  }

  static World from_index(std::size_t index, int arity) {
    std::vector<TruthValue> v(static_cast<std::size_t>(arity));
    for (int i = arity; i-- > 0;) {
      v[static_cast<std::size_t>(i)] = static_cast<TruthValue>(index % 3);
      index /= 3;
    }
    return World(std::move(v));
  }

  int arity() const { return static_cast<int>(values_.size()); }
  std::size_t size() const { return values_.size(); }

  /// Value of variable p_var (1-based).
  TruthValue var(int var) const { return values_[static_cast<std::size_t>(var - 1)]; }
  TruthValue operator[](std::size_t i) const { return values_[i]; }
  TruthValue& operator[](std::size_t i) { return values_[i]; }

  const std::vector<TruthValue>& values() const { return values_; }

  bool is_classical() const {
    for (auto t : values_) {
      if (t == TruthValue::N) return false;
    }
    return true;
  }

  std::size_t index() const {
    std::size_t idx = 0;
    for (auto t : values_) idx = idx * 3 + static_cast<std::size_t>(t);
    return idx;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(values_.size());
    for (auto t : values_) s.push_back(to_char(t));
    return s;
  }

  friend bool operator==(const World&, const World&) = default;
  friend auto operator<=>(const World&, const World&) = default;

 private:
  std::vector<TruthValue> values_;
};

inline std::ostream& operator<<(std::ostream& os, const World& w) { return os << w.to_string(); }

/// Pointwise information order on worlds.
inline bool info_leq(const World& s, const World& t) {
  if (s.size() != t.size()) {
    throw Error(ErrorKind::Arity, "info_leq on worlds of different length");
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!info_leq(s[i], t[i])) return false;
  }
  return true;
}

inline std::size_t world_count(int arity) {
  require_enumerable(arity);
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= 3;
  return n;
}

/// Visits every world of K^n in index order. The same World object is
/// mutated in place between calls; copy it if you need to keep it.
template <class Fn>
void for_each_world(int arity, Fn&& fn) {
  const std::size_t total = world_count(arity);
  World w(std::vector<TruthValue>(static_cast<std::size_t>(arity), TruthValue::F));
  for (std::size_t idx = 0; idx < total; ++idx) {
    fn(static_cast<const World&>(w), idx);
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] != TruthValue::T) {
        w[i] = static_cast<TruthValue>(static_cast<int>(w[i]) + 1);
        break;
      }
      w[i] = TruthValue::F;
    }
  }
}

/// Visits the 2^n classical worlds, lexicographically with F < T.
template <class Fn>
void for_each_classical_world(int arity, Fn&& fn) {
  require_enumerable(arity);
  const std::size_t total = std::size_t{1} << arity;
  World w(std::vector<TruthValue>(static_cast<std::size_t>(arity), TruthValue::F));
  for (std::size_t code = 0; code < total; ++code) {
    for (int i = 0; i < arity; ++i) {
      const bool bit = (code >> (arity - 1 - i)) & 1U;
      w[static_cast<std::size_t>(i)] = bit ? TruthValue::T : TruthValue::F;
    }
    fn(static_cast<const World&>(w));
  }
}

inline std::vector<World> all_worlds(int arity) {
  std::vector<World> out;
  out.reserve(world_count(arity));
  for_each_world(arity, [&](const World& w, std::size_t) { out.push_back(w); });
  return out;
}

/// The universe K^n, one shared instance per arity. Atom labels are world
/// strings; atom i is World::from_index(i, n).
inline UniversePtr world_universe(int arity) {
  require_enumerable(arity);
  static std::mutex mu;
  static std::vector<UniversePtr> cache(kMaxArity + 1);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(arity)];
  if (!slot) {
    slot = Universe::generated("K^" + std::to_string(arity), world_count(arity),
                               [arity](std::size_t i) {
                                 return World::from_index(i, arity).to_string();
                               });
  }
  return slot;
}

}  // namespace partialbet
