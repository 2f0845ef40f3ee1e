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
  \file io.hpp
  \brief JSON file formats.

  Belief assignment:
      {"arity": n, "beliefs": [{"formula": "p1 & p2", "value": [x, y]}, ...]}

  Book:
      {"arity": n, "kind": "partial" | "classical",
       "bets": [{"formula": "...", "quotient": [x, y] | x, "stake": [h, k] | r}]}

  Certificate:
      {"violation": {...}, "construction": "...", "book": <book>,
       "claim": "...", "verdict": {"kind": "...", "witness": "TNF" | null},
       "payoff_table": {"TNF": [u, v] | r, ...}, "sampled": bool, "notes": [...]}

  Numbers may also be written as decimal strings ("0.1").
*/

#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "partialbet/betting.hpp"
#include "partialbet/probability.hpp"
#include "partialbet/synth.hpp"

namespace partialbet {

using json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad_input(const std::string& msg) { throw Error(ErrorKind::Input, msg); }

inline double number_from_json(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    double d = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, d);
    if (ec == std::errc() && ptr == last) return d;
  }
  bad_input(where + ": expected a number or decimal string");
}

inline RPair pair_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) bad_input(where + ": expected a two-element array");
  return {number_from_json(j[0], where), number_from_json(j[1], where)};
}

inline int arity_from_json(const json& j) {
  if (!j.is_object()) bad_input("top level must be an object");
  if (!j.contains("arity") || !j["arity"].is_number_integer()) bad_input("missing integer 'arity'");
  const int n = j["arity"].get<int>();
  require_enumerable(n);
  return n;
}

inline const json& array_field(const json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array()) bad_input(std::string("missing array '") + name + "'");
  return j[name];
}

inline std::string string_field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name) || !j[name].is_string()) {
    bad_input(where + ": missing string '" + name + "'");
  }
  return j[name].get<std::string>();
}

}  // namespace detail

inline json to_json(const RPair& p) { return json::array({p.u, p.v}); }
inline json to_json(const PartialValue& p) { return json::array({p.x(), p.y()}); }

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Input, "'" + path + "' is not valid JSON: " + e.what());
  }
}

// -- beliefs ---------------------------------------------------------------------

inline BeliefAssignment belief_from_json(const json& j) {
  const int n = detail::arity_from_json(j);
  BeliefAssignment b(n);
  const auto& arr = detail::array_field(j, "beliefs");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "beliefs[" + std::to_string(i) + "]";
    const Formula f = parse(detail::string_field(arr[i], "formula", where), n);
    if (!arr[i].contains("value")) detail::bad_input(where + ": missing 'value'");
    const RPair v = detail::pair_from_json(arr[i]["value"], where);
    b.add(f, PartialValue(v.u, v.v));
  }
  return b;
}

inline json to_json(const BeliefAssignment& b) {
  json arr = json::array();
  for (const auto& e : b.entries()) {
    arr.push_back({{"formula", e.formula.to_string()}, {"value", to_json(e.value)}});
  }
  return {{"arity", b.arity()}, {"beliefs", std::move(arr)}};
}

// -- books -----------------------------------------------------------------------

using AnyBook = std::variant<PartialBook, ClassicalBook>;

inline AnyBook book_from_json(const json& j) {
  const int n = detail::arity_from_json(j);
  const std::string kind = j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                                                                        : std::string("partial");
  const auto& arr = detail::array_field(j, "bets");
  if (kind == "partial") {
    PartialBook book(n);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "bets[" + std::to_string(i) + "]";
      const Formula f = parse(detail::string_field(arr[i], "formula", where), n);
      if (!arr[i].contains("quotient") || !arr[i].contains("stake")) {
        detail::bad_input(where + ": needs 'quotient' and 'stake'");
      }
      const RPair q = detail::pair_from_json(arr[i]["quotient"], where + ".quotient");
      const RPair s = detail::pair_from_json(arr[i]["stake"], where + ".stake");
      book.add({f, PartialValue(q.u, q.v), s});
    }
    return book;
  }
  if (kind == "classical") {
    ClassicalBook book(n);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = "bets[" + std::to_string(i) + "]";
      const Formula f = parse(detail::string_field(arr[i], "formula", where), n);
      if (!arr[i].contains("quotient") || !arr[i].contains("stake")) {
        detail::bad_input(where + ": needs 'quotient' and 'stake'");
      }
      book.add({f, detail::number_from_json(arr[i]["quotient"], where + ".quotient"),
                detail::number_from_json(arr[i]["stake"], where + ".stake")});
    }
    return book;
  }
  detail::bad_input("'kind' must be \"partial\" or \"classical\"");
}

inline json to_json(const PartialBook& book) {
  json arr = json::array();
  for (const auto& b : book.bets()) {
    arr.push_back({{"formula", b.formula.to_string()},
                   {"quotient", to_json(b.quotient)},
                   {"stake", to_json(b.stake)}});
  }
  return {{"arity", book.arity()}, {"kind", "partial"}, {"bets", std::move(arr)}};
}

inline json to_json(const ClassicalBook& book) {
  json arr = json::array();
  for (const auto& b : book.bets()) {
    arr.push_back({{"formula", b.formula.to_string()}, {"quotient", b.quotient}, {"stake", b.stake}});
  }
  return {{"arity", book.arity()}, {"kind", "classical"}, {"bets", std::move(arr)}};
}

inline json to_json(const Verdict& v) {
  json j = {{"kind", to_string(v.kind)}};
  j["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
  if (v.empty_book) j["empty_book"] = true;
  return j;
}

// -- reports and certificates -----------------------------------------------------------

inline json to_json(const Violation& v) {
  json formulas = json::array(), values = json::array();
  for (const auto& f : v.witnesses) formulas.push_back(f.to_string());
  for (const auto& x : v.observed) values.push_back(to_json(x));
  return {{"rule", to_string(v.rule)},
          {"formulas", std::move(formulas)},
          {"values", std::move(values)},
          {"synthesizable", v.synthesizable},
          {"detail", v.detail}};
}

inline json to_json(const ClassicalViolation& v) {
  json formulas = json::array(), values = json::array();
  for (const auto& f : v.witnesses) formulas.push_back(f.to_string());
  for (double x : v.observed) values.push_back(x);
  return {{"rule", to_string(v.rule)}, {"formulas", std::move(formulas)}, {"values", std::move(values)}};
}

inline json to_json(const Unchecked& u) {
  return {{"rule", to_string(u.rule)}, {"entry", u.entry.to_string()}, {"missing", u.missing}};
}

inline json to_json(const CheckReport& r) {
  json v = json::array(), u = json::array();
  for (const auto& x : r.violations) v.push_back(to_json(x));
  for (const auto& x : r.unchecked) u.push_back(to_json(x));
  return {{"violations", std::move(v)}, {"unchecked", std::move(u)}};
}

template <class BookT, class ViolationT>
json to_json(const Certificate<BookT, ViolationT>& c) {
  json table = json::object();
  for (const auto& row : c.payoffs) {
    if constexpr (std::is_same_v<decltype(row.payoff), const double> ||
                  std::is_same_v<decltype(row.payoff), double>) {
      table[row.world.to_string()] = row.payoff;
    } else {
      table[row.world.to_string()] = to_json(row.payoff);
    }
  }
  json notes = json::array();
  for (const auto& n : c.notes) notes.push_back(n);
  return {{"violation", to_json(c.violation)},
          {"construction", c.construction},
          {"book", to_json(c.book)},
          {"claim", to_string(c.claim)},
          {"verdict", to_json(c.verdict)},
          {"payoff_table", std::move(table)},
          {"sampled", c.sampled},
          {"notes", std::move(notes)}};
}

inline json to_json(const SynthesisResult& r) {
  json certs = json::array(), uns = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  for (const auto& u : r.unsynthesized) {
    uns.push_back({{"violation", to_json(u.violation)}, {"reason", u.reason}});
  }
  return {{"certificates", std::move(certs)}, {"unsynthesized", std::move(uns)}};
}

}  // namespace partialbet
