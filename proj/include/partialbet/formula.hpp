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
  \file formula.hpp
  \brief Formulas of the n-ary Kleene language and their text syntax.

  Grammar (whitespace ignored):

      or    := and ('|' and)*
      and   := unary ('&' unary)*
      unary := '!' unary | atom
      atom  := 'p' digits | '0' | '1' | 'n' | '(' or ')'

  Printing emits the fewest parentheses that re-parse to the same tree.
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include "partialbet/error.hpp"

namespace partialbet {

enum class Op : std::uint8_t { Var, Zero, One, Neutral, Not, And, Or };

class Formula {
  struct Node {
    Op op;
    int var = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t hash = 0;
    bool classical = true;
    int max_var = 0;
  };

 public:
  static Formula var(int index, int arity) {
    if (index < 1 || index > arity) {
      throw Error(ErrorKind::Arity, "variable p" + std::to_string(index) +
                                        " out of range for arity " + std::to_string(arity));
    }
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    n->var = index;
    n->max_var = index;
    n->hash = mix(0x51ed27u, static_cast<std::size_t>(index));
    return Formula(std::move(n), arity);
  }
  static Formula zero(int arity) { return constant(Op::Zero, arity); }
  static Formula one(int arity) { return constant(Op::One, arity); }
  static Formula neutral(int arity) { return constant(Op::Neutral, arity); }

  friend Formula operator!(const Formula& a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Not;
    n->lhs = a.node_;
    n->classical = a.node_->classical;
    n->max_var = a.node_->max_var;
    n->hash = mix(0x6e07u, a.node_->hash);
    return Formula(std::move(n), a.arity_);
  }
  friend Formula operator&(const Formula& a, const Formula& b) { return binary(Op::And, a, b); }
  friend Formula operator|(const Formula& a, const Formula& b) { return binary(Op::Or, a, b); }

  Op op() const { return node_->op; }
  int arity() const { return arity_; }
  /// Variable index (1-based); meaningful only when op() == Op::Var.
  int var_index() const { return node_->var; }
  /// Operand of Not, left operand of And/Or.
  Formula lhs() const { return Formula(node_->lhs, arity_); }
  Formula rhs() const { return Formula(node_->rhs, arity_); }
  /// No Neutral constant anywhere in the tree.
  bool is_classical() const { return node_->classical; }
  /// Largest variable index used (0 if none).
  int max_var() const { return node_->max_var; }
  std::size_t hash() const { return node_->hash; }

  /// Same tree over a different (not smaller than max_var) arity.
  Formula with_arity(int arity) const {
    if (arity < node_->max_var) {
      throw Error(ErrorKind::Arity, "formula uses p" + std::to_string(node_->max_var) +
                                        ", cannot drop to arity " + std::to_string(arity));
    }
    return Formula(node_, arity);
  }

  /// Structural equality (no normalisation), arity included.
  friend bool operator==(const Formula& a, const Formula& b) {
    return a.arity_ == b.arity_ && same_tree(a.node_.get(), b.node_.get());
  }

  std::string to_string() const {
    std::string out;
    print(node_.get(), 0, out);
    return out;
  }

 private:
  Formula(std::shared_ptr<const Node> n, int arity) : node_(std::move(n)), arity_(arity) {}

  static std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  }

  static Formula constant(Op op, int arity) {
    if (arity < 0) throw Error(ErrorKind::Arity, "negative arity");
    auto n = std::make_shared<Node>();
    n->op = op;
    n->classical = op != Op::Neutral;
    n->hash = mix(0xc0u, static_cast<std::size_t>(op));
    return Formula(std::move(n), arity);
  }

  static Formula binary(Op op, const Formula& a, const Formula& b) {
    if (a.arity_ != b.arity_) {
      throw Error(ErrorKind::Arity, "combining formulas of arity " + std::to_string(a.arity_) +
                                        " and " + std::to_string(b.arity_));
    }
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    n->classical = a.node_->classical && b.node_->classical;
    n->max_var = std::max(a.node_->max_var, b.node_->max_var);
    n->hash = mix(mix(static_cast<std::size_t>(op) * 0x2545f491u, a.node_->hash), b.node_->hash);
    return Formula(std::move(n), a.arity_);
  }

  static bool same_tree(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->hash != b->hash || a->op != b->op) return false;
    switch (a->op) {
      case Op::Var: return a->var == b->var;
      case Op::Zero:
      case Op::One:
      case Op::Neutral: return true;
      case Op::Not: return same_tree(a->lhs.get(), b->lhs.get());
      case Op::And:
      case Op::Or:
        return same_tree(a->lhs.get(), b->lhs.get()) && same_tree(a->rhs.get(), b->rhs.get());
    }
    return false;
  }

  // Binding strength: Or 1, And 2, Not/atoms 3.
  static int strength(Op op) {
    switch (op) {
      case Op::Or: return 1;
      case Op::And: return 2;
      default: return 3;
    }
  }

  static void print(const Node* n, int context, std::string& out) {
    const int s = strength(n->op);
    const bool parens = s < context;
    if (parens) out += '(';
    switch (n->op) {
      case Op::Var: out += "p" + std::to_string(n->var); break;
      case Op::Zero: out += '0'; break;
      case Op::One: out += '1'; break;
      case Op::Neutral: out += 'n'; break;
      case Op::Not:
        out += '!';
        print(n->lhs.get(), 3, out);
        break;
      case Op::And:
      case Op::Or:
        // Left-associative: the right operand needs strictly higher binding.
        print(n->lhs.get(), s, out);
        out += n->op == Op::And ? " & " : " | ";
        print(n->rhs.get(), s + 1, out);
        break;
    }
    if (parens) out += ')';
  }

  std::shared_ptr<const Node> node_;
  int arity_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << f.to_string(); }

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, int arity) : text_(text), arity_(arity) {}

  Formula run() {
    Formula f = parse_or();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept('|')) f = f | parse_and();
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept('&')) f = f & parse_unary();
    return f;
  }

  Formula parse_unary() {
    if (accept('!')) return !parse_unary();
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_or();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return f;
    }
    if (c == '0' || c == '1' || c == 'n') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(start, "unexpected token after constant");
      }
      if (c == '0') return Formula::zero(arity_);
      if (c == '1') return Formula::one(arity_);
      return Formula::neutral(arity_);
    }
    if (c == 'p') {
      ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == digits) throw ParseError(digits, "expected variable index after 'p'");
      if (pos_ - digits > 6) throw ParseError(digits, "variable index too large");
      const int index = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
      if (index < 1) throw ParseError(start, "variable indices start at 1");
      if (index > arity_) {
        throw Error(ErrorKind::Arity, "at position " + std::to_string(start) + ": variable p" +
                                          std::to_string(index) + " index out of range for arity " +
                                          std::to_string(arity_));
      }
      return Formula::var(index, arity_);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int arity_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` as a formula of the given arity. Syntax problems raise
/// ParseError (with position); a variable beyond the arity raises
/// Error(ErrorKind::Arity).
inline Formula parse(std::string_view text, int arity) {
  if (arity < 0) throw Error(ErrorKind::Arity, "negative arity");
  return detail::Parser(text, arity).run();
}

/// Smallest arity that can hold every variable mentioned in `text`.
inline int infer_arity(std::string_view text) {
  return parse(text, 999999).max_var();
}

}  // namespace partialbet

template <>
struct std::hash<partialbet::Formula> {
  std::size_t operator()(const partialbet::Formula& f) const noexcept { return f.hash(); }
};
