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
  \file synth.hpp
  \brief Dutch Book synthesis against incoherent belief assignments.

  Each synth_* function takes a belief assignment together with the
  formulas of one failed axiom instance and returns a Certificate: the
  exploiting book (quotients read from the assignment), the verdict claimed
  for it, and the verdict detect() actually returned on exhaustive world
  enumeration. A certificate is only returned when the two agree; otherwise
  PreconditionError("verification-failed") is thrown.

  Constructions, with b(a) = (x,y):

    axiom 1     {(a, b(a), (-1,-1))}                      payoff (x-1, y)
    axiom 2     {(a|c, .., s), (a&c, .., s), (a, .., -s), (c, .., -s)}
                s = (1,1) or (-1,-1)                      constant payoff
    axiom 3     {(a, b(a), s1), (!a, b(!a), s2)}          three cases
    axiom 4     {(a, b(a), (0,-1))}                       payoff (0, y)
    equivalence {(a, b(a), s1), (c, b(c), s2)}            constant payoff
*/

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "partialbet/betting.hpp"
#include "partialbet/kleene.hpp"
#include "partialbet/probability.hpp"

namespace partialbet {

/// Stakes (h, k) on a and (hp, kp) on !a for the equal-sum axiom-3 case.
/// Satisfies h*x + hp*z = k*y + kp*w with h < kp and hp < k.
struct StakeQuadruple {
  double h = 0.0;
  double hp = 0.0;
  double k = 0.0;
  double kp = 0.0;
};

/// Solves for stakes given b(a) = (x,y) and b(!a) = (z,w) with
/// x + z = y + w and (y,x) != (z,w).
///
/// Writing k = t + hp and kp = q + h, the balance equation becomes
/// q*w + t*y = h(x - w) + hp(z - y) =: r, and any t, q > 0 on that line
/// works. The unit pair (h,hp) is (1,0) when x > w and (0,1) otherwise,
/// which makes r > 0.
///   y > 0 and w > 0: t = r / (2y), the midpoint of the positive segment,
///                    q = -(y/w) t + r / w.
///   y = 0:           (h,hp) = (0,1), t = 1, q = (z - (t+1) y) / w = z / w.
///   w = 0:           mirror image: (h,hp) = (1,0), q = 1, t = x / y.
inline StakeQuadruple stake_solver(double x, double y, double z, double w) {
  auto in_t = [](double a, double b) {
    return std::isfinite(a) && std::isfinite(b) && a >= -kEpsilon && b >= -kEpsilon &&
           a <= 1 + kEpsilon && b <= 1 + kEpsilon && a + b <= 1 + kEpsilon;
  };
  if (!in_t(x, y) || !in_t(z, w)) {
    throw PreconditionError("not-in-T", "(" + format_number(x) + "," + format_number(y) + "), (" +
                                            format_number(z) + "," + format_number(w) +
                                            ") must both be partial values");
  }
  if (approx_equal(y, z) && approx_equal(x, w)) {
    throw PreconditionError("equal-to-sigma", "(y,x) must differ from (z,w)");
  }
  if (!approx_equal(x + z, y + w)) {
    throw PreconditionError("sum-mismatch", "x + z must equal y + w");
  }

  StakeQuadruple s;
  if (y > 0.0 && w > 0.0) {
    // The two candidate right-hand sides agree when x + z = y + w exactly;
    // take the larger so rounding cannot flip its sign.
    const double r_h = x - w;
    const double r_hp = z - y;
    if (r_h >= r_hp) {
      s.h = 1.0;
      s.hp = 0.0;
    } else {
      s.h = 0.0;
      s.hp = 1.0;
    }
    const double r = s.h * r_h + s.hp * r_hp;
    const double t = 0.5 * r / y;
    const double q = -(y / w) * t + r / w;
    s.k = t + s.hp;
    s.kp = q + s.h;
  } else if (y <= 0.0) {
    s.h = 0.0;
    s.hp = 1.0;
    const double t = 1.0;
    const double q = (z - (t + s.hp) * y) / w;
    s.k = t + s.hp;
    s.kp = q + s.h;
  } else {
    s.h = 1.0;
    s.hp = 0.0;
    const double q = 1.0;
    const double t = (x - (q + s.h) * w) / y;
    s.k = t + s.hp;
    s.kp = q + s.h;
  }
  return s;
}

template <class Payoff>
using PayoffTable = std::vector<PayoffRow<Payoff>>;

template <class BookT>
using payoff_of = decltype(book_payoff(std::declval<const BookT&>(), std::declval<const World&>()));

/// Largest arity whose payoff table is stored in full; above it the table
/// holds an evenly spaced sample.
inline constexpr int kFullTableArity = 4;
inline constexpr std::size_t kSampledRows = 81;

template <class BookT, class ViolationT>
struct Certificate {
  ViolationT violation;
  /// Which construction produced the book, e.g. "axiom3/case3".
  std::string construction;
  BookT book;
  VerdictKind claim = VerdictKind::DutchBook;
  Verdict verdict;
  PayoffTable<payoff_of<BookT>> payoffs;
  bool sampled = false;
  std::vector<std::string> notes;
};

using PartialCertificate = Certificate<PartialBook, Violation>;
using ClassicalCertificate = Certificate<ClassicalBook, ClassicalViolation>;

namespace detail {

template <class BookT>
auto sampled_payoffs(const BookT& book, bool& sampled) {
  auto full = payoff_table(book);
  sampled = book.arity() > kFullTableArity && full.size() > kSampledRows;
  if (!sampled) return full;
  decltype(full) rows;
  rows.reserve(kSampledRows);
  for (std::size_t i = 0; i < kSampledRows; ++i) {
    rows.push_back(full[i * (full.size() - 1) / (kSampledRows - 1)]);
  }
  return rows;
}

template <class Cert>
Cert finish(Cert cert) {
  cert.verdict = detect(cert.book);
  if (!satisfies(cert.verdict.kind, cert.claim)) {
    throw PreconditionError("verification-failed",
                            cert.construction + " book claimed " + to_string(cert.claim) +
                                " but detection returned " + to_string(cert.verdict.kind));
  }
  cert.payoffs = sampled_payoffs(cert.book, cert.sampled);
  return cert;
}

inline PartialValue require_entry(const BeliefAssignment& b, const Formula& f) {
  auto v = b.find(f);
  if (!v) throw PreconditionError("missing-entry", "no belief for '" + f.to_string() + "'");
  return *v;
}

}  // namespace detail

/// 1 |= a and b(a) != (1,0).
inline PartialCertificate synth_axiom1(const Formula& alpha, const BeliefAssignment& b) {
  const Formula one = Formula::one(alpha.arity());
  if (!entails(one, alpha)) {
    throw PreconditionError("not-entailed-by-one", "1 does not entail " + alpha.to_string());
  }
  const PartialValue v = detail::require_entry(b, alpha);
  if (approx_equal(v, PartialValue::top())) {
    throw PreconditionError("no-violation", "b(" + alpha.to_string() + ") = (1,0)");
  }
  PartialCertificate c{Violation{Rule::Axiom1, {alpha}, {v}, true, ""}, "axiom1",
                       PartialBook(alpha.arity()), VerdictKind::DutchBook, {}, {}, false, {}};
  c.book.add({alpha, v, {-1.0, -1.0}});
  return detail::finish(std::move(c));
}

/// b(a) + b(c) and b(a|c) + b(a&c) differ and are comparable.
inline PartialCertificate synth_axiom2(const Formula& alpha, const Formula& beta,
                                       const BeliefAssignment& b) {
  const Formula conj = alpha & beta;
  const Formula disj = alpha | beta;
  const PartialValue va = detail::require_entry(b, alpha);
  const PartialValue vb = detail::require_entry(b, beta);
  const PartialValue vconj = detail::require_entry(b, conj);
  const PartialValue vdisj = detail::require_entry(b, disj);
  const RPair parts = va.pair() + vb.pair();
  const RPair compounds = vdisj.pair() + vconj.pair();
  if (approx_equal(parts, compounds)) {
    throw PreconditionError("no-violation", "additivity holds");
  }
  RPair s;
  std::string which;
  if (pair_less(parts, compounds)) {
    s = {1.0, 1.0};
    which = "axiom2/case1";
  } else if (pair_less(compounds, parts)) {
    s = {-1.0, -1.0};
    which = "axiom2/case2";
  } else {
    throw PreconditionError("incomparable-sides",
                            to_string(parts) + " and " + to_string(compounds) + " are incomparable");
  }
  PartialCertificate c{Violation{Rule::Axiom2, {alpha, beta, conj, disj}, {va, vb, vconj, vdisj}, true, ""},
                       which, PartialBook(alpha.arity()), VerdictKind::DutchBook, {}, {}, false, {}};
  c.book.add({disj, vdisj, s});
  c.book.add({conj, vconj, s});
  c.book.add({alpha, va, -s});
  c.book.add({beta, vb, -s});
  return detail::finish(std::move(c));
}

/// b(!a) != sigma(b(a)).
inline PartialCertificate synth_axiom3(const Formula& alpha, const BeliefAssignment& b) {
  const Formula neg = !alpha;
  const PartialValue va = detail::require_entry(b, alpha);
  const PartialValue vn = detail::require_entry(b, neg);
  if (approx_equal(vn, sigma(va))) {
    throw PreconditionError("no-violation", "b(!a) = sigma(b(a))");
  }
  const double x = va.x(), y = va.y(), z = vn.x(), w = vn.y();
  PartialCertificate c{Violation{Rule::Axiom3, {alpha, neg}, {va, vn}, true, ""}, "",
                       PartialBook(alpha.arity()), VerdictKind::DutchBook, {}, {}, false, {}};
  const double s1 = x + z, s2 = y + w;
  if (s1 < s2 - kEpsilon) {
    c.construction = "axiom3/case1";
    c.book.add({alpha, va, {-1.0, -1.0}});
    c.book.add({neg, vn, {-1.0, -1.0}});
  } else if (s2 < s1 - kEpsilon) {
    c.construction = "axiom3/case2";
    c.book.add({alpha, va, {1.0, 1.0}});
    c.book.add({neg, vn, {1.0, 1.0}});
  } else if (meaning(alpha) == PartialSet::neutral(world_universe(alpha.arity()))) {
    // Neutral at every world: the balanced stakes would put every payoff
    // on the diagonal. Betting only the first coordinate gives
    // (-(x+z), 0) everywhere, a strict loss since x + z > 0.
    c.construction = "axiom3/case3-neutral";
    c.book.add({alpha, va, {1.0, 0.0}});
    c.book.add({neg, vn, {1.0, 0.0}});
    c.notes.push_back("formula is neutral at every world; first-coordinate stakes used");
  } else {
    const StakeQuadruple q = stake_solver(x, y, z, w);
    c.construction = "axiom3/case3";
    c.claim = VerdictKind::WeakDutchBook;
    c.book.add({alpha, va, {q.h, q.k}});
    c.book.add({neg, vn, {q.hp, q.kp}});
    c.notes.push_back("stakes satisfy h*x + h'*z = k*y + k'*w with h < k' and h' < k");
    c.notes.push_back("payoff is on the diagonal where the formula is neutral");
  }
  return detail::finish(std::move(c));
}

/// n |= a and not (0,0) <= b(a).
inline PartialCertificate synth_axiom4(const Formula& alpha, const BeliefAssignment& b) {
  const Formula neutral = Formula::neutral(alpha.arity());
  if (!entails(neutral, alpha)) {
    throw PreconditionError("not-entailed-by-neutral", "n does not entail " + alpha.to_string());
  }
  const PartialValue v = detail::require_entry(b, alpha);
  if (pv_leq(PartialValue::zero(), v)) {
    throw PreconditionError("no-violation", "(0,0) <= b(" + alpha.to_string() + ")");
  }
  PartialCertificate c{Violation{Rule::Axiom4, {alpha}, {v}, true, ""}, "axiom4",
                       PartialBook(alpha.arity()), VerdictKind::DutchBook, {}, {}, false, {}};
  c.book.add({alpha, v, {0.0, -1.0}});
  return detail::finish(std::move(c));
}

/// a and c equivalent, b(a) = (x,y) != (z,w) = b(c).
inline PartialCertificate synth_equivalence(const Formula& alpha, const Formula& beta,
                                            const BeliefAssignment& b) {
  if (!equivalent(alpha, beta)) {
    throw PreconditionError("not-equivalent", alpha.to_string() + " and " + beta.to_string());
  }
  const PartialValue va = detail::require_entry(b, alpha);
  const PartialValue vb = detail::require_entry(b, beta);
  if (approx_equal(va, vb)) throw PreconditionError("equal-values", "b(a) = b(c)");
  const double d1 = vb.x() - va.x();
  const double d2 = vb.y() - va.y();
  RPair sa, sb;
  std::string which;
  if (d1 < d2 - kEpsilon) {
    sa = {1.0, 1.0};
    sb = {-1.0, -1.0};
    which = "equivalence/case1";
  } else if (d2 < d1 - kEpsilon) {
    sa = {-1.0, -1.0};
    sb = {1.0, 1.0};
    which = "equivalence/case2";
  } else if (d1 < 0.0) {
    sa = {1.0, -1.0};
    sb = {-1.0, 1.0};
    which = "equivalence/case3a";
  } else {
    sa = {-1.0, 1.0};
    sb = {1.0, -1.0};
    which = "equivalence/case3b";
  }
  PartialCertificate c{Violation{Rule::Equivalence, {alpha, beta}, {va, vb}, true, ""}, which,
                       PartialBook(alpha.arity()), VerdictKind::DutchBook, {}, {}, false, {}};
  c.book.add({alpha, va, sa});
  c.book.add({beta, vb, sb});
  return detail::finish(std::move(c));
}

/// Classical constructions: sure loss on every classical world.
inline ClassicalCertificate synth_classical(const ClassicalViolation& violation,
                                            const ClassicalBelief& b) {
  auto value = [&](const Formula& f) {
    auto v = b.find(f);
    if (!v) throw PreconditionError("missing-entry", "no belief for '" + f.to_string() + "'");
    return *v;
  };
  auto need = [&](std::size_t n) {
    if (violation.witnesses.size() < n) {
      throw PreconditionError("malformed-violation", "too few witness formulas");
    }
  };
  need(1);
  const int n = violation.witnesses.front().arity();
  ClassicalCertificate c{violation, "", ClassicalBook(n), VerdictKind::DutchBook, {}, {}, false, {}};
  switch (violation.rule) {
    case ClassicalRule::Tautology: {
      const Formula& a = violation.witnesses[0];
      const double x = value(a);
      if (!classically_valid(a)) throw PreconditionError("not-valid", a.to_string() + " is not valid");
      if (x >= 1.0 - kEpsilon) throw PreconditionError("no-violation", "b(a) = 1");
      c.construction = "classical/tautology";
      c.book.add({a, x, -1.0});
      break;
    }
    case ClassicalRule::Contradiction: {
      const Formula& a = violation.witnesses[0];
      const double x = value(a);
      if (!classically_valid(!a)) {
        throw PreconditionError("not-contradictory", a.to_string() + " is satisfiable");
      }
      if (x <= kEpsilon) throw PreconditionError("no-violation", "b(a) = 0");
      c.construction = "classical/contradiction";
      c.book.add({a, x, 1.0});
      break;
    }
    case ClassicalRule::Additivity: {
      need(2);
      const Formula& a = violation.witnesses[0];
      const Formula& d = violation.witnesses[1];
      const Formula disj = a | d, conj = a & d;
      const double x = value(a), y = value(d), z = value(disj), w = value(conj);
      double s;
      if (z + w > x + y + kEpsilon) {
        s = 1.0;
      } else if (z + w < x + y - kEpsilon) {
        s = -1.0;
      } else {
        throw PreconditionError("no-violation", "additivity holds");
      }
      c.construction = "classical/additivity";
      c.book.add({disj, z, s});
      c.book.add({conj, w, s});
      c.book.add({a, x, -s});
      c.book.add({d, y, -s});
      break;
    }
    case ClassicalRule::Equivalence: {
      need(2);
      const Formula& a = violation.witnesses[0];
      const Formula& d = violation.witnesses[1];
      if (!classically_equivalent(a, d)) {
        throw PreconditionError("not-equivalent", a.to_string() + " and " + d.to_string());
      }
      const double x = value(a), y = value(d);
      if (approx_equal(x, y)) throw PreconditionError("equal-values", "b(a) = b(c)");
      const double s = y < x ? 1.0 : -1.0;
      c.construction = "classical/equivalence";
      c.book.add({a, x, s});
      c.book.add({d, y, -s});
      break;
    }
  }
  return detail::finish(std::move(c));
}

struct Unsynthesized {
  Violation violation;
  std::string reason;
};

struct SynthesisResult {
  std::vector<PartialCertificate> certificates;
  std::vector<Unsynthesized> unsynthesized;
};

/// Runs the axiom checker and the equivalence scan, then builds one
/// certificate per synthesizable violation, in the checker's order (axiom,
/// then entry order; equivalences last).
inline SynthesisResult synthesize_all(const BeliefAssignment& b) {
  require_enumerable(b.arity());
  SynthesisResult out;
  std::vector<Violation> todo = check_belief_axioms(b).violations;
  for (auto& v : find_equivalence_violations(b)) todo.push_back(std::move(v));

  for (auto& v : todo) {
    if (!v.synthesizable) {
      out.unsynthesized.push_back({std::move(v), "sides of the additivity identity are incomparable"});
      continue;
    }
    try {
      const auto& w = v.witnesses;
      switch (v.rule) {
        case Rule::Axiom1: out.certificates.push_back(synth_axiom1(w[0], b)); break;
        case Rule::Axiom2: out.certificates.push_back(synth_axiom2(w[0], w[1], b)); break;
        case Rule::Axiom3: out.certificates.push_back(synth_axiom3(w[0], b)); break;
        case Rule::Axiom4: out.certificates.push_back(synth_axiom4(w[0], b)); break;
        case Rule::Equivalence: out.certificates.push_back(synth_equivalence(w[0], w[1], b)); break;
        default: out.unsynthesized.push_back({std::move(v), "no construction for this rule"}); break;
      }
    } catch (const PreconditionError& e) {
      out.unsynthesized.push_back({std::move(v), e.what()});
    }
  }
  return out;
}

}  // namespace partialbet
