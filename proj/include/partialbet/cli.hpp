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
  \file cli.hpp
  \brief The `pbook` command line, callable in-process.

  Exit codes: 0 success (coherent, verified, entailment holds), 1 violation
  found (incoherent beliefs, Dutch Book, entailment or equivalence fails),
  2 input error.
*/

#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partialbet/io.hpp"
#include "partialbet/kleene.hpp"
#include "partialbet/synth.hpp"
#include "partialbet/verify.hpp"

namespace partialbet {

namespace cli {

enum Exit : int { kOk = 0, kViolation = 1, kInputError = 2 };

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::optional<int> arity;
  std::size_t iterations = 200;
  std::string suite;
};

inline int arity_for(const Options& o, std::initializer_list<std::string_view> formulas) {
  if (o.arity) return *o.arity;
  int n = 0;
  for (auto f : formulas) n = std::max(n, infer_arity(f));
  return n;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline std::string join_formulas(const std::vector<Formula>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) s += (i ? ", " : "") + fs[i].to_string();
  return s;
}

inline std::string join_values(const std::vector<PartialValue>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s;
}

inline void print_violation(std::ostream& out, const Violation& v) {
  out << "  " << to_string(v.rule) << ": " << join_formulas(v.witnesses) << " = "
      << join_values(v.observed);
  if (!v.detail.empty()) out << "  (" << v.detail << ")";
  out << '\n';
}

inline void print_book(std::ostream& out, const PartialBook& book) {
  for (const auto& b : book.bets()) {
    out << "    bet " << b.formula << "  quotient " << b.quotient << "  stake " << b.stake << '\n';
  }
}

inline void print_book(std::ostream& out, const ClassicalBook& book) {
  for (const auto& b : book.bets()) {
    out << "    bet " << b.formula << "  quotient " << format_number(b.quotient) << "  stake "
        << format_number(b.stake) << '\n';
  }
}

inline std::string payoff_text(const RPair& p) { return to_string(p); }
inline std::string payoff_text(double p) { return format_number(p); }

template <class Rows>
void print_payoffs(std::ostream& out, const Rows& rows) {
  for (const auto& row : rows) {
    out << "    " << std::setw(6) << std::left << (row.world.arity() ? row.world.to_string() : "-")
        << std::right << ' ' << payoff_text(row.payoff) << "  " << to_string(classify(row.payoff)) << '\n';
  }
}

inline std::string verdict_text(const Verdict& v) {
  std::string s = to_string(v.kind);
  if (v.empty_book) s += " (empty book)";
  if (v.witness) s += " witness " + v.witness->to_string();
  return s;
}

// -- commands ------------------------------------------------------------------

inline int cmd_eval(const Options& o, const std::string& text, const std::string& world_text,
                    std::ostream& out) {
  const World w = World::parse(world_text);
  const int n = o.arity.value_or(w.arity());
  const Formula f = parse(text, n);
  const TruthValue t = eval(f, w);
  if (o.json) {
    emit(out, {{"formula", f.to_string()}, {"world", w.to_string()}, {"value", std::string(1, to_char(t))},
               {"pair", to_json(pair(t))}});
  } else {
    out << to_char(t) << ' ' << pair(t) << '\n';
  }
  return kOk;
}

inline int cmd_table(const Options& o, const std::string& text, std::ostream& out) {
  const Formula f = parse(text, arity_for(o, {text}));
  require_enumerable(f.arity());
  json rows = json::object();
  if (!o.json) out << "world  " << f << '\n';
  for_each_world(f.arity(), [&](const World& w, std::size_t) {
    const TruthValue t = eval(f, w);
    if (o.json) {
      rows[w.to_string()] = std::string(1, to_char(t));
    } else {
      out << std::setw(5) << std::left << (f.arity() ? w.to_string() : "-") << "  " << to_char(t) << '\n';
    }
  });
  if (o.json) emit(out, {{"formula", f.to_string()}, {"arity", f.arity()}, {"table", std::move(rows)}});
  return kOk;
}

inline json world_list(const PartialSet& s, const Bits& bits) {
  json arr = json::array();
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) arr.push_back(s.universe()->label(i));
  return arr;
}

inline int cmd_meaning(const Options& o, const std::string& text, std::ostream& out) {
  const Formula f = parse(text, arity_for(o, {text}));
  const PartialSet m = meaning(f);
  if (o.json) {
    emit(out, {{"formula", f.to_string()}, {"arity", f.arity()}, {"pos", world_list(m, m.pos())},
               {"neg", world_list(m, m.neg())}});
  } else {
    out << m.to_string() << '\n';
  }
  return kOk;
}

inline int cmd_entails(const Options& o, const std::vector<std::string>& texts, std::ostream& out) {
  int n = o.arity.value_or(0);
  if (!o.arity) {
    for (const auto& t : texts) n = std::max(n, infer_arity(t));
  }
  std::vector<Formula> premises;
  for (std::size_t i = 0; i + 1 < texts.size(); ++i) premises.push_back(parse(texts[i], n));
  const Formula conclusion = parse(texts.back(), n);
  const bool holds = entails(premises, conclusion);
  if (o.json) {
    json ps = json::array();
    for (const auto& p : premises) ps.push_back(p.to_string());
    emit(out, {{"premises", std::move(ps)}, {"conclusion", conclusion.to_string()}, {"entails", holds}});
  } else {
    out << (holds ? "true" : "false") << '\n';
  }
  return holds ? kOk : kViolation;
}

inline int cmd_equiv(const Options& o, const std::string& a, const std::string& b, std::ostream& out) {
  const int n = arity_for(o, {a, b});
  const Formula fa = parse(a, n), fb = parse(b, n);
  const bool same = equivalent(fa, fb);
  if (o.json) {
    emit(out, {{"a", fa.to_string()}, {"b", fb.to_string()}, {"equivalent", same}});
  } else {
    out << (same ? "true" : "false") << '\n';
  }
  return same ? kOk : kViolation;
}

inline int cmd_check(const Options& o, const std::string& path, std::ostream& out) {
  const BeliefAssignment b = belief_from_json(load_json_file(path));
  CheckReport report = check_belief_axioms(b);
  // Derived properties only follow from the axioms, so they are checked on
  // assignments that pass them.
  if (report.violations.empty()) {
    CheckReport derived = check_derived_properties(b);
    for (auto& v : derived.violations) report.violations.push_back(std::move(v));
  }
  for (auto& v : find_equivalence_violations(b)) report.violations.push_back(std::move(v));
  if (o.json) {
    json j = to_json(report);
    j["coherent"] = report.violations.empty();
    emit(out, j);
  } else {
    out << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations) print_violation(out, v);
    if (!report.unchecked.empty()) {
      out << "unchecked: " << report.unchecked.size() << '\n';
      for (const auto& u : report.unchecked) {
        out << "  " << to_string(u.rule) << ": " << u.entry << " (missing " << u.missing << ")\n";
      }
    }
  }
  return report.violations.empty() ? kOk : kViolation;
}

inline int cmd_synth(const Options& o, const std::string& path, std::ostream& out) {
  const BeliefAssignment b = belief_from_json(load_json_file(path));
  const SynthesisResult r = synthesize_all(b);
  if (o.json) {
    emit(out, to_json(r));
  } else {
    out << "certificates: " << r.certificates.size() << '\n';
    for (const auto& c : r.certificates) {
      out << "  " << c.construction << "  claim " << to_string(c.claim) << "  verdict "
          << verdict_text(c.verdict) << '\n';
      print_violation(out, c.violation);
      print_book(out, c.book);
      if (c.sampled) out << "    (payoffs sampled)\n";
      print_payoffs(out, c.payoffs);
      for (const auto& note : c.notes) out << "    note: " << note << '\n';
    }
    if (!r.unsynthesized.empty()) {
      out << "unsynthesized: " << r.unsynthesized.size() << '\n';
      for (const auto& u : r.unsynthesized) {
        print_violation(out, u.violation);
        out << "    reason: " << u.reason << '\n';
      }
    }
  }
  return r.certificates.empty() && r.unsynthesized.empty() ? kOk : kViolation;
}

inline int cmd_detect(const Options& o, const std::string& path, std::ostream& out) {
  const AnyBook any = book_from_json(load_json_file(path));
  return std::visit(
      [&](const auto& book) {
        const Verdict v = detect(book);
        const auto rows = payoff_table(book);
        if (o.json) {
          json table = json::object();
          for (const auto& row : rows) {
            if constexpr (std::is_same_v<std::decay_t<decltype(row.payoff)>, double>) {
              table[row.world.to_string()] = row.payoff;
            } else {
              table[row.world.to_string()] = to_json(row.payoff);
            }
          }
          emit(out, {{"book", to_json(book)}, {"verdict", to_json(v)}, {"payoff_table", std::move(table)}});
        } else {
          out << verdict_text(v) << '\n';
          print_payoffs(out, rows);
        }
        return v.kind == VerdictKind::Neither ? kOk : kViolation;
      },
      any);
}

inline int cmd_payoff(const Options& o, const std::string& path, const std::string& world_text,
                      std::ostream& out) {
  const AnyBook any = book_from_json(load_json_file(path));
  const World w = World::parse(world_text);
  return std::visit(
      [&](const auto& book) {
        const auto p = book_payoff(book, w);
        if (o.json) {
          json value;
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, double>) {
            value = p;
          } else {
            value = to_json(p);
          }
          emit(out, {{"world", w.to_string()}, {"payoff", value}, {"region", to_string(classify(p))}});
        } else {
          out << payoff_text(p) << ' ' << to_string(classify(p)) << '\n';
        }
        return kOk;
      },
      any);
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.arity = o.arity.value_or(2);
  v.seed = o.seed;
  v.iterations = o.iterations;
  const auto results = run_suites(v, o.suite);
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    all = all && r.ok();
    if (o.json) {
      json notes = json::array();
      for (const auto& n : r.notes) notes.push_back(n);
      arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed},
                     {"skipped", r.skipped}, {"notes", std::move(notes)}});
    } else {
      out << std::setw(13) << std::left << r.name << std::right;
      if (r.skipped) {
        out << "skipped\n";
      } else {
        out << (r.ok() ? "PASS" : "FAIL") << "  passed " << r.passed << "  failed " << r.failed << '\n';
      }
      for (const auto& n : r.notes) out << "  " << n << '\n';
    }
  }
  if (o.json) {
    emit(out, {{"arity", v.arity}, {"seed", v.seed}, {"iterations", v.iterations}, {"suites", std::move(arr)},
               {"ok", all}});
  }
  return all ? kOk : kViolation;
}

inline int cmd_dnf(const Options& o, const std::vector<std::string>& world_texts, std::ostream& out) {
  std::vector<World> worlds;
  for (const auto& t : world_texts) worlds.push_back(World::parse(t));
  if (!o.arity && worlds.empty()) throw Error(ErrorKind::Input, "dnf needs --arity when no worlds are given");
  const int n = o.arity.value_or(worlds.empty() ? 0 : worlds.front().arity());
  require_enumerable(n);
  const Formula f = dnf_formula_for(worlds, n);
  if (o.json) {
    emit(out, {{"arity", n}, {"formula", f.to_string()}});
  } else {
    out << f << '\n';
  }
  return kOk;
}

}  // namespace cli

/// Runs the command line with `args` (program name excluded).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  cli::Options o;
  CLI::App app{"Partial probability, Kleene logic and Dutch Book toolkit", "pbook"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Print JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for randomized suites")->capture_default_str();
  app.add_option("--arity", o.arity, "Number of variables (inferred from the input when absent)");
  app.add_option("--iterations", o.iterations, "Cases per randomized suite")->capture_default_str();
  app.add_option("--suite", o.suite, "Run a single verify suite");

  std::string formula, formula2, world, file;
  std::vector<std::string> many;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula at a world");
  eval_cmd->add_option("formula", formula)->required();
  eval_cmd->add_option("world", world, "World string such as TNF")->required();

  auto* table_cmd = app.add_subcommand("table", "Print the truth table of a formula");
  table_cmd->add_option("formula", formula)->required();

  auto* meaning_cmd = app.add_subcommand("meaning", "Print the positive and negative models");
  meaning_cmd->add_option("formula", formula)->required();

  auto* entails_cmd = app.add_subcommand("entails", "Check premises... |= conclusion (last argument)");
  entails_cmd->add_option("formulas", many)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Check equivalence of two formulas");
  equiv_cmd->add_option("a", formula)->required();
  equiv_cmd->add_option("b", formula2)->required();

  auto* check_cmd = app.add_subcommand("check", "Check a belief file against the axioms");
  check_cmd->add_option("file", file)->required();

  auto* synth_cmd = app.add_subcommand("synth", "Synthesize Dutch Book certificates for a belief file");
  synth_cmd->add_option("file", file)->required();

  auto* detect_cmd = app.add_subcommand("detect", "Classify a book file");
  detect_cmd->add_option("file", file)->required();

  auto* payoff_cmd = app.add_subcommand("payoff", "Payoff of a book file at one world");
  payoff_cmd->add_option("file", file)->required();
  payoff_cmd->add_option("world", world)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in verification suites");

  auto* dnf_cmd = app.add_subcommand("dnf", "Classical formula with the given classical models");
  dnf_cmd->add_option("worlds", many);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return cli::kInputError;
  }

  try {
    if (eval_cmd->parsed()) return cli::cmd_eval(o, formula, world, out);
    if (table_cmd->parsed()) return cli::cmd_table(o, formula, out);
    if (meaning_cmd->parsed()) return cli::cmd_meaning(o, formula, out);
    if (entails_cmd->parsed()) return cli::cmd_entails(o, many, out);
    if (equiv_cmd->parsed()) return cli::cmd_equiv(o, formula, formula2, out);
    if (check_cmd->parsed()) return cli::cmd_check(o, file, out);
    if (synth_cmd->parsed()) return cli::cmd_synth(o, file, out);
    if (detect_cmd->parsed()) return cli::cmd_detect(o, file, out);
    if (payoff_cmd->parsed()) return cli::cmd_payoff(o, file, world, out);
    if (verify_cmd->parsed()) return cli::cmd_verify(o, out);
    if (dnf_cmd->parsed()) return cli::cmd_dnf(o, many, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kInputError;
}

}  // namespace partialbet
