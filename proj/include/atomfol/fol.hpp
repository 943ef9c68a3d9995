#pragma once

// First-order rule model, its canonical one-line surface syntax, and the
// quantification post-process.
//
// Surface form of a quantified rule:
//
//   A x y z ( ( person (x) & person (y) & kills (x,z,y) & father (z) ) -> grief (y) )
//   A x z ( ( person (x) & is really (x,z) & sad (z) ) -> E a ( to speak with (x,a) & friend (a) ) )
//
// and of an unquantified one:
//
//   ( person (x) & loves (x,z) & husband (z) ) -> enamored (x)

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "atomfol/error.hpp"

namespace atomfol {

struct Variable {
  std::string name;

  friend bool operator==(const Variable&, const Variable&) = default;
};

namespace vars {
inline const Variable x{"x"};
inline const Variable y{"y"};
inline const Variable z{"z"};
inline const Variable u{"u"};
}  // namespace vars

/// Letters handed out to head objects, in allocation order. x, y, z and u
/// are reserved for the body roles.
inline constexpr std::string_view kFreshLetters = "abcdefghijklmnopqrstvw";

/// The i-th fresh head variable: a, b, ..., w, then a1, b1, ...
inline Variable fresh_variable(std::size_t index) {
  const std::size_t round = index / kFreshLetters.size();
  std::string name(1, kFreshLetters[index % kFreshLetters.size()]);
  if (round > 0) name += std::to_string(round);
  return Variable{name};
}

/// Position of a variable in the canonical quantifier order x, y, z, u, a, b, ...
/// Names outside the pools sort last (ties broken by name).
inline std::size_t variable_rank(const Variable& v) {
  static constexpr std::string_view kBodyPool = "xyzu";
  static constexpr std::size_t kUnknown = static_cast<std::size_t>(-1);
  const std::string& n = v.name;
  if (n.size() == 1 && kBodyPool.find(n[0]) != std::string_view::npos) {
    return kBodyPool.find(n[0]);
  }
  if (n.empty()) return kUnknown;
  const auto letter = kFreshLetters.find(n[0]);
  if (letter == std::string_view::npos) return kUnknown;
  std::size_t round = 0;
  if (n.size() > 1) {
    if (n[1] == '0') return kUnknown;
    for (std::size_t i = 1; i < n.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(n[i]))) return kUnknown;
      round = round * 10 + static_cast<std::size_t>(n[i] - '0');
      if (round > 100000) return kUnknown;
    }
  }
  return kBodyPool.size() + round * kFreshLetters.size() + letter;
}

inline bool canonical_less(const Variable& a, const Variable& b) {
  return std::forward_as_tuple(variable_rank(a), a.name) <
         std::forward_as_tuple(variable_rank(b), b.name);
}

inline void sort_canonical(std::vector<Variable>& vs) {
  std::sort(vs.begin(), vs.end(), canonical_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

/// Lowercase identifier without whitespace or punctuation: [a-z][a-z0-9_]*.
inline bool is_variable_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

/// Predicate words may be anything except the structural tokens of the
/// surface syntax.
inline bool is_predicate_word(std::string_view w) {
  if (w.empty() || w == "->" || w == "&") return false;
  return std::none_of(w.begin(), w.end(), [](char c) {
    return c == '(' || c == ')' || c == '&' || c == ',' ||
           std::isspace(static_cast<unsigned char>(c));
  });
}

struct Atom {
  std::vector<std::string> predicate;
  std::vector<Variable> args;

  std::string predicate_text() const {
    std::string out;
    for (const auto& w : predicate) {
      if (!out.empty()) out += ' ';
      out += w;
    }
    return out;
  }

  bool uses(const Variable& v) const {
    return std::find(args.begin(), args.end(), v) != args.end();
  }

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Rule {
  std::vector<Variable> universal_vars;
  std::vector<Atom> body;
  std::vector<Variable> existential_vars;
  std::vector<Atom> head;
  bool quantified = false;

  friend bool operator==(const Rule&, const Rule&) = default;
};

using FormulaTokens = std::vector<std::string>;

/// Distinct variables of `atoms` in canonical order.
inline std::vector<Variable> variables_of(const std::vector<Atom>& atoms) {
  std::vector<Variable> out;
  for (const auto& a : atoms) out.insert(out.end(), a.args.begin(), a.args.end());
  sort_canonical(out);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace detail {

inline void append_vars(std::string& out, const std::vector<Variable>& vs) {
  for (const auto& v : vs) {
    out += ' ';
    out += v.name;
  }
}

inline void append_atom(std::string& out, const Atom& a) {
  for (const auto& w : a.predicate) {
    out += w;
    out += ' ';
  }
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ',';
    out += a.args[i].name;
  }
  out += ')';
}

inline void append_conjunction(std::string& out, const std::vector<Atom>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i > 0) out += " & ";
    append_atom(out, atoms[i]);
  }
}

}  // namespace detail

inline std::string serialize(const Rule& rule) {
  const bool exists = rule.quantified && !rule.existential_vars.empty();
  const bool wrap_head = exists || rule.head.size() > 1;

  std::string core = "( ";
  detail::append_conjunction(core, rule.body);
  core += " ) -> ";
  if (exists) {
    core += 'E';
    detail::append_vars(core, rule.existential_vars);
    core += ' ';
  }
  if (wrap_head) core += "( ";
  detail::append_conjunction(core, rule.head);
  if (wrap_head) core += " )";

  if (!rule.quantified) return core;

  // A quantified rule with no universal variables keeps its outer parentheses;
  // the parser recognizes the leading "( (" as the quantified form.
  std::string out;
  if (!rule.universal_vars.empty()) {
    out += 'A';
    detail::append_vars(out, rule.universal_vars);
    out += ' ';
  }
  out += "( ";
  out += core;
  out += " )";
  return out;
}

// ---------------------------------------------------------------------------
// Tokenization

struct PositionedToken {
  std::string text;
  std::size_t offset;
};

inline std::vector<PositionedToken> tokenize_with_offsets(std::string_view text) {
  std::vector<PositionedToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back({std::string(text.substr(start, i - start)), start});
  }
  return out;
}

/// Whitespace split. Total: malformed formulas tokenize too.
inline FormulaTokens tokenize(std::string_view text) {
  FormulaTokens out;
  for (auto& t : tokenize_with_offsets(text)) out.push_back(std::move(t.text));
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text)
      : tokens_(tokenize_with_offsets(text)), end_offset_(text.size()) {}

  Rule parse() {
    Rule rule;
    if (is("A")) {
      rule.quantified = true;
      ++pos_;
      rule.universal_vars = variable_list("universal");
      expect("(");
      implication(rule);
      expect(")");
    } else if (is("(") && is("(", 1)) {
      rule.quantified = true;
      ++pos_;
      implication(rule);
      expect(")");
    } else {
      implication(rule);
    }
    if (!at_end()) {
      syntax("unexpected trailing token '" + current().text + "'");
    }
    check_quantifiers(rule);
    return rule;
  }

 private:
  bool at_end(std::size_t ahead = 0) const { return pos_ + ahead >= tokens_.size(); }
  const PositionedToken& current() const { return tokens_[pos_]; }
  bool is(std::string_view t, std::size_t ahead = 0) const {
    return !at_end(ahead) && tokens_[pos_ + ahead].text == t;
  }
  std::size_t offset() const { return at_end() ? end_offset_ : current().offset; }
  std::string describe() const {
    return at_end() ? std::string("end of input") : "'" + current().text + "'";
  }

  [[noreturn]] void syntax(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, offset(), what);
  }

  void expect(std::string_view t) {
    if (!is(t)) syntax("expected '" + std::string(t) + "', found " + describe());
    ++pos_;
  }

  std::vector<Variable> variable_list(const char* which) {
    std::vector<Variable> out;
    while (!at_end() && is_variable_name(current().text)) {
      Variable v{current().text};
      if (std::find(out.begin(), out.end(), v) != out.end()) {
        throw ParseError(ParseError::Kind::Semantic, offset(),
                         "variable '" + v.name + "' quantified twice");
      }
      out.push_back(std::move(v));
      ++pos_;
    }
    if (out.empty()) {
      syntax(std::string("expected ") + which + " variable, found " + describe());
    }
    return out;
  }

  void implication(Rule& rule) {
    expect("(");
    rule.body = conjunction();
    expect(")");
    expect("->");
    head(rule);
  }

  // "E v1 .. vn (" opens an existential block; anything else starting with
  // the word E is a predicate.
  bool existential_ahead() const {
    if (!is("E")) return false;
    std::size_t k = 1;
    while (!at_end(k) && is_variable_name(tokens_[pos_ + k].text)) ++k;
    return k > 1 && is("(", k);
  }

  void head(Rule& rule) {
    if (existential_ahead()) {
      if (!rule.quantified) {
        syntax("existential block in a formula without universal prefix");
      }
      ++pos_;
      rule.existential_vars = variable_list("existential");
      expect("(");
      rule.head = conjunction();
      expect(")");
    } else if (is("(")) {
      ++pos_;
      rule.head = conjunction();
      expect(")");
    } else {
      rule.head = conjunction();
    }
  }

  std::vector<Atom> conjunction() {
    std::vector<Atom> atoms;
    atoms.push_back(atom());
    while (!at_end()) {
      if (is("&")) {
        ++pos_;
        atoms.push_back(atom());
      } else if (is(")") || is("->")) {
        break;
      } else {
        syntax("unknown connective " + describe());
      }
    }
    return atoms;
  }

  static bool is_argument_tuple(std::string_view t) {
    return t.size() > 1 && t.front() == '(';
  }

  Atom atom() {
    Atom a;
    while (!at_end() && !is_argument_tuple(current().text)) {
      const std::string& w = current().text;
      if (!is_predicate_word(w)) {
        if (a.predicate.empty()) syntax("expected predicate, found " + describe());
        syntax("atom '" + a.predicate_text() + "' has no argument list");
      }
      a.predicate.push_back(w);
      ++pos_;
    }
    if (a.predicate.empty()) syntax("expected predicate, found " + describe());
    if (at_end()) syntax("atom '" + a.predicate_text() + "' has no argument list");
    a.args = arguments(current());
    ++pos_;
    return a;
  }

  static std::vector<Variable> arguments(const PositionedToken& tok) {
    const std::string& t = tok.text;
    if (t.back() != ')') {
      throw ParseError(ParseError::Kind::Syntax, tok.offset + t.size(),
                       "unbalanced parentheses in argument list '" + t + "'");
    }
    std::vector<Variable> out;
    std::size_t start = 1;
    while (true) {
      const std::size_t comma = t.find(',', start);
      const std::size_t stop = comma == std::string::npos ? t.size() - 1 : comma;
      const std::string_view arg(t.data() + start, stop - start);
      if (arg.empty()) {
        throw ParseError(ParseError::Kind::Syntax, tok.offset + start,
                         "empty atom argument");
      }
      if (!is_variable_name(arg)) {
        throw ParseError(ParseError::Kind::Syntax, tok.offset + start,
                         "invalid variable '" + std::string(arg) + "'");
      }
      out.push_back(Variable{std::string(arg)});
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (out.size() > 3) {
      throw ParseError(ParseError::Kind::Syntax, tok.offset,
                       "atom arity " + std::to_string(out.size()) + " exceeds 3");
    }
    return out;
  }

  void check_quantifiers(const Rule& rule) const {
    for (const auto& v : rule.universal_vars) {
      if (std::find(rule.existential_vars.begin(), rule.existential_vars.end(), v) !=
          rule.existential_vars.end()) {
        throw ParseError(ParseError::Kind::Semantic, 0,
                         "variable '" + v.name + "' is both universal and existential");
      }
    }
    if (!rule.quantified) return;
    auto bound = [&](const Variable& v) {
      return std::find(rule.universal_vars.begin(), rule.universal_vars.end(), v) !=
                 rule.universal_vars.end() ||
             std::find(rule.existential_vars.begin(), rule.existential_vars.end(), v) !=
                 rule.existential_vars.end();
    };
    for (const auto* atoms : {&rule.body, &rule.head}) {
      for (const auto& a : *atoms) {
        for (const auto& v : a.args) {
          if (!bound(v)) {
            throw ParseError(ParseError::Kind::Semantic, 0,
                             "variable '" + v.name + "' in atom '" + a.predicate_text() +
                                 "' is not quantified");
          }
        }
      }
    }
  }

  std::vector<PositionedToken> tokens_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one formula in the surface syntax. Throws ParseError.
///
/// Accepts any parenthesization of a single-atom head and any quantifier
/// order; serialize() of the result is the canonical rendering.
inline Rule parse(std::string_view text) { return detail::RuleParser(text).parse(); }

// ---------------------------------------------------------------------------
// Quantification

/// Drops both quantifier lists.
inline Rule strip_quantifiers(Rule rule) {
  rule.universal_vars.clear();
  rule.existential_vars.clear();
  rule.quantified = false;
  return rule;
}

/// Universally quantifies every body variable and existentially quantifies
/// every variable found only in the head. Atoms are left untouched.
inline Rule quantify(Rule rule) {
  rule.universal_vars = variables_of(rule.body);
  rule.existential_vars.clear();
  for (const auto& v : variables_of(rule.head)) {
    if (std::find(rule.universal_vars.begin(), rule.universal_vars.end(), v) ==
        rule.universal_vars.end()) {
      rule.existential_vars.push_back(v);
    }
  }
  rule.quantified = true;
  return rule;
}

/// Invariant violations of `rule`; empty when the rule is well formed.
inline std::vector<std::string> validate(const Rule& rule) {
  std::vector<std::string> problems;
  if (rule.body.empty()) problems.emplace_back("empty body");
  if (rule.head.empty()) problems.emplace_back("empty head");
  for (const auto* atoms : {&rule.body, &rule.head}) {
    for (const auto& a : *atoms) {
      if (a.predicate.empty()) problems.emplace_back("atom without predicate");
      for (const auto& w : a.predicate) {
        if (!is_predicate_word(w)) problems.push_back("bad predicate word '" + w + "'");
      }
      if (a.args.empty() || a.args.size() > 3) {
        problems.push_back("atom '" + a.predicate_text() + "' has arity " +
                           std::to_string(a.args.size()));
      }
      for (const auto& v : a.args) {
        if (!is_variable_name(v.name)) problems.push_back("bad variable '" + v.name + "'");
      }
    }
  }
  if (rule.quantified) {
    const Rule expected = quantify(rule);
    if (expected.universal_vars != rule.universal_vars) {
      problems.emplace_back("universal variables differ from body variables");
    }
    if (expected.existential_vars != rule.existential_vars) {
      problems.emplace_back("existential variables differ from head-only variables");
    }
  } else if (!rule.universal_vars.empty() || !rule.existential_vars.empty()) {
    problems.emplace_back("unquantified rule carries quantifier lists");
  }
  return problems;
}

}  // namespace atomfol
