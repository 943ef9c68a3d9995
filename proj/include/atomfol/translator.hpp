#pragma once

// Translation of one Atomic record into a first-order rule.
//
// The event becomes the body: person atoms for the individuals, a verb atom
// v(x,z[,y]) and, when the event continues past the verb, an object atom
// o(z). The inference becomes the head: a verb atom over the dimension's
// subject (and target, when there is one), plus one atom per object phrase
// bound to a fresh variable a, b, c, ...

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomfol/dimension.hpp"
#include "atomfol/error.hpp"
#include "atomfol/fol.hpp"
#include "atomfol/ingest.hpp"

namespace atomfol {

enum class TranslationFailure { NoSubject, MultiSubject, EmptyVerb, Disjunction };

inline constexpr std::string_view to_string(TranslationFailure f) {
  switch (f) {
    case TranslationFailure::NoSubject: return "no_subject";
    case TranslationFailure::MultiSubject: return "multi_subject";
    case TranslationFailure::EmptyVerb: return "empty_verb";
    case TranslationFailure::Disjunction: return "disjunction";
  }
  return "";
}

class TranslationError : public Error {
 public:
  TranslationError(TranslationFailure failure, const std::string& what)
      : Error(std::string(to_string(failure)) + ": " + what), failure_(failure) {}

  TranslationFailure failure() const noexcept { return failure_; }

 private:
  TranslationFailure failure_;
};

struct Conjunction {
  std::vector<Atom> atoms;
  std::vector<Variable> vars;
};

inline const std::string kPersonPredicate = "person";

namespace detail {

inline bool tag_in(std::string_view tag, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), tag) != set.end();
}

inline Atom make_atom(const std::vector<std::string>& words, std::vector<Variable> args) {
  return Atom{words, std::move(args)};
}

inline Atom person(const Variable& v) { return Atom{{kPersonPredicate}, {v}}; }

inline bool mentions_y(const std::vector<Atom>& atoms) {
  return std::any_of(atoms.begin(), atoms.end(),
                     [](const Atom& a) { return a.uses(vars::y); });
}

/// The body's object atom o(z), if the event had an object.
inline const Atom* body_object(const std::vector<Atom>& body) {
  for (const auto& a : body) {
    if (a.args.size() == 1 && a.args[0] == vars::z) return &a;
  }
  return nullptr;
}

inline std::string joined_lower(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += to_lower(w);
  }
  return out;
}

}  // namespace detail

/// Builds the rule body from a tagged event.
///
/// Individuals are removed and become person(x) / person(y). The remaining
/// words form the verb until a JJ/NN/NNS word appears after at least one
/// verb word; that word and everything after it form the object. Determiners
/// inside the verb phrase are dropped.
inline Conjunction event_to_body(std::span<const TaggedToken> event) {
  const bool has_x = std::any_of(event.begin(), event.end(),
                                 [](const TaggedToken& t) { return t.word == kPersonX; });
  if (!has_x) throw TranslationError(TranslationFailure::NoSubject, "event has no PersonX");

  // A conjoined subject ("PersonX and PersonY ...") is not a single actor.
  std::size_t lead_individuals = 0;
  bool conjoined = false;
  for (const auto& t : event) {
    if (t.tag == kIndTag) {
      ++lead_individuals;
    } else if (t.tag == "CC") {
      conjoined = true;
    } else {
      break;
    }
  }
  if (conjoined && lead_individuals > 1) {
    throw TranslationError(TranslationFailure::MultiSubject, "event has a conjoined subject");
  }

  const bool has_y = std::any_of(event.begin(), event.end(),
                                 [](const TaggedToken& t) { return t.word == kPersonY; });
  Conjunction body;
  body.atoms.push_back(detail::person(vars::x));
  if (has_y) body.atoms.push_back(detail::person(vars::y));
  body.vars = {vars::x, vars::z};
  if (has_y) body.vars.push_back(vars::y);

  std::vector<std::string> verb;
  std::vector<std::string> object;
  bool verb_finished = false;
  for (const auto& t : event) {
    if (t.tag == kIndTag) continue;
    if (!verb.empty() && detail::tag_in(t.tag, {"JJ", "NN", "NNS"})) verb_finished = true;
    if (verb_finished) {
      object.push_back(t.word);
    } else if (t.tag != "DT") {
      verb.push_back(t.word);
    }
  }
  if (verb.empty()) {
    throw TranslationError(TranslationFailure::EmptyVerb, "event has no verb phrase");
  }
  if (has_y) {
    body.atoms.push_back(detail::make_atom(verb, {vars::x, vars::z, vars::y}));
  } else {
    body.atoms.push_back(detail::make_atom(verb, {vars::x, vars::z}));
  }
  if (!object.empty()) body.atoms.push_back(detail::make_atom(object, {vars::z}));
  sort_canonical(body.vars);
  return body;
}

/// Builds the rule head from a tagged inference, given the body it follows.
///
/// Leading prepositions are dropped ("in grief" -> grief). The verb runs up
/// to the first CC/DT/PRP/PRP$ word; every later such word closes the
/// current object phrase. Separator words are not kept. The head verb takes
/// the dimension's subject and, unless the dimension is a mental state, its
/// target; a single object equal to the body's object reuses z.
inline Conjunction inference_to_head(std::span<const TaggedToken> inference,
                                     const std::vector<Atom>& body, Dimension dimension) {
  for (const auto& t : inference) {
    if (t.tag == "CC" && iequals(t.word, "or")) {
      throw TranslationError(TranslationFailure::Disjunction,
                             "inference is a disjunction: " + words_text({inference.begin(),
                                                                          inference.end()}));
    }
  }

  Conjunction head;
  const bool body_has_x = std::any_of(body.begin(), body.end(),
                                      [](const Atom& a) { return a.uses(vars::x); });
  const bool body_has_y = detail::mentions_y(body);
  bool head_has_x = false;
  bool head_has_y = false;

  std::vector<TaggedToken> rest;
  for (const auto& t : inference) {
    if (t.word == kPersonX) {
      if (!body_has_x && !head_has_x) {
        head.atoms.push_back(detail::person(vars::x));
        head.vars.push_back(vars::x);
      }
      head_has_x = true;
    } else if (t.word == kPersonY) {
      if (!body_has_y && !head_has_y) {
        head.atoms.push_back(detail::person(vars::y));
        head.vars.push_back(vars::y);
      }
      head_has_y = true;
    } else {
      rest.push_back(t);
    }
  }
  auto first = std::find_if(rest.begin(), rest.end(),
                            [](const TaggedToken& t) { return t.tag != "IN"; });
  rest.erase(rest.begin(), first);

  std::vector<std::string> verb;
  std::vector<std::string> current;
  std::vector<std::vector<std::string>> objects;
  bool verb_finished = false;
  for (const auto& t : rest) {
    if (!verb.empty() && detail::tag_in(t.tag, {"CC", "DT", "PRP", "PRP$"})) {
      if (verb_finished) {
        if (!current.empty()) objects.push_back(std::move(current));
        current.clear();
      } else {
        verb_finished = true;
      }
      continue;
    }
    (verb_finished ? current : verb).push_back(t.word);
  }
  if (!current.empty()) objects.push_back(std::move(current));
  if (verb.empty()) {
    throw TranslationError(TranslationFailure::EmptyVerb, "inference has no verb phrase");
  }

  const bool y_present = body_has_y || head_has_y;
  const bool mental = category_of(dimension) == Category::MentalState;
  Variable subject;
  std::optional<Variable> target;
  if (about_person_x(dimension)) {
    subject = vars::x;
    if (y_present && !mental) target = vars::y;
  } else {
    subject = y_present ? vars::y : vars::u;
    if (!mental) target = vars::x;
  }
  if (subject == vars::u) head.vars.push_back(vars::u);

  auto verb_args = [&](std::optional<Variable> object) {
    std::vector<Variable> args{subject};
    if (object) args.push_back(*object);
    if (target) args.push_back(*target);
    return args;
  };

  const Atom* body_obj = detail::body_object(body);
  if (objects.empty()) {
    head.atoms.push_back(detail::make_atom(verb, verb_args(std::nullopt)));
  } else if (objects.size() == 1 && body_obj &&
             detail::joined_lower(objects[0]) == detail::joined_lower(body_obj->predicate)) {
    head.atoms.push_back(detail::make_atom(verb, verb_args(vars::z)));
  } else {
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const Variable var = fresh_variable(i);
      head.atoms.push_back(detail::make_atom(verb, verb_args(var)));
      head.atoms.push_back(detail::make_atom(objects[i], {var}));
      head.vars.push_back(var);
    }
  }
  sort_canonical(head.vars);
  return head;
}

/// Translates a record into a rule; with `add_quantifiers` the body
/// variables are universally and the head variables existentially bound.
inline Rule atomic_to_rule(const AtomicRecord& record, bool add_quantifiers) {
  Conjunction body = event_to_body(record.event);
  Conjunction head = inference_to_head(record.inference, body.atoms, record.dimension);
  Rule rule;
  rule.body = std::move(body.atoms);
  rule.head = std::move(head.atoms);
  if (add_quantifiers) {
    rule.quantified = true;
    rule.universal_vars = std::move(body.vars);
    rule.existential_vars = std::move(head.vars);
  }
  return rule;
}

}  // namespace atomfol
