#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "atomfol/ingest.hpp"
#include "atomfol/translator.hpp"
#include "support/corpus.hpp"

namespace atomfol {
namespace {

AtomicRecord record(const std::string& event, Dimension dim, const std::string& inference) {
  IngestLog log;
  auto r = make_record("t", event, dim, inference, Tagger{}, log, 1);
  EXPECT_TRUE(r.has_value());
  return *r;
}

std::string translate(const std::string& event, Dimension dim, const std::string& inference,
                      bool quantified = true) {
  return serialize(atomic_to_rule(record(event, dim, inference), quantified));
}

std::string render(const std::vector<Atom>& atoms) {
  std::string out;
  for (const auto& a : atoms) {
    if (!out.empty()) out += " & ";
    out += a.predicate_text() + " (";
    for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? "," : "") + a.args[i].name;
    out += ")";
  }
  return out;
}

std::vector<std::string> names(const std::vector<Variable>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.name);
  return out;
}

TEST(EventToBody, AdverbVerbAndAdjectiveObject) {
  const auto b = event_to_body(pos_tag({"PersonX", "is", "really", "sad"}));
  EXPECT_EQ(render(b.atoms), "person (x) & is really (x,z) & sad (z)");
  EXPECT_EQ(names(b.vars), (std::vector<std::string>{"x", "z"}));
}

TEST(EventToBody, PersonYGivesTernaryVerb) {
  const auto b = event_to_body(pos_tag({"PersonX", "kills", "PersonY", "father"}));
  EXPECT_EQ(render(b.atoms), "person (x) & person (y) & kills (x,z,y) & father (z)");
  EXPECT_EQ(names(b.vars), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(EventToBody, IntransitiveKeepsZ) {
  const auto b = event_to_body(pos_tag({"PersonX", "sleeps"}));
  EXPECT_EQ(render(b.atoms), "person (x) & sleeps (x,z)");
  EXPECT_EQ(names(b.vars), (std::vector<std::string>{"x", "z"}));
}

TEST(EventToBody, DeterminersDroppedFromVerb) {
  const auto b = event_to_body(pos_tag({"PersonX", "paints", "the", "fence"}));
  EXPECT_EQ(render(b.atoms), "person (x) & paints (x,z) & fence (z)");
}

TEST(EventToBody, Failures) {
  auto failure_of = [](std::vector<std::string> w) {
    try {
      event_to_body(pos_tag(w));
    } catch (const TranslationError& e) {
      return std::string(to_string(e.failure()));
    }
    return std::string("ok");
  };
  EXPECT_EQ(failure_of({"PersonX", "PersonY"}), "empty_verb");
  EXPECT_EQ(failure_of({"PersonY", "runs"}), "no_subject");
  EXPECT_EQ(failure_of({"PersonX", "and", "PersonY", "run"}), "multi_subject");
  EXPECT_EQ(failure_of({"PersonX", "loves", "PersonX", "husband"}), "ok");
}

TEST(InferenceToHead, UnaryPersona) {
  const auto body = event_to_body(pos_tag({"PersonX", "loves", "PersonX", "husband"}));
  const auto h = inference_to_head(pos_tag({"enamored"}), body.atoms, Dimension::xAttr);
  EXPECT_EQ(render(h.atoms), "enamored (x)");
  EXPECT_TRUE(h.vars.empty());
}

TEST(InferenceToHead, ObjectGetsFreshVariable) {
  const auto body = event_to_body(pos_tag({"PersonX", "is", "really", "sad"}));
  const auto h = inference_to_head(pos_tag({"to", "speak", "with", "a", "friend"}), body.atoms,
                                   Dimension::xWant);
  EXPECT_EQ(render(h.atoms), "to speak with (x,a) & friend (a)");
  EXPECT_EQ(names(h.vars), (std::vector<std::string>{"a"}));
}

TEST(InferenceToHead, MentalStateOtherSuppressesTarget) {
  const auto body = event_to_body(pos_tag({"PersonX", "kills", "PersonY", "father"}));
  const auto h = inference_to_head(pos_tag({"in", "grief"}), body.atoms, Dimension::oReact);
  EXPECT_EQ(render(h.atoms), "grief (y)");
  EXPECT_TRUE(h.vars.empty());
}

TEST(InferenceToHead, SubjectAndTargetByDimension) {
  // Literal target for a non-mental o-dimension.
  EXPECT_EQ(translate("PersonX calls PersonY", Dimension::oWant, "to answer", false),
            "( person (x) & person (y) & calls (x,z,y) ) -> to answer (y,x)");
  // Implicit other when the event has no PersonY.
  EXPECT_EQ(translate("PersonX sleeps", Dimension::oEffect, "rest", true),
            "A x z ( ( person (x) & sleeps (x,z) ) -> E u ( rest (u,x) ) )");
  // x-dimension with PersonY: target y.
  EXPECT_EQ(translate("PersonX calls PersonY", Dimension::xWant, "to chat", false),
            "( person (x) & person (y) & calls (x,z,y) ) -> to chat (x,y)");
  // Mental-State x-dimension drops the target.
  EXPECT_EQ(translate("PersonX calls PersonY", Dimension::xReact, "glad", false),
            "( person (x) & person (y) & calls (x,z,y) ) -> glad (x)");
}

TEST(InferenceToHead, PronounBecomesIndividual) {
  EXPECT_EQ(translate("PersonX meets PersonY", Dimension::xWant, "to help him", false),
            "( person (x) & person (y) & meets (x,z,y) ) -> to help (x,y)");
  EXPECT_EQ(translate("PersonX meets PersonY", Dimension::oWant, "to pay person x", false),
            "( person (x) & person (y) & meets (x,z,y) ) -> to pay (y,x)");
}

TEST(InferenceToHead, PersonYOnlyInHeadIsAdded) {
  EXPECT_EQ(translate("PersonX sleeps", Dimension::xWant, "to call PersonY", true),
            "A x z ( ( person (x) & sleeps (x,z) ) -> E y ( person (y) & to call (x,y) ) )");
}

TEST(InferenceToHead, ReusesBodyObject) {
  EXPECT_EQ(translate("PersonX buys a car", Dimension::xWant, "to drive the car", true),
            "A x z ( ( person (x) & buys (x,z) & car (z) ) -> to drive (x,z) )");
  EXPECT_EQ(translate("PersonX buys a car", Dimension::xWant, "to drive the CAR", true),
            "A x z ( ( person (x) & buys (x,z) & car (z) ) -> to drive (x,z) )");
}

TEST(InferenceToHead, PortraitAndPaintingStayApart) {
  EXPECT_EQ(translate("PersonX paints PersonX's portrait", Dimension::xWant,
                      "to hang the painting"),
            "A x z ( ( person (x) & paints (x,z) & portrait (z) ) -> E a ( to hang (x,a) & "
            "painting (a) ) )");
}

TEST(InferenceToHead, SeveralObjects) {
  EXPECT_EQ(translate("PersonX sleeps", Dimension::xWant, "to buy the car and the house", false),
            "( person (x) & sleeps (x,z) ) -> ( to buy (x,a) & car (a) & to buy (x,b) & "
            "house (b) )");
}

TEST(InferenceToHead, Failures) {
  const auto body = event_to_body(pos_tag({"PersonX", "sleeps"}));
  try {
    inference_to_head(pos_tag({"to", "run", "or", "hide"}), body.atoms, Dimension::xWant);
    FAIL();
  } catch (const TranslationError& e) {
    EXPECT_EQ(e.failure(), TranslationFailure::Disjunction);
  }
  try {
    inference_to_head(pos_tag({"PersonY"}), body.atoms, Dimension::xWant);
    FAIL();
  } catch (const TranslationError& e) {
    EXPECT_EQ(e.failure(), TranslationFailure::EmptyVerb);
  }
}

TEST(AtomicToRule, GoldExamples) {
  EXPECT_EQ(translate("PersonX kills PersonY's father", Dimension::oReact, "in grief"),
            "A x y z ( ( person (x) & person (y) & kills (x,z,y) & father (z) ) -> grief (y) )");
  EXPECT_EQ(translate("PersonX loves PersonX's husband", Dimension::xAttr, "enamored"),
            "A x z ( ( person (x) & loves (x,z) & husband (z) ) -> enamored (x) )");
  EXPECT_EQ(translate("PersonX loves PersonX's husband", Dimension::xAttr, "enamored", false),
            "( person (x) & loves (x,z) & husband (z) ) -> enamored (x)");
  EXPECT_EQ(translate("PersonX is really sad", Dimension::xWant, "to speak with a friend"),
            "A x z ( ( person (x) & is really (x,z) & sad (z) ) -> E a ( to speak with (x,a) & "
            "friend (a) ) )");
}

TEST(Property, SyntheticCorpusInvariants) {
  const auto corpus = testing::make_corpus(3000, 5);
  std::istringstream in(corpus.tsv);
  IngestLog log;
  const auto records = filter_personz(read_tsv(in, Tagger{}, log)).kept;
  std::size_t translated = 0;
  for (const auto& r : records) {
    Rule q;
    try {
      q = atomic_to_rule(r, true);
    } catch (const TranslationError&) {
      continue;
    }
    ++translated;
    const Rule plain = atomic_to_rule(r, false);
    EXPECT_EQ(quantify(strip_quantifiers(q)), q);
    EXPECT_EQ(strip_quantifiers(q), plain);
    EXPECT_TRUE(validate(q).empty());
    EXPECT_EQ(atomic_to_rule(r, true), q);

    const bool event_y = has_word(r.event, kPersonY);
    EXPECT_EQ(q.body.front(), (Atom{{"person"}, {vars::x}}));
    const bool body_y = std::count(q.body.begin(), q.body.end(), Atom{{"person"}, {vars::y}}) > 0;
    EXPECT_EQ(body_y, event_y);
    // The first non-person body atom is the verb.
    const auto verb = std::find_if(q.body.begin(), q.body.end(),
                                   [](const Atom& a) { return a.predicate_text() != "person"; });
    ASSERT_NE(verb, q.body.end());
    EXPECT_EQ(verb->args.size(), event_y ? 3u : 2u);
    for (std::size_t i = 0; i < q.existential_vars.size(); ++i) {
      const auto& v = q.existential_vars[i];
      if (v == vars::u || v == vars::y) continue;
      const bool used = std::any_of(q.head.begin(), q.head.end(),
                                    [&](const Atom& a) { return a.uses(v); });
      EXPECT_TRUE(used) << v.name;
    }
    std::vector<Variable> fresh;
    for (const auto& v : q.existential_vars) {
      if (v != vars::u && v != vars::y && v != vars::x) fresh.push_back(v);
    }
    for (std::size_t i = 0; i < fresh.size(); ++i) EXPECT_EQ(fresh[i], fresh_variable(i));
  }
  EXPECT_GT(translated, 2000u);
}

}  // namespace
}  // namespace atomfol
