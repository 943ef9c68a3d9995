#pragma once

// Synthetic Atomic-like corpus for property and throughput tests. Events and
// inferences are assembled from small word lists so the builtin tagger sees
// the same shapes as real Atomic text: possessive individuals, determiners,
// adverbs, multiword verbs, pronouns, "person x" spellings, disjunctions and
// the occasional PersonZ event.

#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace atomfol::testing {

struct SyntheticCorpus {
  std::string tsv;
  std::size_t records = 0;
  std::size_t personz = 0;
};

namespace corpus_detail {

inline constexpr std::array<std::string_view, 12> kVerbs = {
    "kills", "loves", "paints", "helps", "buys", "sees",
    "finds", "calls", "takes", "visits", "hugs", "meets"};
inline constexpr std::array<std::string_view, 12> kNouns = {
    "father", "husband", "friend", "car",     "house",  "book",
    "dog",    "gift",    "portrait", "garden", "letter", "cake"};
inline constexpr std::array<std::string_view, 8> kAdjectives = {
    "sad", "happy", "angry", "lonely", "nervous", "careful", "busy", "generous"};
inline constexpr std::array<std::string_view, 6> kInfVerbs = {
    "to speak with", "to buy", "to hang", "to thank", "to visit", "to find"};
inline constexpr std::array<std::string_view, 6> kReactions = {
    "in grief", "happy", "grateful", "enamored", "upset", "relieved"};

}  // namespace corpus_detail

/// `n` TSV lines (event, dimension, inference), fully determined by `seed`.
inline SyntheticCorpus make_corpus(std::size_t n, std::uint64_t seed) {
  using namespace corpus_detail;
  std::mt19937_64 rng(seed);
  auto pick = [&](const auto& list) -> std::string {
    return std::string(list[rng() % list.size()]);
  };
  auto chance = [&](unsigned percent) { return rng() % 100 < percent; };

  static constexpr std::array<std::string_view, 9> kDims = {
      "xIntent", "xReact", "xNeed", "xWant", "xEffect", "xAttr", "oReact", "oWant", "oEffect"};

  SyntheticCorpus c;
  std::ostringstream out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string event;
    bool has_y = false;
    const bool personz = chance(2);
    switch (rng() % 6) {
      case 0:
        event = "PersonX " + pick(kVerbs) + " PersonY's " + pick(kNouns);
        has_y = true;
        break;
      case 1: event = "PersonX " + pick(kVerbs) + " the " + pick(kNouns); break;
      case 2: event = "PersonX is really " + pick(kAdjectives); break;
      case 3:
        event = "PersonX " + pick(kVerbs) + " PersonY";
        has_y = true;
        break;
      case 4: event = "PersonX " + pick(kVerbs) + " PersonX's " + pick(kNouns); break;
      default: event = "PersonX " + pick(kVerbs) + " a " + pick(kAdjectives) + " " + pick(kNouns);
    }
    if (personz) event += " with PersonZ";

    const std::string dim(kDims[rng() % kDims.size()]);
    std::string inference;
    switch (rng() % 7) {
      case 0: inference = pick(kReactions); break;
      case 1: inference = pick(kInfVerbs) + " a " + pick(kNouns); break;
      case 2: inference = pick(kInfVerbs) + " the " + pick(kNouns) + " and the " + pick(kNouns); break;
      case 3: inference = has_y ? "to help him" : "to help person x"; break;
      case 4: inference = pick(kInfVerbs) + " " + pick(kNouns) + " or " + pick(kNouns); break;
      case 5: inference = "gets a " + pick(kAdjectives) + " " + pick(kNouns); break;
      default: inference = "to thank X for the " + pick(kNouns);
    }
    out << event << '\t' << dim << '\t' << inference << '\n';
    ++c.records;
    if (personz) ++c.personz;
  }
  c.tsv = out.str();
  return c;
}

}  // namespace atomfol::testing
