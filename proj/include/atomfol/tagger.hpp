#pragma once

// Lexicon-plus-suffix POS tagger. Deliberately small: the rule extraction
// only distinguishes IND, the object triggers (JJ/NN/NNS) and the head
// separators (CC/DT/PRP/PRP$), so a coarse tagger is enough. Inputs that
// need a real tagger can be fed pre-tagged instead.

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "atomfol/error.hpp"
#include "atomfol/normalize.hpp"

namespace atomfol {

inline constexpr std::string_view kIndTag = "IND";

struct TaggedToken {
  std::string word;
  std::string tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

class Tagger {
 public:
  using Lexicon = std::unordered_map<std::string, std::string>;

  Tagger() = default;
  explicit Tagger(Lexicon overrides) : overrides_(std::move(overrides)) {}

  /// Reads `word<TAB>TAG` lines. Blank lines and lines starting with '#'
  /// are ignored.
  static Lexicon read_lexicon(std::istream& in) {
    Lexicon lex;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
        throw InputError("lexicon line " + std::to_string(lineno) +
                         ": expected word<TAB>TAG");
      }
      lex[to_lower(line.substr(0, tab))] = line.substr(tab + 1);
    }
    return lex;
  }

  std::vector<TaggedToken> tag(const std::vector<std::string>& words) const {
    std::vector<TaggedToken> out;
    out.reserve(words.size());
    for (const auto& w : words) {
      const std::string_view prev = out.empty() ? std::string_view{} : out.back().tag;
      out.push_back({w, tag_word(w, prev)});
    }
    return out;
  }

  std::string tag_word(const std::string& word, std::string_view prev_tag) const {
    if (is_individual(word)) return std::string(kIndTag);
    if (word == kPersonZ) return "NNP";
    const std::string lower = to_lower(word);
    if (auto it = overrides_.find(lower); it != overrides_.end()) return it->second;
    if (auto it = builtin().find(lower); it != builtin().end()) return it->second;
    return suffix_tag(lower, prev_tag);
  }

 private:
  static bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
  }

  static std::string suffix_tag(const std::string& w, std::string_view prev_tag) {
    if (std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) {
      return "CD";
    }
    // Right after the subject an -s word is almost always the main verb.
    if (prev_tag == kIndTag) {
      if (ends_with(w, "ed")) return "VBD";
      if (ends_with(w, "s") && !ends_with(w, "ss") && !ends_with(w, "us")) return "VBZ";
    }
    if (ends_with(w, "ly")) return "RB";
    if (ends_with(w, "ing")) return "VBG";
    if (ends_with(w, "ed")) return "VBN";
    if (ends_with(w, "ous") || ends_with(w, "ful") || ends_with(w, "ive") ||
        ends_with(w, "y")) {
      return "JJ";
    }
    if (ends_with(w, "ss")) return "NN";
    if (ends_with(w, "s")) return "NNS";
    return "NN";
  }

  static const Lexicon& builtin() {
    static const Lexicon lex = [] {
      Lexicon l;
      auto add = [&l](std::string_view tag, std::initializer_list<std::string_view> words) {
        for (auto w : words) l.emplace(std::string(w), std::string(tag));
      };
      add("DT", {"a", "an", "the", "this", "that", "these", "those", "another", "some", "any",
                 "each", "every", "no", "all", "both", "either", "neither"});
      add("CC", {"and", "or", "but", "nor", "plus"});
      add("PRP", {"i", "me", "you", "he", "him", "she", "her", "it", "we", "us", "they", "them",
                  "myself", "yourself", "himself", "herself", "itself", "ourselves",
                  "themselves", "hers", "mine", "yours", "ours", "theirs"});
      add("PRP$", {"my", "your", "his", "its", "our", "their"});
      add("IN", {"in", "on", "at", "of", "for", "with", "from", "by", "about", "into", "onto",
                 "over", "under", "after", "before", "during", "without", "through", "across",
                 "against", "among", "around", "behind", "between", "beyond", "near", "since",
                 "until", "upon", "within", "like", "than", "because", "if", "while", "as"});
      add("TO", {"to"});
      add("MD", {"can", "could", "will", "would", "shall", "should", "may", "might", "must"});
      add("RB", {"not", "very", "really", "also", "too", "just", "so", "never", "always",
                 "often", "still", "again", "well", "even", "quite", "more", "most", "home",
                 "away", "back", "together", "n't"});
      add("RP", {"up", "out", "down", "off"});
      add("VBZ", {"is", "has", "does", "goes", "gets", "makes", "takes", "gives", "kills",
                  "loves", "paints", "wants", "needs", "sees", "says", "tells", "asks"});
      add("VBP", {"are", "am", "have", "do"});
      add("VBD", {"was", "were", "had", "did", "got", "made", "took", "gave", "went", "saw",
                  "said", "told"});
      add("VB", {"be", "get", "make", "take", "give", "go", "see", "say", "tell", "ask",
                 "help", "buy", "eat", "feel", "know", "think", "come", "find", "keep", "leave",
                 "pay", "play", "run", "speak", "talk", "thank", "try", "use", "visit", "work",
                 "hang", "win", "learn", "read", "write", "call", "meet", "sleep", "rest"});
      add("VBN", {"been", "done", "gone", "given", "taken", "seen", "known"});
      add("VBG", {"being", "having", "doing", "going"});
      add("JJ", {"sad", "happy", "glad", "good", "bad", "new", "old", "nice", "kind", "mad",
                 "angry", "upset", "proud", "tired", "sick", "rich", "poor", "smart", "brave",
                 "calm", "excited", "satisfied", "relieved", "scared", "afraid", "nervous",
                 "grateful", "thankful", "creative", "generous", "friendly", "loving", "caring",
                 "helpful", "lonely", "jealous", "worried", "hungry", "full", "free", "busy",
                 "great", "big", "small", "long", "short", "young", "fun", "happier", "better",
                 "worse", "best", "strong", "weak", "responsible", "confident", "content"});
      add("NN", {"family", "money", "party", "story", "body", "city", "country", "baby",
                 "boy", "toy", "day", "way", "key", "energy", "company", "army", "library",
                 "gallery", "hobby", "history", "memory", "opportunity", "duty", "beauty",
                 "glass", "class", "boss", "grass", "dress", "kiss", "news", "business",
                 "bus", "gas", "grief", "friend", "father", "mother", "husband", "wife",
                 "portrait", "painting", "house", "car", "job", "school", "work", "food"});
      return l;
    }();
    return lex;
  }

  Lexicon overrides_;
};

/// Tags with the built-in lexicon only.
inline std::vector<TaggedToken> pos_tag(const std::vector<std::string>& words) {
  static const Tagger tagger;
  return tagger.tag(words);
}

}  // namespace atomfol
