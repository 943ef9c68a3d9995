#pragma once

// Word splitting and canonicalization of individual mentions.
//
// Events always name individuals as PersonX / PersonY, but crowd-written
// inferences use "X's", "person x", "him" and so on. Everything here maps
// those onto the two canonical spellings (plus PersonZ, which is filtered
// out later).

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atomfol/dimension.hpp"

namespace atomfol {

inline constexpr std::string_view kPersonX = "PersonX";
inline constexpr std::string_view kPersonY = "PersonY";
inline constexpr std::string_view kPersonZ = "PersonZ";

enum class Side { Event, Inference };

struct NormalizeStats {
  std::size_t unresolved_pronouns = 0;
};

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char l, unsigned char r) {
           return std::tolower(l) == std::tolower(r);
         });
}

inline std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

/// Splits raw text into words. Punctuation other than apostrophes, hyphens
/// and underscores separates words; words with no letters or digits
/// (Atomic's "___" blanks, stray dashes) are dropped.
inline std::vector<std::string> split_words(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    // U+2019 RIGHT SINGLE QUOTATION MARK is a common apostrophe.
    if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x80 &&
        static_cast<unsigned char>(text[i + 2]) == 0x99) {
      cleaned += '\'';
      i += 2;
    } else if (std::isalnum(c) || c == '\'' || c == '-' || c == '_' || c >= 0x80) {
      cleaned += static_cast<char>(c);
    } else {
      cleaned += ' ';
    }
  }
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && cleaned[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < cleaned.size() && cleaned[i] != ' ') ++i;
    if (i == start) continue;
    std::string w = cleaned.substr(start, i - start);
    const bool has_content = std::any_of(w.begin(), w.end(), [](unsigned char c) {
      return std::isalnum(c) || c >= 0x80;
    });
    if (has_content) words.push_back(std::move(w));
  }
  return words;
}

/// Strips a trailing possessive/contraction clitic ('s or 'd).
inline std::string_view strip_clitic(std::string_view w, bool* had_clitic = nullptr) {
  if (had_clitic) *had_clitic = false;
  if (w.size() > 2 && w[w.size() - 2] == '\'' &&
      (w.back() == 's' || w.back() == 'S' || w.back() == 'd' || w.back() == 'D')) {
    if (had_clitic) *had_clitic = true;
    return w.substr(0, w.size() - 2);
  }
  return w;
}

inline bool is_clitic_word(std::string_view w) {
  return iequals(w, "'s") || iequals(w, "'d");
}

/// 'X', 'Y' or 'Z' when `w` (clitic already stripped) names an individual
/// on its own: PersonX, personx, X, x and so on.
inline std::optional<char> individual_letter(std::string_view w) {
  const std::string l = to_lower(w);
  if (l == "personx" || l == "x") return 'X';
  if (l == "persony" || l == "y") return 'Y';
  if (l == "personz" || l == "z") return 'Z';
  return std::nullopt;
}

inline std::string_view canonical_individual(char letter) {
  switch (letter) {
    case 'X': return kPersonX;
    case 'Y': return kPersonY;
    default: return kPersonZ;
  }
}

inline bool is_individual(std::string_view w) { return w == kPersonX || w == kPersonY; }

inline bool is_person_pronoun(std::string_view w) {
  static constexpr std::string_view kPronouns[] = {"he", "him", "his", "she", "her", "hers"};
  const std::string l = to_lower(w);
  return std::find(std::begin(kPronouns), std::end(kPronouns), l) != std::end(kPronouns);
}

/// Rewrites every spelling of an individual to PersonX / PersonY / PersonZ
/// and deletes possessive clitics attached to them.
///
/// On the inference side, third-person singular pronouns resolve to the
/// individual other than the dimension's subject: PersonX for o-dimensions,
/// PersonY for x-dimensions when the event mentions PersonY. Pronouns that
/// cannot be resolved are dropped and counted in `stats`.
inline std::vector<std::string> normalize_individuals(const std::vector<std::string>& words,
                                                      Dimension dimension,
                                                      bool event_has_person_y, Side side,
                                                      NormalizeStats* stats = nullptr) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& w = words[i];
    const std::string_view base = strip_clitic(w);

    if (iequals(w, "person") && i + 1 < words.size()) {
      const auto letter = individual_letter(strip_clitic(words[i + 1]));
      if (letter && to_lower(strip_clitic(words[i + 1])).size() == 1) {
        out.emplace_back(canonical_individual(*letter));
        ++i;
        continue;
      }
    }
    if (const auto letter = individual_letter(base)) {
      out.emplace_back(canonical_individual(*letter));
      continue;
    }
    if (is_clitic_word(w) && !out.empty() &&
        (is_individual(out.back()) || out.back() == kPersonZ)) {
      continue;
    }
    if (side == Side::Inference && is_person_pronoun(w)) {
      if (!about_person_x(dimension)) {
        out.emplace_back(kPersonX);
      } else if (event_has_person_y) {
        out.emplace_back(kPersonY);
      } else if (stats) {
        ++stats->unresolved_pronouns;
      }
      continue;
    }
    out.push_back(w);
  }
  return out;
}

/// True if any word is a PersonZ mention in any spelling.
inline bool mentions_personz(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string_view base = strip_clitic(words[i]);
    if (individual_letter(base) == 'Z') return true;
    if (iequals(words[i], "person") && i + 1 < words.size() &&
        to_lower(strip_clitic(words[i + 1])) == "z") {
      return true;
    }
  }
  return false;
}

}  // namespace atomfol
