#pragma once

// Readers for Atomic-style input and the PersonZ filter.
//
// Three layouts are understood:
//   * the Atomic distribution CSV: an `event` column plus one column per
//     dimension whose cells are JSON lists of answers ("none" = no answer);
//   * a 3-column TSV: event, dimension, inference;
//   * the same TSV with every token written as word/TAG (pre-tagged).
//
// Malformed rows never abort a read: they are skipped and recorded in the
// IngestLog. Only a malformed header throws.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomfol/dimension.hpp"
#include "atomfol/error.hpp"
#include "atomfol/normalize.hpp"
#include "atomfol/tagger.hpp"

namespace atomfol {

struct AtomicRecord {
  std::string id;
  std::vector<TaggedToken> event;
  Dimension dimension = Dimension::xIntent;
  std::vector<TaggedToken> inference;
  // Original wording, used when rendering sentences.
  std::string event_text;
  std::string inference_text;

  friend bool operator==(const AtomicRecord&, const AtomicRecord&) = default;
};

struct IngestLog {
  std::size_t rows = 0;
  std::size_t records = 0;
  std::size_t none_answers = 0;
  std::size_t malformed_rows = 0;
  std::size_t empty_inferences = 0;
  NormalizeStats normalize;
  std::vector<std::string> messages;

  void warn(std::size_t line, const std::string& what) {
    messages.push_back("line " + std::to_string(line) + ": " + what);
  }

  IngestLog& operator+=(const IngestLog& o) {
    rows += o.rows;
    records += o.records;
    none_answers += o.none_answers;
    malformed_rows += o.malformed_rows;
    empty_inferences += o.empty_inferences;
    normalize.unresolved_pronouns += o.normalize.unresolved_pronouns;
    messages.insert(messages.end(), o.messages.begin(), o.messages.end());
    return *this;
  }
};

inline std::string words_text(const std::vector<TaggedToken>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.word;
  }
  return out;
}

inline bool has_word(const std::vector<TaggedToken>& tokens, std::string_view w) {
  return std::any_of(tokens.begin(), tokens.end(),
                     [&](const TaggedToken& t) { return t.word == w; });
}

/// Normalizes and tags one (event, dimension, inference) triple from raw
/// text. Returns nullopt (and logs) when the inference ends up empty.
inline std::optional<AtomicRecord> make_record(std::string id, const std::string& event_text,
                                               Dimension dimension,
                                               const std::string& inference_text,
                                               const Tagger& tagger, IngestLog& log,
                                               std::size_t line) {
  const auto event_words =
      normalize_individuals(split_words(event_text), dimension, false, Side::Event);
  const bool has_y =
      std::find(event_words.begin(), event_words.end(), kPersonY) != event_words.end();
  const auto inference_words = normalize_individuals(
      split_words(inference_text), dimension, has_y, Side::Inference, &log.normalize);
  if (inference_words.empty()) {
    ++log.empty_inferences;
    log.warn(line, "empty inference after normalization");
    return std::nullopt;
  }
  AtomicRecord r;
  r.id = std::move(id);
  r.event = tagger.tag(event_words);
  r.dimension = dimension;
  r.inference = tagger.tag(inference_words);
  r.event_text = event_text;
  r.inference_text = inference_text;
  return r;
}

namespace detail {

inline void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

/// One RFC 4180 record (quoted fields may span lines). Returns false at EOF.
/// `line` is advanced by the number of physical lines consumed.
inline bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                            std::size_t& line, bool& unterminated) {
  fields.clear();
  unterminated = false;
  std::string physical;
  if (!std::getline(in, physical)) return false;
  ++line;
  std::string field;
  bool quoted = false;
  while (true) {
    chomp(physical);
    for (std::size_t i = 0; i < physical.size(); ++i) {
      const char c = physical[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < physical.size() && physical[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else {
        field += c;
      }
    }
    if (!quoted) break;
    if (!std::getline(in, physical)) {
      unterminated = true;
      break;
    }
    ++line;
    field += '\n';
  }
  fields.push_back(std::move(field));
  return true;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

/// Reads the Atomic CSV layout. Columns other than `event` and the nine
/// dimension names (prefix, split, ...) are ignored. Ids are
/// `r<row>-<dimension>-<answer index>` with 1-based data rows.
inline std::vector<AtomicRecord> read_atomic_csv(std::istream& in, const Tagger& tagger,
                                                 IngestLog& log) {
  std::vector<std::string> fields;
  std::size_t line = 0;
  bool unterminated = false;
  if (!detail::read_csv_record(in, fields, line, unterminated)) {
    throw InputError("atomic csv: missing header row");
  }
  std::optional<std::size_t> event_col;
  std::vector<std::pair<std::size_t, Dimension>> dim_cols;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string name = detail::trim(fields[i]);
    if (name == "event") {
      event_col = i;
    } else if (auto d = parse_dimension(name)) {
      dim_cols.emplace_back(i, *d);
    }
  }
  if (!event_col) throw InputError("atomic csv: header has no 'event' column");
  if (dim_cols.empty()) throw InputError("atomic csv: header has no dimension columns");

  std::vector<AtomicRecord> out;
  std::size_t row = 0;
  while (detail::read_csv_record(in, fields, line, unterminated)) {
    if (fields.size() == 1 && detail::trim(fields[0]).empty()) continue;
    ++row;
    ++log.rows;
    if (unterminated) {
      ++log.malformed_rows;
      log.warn(line, "unterminated quoted field");
      continue;
    }
    if (fields.size() <= *event_col) {
      ++log.malformed_rows;
      log.warn(line, "row has no event cell");
      continue;
    }
    // Parse every cell of the row first; any bad cell skips the whole row.
    std::vector<std::pair<Dimension, std::vector<std::string>>> answers;
    bool ok = true;
    for (const auto& [col, dim] : dim_cols) {
      if (col >= fields.size()) continue;
      const std::string cell = detail::trim(fields[col]);
      if (cell.empty()) continue;
      const auto parsed = nlohmann::json::parse(cell, nullptr, false);
      if (parsed.is_discarded() || !parsed.is_array() ||
          !std::all_of(parsed.begin(), parsed.end(),
                       [](const nlohmann::json& j) { return j.is_string(); })) {
        ok = false;
        log.warn(line, "unparseable " + std::string(to_string(dim)) + " cell in row " +
                           std::to_string(row));
        break;
      }
      answers.emplace_back(dim, parsed.get<std::vector<std::string>>());
    }
    if (!ok) {
      ++log.malformed_rows;
      continue;
    }
    const std::string& event = fields[*event_col];
    for (const auto& [dim, list] : answers) {
      for (std::size_t k = 0; k < list.size(); ++k) {
        if (iequals(detail::trim(list[k]), "none")) {
          ++log.none_answers;
          continue;
        }
        std::string id =
            "r" + std::to_string(row) + "-" + std::string(to_string(dim)) + "-" + std::to_string(k);
        if (auto rec = make_record(std::move(id), event, dim, list[k], tagger, log, line)) {
          out.push_back(std::move(*rec));
          ++log.records;
        }
      }
    }
  }
  return out;
}

namespace detail {

inline bool is_tsv_header(const std::vector<std::string>& cols) {
  return cols.size() == 3 && iequals(trim(cols[0]), "event") &&
         iequals(trim(cols[1]), "dimension") && iequals(trim(cols[2]), "inference");
}

template <class MakeRecord>
std::vector<AtomicRecord> read_three_columns(std::istream& in, IngestLog& log,
                                             MakeRecord&& make) {
  std::vector<AtomicRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    chomp(text);
    if (trim(text).empty()) continue;
    const auto cols = split_tabs(text);
    if (line == 1 && is_tsv_header(cols)) continue;
    ++log.rows;
    if (cols.size() != 3) {
      ++log.malformed_rows;
      log.warn(line, "expected 3 tab-separated columns, found " + std::to_string(cols.size()));
      continue;
    }
    const auto dim = parse_dimension(trim(cols[1]));
    if (!dim) {
      ++log.malformed_rows;
      log.warn(line, "unknown dimension '" + trim(cols[1]) + "'");
      continue;
    }
    std::string id = "l" + std::to_string(line) + "-" + std::string(to_string(*dim)) + "-0";
    if (auto rec = make(std::move(id), cols[0], *dim, cols[2], line)) {
      out.push_back(std::move(*rec));
      ++log.records;
    }
  }
  return out;
}

}  // namespace detail

/// Reads `event<TAB>dimension<TAB>inference` lines. An optional header line
/// naming those three columns is skipped.
inline std::vector<AtomicRecord> read_tsv(std::istream& in, const Tagger& tagger,
                                          IngestLog& log) {
  return detail::read_three_columns(
      in, log,
      [&](std::string id, const std::string& event, Dimension dim, const std::string& inference,
          std::size_t line) {
        if (iequals(detail::trim(inference), "none")) {
          ++log.none_answers;
          return std::optional<AtomicRecord>{};
        }
        return make_record(std::move(id), event, dim, inference, tagger, log, line);
      });
}

/// Parses "w1/T1 w2/T2 ..." splitting each token at its last '/'.
inline std::optional<std::vector<TaggedToken>> parse_tagged_tokens(std::string_view text) {
  std::vector<TaggedToken> out;
  for (const auto& tok : split_whitespace(text)) {
    const auto slash = tok.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size()) return std::nullopt;
    out.push_back({tok.substr(0, slash), tok.substr(slash + 1)});
  }
  return out;
}

/// Reads the 3-column TSV whose event and inference cells are word/TAG
/// tokens. Tagging is taken as given except that PersonX / PersonY are
/// forced to IND and clitic tokens following an individual are dropped.
inline std::vector<AtomicRecord> read_pretagged_tsv(std::istream& in, IngestLog& log) {
  auto clean = [](std::vector<TaggedToken> toks) {
    std::vector<TaggedToken> out;
    for (auto& t : toks) {
      // Characters that are structural in the formula syntax cannot appear
      // in predicate words.
      std::erase_if(t.word, [](char c) { return c == '(' || c == ')' || c == '&' || c == ','; });
      if (t.word.empty() || t.word == "->") continue;
      if (is_individual(t.word)) t.tag = std::string(kIndTag);
      if (is_clitic_word(t.word) && !out.empty() && out.back().tag == kIndTag) continue;
      out.push_back(std::move(t));
    }
    return out;
  };
  return detail::read_three_columns(
      in, log,
      [&](std::string id, const std::string& event, Dimension dim, const std::string& inference,
          std::size_t line) -> std::optional<AtomicRecord> {
        auto ev = parse_tagged_tokens(event);
        auto inf = parse_tagged_tokens(inference);
        if (!ev || !inf) {
          ++log.malformed_rows;
          log.warn(line, "token without /TAG suffix");
          return std::nullopt;
        }
        for (const auto* side : {&*ev, &*inf}) {
          for (const auto& t : *side) {
            if (t.tag == kIndTag && !is_individual(t.word)) {
              ++log.malformed_rows;
              log.warn(line, "IND tag on non-individual '" + t.word + "'");
              return std::nullopt;
            }
          }
        }
        AtomicRecord r;
        r.id = std::move(id);
        r.event = clean(std::move(*ev));
        r.dimension = dim;
        r.inference = clean(std::move(*inf));
        if (r.inference.empty()) {
          ++log.empty_inferences;
          log.warn(line, "empty inference");
          return std::nullopt;
        }
        r.event_text = words_text(r.event);
        r.inference_text = words_text(r.inference);
        return r;
      });
}

inline bool mentions_personz(const AtomicRecord& r) {
  auto words = [](const std::vector<TaggedToken>& toks) {
    std::vector<std::string> w;
    for (const auto& t : toks) w.push_back(t.word);
    return w;
  };
  return mentions_personz(words(r.event)) || mentions_personz(words(r.inference)) ||
         mentions_personz(split_words(r.event_text));
}

struct PersonZFilterResult {
  std::vector<AtomicRecord> kept;
  std::size_t removed = 0;
  std::vector<std::string> removed_ids;
};

/// Removes every record whose event or inference mentions PersonZ.
inline PersonZFilterResult filter_personz(std::vector<AtomicRecord> records) {
  PersonZFilterResult result;
  for (auto& r : records) {
    if (mentions_personz(r)) {
      ++result.removed;
      result.removed_ids.push_back(r.id);
    } else {
      result.kept.push_back(std::move(r));
    }
  }
  return result;
}

}  // namespace atomfol
