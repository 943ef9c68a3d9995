#pragma once

// (sentence, formula) pairs: rendering, category filtering, seeded
// split/sample, and the structured-lines file format.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomfol/dimension.hpp"
#include "atomfol/error.hpp"
#include "atomfol/fol.hpp"
#include "atomfol/ingest.hpp"
#include "atomfol/translator.hpp"

namespace atomfol {

struct DatasetPair {
  std::string id;
  Dimension dimension = Dimension::xIntent;
  Category category = Category::MentalState;
  std::string sentence;
  std::string formula;     // quantified
  std::string formula_nq;  // unquantified

  friend bool operator==(const DatasetPair&, const DatasetPair&) = default;
};

namespace detail {

inline std::string_view clause_text(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n.!?;");
  if (e == std::string_view::npos || e < b) return {};
  return s.substr(b, e - b + 1);
}

}  // namespace detail

/// "If <event> then <dimension phrase> <inference>." using the record's
/// original wording.
inline std::string render_sentence(const AtomicRecord& record) {
  const std::string event(detail::clause_text(record.event_text));
  const std::string inf(detail::clause_text(record.inference_text));
  const bool has_y = has_word(record.event, kPersonY);
  std::string then;
  switch (record.dimension) {
    case Dimension::xAttr: then = "PersonX is " + inf; break;
    case Dimension::xWant: then = "PersonX wants " + inf; break;
    case Dimension::xNeed: then = "PersonX needs " + inf; break;
    case Dimension::xIntent: then = "PersonX intends " + inf; break;
    case Dimension::xReact: then = "PersonX feels " + inf; break;
    case Dimension::xEffect: then = "PersonX " + inf; break;
    case Dimension::oReact: then = (has_y ? "PersonY is " : "others are ") + inf; break;
    case Dimension::oWant: then = (has_y ? "PersonY wants " : "others want ") + inf; break;
    case Dimension::oEffect: then = (has_y ? "PersonY " : "others ") + inf; break;
  }
  return "If " + event + " then " + then + ".";
}

/// Translates `record` and renders both formula variants. Throws
/// TranslationError.
inline DatasetPair make_pair(const AtomicRecord& record) {
  const Rule rule = atomic_to_rule(record, true);
  DatasetPair p;
  p.id = record.id;
  p.dimension = record.dimension;
  p.category = category_of(record.dimension);
  p.sentence = render_sentence(record);
  p.formula = serialize(rule);
  p.formula_nq = serialize(strip_quantifiers(rule));
  return p;
}

/// Keeps items whose dimension belongs to `category`; nullopt keeps all.
template <class T>
std::vector<T> filter_category(std::vector<T> items, std::optional<Category> category) {
  if (!category) return items;
  std::erase_if(items, [&](const T& t) { return category_of(t.dimension) != *category; });
  return items;
}

// ---------------------------------------------------------------------------
// Seeded selection. The shuffle and bounded draws are spelled out instead of
// using std::shuffle / std::uniform_int_distribution, whose algorithms differ
// between standard libraries; mt19937_64 itself is fully specified.

namespace detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

}  // namespace detail

template <class T>
struct Split {
  std::vector<T> train;
  std::vector<T> eval;
};

/// Seeded shuffle, then the first round(n * train_fraction) items train.
template <class T>
Split<T> split(const std::vector<T>& items, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie strictly between 0 and 1");
  }
  if (items.empty()) throw InputError("cannot split an empty dataset");
  const auto order = detail::shuffled_indices(items.size(), seed);
  const auto cut = static_cast<std::size_t>(
      std::llround(static_cast<double>(items.size()) * train_fraction));
  Split<T> out;
  out.train.reserve(cut);
  out.eval.reserve(items.size() - cut);
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < cut ? out.train : out.eval).push_back(items[order[i]]);
  }
  return out;
}

/// Seeded uniform sample of k items without replacement, returned in input
/// order.
template <class T>
std::vector<T> sample(const std::vector<T>& items, std::size_t k, std::uint64_t seed) {
  if (k > items.size()) {
    throw InputError("sample size " + std::to_string(k) + " exceeds dataset size " +
                     std::to_string(items.size()));
  }
  auto order = detail::shuffled_indices(items.size(), seed);
  order.resize(k);
  std::sort(order.begin(), order.end());
  std::vector<T> out;
  out.reserve(k);
  for (auto i : order) out.push_back(items[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Structured lines

inline nlohmann::ordered_json to_json(const DatasetPair& p) {
  return {{"id", p.id},
          {"dimension", to_string(p.dimension)},
          {"category", to_string(p.category)},
          {"sentence", p.sentence},
          {"formula", p.formula},
          {"formula_nq", p.formula_nq}};
}

inline DatasetPair pair_from_json(const nlohmann::json& j) {
  DatasetPair p;
  p.id = j.at("id").get<std::string>();
  const auto dim = parse_dimension(j.at("dimension").get<std::string>());
  if (!dim) throw InputError("unknown dimension " + j.at("dimension").dump());
  p.dimension = *dim;
  p.category = category_of(*dim);
  p.sentence = j.at("sentence").get<std::string>();
  p.formula = j.at("formula").get<std::string>();
  p.formula_nq = j.at("formula_nq").get<std::string>();
  return p;
}

inline void emit_jsonl(const std::vector<DatasetPair>& pairs, std::ostream& out) {
  for (const auto& p : pairs) out << to_json(p).dump() << '\n';
}

/// One sentence per line and, line-aligned, one formula per line.
inline void emit_parallel(const std::vector<DatasetPair>& pairs, std::ostream& sentences,
                          std::ostream& formulas, bool quantified = true) {
  for (const auto& p : pairs) {
    sentences << p.sentence << '\n';
    formulas << (quantified ? p.formula : p.formula_nq) << '\n';
  }
}

inline std::vector<DatasetPair> read_jsonl(std::istream& in) {
  std::vector<DatasetPair> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(pair_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw InputError("dataset line " + std::to_string(lineno) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("dataset line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace atomfol
