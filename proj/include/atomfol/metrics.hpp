#pragma once

// Formula-level scores: exact-match accuracy (FA), token edit distance (ED)
// and positional token accuracy (TA). All three work on whitespace tokens,
// so malformed predictions are scored like any other.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <ranges>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomfol/error.hpp"
#include "atomfol/fol.hpp"

namespace atomfol {

/// Levenshtein distance over tokens with unit insert/delete/substitute costs.
template <std::ranges::random_access_range Pred, std::ranges::random_access_range Gold>
std::size_t edit_distance(const Pred& pred, const Gold& gold) {
  const auto m = static_cast<std::size_t>(std::ranges::size(pred));
  const auto n = static_cast<std::size_t>(std::ranges::size(gold));
  auto p = std::ranges::begin(pred);
  auto g = std::ranges::begin(gold);
  // row[j] = distance between pred[0..i) and gold[0..j)
  std::vector<std::size_t> row(n + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t above = row[j];
      const std::size_t substitute = diagonal + (p[i - 1] == g[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return row[n];
}

/// Share of positions holding the gold token, over the longer sequence.
/// Two empty sequences score 1.
template <std::ranges::random_access_range Pred, std::ranges::random_access_range Gold>
double token_accuracy(const Pred& pred, const Gold& gold) {
  const auto m = static_cast<std::size_t>(std::ranges::size(pred));
  const auto n = static_cast<std::size_t>(std::ranges::size(gold));
  const std::size_t longest = std::max(m, n);
  if (longest == 0) return 1.0;
  auto p = std::ranges::begin(pred);
  auto g = std::ranges::begin(gold);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < std::min(m, n); ++i) {
    if (p[i] == g[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(longest);
}

/// Fraction of pairs whose token sequences are identical.
inline double formula_accuracy(const std::vector<FormulaTokens>& pred,
                               const std::vector<FormulaTokens>& gold) {
  if (pred.size() != gold.size()) {
    throw InputError("prediction count " + std::to_string(pred.size()) +
                     " does not match gold count " + std::to_string(gold.size()));
  }
  if (pred.empty()) throw InputError("nothing to score: no formula pairs");
  std::size_t exact = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == gold[i]) ++exact;
  }
  return static_cast<double>(exact) / static_cast<double>(pred.size());
}

struct EvalReport {
  std::size_t n = 0;
  std::size_t exact = 0;
  double fa = 0.0;
  double ed = 0.0;
  double ta = 0.0;

  nlohmann::ordered_json to_json() const {
    return {{"n", n}, {"exact", exact}, {"fa", fa}, {"ed", ed}, {"ta", ta}};
  }
};

/// Scores parallel prediction/gold formula lines. ED and TA are averaged
/// per formula.
inline EvalReport evaluate(const std::vector<std::string>& pred_lines,
                           const std::vector<std::string>& gold_lines) {
  if (pred_lines.size() != gold_lines.size()) {
    throw InputError("prediction file has " + std::to_string(pred_lines.size()) +
                     " lines but gold file has " + std::to_string(gold_lines.size()));
  }
  if (pred_lines.empty()) throw InputError("nothing to evaluate: no formula pairs");

  EvalReport report;
  report.n = pred_lines.size();
  double ed_sum = 0.0;
  double ta_sum = 0.0;
  for (std::size_t i = 0; i < report.n; ++i) {
    const FormulaTokens pred = tokenize(pred_lines[i]);
    const FormulaTokens gold = tokenize(gold_lines[i]);
    if (pred == gold) ++report.exact;
    ed_sum += static_cast<double>(edit_distance(pred, gold));
    ta_sum += token_accuracy(pred, gold);
  }
  const auto n = static_cast<double>(report.n);
  report.fa = static_cast<double>(report.exact) / n;
  report.ed = ed_sum / n;
  report.ta = ta_sum / n;
  return report;
}

inline std::string render_table(const EvalReport& r) {
  std::ostringstream out;
  out << "pairs  " << r.n << "\n"
      << "exact  " << r.exact << "\n"
      << std::fixed << std::setprecision(2) << "FA     " << r.fa * 100.0 << "%\n"
      << std::setprecision(6) << "ED     " << r.ed << "\n"
      << std::setprecision(2) << "TA     " << r.ta * 100.0 << "%\n";
  return out.str();
}

}  // namespace atomfol
