#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "atomfol/metrics.hpp"
#include "support/edit_oracle.hpp"

namespace atomfol {
namespace {

FormulaTokens seq(std::size_t n, const std::string& stem = "t") {
  FormulaTokens out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

const std::string kGold =
    "A x z ( ( person (x) & is really (x,z) & sad (z) ) -> E a ( to speak with (x,a) & friend "
    "(a) ) )";
const std::string kFlipped =
    "A x z ( ( person (x) & is really (x,z) & sad (z) ) -> E a ) to speak with (x,a) & friend "
    "(a) ) )";

TEST(EditDistance, Examples) {
  EXPECT_EQ(edit_distance(tokenize(kGold), tokenize(kGold)), 0u);
  EXPECT_EQ(edit_distance(tokenize(kFlipped), tokenize(kGold)), 1u);
  EXPECT_EQ(edit_distance(FormulaTokens{}, seq(4)), 4u);
  EXPECT_EQ(edit_distance(seq(3), FormulaTokens{}), 3u);
  const FormulaTokens kitten = {"k", "i", "t", "t", "e", "n"};
  const FormulaTokens sitting = {"s", "i", "t", "t", "i", "n", "g"};
  EXPECT_EQ(edit_distance(kitten, sitting), 3u);
}

TEST(EditDistance, MatchesExhaustiveSearchUpToLength5) {
  const testing::SequenceSpace space(5, 3);
  for (std::size_t s = 0; s < space.size(); ++s) {
    const auto dist = space.distances_from(s);
    for (std::size_t t = 0; t < space.size(); ++t) {
      ASSERT_EQ(edit_distance(space.at(s), space.at(t)), dist[t]) << s << " " << t;
    }
  }
}

TEST(EditDistance, MatchesNaiveRecursion) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    testing::Symbols a(rng() % 7), b(rng() % 7);
    for (auto& c : a) c = static_cast<std::uint8_t>(rng() % 3);
    for (auto& c : b) c = static_cast<std::uint8_t>(rng() % 3);
    EXPECT_EQ(edit_distance(a, b),
              testing::naive_distance(std::span<const std::uint8_t>(a),
                                      std::span<const std::uint8_t>(b)));
  }
}

TEST(EditDistance, MatchesMemoizedRecursionOnLongerSequences) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    testing::Symbols a(9 + rng() % 40), b(9 + rng() % 40);
    for (auto& c : a) c = static_cast<std::uint8_t>(rng() % 4);
    for (auto& c : b) c = static_cast<std::uint8_t>(rng() % 4);
    EXPECT_EQ(edit_distance(a, b), testing::recursive_distance(a, b));
  }
}

TEST(EditDistance, MetricAxiomsAndBounds) {
  std::mt19937_64 rng(5);
  auto random_seq = [&] {
    testing::Symbols s(rng() % 12);
    for (auto& c : s) c = static_cast<std::uint8_t>(rng() % 3);
    return s;
  };
  for (int i = 0; i < 2000; ++i) {
    const auto a = random_seq(), b = random_seq(), c = random_seq();
    const auto ab = edit_distance(a, b);
    EXPECT_EQ(ab, edit_distance(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(edit_distance(a, c), ab + edit_distance(b, c));
    EXPECT_LE(ab, std::max(a.size(), b.size()));
    EXPECT_GE(ab, a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
  }
}

TEST(TokenAccuracy, Examples) {
  EXPECT_DOUBLE_EQ(token_accuracy(seq(12), seq(12)), 1.0);
  auto one_off = seq(20);
  one_off[7] = "other";
  EXPECT_DOUBLE_EQ(token_accuracy(one_off, seq(20)), 0.95);
  EXPECT_DOUBLE_EQ(token_accuracy(seq(9), seq(10)), 0.9);
  EXPECT_DOUBLE_EQ(token_accuracy(seq(10), seq(9)), 0.9);
  EXPECT_DOUBLE_EQ(token_accuracy(FormulaTokens{}, FormulaTokens{}), 1.0);
  EXPECT_DOUBLE_EQ(token_accuracy(FormulaTokens{}, seq(3)), 0.0);
  EXPECT_DOUBLE_EQ(token_accuracy(tokenize(kFlipped), tokenize(kGold)),
                   static_cast<double>(tokenize(kGold).size() - 1) /
                       static_cast<double>(tokenize(kGold).size()));
}

TEST(TokenAccuracy, OneIffIdentical) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    testing::Symbols a(rng() % 6), b(rng() % 6);
    for (auto& c : a) c = static_cast<std::uint8_t>(rng() % 2);
    for (auto& c : b) c = static_cast<std::uint8_t>(rng() % 2);
    const double ta = token_accuracy(a, b);
    EXPECT_EQ(ta == 1.0, a == b);
    EXPECT_GE(ta, 0.0);
    EXPECT_LE(ta, 1.0);
  }
}

TEST(FormulaAccuracy, Examples) {
  const std::vector<FormulaTokens> gold(30000, seq(10));
  EXPECT_DOUBLE_EQ(formula_accuracy(gold, gold), 1.0);
  auto pred = gold;
  pred[10][3] = "x";
  pred[29999].pop_back();
  EXPECT_DOUBLE_EQ(formula_accuracy(pred, gold), 29998.0 / 30000.0);
  std::vector<FormulaTokens> none(5, seq(2, "p")), five(5, seq(2));
  EXPECT_DOUBLE_EQ(formula_accuracy(none, five), 0.0);
  EXPECT_THROW(formula_accuracy(none, gold), InputError);
  EXPECT_THROW(formula_accuracy({}, {}), InputError);
}

std::string join(const FormulaTokens& t) {
  std::string out;
  for (const auto& w : t) out += (out.empty() ? "" : " ") + w;
  return out;
}

TEST(Evaluate, Examples) {
  const std::vector<std::string> same = {kGold, "( a (x) ) -> b (x)"};
  const auto r0 = evaluate(same, same);
  EXPECT_EQ(r0.n, 2u);
  EXPECT_DOUBLE_EQ(r0.fa, 1.0);
  EXPECT_DOUBLE_EQ(r0.ed, 0.0);
  EXPECT_DOUBLE_EQ(r0.ta, 1.0);

  auto twenty = seq(20);
  const std::string gold20 = join(twenty);
  twenty[5] = ")";
  const auto r1 = evaluate({join(twenty)}, {gold20});
  EXPECT_DOUBLE_EQ(r1.fa, 0.0);
  EXPECT_DOUBLE_EQ(r1.ed, 1.0);
  EXPECT_DOUBLE_EQ(r1.ta, 0.95);

  auto two_subs = seq(10);
  two_subs[0] = "p";
  two_subs[9] = "q";
  const auto r2 = evaluate({join(seq(10)), join(two_subs)}, {join(seq(10)), join(seq(10))});
  EXPECT_DOUBLE_EQ(r2.fa, 0.5);
  EXPECT_DOUBLE_EQ(r2.ed, 1.0);
  EXPECT_DOUBLE_EQ(r2.ta, 0.9);

  EXPECT_THROW(evaluate({"a"}, {}), InputError);
  EXPECT_THROW(evaluate({}, {}), InputError);
}

TEST(Evaluate, ReportInvariants) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> pred, gold;
    for (int i = 0; i < 5; ++i) {
      auto g = seq(1 + rng() % 6);
      auto p = g;
      if (rng() % 3 == 0) p[rng() % p.size()] = "w";
      gold.push_back(join(g));
      pred.push_back(join(p));
    }
    const auto r = evaluate(pred, gold);
    EXPECT_EQ(r.fa == 1.0, r.ed == 0.0);
    EXPECT_EQ(r.ed == 0.0, r.ta == 1.0);
    EXPECT_GE(r.ta, 0.0);
    EXPECT_LE(r.ta, 1.0);
  }
}

TEST(Evaluate, TableAndJson) {
  const auto r = evaluate({kFlipped}, {kGold});
  const auto j = r.to_json();
  EXPECT_EQ(j["n"], 1);
  EXPECT_EQ(j["ed"], 1.0);
  EXPECT_NE(render_table(r).find("FA     0.00%"), std::string::npos);
}

}  // namespace
}  // namespace atomfol
