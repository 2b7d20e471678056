#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "forge/metrics.hpp"

using namespace forge;
using namespace forge::testing;

namespace {

Tokens random_words(std::mt19937_64& rng, std::size_t vocab, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len), word(0, vocab - 1);
  Tokens out(len(rng));
  for (auto& w : out) w = "w" + std::to_string(word(rng));
  return out;
}

AnalysisItem connective_item(const std::string& predicted) {
  AnalysisItem item;
  item.gold = split_words("The rain fell and the river rose .");
  item.prediction = split_words("The rain fell " + predicted + " the river rose .");
  item.connective = "and";
  item.connective_slot = ConnectiveSlot{4, 1};
  return item;
}

}  // namespace

TEST(Sari, WorkedExample) {
  const auto s = sari(split_words("a b c d"), split_words("a b c"), split_words("a b d"));
  EXPECT_NEAR(s.sari, 500.0 / 9.0, 1e-9);
  const SariScores expected[4] = {{2.0 / 3, 1, 0}, {2.0 / 3, 0, 2.0 / 3}, {0, 0, 2.0 / 3}, {1, 1, 1}};
  for (std::size_t n = 0; n < 4; ++n) {
    EXPECT_NEAR(s.per_n[n].keep, expected[n].keep, 1e-12) << n + 1;
    EXPECT_NEAR(s.per_n[n].add, expected[n].add, 1e-12) << n + 1;
    EXPECT_NEAR(s.per_n[n].del, expected[n].del, 1e-12) << n + 1;
  }
}

TEST(Sari, PerfectOutputScoresHundred) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto in = random_words(rng, 6, 1, 8), ref = random_words(rng, 6, 1, 8);
    EXPECT_EQ(sari(in, ref, ref).sari, 100.0);
  }
}

TEST(Sari, EmptyInputRejected) {
  EXPECT_THROW(sari(Tokens{}, split_words("a"), split_words("a")), std::invalid_argument);
  EXPECT_THROW(sari(split_words("a"), Tokens{}, split_words("a")), std::invalid_argument);
}

TEST(Sari, MatchesNaiveOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 3000; ++t) {
    const auto in = random_words(rng, 10, 1, 8), out = random_words(rng, 10, 1, 8), ref = random_words(rng, 10, 1, 8);
    const auto got = sari(in, out, ref);
    const auto want = naive_sari(in, out, ref);
    ASSERT_NEAR(got.sari, want.score, 1e-9);
    for (std::size_t n = 0; n < 4; ++n) {
      ASSERT_NEAR(got.per_n[n].keep, want.keep[n], 1e-12);
      ASSERT_NEAR(got.per_n[n].add, want.add[n], 1e-12);
      ASSERT_NEAR(got.per_n[n].del, want.del[n], 1e-12);
    }
  }
}

// Every (I, O, R) over a two-word vocabulary with lengths 1..3.
TEST(Sari, ExhaustiveSmallVocabulary) {
  std::vector<Tokens> all;
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t bits = 0; bits < (1u << len); ++bits) {
      Tokens s;
      for (std::size_t k = 0; k < len; ++k) s.push_back((bits >> k) & 1 ? "x" : "y");
      all.push_back(s);
    }
  }
  for (const auto& i : all) {
    for (const auto& o : all) {
      for (const auto& r : all) ASSERT_NEAR(sari(i, o, r).sari, naive_sari(i, o, r).score, 1e-9);
    }
  }
}

TEST(ExactMatch, Cases) {
  EXPECT_TRUE(exact_match("The cat sat .", "The cat sat ."));
  EXPECT_FALSE(exact_match("The cat sat .", "the cat sat ."));
  EXPECT_TRUE(exact_match("The cat sat .", "the cat sat .", true));
  EXPECT_TRUE(exact_match("The  cat sat .", "The cat sat ."));
  EXPECT_FALSE(exact_match("The cat sat", "The cat sat ."));
}

TEST(Align, IdentityAndGap) {
  const auto same = align_tokens(split_words("a b c"), split_words("a b c"));
  EXPECT_EQ(same.distance, 0u);
  EXPECT_EQ(same.gold_to_output, (std::vector<std::optional<std::size_t>>{0, 1, 2}));
  const auto gap = align_tokens(split_words("a c"), split_words("a b c"));
  EXPECT_EQ(gap.distance, 1u);
  EXPECT_EQ(gap.gold_to_output, (std::vector<std::optional<std::size_t>>{0, std::nullopt, 1}));
}

TEST(Align, DistanceMatchesRecursiveOracleAndPathIsConsistent) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const auto out = random_words(rng, 4, 0, 7), gold = random_words(rng, 4, 0, 7);
    const auto a = align_tokens(out, gold);
    ASSERT_EQ(a.distance, naive_edit_distance(out, gold));
    // Recompute the cost of the returned alignment.
    std::size_t cost = 0, aligned = 0;
    std::optional<std::size_t> prev;
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (!a.gold_to_output[g]) {
        ++cost;
        continue;
      }
      const auto o = *a.gold_to_output[g];
      ASSERT_TRUE(!prev || o > *prev);
      prev = o;
      ++aligned;
      if (out[o] != gold[g]) ++cost;
    }
    cost += out.size() - aligned;
    ASSERT_EQ(cost, a.distance);
  }
}

TEST(Analyze, ConnectiveAccuracyAndFillers) {
  std::vector<AnalysisItem> items;
  for (int k = 0; k < 7; ++k) items.push_back(connective_item("and"));
  for (int k = 0; k < 2; ++k) items.push_back(connective_item("but"));
  items.push_back(connective_item("while the sky cleared"));
  const auto report = analyze(items, {"and", "but"});
  const auto& row = report.connectives.at("and");
  EXPECT_EQ(row.total, 10u);
  EXPECT_DOUBLE_EQ(row.accuracy(), 0.7);
  EXPECT_EQ(row.fillers.at("but"), 2u);
  EXPECT_EQ(row.fillers.at(std::string(kOther)), 1u);
  const auto top = row.top_fillers();
  EXPECT_EQ(top[0].first, "and");
  EXPECT_DOUBLE_EQ(top[0].second, 0.7);
}

TEST(Analyze, PronounReplacedByNameIsOther) {
  AnalysisItem item;
  item.gold = split_words("Rider scored . He smiled .");
  item.prediction = split_words("Rider scored . Rider smiled .");
  item.pronoun_positions = {4};
  const auto report = analyze({item}, {});
  EXPECT_EQ(report.pronoun_counts.at("he").at(std::string(kOther)), 1u);

  item.prediction = split_words("Rider scored . She smiled .");
  const auto swapped = analyze({item}, {});
  EXPECT_EQ(swapped.pronoun_counts.at("he").at("she"), 1u);
}

TEST(Analyze, ItemsWithoutTargetsAreSkipped) {
  AnalysisItem item;
  item.gold = split_words("A b .");
  item.prediction = item.gold;
  const auto report = analyze({item}, {});
  EXPECT_EQ(report.items, 0u);
  EXPECT_EQ(report.skipped, 1u);
  EXPECT_EQ(report.diagnostics.size(), 1u);
}

TEST(Analyze, ItemFromText) {
  FusionExample ex;
  ex.coherent_first = TokenList::from_text("Ruiz ordered his shot retaken because players entered the area .");
  ex.connective = "because";
  const auto item = analysis_item_from_text(ex, split_words("Ruiz ordered his shot retaken ."));
  ASSERT_TRUE(item.connective_slot);
  EXPECT_EQ(item.connective_slot->start, 6u);
  EXPECT_EQ(item.pronoun_positions, std::vector<std::size_t>{3});
}

TEST(Analyze, JsonShape) {
  std::vector<AnalysisItem> items = {connective_item("and"), connective_item("but")};
  const auto j = report_to_json(analyze(items, {"and", "but"}));
  EXPECT_EQ(j["items"], 2);
  EXPECT_DOUBLE_EQ(j["connective_table"]["and"]["accuracy"].get<double>(), 0.5);
  EXPECT_EQ(j["connective_table"]["and"]["count"], 2);
  EXPECT_TRUE(j["pronoun_confusion"].is_object());
}

TEST(Analyze, MergeEqualsWholeRun) {
  std::vector<AnalysisItem> a = {connective_item("and"), connective_item("but")}, b = {connective_item("and")};
  auto merged = analyze(a, {"and", "but"});
  merged.merge(analyze(b, {"and", "but"}));
  std::vector<AnalysisItem> all = a;
  all.insert(all.end(), b.begin(), b.end());
  const auto whole = analyze(all, {"and", "but"});
  EXPECT_EQ(merged.connectives.at("and").total, whole.connectives.at("and").total);
  EXPECT_EQ(merged.connectives.at("and").correct, whole.connectives.at("and").correct);
  EXPECT_EQ(merged.items, whole.items);
}
