#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "synthetic_corpus.hpp"
#include "forge/pipeline.hpp"

using namespace forge;
using namespace forge::testing;

namespace {

Document chain(std::size_t n) {
  std::vector<AnnotatedSentence> s;
  for (std::size_t i = 0; i < n; ++i) s.emplace_back(golden_sentence("gym").tokens(), i);
  return Document("chain", std::move(s));
}

FusionExample typed(DiscourseType t, std::string connective = {}) {
  FusionExample ex;
  ex.discourse_type = t;
  ex.connective = std::move(connective);
  ex.coherent_first = TokenList::from_text("A b c .");
  ex.incoherent_first = ex.coherent_first;
  ex.incoherent_second = TokenList::from_text("D e .");
  return ex;
}

}  // namespace

TEST(Candidates, DocumentOrder) {
  const auto c = enumerate_candidates(chain(3));
  const std::vector<Candidate> expected = {{0, std::nullopt}, {0, 1}, {1, std::nullopt}, {1, 2}, {2, std::nullopt}};
  EXPECT_EQ(c, expected);
  EXPECT_EQ(enumerate_candidates(chain(1)).size(), 1u);
}

TEST(Candidates, CountMatchesBruteForce) {
  for (std::size_t n = 1; n <= 20; ++n) {
    std::set<std::pair<std::size_t, std::size_t>> brute;  // (first, second or first)
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (j == i || j == i + 1) brute.insert({i, j});
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& c : enumerate_candidates(chain(n))) got.insert({c.first, c.second.value_or(c.first)});
    EXPECT_EQ(got, brute) << n;
    EXPECT_EQ(enumerate_candidates(chain(n)).size(), 2 * n - 1);
  }
}

TEST(Config, Validation) {
  PipelineConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.negative_rate = 1.5;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.split_ratios = {0.5, 0.5, 0.5};
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_EQ(parse_split_ratios("0.98,0.01,0.01"), (SplitRatios{0.98, 0.01, 0.01}));
  EXPECT_THROW(parse_split_ratios("0.9,0.1"), ConfigError);
  EXPECT_THROW(parse_split_ratios("0.9,x,0.1"), ConfigError);
  EXPECT_THROW(parse_split_ratios("0.9,0.2,-0.1"), ConfigError);
}

TEST(Split, DeterministicAndDegenerateRatios) {
  EXPECT_EQ(assign_split("doc-1"), assign_split("doc-1"));
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(assign_split("d" + std::to_string(i), {1.0, 0.0, 0.0}), Split::kTrain);
    EXPECT_EQ(assign_split("d" + std::to_string(i), {0.0, 0.0, 1.0}), Split::kTest);
  }
  EXPECT_THROW(assign_split(""), ValidationError);
}

TEST(Split, DevFractionNearRatio) {
  std::size_t dev = 0;
  for (int i = 0; i < 10000; ++i) dev += assign_split("synthetic-" + std::to_string(i)) == Split::kDev;
  EXPECT_NEAR(dev / 10000.0, 0.01, 0.004);
}

TEST(GenerateExample, RuizCandidate) {
  const auto& doc = golden("ruiz");
  PipelineConfig cfg;
  std::mt19937_64 rng(1);
  const auto ex = generate_example(doc, {0, std::nullopt}, default_lexicons(), cfg, rng);
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->discourse_type, DiscourseType::kInnerConnectiveAnaphora);
  EXPECT_EQ(ex->incoherent_second.str(), "Brazilian players entered the penalty area before Ruiz 's kick .");
  EXPECT_TRUE(ex->coherent_second.empty());
  EXPECT_TRUE(validate_example(*ex).empty());
}

TEST(GenerateExample, NegativeIsIdentity) {
  std::vector<AnnotatedSentence> s = {AnnotatedSentence(golden_sentence("gym").tokens(), 0),
                                      AnnotatedSentence(golden_sentence("kubler").tokens(), 1)};
  const Document doc("neg", std::move(s));
  PipelineConfig cfg;
  cfg.negative_rate = 1.0;
  std::mt19937_64 rng(1);
  const auto ex = generate_example(doc, {0, 1}, default_lexicons(), cfg, rng);
  ASSERT_TRUE(ex);
  EXPECT_EQ(ex->discourse_type, DiscourseType::kNone);
  EXPECT_TRUE(ex->incoherent_first.same_text(ex->coherent_first));
  EXPECT_TRUE(ex->incoherent_second.same_text(ex->coherent_second));
  EXPECT_TRUE(validate_example(*ex).empty());
  cfg.negative_rate = 0.0;
  EXPECT_FALSE(generate_example(doc, {0, 1}, default_lexicons(), cfg, rng));
}

TEST(GenerateExample, ShortSentenceFiltered) {
  std::vector<AnnotatedSentence> s;
  s.push_back(parse_sentence(
      "Fans NNS 2 nsubj | left VBD 0 root | because IN 5 mark | it PRP 5 nsubj | rained VBD 2 advcl | . . 2 punct"));
  const Document doc("short", std::move(s));
  ASSERT_EQ(doc.sentences()[0].size(), 6u);
  PipelineConfig cfg;
  std::mt19937_64 rng(1);
  EXPECT_FALSE(generate_example(doc, {0, std::nullopt}, default_lexicons(), cfg, rng));
  cfg.min_sentence_tokens = 4;
  EXPECT_FALSE(generate_example(doc, {0, std::nullopt}, default_lexicons(), cfg, rng));  // outputs too short
  cfg.min_sentence_tokens = 1;
  EXPECT_TRUE(generate_example(doc, {0, std::nullopt}, default_lexicons(), cfg, rng));
}

TEST(Downsample, TargetsAndPassThrough) {
  const std::vector<FusionExample> in = {typed(DiscourseType::kInnerConnective, "because"),
                                         typed(DiscourseType::kSentenceCoordination, "and"),
                                         typed(DiscourseType::kDiscourseConnective, "but"),
                                         typed(DiscourseType::kAnaphora),
                                         typed(DiscourseType::kApposition)};
  const auto none = downsample(in, 0.0, 3);
  ASSERT_EQ(none.size(), 2u);
  EXPECT_EQ(none[0].connective, "because");
  EXPECT_EQ(none[1].discourse_type, DiscourseType::kApposition);
  EXPECT_EQ(downsample(in, 1.0, 3).size(), in.size());
  EXPECT_THROW(downsample(in, -0.1, 3), ConfigError);
}

TEST(Downsample, DeterministicUnderSeed) {
  std::vector<FusionExample> in(1000, typed(DiscourseType::kAnaphora));
  const auto a = downsample(in, 0.3, 42), b = downsample(in, 0.3, 42);
  EXPECT_EQ(a.size(), b.size());
}

TEST(Stats, Arithmetic) {
  EXPECT_EQ(compute_stats({}).total, 0u);
  EXPECT_EQ(compute_stats({}).type_percent(DiscourseType::kNone), 0.0);
  const std::vector<FusionExample> four = {typed(DiscourseType::kSentenceCoordination, "and"),
                                           typed(DiscourseType::kDiscourseConnective, "and"),
                                           typed(DiscourseType::kInnerConnective, "because"),
                                           typed(DiscourseType::kApposition)};
  const auto s = compute_stats(four);
  EXPECT_DOUBLE_EQ(s.connective_percent("and"), 50.0);
  EXPECT_DOUBLE_EQ(s.connective_percent(std::string(kNoConnective)), 25.0);
  EXPECT_EQ(s.connectives_by_count().front().first, "and");
  const auto report = format_stats(s);
  EXPECT_NE(report.find("and\t2\t50.0"), std::string::npos);
}

TEST(Stats, MergeIsAssociative) {
  const auto docs = synthetic_corpus({300, 5});
  const auto results = run_pipeline(docs, default_lexicons(), {});
  std::vector<FusionExample> all;
  DatasetStats merged;
  for (const auto& r : results) {
    DatasetStats part;
    for (const auto& ex : r.examples) {
      part.add(ex);
      all.push_back(ex);
    }
    merged.merge(part);
  }
  EXPECT_EQ(merged, compute_stats(all));
}

TEST(Stats, PercentagesMatchRecount) {
  const auto docs = synthetic_corpus({2000, 9});
  std::vector<FusionExample> all;
  for (const auto& r : run_pipeline(docs, default_lexicons(), {}, 4)) {
    all.insert(all.end(), r.examples.begin(), r.examples.end());
  }
  ASSERT_FALSE(all.empty());
  const auto s = compute_stats(all);
  double sum = 0.0;
  for (const auto& t : kDiscourseTypes) {
    std::size_t count = 0;
    for (const auto& ex : all) count += ex.discourse_type == t.type;
    EXPECT_DOUBLE_EQ(s.type_percent(t.type), 100.0 * count / all.size());
    sum += s.type_percent(t.type);
  }
  EXPECT_NEAR(sum, 100.0, 1e-9);
}

TEST(Tsv, RoundTrip) {
  const auto docs = synthetic_corpus({200, 3});
  std::vector<FusionExample> all;
  for (const auto& r : run_pipeline(docs, default_lexicons(), {})) {
    all.insert(all.end(), r.examples.begin(), r.examples.end());
  }
  std::stringstream buf;
  write_tsv(buf, all);
  const auto back = read_tsv(buf);
  ASSERT_EQ(back.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(to_tsv_row(back[i]), to_tsv_row(all[i]));
    EXPECT_EQ(back[i].discourse_type, all[i].discourse_type);
  }
}

TEST(Tsv, MalformedRows) {
  std::istringstream short_row("a\tb\tc\n");
  EXPECT_THROW(read_tsv(short_row), LoadError);
  std::istringstream bad_type("A .\t\tA .\t\tNOPE\t\t0\t0\n");
  EXPECT_THROW(read_tsv(bad_type), LoadError);
  std::istringstream bad_flag("A .\t\tA .\t\tPAIR_NONE\t\t2\t0\n");
  EXPECT_THROW(read_tsv(bad_flag), LoadError);
}
