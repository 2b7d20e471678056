#include <gtest/gtest.h>

#include "forge/morphology.hpp"

using namespace forge;

namespace {

Token vbg(std::string text, std::string lemma = {}) {
  Token t = word(std::move(text), "VBG");
  t.lemma = std::move(lemma);
  return t;
}

std::string past(const Token& t) {
  const auto out = retense_vbg_to_past(t);
  return out ? out->text : "<none>";
}

}  // namespace

// Hand-checked simple past forms, recovered from the -ing surface alone.
TEST(Retense, FiftyVerbsFromSurface) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"Stating", "stated"},     {"Trailing", "trailed"},   {"Running", "ran"},        {"hoping", "hoped"},
      {"hopping", "hopped"},     {"making", "made"},        {"studying", "studied"},   {"playing", "played"},
      {"seeing", "saw"},         {"being", "was"},          {"dying", "died"},         {"panicking", "panicked"},
      {"fixing", "fixed"},       {"agreeing", "agreed"},    {"visiting", "visited"},   {"preferring", "preferred"},
      {"writing", "wrote"},      {"hitting", "hit"},        {"swimming", "swam"},      {"taking", "took"},
      {"coming", "came"},        {"saying", "said"},        {"paying", "paid"},        {"leaving", "left"},
      {"going", "went"},         {"doing", "did"},          {"having", "had"},         {"getting", "got"},
      {"beginning", "began"},    {"building", "built"},     {"thinking", "thought"},   {"bringing", "brought"},
      {"sitting", "sat"},        {"winning", "won"},        {"calling", "called"},     {"filling", "filled"},
      {"cleaning", "cleaned"},   {"closing", "closed"},     {"arriving", "arrived"},   {"carrying", "carried"},
      {"rallying", "rallied"},   {"stopping", "stopped"},   {"planning", "planned"},   {"trying", "tried"},
      {"missing", "missed"},     {"singing", "sang"},       {"focusing", "focused"},   {"dancing", "danced"},
      {"using", "used"},         {"ending", "ended"},
  };
  ASSERT_EQ(cases.size(), 50u);
  for (const auto& [in, expected] : cases) EXPECT_EQ(past(vbg(in)), expected) << in;
}

TEST(Retense, LemmaTakesPrecedence) {
  EXPECT_EQ(past(vbg("Stating", "state")), "stated");
  EXPECT_EQ(past(vbg("winning", "win")), "won");
  EXPECT_EQ(past(vbg("stopping", "stop")), "stopped");
  EXPECT_EQ(past(vbg("visiting", "visit")), "visited");
  EXPECT_EQ(past(vbg("carrying", "carry")), "carried");
  EXPECT_EQ(past(vbg("running", "run")), "ran");
}

TEST(Retense, ResultIsLowercaseVbd) {
  const auto out = retense_vbg_to_past(vbg("Trailing", "trail"));
  ASSERT_TRUE(out);
  EXPECT_EQ(out->text, "trailed");
  EXPECT_EQ(out->pos, "VBD");
}

TEST(Retense, FailsOnNonGerund) {
  EXPECT_FALSE(retense_vbg_to_past(word("stated", "VBD")));
  EXPECT_FALSE(retense_vbg_to_past(vbg("sing")));
}

TEST(IrregularVerbs, TableLoadsAndRejectsDuplicates) {
  EXPECT_GT(IrregularVerbs::builtin().size(), 100u);
  EXPECT_EQ(IrregularVerbs::builtin().past("WIN"), "won");
  EXPECT_THROW(IrregularVerbs::parse("go\twent\ngo\twent\n"), ValidationError);
  EXPECT_THROW(IrregularVerbs::parse("go went gone\n"), LoadError);
  const auto custom = IrregularVerbs::parse("# c\nplay\tplayed\n");
  EXPECT_EQ(retense_vbg_to_past(vbg("going"), custom)->text, "goed");
}

// Every (subject number, matrix verb, tense mode) combination against an
// independently written decision table.
TEST(SelectBeVerb, ExhaustiveDecisionTable) {
  struct Subject {
    std::vector<Token> tokens;
    bool plural;
  };
  auto np = [](std::vector<std::pair<std::string, std::string>> words) {
    std::vector<Token> t;
    for (auto& [w, p] : words) t.push_back(word(w, p));
    return t;
  };
  const std::vector<Subject> subjects = {
      {np({{"The", "DT"}, {"frigidarium", "NN"}}), false},
      {np({{"The", "DT"}, {"Sharks", "NNPS"}}), true},
      {np({{"Walker", "NNP"}}), false},
      {np({{"the", "DT"}, {"players", "NNS"}}), true},
      {np({{"they", "PRP"}}), true},
      {np({{"he", "PRP"}}), false},
  };
  const std::vector<std::pair<std::string, std::optional<bool>>> verbs = {
      {"VBD", true}, {"VBN", true}, {"VBZ", false}, {"VBP", false}, {"MD", false}, {"NN", std::nullopt}};

  for (const auto& subject : subjects) {
    for (const auto& [tag, is_past] : verbs) {
      const TokenList matrix({word("x", "DT"), word("v", tag), word(".", ".")});
      for (auto mode : {BeTense::kPresent, BeTense::kMatrix}) {
        const auto got = select_be_verb(TokenList(subject.tokens), matrix, mode);
        if (!is_past) {
          EXPECT_FALSE(got);
          continue;
        }
        std::string expected;
        if (mode == BeTense::kMatrix && *is_past) {
          expected = subject.plural ? "were" : "was";
        } else {
          expected = subject.plural ? "are" : "is";
        }
        ASSERT_TRUE(got);
        EXPECT_EQ(*got, expected) << subject.tokens.back().text << " " << tag;
      }
    }
  }
}

TEST(SelectBeVerb, HeadFoundThroughOrigins) {
  // "The keeper of the lights": head is "keeper" (head outside the span), not "lights".
  std::vector<Token> t = {word("The", "DT"), word("keeper", "NN"), word("of", "IN"), word("the", "DT"),
                          word("lights", "NNS")};
  const std::size_t heads[] = {2, 9, 2, 5, 3};
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i].head = heads[i];
    t[i].origin = Origin{0, i + 1};
  }
  const TokenList matrix({word("was", "VBD")});
  EXPECT_EQ(select_be_verb(TokenList(t), matrix, BeTense::kMatrix), "was");
  EXPECT_EQ(select_be_verb(TokenList(t), matrix, BeTense::kPresent), "is");
}
