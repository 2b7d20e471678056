#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "synthetic_corpus.hpp"
#include "forge/io.hpp"

using namespace forge;
using namespace forge::testing;

TEST(Ingest, GoldenFixture) {
  const auto r = ingest(fixture_path("golden.jsonl"));
  EXPECT_EQ(r.documents.size(), 16u);
  EXPECT_TRUE(r.diagnostics.empty());
  const auto& ruiz = golden("ruiz");
  EXPECT_EQ(ruiz.sentences()[0].token(1).text, "Ruiz");
  EXPECT_EQ(ruiz.clusters().clusters[0].size(), 3u);
}

TEST(Ingest, ThreeDocuments) {
  std::string text;
  for (const auto* id : {"gym", "rider", "kubler"}) text += document_to_json(golden(id)).dump() + "\n";
  std::istringstream in(text);
  EXPECT_EQ(ingest(in).documents.size(), 3u);
}

TEST(Ingest, BadLinesAreSkippedAndCounted) {
  auto bad_span = document_to_json(golden("rider"));
  bad_span["doc_id"] = "bad-span";
  bad_span["clusters"][0][0]["end"] = 99;
  auto missing_pos = document_to_json(golden("gym"));
  missing_pos["doc_id"] = "missing-pos";
  missing_pos["sentences"][0]["tokens"][0].erase("pos");

  std::string text = document_to_json(golden("gym")).dump() + "\n";
  text += bad_span.dump() + "\n";
  text += "{not json\n";
  text += "\n";
  text += missing_pos.dump() + "\n";
  text += document_to_json(golden("gym")).dump() + "\n";  // duplicate doc_id
  text += document_to_json(golden("kubler")).dump() + "\n";
  std::istringstream in(text);
  DocumentReader reader(in);
  std::vector<std::string> ids;
  while (auto d = reader.next()) ids.push_back(d->doc_id());
  EXPECT_EQ(ids, (std::vector<std::string>{"gym", "kubler"}));
  ASSERT_EQ(reader.lines_skipped(), 4u);
  EXPECT_EQ(reader.diagnostics()[0].line, 2u);
  EXPECT_EQ(reader.diagnostics()[1].line, 3u);
  EXPECT_EQ(reader.diagnostics()[2].line, 5u);
  EXPECT_EQ(reader.diagnostics()[3].line, 6u);
}

TEST(Ingest, UnreadableFileIsFatal) { EXPECT_THROW(ingest("/nonexistent/docs.jsonl"), LoadError); }

TEST(Ingest, JsonRoundTrip) {
  for (const auto& [id, doc] : golden()) {
    const auto again = document_from_json(json::parse(document_to_json(doc).dump()));
    EXPECT_EQ(again.doc_id(), id);
    ASSERT_EQ(again.sentences().size(), doc.sentences().size());
    for (std::size_t s = 0; s < doc.sentences().size(); ++s) {
      EXPECT_EQ(again.sentences()[s].tokens(), doc.sentences()[s].tokens());
    }
    EXPECT_EQ(again.clusters(), doc.clusters());
  }
}

// Independent count: every non-blank line that is not deliberately corrupted.
TEST(Ingest, SyntheticCorpusLineCount) {
  SyntheticOptions opt;
  opt.documents = 2000;
  const auto docs = synthetic_corpus(opt);
  std::string text;
  std::size_t corrupted = 0, lines = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto j = document_to_json(docs[i]);
    if (i % 97 == 0) {
      j["sentences"][0]["tokens"][0]["head"] = 500;
      ++corrupted;
    }
    text += j.dump() + "\n";
    ++lines;
  }
  std::istringstream in(text);
  const auto r = ingest(in);
  EXPECT_EQ(r.documents.size(), lines - corrupted);
  EXPECT_EQ(r.diagnostics.size(), corrupted);
}
