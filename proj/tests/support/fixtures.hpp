#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "forge/forge.hpp"

#ifndef FORGE_FIXTURE_DIR
#error "FORGE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace forge::testing {

inline std::string fixture_path(const std::string& name) { return std::string(FORGE_FIXTURE_DIR) + "/" + name; }

inline const std::map<std::string, Document>& golden() {
  static const std::map<std::string, Document> docs = [] {
    std::map<std::string, Document> out;
    auto ingested = ingest(fixture_path("golden.jsonl"));
    if (!ingested.diagnostics.empty()) throw std::runtime_error("golden fixture has invalid lines");
    for (auto& d : ingested.documents) out.emplace(d.doc_id(), std::move(d));
    return out;
  }();
  return docs;
}

inline const Document& golden(const std::string& id) { return golden().at(id); }
inline const AnnotatedSentence& golden_sentence(const std::string& id, std::size_t s = 0) {
  return golden(id).sentences().at(s);
}

// "text POS head deprel [lemma]" rows separated by '|'.
inline AnnotatedSentence parse_sentence(const std::string& rows, std::size_t index = 0, bool fragment = false) {
  std::vector<Token> tokens;
  std::stringstream in(rows);
  std::string row;
  while (std::getline(in, row, '|')) {
    const auto cols = split_words(row);
    if (cols.empty()) continue;
    if (cols.size() < 4) throw std::invalid_argument("bad token row: " + row);
    Token t;
    t.text = cols[0];
    t.pos = cols[1];
    t.head = std::stoul(cols[2]);
    t.deprel = cols[3];
    if (cols.size() > 4) t.lemma = cols[4];
    tokens.push_back(std::move(t));
  }
  return AnnotatedSentence(std::move(tokens), index, fragment);
}

// Mutation helpers for negative fixtures. Positions are 1-based.
inline std::vector<Token> raw_tokens(const AnnotatedSentence& s) {
  std::vector<Token> out = s.tokens();
  for (auto& t : out) t.origin.reset();
  return out;
}

template <typename F>
AnnotatedSentence mutate(const AnnotatedSentence& s, F&& edit) {
  auto tokens = raw_tokens(s);
  edit(tokens);
  return AnnotatedSentence(std::move(tokens), s.index(), s.fragment());
}

inline AnnotatedSentence with_pos(const AnnotatedSentence& s, std::size_t i, std::string pos) {
  return mutate(s, [&](std::vector<Token>& t) { t[i - 1].pos = std::move(pos); });
}

inline AnnotatedSentence with_label(const AnnotatedSentence& s, std::size_t i, std::string label) {
  return mutate(s, [&](std::vector<Token>& t) { t[i - 1].deprel = std::move(label); });
}

inline AnnotatedSentence with_text(const AnnotatedSentence& s, std::size_t i, std::string text) {
  return mutate(s, [&](std::vector<Token>& t) { t[i - 1].text = std::move(text); });
}

inline AnnotatedSentence with_head(const AnnotatedSentence& s, std::size_t i, std::size_t head) {
  return mutate(s, [&](std::vector<Token>& t) { t[i - 1].head = head; });
}

// Inserts `tok` so that it becomes token `at`; heads are renumbered and
// tok.head is read in the new numbering.
inline AnnotatedSentence insert_token(const AnnotatedSentence& s, std::size_t at, Token tok) {
  return mutate(s, [&](std::vector<Token>& t) {
    for (auto& x : t) {
      if (x.head >= at) ++x.head;
    }
    t.insert(t.begin() + static_cast<std::ptrdiff_t>(at - 1), std::move(tok));
  });
}

inline Token dep_token(std::string text, std::string pos, std::size_t head, std::string label) {
  Token t;
  t.text = std::move(text);
  t.pos = std::move(pos);
  t.head = head;
  t.deprel = std::move(label);
  return t;
}

}  // namespace forge::testing
