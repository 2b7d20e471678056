#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "forge/document.hpp"
#include "forge/token.hpp"

// JSON-lines document interchange.
//
// One document per line:
//   {"doc_id": "...",
//    "sentences": [{"tokens": [{"text", "pos", "head", "deprel", "lemma"}], "fragment": false}],
//    "clusters": [[{"sent", "start", "end", "kind"}]]}
//
// `head` is 1-based with 0 for the root; `sent` is 0-based; `start`/`end` are
// 1-based and inclusive. `lemma`, `fragment` and `clusters` are optional.
namespace forge {

using json = nlohmann::json;

namespace detail {

template <typename T>
T required(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(where + ": \"" + key + "\" has the wrong type");
  }
}

}  // namespace detail

inline Document document_from_json(const json& j) {
  const auto doc_id = detail::required<std::string>(j, "doc_id", "document");
  const auto sentences_json = detail::required<json>(j, "sentences", doc_id);
  if (!sentences_json.is_array()) throw ValidationError(doc_id + ": \"sentences\" must be an array");

  std::vector<AnnotatedSentence> sentences;
  for (std::size_t s = 0; s < sentences_json.size(); ++s) {
    const auto where = doc_id + " sentence " + std::to_string(s);
    const auto& sj = sentences_json[s];
    const auto tokens_json = detail::required<json>(sj, "tokens", where);
    if (!tokens_json.is_array()) throw ValidationError(where + ": \"tokens\" must be an array");
    std::vector<Token> tokens;
    for (const auto& tj : tokens_json) {
      Token t;
      t.text = detail::required<std::string>(tj, "text", where);
      t.pos = detail::required<std::string>(tj, "pos", where);
      t.deprel = detail::required<std::string>(tj, "deprel", where);
      const auto head = detail::required<long long>(tj, "head", where);
      if (head < 0) throw ValidationError(where + ": negative head");
      t.head = static_cast<std::size_t>(head);
      if (tj.contains("lemma") && !tj["lemma"].is_null()) t.lemma = detail::required<std::string>(tj, "lemma", where);
      tokens.push_back(std::move(t));
    }
    const bool fragment = sj.is_object() && sj.contains("fragment") && sj["fragment"].is_boolean() &&
                          sj["fragment"].get<bool>();
    try {
      sentences.emplace_back(std::move(tokens), s, fragment);
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  MentionClusterSet clusters;
  if (j.contains("clusters")) {
    const auto& cj = j["clusters"];
    if (!cj.is_array()) throw ValidationError(doc_id + ": \"clusters\" must be an array");
    for (const auto& cluster_json : cj) {
      if (!cluster_json.is_array()) throw ValidationError(doc_id + ": each cluster must be an array");
      std::vector<MentionSpan> cluster;
      for (const auto& mj : cluster_json) {
        const auto where = doc_id + " mention";
        const auto sent = detail::required<long long>(mj, "sent", where);
        const auto start = detail::required<long long>(mj, "start", where);
        const auto end = detail::required<long long>(mj, "end", where);
        if (sent < 0 || start < 1 || end < start) throw ValidationError(where + ": bad span indices");
        MentionSpan span;
        span.sentence = static_cast<std::size_t>(sent);
        span.start = static_cast<std::size_t>(start);
        span.end = static_cast<std::size_t>(end);
        const auto kind_text = mj.contains("kind") ? detail::required<std::string>(mj, "kind", where) : "nominal";
        const auto kind = parse_mention_kind(kind_text);
        if (!kind) throw ValidationError(where + ": unknown kind \"" + kind_text + "\"");
        span.kind = *kind;
        cluster.push_back(span);
      }
      clusters.clusters.push_back(std::move(cluster));
    }
  }
  return Document(doc_id, std::move(sentences), std::move(clusters));
}

inline json document_to_json(const Document& doc) {
  json sentences = json::array();
  for (const auto& s : doc.sentences()) {
    json tokens = json::array();
    for (const auto& t : s.tokens()) {
      json tj = {{"text", t.text}, {"pos", t.pos}, {"head", t.head}, {"deprel", t.deprel}};
      if (!t.lemma.empty()) tj["lemma"] = t.lemma;
      tokens.push_back(std::move(tj));
    }
    json sj = {{"tokens", std::move(tokens)}};
    if (s.fragment()) sj["fragment"] = true;
    sentences.push_back(std::move(sj));
  }
  json clusters = json::array();
  for (const auto& c : doc.clusters().clusters) {
    json cj = json::array();
    for (const auto& m : c) {
      cj.push_back({{"sent", m.sentence}, {"start", m.start}, {"end", m.end}, {"kind", to_string(m.kind)}});
    }
    clusters.push_back(std::move(cj));
  }
  return {{"doc_id", doc.doc_id()}, {"sentences", std::move(sentences)}, {"clusters", std::move(clusters)}};
}

struct IngestDiagnostic {
  std::size_t line = 0;
  std::string message;
};

// Streams documents from JSON lines. Malformed lines and repeated doc_ids are
// skipped and recorded; blank lines are ignored.
class DocumentReader {
 public:
  explicit DocumentReader(std::istream& in) : in_(&in) {}

  std::optional<Document> next() {
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      try {
        auto doc = document_from_json(json::parse(line));
        if (!seen_.insert(doc.doc_id()).second) {
          skip("duplicate doc_id " + doc.doc_id());
          continue;
        }
        ++read_;
        return doc;
      } catch (const json::parse_error& e) {
        skip(std::string("invalid JSON: ") + e.what());
      } catch (const ValidationError& e) {
        skip(e.what());
      }
    }
    return std::nullopt;
  }

  std::size_t documents_read() const noexcept { return read_; }
  std::size_t lines_skipped() const noexcept { return diagnostics_.size(); }
  const std::vector<IngestDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  void skip(std::string message) { diagnostics_.push_back({line_no_, std::move(message)}); }

  std::istream* in_;
  std::size_t line_no_ = 0;
  std::size_t read_ = 0;
  std::set<std::string> seen_;
  std::vector<IngestDiagnostic> diagnostics_;
};

struct IngestResult {
  std::vector<Document> documents;
  std::vector<IngestDiagnostic> diagnostics;
};

inline IngestResult ingest(std::istream& in) {
  DocumentReader reader(in);
  IngestResult out;
  while (auto doc = reader.next()) out.documents.push_back(std::move(*doc));
  out.diagnostics = reader.diagnostics();
  return out;
}

// Unreadable files are fatal (LoadError); bad lines are not.
inline IngestResult ingest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path);
  return ingest(in);
}

}  // namespace forge
