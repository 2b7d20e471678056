#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "forge/token.hpp"

namespace forge {

enum class MentionKind { kPronoun, kNominal, kName };

inline std::string_view to_string(MentionKind k) {
  switch (k) {
    case MentionKind::kPronoun: return "pronoun";
    case MentionKind::kNominal: return "nominal";
    case MentionKind::kName: return "name";
  }
  return "nominal";
}

inline std::optional<MentionKind> parse_mention_kind(std::string_view s) {
  if (s == "pronoun") return MentionKind::kPronoun;
  if (s == "nominal") return MentionKind::kNominal;
  if (s == "name") return MentionKind::kName;
  return std::nullopt;
}

inline bool is_pronoun_pos(std::string_view pos) { return pos == "PRP" || pos == "PRP$"; }

// A mention inside a document: 0-based sentence, 1-based inclusive token range.
struct MentionSpan {
  std::size_t sentence = 0;
  std::size_t start = 1;
  std::size_t end = 1;
  MentionKind kind = MentionKind::kNominal;

  std::size_t length() const noexcept { return end - start + 1; }
  friend bool operator==(const MentionSpan&, const MentionSpan&) = default;
};

struct MentionClusterSet {
  std::vector<std::vector<MentionSpan>> clusters;

  bool empty() const noexcept { return clusters.empty(); }
  friend bool operator==(const MentionClusterSet&, const MentionClusterSet&) = default;
};

class Document {
 public:
  Document() = default;

  // Validates span bounds and re-derives mention kinds: a span is a pronoun
  // exactly when it is a single PRP/PRP$ token; otherwise the input tag is
  // kept, with a mis-tagged "pronoun" demoted to nominal.
  Document(std::string doc_id, std::vector<AnnotatedSentence> sentences,
           MentionClusterSet clusters = {})
      : doc_id_(std::move(doc_id)), sentences_(std::move(sentences)), clusters_(std::move(clusters)) {
    if (doc_id_.empty()) throw ValidationError("doc_id is empty");
    for (std::size_t s = 0; s < sentences_.size(); ++s) {
      if (sentences_[s].index() != s) {
        throw ValidationError("sentence " + std::to_string(s) + " carries index " +
                              std::to_string(sentences_[s].index()));
      }
    }
    for (auto& cluster : clusters_.clusters) {
      for (auto& span : cluster) {
        if (span.sentence >= sentences_.size()) {
          throw ValidationError("mention refers to sentence " + std::to_string(span.sentence) +
                                " of " + std::to_string(sentences_.size()));
        }
        const auto& sent = sentences_[span.sentence];
        if (span.start == 0 || span.start > span.end || span.end > sent.size()) {
          throw ValidationError("mention span " + std::to_string(span.start) + ".." +
                                std::to_string(span.end) + " outside sentence " +
                                std::to_string(span.sentence) + " of length " +
                                std::to_string(sent.size()));
        }
        const bool pronoun = span.start == span.end && is_pronoun_pos(sent.pos(span.start));
        if (pronoun) {
          span.kind = MentionKind::kPronoun;
        } else if (span.kind == MentionKind::kPronoun) {
          span.kind = MentionKind::kNominal;
        }
      }
    }
  }

  const std::string& doc_id() const noexcept { return doc_id_; }
  const std::vector<AnnotatedSentence>& sentences() const noexcept { return sentences_; }
  const MentionClusterSet& clusters() const noexcept { return clusters_; }

 private:
  std::string doc_id_;
  std::vector<AnnotatedSentence> sentences_;
  MentionClusterSet clusters_;
};

// Mention pairs --------------------------------------------------------------

// A cluster mention found inside a token list, located by token origins.
struct LocatedMention {
  std::size_t cluster = 0;
  std::size_t start = 1;  // 1-based in the list
  std::size_t length = 1;
  MentionKind kind = MentionKind::kNominal;

  std::size_t last() const noexcept { return start + length - 1; }
  friend bool operator==(const LocatedMention&, const LocatedMention&) = default;
};

struct MentionPair {
  LocatedMention in_b;
  LocatedMention in_a;
  friend bool operator==(const MentionPair&, const MentionPair&) = default;
};

// Every occurrence of `span` inside `list`: positions whose origins run
// contiguously over the span's source tokens.
inline std::vector<std::size_t> locate_span(const TokenList& list, const MentionSpan& span) {
  std::vector<std::size_t> found;
  const std::size_t len = span.length();
  if (len > list.size()) return found;
  for (std::size_t p = 0; p + len <= list.size(); ++p) {
    bool ok = true;
    for (std::size_t k = 0; k < len && ok; ++k) {
      const auto& o = list[p + k].origin;
      ok = o && o->sentence == span.sentence && o->position == span.start + k;
    }
    if (ok) found.push_back(p + 1);
  }
  return found;
}

inline std::vector<LocatedMention> locate_mentions(const TokenList& list,
                                                   const MentionClusterSet& clusters) {
  std::vector<LocatedMention> out;
  for (std::size_t c = 0; c < clusters.clusters.size(); ++c) {
    for (const auto& span : clusters.clusters[c]) {
      for (auto start : locate_span(list, span)) {
        out.push_back({c, start, span.length(), span.kind});
      }
    }
  }
  return out;
}

namespace detail {

inline int kind_rank(MentionKind k) {
  switch (k) {
    case MentionKind::kName: return 2;
    case MentionKind::kNominal: return 1;
    case MentionKind::kPronoun: return 0;
  }
  return 0;
}

}  // namespace detail

// m(b, a): same-entity mention pairs with one span in b and one in a.
//
// b-side spans are chosen longest first and never overlap. Each is paired with
// its cluster's representative in a: the longest name, else the longest
// nominal, else the longest pronoun (leftmost on ties). Result is in b order.
inline std::vector<MentionPair> mention_pairs(const TokenList& a, const TokenList& b,
                                              const MentionClusterSet& clusters) {
  const auto in_a = locate_mentions(a, clusters);
  auto in_b = locate_mentions(b, clusters);

  std::vector<std::optional<LocatedMention>> representative(clusters.clusters.size());
  for (const auto& m : in_a) {
    auto& best = representative[m.cluster];
    if (!best) {
      best = m;
      continue;
    }
    const auto key = [](const LocatedMention& x) {
      return std::tuple(detail::kind_rank(x.kind), x.length);
    };
    if (key(m) > key(*best) || (key(m) == key(*best) && m.start < best->start)) best = m;
  }

  std::stable_sort(in_b.begin(), in_b.end(), [](const auto& x, const auto& y) {
    if (x.length != y.length) return x.length > y.length;
    return x.start < y.start;
  });
  std::vector<bool> taken(b.size() + 1, false);
  std::vector<MentionPair> out;
  for (const auto& m : in_b) {
    if (!representative[m.cluster]) continue;
    bool free = true;
    for (auto p = m.start; p <= m.last() && free; ++p) free = !taken[p];
    if (!free) continue;
    for (auto p = m.start; p <= m.last(); ++p) taken[p] = true;
    out.push_back({m, *representative[m.cluster]});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.in_b.start < y.in_b.start; });
  return out;
}

inline std::vector<MentionPair> mention_pairs(const AnnotatedSentence& a, const AnnotatedSentence& b,
                                              const MentionClusterSet& clusters) {
  return mention_pairs(a.to_list(), b.to_list(), clusters);
}

}  // namespace forge
