#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forge/token.hpp"

namespace forge {

enum class DiscourseType {
  kApposition,
  kRelativeClause,
  kCataphora,
  kVerbPhraseCoordination,
  kNone,
  kAnaphora,
  kInnerConnective,
  kSentenceCoordination,
  kInnerConnectiveAnaphora,
  kForwardConnective,
  kSentenceCoordinationAnaphora,
  kDiscourseConnective,
  kDiscourseConnectiveAnaphora,
};

inline constexpr std::size_t kDiscourseTypeCount = 13;

struct DiscourseTypeInfo {
  DiscourseType type;
  std::string_view code;  // TSV column value
  std::string_view name;  // human-readable category
  bool connective;
  bool anaphora;
};

inline constexpr std::array<DiscourseTypeInfo, kDiscourseTypeCount> kDiscourseTypes = {{
    {DiscourseType::kApposition, "SINGLE_APPOSITION", "Apposition", false, false},
    {DiscourseType::kRelativeClause, "SINGLE_RELATIVE", "Relative clause", false, false},
    {DiscourseType::kCataphora, "SINGLE_CATAPHORA", "Cataphora", false, false},
    {DiscourseType::kVerbPhraseCoordination, "SINGLE_VP_COORD", "Verb phrase coordination", true, false},
    {DiscourseType::kNone, "PAIR_NONE", "None (control)", false, false},
    {DiscourseType::kAnaphora, "PAIR_ANAPHORA", "Anaphora", false, true},
    {DiscourseType::kInnerConnective, "SINGLE_CONN_INNER", "Inner connective", true, false},
    {DiscourseType::kSentenceCoordination, "SINGLE_S_COORD", "Sentence coordination", true, false},
    {DiscourseType::kInnerConnectiveAnaphora, "SINGLE_CONN_INNER_ANAPHORA", "Inner connective + anaphora", true, true},
    {DiscourseType::kForwardConnective, "SINGLE_CONN_START", "Forward connective", true, false},
    {DiscourseType::kSentenceCoordinationAnaphora, "SINGLE_S_COORD_ANAPHORA", "Sentence coordination + anaphora", true, true},
    {DiscourseType::kDiscourseConnective, "PAIR_CONN", "Discourse connective", true, false},
    {DiscourseType::kDiscourseConnectiveAnaphora, "PAIR_CONN_ANAPHORA", "Discourse connective + anaphora", true, true},
}};

inline const DiscourseTypeInfo& info(DiscourseType t) {
  return kDiscourseTypes[static_cast<std::size_t>(t)];
}

inline std::string_view code(DiscourseType t) { return info(t).code; }
inline std::string_view display_name(DiscourseType t) { return info(t).name; }
inline bool involves_connective(DiscourseType t) { return info(t).connective; }
inline bool involves_anaphora(DiscourseType t) { return info(t).anaphora; }

inline std::optional<DiscourseType> parse_discourse_type(std::string_view s) {
  for (const auto& i : kDiscourseTypes) {
    if (i.code == s || i.name == s) return i.type;
  }
  return std::nullopt;
}

struct Provenance {
  std::string doc_id;
  std::size_t first_sentence = 0;
  std::optional<std::size_t> second_sentence;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Where the gold connective sits in the concatenated coherent text.
struct ConnectiveSlot {
  std::size_t start = 1;  // 1-based
  std::size_t length = 1;
  friend bool operator==(const ConnectiveSlot&, const ConnectiveSlot&) = default;
};

// One generated example: the incoherent pair a model must fuse back into
// the coherent original text.
struct FusionExample {
  TokenList incoherent_first;
  TokenList incoherent_second;
  TokenList coherent_first;
  TokenList coherent_second;  // empty for single-sentence origins
  DiscourseType discourse_type = DiscourseType::kNone;
  std::string connective;
  bool has_coref_pronoun = false;
  bool has_coref_nominal = false;
  Provenance provenance;
  std::optional<ConnectiveSlot> connective_slot;

  // The fused text the incoherent pair came from.
  TokenList coherent() const {
    std::vector<Token> all(coherent_first.begin(), coherent_first.end());
    all.insert(all.end(), coherent_second.begin(), coherent_second.end());
    return TokenList(std::move(all));
  }
  TokenList incoherent() const {
    std::vector<Token> all(incoherent_first.begin(), incoherent_first.end());
    all.insert(all.end(), incoherent_second.begin(), incoherent_second.end());
    return TokenList(std::move(all));
  }

  friend bool operator==(const FusionExample&, const FusionExample&) = default;
};

}  // namespace forge
