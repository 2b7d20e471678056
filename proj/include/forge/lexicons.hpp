#pragma once

#include <array>
#include <cstddef>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "forge/detail/default_data.hpp"
#include "forge/token.hpp"

namespace forge {

using Phrase = std::vector<std::string>;

// Lowercase, drop leading/trailing commas, single spaces between tokens.
inline std::string normalize_connective(std::string_view text) {
  auto words = split_words(to_lower(text));
  std::size_t lo = 0, hi = words.size();
  while (lo < hi && words[lo] == ",") ++lo;
  while (hi > lo && words[hi - 1] == ",") --hi;
  return join(Phrase(words.begin() + lo, words.begin() + hi));
}

inline std::string normalize_connective(const Phrase& phrase) {
  return normalize_connective(join(phrase));
}

struct Lexicons {
  std::vector<Phrase> backward_connectives;     // [C_b]
  std::vector<Phrase> intra_sentence_connectives;  // [C_s]
  std::vector<Phrase> forward_connectives;      // [C_f]
  std::vector<std::string> coordinating_conjunctions;  // [C_c]
  std::vector<std::string> relative_pronouns;   // [P_r]
  std::vector<std::string> verb_pos;            // [V]

  bool is_relative_pronoun(std::string_view w) const {
    for (const auto& p : relative_pronouns) {
      if (iequals(p, w)) return true;
    }
    return false;
  }

  bool is_verb_tag(std::string_view tag) const {
    for (const auto& v : verb_pos) {
      if (v == tag) return true;
    }
    return false;
  }

  // Normalized forms of every connective in C_b, C_s, C_f and C_c.
  std::set<std::string> connective_forms() const {
    std::set<std::string> out;
    for (const auto* set : {&backward_connectives, &intra_sentence_connectives, &forward_connectives}) {
      for (const auto& p : *set) out.insert(normalize_connective(p));
    }
    for (const auto& c : coordinating_conjunctions) out.insert(normalize_connective(c));
    out.erase("");
    return out;
  }

  friend bool operator==(const Lexicons&, const Lexicons&) = default;
};

namespace detail {

inline constexpr std::array<std::string_view, 6> kSectionNames = {"C_b", "C_s", "C_f",
                                                                  "C_c", "P_r", "V"};

inline std::string strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// Parses the sectioned lexicon format. Malformed lines raise LoadError with
// the line number; duplicate entries within a set raise ValidationError.
inline Lexicons parse_lexicons(std::string_view content) {
  Lexicons lex;
  std::array<std::set<std::string>, 6> seen;
  int section = -1;
  std::istringstream in{std::string(content)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::strip(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw LoadError("unterminated section header", line_no);
      const auto name = line.substr(1, line.size() - 2);
      section = -1;
      for (std::size_t s = 0; s < detail::kSectionNames.size(); ++s) {
        if (detail::kSectionNames[s] == name) section = static_cast<int>(s);
      }
      if (section < 0) throw LoadError("unknown section [" + name + "]", line_no);
      continue;
    }
    if (section < 0) throw LoadError("entry outside of any section", line_no);

    const auto tokens = split_words(line);
    const auto key = join(tokens);
    const auto& name = detail::kSectionNames[static_cast<std::size_t>(section)];
    if (section >= 3 && tokens.size() != 1) {
      throw LoadError("[" + std::string(name) + "] entries must be single tokens", line_no);
    }
    if (!seen[static_cast<std::size_t>(section)].insert(section == 5 ? key : to_lower(key)).second) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate entry \"" + key +
                            "\" in [" + std::string(name) + "]");
    }
    switch (section) {
      case 0: lex.backward_connectives.push_back(tokens); break;
      case 1: lex.intra_sentence_connectives.push_back(tokens); break;
      case 2: lex.forward_connectives.push_back(tokens); break;
      case 3: lex.coordinating_conjunctions.push_back(tokens[0]); break;
      case 4: lex.relative_pronouns.push_back(tokens[0]); break;
      default: lex.verb_pos.push_back(tokens[0]); break;
    }
  }
  return lex;
}

inline Lexicons load_lexicons(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open lexicon file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicons(buf.str());
}

// Canonical text form, without comments.
inline std::string serialize_lexicons(const Lexicons& lex) {
  std::ostringstream out;
  auto section = [&](std::string_view name, const auto& entries, bool last) {
    out << '[' << name << "]\n";
    for (const auto& e : entries) {
      if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Phrase>) {
        out << join(e) << '\n';
      } else {
        out << e << '\n';
      }
    }
    if (!last) out << '\n';
  };
  section("C_b", lex.backward_connectives, false);
  section("C_s", lex.intra_sentence_connectives, false);
  section("C_f", lex.forward_connectives, false);
  section("C_c", lex.coordinating_conjunctions, false);
  section("P_r", lex.relative_pronouns, false);
  section("V", lex.verb_pos, true);
  return out.str();
}

// The shipped lexicons (data/lexicons.txt).
inline const Lexicons& default_lexicons() {
  static const Lexicons lex = parse_lexicons(detail::kDefaultLexicons);
  return lex;
}

}  // namespace forge
