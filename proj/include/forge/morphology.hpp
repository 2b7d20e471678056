#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "forge/detail/default_data.hpp"
#include "forge/token.hpp"

namespace forge {

// Lemma -> simple past for verbs that do not take "-ed".
class IrregularVerbs {
 public:
  IrregularVerbs() = default;

  static IrregularVerbs parse(std::string_view content) {
    IrregularVerbs table;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      const auto cols = split_words(line);
      if (cols.size() != 2) throw LoadError("expected two columns: lemma and past form", line_no);
      if (!table.past_.emplace(to_lower(cols[0]), to_lower(cols[1])).second) {
        throw ValidationError("line " + std::to_string(line_no) + ": duplicate lemma \"" +
                              cols[0] + "\"");
      }
    }
    return table;
  }

  static IrregularVerbs load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open irregular verb table " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
  }

  // The shipped table (data/irregular_verbs.tsv).
  static const IrregularVerbs& builtin() {
    static const IrregularVerbs table = parse(detail::kDefaultIrregularVerbs);
    return table;
  }

  std::optional<std::string> past(std::string_view lemma) const {
    auto it = past_.find(to_lower(lemma));
    if (it == past_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const noexcept { return past_.size(); }

 private:
  std::map<std::string, std::string> past_;
};

namespace detail {

inline bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return true;
    default: return false;
  }
}

inline bool is_consonant(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) && !is_vowel(c);
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Regular past of a known lemma. `doubled` is true when the -ing form showed a
// doubled final consonant (stopping, preferring).
inline std::string regular_past(const std::string& lemma, bool doubled) {
  if (doubled) return lemma + lemma.back() + "ed";
  if (ends_with(lemma, "e")) return lemma + "d";
  if (lemma.size() >= 2 && lemma.back() == 'y' && is_consonant(lemma[lemma.size() - 2])) {
    return lemma.substr(0, lemma.size() - 1) + "ied";
  }
  return lemma + "ed";
}

}  // namespace detail

// Simple past of a VBG token: the irregular table wins, otherwise the regular
// -ed rules (e-drop, y->ied, consonant doubling as seen in the -ing form).
// Without a lemma the stem is recovered from the -ing surface. The result is
// lowercase and tagged VBD; nullopt when no past form can be derived.
inline std::optional<Token> retense_vbg_to_past(const Token& verb,
                                                const IrregularVerbs& irregular = IrregularVerbs::builtin()) {
  if (verb.pos != "VBG") return std::nullopt;
  const auto surface = to_lower(verb.text);
  const bool has_ing = detail::ends_with(surface, "ing") && surface.size() > 4;
  const std::string stem = has_ing ? surface.substr(0, surface.size() - 3) : std::string();
  const bool doubled_stem = stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2] &&
                            detail::is_consonant(stem.back());

  std::optional<std::string> past;
  const auto lemma = to_lower(verb.lemma);
  if (!lemma.empty()) {
    past = irregular.past(lemma);
    if (!past) {
      const bool doubled = doubled_stem && !lemma.empty() && stem.size() == lemma.size() + 1 &&
                           stem.compare(0, lemma.size(), lemma) == 0;
      past = detail::regular_past(lemma, doubled);
    }
  } else {
    if (!has_ing) return std::nullopt;
    past = irregular.past(stem);
    if (!past) past = irregular.past(stem + "e");
    if (!past && doubled_stem) past = irregular.past(stem.substr(0, stem.size() - 1));
    if (!past) {
      // "stat" + "ed" == "state" + "d"; doubled stems already carry the double.
      if (stem.size() >= 2 && stem.back() == 'y' && detail::is_consonant(stem[stem.size() - 2])) {
        past = stem.substr(0, stem.size() - 1) + "ied";
      } else if (detail::ends_with(stem, "e")) {
        past = stem + "d";
      } else {
        past = stem + "ed";
      }
    }
  }

  Token out = verb;
  out.text = *past;
  out.pos = "VBD";
  return out;
}

enum class BeTense {
  kPresent,  // always is/are
  kMatrix,   // copy the tense of the matrix clause's finite verb
};

// Picks is/are/was/were for a copula inserted after `subject_span`.
// Number comes from the subject head (the token whose head lies outside the
// span, else the rightmost noun); tense from the first finite verb of
// `matrix_clause`. nullopt when the matrix clause has no finite verb.
inline std::optional<std::string> select_be_verb(const TokenList& subject_span, const TokenList& matrix_clause,
                                                 BeTense tense = BeTense::kPresent) {
  std::optional<bool> past;
  for (const auto& t : matrix_clause) {
    if (t.pos == "VBD" || t.pos == "VBN") {
      past = true;
      break;
    }
    if (t.pos == "VBZ" || t.pos == "VBP" || t.pos == "MD") {
      past = false;
      break;
    }
  }
  if (!past) return std::nullopt;

  std::set<std::size_t> positions;
  for (const auto& t : subject_span) {
    if (t.origin) positions.insert(t.origin->position);
  }
  const Token* head = nullptr;
  if (positions.size() == subject_span.size()) {
    for (const auto& t : subject_span) {
      if (!positions.count(t.head)) {
        head = &t;
        break;
      }
    }
  }
  if (!head) {
    for (const auto& t : subject_span) {
      if (t.pos.rfind("NN", 0) == 0 || t.pos == "PRP") head = &t;
    }
  }
  bool plural = false;
  if (head) {
    const auto w = to_lower(head->text);
    plural = head->pos == "NNS" || head->pos == "NNPS" || w == "they" || w == "we" || w == "you";
  }

  const bool use_past = tense == BeTense::kMatrix && *past;
  if (use_past) return std::string(plural ? "were" : "was");
  return std::string(plural ? "are" : "is");
}

}  // namespace forge
