#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forge/document.hpp"
#include "forge/edit_ops.hpp"
#include "forge/example.hpp"
#include "forge/lexicons.hpp"
#include "forge/morphology.hpp"
#include "forge/token.hpp"

// Detection and generation for the nine splitting rules.
//
// Each rule has a read-only `match_*` that inspects the annotated input and a
// `generate_*` that rewrites it into two independent sentences using only the
// operations in edit_ops.hpp. Generation returns nullopt when the candidate
// must be aborted (bad indices, failed morphology, too-short output).
namespace forge {

enum class RuleId {
  kDiscourseConnective,
  kAnaphora,
  kForwardConnective,
  kInnerConnective,
  kCataphora,
  kSentenceCoordination,
  kVerbPhraseCoordination,
  kRelativeClause,
  kApposition,
};

inline std::string_view to_string(RuleId r) {
  switch (r) {
    case RuleId::kDiscourseConnective: return "discourse-connective";
    case RuleId::kAnaphora: return "anaphora";
    case RuleId::kForwardConnective: return "forward-connective";
    case RuleId::kInnerConnective: return "inner-connective";
    case RuleId::kCataphora: return "cataphora";
    case RuleId::kSentenceCoordination: return "sentence-coordination";
    case RuleId::kVerbPhraseCoordination: return "vp-coordination";
    case RuleId::kRelativeClause: return "relative-clause";
    case RuleId::kApposition: return "apposition";
  }
  return "?";
}

// Anchor positions (1-based, 0 = unused) found by a rule's detection step.
struct RuleMatch {
  RuleId rule = RuleId::kDiscourseConnective;
  std::size_t connective_pos = 0;     // i: first token of the connective / cc
  std::size_t connective_length = 0;  // |S| of the lexicon entry
  std::size_t span_length = 0;        // tokens deleted: |S| plus an absorbed comma
  std::size_t first_comma = 0;        // i of the comma-delimited clause / split comma
  std::size_t second_comma = 0;       // j
  std::size_t conj = 0;               // j of cc/conj rules
  std::size_t subject = 0;            // k: nsubj (coordination) or root (VP coordination)
  std::size_t subject_end = 0;        // last token of a subject span (cataphora)
  std::size_t appositive = 0;         // k of the appos token
  std::size_t antecedent_left = 0;    // r: leftmost token of the antecedent subtree
  std::string matched_connective;     // normalized

  friend bool operator==(const RuleMatch&, const RuleMatch&) = default;
};

struct CorefFlags {
  bool pronoun = false;
  bool nominal = false;
  friend bool operator==(const CorefFlags&, const CorefFlags&) = default;
};

struct GenerationOutcome {
  TokenList sentence_1;
  TokenList sentence_2;
  std::vector<RuleId> applied_rules;
  std::string connective;
  CorefFlags coref;
  std::optional<ConnectiveSlot> connective_slot;  // in the original text

  friend bool operator==(const GenerationOutcome&, const GenerationOutcome&) = default;
};

struct EngineConfig {
  IrregularVerbs verbs = IrregularVerbs::builtin();
  BeTense be_tense = BeTense::kPresent;
  std::size_t min_content_tokens = 2;
};

// Rules that were matched but aborted during generation, in attempt order.
struct DispatchTrace {
  std::vector<RuleId> aborted;
};

// Sentence finalization ------------------------------------------------------

inline bool is_terminal(std::string_view t) { return t == "." || t == "!" || t == "?"; }

// Strips dangling leading/trailing commas, ends the sentence with a period
// (a trailing "," or ";" becomes "."), and capitalizes the first word.
inline TokenList finalize(const TokenList& x) {
  std::vector<Token> t(x.begin(), x.end());
  auto dangling = [](const Token& tok) {
    return tok.text == "," || tok.text == ";" || tok.text == ":";
  };
  while (!t.empty() && dangling(t.front())) t.erase(t.begin());
  while (!t.empty() && dangling(t.back())) t.pop_back();
  while (t.size() >= 2 && is_terminal(t.back().text) && dangling(t[t.size() - 2])) {
    t.erase(t.end() - 2);
  }
  if (t.empty()) return TokenList(std::move(t), true);
  if (!is_terminal(t.back().text)) t.push_back(word(".", "."));
  for (auto& tok : t) {
    if (is_punctuation(tok.text)) continue;
    auto& c = tok.text.front();
    if (std::islower(static_cast<unsigned char>(c))) c = static_cast<char>(std::toupper(c));
    break;
  }
  return TokenList(std::move(t), true);
}

inline std::size_t content_tokens(const TokenList& x) {
  return static_cast<std::size_t>(
      std::count_if(x.begin(), x.end(), [](const Token& t) { return !is_punctuation(t.text); }));
}

namespace detail {

inline bool long_enough(const TokenList& x, const EngineConfig& cfg) {
  return content_tokens(x) >= cfg.min_content_tokens;
}

// Case-insensitive phrase match starting at 1-based position i.
inline bool phrase_at(const std::vector<Token>& z, std::size_t i, const Phrase& p) {
  if (i == 0 || p.empty() || i - 1 + p.size() > z.size()) return false;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!iequals(z[i - 1 + k].text, p[k])) return false;
  }
  return true;
}

// Tokens first..last of z with origins cleared: copied text, not moved text.
inline TokenList copy_span(const AnnotatedSentence& z, std::size_t first, std::size_t last) {
  std::vector<Token> out;
  for (std::size_t k = first; k <= last; ++k) {
    Token t = z.token(k);
    t.origin.reset();
    out.push_back(std::move(t));
  }
  return TokenList(std::move(out), true);
}

// Slot covering `length` tokens at `pos` in `z`, without edge commas.
inline ConnectiveSlot slot_without_commas(const std::vector<Token>& z, std::size_t pos,
                                          std::size_t length, std::size_t offset = 0) {
  std::size_t lo = pos, hi = pos + length - 1;
  while (lo < hi && z[lo - 1].text == ",") ++lo;
  while (hi > lo && z[hi - 1].text == ",") --hi;
  return {offset + lo, hi - lo + 1};
}

inline bool is_subject_label(std::string_view l) { return l == "nsubj" || l == "nsubjpass"; }

// Subject noun phrase opening the clause after the comma at `comma`: an
// nsubj/nsubjpass token whose subtree starts right after the comma and is
// directly followed by a verb. Returns the subtree bounds.
inline std::optional<std::pair<std::size_t, std::size_t>> subject_after_comma(
    const AnnotatedSentence& z, std::size_t comma, const Lexicons& lex) {
  for (std::size_t k = comma + 1; k <= z.size(); ++k) {
    if (!is_subject_label(z.label(k))) continue;
    const auto [lo, hi] = z.subtree_bounds(k);
    if (lo == comma + 1 && hi < z.size() && lex.is_verb_tag(z.pos(hi + 1))) return std::pair{lo, hi};
  }
  return std::nullopt;
}

inline std::optional<std::size_t> next_comma(const AnnotatedSentence& z, std::size_t after) {
  for (std::size_t k = after + 1; k < z.size(); ++k) {
    if (z.text(k) == ",") return k;
  }
  return std::nullopt;
}

inline GenerationOutcome make_outcome(TokenList s1, TokenList s2, RuleId rule, std::string connective = {},
                                      std::optional<ConnectiveSlot> slot = std::nullopt) {
  GenerationOutcome out;
  out.sentence_1 = std::move(s1);
  out.sentence_2 = std::move(s2);
  out.applied_rules = {rule};
  out.connective = std::move(connective);
  out.connective_slot = slot;
  return out;
}

inline std::optional<GenerationOutcome> checked(TokenList s1, TokenList s2, RuleId rule,
                                                const EngineConfig& cfg, std::string connective = {},
                                                std::optional<ConnectiveSlot> slot = std::nullopt) {
  s1 = finalize(s1);
  s2 = finalize(s2);
  if (!long_enough(s1, cfg) || !long_enough(s2, cfg)) return std::nullopt;
  return make_outcome(std::move(s1), std::move(s2), rule, std::move(connective), slot);
}

}  // namespace detail

// Discourse connective (pair) -------------------------------------------------

// A C_b entry starting at offset 1..5 of b. Smallest offset first, longest
// entry at that offset. At offset 1 an entry listed with a trailing comma also
// matches without it; a comma right after the match is deleted with it.
inline std::optional<RuleMatch> match_discourse_connective(const AnnotatedSentence& /*a*/,
                                                           const AnnotatedSentence& b,
                                                           const Lexicons& lex) {
  const auto& z = b.tokens();
  for (std::size_t i = 1; i <= std::min<std::size_t>(5, z.size()); ++i) {
    const Phrase* best = nullptr;
    std::size_t best_len = 0;
    for (const auto& entry : lex.backward_connectives) {
      std::size_t len = 0;
      if (detail::phrase_at(z, i, entry)) {
        len = entry.size();
      } else if (i == 1 && entry.size() > 1 && entry.back() == ",") {
        const Phrase bare(entry.begin(), entry.end() - 1);
        if (detail::phrase_at(z, i, bare)) len = bare.size();
      }
      if (len > best_len) {
        best_len = len;
        best = &entry;
      }
    }
    if (!best) continue;
    RuleMatch m;
    m.rule = RuleId::kDiscourseConnective;
    m.connective_pos = i;
    m.connective_length = best_len;
    m.span_length = best_len;
    const std::size_t after = i + best_len;
    if (after <= z.size() && z[after - 1].text == "," && z[after - 2].text != ",") ++m.span_length;
    m.matched_connective = normalize_connective(*best);
    return m;
  }
  return std::nullopt;
}

// Deletes the connective (and a comma directly before it, when not sentence
// initial) from b; a is kept.
inline std::optional<GenerationOutcome> generate_discourse_connective(const AnnotatedSentence& a,
                                                                      const AnnotatedSentence& b,
                                                                      const RuleMatch& m,
                                                                      const EngineConfig& cfg = {}) {
  try {
    auto b2 = ops::erase(b.to_list(), m.connective_pos, m.span_length);
    if (m.connective_pos > 1 && b2.nth(m.connective_pos - 1).text == ",") {
      b2 = ops::erase(b2, m.connective_pos - 1, 1);
    }
    const auto slot =
        detail::slot_without_commas(b.tokens(), m.connective_pos, m.connective_length, a.size());
    return detail::checked(a.to_list(), b2, RuleId::kDiscourseConnective, cfg, m.matched_connective, slot);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Anaphora -------------------------------------------------------------------

struct AnaphoraResult {
  TokenList b;
  CorefFlags coref;
};

// Replaces anaphoric mentions in b (pronouns and nominals) by their entity's
// representative mention in a. Possessive pronouns become "<mention> 's".
// nullopt when nothing changed.
inline std::optional<AnaphoraResult> apply_anaphora(const TokenList& a, const TokenList& b,
                                                    const MentionClusterSet& clusters) {
  AnaphoraResult result{b, {}};
  bool changed = false;
  for (const auto& pair : mention_pairs(a, b, clusters)) {
    if (pair.in_b.kind == MentionKind::kName || pair.in_a.kind == MentionKind::kPronoun) continue;

    std::vector<Token> pattern(b.begin() + static_cast<std::ptrdiff_t>(pair.in_b.start - 1),
                               b.begin() + static_cast<std::ptrdiff_t>(pair.in_b.last()));
    std::vector<Token> replacement;
    for (std::size_t k = pair.in_a.start; k <= pair.in_a.last(); ++k) {
      Token t = a.nth(k);
      t.origin.reset();
      replacement.push_back(std::move(t));
    }
    auto& first = replacement.front();
    if (pair.in_a.start == 1 && first.pos != "NNP" && first.pos != "NNPS" && first.text != "I") {
      first.text.front() = static_cast<char>(std::tolower(static_cast<unsigned char>(first.text.front())));
    }
    if (pattern.size() == 1 && pattern.front().pos == "PRP$") replacement.push_back(word("'s", "POS"));

    const TokenList pattern_list(std::move(pattern), true);
    const TokenList replacement_list(std::move(replacement), true);
    if (pattern_list.same_text(replacement_list)) continue;
    auto next = ops::replace(result.b, pattern_list, replacement_list);
    if (next.same_text(result.b)) continue;
    result.b = std::move(next);
    changed = true;
    if (pair.in_b.kind == MentionKind::kPronoun) {
      result.coref.pronoun = true;
    } else {
      result.coref.nominal = true;
    }
  }
  if (!changed) return std::nullopt;
  return result;
}

inline std::optional<GenerationOutcome> match_and_generate_anaphora(const AnnotatedSentence& a,
                                                                    const AnnotatedSentence& b,
                                                                    const MentionClusterSet& clusters,
                                                                    const EngineConfig& cfg = {}) {
  auto res = apply_anaphora(a.to_list(), b.to_list(), clusters);
  if (!res) return std::nullopt;
  auto out = detail::checked(a.to_list(), res->b, RuleId::kAnaphora, cfg);
  if (out) out->coref = res->coref;
  return out;
}

// The combined rule: anaphora applied on top of a discourse-connective,
// inner-connective or sentence-coordination outcome. Any other base, or a
// base without shared mentions, is returned unchanged.
inline GenerationOutcome combine_with_anaphora(const GenerationOutcome& base,
                                               const MentionClusterSet& clusters,
                                               const EngineConfig& cfg = {}) {
  if (base.applied_rules.size() != 1) return base;
  const auto rule = base.applied_rules.front();
  if (rule != RuleId::kDiscourseConnective && rule != RuleId::kInnerConnective &&
      rule != RuleId::kSentenceCoordination) {
    return base;
  }
  auto res = apply_anaphora(base.sentence_1, base.sentence_2, clusters);
  if (!res) return base;
  auto s2 = finalize(res->b);
  if (!detail::long_enough(s2, cfg)) return base;
  GenerationOutcome out = base;
  out.sentence_2 = std::move(s2);
  out.applied_rules.push_back(RuleId::kAnaphora);
  out.coref = res->coref;
  return out;
}

// Forward connective ---------------------------------------------------------

// A C_f entry opening the sentence, and the first comma at i with
// |S|+1 < i < |z|. "although" and "since" may not be followed by a comma.
inline std::optional<RuleMatch> match_forward_connective(const AnnotatedSentence& z, const Lexicons& lex) {
  const Phrase* best = nullptr;
  for (const auto& entry : lex.forward_connectives) {
    if (detail::phrase_at(z.tokens(), 1, entry) && (!best || entry.size() > best->size())) best = &entry;
  }
  if (!best) return std::nullopt;
  const std::size_t len = best->size();
  const auto norm = normalize_connective(*best);
  if ((norm == "although" || norm == "since") && len < z.size() && z.text(len + 1) == ",") {
    return std::nullopt;
  }
  for (std::size_t i = len + 2; i < z.size(); ++i) {
    if (z.text(i) != ",") continue;
    RuleMatch m;
    m.rule = RuleId::kForwardConnective;
    m.connective_pos = 1;
    m.connective_length = len;
    m.span_length = len;
    m.first_comma = i;
    m.matched_connective = norm;
    return m;
  }
  return std::nullopt;
}

// Splits at the comma and drops the connective. When the first clause then
// opens with a gerund, the main clause's subject is copied in front of it and
// the gerund is put in the simple past.
inline std::optional<GenerationOutcome> generate_forward_connective(const AnnotatedSentence& z,
                                                                    const RuleMatch& m,
                                                                    const Lexicons& lex,
                                                                    const EngineConfig& cfg = {}) {
  try {
    auto [first, second] = ops::split(z.to_list(), m.first_comma);
    first = ops::erase(first, 1, m.span_length);
    second = ops::erase(second, 1, 1);
    if (!first.empty() && first.front().pos == "VBG") {
      const auto subject = detail::subject_after_comma(z, m.first_comma, lex);
      if (!subject) return std::nullopt;
      const auto past = retense_vbg_to_past(first.front(), cfg.verbs);
      if (!past) return std::nullopt;
      first = ops::prepend(ops::erase(first, 1, 1), TokenList({*past}, true));
      first = ops::prepend(first, detail::copy_span(z, subject->first, subject->second));
    }
    const auto slot = detail::slot_without_commas(z.tokens(), 1, m.connective_length);
    return detail::checked(first, second, RuleId::kForwardConnective, cfg, m.matched_connective, slot);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Inner connective -----------------------------------------------------------

// The leftmost C_s occurrence past the first token; longest entry on ties.
inline std::optional<RuleMatch> match_inner_connective(const AnnotatedSentence& z, const Lexicons& lex) {
  for (std::size_t i = 2; i <= z.size(); ++i) {
    const Phrase* best = nullptr;
    for (const auto& entry : lex.intra_sentence_connectives) {
      if (detail::phrase_at(z.tokens(), i, entry) && (!best || entry.size() > best->size())) best = &entry;
    }
    if (!best) continue;
    RuleMatch m;
    m.rule = RuleId::kInnerConnective;
    m.connective_pos = i;
    m.connective_length = best->size();
    m.span_length = best->size();
    m.matched_connective = normalize_connective(*best);
    return m;
  }
  return std::nullopt;
}

inline std::optional<GenerationOutcome> generate_inner_connective(const AnnotatedSentence& z,
                                                                  const RuleMatch& m,
                                                                  const EngineConfig& cfg = {}) {
  try {
    auto [first, second] = ops::split(z.to_list(), m.connective_pos);
    second = ops::trim(ops::erase(second, 1, m.span_length));
    const auto slot = detail::slot_without_commas(z.tokens(), m.connective_pos, m.connective_length);
    return detail::checked(first, second, RuleId::kInnerConnective, cfg, m.matched_connective, slot);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Cataphora ------------------------------------------------------------------

// A sentence opening with a VBG modifier (vmod), then a comma followed by a
// subject noun phrase and a verb. The subject may span several tokens.
inline std::optional<RuleMatch> match_cataphora(const AnnotatedSentence& z, const Lexicons& lex) {
  if (z.size() < 3 || z.pos(1) != "VBG" || z.label(1) != "vmod") return std::nullopt;
  for (std::size_t i = 2; i < z.size(); ++i) {
    if (z.text(i) != ",") continue;
    if (auto subject = detail::subject_after_comma(z, i, lex)) {
      RuleMatch m;
      m.rule = RuleId::kCataphora;
      m.first_comma = i;
      m.subject = subject->first;
      m.subject_end = subject->second;
      return m;
    }
  }
  return std::nullopt;
}

// "Stating X , Walker rejected Y ." -> "Walker stated X ." + "Walker rejected Y ."
inline std::optional<GenerationOutcome> generate_cataphora(const AnnotatedSentence& z, const RuleMatch& m,
                                                           const EngineConfig& cfg = {}) {
  try {
    auto [first, second] = ops::split(z.to_list(), m.first_comma);
    second = ops::erase(second, 1, 1);
    const auto past = retense_vbg_to_past(z.token(1), cfg.verbs);
    if (!past) return std::nullopt;
    first = ops::prepend(ops::erase(first, 1, 1), TokenList({*past}, true));
    first = ops::prepend(first, detail::copy_span(z, m.subject, m.subject_end));
    return detail::checked(first, second, RuleId::kCataphora, cfg);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Sentence coordination ------------------------------------------------------

// cc at i, conj at j with i < j <= i+5, and a subject strictly between them.
inline std::optional<RuleMatch> match_sentence_coordination(const AnnotatedSentence& z) {
  for (std::size_t i = 2; i <= z.size(); ++i) {
    if (z.label(i) != "cc") continue;
    for (std::size_t j = i + 1; j <= std::min(i + 5, z.size()); ++j) {
      if (z.label(j) != "conj") continue;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (!detail::is_subject_label(z.label(k))) continue;
        RuleMatch m;
        m.rule = RuleId::kSentenceCoordination;
        m.connective_pos = i;
        m.connective_length = 1;
        m.span_length = 1;
        m.conj = j;
        m.subject = k;
        m.matched_connective = normalize_connective(z.text(i));
        return m;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<GenerationOutcome> generate_sentence_coordination(const AnnotatedSentence& z,
                                                                       const RuleMatch& m,
                                                                       const EngineConfig& cfg = {}) {
  try {
    auto [first, second] = ops::split(z.to_list(), m.connective_pos);
    second = ops::erase(second, 1, 1);
    return detail::checked(first, second, RuleId::kSentenceCoordination, cfg, m.matched_connective,
                           ConnectiveSlot{m.connective_pos, 1});
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Verb phrase coordination ---------------------------------------------------

// cc at i, verbal conj at j <= i+5 attached directly to the root k.
inline std::optional<RuleMatch> match_vp_coordination(const AnnotatedSentence& z, const Lexicons& lex) {
  for (std::size_t i = 1; i <= z.size(); ++i) {
    if (z.label(i) != "cc") continue;
    for (std::size_t j = i + 1; j <= std::min(i + 5, z.size()); ++j) {
      if (z.label(j) != "conj" || !lex.is_verb_tag(z.pos(j))) continue;
      const auto k = z.head(j);
      if (k == kRoot || z.label(k) != "root") continue;
      RuleMatch m;
      m.rule = RuleId::kVerbPhraseCoordination;
      m.connective_pos = i;
      m.connective_length = 1;
      m.span_length = 1;
      m.conj = j;
      m.subject = k;
      m.matched_connective = normalize_connective(z.text(i));
      return m;
    }
  }
  return std::nullopt;
}

// The second conjunct gets the tokens before the root verb as its subject.
// Aborts when the root opens the sentence or follows the conjunction.
inline std::optional<GenerationOutcome> generate_vp_coordination(const AnnotatedSentence& z, const RuleMatch& m,
                                                                 const EngineConfig& cfg = {}) {
  const auto k = m.subject;
  if (k <= 1 || k >= m.connective_pos) return std::nullopt;
  try {
    auto [first, second] = ops::split(z.to_list(), m.connective_pos);
    second = ops::erase(second, 1, 1);
    second = ops::prepend(second, detail::copy_span(z, 1, k - 1));
    return detail::checked(first, second, RuleId::kVerbPhraseCoordination, cfg, m.matched_connective,
                           ConnectiveSlot{m.connective_pos, 1});
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Relative clause ------------------------------------------------------------

// ", <relative pronoun> ... ," with both commas strictly inside the sentence.
inline std::optional<RuleMatch> match_relative_clause(const AnnotatedSentence& z, const Lexicons& lex) {
  for (std::size_t i = 2; i + 1 < z.size(); ++i) {
    if (z.text(i) != "," || !lex.is_relative_pronoun(z.text(i + 1))) continue;
    const auto j = detail::next_comma(z, i + 1);
    if (!j) continue;
    RuleMatch m;
    m.rule = RuleId::kRelativeClause;
    m.first_comma = i;
    m.second_comma = *j;
    m.antecedent_left = z.subtree_bounds(i - 1).first;
    return m;
  }
  return std::nullopt;
}

// "Kubler , who retired ... , remained ..." ->
// "Kubler remained ..." + "Kubler retired ..."
// Only subject relatives (who, which) are split; "whose"/"whom" abort.
inline std::optional<GenerationOutcome> generate_relative_clause(const AnnotatedSentence& z, const RuleMatch& m,
                                                                 const Lexicons& lex,
                                                                 const EngineConfig& cfg = {}) {
  const auto i = m.first_comma, j = m.second_comma;
  const auto pronoun = to_lower(z.text(i + 1));
  if (pronoun == "whose" || pronoun == "whom") return std::nullopt;
  bool has_verb = false;
  for (std::size_t k = i + 2; k < j; ++k) has_verb = has_verb || lex.is_verb_tag(z.pos(k));
  if (!has_verb || m.antecedent_left == 0 || m.antecedent_left >= i) return std::nullopt;
  try {
    auto [head_and_clause, tail] = ops::split(z.to_list(), j);
    tail = ops::erase(tail, 1, 1);
    const auto clause = ops::erase(head_and_clause, 1, i + 1);
    const auto head = ops::erase(head_and_clause, i, j - i);
    auto matrix = ops::prepend(tail, head);
    auto relative = ops::prepend(clause, detail::copy_span(z, m.antecedent_left, i - 1));
    return detail::checked(matrix, relative, RuleId::kRelativeClause, cfg);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Apposition -----------------------------------------------------------------

// ", <det|poss> ... ," containing an appos token whose head precedes the
// first comma.
inline std::optional<RuleMatch> match_apposition(const AnnotatedSentence& z) {
  for (std::size_t i = 2; i + 1 < z.size(); ++i) {
    if (z.text(i) != ",") continue;
    const auto j = detail::next_comma(z, i);
    if (!j) continue;
    const auto& first_label = z.label(i + 1);
    if (first_label != "det" && first_label != "poss") continue;
    for (std::size_t k = i + 1; k < *j; ++k) {
      if (z.label(k) != "appos" || z.head(k) == kRoot || z.head(k) >= i) continue;
      RuleMatch m;
      m.rule = RuleId::kApposition;
      m.first_comma = i;
      m.second_comma = *j;
      m.appositive = k;
      m.antecedent_left = z.subtree_bounds(i - 1).first;
      return m;
    }
  }
  return std::nullopt;
}

// "The frigidarium , the last stop ... , was ..." ->
// "The frigidarium was ..." + "The frigidarium is the last stop ..."
inline std::optional<GenerationOutcome> generate_apposition(const AnnotatedSentence& z, const RuleMatch& m,
                                                            const EngineConfig& cfg = {}) {
  const auto i = m.first_comma, j = m.second_comma;
  if (m.antecedent_left == 0 || m.antecedent_left >= i) return std::nullopt;
  try {
    auto [head_and_clause, tail] = ops::split(z.to_list(), j);
    tail = ops::erase(tail, 1, 1);
    const auto clause = ops::erase(head_and_clause, 1, i);
    const auto head = ops::erase(head_and_clause, i, j - i);
    auto matrix = ops::prepend(tail, head);

    std::vector<Token> antecedent(z.tokens().begin() + static_cast<std::ptrdiff_t>(m.antecedent_left - 1),
                                  z.tokens().begin() + static_cast<std::ptrdiff_t>(i - 1));
    const auto be = select_be_verb(TokenList(antecedent), matrix, cfg.be_tense);
    if (!be) return std::nullopt;
    const auto be_tag = *be == "is" ? "VBZ" : *be == "are" ? "VBP" : "VBD";
    auto appositive = ops::prepend(clause, TokenList({word(*be, be_tag)}, true));
    appositive = ops::prepend(appositive, detail::copy_span(z, m.antecedent_left, i - 1));
    return detail::checked(matrix, appositive, RuleId::kApposition, cfg);
  } catch (const BoundsError&) {
    return std::nullopt;
  }
}

// Dispatch -------------------------------------------------------------------

// Single-sentence rules in priority order; the first rule that matches and
// generates wins. Inner-connective and sentence-coordination outcomes are
// combined with anaphora when the halves share an entity.
inline std::optional<GenerationOutcome> generate_single(const AnnotatedSentence& z, const Lexicons& lex,
                                                        const MentionClusterSet& clusters,
                                                        const EngineConfig& cfg = {},
                                                        DispatchTrace* trace = nullptr) {
  if (z.fragment()) return std::nullopt;
  auto attempt = [&](RuleId rule, const std::optional<RuleMatch>& m,
                     auto&& generate) -> std::optional<GenerationOutcome> {
    if (!m) return std::nullopt;
    auto out = generate(*m);
    if (!out && trace) trace->aborted.push_back(rule);
    return out;
  };

  if (auto o = attempt(RuleId::kApposition, match_apposition(z),
                       [&](const RuleMatch& m) { return generate_apposition(z, m, cfg); })) {
    return o;
  }
  if (auto o = attempt(RuleId::kRelativeClause, match_relative_clause(z, lex),
                       [&](const RuleMatch& m) { return generate_relative_clause(z, m, lex, cfg); })) {
    return o;
  }
  if (auto o = attempt(RuleId::kCataphora, match_cataphora(z, lex),
                       [&](const RuleMatch& m) { return generate_cataphora(z, m, cfg); })) {
    return o;
  }
  if (auto o = attempt(RuleId::kForwardConnective, match_forward_connective(z, lex),
                       [&](const RuleMatch& m) { return generate_forward_connective(z, m, lex, cfg); })) {
    return o;
  }
  if (auto o = attempt(RuleId::kInnerConnective, match_inner_connective(z, lex),
                       [&](const RuleMatch& m) { return generate_inner_connective(z, m, cfg); })) {
    return combine_with_anaphora(*o, clusters, cfg);
  }
  if (auto o = attempt(RuleId::kSentenceCoordination, match_sentence_coordination(z),
                       [&](const RuleMatch& m) { return generate_sentence_coordination(z, m, cfg); })) {
    return combine_with_anaphora(*o, clusters, cfg);
  }
  if (auto o = attempt(RuleId::kVerbPhraseCoordination, match_vp_coordination(z, lex),
                       [&](const RuleMatch& m) { return generate_vp_coordination(z, m, cfg); })) {
    return o;
  }
  return std::nullopt;
}

// Consecutive-sentence rules: a discourse connective (optionally combined with
// anaphora), else anaphora alone.
inline std::optional<GenerationOutcome> generate_pair(const AnnotatedSentence& a, const AnnotatedSentence& b,
                                                      const Lexicons& lex, const MentionClusterSet& clusters,
                                                      const EngineConfig& cfg = {},
                                                      DispatchTrace* trace = nullptr) {
  if (a.fragment() || b.fragment()) return std::nullopt;
  if (auto m = match_discourse_connective(a, b, lex)) {
    if (auto o = generate_discourse_connective(a, b, *m, cfg)) return combine_with_anaphora(*o, clusters, cfg);
    if (trace) trace->aborted.push_back(RuleId::kDiscourseConnective);
  }
  return match_and_generate_anaphora(a, b, clusters, cfg);
}

inline DiscourseType discourse_type_of(const GenerationOutcome& o) {
  if (o.applied_rules.empty()) return DiscourseType::kNone;
  const bool anaphora =
      std::find(o.applied_rules.begin(), o.applied_rules.end(), RuleId::kAnaphora) != o.applied_rules.end();
  switch (o.applied_rules.front()) {
    case RuleId::kDiscourseConnective:
      return anaphora ? DiscourseType::kDiscourseConnectiveAnaphora : DiscourseType::kDiscourseConnective;
    case RuleId::kAnaphora: return DiscourseType::kAnaphora;
    case RuleId::kForwardConnective: return DiscourseType::kForwardConnective;
    case RuleId::kInnerConnective:
      return anaphora ? DiscourseType::kInnerConnectiveAnaphora : DiscourseType::kInnerConnective;
    case RuleId::kCataphora: return DiscourseType::kCataphora;
    case RuleId::kSentenceCoordination:
      return anaphora ? DiscourseType::kSentenceCoordinationAnaphora : DiscourseType::kSentenceCoordination;
    case RuleId::kVerbPhraseCoordination: return DiscourseType::kVerbPhraseCoordination;
    case RuleId::kRelativeClause: return DiscourseType::kRelativeClause;
    case RuleId::kApposition: return DiscourseType::kApposition;
  }
  return DiscourseType::kNone;
}

}  // namespace forge
