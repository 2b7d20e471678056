#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "forge/document.hpp"
#include "forge/example.hpp"
#include "forge/lexicons.hpp"
#include "forge/token.hpp"

namespace forge {

using Tokens = std::vector<std::string>;

// SARI -------------------------------------------------------------------------

inline constexpr std::size_t kSariMaxN = 4;

struct SariScores {
  double keep = 0.0;
  double add = 0.0;
  double del = 0.0;
  friend bool operator==(const SariScores&, const SariScores&) = default;
};

struct SariBreakdown {
  std::array<SariScores, kSariMaxN> per_n{};  // index n-1
  double sari = 0.0;                          // 0..100
};

namespace detail {

using NgramCounts = std::map<Tokens, std::size_t>;

inline NgramCounts ngrams(const Tokens& s, std::size_t n) {
  NgramCounts out;
  for (std::size_t i = 0; i + n <= s.size(); ++i) ++out[Tokens(s.begin() + i, s.begin() + i + n)];
  return out;
}

inline std::size_t total(const NgramCounts& c) {
  std::size_t t = 0;
  for (const auto& [_, v] : c) t += v;
  return t;
}

inline NgramCounts intersect(const NgramCounts& x, const NgramCounts& y) {
  NgramCounts out;
  for (const auto& [g, v] : x) {
    auto it = y.find(g);
    if (it != y.end()) out[g] = std::min(v, it->second);
  }
  return out;
}

inline NgramCounts subtract(const NgramCounts& x, const NgramCounts& y) {
  NgramCounts out;
  for (const auto& [g, v] : x) {
    auto it = y.find(g);
    const std::size_t w = it == y.end() ? 0 : it->second;
    if (v > w) out[g] = v - w;
  }
  return out;
}

inline double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

// F1 of a candidate multiset against a gold multiset; 0/0 ratios count as 1.
inline double f1(const NgramCounts& candidate, const NgramCounts& gold) {
  const auto hit = total(intersect(candidate, gold));
  const double p = ratio(hit, total(candidate));
  const double r = ratio(hit, total(gold));
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

}  // namespace detail

// SARI with F1 for keep, add and delete and 0/0 = 1, over 1..4-grams.
inline SariBreakdown sari(const Tokens& input, const Tokens& output, const Tokens& reference) {
  if (input.empty() || output.empty() || reference.empty()) {
    throw std::invalid_argument("sari: input, output and reference must be non-empty");
  }
  SariBreakdown out;
  double sum = 0.0;
  for (std::size_t n = 1; n <= kSariMaxN; ++n) {
    const auto i = detail::ngrams(input, n);
    const auto o = detail::ngrams(output, n);
    const auto r = detail::ngrams(reference, n);
    auto& s = out.per_n[n - 1];
    s.keep = detail::f1(detail::intersect(i, o), detail::intersect(i, r));
    s.add = detail::f1(detail::subtract(o, i), detail::subtract(r, i));
    s.del = detail::f1(detail::subtract(i, o), detail::subtract(i, r));
    sum += (s.keep + s.add + s.del) / 3.0;
  }
  out.sari = 100.0 * sum / static_cast<double>(kSariMaxN);
  return out;
}

inline SariBreakdown sari(const TokenList& input, const TokenList& output, const TokenList& reference) {
  return sari(input.texts(), output.texts(), reference.texts());
}

// Exact match ------------------------------------------------------------------

// Token-sequence identity. Case-sensitive unless ignore_case is set.
inline bool exact_match(const Tokens& output, const Tokens& reference, bool ignore_case = false) {
  const auto norm = [](const Tokens& t) { return split_words(join(t)); };
  const auto a = norm(output), b = norm(reference);
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (ignore_case ? !iequals(a[k], b[k]) : a[k] != b[k]) return false;
  }
  return true;
}

inline bool exact_match(std::string_view output, std::string_view reference, bool ignore_case = false) {
  return exact_match(split_words(output), split_words(reference), ignore_case);
}

// Alignment --------------------------------------------------------------------

struct Alignment {
  std::size_t distance = 0;
  // For each gold token (0-based), the aligned output token index, or nullopt
  // for a gap.
  std::vector<std::optional<std::size_t>> gold_to_output;
};

// Unit-cost Levenshtein alignment. The backtrace prefers match, then
// substitution, then deleting a gold token, then inserting an output token.
inline Alignment align_tokens(const Tokens& output, const Tokens& gold) {
  const std::size_t n = gold.size(), m = output.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = d[i - 1][j - 1] + (gold[i - 1] == output[j - 1] ? 0 : 1);
      d[i][j] = std::min({diag, d[i - 1][j] + 1, d[i][j - 1] + 1});
    }
  }
  Alignment out{d[n][m], std::vector<std::optional<std::size_t>>(n)};
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && gold[i - 1] == output[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      out.gold_to_output[--i] = --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      out.gold_to_output[--i] = --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      --i;
    } else {
      --j;
    }
  }
  return out;
}

// Connective and pronoun analysis ----------------------------------------------

inline constexpr std::string_view kOther = "<other>";

inline const std::set<std::string>& pronoun_forms() {
  static const std::set<std::string> forms = {
      "i",   "me",   "my",    "mine",  "we",   "us",     "our",     "ours",    "you",
      "your", "yours", "he",  "him",   "his",  "she",    "her",     "hers",    "it",
      "its", "they", "them", "their", "theirs", "himself", "herself", "itself", "themselves"};
  return forms;
}

inline bool is_pronoun_word(std::string_view w) { return pronoun_forms().count(to_lower(w)) > 0; }

struct AnalysisItem {
  Tokens gold;
  Tokens prediction;
  std::optional<ConnectiveSlot> connective_slot;  // 1-based, in gold
  std::string connective;                         // normalized gold connective
  std::vector<std::size_t> pronoun_positions;     // 1-based, in gold
};

// From a generated example: the slot comes from generation metadata and
// pronouns from PRP/PRP$ tags in the coherent text.
inline AnalysisItem analysis_item(const FusionExample& ex, Tokens prediction) {
  AnalysisItem item;
  const auto gold = ex.coherent();
  item.gold = gold.texts();
  item.prediction = std::move(prediction);
  if (!ex.connective.empty()) {
    item.connective_slot = ex.connective_slot;
    item.connective = ex.connective;
  }
  for (std::size_t k = 1; k <= gold.size(); ++k) {
    if (is_pronoun_pos(gold.nth(k).pos)) item.pronoun_positions.push_back(k);
  }
  return item;
}

// From text only (a TSV row): the connective is searched in the coherent
// second sentence, then in the first; pronouns come from a closed word list.
inline AnalysisItem analysis_item_from_text(const FusionExample& ex, Tokens prediction) {
  AnalysisItem item;
  item.gold = ex.coherent().texts();
  item.prediction = std::move(prediction);
  if (!ex.connective.empty()) {
    item.connective = ex.connective;
    const auto phrase = split_words(ex.connective);
    const std::size_t first_len = ex.coherent_first.size();
    auto find_in = [&](std::size_t lo, std::size_t hi) -> std::optional<std::size_t> {
      for (std::size_t p = lo; p + phrase.size() <= hi; ++p) {
        bool ok = true;
        for (std::size_t k = 0; k < phrase.size() && ok; ++k) ok = iequals(item.gold[p + k], phrase[k]);
        if (ok) return p;
      }
      return std::nullopt;
    };
    auto at = find_in(first_len, item.gold.size());
    if (!at) at = find_in(0, first_len);
    if (at) item.connective_slot = ConnectiveSlot{*at + 1, phrase.size()};
  }
  for (std::size_t k = 0; k < item.gold.size(); ++k) {
    if (is_pronoun_word(item.gold[k])) item.pronoun_positions.push_back(k + 1);
  }
  return item;
}

struct ConnectiveRow {
  std::size_t total = 0;
  std::size_t correct = 0;
  std::map<std::string, std::size_t> fillers;

  double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total); }

  // Most frequent predicted fillers, ties alphabetical.
  std::vector<std::pair<std::string, double>> top_fillers(std::size_t k = 3) const {
    std::vector<std::pair<std::string, std::size_t>> rows(fillers.begin(), fillers.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    std::vector<std::pair<std::string, double>> out;
    for (std::size_t i = 0; i < rows.size() && i < k; ++i) {
      out.emplace_back(rows[i].first, static_cast<double>(rows[i].second) / static_cast<double>(total));
    }
    return out;
  }
};

struct AlignmentReport {
  std::map<std::string, ConnectiveRow> connectives;                         // by gold connective
  std::map<std::string, std::map<std::string, std::size_t>> pronoun_counts;  // gold -> predicted
  std::size_t items = 0;
  std::size_t skipped = 0;
  std::vector<std::string> diagnostics;

  // Row-normalized pronoun confusion.
  std::map<std::string, std::map<std::string, double>> pronoun_confusion() const {
    std::map<std::string, std::map<std::string, double>> out;
    for (const auto& [gold, row] : pronoun_counts) {
      std::size_t sum = 0;
      for (const auto& [_, c] : row) sum += c;
      if (sum == 0) continue;
      for (const auto& [pred, c] : row) out[gold][pred] = static_cast<double>(c) / static_cast<double>(sum);
    }
    return out;
  }

  AlignmentReport& merge(const AlignmentReport& other) {
    for (const auto& [c, row] : other.connectives) {
      auto& mine = connectives[c];
      mine.total += row.total;
      mine.correct += row.correct;
      for (const auto& [f, n] : row.fillers) mine.fillers[f] += n;
    }
    for (const auto& [g, row] : other.pronoun_counts) {
      for (const auto& [p, n] : row) pronoun_counts[g][p] += n;
    }
    items += other.items;
    skipped += other.skipped;
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(), other.diagnostics.end());
    return *this;
  }
};

// Classifies what the prediction put at each gold connective slot and gold
// pronoun position. A filler counts as a connective only when its normalized
// text is in `connective_forms`; anything else is <other>.
inline AlignmentReport analyze(const std::vector<AnalysisItem>& items,
                               const std::set<std::string>& connective_forms) {
  AlignmentReport report;
  for (std::size_t idx = 0; idx < items.size(); ++idx) {
    const auto& item = items[idx];
    const bool has_slot = item.connective_slot && !item.connective.empty();
    if (!has_slot && item.pronoun_positions.empty()) {
      ++report.skipped;
      report.diagnostics.push_back("item " + std::to_string(idx) + ": no connective slot or pronoun");
      continue;
    }
    ++report.items;
    const auto alignment = align_tokens(item.prediction, item.gold);

    if (has_slot) {
      const auto& slot = *item.connective_slot;
      std::optional<std::size_t> lo, hi;
      for (std::size_t g = slot.start; g < slot.start + slot.length && g <= item.gold.size(); ++g) {
        if (const auto o = alignment.gold_to_output[g - 1]) {
          lo = lo ? std::min(*lo, *o) : *o;
          hi = hi ? std::max(*hi, *o) : *o;
        }
      }
      std::string filler(kOther);
      if (lo) {
        const auto text = normalize_connective(join(Tokens(item.prediction.begin() + *lo,
                                                           item.prediction.begin() + *hi + 1)));
        if (connective_forms.count(text)) filler = text;
      }
      auto& row = report.connectives[item.connective];
      ++row.total;
      if (filler == item.connective) ++row.correct;
      ++row.fillers[filler];
    }

    for (const auto p : item.pronoun_positions) {
      if (p == 0 || p > item.gold.size()) continue;
      std::string predicted(kOther);
      if (const auto o = alignment.gold_to_output[p - 1]) {
        if (is_pronoun_word(item.prediction[*o])) predicted = to_lower(item.prediction[*o]);
      }
      ++report.pronoun_counts[to_lower(item.gold[p - 1])][predicted];
    }
  }
  return report;
}

inline nlohmann::json report_to_json(const AlignmentReport& report) {
  nlohmann::json connectives = nlohmann::json::object();
  for (const auto& [c, row] : report.connectives) {
    nlohmann::json top = nlohmann::json::array();
    for (const auto& [f, share] : row.top_fillers()) top.push_back({{"filler", f}, {"share", share}});
    connectives[c] = {{"count", row.total}, {"accuracy", row.accuracy()}, {"top_fillers", std::move(top)}};
  }
  nlohmann::json confusion = nlohmann::json::object();
  for (const auto& [gold, row] : report.pronoun_confusion()) {
    for (const auto& [pred, share] : row) confusion[gold][pred] = share;
  }
  return {{"connective_table", std::move(connectives)},
          {"pronoun_confusion", std::move(confusion)},
          {"items", report.items},
          {"skipped", report.skipped}};
}

}  // namespace forge
