#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "forge/audit.hpp"
#include "forge/document.hpp"
#include "forge/example.hpp"
#include "forge/lexicons.hpp"
#include "forge/rules.hpp"
#include "forge/token.hpp"

namespace forge {

// Invalid configuration values (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct SplitRatios {
  double train = 0.98;
  double dev = 0.01;
  double test = 0.01;
  friend bool operator==(const SplitRatios&, const SplitRatios&) = default;
};

struct PipelineConfig {
  std::size_t min_sentence_tokens = 7;
  bool ascii_only = true;
  double negative_rate = 0.1;
  SplitRatios split_ratios;
  double downsample_keep_prob = 0.1;
  std::uint64_t rng_seed = 0;
  EngineConfig engine;

  void validate() const {
    auto probability = [](double p, const char* name) {
      if (!(p >= 0.0 && p <= 1.0)) throw ConfigError(std::string(name) + " must be in [0, 1]");
    };
    probability(negative_rate, "negative_rate");
    probability(downsample_keep_prob, "downsample_keep_prob");
    probability(split_ratios.train, "train ratio");
    probability(split_ratios.dev, "dev ratio");
    probability(split_ratios.test, "test ratio");
    const double sum = split_ratios.train + split_ratios.dev + split_ratios.test;
    if (std::abs(sum - 1.0) > 1e-9) throw ConfigError("split ratios must sum to 1");
  }
};

// "0.98,0.01,0.01"
inline SplitRatios parse_split_ratios(std::string_view text) {
  std::vector<double> values;
  std::stringstream in{std::string(text)};
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (detail::strip(part.substr(used)).size() != 0) throw ConfigError("bad ratio \"" + part + "\"");
    } catch (const std::logic_error&) {
      throw ConfigError("bad ratio \"" + part + "\"");
    }
  }
  if (values.size() != 3) throw ConfigError("expected three comma-separated ratios");
  PipelineConfig probe;
  probe.split_ratios = {values[0], values[1], values[2]};
  probe.validate();
  return probe.split_ratios;
}

// Hashing and sampling ---------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

enum class Split { kTrain, kDev, kTest };

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

inline constexpr std::array<Split, 3> kSplits = {Split::kTrain, Split::kDev, Split::kTest};

// u = mix64(fnv1a64(doc_id)) mapped to [0, 1); train below r_train, dev below
// r_train + r_dev, test otherwise.
inline Split assign_split(std::string_view doc_id, const SplitRatios& ratios = {}) {
  if (doc_id.empty()) throw ValidationError("empty doc_id");
  const double u = unit_interval(mix64(fnv1a64(doc_id)));
  if (u < ratios.train) return Split::kTrain;
  if (u < ratios.train + ratios.dev) return Split::kDev;
  return Split::kTest;
}

// Candidates -------------------------------------------------------------------

struct Candidate {
  std::size_t first = 0;  // 0-based sentence index
  std::optional<std::size_t> second;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// s1, (s1,s2), s2, (s2,s3), ..., sn: 2n-1 candidates for n sentences.
inline std::vector<Candidate> enumerate_candidates(const Document& doc) {
  std::vector<Candidate> out;
  const auto n = doc.sentences().size();
  for (std::size_t s = 0; s < n; ++s) {
    out.push_back({s, std::nullopt});
    if (s + 1 < n) out.push_back({s, s + 1});
  }
  return out;
}

inline bool passes_filter(const TokenList& s, const PipelineConfig& cfg) {
  if (s.size() < cfg.min_sentence_tokens) return false;
  if (cfg.ascii_only) {
    for (const auto& t : s) {
      if (!is_ascii(t.text)) return false;
    }
  }
  return true;
}

// Per-document generator for the negative-sampling draws.
inline std::mt19937_64 document_rng(std::uint64_t seed, std::string_view doc_id) {
  return std::mt19937_64(mix64(seed ^ mix64(fnv1a64(doc_id))));
}

inline FusionExample make_example(const Document& doc, const Candidate& cand, const GenerationOutcome& o) {
  FusionExample ex;
  ex.incoherent_first = o.sentence_1;
  ex.incoherent_second = o.sentence_2;
  ex.coherent_first = doc.sentences()[cand.first].to_list();
  if (cand.second) ex.coherent_second = doc.sentences()[*cand.second].to_list();
  ex.discourse_type = discourse_type_of(o);
  ex.connective = o.connective;
  ex.has_coref_pronoun = o.coref.pronoun;
  ex.has_coref_nominal = o.coref.nominal;
  ex.provenance = {doc.doc_id(), cand.first, cand.second};
  ex.connective_slot = o.connective_slot;
  return ex;
}

// Applies the rules to one candidate. Inputs and generated sentences must both
// pass the length/ASCII filter. An unmatched pair becomes a None example when
// the draw from `rng` falls below negative_rate; the generator is only
// advanced for unmatched pairs.
inline std::optional<FusionExample> generate_example(const Document& doc, const Candidate& cand,
                                                     const Lexicons& lex, const PipelineConfig& cfg,
                                                     std::mt19937_64& rng) {
  const auto& a = doc.sentences()[cand.first];
  if (!passes_filter(a.to_list(), cfg)) return std::nullopt;
  std::optional<GenerationOutcome> outcome;
  if (cand.second) {
    const auto& b = doc.sentences()[*cand.second];
    if (!passes_filter(b.to_list(), cfg)) return std::nullopt;
    outcome = generate_pair(a, b, lex, doc.clusters(), cfg.engine);
    if (!outcome) {
      if (unit_interval(rng()) >= cfg.negative_rate) return std::nullopt;
      FusionExample ex;
      ex.incoherent_first = ex.coherent_first = a.to_list();
      ex.incoherent_second = ex.coherent_second = b.to_list();
      ex.discourse_type = DiscourseType::kNone;
      ex.provenance = {doc.doc_id(), cand.first, cand.second};
      return ex;
    }
  } else {
    outcome = generate_single(a, lex, doc.clusters(), cfg.engine);
    if (!outcome) return std::nullopt;
  }
  if (!passes_filter(outcome->sentence_1, cfg) || !passes_filter(outcome->sentence_2, cfg)) return std::nullopt;
  return make_example(doc, cand, *outcome);
}

struct DocumentExamples {
  std::string doc_id;
  Split split = Split::kTrain;
  std::vector<FusionExample> examples;
  std::vector<std::string> rejected;  // validator messages
};

inline DocumentExamples process_document(const Document& doc, const Lexicons& lex, const PipelineConfig& cfg) {
  DocumentExamples out{doc.doc_id(), assign_split(doc.doc_id(), cfg.split_ratios), {}, {}};
  auto rng = document_rng(cfg.rng_seed, doc.doc_id());
  for (const auto& cand : enumerate_candidates(doc)) {
    auto ex = generate_example(doc, cand, lex, cfg, rng);
    if (!ex) continue;
    const auto problems = validate_example(*ex);
    if (!problems.empty()) {
      for (const auto& p : problems) out.rejected.push_back(doc.doc_id() + ": " + p);
      continue;
    }
    out.examples.push_back(std::move(*ex));
  }
  return out;
}

// Runs every document, in parallel when threads > 1. Output is ordered by
// doc_id, then candidate position, independent of scheduling.
inline std::vector<DocumentExamples> run_pipeline(const std::vector<Document>& docs, const Lexicons& lex,
                                                  const PipelineConfig& cfg, unsigned threads = 1) {
  cfg.validate();
  std::vector<DocumentExamples> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) results[i] = process_document(docs[i], lex, cfg);
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::stable_sort(results.begin(), results.end(),
                   [](const auto& x, const auto& y) { return x.doc_id < y.doc_id; });
  return results;
}

// Down-sampling ----------------------------------------------------------------

inline bool is_downsample_target(const FusionExample& ex) {
  return ex.connective == "and" || ex.connective == "but" || involves_anaphora(ex.discourse_type);
}

// Keeps targeted examples with probability keep_prob, using one draw from a
// seeded stream per targeted example; everything else passes through.
inline std::vector<FusionExample> downsample(const std::vector<FusionExample>& in, double keep_prob,
                                             std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) throw ConfigError("keep probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<FusionExample> out;
  for (const auto& ex : in) {
    if (!is_downsample_target(ex) || unit_interval(rng()) < keep_prob) out.push_back(ex);
  }
  return out;
}

// Statistics -------------------------------------------------------------------

inline constexpr std::string_view kNoConnective = "<none>";

struct DatasetStats {
  std::size_t total = 0;
  std::array<std::size_t, kDiscourseTypeCount> type_counts{};
  std::map<std::string, std::size_t> connective_counts;  // kNoConnective for none
  std::map<std::string, std::size_t> split_totals;

  void add(const FusionExample& ex, std::optional<Split> split = std::nullopt) {
    ++total;
    ++type_counts[static_cast<std::size_t>(ex.discourse_type)];
    ++connective_counts[ex.connective.empty() ? std::string(kNoConnective) : ex.connective];
    if (split) ++split_totals[std::string(to_string(*split))];
  }

  DatasetStats& merge(const DatasetStats& other) {
    total += other.total;
    for (std::size_t i = 0; i < type_counts.size(); ++i) type_counts[i] += other.type_counts[i];
    for (const auto& [k, v] : other.connective_counts) connective_counts[k] += v;
    for (const auto& [k, v] : other.split_totals) split_totals[k] += v;
    return *this;
  }

  double percent(std::size_t count) const { return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) / total; }
  double type_percent(DiscourseType t) const { return percent(type_counts[static_cast<std::size_t>(t)]); }
  double connective_percent(const std::string& c) const {
    auto it = connective_counts.find(c);
    return it == connective_counts.end() ? 0.0 : percent(it->second);
  }

  // Connectives by descending count, ties alphabetical; includes kNoConnective.
  std::vector<std::pair<std::string, std::size_t>> connectives_by_count() const {
    std::vector<std::pair<std::string, std::size_t>> rows(connective_counts.begin(), connective_counts.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.second > y.second; });
    return rows;
  }

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

inline DatasetStats compute_stats(const std::vector<FusionExample>& examples) {
  DatasetStats s;
  for (const auto& ex : examples) s.add(ex);
  return s;
}

// Plain-text report. Percentages are relative to all examples, including
// those without a connective.
inline std::string format_stats(const DatasetStats& s, std::size_t top_connectives = 20) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1);
  out << "examples\t" << s.total << '\n';
  for (const auto& [name, count] : s.split_totals) out << "split " << name << '\t' << count << '\n';
  out << "\ndiscourse type\tcount\tpercent\n";
  std::vector<std::size_t> order(kDiscourseTypeCount);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return s.type_counts[x] > s.type_counts[y]; });
  for (auto i : order) {
    out << kDiscourseTypes[i].name << '\t' << s.type_counts[i] << '\t' << s.percent(s.type_counts[i]) << '\n';
  }
  out << "\nconnective\tcount\tpercent\n";
  std::size_t shown = 0;
  for (const auto& [name, count] : s.connectives_by_count()) {
    if (name == kNoConnective) continue;
    if (shown++ == top_connectives) break;
    out << name << '\t' << count << '\t' << s.percent(count) << '\n';
  }
  const auto none = s.connective_counts.count(std::string(kNoConnective))
                        ? s.connective_counts.at(std::string(kNoConnective))
                        : 0;
  out << kNoConnective << '\t' << none << '\t' << s.percent(none) << '\n';
  return out.str();
}

// TSV ------------------------------------------------------------------------

inline constexpr std::array<std::string_view, 8> kTsvColumns = {
    "coherent_first_sentence",   "coherent_second_sentence", "incoherent_first_sentence",
    "incoherent_second_sentence", "discourse_type",           "connective_string",
    "has_coref_type_pronoun",    "has_coref_type_nominal"};

inline std::string tsv_header() {
  std::string out;
  for (std::size_t i = 0; i < kTsvColumns.size(); ++i) {
    if (i) out += '\t';
    out += kTsvColumns[i];
  }
  return out;
}

inline std::string to_tsv_row(const FusionExample& ex) {
  std::string out;
  for (const auto& field : {ex.coherent_first.str(), ex.coherent_second.str(), ex.incoherent_first.str(),
                            ex.incoherent_second.str(), std::string(code(ex.discourse_type)), ex.connective,
                            std::string(ex.has_coref_pronoun ? "1" : "0"),
                            std::string(ex.has_coref_nominal ? "1" : "0")}) {
    out += field;
    out += '\t';
  }
  out.pop_back();
  return out;
}

inline void write_tsv(std::ostream& out, const std::vector<FusionExample>& examples) {
  out << tsv_header() << '\n';
  for (const auto& ex : examples) out << to_tsv_row(ex) << '\n';
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

// Parses one data row. Tokens carry text only.
inline FusionExample from_tsv_row(const std::string& line, std::size_t line_no = 0) {
  const auto cols = split_tabs(line);
  if (cols.size() != kTsvColumns.size()) {
    throw LoadError("expected " + std::to_string(kTsvColumns.size()) + " columns, found " +
                        std::to_string(cols.size()),
                    line_no);
  }
  FusionExample ex;
  ex.coherent_first = TokenList::from_text(cols[0]);
  ex.coherent_second = TokenList::from_text(cols[1]);
  ex.incoherent_first = TokenList::from_text(cols[2]);
  ex.incoherent_second = TokenList::from_text(cols[3]);
  const auto type = parse_discourse_type(cols[4]);
  if (!type) throw LoadError("unknown discourse type \"" + cols[4] + "\"", line_no);
  ex.discourse_type = *type;
  ex.connective = cols[5];
  auto flag = [&](const std::string& v) {
    if (v != "0" && v != "1") throw LoadError("flag must be 0 or 1, found \"" + v + "\"", line_no);
    return v == "1";
  };
  ex.has_coref_pronoun = flag(cols[6]);
  ex.has_coref_nominal = flag(cols[7]);
  return ex;
}

// Reads a TSV written by write_tsv; the header row is optional.
inline std::vector<FusionExample> read_tsv(std::istream& in) {
  std::vector<FusionExample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == tsv_header()) continue;
    out.push_back(from_tsv_row(line, line_no));
  }
  return out;
}

}  // namespace forge
