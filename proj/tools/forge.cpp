// forge: generate, split, down-sample, summarize and score fusion datasets.
//
// Exit codes: 0 success, 1 fatal input error, 2 configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "forge/forge.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kInputError = 1;
constexpr int kConfigError = 2;

forge::Lexicons lexicons_from(const std::string& path) {
  return path.empty() ? forge::default_lexicons() : forge::load_lexicons(path);
}

std::vector<forge::FusionExample> read_tsv_file(const std::string& path) {
  if (path == "-") return forge::read_tsv(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw forge::LoadError("cannot open " + path);
  return forge::read_tsv(in);
}

std::vector<forge::Tokens> read_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw forge::LoadError("cannot open " + path);
  std::vector<forge::Tokens> out;
  std::string line;
  while (std::getline(in, line)) out.push_back(forge::split_words(line));
  return out;
}

void check_counts(std::size_t gold, std::size_t pred) {
  if (gold != pred) {
    throw forge::LoadError(std::to_string(gold) + " gold examples but " + std::to_string(pred) + " predictions");
  }
}

struct GenerateArgs {
  std::string input, lexicons, out, ratios = "0.98,0.01,0.01", be_tense = "present";
  std::uint64_t seed = 0;
  double negative_rate = 0.1;
  std::size_t min_tokens = 7;
  bool allow_non_ascii = false;
  unsigned threads = 0;
};

int run_generate(const GenerateArgs& a) {
  forge::PipelineConfig cfg;
  cfg.rng_seed = a.seed;
  cfg.negative_rate = a.negative_rate;
  cfg.min_sentence_tokens = a.min_tokens;
  cfg.ascii_only = !a.allow_non_ascii;
  cfg.split_ratios = forge::parse_split_ratios(a.ratios);
  if (a.be_tense == "present") {
    cfg.engine.be_tense = forge::BeTense::kPresent;
  } else if (a.be_tense == "matrix") {
    cfg.engine.be_tense = forge::BeTense::kMatrix;
  } else {
    throw forge::ConfigError("--be-tense must be present or matrix");
  }
  cfg.validate();

  const auto lex = lexicons_from(a.lexicons);
  const auto ingested = forge::ingest(a.input);
  for (const auto& d : ingested.diagnostics) std::cerr << a.input << ':' << d.line << ": skipped: " << d.message << '\n';

  const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  const auto results = forge::run_pipeline(ingested.documents, lex, cfg, threads);

  fs::create_directories(a.out);
  std::map<forge::Split, std::ofstream> files;
  for (auto split : forge::kSplits) {
    const auto path = fs::path(a.out) / (std::string(forge::to_string(split)) + ".tsv");
    files[split].open(path, std::ios::binary);
    if (!files[split]) throw forge::LoadError("cannot write " + path.string());
    files[split] << forge::tsv_header() << '\n';
  }
  forge::DatasetStats stats;
  std::size_t rejected = 0;
  for (const auto& doc : results) {
    for (const auto& ex : doc.examples) {
      files[doc.split] << forge::to_tsv_row(ex) << '\n';
      stats.add(ex, doc.split);
    }
    for (const auto& msg : doc.rejected) std::cerr << "rejected: " << msg << '\n';
    rejected += doc.rejected.size();
  }
  std::cerr << "documents " << ingested.documents.size() << ", skipped lines " << ingested.diagnostics.size()
            << ", examples " << stats.total << ", rejected " << rejected << '\n';
  return 0;
}

int run_split(const std::string& input, const std::string& ratios_text) {
  const auto ratios = forge::parse_split_ratios(ratios_text);
  const auto ingested = forge::ingest(input);
  for (const auto& d : ingested.diagnostics) std::cerr << input << ':' << d.line << ": skipped: " << d.message << '\n';
  for (const auto& doc : ingested.documents) {
    std::cout << doc.doc_id() << '\t' << forge::to_string(forge::assign_split(doc.doc_id(), ratios)) << '\n';
  }
  return 0;
}

int run_downsample(const std::string& in, const std::string& out, double keep_prob, std::uint64_t seed) {
  if (!(keep_prob >= 0.0 && keep_prob <= 1.0)) throw forge::ConfigError("--keep-prob must be in [0, 1]");
  const auto kept = forge::downsample(read_tsv_file(in), keep_prob, seed);
  if (out == "-") {
    forge::write_tsv(std::cout, kept);
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw forge::LoadError("cannot write " + out);
    forge::write_tsv(f, kept);
  }
  return 0;
}

int run_stats(const std::vector<std::string>& inputs, bool as_json) {
  forge::DatasetStats stats;
  std::vector<std::string> files;
  for (const auto& p : inputs) {
    if (fs::is_directory(p)) {
      for (const auto& e : fs::directory_iterator(p)) {
        if (e.path().extension() == ".tsv") files.push_back(e.path().string());
      }
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto name = fs::path(f).stem().string();
    for (const auto& ex : read_tsv_file(f)) {
      std::optional<forge::Split> split;
      for (auto s : forge::kSplits) {
        if (forge::to_string(s) == name) split = s;
      }
      stats.add(ex, split);
    }
  }
  if (!as_json) {
    std::cout << forge::format_stats(stats);
    return 0;
  }
  nlohmann::json types = nlohmann::json::object();
  for (const auto& t : forge::kDiscourseTypes) {
    types[std::string(t.code)] = {{"count", stats.type_counts[static_cast<std::size_t>(t.type)]},
                                  {"percent", stats.type_percent(t.type)}};
  }
  nlohmann::json connectives = nlohmann::json::array();
  for (const auto& [c, n] : stats.connectives_by_count()) {
    connectives.push_back({{"connective", c}, {"count", n}, {"percent", stats.percent(n)}});
  }
  std::cout << nlohmann::json{{"total", stats.total},
                              {"splits", stats.split_totals},
                              {"discourse_types", types},
                              {"connectives", connectives}}
                   .dump(2)
            << '\n';
  return 0;
}

int run_score(const std::string& gold_path, const std::string& pred_path, const std::string& metric) {
  const auto gold = read_tsv_file(gold_path);
  const auto pred = read_predictions(pred_path);
  check_counts(gold.size(), pred.size());
  const bool want_sari = metric != "em", want_em = metric != "sari";
  double sari_sum = 0.0;
  std::array<forge::SariScores, forge::kSariMaxN> per_n{};
  std::size_t matches = 0, scored = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto reference = gold[i].coherent().texts();
    if (want_em && forge::exact_match(pred[i], reference)) ++matches;
    if (want_sari && !pred[i].empty()) {
      const auto s = forge::sari(gold[i].incoherent().texts(), pred[i], reference);
      sari_sum += s.sari;
      for (std::size_t n = 0; n < per_n.size(); ++n) {
        per_n[n].keep += s.per_n[n].keep;
        per_n[n].add += s.per_n[n].add;
        per_n[n].del += s.per_n[n].del;
      }
      ++scored;
    }
  }
  nlohmann::json report = {{"count", gold.size()}};
  if (want_em) report["exact_match"] = gold.empty() ? 0.0 : static_cast<double>(matches) / gold.size();
  if (want_sari) {
    const double d = scored ? static_cast<double>(scored) : 1.0;
    report["sari"] = sari_sum / d;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t n = 0; n < per_n.size(); ++n) {
      rows.push_back({{"n", n + 1}, {"keep", per_n[n].keep / d}, {"add", per_n[n].add / d}, {"delete", per_n[n].del / d}});
    }
    report["per_n"] = rows;
    report["empty_predictions"] = gold.size() - scored;
  }
  std::cout << report.dump(2) << '\n';
  return 0;
}

int run_analyze(const std::string& gold_path, const std::string& pred_path, const std::string& lexicon_path) {
  const auto lex = lexicons_from(lexicon_path);
  const auto gold = read_tsv_file(gold_path);
  const auto pred = read_predictions(pred_path);
  check_counts(gold.size(), pred.size());
  std::vector<forge::AnalysisItem> items;
  for (std::size_t i = 0; i < gold.size(); ++i) items.push_back(forge::analysis_item_from_text(gold[i], pred[i]));
  const auto report = forge::analyze(items, lex.connective_forms());
  for (const auto& d : report.diagnostics) std::cerr << "skipped: " << d << '\n';
  std::cout << forge::report_to_json(report).dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence-fusion dataset toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate train/dev/test TSVs from annotated JSON lines");
  generate->add_option("--input", gen.input, "Annotated documents (JSON lines)")->required();
  generate->add_option("--lexicons", gen.lexicons, "Lexicon file (default: built-in)");
  generate->add_option("--out", gen.out, "Output directory")->required();
  generate->add_option("--seed", gen.seed, "RNG seed for negative sampling");
  generate->add_option("--negative-rate", gen.negative_rate, "Probability of keeping an unmatched pair");
  generate->add_option("--min-tokens", gen.min_tokens, "Minimum sentence length in tokens");
  generate->add_flag("--allow-non-ascii", gen.allow_non_ascii, "Keep sentences with non-ASCII characters");
  generate->add_option("--be-tense", gen.be_tense, "Copula tense for appositions: present|matrix");
  generate->add_option("--ratios", gen.ratios, "train,dev,test ratios");
  generate->add_option("--threads", gen.threads, "Worker threads (default: hardware concurrency)");

  std::string split_input, split_ratios = "0.98,0.01,0.01";
  auto* split = app.add_subcommand("split", "Print the split assigned to each document");
  split->add_option("--input", split_input, "Annotated documents (JSON lines)")->required();
  split->add_option("--ratios", split_ratios, "train,dev,test ratios");

  std::string ds_in = "-", ds_out = "-";
  double keep_prob = 0.1;
  std::uint64_t ds_seed = 0;
  auto* down = app.add_subcommand("downsample", "Down-sample and/but/anaphora examples of a TSV");
  down->add_option("--in", ds_in, "Input TSV (- for stdin)");
  down->add_option("--out", ds_out, "Output TSV (- for stdout)");
  down->add_option("--keep-prob", keep_prob, "Keep probability for targeted examples");
  down->add_option("--seed", ds_seed, "RNG seed");

  std::vector<std::string> stats_in;
  bool stats_json = false;
  auto* stats = app.add_subcommand("stats", "Discourse type and connective distribution");
  stats->add_option("inputs", stats_in, "TSV files or directories")->required();
  stats->add_flag("--json", stats_json, "Emit JSON");

  std::string score_gold, score_pred, metric = "both";
  auto* score = app.add_subcommand("score", "SARI and exact match of predictions against gold TSV");
  score->add_option("--gold", score_gold, "Gold TSV")->required();
  score->add_option("--pred", score_pred, "Predictions, one tokenized fusion per line")->required();
  score->add_option("--metric", metric, "sari|em|both")->check(CLI::IsMember({"sari", "em", "both"}));

  std::string an_gold, an_pred, an_lex;
  auto* analyze = app.add_subcommand("analyze", "Connective and pronoun alignment analysis");
  analyze->add_option("--gold", an_gold, "Gold TSV")->required();
  analyze->add_option("--pred", an_pred, "Predictions, one tokenized fusion per line")->required();
  analyze->add_option("--lexicons", an_lex, "Lexicon file (default: built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*split) return run_split(split_input, split_ratios);
    if (*down) return run_downsample(ds_in, ds_out, keep_prob, ds_seed);
    if (*stats) return run_stats(stats_in, stats_json);
    if (*score) return run_score(score_gold, score_pred, metric);
    if (*analyze) return run_analyze(an_gold, an_pred, an_lex);
  } catch (const forge::ConfigError& e) {
    std::cerr << "forge: " << e.what() << '\n';
    return kConfigError;
  } catch (const forge::ValidationError& e) {
    std::cerr << "forge: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "forge: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
