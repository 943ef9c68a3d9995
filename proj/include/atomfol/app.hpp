#pragma once

// Subcommand implementations behind the `atomfol` tool. Each command takes
// a RunConfig plus the two output streams and returns the process exit
// code: 0 success, 2 usage or input error, 3 empty result.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "atomfol/dataset.hpp"
#include "atomfol/dimension.hpp"
#include "atomfol/error.hpp"
#include "atomfol/fol.hpp"
#include "atomfol/ingest.hpp"
#include "atomfol/metrics.hpp"
#include "atomfol/tagger.hpp"
#include "atomfol/translator.hpp"

namespace atomfol {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitEmpty = 3;

enum class InputFormat { AtomicCsv, Tsv, Pretagged, Dataset };
enum class TaggerMode { Builtin, Pretagged };

inline std::string_view to_string(InputFormat f) {
  switch (f) {
    case InputFormat::AtomicCsv: return "atomic-csv";
    case InputFormat::Tsv: return "tsv";
    case InputFormat::Pretagged: return "pretagged";
    case InputFormat::Dataset: return "dataset";
  }
  return "";
}

inline std::optional<InputFormat> parse_input_format(std::string_view s) {
  for (auto f : {InputFormat::AtomicCsv, InputFormat::Tsv, InputFormat::Pretagged,
                 InputFormat::Dataset}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

inline std::string_view to_string(TaggerMode m) {
  return m == TaggerMode::Builtin ? "builtin" : "pretagged";
}

struct RunConfig {
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::Tsv;
  bool quantifiers = true;
  std::optional<Category> category;  // nullopt = All
  std::uint64_t seed = 0;
  double fraction = 0.85;
  std::optional<std::size_t> sample;
  TaggerMode tagger = TaggerMode::Builtin;
  std::string lexicon;
  bool keep_personz = false;
  unsigned jobs = 1;

  // outputs
  std::string output;
  std::string sentences_out;
  std::string formulas_out;
  std::string train_out;
  std::string eval_out;
  std::string report;

  // eval inputs
  std::string pred;
  std::string gold;
  std::string pairs;

  /// The settings that determine a run's outputs. Worker count is left out
  /// since it never changes them.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["inputs"] = inputs;
    j["format"] = to_string(format);
    j["quantifiers"] = quantifiers;
    j["category"] = category ? std::string(to_string(*category)) : std::string("All");
    j["seed"] = seed;
    j["fraction"] = fraction;
    j["sample"] = sample ? nlohmann::ordered_json(*sample) : nlohmann::ordered_json(nullptr);
    j["tagger"] = to_string(tagger);
    j["lexicon"] = lexicon;
    j["keep_personz"] = keep_personz;
    j["output"] = output;
    return j;
  }
};

inline std::string version_string() {
  return std::string("atomfol ") + kToolVersion + " (dataset format " +
         std::to_string(kDatasetFormatVersion) + ", report format " +
         std::to_string(kReportFormatVersion) + ")";
}

namespace detail {

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    chomp(line);
    lines.push_back(std::move(line));
  }
  return lines;
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

inline std::string jsonl_text(const std::vector<DatasetPair>& pairs) {
  std::ostringstream s;
  emit_jsonl(pairs, s);
  return s.str();
}

inline std::vector<DatasetPair> read_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return read_jsonl(in);
}

inline nlohmann::ordered_json counts_json(const std::vector<DatasetPair>& pairs) {
  std::map<Category, std::size_t> by_cat;
  std::map<Dimension, std::size_t> by_dim;
  for (const auto& p : pairs) {
    ++by_cat[p.category];
    ++by_dim[p.dimension];
  }
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (Category c : kAllCategories) cats[std::string(to_string(c))] = by_cat[c];
  nlohmann::ordered_json dims = nlohmann::ordered_json::object();
  for (Dimension d : kAllDimensions) dims[std::string(to_string(d))] = by_dim[d];
  return {{"total", pairs.size()}, {"category", cats}, {"dimension", dims}};
}

inline void report_warnings(const IngestLog& log, std::ostream& err) {
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, log.messages.size()); ++i) {
    err << "warning: " << log.messages[i] << '\n';
  }
  if (log.messages.size() > kShown) {
    err << "warning: ... " << (log.messages.size() - kShown) << " more\n";
  }
}

}  // namespace detail

/// Everything the convert pipeline produces before anything is written.
struct PipelineResult {
  int exit_code = kExitOk;
  std::vector<DatasetPair> pairs;
  nlohmann::ordered_json report;
};

/// ingest -> normalize -> PersonZ filter -> category filter -> translate
/// -> render -> (sample). Record order is preserved for any worker count.
inline PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& err) {
  PipelineResult result;
  auto fail = [&](const std::string& msg) {
    err << "error: " << msg << '\n';
    result.exit_code = kExitInput;
    return result;
  };

  if (cfg.inputs.empty()) return fail("no input files");
  Tagger tagger;
  if (!cfg.lexicon.empty()) {
    std::ifstream lex(cfg.lexicon);
    if (!lex) return fail("cannot read lexicon " + cfg.lexicon);
    try {
      tagger = Tagger(Tagger::read_lexicon(lex));
    } catch (const InputError& e) {
      return fail(e.what());
    }
  }
  const InputFormat format =
      cfg.tagger == TaggerMode::Pretagged ? InputFormat::Pretagged : cfg.format;
  if (format == InputFormat::Dataset) return fail("convert needs raw Atomic input");

  std::vector<AtomicRecord> records;
  IngestLog log;
  for (std::size_t f = 0; f < cfg.inputs.size(); ++f) {
    std::ifstream in(cfg.inputs[f], std::ios::binary);
    if (!in) return fail("cannot read " + cfg.inputs[f]);
    IngestLog file_log;
    std::vector<AtomicRecord> got;
    try {
      switch (format) {
        case InputFormat::AtomicCsv: got = read_atomic_csv(in, tagger, file_log); break;
        case InputFormat::Tsv: got = read_tsv(in, tagger, file_log); break;
        default: got = read_pretagged_tsv(in, file_log); break;
      }
    } catch (const InputError& e) {
      return fail(cfg.inputs[f] + ": " + e.what());
    }
    for (auto& m : file_log.messages) m = cfg.inputs[f] + ": " + m;
    if (cfg.inputs.size() > 1) {
      for (auto& r : got) r.id = "f" + std::to_string(f + 1) + ":" + r.id;
    }
    log += file_log;
    records.insert(records.end(), std::make_move_iterator(got.begin()),
                   std::make_move_iterator(got.end()));
  }
  detail::report_warnings(log, err);
  const std::size_t read = records.size();

  std::size_t personz = 0;
  std::vector<std::string> personz_ids;
  if (cfg.keep_personz) {
    for (const auto& r : records) {
      if (mentions_personz(r)) personz_ids.push_back(r.id);
    }
  } else {
    auto filtered = filter_personz(std::move(records));
    records = std::move(filtered.kept);
    personz = filtered.removed;
  }
  records = filter_category(std::move(records), cfg.category);

  std::vector<std::optional<DatasetPair>> translated(records.size());
  std::vector<std::optional<TranslationFailure>> failures(records.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        translated[i] = make_pair(records[i]);
      } catch (const TranslationError& e) {
        failures[i] = e.failure();
      }
    }
  };
  const std::size_t jobs =
      std::clamp<std::size_t>(cfg.jobs, 1, std::max<std::size_t>(1, records.size() / 256));
  if (jobs == 1) {
    work(0, records.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (records.size() + jobs - 1) / jobs;
    for (std::size_t b = 0; b < records.size(); b += chunk) {
      workers.emplace_back(work, b, std::min(records.size(), b + chunk));
    }
  }

  std::map<TranslationFailure, std::size_t> dropped;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (translated[i]) {
      result.pairs.push_back(std::move(*translated[i]));
    } else if (failures[i]) {
      ++dropped[*failures[i]];
    }
  }
  const std::size_t translated_count = result.pairs.size();

  if (cfg.sample) {
    try {
      result.pairs = sample(result.pairs, *cfg.sample, cfg.seed);
    } catch (const InputError& e) {
      return fail(e.what());
    }
  }

  nlohmann::ordered_json drops;
  drops["personz"] = personz;
  for (auto f : {TranslationFailure::Disjunction, TranslationFailure::EmptyVerb,
                 TranslationFailure::MultiSubject, TranslationFailure::NoSubject}) {
    drops[std::string(to_string(f))] = dropped[f];
  }
  auto& rep = result.report;
  rep["tool_version"] = kToolVersion;
  rep["report_format"] = kReportFormatVersion;
  rep["dataset_format"] = kDatasetFormatVersion;
  rep["config"] = cfg.to_json();
  rep["seed"] = cfg.seed;
  rep["rows_read"] = log.rows;
  rep["records_read"] = read;
  rep["translated"] = translated_count;
  rep["emitted"] = result.pairs.size();
  rep["dropped"] = drops;
  rep["warnings"] = {{"malformed_rows", log.malformed_rows},
                     {"none_answers", log.none_answers},
                     {"empty_inferences", log.empty_inferences},
                     {"unresolved_pronouns", log.normalize.unresolved_pronouns}};
  if (cfg.keep_personz) rep["personz_ids"] = personz_ids;
  rep["counts"] = detail::counts_json(result.pairs);

  if (result.pairs.empty()) {
    err << "error: no record was translated\n";
    result.exit_code = kExitEmpty;
  }
  return result;
}

inline std::string report_path_for(const RunConfig& cfg, const std::string& fallback_base,
                                   const char* suffix) {
  return cfg.report.empty() ? fallback_base + suffix : cfg.report;
}

/// `convert`: writes the dataset (structured lines and/or parallel text
/// files) and a run report next to it.
inline int cmd_convert(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)out;
  if (cfg.output.empty() && cfg.formulas_out.empty()) {
    err << "error: convert needs --output or --formulas\n";
    return kExitInput;
  }
  if (cfg.sentences_out.empty() != cfg.formulas_out.empty()) {
    err << "error: --sentences and --formulas go together\n";
    return kExitInput;
  }
  PipelineResult r = run_pipeline(cfg, err);
  if (r.exit_code == kExitInput) return r.exit_code;
  const std::string base = cfg.output.empty() ? cfg.formulas_out : cfg.output;
  try {
    detail::write_text(report_path_for(cfg, base, ".report.json"), r.report.dump(2) + "\n");
    if (r.exit_code != kExitOk) return r.exit_code;
    if (!cfg.output.empty()) detail::write_text(cfg.output, detail::jsonl_text(r.pairs));
    if (!cfg.formulas_out.empty()) {
      std::ostringstream s, f;
      emit_parallel(r.pairs, s, f, cfg.quantifiers);
      detail::write_text(cfg.sentences_out, s.str());
      detail::write_text(cfg.formulas_out, f.str());
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "translated " << r.report["translated"].get<std::size_t>() << " of "
      << r.report["records_read"].get<std::size_t>() << " records\n";
  return kExitOk;
}

/// `eval`: scores predictions against gold formulas and prints a table.
inline int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::string> pred, gold;
  try {
    if (!cfg.pairs.empty()) {
      std::size_t lineno = 0;
      for (const auto& line : detail::read_lines(cfg.pairs)) {
        ++lineno;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("pred") || !j.contains("gold") ||
            !j["pred"].is_string() || !j["gold"].is_string()) {
          throw InputError(cfg.pairs + " line " + std::to_string(lineno) +
                           ": expected {\"pred\": ..., \"gold\": ...}");
        }
        pred.push_back(j["pred"].get<std::string>());
        gold.push_back(j["gold"].get<std::string>());
      }
    } else if (!cfg.pred.empty() && !cfg.gold.empty()) {
      pred = detail::read_lines(cfg.pred);
      gold = detail::read_lines(cfg.gold);
    } else {
      throw InputError("eval needs --pred and --gold, or --pairs");
    }
    const EvalReport report = evaluate(pred, gold);
    out << render_table(report);
    if (!cfg.report.empty()) detail::write_text(cfg.report, report.to_json().dump(2) + "\n");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

namespace detail {

inline nlohmann::ordered_json selection_metadata(const RunConfig& cfg) {
  nlohmann::ordered_json meta;
  meta["tool_version"] = kToolVersion;
  meta["dataset_format"] = kDatasetFormatVersion;
  meta["input"] = cfg.inputs.empty() ? std::string() : cfg.inputs.front();
  meta["seed"] = cfg.seed;
  meta["category"] = cfg.category ? std::string(to_string(*cfg.category)) : std::string("All");
  return meta;
}

inline std::vector<DatasetPair> load_selected(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw InputError("expected exactly one dataset input");
  return filter_category(read_dataset(cfg.inputs.front()), cfg.category);
}

}  // namespace detail

/// `split`: seeded train/eval partition of a dataset file.
inline int cmd_split(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)out;
  try {
    if (cfg.train_out.empty() || cfg.eval_out.empty()) {
      throw InputError("split needs --train and --eval");
    }
    const auto pairs = detail::load_selected(cfg);
    const auto parts = split(pairs, cfg.fraction, cfg.seed);
    detail::write_text(cfg.train_out, detail::jsonl_text(parts.train));
    detail::write_text(cfg.eval_out, detail::jsonl_text(parts.eval));
    auto meta = detail::selection_metadata(cfg);
    meta["fraction"] = cfg.fraction;
    meta["counts"] = {{"input", pairs.size()},
                      {"train", parts.train.size()},
                      {"eval", parts.eval.size()}};
    detail::write_text(report_path_for(cfg, cfg.train_out, ".meta.json"), meta.dump(2) + "\n");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

/// `sample`: seeded subset of k pairs.
inline int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  (void)out;
  try {
    if (!cfg.sample) throw InputError("sample needs --sample K");
    if (cfg.output.empty()) throw InputError("sample needs --output");
    const auto pairs = detail::load_selected(cfg);
    const auto picked = sample(pairs, *cfg.sample, cfg.seed);
    detail::write_text(cfg.output, detail::jsonl_text(picked));
    auto meta = detail::selection_metadata(cfg);
    meta["k"] = *cfg.sample;
    meta["counts"] = {{"input", pairs.size()}, {"sampled", picked.size()}};
    detail::write_text(report_path_for(cfg, cfg.output, ".meta.json"), meta.dump(2) + "\n");
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

/// `stats`: per-dimension and per-category counts and mean formula length.
/// Raw input is run through the pipeline so the PersonZ removals can be
/// counted; a dataset file is summarized as is.
inline int cmd_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<DatasetPair> pairs;
  nlohmann::ordered_json stats;
  try {
    if (cfg.format == InputFormat::Dataset && cfg.tagger != TaggerMode::Pretagged) {
      pairs = detail::load_selected(cfg);
      stats["personz_removed"] = nullptr;
    } else {
      PipelineResult r = run_pipeline(cfg, err);
      if (r.exit_code == kExitInput) return r.exit_code;
      pairs = std::move(r.pairs);
      stats["personz_removed"] = r.report["dropped"]["personz"];
      stats["records_read"] = r.report["records_read"];
      stats["dropped"] = r.report["dropped"];
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  double tokens = 0.0, tokens_nq = 0.0;
  for (const auto& p : pairs) {
    tokens += static_cast<double>(tokenize(p.formula).size());
    tokens_nq += static_cast<double>(tokenize(p.formula_nq).size());
  }
  const double n = pairs.empty() ? 1.0 : static_cast<double>(pairs.size());
  stats["counts"] = detail::counts_json(pairs);
  stats["mean_formula_tokens"] = tokens / n;
  stats["mean_formula_nq_tokens"] = tokens_nq / n;

  out << "pairs " << pairs.size() << "\n";
  for (Category c : kAllCategories) {
    out << "  " << std::left << std::setw(14) << to_string(c)
        << stats["counts"]["category"][std::string(to_string(c))].get<std::size_t>() << "\n";
  }
  for (Dimension d : kAllDimensions) {
    out << "  " << std::left << std::setw(14) << to_string(d)
        << stats["counts"]["dimension"][std::string(to_string(d))].get<std::size_t>() << "\n";
  }
  out << std::fixed << std::setprecision(2) << "mean formula tokens " << tokens / n
      << " (unquantified " << tokens_nq / n << ")\n";
  if (!stats["personz_removed"].is_null()) {
    out << "PersonZ records removed " << stats["personz_removed"].get<std::size_t>() << "\n";
  }
  if (!cfg.report.empty()) {
    try {
      detail::write_text(cfg.report, stats.dump(2) + "\n");
    } catch (const InputError& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }
  return pairs.empty() ? kExitEmpty : kExitOk;
}

}  // namespace atomfol
