// atomfol: Atomic if-then statements to first-order rules.
//
//   atomfol convert --input atomic.csv --format atomic-csv --output data.jsonl
//   atomfol eval --pred predictions.txt --gold gold.txt
//   atomfol split --input data.jsonl --fraction 0.85 --seed 7 --train t.jsonl --eval e.jsonl
//   atomfol sample --input data.jsonl --sample 2000 --seed 7 --output s.jsonl
//   atomfol stats --input atomic.csv --format atomic-csv

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atomfol/app.hpp"

namespace {

using atomfol::RunConfig;

struct RawOptions {
  std::string format = "tsv";
  std::string tagger = "builtin";
  std::string category = "All";
};

void add_category(CLI::App* cmd, std::string& category) {
  cmd->add_option("--category", category, "Persona, Mental-State, Event or All")
      ->check(CLI::IsMember({"All", "Persona", "Mental-State", "Mental", "Event"}))
      ->capture_default_str();
}

void add_raw_input(CLI::App* cmd, RunConfig& cfg, RawOptions& raw, bool allow_dataset) {
  cmd->add_option("-i,--input", cfg.inputs, "input file(s)")->required();
  std::vector<std::string> formats = {"atomic-csv", "tsv", "pretagged"};
  if (allow_dataset) formats.emplace_back("dataset");
  cmd->add_option("--format", raw.format, "input layout")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--tagger", raw.tagger, "builtin | pretagged")
      ->check(CLI::IsMember({"builtin", "pretagged"}))
      ->capture_default_str();
  cmd->add_option("--lexicon", cfg.lexicon, "word<TAB>TAG overrides for the builtin tagger");
  cmd->add_flag("--keep-personz", cfg.keep_personz,
                "keep PersonZ records and list their ids in the report");
  cmd->add_option("--jobs", cfg.jobs, "translation workers")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate Atomic if-then statements into first-order rules and score predictions"};
  app.set_version_flag("--version", atomfol::version_string());
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  RunConfig cfg;
  RawOptions raw;
  std::string& category = raw.category;
  bool no_quantifiers = false;
  std::size_t sample_k = 0;

  auto* convert = app.add_subcommand("convert", "build a (sentence, formula) dataset");
  add_raw_input(convert, cfg, raw, false);
  add_category(convert, category);
  convert->add_flag("--no-quantifiers", no_quantifiers,
                    "write unquantified formulas to the --formulas file");
  convert->add_option("--seed", cfg.seed, "seed for --sample")->capture_default_str();
  convert->add_option("--sample", sample_k, "keep a seeded sample of K pairs");
  convert->add_option("-o,--output", cfg.output, "structured-lines dataset");
  convert->add_option("--sentences", cfg.sentences_out, "parallel sentence file");
  convert->add_option("--formulas", cfg.formulas_out, "parallel formula file");
  convert->add_option("--report", cfg.report, "run report (default <output>.report.json)");

  auto* eval = app.add_subcommand("eval", "score predicted formulas");
  eval->add_option("--pred", cfg.pred, "predicted formulas, one per line");
  eval->add_option("--gold", cfg.gold, "gold formulas, one per line");
  eval->add_option("--pairs", cfg.pairs, "structured lines with pred and gold fields");
  eval->add_option("--report", cfg.report, "write the scores as JSON");

  auto* split = app.add_subcommand("split", "seeded train/eval split of a dataset");
  split->add_option("-i,--input", cfg.inputs, "dataset file")->required()->expected(1);
  add_category(split, category);
  split->add_option("--fraction", cfg.fraction, "training fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  split->add_option("--seed", cfg.seed)->capture_default_str();
  split->add_option("--train", cfg.train_out)->required();
  split->add_option("--eval", cfg.eval_out)->required();
  split->add_option("--meta", cfg.report, "metadata sidecar (default <train>.meta.json)");

  auto* samp = app.add_subcommand("sample", "seeded sample of a dataset");
  samp->add_option("-i,--input", cfg.inputs, "dataset file")->required()->expected(1);
  add_category(samp, category);
  samp->add_option("--sample,-k", sample_k, "sample size")->required();
  samp->add_option("--seed", cfg.seed)->capture_default_str();
  samp->add_option("-o,--output", cfg.output)->required();
  samp->add_option("--meta", cfg.report, "metadata sidecar (default <output>.meta.json)");

  auto* stats = app.add_subcommand("stats", "dataset statistics");
  add_raw_input(stats, cfg, raw, true);
  add_category(stats, category);
  stats->add_option("--report", cfg.report, "write the statistics as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : atomfol::kExitInput;
  }

  cfg.format = *atomfol::parse_input_format(raw.format);
  cfg.tagger = raw.tagger == "pretagged" ? atomfol::TaggerMode::Pretagged
                                         : atomfol::TaggerMode::Builtin;
  cfg.quantifiers = !no_quantifiers;
  cfg.category = atomfol::parse_category(category);
  if (convert->count("--sample") > 0 || samp->parsed()) cfg.sample = sample_k;
  if (!(cfg.fraction > 0.0 && cfg.fraction < 1.0)) {
    std::cerr << "error: --fraction must lie strictly between 0 and 1\n";
    return atomfol::kExitInput;
  }
  if (split->parsed() || samp->parsed()) cfg.format = atomfol::InputFormat::Dataset;

  if (convert->parsed()) return atomfol::cmd_convert(cfg, std::cout, std::cerr);
  if (eval->parsed()) return atomfol::cmd_eval(cfg, std::cout, std::cerr);
  if (split->parsed()) return atomfol::cmd_split(cfg, std::cout, std::cerr);
  if (samp->parsed()) return atomfol::cmd_sample(cfg, std::cout, std::cerr);
  return atomfol::cmd_stats(cfg, std::cout, std::cerr);
}
