// Copyright 2026 asreval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asreval/corpus.hpp"
#include "asreval/error.hpp"
#include "asreval/metrics.hpp"
#include "asreval/normalize.hpp"
#include "asreval/report.hpp"
#include "asreval/tables.hpp"

namespace {

using namespace asreval;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << data;
  if (!out) throw IoError("cannot write " + path.string());
}

// --config-dir beats ASREVAL_CONFIG_DIR; a missing directory falls back to
// the embedded defaults with a notice.
std::shared_ptr<const StageConfig> resolve_config(const std::string& flag) {
  std::string dir = flag;
  if (dir.empty()) {
    const char* env = std::getenv("ASREVAL_CONFIG_DIR");
    if (env && *env) dir = env;
  }
  if (dir.empty()) return nullptr;
  if (!std::filesystem::is_directory(dir)) {
    std::cerr << "notice: config dir '" << dir
              << "' not found; using built-in defaults\n";
    return nullptr;
  }
  return std::make_shared<const StageConfig>(load_stage_config(dir));
}

Pipeline pipeline_for(const std::string& scheme_arg,
                      const std::string& config_dir) {
  return build_pipeline(parse_scheme(scheme_arg), resolve_config(config_dir));
}

std::string sanitize_filename(const std::string& name) {
  std::string out;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '-' || c == '_';
    out += ok ? c : '_';
  }
  return out.empty() ? std::string("unnamed") : out;
}

struct NormalizeArgs {
  std::vector<std::string> words;
  std::string input_file;
  std::string scheme = "english";
  std::string config_dir;
};

int cmd_normalize(const NormalizeArgs& args) {
  Pipeline pipeline = pipeline_for(args.scheme, args.config_dir);
  std::string text;
  if (!args.input_file.empty()) {
    text = read_file(args.input_file);
  } else if (!args.words.empty()) {
    for (std::size_t i = 0; i < args.words.size(); ++i) {
      if (i) text += ' ';
      text += args.words[i];
    }
  } else {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  std::cout << pipeline.apply(text) << "\n";
  return 0;
}

struct PairArgs {
  std::string ref_file;
  std::string hyp_file;
  std::string scheme = "english";
  std::string config_dir;
};

struct ScoredPair {
  TokenSequence ref;
  TokenSequence hyp;
  Alignment ops;
  EditCounts counts;
};

ScoredPair score_pair(const PairArgs& args) {
  Pipeline pipeline = pipeline_for(args.scheme, args.config_dir);
  ScoredPair out;
  out.ref = tokenize(pipeline.apply(read_file(args.ref_file)));
  out.hyp = tokenize(pipeline.apply(read_file(args.hyp_file)));
  out.ops = align(out.ref, out.hyp);
  out.counts = count_edits(out.ops, static_cast<std::int64_t>(out.ref.size()));
  return out;
}

int cmd_wer(const PairArgs& args) {
  ScoredPair scored = score_pair(args);
  WerScore score = wer(scored.counts);
  std::cout << "WER " << score.percent() << " S "
            << score.counts.substitutions << " D " << score.counts.deletions
            << " I " << score.counts.insertions << " N "
            << score.counts.reference_length << "\n";
  return 0;
}

int cmd_align(const PairArgs& args) {
  ScoredPair scored = score_pair(args);
  for (const EditOp& op : scored.ops) {
    std::cout << edit_op_name(op.kind) << " "
              << (op.ref_index >= 0 ? scored.ref[op.ref_index] : "-") << " "
              << (op.hyp_index >= 0 ? scored.hyp[op.hyp_index] : "-") << "\n";
  }
  auto subs = substitution_pairs(scored.ops, scored.ref, scored.hyp);
  if (!subs.empty()) {
    std::cout << "\nsubstitutions:\n";
    for (const auto& [ref_word, hyp_word] : subs) {
      std::cout << ref_word << " -> " << hyp_word << "\n";
    }
  }
  return 0;
}

struct EvaluateArgs {
  std::string manifest;
  std::vector<std::string> schemes;
  std::vector<std::string> models;
  std::string aggregation = "micro";
  std::string format = "markdown";
  std::string out_dir = ".";
  int jobs = 1;
  int top_k = 20;
  std::string config_dir;
};

int cmd_evaluate(const EvaluateArgs& args) {
  CorpusManifest corpus = load_manifest(args.manifest);

  std::vector<std::string> scheme_args = args.schemes;
  if (scheme_args.empty()) {
    for (Scheme s : all_schemes()) scheme_args.emplace_back(scheme_name(s));
  }
  std::vector<Scheme> schemes;
  for (const std::string& name : scheme_args) {
    Scheme s = parse_scheme(name);
    if (std::find(schemes.begin(), schemes.end(), s) != schemes.end()) {
      std::cerr << "warning: duplicate scheme '" << scheme_name(s)
                << "' ignored\n";
      continue;
    }
    schemes.push_back(s);
  }

  std::vector<std::string> models =
      args.models.empty() ? corpus.models : args.models;
  if (models.empty()) {
    throw ConfigError("manifest declares no models");
  }

  Aggregation aggregation = parse_aggregation(args.aggregation);
  EmitFormat format = parse_format(args.format);

  EvalOptions options;
  options.jobs = args.jobs;
  options.top_k = args.top_k;
  options.config = resolve_config(args.config_dir);

  EvalResult result =
      evaluate_corpus(corpus, schemes, models, aggregation, options);

  for (const std::string& warning : result.overall.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }

  std::filesystem::path out_dir(args.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + out_dir.string());
  }
  const std::string ext = format_extension(format);

  auto emit_to = [&](const std::filesystem::path& path,
                     const std::string& data) {
    write_file(path, data);
    std::cout << "wrote " << path.string() << "\n";
  };

  emit_to(out_dir / ("overall." + ext), emit(result.overall, format));
  for (const ReportMatrix& matrix : result.scenarios) {
    emit_to(out_dir / ("scenario_" + sanitize_filename(matrix.scenario) +
                       "." + ext),
            emit(matrix, format));
  }
  emit_to(out_dir / ("errors." + ext), emit(result.errors, format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transcript normalization and word error rate evaluation"};
  app.require_subcommand(1);

  NormalizeArgs norm_args;
  CLI::App* norm = app.add_subcommand(
      "normalize", "Apply a normalization scheme to text");
  norm->add_option("text", norm_args.words,
                   "Text to normalize (stdin when omitted)");
  norm->add_option("--input", norm_args.input_file, "Read text from a file");
  norm->add_option("--scheme", norm_args.scheme,
                   "none|basic|number|english|proposed1|proposed2|proposed3")
      ->capture_default_str();
  norm->add_option("--config-dir", norm_args.config_dir,
                   "Directory of table overrides");

  PairArgs wer_args;
  CLI::App* wer_cmd = app.add_subcommand(
      "wer", "Word error rate of a hypothesis file against a reference file");
  wer_cmd->add_option("ref", wer_args.ref_file, "Reference text file")
      ->required();
  wer_cmd->add_option("hyp", wer_args.hyp_file, "Hypothesis text file")
      ->required();
  wer_cmd->add_option("--scheme", wer_args.scheme, "Normalization scheme")
      ->capture_default_str();
  wer_cmd->add_option("--config-dir", wer_args.config_dir,
                      "Directory of table overrides");

  PairArgs align_args;
  CLI::App* align_cmd = app.add_subcommand(
      "align", "Word-level alignment and substitution pairs");
  align_cmd->add_option("ref", align_args.ref_file, "Reference text file")
      ->required();
  align_cmd->add_option("hyp", align_args.hyp_file, "Hypothesis text file")
      ->required();
  align_cmd->add_option("--scheme", align_args.scheme,
                        "Normalization scheme")
      ->capture_default_str();
  align_cmd->add_option("--config-dir", align_args.config_dir,
                        "Directory of table overrides");

  EvaluateArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand(
      "evaluate", "Evaluate a corpus manifest and write report files");
  eval_cmd->add_option("manifest", eval_args.manifest, "Corpus manifest file")
      ->required();
  eval_cmd->add_option("--schemes", eval_args.schemes,
                       "Schemes to evaluate (default: all)")
      ->delimiter(',');
  eval_cmd->add_option("--models", eval_args.models,
                       "Models to evaluate (default: all declared)")
      ->delimiter(',');
  eval_cmd->add_option("--aggregation", eval_args.aggregation, "micro|macro")
      ->capture_default_str();
  eval_cmd->add_option("--format", eval_args.format, "csv|json|markdown")
      ->capture_default_str();
  eval_cmd->add_option("--out", eval_args.out_dir, "Output directory")
      ->capture_default_str();
  eval_cmd->add_option("--jobs", eval_args.jobs,
                       "Worker threads (output is identical for any count)")
      ->capture_default_str();
  eval_cmd->add_option("--top-k", eval_args.top_k,
                       "Substitution rows per scheme and model")
      ->capture_default_str();
  eval_cmd->add_option("--config-dir", eval_args.config_dir,
                       "Directory of table overrides");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) return cmd_normalize(norm_args);
    if (wer_cmd->parsed()) return cmd_wer(wer_args);
    if (align_cmd->parsed()) return cmd_align(align_args);
    if (eval_cmd->parsed()) return cmd_evaluate(eval_args);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
