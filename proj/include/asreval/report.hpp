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

#ifndef ASREVAL_REPORT_HPP_
#define ASREVAL_REPORT_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "asreval/corpus.hpp"
#include "asreval/metrics.hpp"
#include "asreval/normalize.hpp"

namespace asreval {

enum class EmitFormat { csv, json, markdown };

const char* format_name(EmitFormat format);
const char* format_extension(EmitFormat format);     // csv, json, md
EmitFormat parse_format(std::string_view name);      // throws ConfigError

// WER percent matrix: normalizer schemes as rows, models as columns.
// Cells hold two-decimal percent strings, or "NA" when a cell cannot be
// scored (no utterances, or undefined WER).
struct ReportMatrix {
  std::string scenario;  // "all" or a scenario name
  Aggregation aggregation = Aggregation::micro;
  std::vector<std::string> schemes;
  std::vector<std::string> models;
  std::vector<std::vector<std::string>> cells;  // [scheme][model]
  std::vector<std::string> warnings;

  bool operator==(const ReportMatrix&) const = default;
};

struct SubstitutionEntry {
  std::string ref_word;
  std::string hyp_word;
  std::int64_t count = 0;

  bool operator==(const SubstitutionEntry&) const = default;
};

// All substitution pairs of one (scheme, model) evaluation, ordered by
// count descending, then reference and hypothesis word ascending. The sum
// of pair counts always equals `substitutions`.
struct ErrorGroup {
  std::string scheme;
  std::string model;
  std::int64_t substitutions = 0;
  std::vector<SubstitutionEntry> pairs;

  bool operator==(const ErrorGroup&) const = default;
};

struct ErrorReport {
  int top_k = 20;  // rows shown per group in csv/markdown emissions
  std::vector<ErrorGroup> groups;

  bool operator==(const ErrorReport&) const = default;
};

struct EvalOptions {
  int jobs = 1;    // worker threads; output is identical for any value
  int top_k = 20;
  std::shared_ptr<const StageConfig> config;  // null selects the defaults
};

struct EvalResult {
  ReportMatrix overall;
  // Per-scenario matrices: the five named scenarios in fixed order when
  // present, then other scenarios by first appearance.
  std::vector<ReportMatrix> scenarios;
  ErrorReport errors;
  // Breakdown-level notices, e.g. a named scenario with no utterances
  // being omitted from the per-scenario list.
  std::vector<std::string> warnings;
};

// Runs every (scheme, model) evaluation over the corpus. References and
// hypotheses are normalized with the same pipeline. An utterance whose
// reference normalizes to zero words is excluded from the macro mean and
// contributes only insertions to micro counts; each case is recorded in
// the matrix warnings. Throws ConfigError for empty scheme/model lists or
// models missing from the manifest.
EvalResult evaluate_corpus(const CorpusManifest& corpus,
                           const std::vector<Scheme>& schemes,
                           const std::vector<std::string>& models,
                           Aggregation aggregation,
                           const EvalOptions& options = {});

// Just the overall matrix.
ReportMatrix evaluate_matrix(const CorpusManifest& corpus,
                             const std::vector<Scheme>& schemes,
                             const std::vector<std::string>& models,
                             Aggregation aggregation,
                             const EvalOptions& options = {});

// The overall matrix first, then one matrix per scenario present.
std::vector<ReportMatrix> scenario_breakdown(
    const CorpusManifest& corpus, const std::vector<Scheme>& schemes,
    const std::vector<std::string>& models, Aggregation aggregation,
    const EvalOptions& options = {});

// Deterministic byte emission. CSV and markdown list at most top_k
// substitution rows per group; JSON carries the full report and round
// trips losslessly.
std::string emit(const ReportMatrix& matrix, EmitFormat format);
std::string emit(const ErrorReport& report, EmitFormat format);

ReportMatrix matrix_from_json(std::string_view text);   // throws DataError
ErrorReport errors_from_json(std::string_view text);    // throws DataError

}  // namespace asreval

#endif  // ASREVAL_REPORT_HPP_
