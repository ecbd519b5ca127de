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

#ifndef ASREVAL_CORPUS_HPP_
#define ASREVAL_CORPUS_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asreval/text.hpp"

namespace asreval {

enum class ScenarioKind { takeoff, ecam, fordec, landing, interview, other };

const char* scenario_kind_name(ScenarioKind kind);

// Scenario label. The five cockpit scenarios are recognized
// case-insensitively; anything else keeps its (case-folded) name and kind
// other.
struct ScenarioTag {
  ScenarioKind kind = ScenarioKind::other;
  std::string name;

  bool operator==(const ScenarioTag&) const = default;
};

ScenarioTag parse_scenario(std::string_view name);

// One utterance: a reference transcript plus one hypothesis per model.
// Hypotheses keep manifest order.
struct UtteranceRecord {
  std::string id;
  ScenarioTag scenario;
  Transcript reference;
  std::vector<std::pair<std::string, Transcript>> hypotheses;
  std::optional<double> duration_s;
  bool allow_empty_reference = false;

  const Transcript* hypothesis_for(std::string_view model) const;

  bool operator==(const UtteranceRecord&) const = default;
};

struct CorpusManifest {
  std::vector<std::string> models;  // declared order = report column order
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<UtteranceRecord> records;

  bool operator==(const CorpusManifest&) const = default;
};

// Parses manifest text. Line-oriented, UTF-8, # comments and blank lines
// skipped. Directives:
//   model <id>                      declare a model column
//   meta <key> <value...>           free-form metadata
//   utt <id> <scenario> [empty_ref] [lang=de|en|mixed]   begin a record
//   ref <text>          inline reference for the open record
//   ref_file <path>     reference loaded from a file (relative to base_dir)
//   hyp <model> <text>  inline hypothesis
//   hyp_file <model> <path>
//   dur <seconds>       optional utterance duration
// Validation failures (duplicate id, undeclared model, missing or empty
// reference without empty_ref, bad UTF-8, negative duration, malformed
// rows) throw DataError naming <source_name>:<line>. Missing referenced
// transcript files throw IoError.
CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& base_dir,
                              const std::string& source_name);

// Reads and parses a manifest file; IoError if unreadable.
CorpusManifest load_manifest(const std::filesystem::path& path);

// Canonical textual form: models, metadata, then records with inline
// transcripts. parse_manifest(serialize_manifest(m)) reproduces m.
std::string serialize_manifest(const CorpusManifest& manifest);

// Subset preserving record order. A scenario filter keeps matching
// records; a model filter reduces every record to that model's hypothesis
// and drops records that lack it. Unknown model -> ConfigError.
CorpusManifest filter(const CorpusManifest& manifest,
                      const std::optional<ScenarioTag>& scenario,
                      const std::optional<std::string>& model);

}  // namespace asreval

#endif  // ASREVAL_CORPUS_HPP_
