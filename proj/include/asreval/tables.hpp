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

#ifndef ASREVAL_TABLES_HPP_
#define ASREVAL_TABLES_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace asreval {

// Word classes for the cardinal-number parser. All keys are case-folded.
struct NumberTables {
  std::unordered_map<std::string, int> units;  // zero..nine -> 0..9
  std::unordered_map<std::string, int> teens;  // ten..nineteen -> 10..19
  std::unordered_map<std::string, int> tens;   // twenty..ninety -> 20..90
  std::unordered_set<std::string> hundred_words;
  std::unordered_set<std::string> thousand_words;
  std::unordered_set<std::string> point_words;
  std::unordered_set<std::string> and_words;
};

enum class IcaoMode {
  // Fold a code word only when it is fully uppercase in the source or part
  // of a contiguous run of two or more code words.
  uppercase_or_run,
  // Fold every code word regardless of casing or context.
  always,
};

// Lexicons and switches consumed by the normalization stages. Lookup keys
// are stored case-folded (compound keys additionally dehyphenated), so
// matching at apply time is a plain hash lookup.
struct StageConfig {
  std::unordered_set<std::string> filler_lexicon;

  std::unordered_map<std::string, char> icao_map;  // "delta" -> 'd'
  IcaoMode icao_mode = IcaoMode::uppercase_or_run;
  bool icao_join_runs = false;

  std::unordered_map<std::string, std::string> compound_map;
  std::unordered_set<std::string> compound_values;  // canonical joined forms

  std::unordered_map<std::string, std::string> spelling_table;
  std::unordered_map<std::string, std::string> contraction_table;

  NumberTables numbers;
  std::int64_t number_scope = 999999;
  bool oh_as_zero = false;

  bool fold_diacritics = false;
};

// Case fold plus apostrophe canonicalization (U+2019 and U+02BC become ').
// Every lexicon lookup goes through this.
std::string lexicon_key(std::string_view s);

// Shared immutable instance of the built-in defaults.
const StageConfig& default_config();

// Fresh copy of the built-in defaults.
StageConfig make_default_config();

// Built-in defaults overridden by whatever files exist in config_dir:
//   fillers.tsv       one filler word per line (replaces the default set)
//   icao.tsv          code word <TAB> letter   (replaces; must cover a-z)
//   compounds.tsv     variant <TAB> canonical  (replaces)
//   spelling.tsv      variant <TAB> canonical  (replaces)
//   contractions.tsv  contraction <TAB> expansion (replaces)
//   numbers.tsv       word <TAB> class         (additive; class is 0..90,
//                     "hundred", "thousand", "point" or "and")
//   scheme.conf       key = value switches (icao_mode, icao_join_runs,
//                     oh_as_zero, fold_diacritics, number_scope)
// All files are UTF-8; blank lines and lines starting with # are skipped.
// Throws IoError if config_dir does not exist, ConfigError on bad content.
StageConfig load_stage_config(const std::filesystem::path& config_dir);

}  // namespace asreval

#endif  // ASREVAL_TABLES_HPP_
