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

#ifndef ASREVAL_NORMALIZE_HPP_
#define ASREVAL_NORMALIZE_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "asreval/tables.hpp"
#include "asreval/text.hpp"

namespace asreval {

// One text transformation step. Stages are pure functions of the input
// string and a StageConfig; schemes are fixed ordered stage lists.
enum class StageKind {
  case_fold,
  strip_special,
  number_to_arabic,
  spelling_map,
  contraction_expand,
  icao_fold,
  filler_remove,
  compound_fold,
  whitespace_canonicalize,
};

const char* stage_name(StageKind kind);

enum class Scheme {
  none,
  basic,
  number,
  english,
  proposed1,
  proposed2,
  proposed3,
  custom,
};

const char* scheme_name(Scheme scheme);

// Case-insensitive lookup of a scheme by its CLI name. Throws ConfigError
// for unknown names ("custom" is not accepted; it exists only for
// pipelines assembled from an explicit stage list).
Scheme parse_scheme(std::string_view name);

// The seven addressable schemes, in report order.
const std::vector<Scheme>& all_schemes();

// Fixed stage list for a named scheme; empty for none. Throws ConfigError
// for custom.
std::vector<StageKind> scheme_stages(Scheme scheme);

// The aviation-specific half of proposed1: icao_fold, filler_remove,
// compound_fold, whitespace_canonicalize. proposed2 runs these before the
// english stages, proposed3 after. Number, spelling, casing, and
// punctuation handling are contributed by the english side exactly once.
std::vector<StageKind> proposed_reduced_stages();

// Applies a single stage to UTF-8 text.
std::string apply_stage(StageKind kind, std::string_view text,
                        const StageConfig& cfg);

// An immutable, thread-safe normalization pipeline.
class Pipeline {
 public:
  Pipeline(Scheme scheme, std::vector<StageKind> stages,
           std::shared_ptr<const StageConfig> cfg);

  std::string apply(std::string_view text) const;
  Transcript apply(const Transcript& t) const;

  Scheme scheme() const { return scheme_; }
  const std::vector<StageKind>& stages() const { return stages_; }
  const StageConfig& config() const { return *config_; }

 private:
  Scheme scheme_;
  std::vector<StageKind> stages_;
  std::shared_ptr<const StageConfig> config_;
};

// Builds the pipeline for a named scheme. A null cfg selects the embedded
// default tables. Throws ConfigError for custom.
Pipeline build_pipeline(Scheme scheme,
                        std::shared_ptr<const StageConfig> cfg = nullptr);

// Whole-scheme conveniences over the default (or a supplied) config.
std::string basic_normalize(std::string_view text);
std::string number_normalize(std::string_view text,
                             const StageConfig& cfg = default_config());
std::string english_normalize(std::string_view text,
                              const StageConfig& cfg = default_config());
std::string icao_fold(std::string_view text,
                      const StageConfig& cfg = default_config());
std::string remove_fillers(std::string_view text,
                           const StageConfig& cfg = default_config());
std::string fold_compounds(std::string_view text,
                           const StageConfig& cfg = default_config());

// Full proposed1 when include_number_spelling is true. When false, only
// the reduced stage list runs (see proposed_reduced_stages); this is the
// form composed with english_normalize by proposed_two and proposed_three.
std::string proposed_one(std::string_view text,
                         const StageConfig& cfg = default_config(),
                         bool include_number_spelling = true);
std::string proposed_two(std::string_view text,
                         const StageConfig& cfg = default_config());
std::string proposed_three(std::string_view text,
                           const StageConfig& cfg = default_config());

}  // namespace asreval

#endif  // ASREVAL_NORMALIZE_HPP_
