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

#ifndef ASREVAL_METRICS_HPP_
#define ASREVAL_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asreval/text.hpp"

namespace asreval {

struct EditCounts {
  std::int64_t substitutions = 0;
  std::int64_t deletions = 0;
  std::int64_t insertions = 0;
  std::int64_t reference_length = 0;

  std::int64_t total_edits() const {
    return substitutions + deletions + insertions;
  }
  EditCounts& operator+=(const EditCounts& o) {
    substitutions += o.substitutions;
    deletions += o.deletions;
    insertions += o.insertions;
    reference_length += o.reference_length;
    return *this;
  }
  bool operator==(const EditCounts&) const = default;
};

enum class EditOpKind { match, substitute, deletion, insertion };

const char* edit_op_name(EditOpKind kind);

// One step of a word alignment. ref_index is -1 for insertions, hyp_index
// is -1 for deletions.
struct EditOp {
  EditOpKind kind;
  std::int32_t ref_index;
  std::int32_t hyp_index;

  bool operator==(const EditOp&) const = default;
};

using Alignment = std::vector<EditOp>;

// Minimal-cost word-level alignment with unit costs (1,1,1) and no
// transpositions. Deterministic: reading the alignment left to right, ties
// resolve in the order match > substitute > delete > insert.
Alignment align(const TokenSequence& ref, const TokenSequence& hyp);

// Tallies ops; throws MetricError if the ops do not cover exactly
// reference_length reference tokens (internal consistency check).
EditCounts count_edits(const Alignment& ops, std::int64_t reference_length);

// (reference word, hypothesis word) for every substitution, in alignment
// order.
std::vector<std::pair<std::string, std::string>> substitution_pairs(
    const Alignment& ops, const TokenSequence& ref, const TokenSequence& hyp);

// Reference implementation of word edit distance by plain recursion,
// independent of the DP aligner. Guarded: throws std::invalid_argument when
// ref.size() + hyp.size() > 12 (exponential blowup).
std::int64_t brute_force_distance(const TokenSequence& ref,
                                  const TokenSequence& hyp);

// Exact nonnegative fraction with int64 terms; arithmetic goes through
// 128-bit intermediates and the result is always reduced.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double ratio() const { return static_cast<double>(num_) / den_; }

  // Value in hundredths of a percent, rounded half up. 1/3 -> 3333.
  std::int64_t percent_hundredths() const;

  bool operator==(const Fraction&) const = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// "33.33" style formatting of a percent given in hundredths.
std::string format_percent(std::int64_t hundredths);

// WER = (S + D + I) / N, exceeding 1 when insertions dominate.
struct WerScore {
  Fraction value;
  EditCounts counts;

  double ratio() const { return value.ratio(); }
  // Two decimals, round half up: "33.33".
  std::string percent() const { return format_percent(value.percent_hundredths()); }

  bool operator==(const WerScore&) const = default;
};

// Throws MetricError when reference_length is 0 but edits are nonzero
// (the metric is undefined); 0/0 scores as zero.
WerScore wer(const EditCounts& counts);

enum class Aggregation { micro, macro };

const char* aggregation_name(Aggregation a);
Aggregation parse_aggregation(std::string_view name);  // throws ConfigError

// Corpus-level score. Micro pools counts first and stays exact; macro is
// the mean of exact per-utterance ratios accumulated in double (an exact
// common denominator can overflow on real corpora).
struct AggregateWer {
  Aggregation mode = Aggregation::micro;
  double value = 0.0;
  std::optional<Fraction> exact;  // set for micro
  EditCounts pooled;
  std::int64_t items = 0;

  std::int64_t percent_hundredths() const;
  std::string percent() const { return format_percent(percent_hundredths()); }
};

// Micro: wer(sum of counts). Macro: mean of per-item WERs; every item needs
// a nonzero reference (MetricError otherwise). Empty input -> MetricError.
AggregateWer corpus_wer(const std::vector<EditCounts>& items, Aggregation mode);

}  // namespace asreval

#endif  // ASREVAL_METRICS_HPP_
