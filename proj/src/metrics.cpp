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

#include "asreval/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "asreval/error.hpp"

namespace asreval {

const char* edit_op_name(EditOpKind kind) {
  switch (kind) {
    case EditOpKind::match:
      return "match";
    case EditOpKind::substitute:
      return "substitute";
    case EditOpKind::deletion:
      return "delete";
    case EditOpKind::insertion:
      return "insert";
  }
  return "?";
}

Alignment align(const TokenSequence& ref, const TokenSequence& hyp) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  // Suffix distances: e[i][j] = edit distance between ref[i:] and hyp[j:].
  // Tracing forward from (0,0) lets the tie preference apply in reading
  // order, which keeps e.g. substitute-then-insert ahead of
  // insert-then-substitute for equal-cost alignments.
  std::vector<std::vector<std::int32_t>> e(m + 1,
                                           std::vector<std::int32_t>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) e[m][j] = static_cast<std::int32_t>(n - j);
  for (std::size_t i = 0; i < m; ++i) e[i][n] = static_cast<std::int32_t>(m - i);
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      std::int32_t best = e[i + 1][j + 1] + (ref[i] == hyp[j] ? 0 : 1);
      if (e[i + 1][j] + 1 < best) best = e[i + 1][j] + 1;
      if (e[i][j + 1] + 1 < best) best = e[i][j + 1] + 1;
      e[i][j] = best;
    }
  }

  Alignment ops;
  ops.reserve(m + n);
  std::size_t i = 0, j = 0;
  while (i < m || j < n) {
    if (i < m && j < n && ref[i] == hyp[j] && e[i][j] == e[i + 1][j + 1]) {
      ops.push_back({EditOpKind::match, static_cast<std::int32_t>(i),
                     static_cast<std::int32_t>(j)});
      ++i, ++j;
    } else if (i < m && j < n && e[i][j] == e[i + 1][j + 1] + 1) {
      ops.push_back({EditOpKind::substitute, static_cast<std::int32_t>(i),
                     static_cast<std::int32_t>(j)});
      ++i, ++j;
    } else if (i < m && e[i][j] == e[i + 1][j] + 1) {
      ops.push_back({EditOpKind::deletion, static_cast<std::int32_t>(i), -1});
      ++i;
    } else {
      ops.push_back({EditOpKind::insertion, -1, static_cast<std::int32_t>(j)});
      ++j;
    }
  }
  return ops;
}

EditCounts count_edits(const Alignment& ops, std::int64_t reference_length) {
  EditCounts c;
  c.reference_length = reference_length;
  std::int64_t covered = 0;
  for (const EditOp& op : ops) {
    switch (op.kind) {
      case EditOpKind::match:
        ++covered;
        break;
      case EditOpKind::substitute:
        ++c.substitutions;
        ++covered;
        break;
      case EditOpKind::deletion:
        ++c.deletions;
        ++covered;
        break;
      case EditOpKind::insertion:
        ++c.insertions;
        break;
    }
  }
  if (covered != reference_length) {
    throw MetricError("count_edits: alignment covers " +
                      std::to_string(covered) + " reference tokens, expected " +
                      std::to_string(reference_length));
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> substitution_pairs(
    const Alignment& ops, const TokenSequence& ref, const TokenSequence& hyp) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const EditOp& op : ops) {
    if (op.kind != EditOpKind::substitute) continue;
    pairs.emplace_back(ref.at(op.ref_index), hyp.at(op.hyp_index));
  }
  return pairs;
}

namespace {

std::int64_t brute_rec(const TokenSequence& ref, const TokenSequence& hyp,
                       std::size_t i, std::size_t j) {
  if (i == ref.size()) return static_cast<std::int64_t>(hyp.size() - j);
  if (j == hyp.size()) return static_cast<std::int64_t>(ref.size() - i);
  std::int64_t best = brute_rec(ref, hyp, i + 1, j + 1) + (ref[i] == hyp[j] ? 0 : 1);
  std::int64_t del = brute_rec(ref, hyp, i + 1, j) + 1;
  std::int64_t ins = brute_rec(ref, hyp, i, j + 1) + 1;
  if (del < best) best = del;
  if (ins < best) best = ins;
  return best;
}

}  // namespace

std::int64_t brute_force_distance(const TokenSequence& ref,
                                  const TokenSequence& hyp) {
  if (ref.size() + hyp.size() > 12) {
    throw std::invalid_argument(
        "brute_force_distance: combined length exceeds the 12-token guard");
  }
  return brute_rec(ref, hyp, 0, 0);
}

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw MetricError("Fraction: expects nonnegative numerator, positive denominator");
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / (g ? g : 1);
  den_ = den / (g ? g : 1);
}

std::int64_t Fraction::percent_hundredths() const {
  // round-half-up of num/den * 10000.
  __int128 scaled = static_cast<__int128>(num_) * 20000 + den_;
  return static_cast<std::int64_t>(scaled / (2 * static_cast<__int128>(den_)));
}

std::string format_percent(std::int64_t hundredths) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld",
                static_cast<long long>(hundredths / 100),
                static_cast<long long>(hundredths % 100));
  return buf;
}

WerScore wer(const EditCounts& counts) {
  std::int64_t edits = counts.total_edits();
  if (counts.reference_length == 0) {
    if (edits != 0) {
      throw MetricError("wer: undefined for empty reference with " +
                        std::to_string(edits) + " edits");
    }
    return {Fraction(0, 1), counts};
  }
  return {Fraction(edits, counts.reference_length), counts};
}

const char* aggregation_name(Aggregation a) {
  return a == Aggregation::micro ? "micro" : "macro";
}

Aggregation parse_aggregation(std::string_view name) {
  std::string key = fold_case(name);
  if (key == "micro") return Aggregation::micro;
  if (key == "macro") return Aggregation::macro;
  throw ConfigError("unknown aggregation '" + std::string(name) +
                    "' (expected micro or macro)");
}

std::int64_t AggregateWer::percent_hundredths() const {
  if (exact) return exact->percent_hundredths();
  return std::llround(value * 10000.0);
}

AggregateWer corpus_wer(const std::vector<EditCounts>& items,
                        Aggregation mode) {
  if (items.empty()) throw MetricError("corpus_wer: no utterances to score");
  AggregateWer out;
  out.mode = mode;
  out.items = static_cast<std::int64_t>(items.size());
  for (const EditCounts& c : items) out.pooled += c;
  if (mode == Aggregation::micro) {
    WerScore pooled = wer(out.pooled);
    out.exact = pooled.value;
    out.value = pooled.ratio();
  } else {
    double sum = 0.0;
    for (const EditCounts& c : items) sum += wer(c).ratio();
    out.value = sum / static_cast<double>(items.size());
  }
  return out;
}

}  // namespace asreval
