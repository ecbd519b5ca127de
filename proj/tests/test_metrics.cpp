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

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "asreval/error.hpp"
#include "asreval/normalize.hpp"

using namespace asreval;

namespace {

EditCounts score(const TokenSequence& ref, const TokenSequence& hyp) {
  return count_edits(align(ref, hyp), static_cast<std::int64_t>(ref.size()));
}

TokenSequence random_tokens(std::mt19937& rng, int max_len) {
  static const std::vector<std::string> vocab = {"alpha", "beta", "gamma"};
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  TokenSequence out;
  int n = len(rng);
  for (int i = 0; i < n; ++i) out.push_back(vocab[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("alignment of a single substitution") {
  Alignment ops = align({"a", "b", "c"}, {"x", "b", "c"});
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == EditOp{EditOpKind::substitute, 0, 0});
  CHECK(ops[1] == EditOp{EditOpKind::match, 1, 1});
  CHECK(ops[2] == EditOp{EditOpKind::match, 2, 2});
}

TEST_CASE("ties prefer substitution before insertion") {
  Alignment ops = align({"cat3", "single"}, {"cut", "three", "single"});
  REQUIRE(ops.size() == 3);
  CHECK(ops[0] == EditOp{EditOpKind::substitute, 0, 0});
  CHECK(ops[1] == EditOp{EditOpKind::insertion, -1, 1});
  CHECK(ops[2] == EditOp{EditOpKind::match, 1, 2});
}

TEST_CASE("alignment against an empty side") {
  Alignment del = align({"a", "b"}, {});
  REQUIRE(del.size() == 2);
  CHECK(del[0].kind == EditOpKind::deletion);
  CHECK(del[1].kind == EditOpKind::deletion);
  Alignment ins = align({}, {"a"});
  REQUIRE(ins.size() == 1);
  CHECK(ins[0].kind == EditOpKind::insertion);
  CHECK(align({}, {}).empty());
}

TEST_CASE("count_edits tallies and validates coverage") {
  EditCounts counts = score({"a", "b", "c"}, {"x", "b"});
  CHECK(counts == EditCounts{1, 1, 0, 3});
  Alignment ops = align({"a", "b"}, {"a", "b"});
  CHECK_THROWS_AS(count_edits(ops, 3), MetricError);
}

TEST_CASE("substitution pairs come out in alignment order") {
  TokenSequence ref = {"slats", "low"};
  TokenSequence hyp = {"sled", "low"};
  auto pairs = substitution_pairs(align(ref, hyp), ref, hyp);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<std::string, std::string>{"slats", "sled"});
}

TEST_CASE("brute force distance matches known values") {
  CHECK(brute_force_distance({}, {}) == 0);
  CHECK(brute_force_distance({"a"}, {}) == 1);
  CHECK(brute_force_distance({"a", "b", "c"}, {"x", "b", "c"}) == 1);
  CHECK(brute_force_distance({"cat3", "single"},
                             {"cut", "three", "single"}) == 2);
  TokenSequence big(7, "w");
  CHECK_THROWS_AS(brute_force_distance(big, big), std::invalid_argument);
}

TEST_CASE("aligner distance properties hold on random sequences") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    TokenSequence a = random_tokens(rng, 6);
    TokenSequence b = random_tokens(rng, 6);
    TokenSequence c = random_tokens(rng, 6);
    auto d = [](const TokenSequence& x, const TokenSequence& y) {
      return count_edits(align(x, y), static_cast<std::int64_t>(x.size()))
          .total_edits();
    };
    CHECK(d(a, a) == 0);
    CHECK(d(a, b) == d(b, a));
    CHECK(d(a, c) <= d(a, b) + d(b, c));
    CHECK(align(a, b) == align(a, b));
    // Swapping the sides swaps deletions and insertions exactly.
    EditCounts fwd =
        count_edits(align(a, b), static_cast<std::int64_t>(a.size()));
    EditCounts rev =
        count_edits(align(b, a), static_cast<std::int64_t>(b.size()));
    CHECK(fwd.substitutions == rev.substitutions);
    CHECK(fwd.deletions == rev.insertions);
    CHECK(fwd.insertions == rev.deletions);
  }
}

TEST_CASE("fractions reduce and round half up") {
  CHECK(Fraction(2, 6) == Fraction(1, 3));
  CHECK(Fraction(1, 3).percent_hundredths() == 3333);
  CHECK(Fraction(2, 3).percent_hundredths() == 6667);
  CHECK(Fraction(1, 800).percent_hundredths() == 13);  // 0.125 rounds up
  CHECK(Fraction(1, 16).percent_hundredths() == 625);
  CHECK(Fraction(0, 5).percent_hundredths() == 0);
  CHECK(format_percent(3333) == "33.33");
  CHECK(format_percent(0) == "0.00");
  CHECK(format_percent(20000) == "200.00");
  CHECK(format_percent(5) == "0.05");
}

TEST_CASE("wer follows the edit count formula") {
  WerScore third = wer(EditCounts{1, 0, 0, 3});
  CHECK(third.value == Fraction(1, 3));
  CHECK(third.percent() == "33.33");
  CHECK(wer(EditCounts{0, 0, 0, 4}).percent() == "0.00");
  CHECK(wer(EditCounts{0, 4, 0, 4}).percent() == "100.00");
  // Insertions can push the rate past 100 percent.
  WerScore over = wer(EditCounts{0, 0, 2, 1});
  CHECK(over.value == Fraction(2, 1));
  CHECK(over.percent() == "200.00");
  // Undefined when the reference is empty but edits exist.
  CHECK_THROWS_AS(wer(EditCounts{0, 0, 2, 0}), MetricError);
  CHECK(wer(EditCounts{}).percent() == "0.00");
}

TEST_CASE("minimal alignments beat padded ones") {
  // A two-word reference against a three-word hypothesis needs exactly
  // one substitution plus one insertion, never more.
  TokenSequence ref = tokenize(basic_normalize("Ist confirmed"));
  TokenSequence hyp = tokenize(basic_normalize("That was confirmed"));
  EditCounts counts = score(ref, hyp);
  CHECK(counts.total_edits() == 2);
  CHECK(counts.substitutions == 1);
  CHECK(counts.insertions == 1);
  CHECK(wer(counts).percent() == "100.00");
}

TEST_CASE("micro pools counts and macro averages ratios") {
  std::vector<EditCounts> items = {{1, 0, 0, 1}, {0, 0, 0, 3}};
  AggregateWer micro = corpus_wer(items, Aggregation::micro);
  CHECK(micro.percent() == "25.00");
  REQUIRE(micro.exact.has_value());
  CHECK(*micro.exact == Fraction(1, 4));
  CHECK(micro.pooled == EditCounts{1, 0, 0, 4});
  CHECK(micro.items == 2);
  AggregateWer macro = corpus_wer(items, Aggregation::macro);
  CHECK(macro.percent() == "50.00");
  CHECK(macro.value == doctest::Approx(0.5));
}

TEST_CASE("aggregation rejects undefined inputs") {
  CHECK_THROWS_AS(corpus_wer({}, Aggregation::micro), MetricError);
  // A zero-length reference item has no ratio to average.
  CHECK_THROWS_AS(corpus_wer({{0, 0, 1, 0}}, Aggregation::macro),
                  MetricError);
  CHECK(parse_aggregation("micro") == Aggregation::micro);
  CHECK(parse_aggregation("MACRO") == Aggregation::macro);
  CHECK_THROWS_AS(parse_aggregation("median"), ConfigError);
}

TEST_CASE("dp aligner agrees with the reference recursion") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    TokenSequence ref = random_tokens(rng, 6);
    TokenSequence hyp = random_tokens(rng, 6);
    CAPTURE(detokenize(ref));
    CAPTURE(detokenize(hyp));
    REQUIRE(score(ref, hyp).total_edits() == brute_force_distance(ref, hyp));
  }
}
