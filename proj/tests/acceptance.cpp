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

// Release gate. Each check prints one [PASS]/[FAIL] line; the process
// exits nonzero if any check fails. Checks are built on oracles that are
// independent of the code under test: an exhaustive recursive edit
// distance, hand-computed rates for the fixture corpus, and generated
// inputs with known closure properties.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "asreval/corpus.hpp"
#include "asreval/metrics.hpp"
#include "asreval/normalize.hpp"
#include "asreval/report.hpp"
#include "generators.hpp"

using namespace asreval;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
  if (!ok && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::int64_t dp_distance(const TokenSequence& ref, const TokenSequence& hyp) {
  return count_edits(align(ref, hyp), static_cast<std::int64_t>(ref.size()))
      .total_edits();
}

// All token sequences of length 0..5 over a three word vocabulary.
std::vector<TokenSequence> all_sequences() {
  const std::vector<std::string> vocab = {"red", "green", "blue"};
  std::vector<TokenSequence> out;
  for (int len = 0; len <= 5; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      TokenSequence seq;
      for (int d : digits) seq.push_back(vocab[static_cast<std::size_t>(d)]);
      out.push_back(std::move(seq));
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == 3) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

void check_aligner_against_reference() {
  auto start = std::chrono::steady_clock::now();
  std::vector<TokenSequence> seqs = all_sequences();
  std::string detail;
  bool ok = seqs.size() == 364;
  if (!ok) detail = "expected 364 sequences";
  for (const TokenSequence& ref : seqs) {
    if (!ok) break;
    for (const TokenSequence& hyp : seqs) {
      if (dp_distance(ref, hyp) != brute_force_distance(ref, hyp)) {
        ok = false;
        detail = "mismatch for '" + detokenize(ref) + "' vs '" +
                 detokenize(hyp) + "'";
        break;
      }
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  if (ok && elapsed.count() >= 60) {
    ok = false;
    detail = "took " + std::to_string(elapsed.count()) + "s";
  }
  report("aligner equals exhaustive reference distance on all pairs up to "
         "length 5",
         ok, detail);
}

void check_wer_formula() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  };

  TokenSequence same = {"gear", "down", "checked"};
  WerScore zero = wer(count_edits(align(same, same), 3));
  expect(zero.percent() == "0.00" && zero.value == Fraction(0, 1),
         "identical texts");

  TokenSequence ref = {"w1", "w2", "w3", "w4"};
  WerScore all_deleted = wer(count_edits(align(ref, {}), 4));
  expect(all_deleted.percent() == "100.00" &&
             all_deleted.value == Fraction(1, 1),
         "empty hypothesis");

  WerScore over = wer(count_edits(align({"a"}, {"a", "b", "c"}), 1));
  expect(over.value == Fraction(2, 1) && over.percent() == "200.00" &&
             over.counts.insertions == 2,
         "insertion dominated pair");

  report("wer formula yields 0%, 100%, and above-100% exactly", ok, detail);
}

void check_idempotence() {
  auto texts = testgen::sample_texts(20260814, 1000);
  bool ok = true;
  std::string detail;
  for (Scheme scheme : {Scheme::basic, Scheme::english, Scheme::proposed1,
                        Scheme::proposed2, Scheme::proposed3}) {
    Pipeline pipeline = build_pipeline(scheme);
    for (const std::string& text : texts) {
      std::string once = pipeline.apply(text);
      std::string twice = pipeline.apply(once);
      if (twice != once) {
        ok = false;
        detail = std::string(scheme_name(scheme)) + ": '" + text + "' -> '" +
                 once + "' -> '" + twice + "'";
        break;
      }
    }
    if (!ok) break;
  }
  report("double normalization equals single on 1000 generated strings", ok,
         detail);
}

void check_composition() {
  auto texts = testgen::sample_texts(20260814, 1000);
  const StageConfig& cfg = default_config();
  bool ok = true;
  std::string detail;
  for (const std::string& text : texts) {
    std::string two = proposed_two(text);
    std::string composed = english_normalize(proposed_one(text, cfg, false));
    if (two != composed) {
      ok = false;
      detail = "second scheme: '" + text + "'";
      break;
    }
    std::string three = proposed_three(text);
    std::string reversed = proposed_one(english_normalize(text), cfg, false);
    if (three != reversed) {
      ok = false;
      detail = "third scheme: '" + text + "'";
      break;
    }
  }
  report("proposed schemes equal their two-stage compositions on the same "
         "strings",
         ok, detail);
}

void check_normalization_fixtures() {
  bool ok = true;
  std::string detail;
  auto expect = [&](const std::string& got, const std::string& want,
                    const std::string& what) {
    if (ok && got != want) {
      ok = false;
      detail = what + ": got '" + got + "', want '" + want + "'";
    }
  };
  expect(proposed_one("DELTA"), "d", "code word");
  expect(proposed_one("take-off"), "takeoff", "hyphenated compound");
  expect(proposed_one("take off"), "takeoff", "spaced compound");
  expect(proposed_one("takeoff"), "takeoff", "joined compound");
  report("code words and compound variants fold to canonical forms", ok,
         detail);
}

void check_substitution_fixtures() {
  bool ok = true;
  std::string detail;
  auto pairs_of = [](const std::string& ref_text, const std::string& hyp_text) {
    TokenSequence ref = tokenize(basic_normalize(ref_text));
    TokenSequence hyp = tokenize(basic_normalize(hyp_text));
    return substitution_pairs(align(ref, hyp), ref, hyp);
  };
  using Pairs = std::vector<std::pair<std::string, std::string>>;

  if (pairs_of("slats low", "sled low") != Pairs{{"slats", "sled"}}) {
    ok = false;
    detail = "slats/sled";
  }
  if (ok && pairs_of("read back", "wave back") != Pairs{{"read", "wave"}}) {
    ok = false;
    detail = "read/wave";
  }
  if (ok) {
    TokenSequence ref = tokenize(basic_normalize("CAT3 single"));
    TokenSequence hyp = tokenize(basic_normalize("cut three single"));
    Alignment ops = align(ref, hyp);
    EditCounts counts = count_edits(ops, 2);
    if (substitution_pairs(ops, ref, hyp) != Pairs{{"cat3", "cut"}} ||
        counts.substitutions != 1 || counts.insertions != 1 ||
        counts.deletions != 0) {
      ok = false;
      detail = "cat3/cut with insertion";
    } else if (align(ref, hyp) != ops) {
      ok = false;
      detail = "alignment not deterministic";
    }
  }
  report("close-phonetics pairs align to the expected substitutions", ok,
         detail);
}

std::int64_t hundredths_of(const std::string& percent) {
  // "59.38" -> 5938; cells never carry signs.
  std::string digits;
  for (char c : percent) {
    if (c != '.') digits += c;
  }
  return std::stoll(digits);
}

void check_fixture_corpus_rates() {
  const std::map<std::string, std::string> expected_noisy = {
      {"none", "59.38"},      {"basic", "43.75"},     {"number", "56.25"},
      {"english", "31.25"},   {"proposed1", "16.67"}, {"proposed2", "10.00"},
      {"proposed3", "20.00"},
  };
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) {
      ok = false;
      detail = what;
    }
  };

  CorpusManifest corpus =
      load_manifest(fs::path(ASREVAL_FIXTURES) / "corpus" / "manifest.txt");
  ReportMatrix matrix = evaluate_matrix(corpus, all_schemes(), corpus.models,
                                        Aggregation::micro);

  for (std::size_t s = 0; s < all_schemes().size() && ok; ++s) {
    Scheme scheme = all_schemes()[s];
    Pipeline pipeline = build_pipeline(scheme);
    for (std::size_t m = 0; m < corpus.models.size() && ok; ++m) {
      const std::string& model = corpus.models[m];
      std::int64_t edits = 0;
      std::int64_t words = 0;
      for (const UtteranceRecord& record : corpus.records) {
        TokenSequence ref = tokenize(pipeline.apply(record.reference.text));
        const Transcript* hyp_text = record.hypothesis_for(model);
        if (!hyp_text) {
          fail("missing hypothesis for " + record.id);
          break;
        }
        TokenSequence hyp = tokenize(pipeline.apply(hyp_text->text));
        std::int64_t dp = dp_distance(ref, hyp);
        // Independent recount. Fixture utterances are short enough for
        // the recursive reference implementation.
        if (dp != brute_force_distance(ref, hyp)) {
          fail("distance mismatch on " + record.id + " under " +
               scheme_name(scheme));
          break;
        }
        edits += dp;
        words += static_cast<std::int64_t>(ref.size());
      }
      if (!ok) break;
      std::string percent =
          format_percent(Fraction(edits, words).percent_hundredths());
      const std::string& cell = matrix.cells[s][m];
      if (cell != percent) {
        fail("matrix cell " + std::string(scheme_name(scheme)) + "/" + model +
             " is " + cell + ", recomputed " + percent);
        break;
      }
      const std::string want = model == "m_identical"
                                   ? std::string("0.00")
                                   : expected_noisy.at(scheme_name(scheme));
      if (cell != want) {
        fail("cell " + std::string(scheme_name(scheme)) + "/" + model +
             " is " + cell + ", hand value " + want);
        break;
      }
    }
  }

  if (ok) {
    auto noisy = [&](const std::string& scheme) {
      for (std::size_t s = 0; s < matrix.schemes.size(); ++s) {
        if (matrix.schemes[s] == scheme) return hundredths_of(matrix.cells[s][1]);
      }
      fail("missing scheme row " + scheme);
      return std::int64_t{0};
    };
    std::int64_t none = noisy("none");
    if (!(noisy("proposed2") <= noisy("english") && noisy("english") <= none &&
          noisy("basic") <= none)) {
      fail("expected ordering proposed2 <= english <= none and basic <= none");
    }
  }
  report("fixture corpus rates match hand-computed values and ordering", ok,
         detail);
}

struct RunOutcome {
  int status = -1;
  std::string output;
};

RunOutcome run_shell(const std::string& command) {
  RunOutcome outcome;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return outcome;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    outcome.output.append(buf, n);
  }
  int rc = pclose(pipe);
  outcome.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return outcome;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void check_evaluate_determinism() {
  const std::string manifest =
      (fs::path(ASREVAL_FIXTURES) / "corpus" / "manifest.txt").string();
  bool ok = true;
  std::string detail;
  for (const std::string format : {"csv", "json", "markdown"}) {
    if (!ok) break;
    fs::path base = fs::temp_directory_path() / "asreval_acceptance";
    fs::path dirs[3] = {base / (format + "_a"), base / (format + "_b"),
                        base / (format + "_jobs8")};
    const char* jobs[3] = {"1", "1", "8"};
    for (int i = 0; i < 3; ++i) {
      fs::remove_all(dirs[i]);
      fs::create_directories(dirs[i]);
      RunOutcome run = run_shell(std::string(ASREVAL_BIN) + " evaluate '" +
                                 manifest + "' --format " + format +
                                 " --jobs " + jobs[i] + " --out '" +
                                 dirs[i].string() + "' 2>/dev/null");
      if (run.status != 0) {
        ok = false;
        detail = "evaluate exited " + std::to_string(run.status);
        break;
      }
    }
    if (!ok) break;
    int files = 0;
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      ++files;
      fs::path name = entry.path().filename();
      std::string bytes = slurp(entry.path());
      if (bytes.empty() || bytes != slurp(dirs[1] / name) ||
          bytes != slurp(dirs[2] / name)) {
        ok = false;
        detail = format + "/" + name.string() + " differs between runs";
        break;
      }
    }
    if (ok && files != 7) {
      ok = false;
      detail = format + ": expected 7 report files, saw " +
               std::to_string(files);
    }
  }
  report("evaluate emits byte-identical reports across reruns and job "
         "counts",
         ok, detail);
}

void check_aggregation_split() {
  std::vector<EditCounts> items = {{1, 0, 0, 1}, {0, 0, 0, 3}};
  std::string micro = corpus_wer(items, Aggregation::micro).percent();
  std::string macro = corpus_wer(items, Aggregation::macro).percent();
  bool ok = micro == "25.00" && macro == "50.00";
  report("micro pools to 25.00 where macro averages to 50.00", ok,
         "micro " + micro + ", macro " + macro);
}

}  // namespace

int main() {
  check_aligner_against_reference();
  check_wer_formula();
  check_idempotence();
  check_composition();
  check_normalization_fixtures();
  check_substitution_fixtures();
  check_fixture_corpus_rates();
  check_evaluate_determinism();
  check_aggregation_split();

  if (failures) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}
