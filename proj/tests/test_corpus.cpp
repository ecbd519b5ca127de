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

#include "asreval/corpus.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "asreval/error.hpp"

using namespace asreval;

namespace fs = std::filesystem;

namespace {

const fs::path kCorpusDir = fs::path(ASREVAL_FIXTURES) / "corpus";

CorpusManifest load_fixture() {
  return load_manifest(kCorpusDir / "manifest.txt");
}

std::string message_of(const auto& call) {
  try {
    call();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("fixture manifest loads completely") {
  CorpusManifest corpus = load_fixture();
  CHECK(corpus.models == std::vector<std::string>{"m_identical", "m_noisy"});
  REQUIRE(corpus.metadata.size() == 2);
  CHECK(corpus.metadata[0] ==
        std::pair<std::string, std::string>{"suite", "cockpit-sim"});
  REQUIRE(corpus.records.size() == 10);

  const UtteranceRecord& t1 = corpus.records[0];
  CHECK(t1.id == "t1");
  CHECK(t1.scenario.kind == ScenarioKind::takeoff);
  CHECK(t1.reference.text == "Takeoff checklist complete");
  CHECK(t1.duration_s == 3.2);
  REQUIRE(t1.hypotheses.size() == 2);
  CHECK(t1.hypotheses[0].first == "m_identical");
  CHECK(t1.hypotheses[1].second.text == "take-off checklist complete.");
  CHECK(t1.hypothesis_for("m_noisy")->text ==
        "take-off checklist complete.");
  CHECK(t1.hypothesis_for("missing") == nullptr);

  const UtteranceRecord& t6 = corpus.records[5];
  CHECK(t6.reference.lang_hint == LangHint::german);
  CHECK(t6.hypotheses[1].second.lang_hint == LangHint::german);

  // t9 pulls its transcripts from files; trailing newlines are stripped.
  const UtteranceRecord& t9 = corpus.records[8];
  CHECK(t9.reference.text == "Wir fliegen häufig nach München");
  CHECK(t9.hypothesis_for("m_noisy")->text ==
        "Wir fliegen häufig nach München");
  CHECK(t9.reference.source_id == "t9");
}

TEST_CASE("serialization round trips") {
  CorpusManifest corpus = load_fixture();
  std::string text = serialize_manifest(corpus);
  CorpusManifest back = parse_manifest(text, kCorpusDir, "serialized");
  CHECK(back == corpus);
  CHECK(serialize_manifest(back) == text);
}

TEST_CASE("scenario names are recognized case-insensitively") {
  CHECK(parse_scenario("TAKEOFF") ==
        ScenarioTag{ScenarioKind::takeoff, "takeoff"});
  CHECK(parse_scenario("Ecam") == ScenarioTag{ScenarioKind::ecam, "ecam"});
  ScenarioTag other = parse_scenario("Simulator_B");
  CHECK(other.kind == ScenarioKind::other);
  CHECK(other.name == "simulator_b");
}

TEST_CASE("parse errors carry source and line") {
  auto parse = [](std::string_view text) {
    return parse_manifest(text, ".", "m");
  };

  SUBCASE("duplicate utterance id") {
    std::string msg = message_of([&] {
      parse("model a\nutt u1 ecam\nref x\nhyp a x\nutt u1 ecam\nref y\n");
    });
    CHECK(msg.find("m:5") != std::string::npos);
    CHECK(msg.find("duplicate utterance id 'u1'") != std::string::npos);
  }
  SUBCASE("undeclared model") {
    std::string msg =
        message_of([&] { parse("utt u1 ecam\nref x\nhyp ghost x\n"); });
    CHECK(msg.find("m:3") != std::string::npos);
    CHECK(msg.find("undeclared model 'ghost'") != std::string::npos);
  }
  SUBCASE("missing reference") {
    CHECK_THROWS_AS(parse("model a\nutt u1 ecam\nhyp a x\n"), DataError);
  }
  SUBCASE("empty reference needs the flag") {
    CHECK_THROWS_AS(parse("utt u1 ecam\nref\n"), DataError);
    CorpusManifest ok = parse("utt u1 ecam empty_ref\nref\n");
    REQUIRE(ok.records.size() == 1);
    CHECK(ok.records[0].allow_empty_reference);
    CHECK(ok.records[0].reference.text.empty());
  }
  SUBCASE("durations must be nonnegative numbers") {
    CHECK_THROWS_AS(parse("utt u1 ecam\nref x\ndur -1\n"), DataError);
    CHECK_THROWS_AS(parse("utt u1 ecam\nref x\ndur 3x\n"), DataError);
    CHECK_THROWS_AS(parse("utt u1 ecam\nref x\ndur 1\ndur 2\n"), DataError);
  }
  SUBCASE("transcripts must be valid utf-8") {
    CHECK_THROWS_AS(parse("utt u1 ecam\nref a\xFF\x62\n"), DataError);
  }
  SUBCASE("model ids cannot contain spaces") {
    CHECK_THROWS_AS(parse("model a b\n"), DataError);
  }
  SUBCASE("unknown directives are rejected") {
    std::string msg = message_of([&] { parse("bogus line\n"); });
    CHECK(msg.find("unknown directive 'bogus'") != std::string::npos);
  }
  SUBCASE("transcript lines before any utt") {
    CHECK_THROWS_AS(parse("ref x\n"), DataError);
  }
  SUBCASE("one hypothesis per model per record") {
    CHECK_THROWS_AS(parse("model a\nutt u1 ecam\nref x\nhyp a x\nhyp a y\n"),
                    DataError);
  }
  SUBCASE("one reference per record") {
    CHECK_THROWS_AS(parse("utt u1 ecam\nref x\nref y\n"), DataError);
  }
  SUBCASE("duplicate model declaration") {
    CHECK_THROWS_AS(parse("model a\nmodel a\n"), DataError);
  }
  SUBCASE("unknown lang flag value") {
    CHECK_THROWS_AS(parse("utt u1 ecam lang=xx\nref x\n"), DataError);
  }
}

TEST_CASE("comments and blank lines are skipped") {
  CorpusManifest corpus =
      parse_manifest("# header\n\nmodel a\n# note\nutt u1 ecam\nref x\n",
                     ".", "m");
  CHECK(corpus.records.size() == 1);
}

TEST_CASE("missing transcript files raise i/o errors") {
  CHECK_THROWS_AS(
      parse_manifest("utt u1 ecam\nref_file missing.txt\n", ".", "m"),
      IoError);
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.txt"), IoError);
}

TEST_CASE("transcript files hold exactly one line") {
  fs::path dir = fs::temp_directory_path() / "asreval_corpus_files";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "multi.txt") << "line one\nline two\n";
  CHECK_THROWS_AS(
      parse_manifest("utt u1 ecam\nref_file multi.txt\n", dir, "m"),
      DataError);
  std::ofstream(dir / "crlf.txt") << "single line\r\n";
  CorpusManifest ok =
      parse_manifest("utt u1 ecam\nref_file crlf.txt\n", dir, "m");
  CHECK(ok.records[0].reference.text == "single line");
  fs::remove_all(dir);
}

TEST_CASE("filter narrows by scenario and model") {
  CorpusManifest corpus = load_fixture();

  CorpusManifest takeoff =
      filter(corpus, parse_scenario("takeoff"), std::nullopt);
  REQUIRE(takeoff.records.size() == 2);
  CHECK(takeoff.records[0].id == "t1");
  CHECK(takeoff.records[1].id == "t2");
  CHECK(takeoff.models == corpus.models);

  CorpusManifest one = filter(corpus, std::nullopt, std::string("m_noisy"));
  CHECK(one.models == std::vector<std::string>{"m_noisy"});
  REQUIRE(one.records.size() == 10);
  for (const UtteranceRecord& r : one.records) {
    REQUIRE(r.hypotheses.size() == 1);
    CHECK(r.hypotheses[0].first == "m_noisy");
  }

  CorpusManifest both = filter(corpus, parse_scenario("takeoff"),
                               std::string("m_identical"));
  CHECK(both.records.size() == 2);

  CHECK_THROWS_AS(filter(corpus, std::nullopt, std::string("ghost")),
                  ConfigError);
}

TEST_CASE("filter drops records lacking the requested model") {
  CorpusManifest corpus =
      parse_manifest("model a\nmodel b\nutt u1 ecam\nref x\nhyp a x\n"
                     "utt u2 ecam\nref y\nhyp a y\nhyp b y\n",
                     ".", "m");
  CorpusManifest only_b = filter(corpus, std::nullopt, std::string("b"));
  REQUIRE(only_b.records.size() == 1);
  CHECK(only_b.records[0].id == "u2");
}
