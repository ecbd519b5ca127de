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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "asreval/error.hpp"

namespace asreval {

namespace {

std::string locus(const std::string& source, int line) {
  return source + ":" + std::to_string(line);
}

// First whitespace-delimited word and the remainder (with the single
// separating space removed).
std::pair<std::string_view, std::string_view> split_word(
    std::string_view line) {
  std::size_t sp = line.find(' ');
  if (sp == std::string_view::npos) return {line, {}};
  return {line.substr(0, sp), line.substr(sp + 1)};
}

void check_text(std::string_view text, const std::string& at) {
  if (text.find('\0') != std::string_view::npos) {
    throw DataError(at + ": transcript contains NUL byte");
  }
  if (!is_valid_utf8(text)) {
    throw DataError(at + ": transcript is not valid UTF-8");
  }
}

std::string read_transcript_file(const std::filesystem::path& path,
                                 const std::string& at) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(at + ": cannot read transcript file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  // Trailing newlines are an artifact of editors, not content. Interior
  // ones would break the one-utterance-per-file contract (and the
  // line-oriented serialized form), so they are rejected.
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  if (text.find('\n') != std::string::npos ||
      text.find('\r') != std::string::npos) {
    throw DataError(at + ": transcript file " + path.string() +
                    " must hold a single line");
  }
  check_text(text, at);
  return text;
}

LangHint parse_lang(std::string_view value, const std::string& at) {
  if (value == "de") return LangHint::german;
  if (value == "en") return LangHint::english;
  if (value == "mixed") return LangHint::mixed;
  if (value == "unknown") return LangHint::unknown;
  throw DataError(at + ": unknown lang '" + std::string(value) + "'");
}

const char* lang_name(LangHint hint) {
  switch (hint) {
    case LangHint::german: return "de";
    case LangHint::english: return "en";
    case LangHint::mixed: return "mixed";
    case LangHint::unknown: return "unknown";
  }
  return "mixed";
}

struct ManifestParser {
  std::string_view text;
  std::filesystem::path base_dir;
  std::string source;

  CorpusManifest manifest;
  std::unordered_set<std::string> declared_models;
  std::unordered_set<std::string> seen_ids;

  UtteranceRecord record;
  bool open = false;        // a record is being assembled
  bool have_ref = false;
  int open_line = 0;

  void finish_record() {
    if (!open) return;
    std::string at = locus(source, open_line);
    if (!have_ref) {
      throw DataError(at + ": record '" + record.id + "' has no reference");
    }
    if (record.reference.text.empty() && !record.allow_empty_reference) {
      throw DataError(at + ": record '" + record.id +
                      "' has an empty reference (flag it empty_ref)");
    }
    manifest.records.push_back(std::move(record));
    record = UtteranceRecord{};
    open = false;
    have_ref = false;
  }

  void handle_utt(std::string_view rest, int line) {
    finish_record();
    std::string at = locus(source, line);
    auto [id, tail] = split_word(rest);
    auto [scenario, flags] = split_word(tail);
    if (id.empty() || scenario.empty()) {
      throw DataError(at + ": expected 'utt <id> <scenario> [flags]'");
    }
    record.id = std::string(id);
    if (!seen_ids.insert(record.id).second) {
      throw DataError(at + ": duplicate utterance id '" + record.id + "'");
    }
    record.scenario = parse_scenario(scenario);
    LangHint lang = LangHint::mixed;
    while (!flags.empty()) {
      auto [flag, more] = split_word(flags);
      flags = more;
      if (flag == "empty_ref") {
        record.allow_empty_reference = true;
      } else if (flag.rfind("lang=", 0) == 0) {
        lang = parse_lang(flag.substr(5), at);
      } else if (!flag.empty()) {
        throw DataError(at + ": unknown utt flag '" + std::string(flag) + "'");
      }
    }
    record.reference.lang_hint = lang;
    record.reference.source_id = record.id;
    open = true;
    open_line = line;
  }

  void require_open(const std::string& at, std::string_view directive) {
    if (!open) {
      throw DataError(at + ": '" + std::string(directive) +
                      "' outside a record (missing utt line)");
    }
  }

  void set_reference(std::string text, const std::string& at) {
    if (have_ref) {
      throw DataError(at + ": record '" + record.id +
                      "' has more than one reference");
    }
    record.reference.text = std::move(text);
    have_ref = true;
  }

  void add_hypothesis(std::string_view model, std::string text,
                      const std::string& at) {
    std::string model_id(model);
    if (model_id.empty()) {
      throw DataError(at + ": hyp line is missing a model id");
    }
    if (declared_models.count(model_id) == 0) {
      throw DataError(at + ": undeclared model '" + model_id + "'");
    }
    for (const auto& [existing, unused] : record.hypotheses) {
      if (existing == model_id) {
        throw DataError(at + ": record '" + record.id +
                        "' has two hypotheses for model '" + model_id + "'");
      }
    }
    Transcript hyp;
    hyp.text = std::move(text);
    hyp.lang_hint = record.reference.lang_hint;
    hyp.source_id = record.id;
    record.hypotheses.emplace_back(std::move(model_id), std::move(hyp));
  }

  void handle_line(std::string_view line, int number) {
    std::string at = locus(source, number);
    auto [directive, rest] = split_word(line);
    if (directive == "model") {
      if (rest.empty()) throw DataError(at + ": expected 'model <id>'");
      if (rest.find(' ') != std::string_view::npos) {
        throw DataError(at + ": model id must not contain spaces");
      }
      std::string model_id(rest);
      if (!declared_models.insert(model_id).second) {
        throw DataError(at + ": model '" + model_id + "' declared twice");
      }
      manifest.models.push_back(std::move(model_id));
    } else if (directive == "meta") {
      auto [key, value] = split_word(rest);
      if (key.empty()) throw DataError(at + ": expected 'meta <key> <value>'");
      manifest.metadata.emplace_back(std::string(key), std::string(value));
    } else if (directive == "utt") {
      handle_utt(rest, number);
    } else if (directive == "ref") {
      require_open(at, directive);
      check_text(rest, at);
      set_reference(std::string(rest), at);
    } else if (directive == "ref_file") {
      require_open(at, directive);
      if (rest.empty()) throw DataError(at + ": expected 'ref_file <path>'");
      set_reference(read_transcript_file(base_dir / std::string(rest), at),
                    at);
    } else if (directive == "hyp") {
      require_open(at, directive);
      auto [model, text] = split_word(rest);
      check_text(text, at);
      add_hypothesis(model, std::string(text), at);
    } else if (directive == "hyp_file") {
      require_open(at, directive);
      auto [model, path] = split_word(rest);
      if (path.empty()) {
        throw DataError(at + ": expected 'hyp_file <model> <path>'");
      }
      add_hypothesis(
          model, read_transcript_file(base_dir / std::string(path), at), at);
    } else if (directive == "dur") {
      require_open(at, directive);
      if (record.duration_s) {
        throw DataError(at + ": record '" + record.id +
                        "' has two durations");
      }
      double seconds = 0;
      auto [ptr, ec] =
          std::from_chars(rest.data(), rest.data() + rest.size(), seconds);
      if (ec != std::errc() || ptr != rest.data() + rest.size() ||
          !std::isfinite(seconds)) {
        throw DataError(at + ": malformed duration '" + std::string(rest) +
                        "'");
      }
      if (seconds < 0) {
        throw DataError(at + ": negative duration");
      }
      record.duration_s = seconds;
    } else {
      throw DataError(at + ": unknown directive '" + std::string(directive) +
                      "'");
    }
  }

  CorpusManifest run() {
    if (text.find('\0') != std::string_view::npos) {
      throw DataError(source + ": manifest contains NUL byte");
    }
    if (!is_valid_utf8(text)) {
      throw DataError(source + ": manifest is not valid UTF-8");
    }
    int number = 0;
    std::string_view remaining = text;
    while (!remaining.empty()) {
      ++number;
      std::size_t nl = remaining.find('\n');
      std::string_view line = remaining.substr(0, nl);
      remaining = nl == std::string_view::npos ? std::string_view{}
                                               : remaining.substr(nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line[0] == '#') continue;
      handle_line(line, number);
    }
    finish_record();
    return std::move(manifest);
  }
};

std::string format_duration(double seconds) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), seconds);
  return std::string(buf, ptr);
}

}  // namespace

const char* scenario_kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::takeoff: return "takeoff";
    case ScenarioKind::ecam: return "ecam";
    case ScenarioKind::fordec: return "fordec";
    case ScenarioKind::landing: return "landing";
    case ScenarioKind::interview: return "interview";
    case ScenarioKind::other: return "other";
  }
  return "other";
}

ScenarioTag parse_scenario(std::string_view name) {
  std::string folded = fold_case(name);
  for (ScenarioKind kind :
       {ScenarioKind::takeoff, ScenarioKind::ecam, ScenarioKind::fordec,
        ScenarioKind::landing, ScenarioKind::interview}) {
    if (folded == scenario_kind_name(kind)) return {kind, std::move(folded)};
  }
  return {ScenarioKind::other, std::move(folded)};
}

const Transcript* UtteranceRecord::hypothesis_for(
    std::string_view model) const {
  for (const auto& [id, transcript] : hypotheses) {
    if (id == model) return &transcript;
  }
  return nullptr;
}

CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& base_dir,
                              const std::string& source_name) {
  ManifestParser parser;
  parser.text = text;
  parser.base_dir = base_dir;
  parser.source = source_name;
  return parser.run();
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read manifest " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path(), path.string());
}

std::string serialize_manifest(const CorpusManifest& manifest) {
  std::string out;
  for (const std::string& model : manifest.models) {
    out += "model " + model + "\n";
  }
  for (const auto& [key, value] : manifest.metadata) {
    out += "meta " + key;
    if (!value.empty()) out += " " + value;
    out += "\n";
  }
  for (const UtteranceRecord& record : manifest.records) {
    out += "\nutt " + record.id + " " + record.scenario.name;
    if (record.allow_empty_reference) out += " empty_ref";
    if (record.reference.lang_hint != LangHint::mixed) {
      out += std::string(" lang=") + lang_name(record.reference.lang_hint);
    }
    out += "\nref";
    if (!record.reference.text.empty()) out += " " + record.reference.text;
    out += "\n";
    for (const auto& [model, hyp] : record.hypotheses) {
      out += "hyp " + model;
      if (!hyp.text.empty()) out += " " + hyp.text;
      out += "\n";
    }
    if (record.duration_s) {
      out += "dur " + format_duration(*record.duration_s) + "\n";
    }
  }
  return out;
}

CorpusManifest filter(const CorpusManifest& manifest,
                      const std::optional<ScenarioTag>& scenario,
                      const std::optional<std::string>& model) {
  if (model &&
      std::find(manifest.models.begin(), manifest.models.end(), *model) ==
          manifest.models.end()) {
    throw ConfigError("unknown model '" + *model + "'");
  }
  CorpusManifest out;
  out.models = model ? std::vector<std::string>{*model} : manifest.models;
  out.metadata = manifest.metadata;
  for (const UtteranceRecord& record : manifest.records) {
    if (scenario && !(record.scenario == *scenario)) continue;
    if (!model) {
      out.records.push_back(record);
      continue;
    }
    const Transcript* hyp = record.hypothesis_for(*model);
    if (!hyp) continue;
    UtteranceRecord kept = record;
    kept.hypotheses = {{*model, *hyp}};
    out.records.push_back(std::move(kept));
  }
  return out;
}

}  // namespace asreval
