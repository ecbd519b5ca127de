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

#include "asreval/tables.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "asreval/error.hpp"
#include "asreval/text.hpp"

namespace asreval {

std::string lexicon_key(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp = decode_codepoint(s, &pos);
    if (cp == 0x2019 || cp == 0x02BC) cp = '\'';
    append_utf8(fold_case_char(cp), &out);
  }
  return out;
}

namespace {

const char* const kFillers[] = {
    // Hesitations only; discourse particles like "ja" and "so" are too
    // ambiguous in German to strip by default.
    "uh", "um", "uhm", "mhm", "hm", "hmm", "äh", "ähm", "ehm", "halt",
};

struct IcaoEntry {
  const char* word;
  char letter;
};

const IcaoEntry kIcao[] = {
    {"alfa", 'a'},    {"alpha", 'a'},   {"bravo", 'b'},   {"charlie", 'c'},
    {"delta", 'd'},   {"echo", 'e'},    {"foxtrot", 'f'}, {"golf", 'g'},
    {"hotel", 'h'},   {"india", 'i'},   {"juliett", 'j'}, {"juliet", 'j'},
    {"kilo", 'k'},    {"lima", 'l'},    {"mike", 'm'},    {"november", 'n'},
    {"oscar", 'o'},   {"papa", 'p'},    {"quebec", 'q'},  {"romeo", 'r'},
    {"sierra", 's'},  {"tango", 't'},   {"uniform", 'u'}, {"victor", 'v'},
    {"whiskey", 'w'}, {"xray", 'x'},    {"x-ray", 'x'},   {"yankee", 'y'},
    {"zulu", 'z'},
};

const char* const kCompounds[] = {
    "takeoff",      "checklist", "goaround",      "flightcontrol",
    "lineup",       "crosscheck", "overheadpanel",
};

struct Pair {
  const char* from;
  const char* to;
};

const Pair kSpelling[] = {
    {"aeroplane", "airplane"},       {"aeroplanes", "airplanes"},
    {"aluminium", "aluminum"},       {"analyse", "analyze"},
    {"analysed", "analyzed"},        {"apologise", "apologize"},
    {"authorise", "authorize"},      {"authorised", "authorized"},
    {"behaviour", "behavior"},       {"behaviours", "behaviors"},
    {"catalogue", "catalog"},        {"centre", "center"},
    {"centres", "centers"},          {"cheque", "check"},
    {"colour", "color"},             {"coloured", "colored"},
    {"colours", "colors"},           {"defence", "defense"},
    {"dialogue", "dialog"},          {"draught", "draft"},
    {"emphasise", "emphasize"},      {"favour", "favor"},
    {"favourite", "favorite"},       {"fibre", "fiber"},
    {"flavour", "flavor"},           {"grey", "gray"},
    {"harbour", "harbor"},           {"honour", "honor"},
    {"initialise", "initialize"},    {"kerb", "curb"},
    {"labour", "labor"},             {"licence", "license"},
    {"litre", "liter"},              {"litres", "liters"},
    {"manoeuvre", "maneuver"},       {"manoeuvres", "maneuvers"},
    {"maximise", "maximize"},        {"metre", "meter"},
    {"metres", "meters"},            {"minimise", "minimize"},
    {"neighbour", "neighbor"},       {"neighbours", "neighbors"},
    {"normalise", "normalize"},      {"offence", "offense"},
    {"optimise", "optimize"},        {"organisation", "organization"},
    {"organise", "organize"},        {"organised", "organized"},
    {"practise", "practice"},        {"prioritise", "prioritize"},
    {"programme", "program"},        {"realise", "realize"},
    {"realised", "realized"},        {"recognise", "recognize"},
    {"stabilise", "stabilize"},      {"standardise", "standardize"},
    {"summarise", "summarize"},      {"synchronise", "synchronize"},
    {"theatre", "theater"},          {"tyre", "tire"},
    {"tyres", "tires"},              {"utilise", "utilize"},
};

const Pair kContractions[] = {
    {"aren't", "are not"},       {"can't", "cannot"},
    {"couldn't", "could not"},   {"didn't", "did not"},
    {"doesn't", "does not"},     {"don't", "do not"},
    {"hadn't", "had not"},       {"hasn't", "has not"},
    {"haven't", "have not"},     {"he'd", "he would"},
    {"he'll", "he will"},        {"he's", "he is"},
    {"here's", "here is"},       {"i'd", "i would"},
    {"i'll", "i will"},          {"i'm", "i am"},
    {"i've", "i have"},          {"isn't", "is not"},
    {"it'll", "it will"},        {"it's", "it is"},
    {"let's", "let us"},         {"mightn't", "might not"},
    {"mustn't", "must not"},     {"needn't", "need not"},
    {"shan't", "shall not"},     {"she'd", "she would"},
    {"she'll", "she will"},      {"she's", "she is"},
    {"shouldn't", "should not"}, {"that's", "that is"},
    {"there's", "there is"},     {"they'd", "they would"},
    {"they'll", "they will"},    {"they're", "they are"},
    {"they've", "they have"},    {"wasn't", "was not"},
    {"we'd", "we would"},        {"we'll", "we will"},
    {"we're", "we are"},         {"we've", "we have"},
    {"weren't", "were not"},     {"what's", "what is"},
    {"who's", "who is"},         {"won't", "will not"},
    {"wouldn't", "would not"},   {"you'd", "you would"},
    {"you'll", "you will"},      {"you're", "you are"},
    {"you've", "you have"},
};

const Pair kUnits[] = {
    {"zero", "0"}, {"one", "1"}, {"two", "2"},   {"three", "3"}, {"four", "4"},
    {"five", "5"}, {"six", "6"}, {"seven", "7"}, {"eight", "8"}, {"nine", "9"},
};

const Pair kTeens[] = {
    {"ten", "10"},      {"eleven", "11"},  {"twelve", "12"},
    {"thirteen", "13"}, {"fourteen", "14"}, {"fifteen", "15"},
    {"sixteen", "16"},  {"seventeen", "17"}, {"eighteen", "18"},
    {"nineteen", "19"},
};

const Pair kTens[] = {
    {"twenty", "20"}, {"thirty", "30"}, {"forty", "40"},  {"fifty", "50"},
    {"sixty", "60"},  {"seventy", "70"}, {"eighty", "80"}, {"ninety", "90"},
};

bool has_space_or_hyphen(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp = decode_codepoint(s, &pos);
    if (cp == '-' || is_unicode_space(cp)) return true;
  }
  return false;
}

std::string dehyphenate(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '-') out.push_back(c);
  }
  return out;
}

// Splits a table line into tab-separated fields, dropping a trailing \r.
std::vector<std::string> split_fields(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

struct TableLine {
  int number;
  std::vector<std::string> fields;
};

std::vector<TableLine> read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open table file: " + path.string());
  std::ostringstream raw;
  raw << in.rdbuf();
  if (!is_valid_utf8(raw.str())) {
    throw ConfigError(path.string() + ": not valid UTF-8");
  }
  std::vector<TableLine> lines;
  std::istringstream stream(raw.str());
  std::string line;
  int number = 0;
  while (std::getline(stream, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    lines.push_back({number, split_fields(line)});
  }
  return lines;
}

std::string locus(const std::filesystem::path& path, int line) {
  return path.filename().string() + ":" + std::to_string(line);
}

void load_fillers(const std::filesystem::path& path, StageConfig* cfg) {
  cfg->filler_lexicon.clear();
  for (const TableLine& l : read_table(path)) {
    if (l.fields[0].empty()) {
      throw ConfigError(locus(path, l.number) + ": empty filler word");
    }
    cfg->filler_lexicon.insert(lexicon_key(l.fields[0]));
  }
}

void load_icao(const std::filesystem::path& path, StageConfig* cfg) {
  cfg->icao_map.clear();
  for (const TableLine& l : read_table(path)) {
    if (l.fields.size() != 2 || l.fields[0].empty() ||
        l.fields[1].size() != 1 || !std::isalpha((unsigned char)l.fields[1][0])) {
      throw ConfigError(locus(path, l.number) +
                        ": expected 'code word<TAB>letter'");
    }
    char letter = static_cast<char>(std::tolower((unsigned char)l.fields[1][0]));
    cfg->icao_map[lexicon_key(l.fields[0])] = letter;
  }
  bool seen[26] = {};
  for (const auto& [word, letter] : cfg->icao_map) seen[letter - 'a'] = true;
  for (int i = 0; i < 26; ++i) {
    if (!seen[i]) {
      throw ConfigError(path.string() + ": alphabet incomplete, no code word for '" +
                        std::string(1, static_cast<char>('a' + i)) + "'");
    }
  }
}

void load_compounds(const std::filesystem::path& path, StageConfig* cfg) {
  cfg->compound_map.clear();
  cfg->compound_values.clear();
  for (const TableLine& l : read_table(path)) {
    if (l.fields.empty() || l.fields[0].empty() || l.fields.size() > 2) {
      throw ConfigError(locus(path, l.number) +
                        ": expected 'variant[<TAB>canonical]'");
    }
    std::string canonical =
        l.fields.size() == 2 ? l.fields[1] : dehyphenate(l.fields[0]);
    canonical = lexicon_key(canonical);
    if (canonical.empty() || has_space_or_hyphen(canonical)) {
      throw ConfigError(locus(path, l.number) +
                        ": canonical compound must be one joined word");
    }
    std::string key = dehyphenate(lexicon_key(l.fields[0]));
    // Variant keys may be written with hyphens or spaces; lookups join
    // tokens first, so the stored key is the joined folded form.
    std::string joined;
    for (char c : key) {
      if (!std::isspace((unsigned char)c)) joined.push_back(c);
    }
    if (joined != canonical) {
      // Folding may only move hyphen/space placement, never change the
      // letters, so the joined variant must spell the canonical exactly.
      throw ConfigError(locus(path, l.number) + ": variant '" + l.fields[0] +
                        "' does not spell canonical '" + canonical + "'");
    }
    cfg->compound_map.emplace(joined, canonical);
    cfg->compound_values.insert(canonical);
  }
}

void load_pairs(const std::filesystem::path& path,
                std::unordered_map<std::string, std::string>* table,
                const char* what) {
  table->clear();
  for (const TableLine& l : read_table(path)) {
    if (l.fields.size() != 2 || l.fields[0].empty() || l.fields[1].empty()) {
      throw ConfigError(locus(path, l.number) + ": expected '" +
                        std::string(what) + "<TAB>replacement'");
    }
    (*table)[lexicon_key(l.fields[0])] = l.fields[1];
  }
}

void merge_number_word(const std::filesystem::path& path, int line_no,
                       const std::string& word, const std::string& cls,
                       NumberTables* t) {
  std::string key = lexicon_key(word);
  if (cls == "hundred") {
    t->hundred_words.insert(key);
  } else if (cls == "thousand") {
    t->thousand_words.insert(key);
  } else if (cls == "point") {
    t->point_words.insert(key);
  } else if (cls == "and") {
    t->and_words.insert(key);
  } else {
    int value;
    try {
      value = std::stoi(cls);
    } catch (const std::exception&) {
      throw ConfigError(locus(path, line_no) + ": bad number class '" + cls + "'");
    }
    if (value >= 0 && value <= 9) {
      t->units[key] = value;
    } else if (value >= 10 && value <= 19) {
      t->teens[key] = value;
    } else if (value >= 20 && value <= 90 && value % 10 == 0) {
      t->tens[key] = value;
    } else {
      throw ConfigError(locus(path, line_no) + ": bad number class '" + cls + "'");
    }
  }
}

void load_numbers(const std::filesystem::path& path, StageConfig* cfg) {
  for (const TableLine& l : read_table(path)) {
    if (l.fields.size() != 2 || l.fields[0].empty() || l.fields[1].empty()) {
      throw ConfigError(locus(path, l.number) + ": expected 'word<TAB>class'");
    }
    merge_number_word(path, l.number, l.fields[0], l.fields[1], &cfg->numbers);
  }
}

bool parse_bool(const std::filesystem::path& path, int line_no,
                const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError(locus(path, line_no) + ": expected a boolean, got '" +
                    value + "'");
}

std::string trim(std::string s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

void load_scheme_conf(const std::filesystem::path& path, StageConfig* cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(locus(path, number) + ": expected 'key = value'");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key == "icao_mode") {
      if (value == "uppercase_or_run") {
        cfg->icao_mode = IcaoMode::uppercase_or_run;
      } else if (value == "always") {
        cfg->icao_mode = IcaoMode::always;
      } else {
        throw ConfigError(locus(path, number) + ": unknown icao_mode '" +
                          value + "'");
      }
    } else if (key == "icao_join_runs") {
      cfg->icao_join_runs = parse_bool(path, number, value);
    } else if (key == "oh_as_zero") {
      cfg->oh_as_zero = parse_bool(path, number, value);
    } else if (key == "fold_diacritics") {
      cfg->fold_diacritics = parse_bool(path, number, value);
    } else if (key == "number_scope") {
      try {
        cfg->number_scope = std::stoll(value);
      } catch (const std::exception&) {
        cfg->number_scope = -1;
      }
      if (cfg->number_scope < 0) {
        throw ConfigError(locus(path, number) + ": bad number_scope '" +
                          value + "'");
      }
    } else {
      throw ConfigError(locus(path, number) + ": unknown key '" + key + "'");
    }
  }
}

}  // namespace

StageConfig make_default_config() {
  StageConfig cfg;
  for (const char* w : kFillers) cfg.filler_lexicon.insert(w);
  for (const IcaoEntry& e : kIcao) cfg.icao_map[e.word] = e.letter;
  for (const char* w : kCompounds) {
    cfg.compound_map.emplace(w, w);
    cfg.compound_values.insert(w);
  }
  for (const Pair& p : kSpelling) cfg.spelling_table[p.from] = p.to;
  for (const Pair& p : kContractions) cfg.contraction_table[p.from] = p.to;
  for (const Pair& p : kUnits) cfg.numbers.units[p.from] = p.to[0] - '0';
  for (const Pair& p : kTeens) cfg.numbers.teens[p.from] = std::stoi(p.to);
  for (const Pair& p : kTens) cfg.numbers.tens[p.from] = std::stoi(p.to);
  cfg.numbers.hundred_words.insert("hundred");
  cfg.numbers.thousand_words.insert("thousand");
  cfg.numbers.point_words.insert("point");
  cfg.numbers.and_words.insert("and");
  return cfg;
}

const StageConfig& default_config() {
  static const StageConfig cfg = make_default_config();
  return cfg;
}

StageConfig load_stage_config(const std::filesystem::path& config_dir) {
  if (!std::filesystem::is_directory(config_dir)) {
    throw IoError("config directory does not exist: " + config_dir.string());
  }
  StageConfig cfg = make_default_config();
  auto path = [&](const char* name) { return config_dir / name; };
  if (std::filesystem::exists(path("fillers.tsv"))) {
    load_fillers(path("fillers.tsv"), &cfg);
  }
  if (std::filesystem::exists(path("icao.tsv"))) {
    load_icao(path("icao.tsv"), &cfg);
  }
  if (std::filesystem::exists(path("compounds.tsv"))) {
    load_compounds(path("compounds.tsv"), &cfg);
  }
  if (std::filesystem::exists(path("spelling.tsv"))) {
    load_pairs(path("spelling.tsv"), &cfg.spelling_table, "variant");
  }
  if (std::filesystem::exists(path("contractions.tsv"))) {
    load_pairs(path("contractions.tsv"), &cfg.contraction_table, "contraction");
  }
  if (std::filesystem::exists(path("numbers.tsv"))) {
    load_numbers(path("numbers.tsv"), &cfg);
  }
  if (std::filesystem::exists(path("scheme.conf"))) {
    load_scheme_conf(path("scheme.conf"), &cfg);
  }
  return cfg;
}

}  // namespace asreval
