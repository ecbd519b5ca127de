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

#include "asreval/normalize.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

#include "asreval/error.hpp"
#include "asreval/numbers.hpp"

namespace asreval {

namespace {

// A token split at its first and last word character. Leading and trailing
// punctuation become prefix/suffix; interior punctuation (hyphens,
// apostrophes) stays in the core so "take-off" and "won't" match as units.
struct TokenParts {
  std::string prefix;
  std::string core;
  std::string suffix;
};

TokenParts split_affixes(std::string_view token) {
  std::size_t first = std::string_view::npos;
  std::size_t last_end = 0;
  std::size_t pos = 0;
  while (pos < token.size()) {
    std::size_t start = pos;
    char32_t cp = decode_codepoint(token, &pos);
    if (is_word_char(cp)) {
      if (first == std::string_view::npos) first = start;
      last_end = pos;
    }
  }
  TokenParts parts;
  if (first == std::string_view::npos) {
    parts.prefix = std::string(token);
    return parts;
  }
  parts.prefix = std::string(token.substr(0, first));
  parts.core = std::string(token.substr(first, last_end - first));
  parts.suffix = std::string(token.substr(last_end));
  return parts;
}

bool is_upper_char(char32_t cp) { return fold_case_char(cp) != cp; }

bool is_lower_letter(char32_t cp) {
  if (is_upper_char(cp)) return false;
  if (cp >= 0x0300 && cp <= 0x036F) return false;  // combining marks
  return is_word_char(cp) && !is_ascii_digit(cp);
}

// Digits and punctuation inside the core are case-neutral, so "X-RAY"
// still counts as fully uppercase.
void scan_case(std::string_view core, bool* fully_upper, bool* has_upper) {
  bool saw_upper = false;
  bool saw_lower = false;
  std::size_t pos = 0;
  while (pos < core.size()) {
    char32_t cp = decode_codepoint(core, &pos);
    if (is_upper_char(cp)) saw_upper = true;
    else if (is_lower_letter(cp)) saw_lower = true;
  }
  *fully_upper = saw_upper && !saw_lower;
  *has_upper = saw_upper;
}

const char* diacritic_expansion(char32_t folded) {
  switch (folded) {
    case 0x00E4: return "ae";  // a umlaut
    case 0x00F6: return "oe";  // o umlaut
    case 0x00FC: return "ue";  // u umlaut
    case 0x00DF: return "ss";  // sharp s
    case 0x00E6: return "ae";
    case 0x00E0: case 0x00E1: case 0x00E2: case 0x00E3: case 0x00E5:
      return "a";
    case 0x00E7: return "c";
    case 0x00E8: case 0x00E9: case 0x00EA: case 0x00EB: return "e";
    case 0x00EC: case 0x00ED: case 0x00EE: case 0x00EF: return "i";
    case 0x00F1: return "n";
    case 0x00F2: case 0x00F3: case 0x00F4: case 0x00F5: case 0x00F8:
      return "o";
    case 0x00F9: case 0x00FA: case 0x00FB: return "u";
    case 0x00FD: case 0x00FF: return "y";
    default: return nullptr;
  }
}

std::string fold_case_text(std::string_view text, const StageConfig& cfg) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = fold_case_char(decode_codepoint(text, &pos));
    if (cfg.fold_diacritics) {
      if (const char* expansion = diacritic_expansion(cp)) {
        out.append(expansion);
        continue;
      }
    }
    append_utf8(cp, &out);
  }
  return out;
}

std::string strip_special_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = decode_codepoint(text, &pos);
    if (is_word_char(cp)) append_utf8(cp, &out);
    else out.push_back(' ');
  }
  return out;
}

std::string map_core_words(
    std::string_view text,
    const std::unordered_map<std::string, std::string>& table) {
  TokenSequence tokens = tokenize(text);
  for (std::string& token : tokens) {
    TokenParts parts = split_affixes(token);
    if (parts.core.empty()) continue;
    auto it = table.find(lexicon_key(parts.core));
    if (it == table.end()) continue;
    token = parts.prefix + it->second + parts.suffix;
  }
  return detokenize(tokens);
}

std::string remove_filler_tokens(std::string_view text,
                                 const StageConfig& cfg) {
  TokenSequence tokens = tokenize(text);
  TokenSequence kept;
  kept.reserve(tokens.size());
  for (std::string& token : tokens) {
    TokenParts parts = split_affixes(token);
    if (!parts.core.empty() &&
        cfg.filler_lexicon.count(lexicon_key(parts.core)) > 0) {
      continue;
    }
    kept.push_back(std::move(token));
  }
  return detokenize(kept);
}

std::string fold_icao_text(std::string_view text, const StageConfig& cfg) {
  TokenSequence tokens = tokenize(text);
  struct Info {
    TokenParts parts;
    bool keyed = false;
    char letter = 0;
    bool fully_upper = false;
    bool has_upper = false;
    bool folded = false;
  };
  std::vector<Info> info(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    info[i].parts = split_affixes(tokens[i]);
    if (info[i].parts.core.empty()) continue;
    auto it = cfg.icao_map.find(lexicon_key(info[i].parts.core));
    if (it == cfg.icao_map.end()) continue;
    info[i].keyed = true;
    info[i].letter = it->second;
    scan_case(info[i].parts.core, &info[i].fully_upper, &info[i].has_upper);
  }

  // In uppercase_or_run mode a code word folds on its own casing, or as
  // part of a contiguous run of two or more code words when it carries at
  // least one uppercase letter. Case-folded text therefore never starts
  // folding on a second application, which keeps the schemes idempotent.
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (!info[i].keyed) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < tokens.size() && info[j + 1].keyed) ++j;
    std::size_t run = j - i + 1;
    for (std::size_t k = i; k <= j; ++k) {
      if (cfg.icao_mode == IcaoMode::always) {
        info[k].folded = true;
      } else {
        info[k].folded =
            info[k].fully_upper || (run >= 2 && info[k].has_upper);
      }
    }
    i = j + 1;
  }

  TokenSequence out;
  out.reserve(tokens.size());
  bool prev_open = false;  // previous emitted token: folded, empty suffix
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (!info[k].folded) {
      out.push_back(std::move(tokens[k]));
      prev_open = false;
      continue;
    }
    char letter = info[k].fully_upper
        ? static_cast<char>(std::toupper(
              static_cast<unsigned char>(info[k].letter)))
        : info[k].letter;
    if (cfg.icao_join_runs && prev_open && info[k].parts.prefix.empty()) {
      out.back().push_back(letter);
      out.back().append(info[k].parts.suffix);
    } else {
      out.push_back(info[k].parts.prefix + letter + info[k].parts.suffix);
    }
    prev_open = info[k].parts.suffix.empty();
  }
  return detokenize(out);
}

bool is_hyphen(char32_t cp) {
  return cp == '-' || cp == 0x2010 || cp == 0x2011;
}

bool core_has_hyphen(std::string_view core) {
  std::size_t pos = 0;
  while (pos < core.size()) {
    if (is_hyphen(decode_codepoint(core, &pos))) return true;
  }
  return false;
}

std::string strip_hyphens(std::string_view core) {
  std::string out;
  out.reserve(core.size());
  std::size_t pos = 0;
  while (pos < core.size()) {
    char32_t cp = decode_codepoint(core, &pos);
    if (!is_hyphen(cp)) append_utf8(cp, &out);
  }
  return out;
}

// Canonical form for a dehyphenated join, or empty when the lexicon has no
// entry for it.
std::string compound_canonical(const std::string& joined,
                               const StageConfig& cfg) {
  std::string key = lexicon_key(joined);
  auto it = cfg.compound_map.find(key);
  if (it != cfg.compound_map.end()) return it->second;
  if (cfg.compound_values.count(key) > 0) return key;
  return {};
}

std::string fold_compound_tokens(std::string_view text,
                                 const StageConfig& cfg) {
  TokenSequence tokens = tokenize(text);
  TokenSequence out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    TokenParts a = split_affixes(tokens[i]);
    // Longest match first: an adjacent pair with no punctuation between
    // the cores whose join is a known compound becomes one token.
    if (i + 1 < tokens.size() && !a.core.empty() && a.suffix.empty()) {
      TokenParts b = split_affixes(tokens[i + 1]);
      if (!b.core.empty() && b.prefix.empty()) {
        std::string canon = compound_canonical(
            strip_hyphens(a.core) + strip_hyphens(b.core), cfg);
        if (!canon.empty()) {
          out.push_back(a.prefix + canon + b.suffix);
          i += 2;
          continue;
        }
      }
    }
    if (!a.core.empty() && core_has_hyphen(a.core)) {
      std::string joined = strip_hyphens(a.core);
      std::string canon = compound_canonical(joined, cfg);
      out.push_back(a.prefix + (canon.empty() ? joined : canon) + a.suffix);
      ++i;
      continue;
    }
    out.push_back(std::move(tokens[i]));
    ++i;
  }
  return detokenize(out);
}

std::string run_stages(const std::vector<StageKind>& stages,
                       std::string_view text, const StageConfig& cfg) {
  std::string current(text);
  for (StageKind kind : stages) current = apply_stage(kind, current, cfg);
  return current;
}

}  // namespace

const char* stage_name(StageKind kind) {
  switch (kind) {
    case StageKind::case_fold: return "case_fold";
    case StageKind::strip_special: return "strip_special";
    case StageKind::number_to_arabic: return "number_to_arabic";
    case StageKind::spelling_map: return "spelling_map";
    case StageKind::contraction_expand: return "contraction_expand";
    case StageKind::icao_fold: return "icao_fold";
    case StageKind::filler_remove: return "filler_remove";
    case StageKind::compound_fold: return "compound_fold";
    case StageKind::whitespace_canonicalize: return "whitespace_canonicalize";
  }
  return "unknown";
}

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::none: return "none";
    case Scheme::basic: return "basic";
    case Scheme::number: return "number";
    case Scheme::english: return "english";
    case Scheme::proposed1: return "proposed1";
    case Scheme::proposed2: return "proposed2";
    case Scheme::proposed3: return "proposed3";
    case Scheme::custom: return "custom";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  std::string key = fold_case(name);
  for (Scheme s : all_schemes()) {
    if (key == scheme_name(s)) return s;
  }
  throw ConfigError("unknown scheme: " + std::string(name));
}

const std::vector<Scheme>& all_schemes() {
  static const std::vector<Scheme> schemes = {
      Scheme::none,      Scheme::basic,     Scheme::number,
      Scheme::english,   Scheme::proposed1, Scheme::proposed2,
      Scheme::proposed3,
  };
  return schemes;
}

std::vector<StageKind> proposed_reduced_stages() {
  return {StageKind::icao_fold, StageKind::filler_remove,
          StageKind::compound_fold, StageKind::whitespace_canonicalize};
}

std::vector<StageKind> scheme_stages(Scheme scheme) {
  using K = StageKind;
  switch (scheme) {
    case Scheme::none:
      return {};
    case Scheme::basic:
      return {K::case_fold, K::strip_special, K::whitespace_canonicalize};
    case Scheme::number:
      return {K::number_to_arabic, K::whitespace_canonicalize};
    case Scheme::english:
      return {K::contraction_expand, K::spelling_map, K::number_to_arabic,
              K::case_fold, K::strip_special, K::whitespace_canonicalize};
    case Scheme::proposed1:
      return {K::icao_fold,     K::filler_remove, K::number_to_arabic,
              K::spelling_map,  K::case_fold,     K::strip_special,
              K::compound_fold, K::whitespace_canonicalize};
    case Scheme::proposed2: {
      std::vector<K> stages = proposed_reduced_stages();
      std::vector<K> english = scheme_stages(Scheme::english);
      stages.insert(stages.end(), english.begin(), english.end());
      return stages;
    }
    case Scheme::proposed3: {
      std::vector<K> stages = scheme_stages(Scheme::english);
      std::vector<K> reduced = proposed_reduced_stages();
      stages.insert(stages.end(), reduced.begin(), reduced.end());
      return stages;
    }
    case Scheme::custom:
      break;
  }
  throw ConfigError("scheme custom has no fixed stage list");
}

std::string apply_stage(StageKind kind, std::string_view text,
                        const StageConfig& cfg) {
  switch (kind) {
    case StageKind::case_fold:
      return fold_case_text(text, cfg);
    case StageKind::strip_special:
      return strip_special_text(text);
    case StageKind::number_to_arabic:
      return replace_number_words(text, cfg);
    case StageKind::spelling_map:
      return map_core_words(text, cfg.spelling_table);
    case StageKind::contraction_expand:
      return map_core_words(text, cfg.contraction_table);
    case StageKind::icao_fold:
      return fold_icao_text(text, cfg);
    case StageKind::filler_remove:
      return remove_filler_tokens(text, cfg);
    case StageKind::compound_fold:
      return fold_compound_tokens(text, cfg);
    case StageKind::whitespace_canonicalize:
      return canonicalize_whitespace(text);
  }
  return std::string(text);
}

Pipeline::Pipeline(Scheme scheme, std::vector<StageKind> stages,
                   std::shared_ptr<const StageConfig> cfg)
    : scheme_(scheme), stages_(std::move(stages)), config_(std::move(cfg)) {
  if (!config_) {
    // Alias the immutable process-wide defaults without owning them.
    config_ = std::shared_ptr<const StageConfig>(
        std::shared_ptr<const StageConfig>(), &default_config());
  }
}

std::string Pipeline::apply(std::string_view text) const {
  return run_stages(stages_, text, *config_);
}

Transcript Pipeline::apply(const Transcript& t) const {
  Transcript out = t;
  out.text = apply(t.text);
  return out;
}

Pipeline build_pipeline(Scheme scheme, std::shared_ptr<const StageConfig> cfg) {
  return Pipeline(scheme, scheme_stages(scheme), std::move(cfg));
}

std::string basic_normalize(std::string_view text) {
  return run_stages(scheme_stages(Scheme::basic), text, default_config());
}

std::string number_normalize(std::string_view text, const StageConfig& cfg) {
  return run_stages(scheme_stages(Scheme::number), text, cfg);
}

std::string english_normalize(std::string_view text, const StageConfig& cfg) {
  return run_stages(scheme_stages(Scheme::english), text, cfg);
}

std::string icao_fold(std::string_view text, const StageConfig& cfg) {
  return fold_icao_text(text, cfg);
}

std::string remove_fillers(std::string_view text, const StageConfig& cfg) {
  return remove_filler_tokens(text, cfg);
}

std::string fold_compounds(std::string_view text, const StageConfig& cfg) {
  return fold_compound_tokens(text, cfg);
}

std::string proposed_one(std::string_view text, const StageConfig& cfg,
                         bool include_number_spelling) {
  const std::vector<StageKind> stages = include_number_spelling
      ? scheme_stages(Scheme::proposed1)
      : proposed_reduced_stages();
  return run_stages(stages, text, cfg);
}

std::string proposed_two(std::string_view text, const StageConfig& cfg) {
  return english_normalize(proposed_one(text, cfg, false), cfg);
}

std::string proposed_three(std::string_view text, const StageConfig& cfg) {
  return proposed_one(english_normalize(text, cfg), cfg, false);
}

}  // namespace asreval
