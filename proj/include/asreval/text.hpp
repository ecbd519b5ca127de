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

#ifndef ASREVAL_TEXT_HPP_
#define ASREVAL_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace asreval {

enum class LangHint { german, english, mixed, unknown };

// One utterance of UTF-8 text. Cockpit transcripts mix German and English
// freely, so the hint defaults to mixed.
struct Transcript {
  std::string text;
  LangHint lang_hint = LangHint::mixed;
  std::string source_id;

  bool operator==(const Transcript&) const = default;
};

// Whitespace-delimited word tokens. Tokens are never empty and never
// contain whitespace.
using TokenSequence = std::vector<std::string>;

// Decodes the code point starting at *pos and advances *pos past it.
// Malformed bytes (truncated sequences, overlongs, surrogates) decode as
// U+FFFD with a single-byte advance, so iteration always terminates.
char32_t decode_codepoint(std::string_view s, std::size_t* pos);

void append_utf8(char32_t cp, std::string* out);

std::vector<char32_t> decode_utf8(std::string_view s);
std::string encode_utf8(const std::vector<char32_t>& cps);

// Strict check: well-formed UTF-8 with no overlongs or surrogates.
bool is_valid_utf8(std::string_view s);

// Unicode White_Space property (the full 25 code point list).
bool is_unicode_space(char32_t cp);

// ASCII digit.
bool is_ascii_digit(char32_t cp);

// Letters, digits and combining marks. Coverage targets the Latin, Greek
// and Cyrillic ranges that occur in German/English cockpit transcripts;
// everything outside these ranges counts as a special character.
bool is_word_char(char32_t cp);

// Simple case folding over the same ranges. Code points without a mapping
// are returned unchanged, so folding is idempotent. The German sharp s is
// a fixed point (U+1E9E folds to U+00DF, which stays).
char32_t fold_case_char(char32_t cp);

std::string fold_case(std::string_view s);

// Splits on Unicode whitespace. jiwer-compatible: maximal runs of
// non-whitespace become tokens, empty tokens never appear.
TokenSequence tokenize(std::string_view text);

// Joins tokens with single ASCII spaces.
std::string detokenize(const TokenSequence& tokens);

// Equivalent to detokenize(tokenize(s)): collapses internal whitespace
// runs to one space and trims both ends.
std::string canonicalize_whitespace(std::string_view s);

}  // namespace asreval

#endif  // ASREVAL_TEXT_HPP_
