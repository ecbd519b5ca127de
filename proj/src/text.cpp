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

#include "asreval/text.hpp"

namespace asreval {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

inline bool is_continuation(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t decode_codepoint(std::string_view s, std::size_t* pos) {
  const auto* bytes = reinterpret_cast<const unsigned char*>(s.data());
  std::size_t i = *pos;
  unsigned char b0 = bytes[i];
  if (b0 < 0x80) {
    *pos = i + 1;
    return b0;
  }
  int len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    *pos = i + 1;
    return kReplacement;
  }
  if (i + len > s.size()) {
    *pos = i + 1;
    return kReplacement;
  }
  for (int k = 1; k < len; ++k) {
    if (!is_continuation(bytes[i + k])) {
      *pos = i + 1;
      return kReplacement;
    }
    cp = (cp << 6) | (bytes[i + k] & 0x3F);
  }
  // Reject overlong encodings and surrogate range.
  if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
      (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    *pos = i + 1;
    return kReplacement;
  }
  *pos = i + len;
  return cp;
}

void append_utf8(char32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<char32_t> decode_utf8(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) cps.push_back(decode_codepoint(s, &pos));
  return cps;
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append_utf8(cp, &out);
  return out;
}

bool is_valid_utf8(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t before = pos;
    char32_t cp = decode_codepoint(s, &pos);
    // The decoder reports malformed input as U+FFFD with a 1-byte advance;
    // a genuine encoded U+FFFD consumes 3 bytes and is fine.
    if (cp == kReplacement && pos == before + 1) return false;
  }
  return true;
}

bool is_unicode_space(char32_t cp) {
  switch (cp) {
    case 0x0009:
    case 0x000A:
    case 0x000B:
    case 0x000C:
    case 0x000D:
    case 0x0020:
    case 0x0085:
    case 0x00A0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           is_ascii_digit(cp);
  }
  if (cp == 0x00AA || cp == 0x00B5 || cp == 0x00BA) return true;
  if (cp >= 0x00C0 && cp <= 0x024F) return cp != 0x00D7 && cp != 0x00F7;
  if (cp >= 0x0250 && cp <= 0x02AF) return true;   // IPA extensions
  if (cp >= 0x0300 && cp <= 0x036F) return true;   // combining marks
  if (cp >= 0x0370 && cp <= 0x03FF) {
    // Greek block minus its punctuation/diacritic slots.
    switch (cp) {
      case 0x0374:
      case 0x0375:
      case 0x037E:
      case 0x0384:
      case 0x0385:
      case 0x0387:
        return false;
      default:
        return true;
    }
  }
  if (cp >= 0x0400 && cp <= 0x04FF) return true;   // Cyrillic
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;   // Latin extended additional
  return false;
}

char32_t fold_case_char(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if (cp >= 0x0100 && cp <= 0x012F) return (cp & 1) ? cp : cp + 1;
  if (cp == 0x0130) return 0x0069;  // dotted capital I folds to plain i
  if (cp == 0x0131) return cp;      // dotless i stays
  if (cp >= 0x0132 && cp <= 0x0137) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x0139 && cp <= 0x0148) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x014A && cp <= 0x0177) return (cp & 1) ? cp : cp + 1;
  if (cp == 0x0178) return 0x00FF;
  if (cp >= 0x0179 && cp <= 0x017E) return (cp & 1) ? cp + 1 : cp;
  if (cp == 0x017F) return 0x0073;  // long s folds to s
  if (cp >= 0x01CD && cp <= 0x01DC) return (cp & 1) ? cp + 1 : cp;
  if (cp >= 0x01DE && cp <= 0x01EF) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x01F8 && cp <= 0x021F) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x0222 && cp <= 0x0233) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x0246 && cp <= 0x024F) return (cp & 1) ? cp : cp + 1;
  // Greek
  if (cp == 0x0386) return 0x03AC;
  if (cp >= 0x0388 && cp <= 0x038A) return cp + 0x25;
  if (cp == 0x038C) return 0x03CC;
  if (cp == 0x038E) return 0x03CD;
  if (cp == 0x038F) return 0x03CE;
  if (cp >= 0x0391 && cp <= 0x03A1) return cp + 0x20;
  if (cp >= 0x03A3 && cp <= 0x03AB) return cp + 0x20;
  // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  // Latin extended additional
  if (cp == 0x1E9E) return 0x00DF;  // capital sharp s folds to lowercase
  if (cp >= 0x1E00 && cp <= 0x1E95) return (cp & 1) ? cp : cp + 1;
  if (cp >= 0x1EA0 && cp <= 0x1EFF) return (cp & 1) ? cp : cp + 1;
  return cp;
}

std::string fold_case(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) append_utf8(fold_case_char(decode_codepoint(s, &pos)), &out);
  return out;
}

TokenSequence tokenize(std::string_view text) {
  TokenSequence tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    char32_t cp = decode_codepoint(text, &pos);
    if (is_unicode_space(cp)) {
      if (!current.empty()) {
        tokens.push_back(std::move(current));
        current.clear();
      }
    } else {
      current.append(text.substr(start, pos - start));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string detokenize(const TokenSequence& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out.append(tokens[i]);
  }
  return out;
}

std::string canonicalize_whitespace(std::string_view s) {
  return detokenize(tokenize(s));
}

}  // namespace asreval
