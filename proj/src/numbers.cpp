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

#include "asreval/numbers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

#include "asreval/text.hpp"

namespace asreval {

namespace {

struct Segment {
  std::string key;        // folded word characters
  std::size_t begin;      // byte offsets into the source text
  std::size_t end;
  bool connects_next;     // separator to the next segment is spaces/hyphens
};

std::vector<Segment> segment_words(std::string_view text) {
  std::vector<Segment> segs;
  std::size_t pos = 0;
  bool in_word = false;
  bool separator_connects = true;
  while (pos < text.size()) {
    std::size_t start = pos;
    char32_t cp = decode_codepoint(text, &pos);
    if (is_word_char(cp)) {
      if (!in_word) {
        if (!segs.empty()) segs.back().connects_next = separator_connects;
        segs.push_back({{}, start, pos, false});
        in_word = true;
      }
      append_utf8(fold_case_char(cp), &segs.back().key);
      segs.back().end = pos;
    } else {
      if (in_word) {
        in_word = false;
        separator_connects = true;
      }
      if (!(is_unicode_space(cp) || cp == '-')) separator_connects = false;
    }
  }
  return segs;
}

struct ParseResult {
  std::int64_t value;
  std::size_t end;  // one past the last consumed segment
};

class Parser {
 public:
  Parser(const std::vector<Segment>& segs, const StageConfig& cfg)
      : segs_(segs), cfg_(cfg) {}

  // A full number span starting at segment i, or nothing. Produces the
  // numeral string including an optional decimal part.
  std::optional<std::pair<std::string, std::size_t>> parse_span(
      std::size_t i) const {
    std::optional<ParseResult> num = parse_number(i);
    if (!num || num->value > cfg_.number_scope) return std::nullopt;
    std::string digits = std::to_string(num->value);
    std::size_t e = num->end;
    if (step(e - 1) && is_point(e) && step(e) && unit(e + 1)) {
      digits.push_back('.');
      std::size_t d = e + 1;
      digits.push_back(static_cast<char>('0' + *unit(d)));
      while (step(d) && unit(d + 1)) {
        ++d;
        digits.push_back(static_cast<char>('0' + *unit(d)));
      }
      e = d + 1;
    }
    return std::make_pair(digits, e);
  }

 private:
  bool valid(std::size_t i) const { return i < segs_.size(); }
  // May a span extend from segment i to i + 1?
  bool step(std::size_t i) const { return valid(i) && segs_[i].connects_next; }

  std::optional<int> unit(std::size_t i) const {
    if (!valid(i)) return std::nullopt;
    auto it = cfg_.numbers.units.find(segs_[i].key);
    if (it != cfg_.numbers.units.end()) return it->second;
    if (cfg_.oh_as_zero && segs_[i].key == "oh") return 0;
    return std::nullopt;
  }
  std::optional<int> teen(std::size_t i) const {
    if (!valid(i)) return std::nullopt;
    auto it = cfg_.numbers.teens.find(segs_[i].key);
    if (it == cfg_.numbers.teens.end()) return std::nullopt;
    return it->second;
  }
  std::optional<int> ten(std::size_t i) const {
    if (!valid(i)) return std::nullopt;
    auto it = cfg_.numbers.tens.find(segs_[i].key);
    if (it == cfg_.numbers.tens.end()) return std::nullopt;
    return it->second;
  }
  bool is_hundred(std::size_t i) const {
    return valid(i) && cfg_.numbers.hundred_words.count(segs_[i].key) > 0;
  }
  bool is_thousand(std::size_t i) const {
    return valid(i) && cfg_.numbers.thousand_words.count(segs_[i].key) > 0;
  }
  bool is_point(std::size_t i) const {
    return valid(i) && cfg_.numbers.point_words.count(segs_[i].key) > 0;
  }
  bool is_and(std::size_t i) const {
    return valid(i) && cfg_.numbers.and_words.count(segs_[i].key) > 0;
  }

  // 0..99: "seven", "eleven", "forty", "forty two" (hyphens arrive as
  // separate segments, so "forty-two" parses the same way).
  std::optional<ParseResult> parse_small(std::size_t i) const {
    if (auto t = ten(i)) {
      if (step(i)) {
        if (auto u = unit(i + 1); u && *u >= 1) return ParseResult{*t + *u, i + 2};
      }
      return ParseResult{*t, i + 1};
    }
    if (auto t = teen(i)) return ParseResult{*t, i + 1};
    if (auto u = unit(i)) return ParseResult{*u, i + 1};
    return std::nullopt;
  }

  // 0..9999: small, or multiplier + "hundred" + optional ["and"] small.
  std::optional<ParseResult> parse_hundreds(std::size_t i) const {
    std::optional<ParseResult> head = parse_small(i);
    std::int64_t value;
    std::size_t after;
    if (head && head->value >= 1 && step(head->end - 1) &&
        is_hundred(head->end)) {
      value = head->value * 100;
      after = head->end + 1;
    } else if (!head && is_hundred(i)) {
      value = 100;  // bare "hundred"
      after = i + 1;
    } else {
      return head;
    }
    if (step(after - 1)) {
      if (is_and(after) && step(after)) {
        if (auto tail = parse_small(after + 1)) {
          return ParseResult{value + tail->value, tail->end};
        }
      }
      if (auto tail = parse_small(after)) {
        return ParseResult{value + tail->value, tail->end};
      }
    }
    return ParseResult{value, after};
  }

  // Up to 999,999: hundreds, or 1..999 + "thousand" + optional ["and"]
  // hundreds tail below 1000.
  std::optional<ParseResult> parse_number(std::size_t i) const {
    std::optional<ParseResult> h = parse_hundreds(i);
    std::int64_t value;
    std::size_t after;
    if (h && h->value >= 1 && h->value <= 999 && step(h->end - 1) &&
        is_thousand(h->end)) {
      value = h->value * 1000;
      after = h->end + 1;
    } else if (!h && is_thousand(i)) {
      value = 1000;  // bare "thousand"
      after = i + 1;
    } else {
      return h;
    }
    if (step(after - 1)) {
      if (is_and(after) && step(after)) {
        if (auto tail = parse_hundreds(after + 1);
            tail && tail->value < 1000) {
          return ParseResult{value + tail->value, tail->end};
        }
      }
      if (auto tail = parse_hundreds(after); tail && tail->value < 1000) {
        return ParseResult{value + tail->value, tail->end};
      }
    }
    return ParseResult{value, after};
  }

  const std::vector<Segment>& segs_;
  const StageConfig& cfg_;
};

}  // namespace

std::string replace_number_words(std::string_view text,
                                 const StageConfig& cfg) {
  std::vector<Segment> segs = segment_words(text);
  Parser parser(segs, cfg);
  std::string out;
  out.reserve(text.size());
  std::size_t copied = 0;
  std::size_t i = 0;
  while (i < segs.size()) {
    auto span = parser.parse_span(i);
    if (!span) {
      ++i;
      continue;
    }
    out.append(text.substr(copied, segs[i].begin - copied));
    out.append(span->first);
    copied = segs[span->second - 1].end;
    i = span->second;
  }
  out.append(text.substr(copied));
  return out;
}

}  // namespace asreval
