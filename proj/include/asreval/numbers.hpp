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

#ifndef ASREVAL_NUMBERS_HPP_
#define ASREVAL_NUMBERS_HPP_

#include <string>
#include <string_view>

#include "asreval/tables.hpp"

namespace asreval {

// Rewrites maximal spans of cardinal number words as Arabic numerals:
// "twenty three" and "twenty-three" become "23", "three point five"
// becomes "3.5". Parsing is case-insensitive and runs over word-character
// segments rather than whitespace tokens, so numeric words buried in a
// punctuated token still convert ("three&x" -> "3&x"); spans extend only
// across separators made of whitespace and hyphens. Everything else,
// including digits the text already contains, passes through untouched.
// Values above cfg.number_scope are left as words.
std::string replace_number_words(std::string_view text, const StageConfig& cfg);

}  // namespace asreval

#endif  // ASREVAL_NUMBERS_HPP_
