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

#ifndef ASREVAL_ERROR_HPP_
#define ASREVAL_ERROR_HPP_

#include <stdexcept>

namespace asreval {

// Unreadable or unwritable files. CLI exit code 1.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad usage or configuration: unknown scheme, malformed table file,
// undeclared model. CLI exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Undefined metric, e.g. WER against an empty reference. CLI exit code 3.
struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Corpus content violating a manifest invariant; the message carries a
// file:line locus. CLI exit code 1.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace asreval

#endif  // ASREVAL_ERROR_HPP_
