// errors.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPCTL_ERRORS_HPP_
#define SUPCTL_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace supctl {

/// A string over an event alphabet: a sequence of event names.
using Word = std::vector<std::string>;

/// Joins a word for display; the empty word prints as "<eps>".
std::string word_str(const Word& w);

/// Malformed input: bad files, unknown events or states, alphabet mismatches.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Controllability/observability flags disagree on a shared event.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A required language inclusion does not hold; carries a shortest witness.
class InclusionError : public std::runtime_error {
 public:
  InclusionError(const std::string& what, Word witness)
      : std::runtime_error(what + ": witness " + word_str(witness)),
        witness(std::move(witness)) {}
  Word witness;
};

/// Oracle state bound exceeded.
class BoundError : public std::runtime_error {
 public:
  explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Invariant the implementation itself guarantees was observed broken.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace supctl

#endif  // SUPCTL_ERRORS_HPP_
