// generator.hpp
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

#ifndef SUPCTL_GENERATOR_HPP_
#define SUPCTL_GENERATOR_HPP_

#include <set>
#include <string>
#include <vector>

#include "supctl/alphabet.hpp"
#include "supctl/errors.hpp"

namespace supctl {

/// Finite prefix-closed language snapshot: all strings up to `bound`.
struct StringSet {
  std::set<Word> strings;
  std::size_t bound = 0;

  bool contains(const Word& w) const { return strings.count(w) > 0; }
  bool operator==(const StringSet& other) const {
    return strings == other.strings;
  }
};

/// Deterministic generator: finite states, partial transition function,
/// initial state. The generated language L(G) = {s : delta(q0,s) defined}
/// is prefix-closed by construction. The distinguished EMPTY generator has
/// no states and generates the empty language.
///
/// Values are immutable after construction; all operations return new
/// generators.
class Generator {
 public:
  /// Default-constructs the EMPTY generator over an empty alphabet.
  Generator() = default;

  /// The EMPTY generator over the given alphabet.
  static Generator empty(Alphabet alphabet);

  /// One-state generator of {eps}.
  static Generator single_state(Alphabet alphabet, std::string state = "q0");

  /// States must be non-empty unique names; initial must be one of them.
  Generator(Alphabet alphabet, std::vector<std::string> states,
            const std::string& initial);

  /// Adds a transition; duplicate (from,event) pairs are rejected.
  void add_transition(const std::string& from, const std::string& event,
                      const std::string& to);

  bool is_empty() const { return states_.empty(); }
  int num_states() const { return static_cast<int>(states_.size()); }
  int num_transitions() const;
  int initial() const { return initial_; }
  const std::string& state_name(int s) const { return states_[s]; }
  const std::vector<std::string>& state_names() const { return states_; }
  int state_index(const std::string& name) const;
  const Alphabet& alphabet() const { return alphabet_; }

  /// Transition target for (state, event index), or -1 when undefined.
  int target(int state, int event) const {
    return delta_[static_cast<std::size_t>(state) * alphabet_.size() + event];
  }

  /// Runs a word from the initial state; -1 when it leaves the language.
  /// Throws InputError on events outside the alphabet.
  int run(const Word& w) const;

  /// True iff delta(q0, s) is defined.
  bool generates(const Word& s) const { return run(s) >= 0; }

  /// Exactly {s in L(G) : |s| <= max_len}.
  StringSet enumerate_language(std::size_t max_len) const;

  /// Same language, every state reachable, states in BFS discovery order
  /// (events expanded lexicographically). EMPTY stays EMPTY.
  Generator accessible() const;

  /// Canonical form: accessible() — BFS state order, events sorted.
  Generator canonical() const { return accessible(); }

  /// Canonical text form; see parse() for the format.
  std::string serialize() const;

  /// GraphViz DOT rendering: unobservable events dashed, uncontrollable
  /// events annotated with '!'.
  std::string to_dot() const;

  /// Parses the generator text format:
  ///   alphabet: a:co b:o tau:
  ///   states: s0 s1
  ///   initial: s0
  ///   trans: s0 a s1
  /// `#` starts a comment. An `EMPTY` line (after alphabet) denotes the
  /// EMPTY generator. Parsing is strict: unknown names, duplicate
  /// transitions, or a missing initial are errors with line numbers.
  static Generator parse(const std::string& text);
  static Generator parse_file(const std::string& path);

  void write_file(const std::string& path) const;

 private:
  Alphabet alphabet_;
  std::vector<std::string> states_;
  std::vector<int> delta_;  // states x events, -1 = undefined
  int initial_ = -1;
};

/// Free-function forms of the elementary operations.
Generator accessible(const Generator& g);
bool generates(const Generator& g, const Word& s);
StringSet enumerate_language(const Generator& g, std::size_t max_len);

}  // namespace supctl

#endif  // SUPCTL_GENERATOR_HPP_
