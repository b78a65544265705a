// alphabet.hpp
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

#ifndef SUPCTL_ALPHABET_HPP_
#define SUPCTL_ALPHABET_HPP_

#include <string>
#include <vector>

#include "supctl/errors.hpp"

namespace supctl {

/// One event with its control/observation attributes.
struct Event {
  std::string name;
  bool controllable = false;
  bool observable = false;
};

/// Finite event set with per-event controllable/observable flags.
/// Events are kept sorted by name, so event indices are lexicographic.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Event> events);

  int size() const { return static_cast<int>(events_.size()); }
  const Event& event(int i) const { return events_[i]; }
  const std::vector<Event>& events() const { return events_; }

  /// Index of an event name, or -1 when absent.
  int index(const std::string& name) const;
  bool has(const std::string& name) const { return index(name) >= 0; }

  std::vector<std::string> names() const;
  std::vector<std::string> controllable_names() const;
  std::vector<std::string> uncontrollable_names() const;
  std::vector<std::string> observable_names() const;
  std::vector<std::string> unobservable_names() const;

  /// Same event names with the same flags.
  bool operator==(const Alphabet& other) const;
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

  /// Same event names, flags ignored.
  bool same_events(const Alphabet& other) const;

  /// True when every event of this alphabet appears in `other` with equal flags.
  bool consistent_subset_of(const Alphabet& other) const;

  /// Union alphabet; flags of shared events must agree (ConsistencyError).
  Alphabet merged_with(const Alphabet& other) const;

  /// Sub-alphabet containing exactly `keep`; every name must exist (InputError).
  Alphabet restricted_to(const std::vector<std::string>& keep) const;

  /// Parses the payload of an `alphabet:` statement, e.g. "a:co b:o tau:".
  static Alphabet parse_entries(const std::string& entries);

  /// Renders as an `alphabet:` statement payload, events sorted by name.
  std::string format_entries() const;

 private:
  std::vector<Event> events_;  // sorted by name, unique
};

/// Natural projection onto a target subset of a source alphabet.
struct Projection {
  Projection(Alphabet source_alphabet, std::vector<std::string> target_events);

  Alphabet source;
  std::vector<std::string> target;  // sorted, subset of source names

  bool keeps(const std::string& event) const;
  Word apply(const Word& w) const;
};

/// project_string per the Projection invariant: erase events outside the target.
Word project_string(const Word& w, const Projection& p);

}  // namespace supctl

#endif  // SUPCTL_ALPHABET_HPP_
