// alphabet.cpp
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

#include "supctl/alphabet.hpp"

#include <algorithm>
#include <sstream>

namespace supctl {

std::string word_str(const Word& w) {
  if (w.empty()) return "<eps>";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

Alphabet::Alphabet(std::vector<Event> events) : events_(std::move(events)) {
  std::sort(events_.begin(), events_.end(),
            [](const Event& a, const Event& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < events_.size(); ++i) {
    if (events_[i].name == events_[i - 1].name) {
      throw InputError("duplicate event '" + events_[i].name + "' in alphabet");
    }
  }
  for (const Event& e : events_) {
    if (e.name.empty()) throw InputError("empty event name in alphabet");
  }
}

int Alphabet::index(const std::string& name) const {
  auto it = std::lower_bound(
      events_.begin(), events_.end(), name,
      [](const Event& e, const std::string& n) { return e.name < n; });
  if (it == events_.end() || it->name != name) return -1;
  return static_cast<int>(it - events_.begin());
}

std::vector<std::string> Alphabet::names() const {
  std::vector<std::string> out;
  out.reserve(events_.size());
  for (const Event& e : events_) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::controllable_names() const {
  std::vector<std::string> out;
  for (const Event& e : events_)
    if (e.controllable) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::uncontrollable_names() const {
  std::vector<std::string> out;
  for (const Event& e : events_)
    if (!e.controllable) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::observable_names() const {
  std::vector<std::string> out;
  for (const Event& e : events_)
    if (e.observable) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::unobservable_names() const {
  std::vector<std::string> out;
  for (const Event& e : events_)
    if (!e.observable) out.push_back(e.name);
  return out;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (events_.size() != other.events_.size()) return false;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i].name != other.events_[i].name ||
        events_[i].controllable != other.events_[i].controllable ||
        events_[i].observable != other.events_[i].observable)
      return false;
  }
  return true;
}

bool Alphabet::same_events(const Alphabet& other) const {
  if (events_.size() != other.events_.size()) return false;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i].name != other.events_[i].name) return false;
  }
  return true;
}

bool Alphabet::consistent_subset_of(const Alphabet& other) const {
  for (const Event& e : events_) {
    int j = other.index(e.name);
    if (j < 0) return false;
    const Event& o = other.event(j);
    if (o.controllable != e.controllable || o.observable != e.observable)
      return false;
  }
  return true;
}

Alphabet Alphabet::merged_with(const Alphabet& other) const {
  std::vector<Event> merged = events_;
  for (const Event& e : other.events_) {
    int i = index(e.name);
    if (i < 0) {
      merged.push_back(e);
    } else {
      const Event& mine = events_[i];
      if (mine.controllable != e.controllable) {
        throw ConsistencyError("conflicting controllability flag for event '" +
                               e.name + "'");
      }
      if (mine.observable != e.observable) {
        throw ConsistencyError("conflicting observability flag for event '" +
                               e.name + "'");
      }
    }
  }
  return Alphabet(std::move(merged));
}

Alphabet Alphabet::restricted_to(const std::vector<std::string>& keep) const {
  std::vector<Event> out;
  for (const std::string& name : keep) {
    int i = index(name);
    if (i < 0) throw InputError("event '" + name + "' not in alphabet");
    out.push_back(events_[i]);
  }
  return Alphabet(std::move(out));
}

Alphabet Alphabet::parse_entries(const std::string& entries) {
  std::istringstream in(entries);
  std::vector<Event> events;
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || tok.find(':', colon + 1) != std::string::npos) {
      throw InputError("bad alphabet entry '" + tok + "' (expected name:flags)");
    }
    Event e;
    e.name = tok.substr(0, colon);
    if (e.name.empty()) throw InputError("bad alphabet entry '" + tok + "'");
    std::string flags = tok.substr(colon + 1);
    for (char c : flags) {
      if (c == 'c' && !e.controllable) {
        e.controllable = true;
      } else if (c == 'o' && !e.observable) {
        e.observable = true;
      } else {
        throw InputError("bad flags '" + flags + "' for event '" + e.name + "'");
      }
    }
    events.push_back(std::move(e));
  }
  return Alphabet(std::move(events));
}

std::string Alphabet::format_entries() const {
  std::string out;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (i) out += ' ';
    out += events_[i].name;
    out += ':';
    if (events_[i].controllable) out += 'c';
    if (events_[i].observable) out += 'o';
  }
  return out;
}

Projection::Projection(Alphabet source_alphabet,
                       std::vector<std::string> target_events)
    : source(std::move(source_alphabet)), target(std::move(target_events)) {
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (const std::string& name : target) {
    if (!source.has(name)) {
      throw InputError("projection target event '" + name +
                       "' not in source alphabet");
    }
  }
}

bool Projection::keeps(const std::string& event) const {
  return std::binary_search(target.begin(), target.end(), event);
}

Word Projection::apply(const Word& w) const {
  Word out;
  for (const std::string& a : w) {
    if (source.index(a) < 0) {
      throw InputError("event '" + a + "' not in projection source alphabet");
    }
    if (keeps(a)) out.push_back(a);
  }
  return out;
}

Word project_string(const Word& w, const Projection& p) { return p.apply(w); }

}  // namespace supctl
