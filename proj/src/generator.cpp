// generator.cpp
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

#include "supctl/generator.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace supctl {

Generator Generator::empty(Alphabet alphabet) {
  Generator g;
  g.alphabet_ = std::move(alphabet);
  return g;
}

Generator Generator::single_state(Alphabet alphabet, std::string state) {
  return Generator(std::move(alphabet), {std::move(state)}, std::string());
}

Generator::Generator(Alphabet alphabet, std::vector<std::string> states,
                     const std::string& initial)
    : alphabet_(std::move(alphabet)), states_(std::move(states)) {
  if (states_.empty()) throw InputError("generator needs at least one state");
  std::vector<std::string> sorted = states_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw InputError("duplicate state '" + sorted[i] + "'");
    }
  }
  for (const std::string& s : states_) {
    if (s.empty()) throw InputError("empty state name");
  }
  const std::string& init = initial.empty() ? states_.front() : initial;
  initial_ = state_index(init);
  if (initial_ < 0) throw InputError("unknown initial state '" + init + "'");
  delta_.assign(states_.size() * alphabet_.size(), -1);
}

int Generator::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

int Generator::num_transitions() const {
  int n = 0;
  for (int t : delta_)
    if (t >= 0) ++n;
  return n;
}

void Generator::add_transition(const std::string& from,
                               const std::string& event,
                               const std::string& to) {
  int s = state_index(from);
  if (s < 0) throw InputError("unknown state '" + from + "'");
  int t = state_index(to);
  if (t < 0) throw InputError("unknown state '" + to + "'");
  int e = alphabet_.index(event);
  if (e < 0) throw InputError("unknown event '" + event + "'");
  int& slot = delta_[static_cast<std::size_t>(s) * alphabet_.size() + e];
  if (slot >= 0) {
    throw InputError("duplicate transition from '" + from + "' on '" + event +
                     "'");
  }
  slot = t;
}

int Generator::run(const Word& w) const {
  if (is_empty()) {
    for (const std::string& a : w) {
      if (alphabet_.index(a) < 0)
        throw InputError("event '" + a + "' not in alphabet");
    }
    return -1;
  }
  int q = initial_;
  for (const std::string& a : w) {
    int e = alphabet_.index(a);
    if (e < 0) throw InputError("event '" + a + "' not in alphabet");
    if (q >= 0) q = target(q, e);
  }
  return q;
}

StringSet Generator::enumerate_language(std::size_t max_len) const {
  StringSet out;
  out.bound = max_len;
  if (is_empty()) return out;
  // BFS over (state, word) pairs; word count is finite per level.
  std::deque<std::pair<int, Word>> queue;
  queue.emplace_back(initial_, Word{});
  while (!queue.empty()) {
    auto [q, w] = std::move(queue.front());
    queue.pop_front();
    out.strings.insert(w);
    if (w.size() == max_len) continue;
    for (int e = 0; e < alphabet_.size(); ++e) {
      int t = target(q, e);
      if (t < 0) continue;
      Word next = w;
      next.push_back(alphabet_.event(e).name);
      queue.emplace_back(t, std::move(next));
    }
  }
  return out;
}

Generator Generator::accessible() const {
  if (is_empty()) return *this;
  std::vector<int> order;           // BFS discovery order
  std::vector<int> pos(states_.size(), -1);
  order.push_back(initial_);
  pos[initial_] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int q = order[i];
    for (int e = 0; e < alphabet_.size(); ++e) {
      int t = target(q, e);
      if (t >= 0 && pos[t] < 0) {
        pos[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<std::string> names;
  names.reserve(order.size());
  for (int q : order) names.push_back(states_[q]);
  Generator out(alphabet_, std::move(names), states_[initial_]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int q = order[i];
    for (int e = 0; e < alphabet_.size(); ++e) {
      int t = target(q, e);
      if (t >= 0) {
        out.delta_[i * alphabet_.size() + e] = pos[t];
      }
    }
  }
  return out;
}

std::string Generator::serialize() const {
  Generator c = canonical();
  std::ostringstream out;
  out << "alphabet: " << c.alphabet_.format_entries() << "\n";
  if (c.is_empty()) {
    out << "EMPTY\n";
    return out.str();
  }
  out << "states:";
  for (const std::string& s : c.states_) out << ' ' << s;
  out << "\n";
  out << "initial: " << c.states_[c.initial_] << "\n";
  for (int q = 0; q < c.num_states(); ++q) {
    for (int e = 0; e < c.alphabet_.size(); ++e) {
      int t = c.target(q, e);
      if (t >= 0) {
        out << "trans: " << c.states_[q] << ' ' << c.alphabet_.event(e).name
            << ' ' << c.states_[t] << "\n";
      }
    }
  }
  return out.str();
}

std::string Generator::to_dot() const {
  Generator c = canonical();
  std::ostringstream out;
  out << "digraph generator {\n  rankdir=LR;\n  node [shape=circle];\n";
  if (c.is_empty()) {
    out << "  empty [shape=plaintext, label=\"EMPTY\"];\n}\n";
    return out.str();
  }
  out << "  __init [shape=point];\n";
  out << "  __init -> \"" << c.states_[c.initial_] << "\";\n";
  for (int q = 0; q < c.num_states(); ++q) {
    out << "  \"" << c.states_[q] << "\";\n";
  }
  for (int q = 0; q < c.num_states(); ++q) {
    for (int e = 0; e < c.alphabet_.size(); ++e) {
      int t = c.target(q, e);
      if (t < 0) continue;
      const Event& ev = c.alphabet_.event(e);
      out << "  \"" << c.states_[q] << "\" -> \"" << c.states_[t]
          << "\" [label=\"" << ev.name << (ev.controllable ? "" : "!") << "\"";
      if (!ev.observable) out << ", style=dashed";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

// Strips comments and whitespace; returns false for blank lines.
bool clean_line(const std::string& raw, std::string* out) {
  std::string s = raw;
  auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return false;
  auto end = s.find_last_not_of(" \t\r\n");
  *out = s.substr(begin, end - begin + 1);
  return true;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Generator Generator::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw, line;
  int lineno = 0;

  bool have_alphabet = false;
  Alphabet alphabet;
  std::vector<std::string> states;
  std::string initial;
  bool have_initial = false;
  bool empty_stanza = false;
  struct Trans {
    std::string from, event, to;
    int line;
  };
  std::vector<Trans> transitions;

  while (std::getline(in, raw)) {
    ++lineno;
    if (!clean_line(raw, &line)) continue;
    if (line == "EMPTY") {
      empty_stanza = true;
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) parse_fail(lineno, "expected 'keyword: ...'");
    std::string keyword = line.substr(0, colon);
    std::string payload = line.substr(colon + 1);
    if (keyword == "alphabet") {
      try {
        Alphabet parsed = Alphabet::parse_entries(payload);
        // Re-declaring an event on a later alphabet line is a duplicate.
        if (have_alphabet) {
          for (const Event& e : parsed.events()) {
            if (alphabet.has(e.name))
              parse_fail(lineno, "duplicate event '" + e.name + "'");
          }
          alphabet = alphabet.merged_with(parsed);
        } else {
          alphabet = parsed;
        }
      } catch (const InputError& e) {
        if (std::string(e.what()).rfind("line ", 0) == 0) throw;
        parse_fail(lineno, e.what());
      }
      have_alphabet = true;
    } else if (keyword == "states") {
      std::istringstream ps(payload);
      std::string tok;
      while (ps >> tok) states.push_back(tok);
    } else if (keyword == "initial") {
      std::istringstream ps(payload);
      std::string tok, extra;
      if (!(ps >> tok)) parse_fail(lineno, "missing initial state name");
      if (ps >> extra) parse_fail(lineno, "more than one initial state");
      if (have_initial) parse_fail(lineno, "duplicate initial statement");
      initial = tok;
      have_initial = true;
    } else if (keyword == "trans") {
      std::istringstream ps(payload);
      Trans t;
      t.line = lineno;
      std::string extra;
      if (!(ps >> t.from >> t.event >> t.to))
        parse_fail(lineno, "expected 'trans: from event to'");
      if (ps >> extra) parse_fail(lineno, "trailing tokens after transition");
      transitions.push_back(std::move(t));
    } else {
      parse_fail(lineno, "unknown statement '" + keyword + "'");
    }
  }

  if (!have_alphabet) throw InputError("missing alphabet statement");
  if (empty_stanza) {
    if (!states.empty() || have_initial || !transitions.empty()) {
      throw InputError("EMPTY stanza cannot be combined with states/initial/trans");
    }
    return Generator::empty(alphabet);
  }
  if (states.empty()) throw InputError("missing states statement");
  if (!have_initial) throw InputError("missing initial statement");

  Generator g(alphabet, states, initial);
  for (const Trans& t : transitions) {
    try {
      g.add_transition(t.from, t.event, t.to);
    } catch (const std::exception& e) {
      parse_fail(t.line, e.what());
    }
  }
  return g;
}

Generator Generator::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void Generator::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << serialize();
}

Generator accessible(const Generator& g) { return g.accessible(); }

bool generates(const Generator& g, const Word& s) { return g.generates(s); }

StringSet enumerate_language(const Generator& g, std::size_t max_len) {
  return g.enumerate_language(max_len);
}

}  // namespace supctl
