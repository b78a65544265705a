// supervisor.cpp
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

#include "supctl/supervisor.hpp"

#include <algorithm>
#include <map>

#include "internal.hpp"
#include "supctl/lang_ops.hpp"

namespace supctl {

nlohmann::json Supervisor::to_json() const {
  nlohmann::json j;
  j["alphabet"] = nlohmann::json::array();
  for (const Event& e : alphabet.events()) {
    j["alphabet"].push_back({{"name", e.name},
                             {"controllable", e.controllable},
                             {"observable", e.observable}});
  }
  nlohmann::json obs;
  obs["states"] = observer.state_names();
  obs["initial"] = observer.is_empty()
                       ? nlohmann::json()
                       : nlohmann::json(observer.state_name(observer.initial()));
  obs["transitions"] = nlohmann::json::array();
  for (int q = 0; q < observer.num_states(); ++q) {
    for (int e = 0; e < observer.alphabet().size(); ++e) {
      int t = observer.target(q, e);
      if (t < 0) continue;
      obs["transitions"].push_back({{"from", observer.state_name(q)},
                                    {"event", observer.alphabet().event(e).name},
                                    {"to", observer.state_name(t)}});
    }
  }
  j["observer"] = std::move(obs);
  nlohmann::json pat = nlohmann::json::object();
  for (int q = 0; q < observer.num_states(); ++q) {
    pat[observer.state_name(q)] = patterns[q];
  }
  j["patterns"] = std::move(pat);
  j["default_pattern"] = default_pattern;
  return j;
}

Supervisor Supervisor::from_json(const nlohmann::json& j) {
  Supervisor s;
  std::vector<Event> events;
  for (const auto& e : j.at("alphabet")) {
    events.push_back(Event{e.at("name").get<std::string>(),
                           e.at("controllable").get<bool>(),
                           e.at("observable").get<bool>()});
  }
  s.alphabet = Alphabet(std::move(events));

  const auto& obs = j.at("observer");
  Alphabet obs_alphabet = s.alphabet.restricted_to(s.alphabet.observable_names());
  std::vector<std::string> states =
      obs.at("states").get<std::vector<std::string>>();
  if (states.empty()) {
    s.observer = Generator::empty(obs_alphabet);
  } else {
    s.observer =
        Generator(obs_alphabet, states, obs.at("initial").get<std::string>());
    for (const auto& t : obs.at("transitions")) {
      s.observer.add_transition(t.at("from").get<std::string>(),
                                t.at("event").get<std::string>(),
                                t.at("to").get<std::string>());
    }
  }
  s.patterns.resize(states.size());
  for (int q = 0; q < s.observer.num_states(); ++q) {
    s.patterns[q] = j.at("patterns")
                        .at(s.observer.state_name(q))
                        .get<std::vector<std::string>>();
  }
  s.default_pattern = j.at("default_pattern").get<std::vector<std::string>>();
  return s;
}

Supervisor induce_supervisor(const Generator& target, const Generator& plant,
                             const std::vector<std::string>& ac,
                             const std::vector<std::string>& ao) {
  if (!target.alphabet().same_events(plant.alphabet())) {
    throw InputError("induce_supervisor requires a common event set");
  }
  if (target.is_empty()) {
    throw InputError("cannot realize a supervisor for the empty language");
  }
  LeqResult leq = language_leq(target, plant);
  if (!leq.holds) {
    throw InclusionError("target is not included in the plant", *leq.witness);
  }
  for (const std::string& n : ac) {
    if (!target.alphabet().has(n))
      throw InputError("controllable event '" + n + "' not in alphabet");
  }
  for (const std::string& n : ao) {
    if (!target.alphabet().has(n))
      throw InputError("observable event '" + n + "' not in alphabet");
  }

  Supervisor s;
  // Rebuild the alphabet with flags from the given ac/ao subsets.
  std::vector<Event> events;
  for (const Event& e : target.alphabet().events()) {
    Event copy = e;
    copy.controllable = std::find(ac.begin(), ac.end(), e.name) != ac.end();
    copy.observable = std::find(ao.begin(), ao.end(), e.name) != ao.end();
    events.push_back(copy);
  }
  s.alphabet = Alphabet(std::move(events));
  s.default_pattern = s.alphabet.uncontrollable_names();

  ObserverResult obs = observer_with_subsets(target, ao);
  s.observer = obs.observer;
  s.patterns.resize(obs.subsets.size());
  for (std::size_t x = 0; x < obs.subsets.size(); ++x) {
    std::vector<std::string> pattern = s.default_pattern;
    for (const std::string& a : s.alphabet.controllable_names()) {
      int e = target.alphabet().index(a);
      bool enabled = false;
      for (int q : obs.subsets[x]) {
        if (target.target(q, e) >= 0) {
          enabled = true;
          break;
        }
      }
      if (enabled) pattern.push_back(a);
    }
    std::sort(pattern.begin(), pattern.end());
    s.patterns[x] = std::move(pattern);
  }
  return s;
}

Generator closed_loop(const Supervisor& sup, const Generator& plant) {
  if (!sup.alphabet.same_events(plant.alphabet())) {
    throw InputError("closed_loop requires a common event set");
  }
  if (plant.is_empty()) return Generator::empty(plant.alphabet());

  const Alphabet& alphabet = plant.alphabet();
  const int OUTSIDE = -1;
  std::vector<std::vector<bool>> enabled(sup.observer.num_states() + 1);
  auto pattern_mask = [&](const std::vector<std::string>& pattern) {
    std::vector<bool> mask(alphabet.size(), false);
    for (const std::string& a : pattern) {
      int e = alphabet.index(a);
      if (e >= 0) mask[e] = true;
    }
    return mask;
  };
  for (int x = 0; x < sup.observer.num_states(); ++x) {
    enabled[x] = pattern_mask(sup.patterns[x]);
  }
  std::vector<bool> default_mask = pattern_mask(sup.default_pattern);

  detail::NameMint mint;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> states;
  std::vector<std::string> names;
  auto discover = [&](std::pair<int, int> p) {
    auto [it, inserted] = ids.emplace(p, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(p);
      std::string xs = p.second == OUTSIDE
                           ? std::string("?")
                           : sup.observer.state_name(p.second);
      names.push_back(mint.mint(plant.state_name(p.first) + "@" + xs));
    }
    return it->second;
  };
  int obs_init =
      sup.observer.is_empty() ? OUTSIDE : sup.observer.initial();
  discover({plant.initial(), obs_init});
  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    auto [q, x] = states[cur];
    const std::vector<bool>& mask = x == OUTSIDE ? default_mask : enabled[x];
    for (int e = 0; e < alphabet.size(); ++e) {
      int t = plant.target(q, e);
      if (t < 0 || !mask[e]) continue;
      // Observation semantics follow the supervisor's flags, not the
      // plant file's.
      const Event& ev = sup.alphabet.event(e);
      int nx = x;
      if (ev.observable) {
        nx = x == OUTSIDE ? OUTSIDE
                          : sup.observer.target(
                                x, sup.observer.alphabet().index(ev.name));
      }
      edges.push_back({static_cast<int>(cur), e, discover({t, nx})});
    }
  }
  Generator out(alphabet, names, names[0]);
  for (const Edge& edge : edges) {
    out.add_transition(names[edge.from], alphabet.event(edge.event).name,
                       names[edge.to]);
  }
  return out.accessible();
}

}  // namespace supctl
