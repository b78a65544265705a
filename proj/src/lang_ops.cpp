// lang_ops.cpp
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

#include "supctl/lang_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "internal.hpp"

namespace supctl {

namespace {

std::string join_names(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '|';
    out += parts[i];
  }
  return out;
}

std::string subset_name(const Generator& g, const std::vector<int>& subset) {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (int q : subset) names.push_back(g.state_name(q));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  out += '}';
  return out;
}

}  // namespace

Generator sync_product(const std::vector<Generator>& gs) {
  if (gs.empty()) throw InputError("sync_product needs at least one generator");
  Alphabet alphabet = gs[0].alphabet();
  for (std::size_t i = 1; i < gs.size(); ++i) {
    alphabet = alphabet.merged_with(gs[i].alphabet());
  }
  const int n = static_cast<int>(gs.size());
  for (const Generator& g : gs) {
    if (g.is_empty()) return Generator::empty(alphabet);
  }

  // Per component and union-alphabet event: local event index or -1.
  std::vector<std::vector<int>> local_event(n);
  for (int i = 0; i < n; ++i) {
    local_event[i].resize(alphabet.size());
    for (int e = 0; e < alphabet.size(); ++e) {
      local_event[i][e] = gs[i].alphabet().index(alphabet.event(e).name);
    }
  }

  detail::NameMint mint;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> tuples;
  std::vector<std::string> names;

  std::vector<int> init(n);
  for (int i = 0; i < n; ++i) init[i] = gs[i].initial();
  ids[init] = 0;
  tuples.push_back(init);
  {
    std::vector<std::string> parts;
    for (int i = 0; i < n; ++i) parts.push_back(gs[i].state_name(init[i]));
    names.push_back(mint.mint(join_names(parts)));
  }

  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;

  for (std::size_t cur = 0; cur < tuples.size(); ++cur) {
    std::vector<int> tuple = tuples[cur];
    for (int e = 0; e < alphabet.size(); ++e) {
      std::vector<int> next(n);
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        int le = local_event[i][e];
        if (le < 0) {
          next[i] = tuple[i];  // event private to other components
        } else {
          int t = gs[i].target(tuple[i], le);
          if (t < 0) {
            ok = false;
          } else {
            next[i] = t;
          }
        }
      }
      if (!ok) continue;
      auto [it, inserted] = ids.emplace(next, static_cast<int>(tuples.size()));
      if (inserted) {
        tuples.push_back(next);
        std::vector<std::string> parts;
        for (int i = 0; i < n; ++i) parts.push_back(gs[i].state_name(next[i]));
        names.push_back(mint.mint(join_names(parts)));
      }
      edges.push_back({static_cast<int>(cur), e, it->second});
    }
  }

  Generator out(alphabet, names, names[0]);
  for (const Edge& edge : edges) {
    out.add_transition(names[edge.from], alphabet.event(edge.event).name,
                       names[edge.to]);
  }
  return out.accessible();
}

ObserverResult observer_with_subsets(
    const Generator& g, const std::vector<std::string>& target_events) {
  Alphabet target = g.alphabet().restricted_to(target_events);
  if (g.is_empty()) {
    return {Generator::empty(target), {}};
  }

  std::vector<bool> kept(g.alphabet().size(), false);
  for (const std::string& name : target_events) {
    kept[g.alphabet().index(name)] = true;
  }

  auto closure = [&](std::vector<int> set) {
    std::deque<int> queue(set.begin(), set.end());
    std::vector<bool> in(g.num_states(), false);
    for (int q : set) in[q] = true;
    while (!queue.empty()) {
      int q = queue.front();
      queue.pop_front();
      for (int e = 0; e < g.alphabet().size(); ++e) {
        if (kept[e]) continue;
        int t = g.target(q, e);
        if (t >= 0 && !in[t]) {
          in[t] = true;
          queue.push_back(t);
        }
      }
    }
    std::vector<int> out;
    for (int q = 0; q < g.num_states(); ++q) {
      if (in[q]) out.push_back(q);
    }
    return out;
  };

  detail::NameMint mint;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  std::vector<std::string> names;
  std::vector<int> init = closure({g.initial()});
  ids[init] = 0;
  subsets.push_back(init);
  names.push_back(mint.mint(subset_name(g, init)));

  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;

  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    std::vector<int> subset = subsets[cur];
    for (int te = 0; te < target.size(); ++te) {
      int e = g.alphabet().index(target.event(te).name);
      std::vector<int> moved;
      for (int q : subset) {
        int t = g.target(q, e);
        if (t >= 0) moved.push_back(t);
      }
      if (moved.empty()) continue;
      std::sort(moved.begin(), moved.end());
      moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
      std::vector<int> next = closure(std::move(moved));
      auto [it, inserted] = ids.emplace(next, static_cast<int>(subsets.size()));
      if (inserted) {
        subsets.push_back(next);
        names.push_back(mint.mint(subset_name(g, next)));
      }
      edges.push_back({static_cast<int>(cur), te, it->second});
    }
  }

  Generator observer(target, names, names[0]);
  for (const Edge& edge : edges) {
    observer.add_transition(names[edge.from], target.event(edge.event).name,
                            names[edge.to]);
  }
  return {observer.accessible(), std::move(subsets)};
}

Generator natural_projection(const Generator& g,
                             const std::vector<std::string>& target_events) {
  return observer_with_subsets(g, target_events).observer;
}

Generator inverse_projection(const Generator& g, const Alphabet& full) {
  if (!g.alphabet().consistent_subset_of(full)) {
    // Distinguish missing events from flag disagreement.
    for (const Event& e : g.alphabet().events()) {
      int j = full.index(e.name);
      if (j < 0) {
        throw InputError("event '" + e.name + "' missing from full alphabet");
      }
      const Event& o = full.event(j);
      if (o.controllable != e.controllable || o.observable != e.observable) {
        throw ConsistencyError("flag disagreement on event '" + e.name + "'");
      }
    }
  }
  if (g.is_empty()) return Generator::empty(full);

  Generator out(full, g.state_names(), g.state_name(g.initial()));
  for (int q = 0; q < g.num_states(); ++q) {
    for (int e = 0; e < full.size(); ++e) {
      const std::string& name = full.event(e).name;
      int ge = g.alphabet().index(name);
      if (ge < 0) {
        out.add_transition(g.state_name(q), name, g.state_name(q));
      } else {
        int t = g.target(q, ge);
        if (t >= 0) out.add_transition(g.state_name(q), name, g.state_name(t));
      }
    }
  }
  return out.accessible();
}

LeqResult language_leq(const Generator& g1, const Generator& g2) {
  if (!g1.alphabet().same_events(g2.alphabet())) {
    throw InputError("language_leq requires a common event set");
  }
  if (g1.is_empty()) return {true, std::nullopt};

  const int DEAD = -1;
  // BFS over pairs (q1, q2-or-dead), expanding events lexicographically;
  // the first dead second component yields the minimal witness.
  struct Node {
    int q1, q2;
    Word w;
  };
  std::deque<Node> queue;
  std::map<std::pair<int, int>, bool> seen;
  int init2 = g2.is_empty() ? DEAD : g2.initial();
  if (init2 == DEAD) return {false, Word{}};
  queue.push_back({g1.initial(), init2, {}});
  seen[{g1.initial(), init2}] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int e = 0; e < g1.alphabet().size(); ++e) {
      int t1 = g1.target(node.q1, e);
      if (t1 < 0) continue;
      const std::string& name = g1.alphabet().event(e).name;
      int t2 = g2.target(node.q2, g2.alphabet().index(name));
      Word w = node.w;
      w.push_back(name);
      if (t2 < 0) return {false, std::move(w)};
      if (!seen[{t1, t2}]) {
        seen[{t1, t2}] = true;
        queue.push_back({t1, t2, std::move(w)});
      }
    }
  }
  return {true, std::nullopt};
}

bool language_equal(const Generator& g1, const Generator& g2) {
  return language_leq(g1, g2).holds && language_leq(g2, g1).holds;
}

Generator intersect(const Generator& g1, const Generator& g2) {
  if (!g1.alphabet().same_events(g2.alphabet())) {
    throw InputError("intersect requires a common event set");
  }
  if (g1.is_empty()) return g1;
  if (g2.is_empty()) return Generator::empty(g1.alphabet());
  return sync_product({g1, g2});
}

Generator union_language(const Generator& g1, const Generator& g2) {
  if (!g1.alphabet().same_events(g2.alphabet())) {
    throw InputError("union_language requires a common event set");
  }
  if (g1.is_empty()) return g2.accessible();
  if (g2.is_empty()) return g1.accessible();

  const Alphabet& alphabet = g1.alphabet();
  const int DEAD = -1;
  detail::NameMint mint;
  std::map<std::pair<int, int>, int> ids;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  auto name_of = [&](std::pair<int, int> p) {
    std::string a = p.first >= 0 ? g1.state_name(p.first) : std::string(".");
    std::string b = p.second >= 0 ? g2.state_name(p.second) : std::string(".");
    return a + "|" + b;
  };
  std::pair<int, int> init{g1.initial(), g2.initial()};
  ids[init] = 0;
  pairs.push_back(init);
  names.push_back(mint.mint(name_of(init)));
  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;
  for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [q1, q2] = pairs[cur];
    for (int e = 0; e < alphabet.size(); ++e) {
      const std::string& name = alphabet.event(e).name;
      int t1 = q1 >= 0 ? g1.target(q1, e) : DEAD;
      int t2 = q2 >= 0 ? g2.target(q2, g2.alphabet().index(name)) : DEAD;
      if (t1 < 0 && t2 < 0) continue;
      std::pair<int, int> next{t1, t2};
      auto [it, inserted] = ids.emplace(next, static_cast<int>(pairs.size()));
      if (inserted) {
        pairs.push_back(next);
        names.push_back(mint.mint(name_of(next)));
      }
      edges.push_back({static_cast<int>(cur), e, it->second});
    }
  }
  Generator out(alphabet, names, names[0]);
  for (const Edge& edge : edges) {
    out.add_transition(names[edge.from], alphabet.event(edge.event).name,
                       names[edge.to]);
  }
  return out.accessible();
}

Generator observation_closure(const Generator& g) {
  Generator projected = natural_projection(g, g.alphabet().observable_names());
  return inverse_projection(projected, g.alphabet());
}

Generator widen_alphabet(const Generator& g, const Alphabet& full) {
  if (!g.alphabet().consistent_subset_of(full)) {
    throw ConsistencyError("widen_alphabet: flags disagree or event missing");
  }
  if (g.is_empty()) return Generator::empty(full);
  Generator out(full, g.state_names(), g.state_name(g.initial()));
  for (int q = 0; q < g.num_states(); ++q) {
    for (int e = 0; e < g.alphabet().size(); ++e) {
      int t = g.target(q, e);
      if (t >= 0) {
        out.add_transition(g.state_name(q), g.alphabet().event(e).name,
                           g.state_name(t));
      }
    }
  }
  return out;
}

}  // namespace supctl
