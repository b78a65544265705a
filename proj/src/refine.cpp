// refine.cpp
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

#include "supctl/refine.hpp"

#include <map>

#include "internal.hpp"
#include "supctl/lang_ops.hpp"

namespace supctl {

int RefinedPair::spec_state_count() const {
  int n = 0;
  for (char c : in_spec)
    if (c) ++n;
  return n;
}

Generator RefinedPair::spec_part() const {
  return restrict_to_mask(product, in_spec);
}

RefinedPair refine(const Generator& spec, const Generator& plant) {
  if (!spec.alphabet().same_events(plant.alphabet())) {
    throw InputError("refine requires a common event set");
  }
  LeqResult leq = language_leq(spec, plant);
  if (!leq.holds) {
    throw InclusionError("specification is not included in the plant",
                         *leq.witness);
  }

  RefinedPair out{Generator::empty(plant.alphabet()), {}};
  if (plant.is_empty()) return out;

  const Alphabet& alphabet = plant.alphabet();
  const int DEAD = -1;
  detail::NameMint mint;
  std::map<std::pair<int, int>, int> ids;  // (plant state, spec state|DEAD)
  std::vector<std::pair<int, int>> pairs;  // in BFS discovery order
  std::vector<std::string> names;
  auto discover = [&](std::pair<int, int> p) {
    auto [it, inserted] = ids.emplace(p, static_cast<int>(pairs.size()));
    if (inserted) {
      pairs.push_back(p);
      std::string k = p.second >= 0 ? spec.state_name(p.second) : std::string(".");
      names.push_back(mint.mint(plant.state_name(p.first) + "|" + k));
    }
    return it->second;
  };
  discover({plant.initial(), spec.is_empty() ? DEAD : spec.initial()});
  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;
  for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
    auto [l, k] = pairs[cur];
    for (int e = 0; e < alphabet.size(); ++e) {
      int tl = plant.target(l, e);
      if (tl < 0) continue;
      const std::string& name = alphabet.event(e).name;
      int tk = k >= 0 ? spec.target(k, spec.alphabet().index(name)) : DEAD;
      int id = discover({tl, tk});
      edges.push_back({static_cast<int>(cur), e, id});
    }
  }
  // Discovery order is already a BFS order from the initial state, so the
  // generator is accessible and canonical as built.
  Generator product(alphabet, names, names[0]);
  for (const Edge& edge : edges) {
    product.add_transition(names[edge.from], alphabet.event(edge.event).name,
                           names[edge.to]);
  }
  out.product = std::move(product);
  out.in_spec.assign(pairs.size(), 0);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.in_spec[i] = pairs[i].second >= 0 ? 1 : 0;
  }
  return out;
}

std::pair<Generator, Generator> refine_pair(const Generator& spec,
                                            const Generator& plant) {
  RefinedPair r = refine(spec, plant);
  return {r.spec_part(), r.product};
}

Generator restrict_to_mask(const Generator& g, const std::vector<char>& keep) {
  if (g.is_empty()) return g;
  if (!keep[g.initial()]) return Generator::empty(g.alphabet());
  std::vector<std::string> names;
  for (int q = 0; q < g.num_states(); ++q) {
    if (keep[q]) names.push_back(g.state_name(q));
  }
  Generator out(g.alphabet(), names, g.state_name(g.initial()));
  for (int q = 0; q < g.num_states(); ++q) {
    if (!keep[q]) continue;
    for (int e = 0; e < g.alphabet().size(); ++e) {
      int t = g.target(q, e);
      if (t >= 0 && keep[t]) {
        out.add_transition(g.state_name(q), g.alphabet().event(e).name,
                           g.state_name(t));
      }
    }
  }
  return out.accessible();
}

}  // namespace supctl
