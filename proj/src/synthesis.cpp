// synthesis.cpp
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

#include "supctl/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "internal.hpp"
#include "supctl/lang_ops.hpp"
#include "supctl/refine.hpp"

namespace supctl {

namespace {

constexpr int kFixpointCap = 256;

std::vector<bool> event_mask(const Alphabet& alphabet,
                             const std::vector<std::string>& names,
                             const char* what) {
  std::vector<bool> mask(alphabet.size(), false);
  for (const std::string& n : names) {
    int e = alphabet.index(n);
    if (e < 0) {
      throw InputError(std::string(what) + ": event '" + n +
                       "' not in alphabet");
    }
    mask[e] = true;
  }
  return mask;
}

}  // namespace

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::C: return "c";
    case Flavor::N: return "n";
    case Flavor::R_K: return "r";
    case Flavor::R_L: return "R";
    case Flavor::CN: return "cn";
    case Flavor::CR: return "cr";
  }
  return "?";
}

Flavor flavor_from_name(const std::string& name) {
  if (name == "c" || name == "supc") return Flavor::C;
  if (name == "n" || name == "supn") return Flavor::N;
  if (name == "r" || name == "supr") return Flavor::R_K;
  if (name == "R" || name == "supR") return Flavor::R_L;
  if (name == "cn" || name == "supcn") return Flavor::CN;
  if (name == "cr" || name == "supcr") return Flavor::CR;
  throw InputError("unknown flavor '" + name + "'");
}

Generator sup_controllable(const Generator& spec, const Generator& plant,
                           const std::vector<std::string>& au) {
  std::vector<bool> is_u = event_mask(plant.alphabet(), au, "sup_controllable");
  RefinedPair r = refine(spec, plant);
  if (r.product.is_empty()) return Generator::empty(plant.alphabet());

  const Generator& g = r.product;
  // Backward closure of the non-spec region under uncontrollable events.
  std::vector<char> bad(g.num_states(), 0);
  for (int q = 0; q < g.num_states(); ++q) bad[q] = r.in_spec[q] ? 0 : 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < g.num_states(); ++q) {
      if (bad[q]) continue;
      for (int e = 0; e < g.alphabet().size(); ++e) {
        if (!is_u[e]) continue;
        int t = g.target(q, e);
        if (t >= 0 && bad[t]) {
          bad[q] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<char> keep(g.num_states(), 0);
  for (int q = 0; q < g.num_states(); ++q) keep[q] = bad[q] ? 0 : 1;
  return restrict_to_mask(g, keep);
}

Generator sup_normal(const Generator& spec, const Generator& plant,
                     const std::vector<std::string>& ao) {
  std::vector<bool> is_obs = event_mask(plant.alphabet(), ao, "sup_normal");
  RefinedPair r = refine(spec, plant);
  if (r.product.is_empty() || !r.in_spec[r.product.initial()]) {
    return Generator::empty(plant.alphabet());
  }

  const Generator& g = r.product;
  std::vector<std::string> obs_names;
  for (int e = 0; e < g.alphabet().size(); ++e) {
    if (is_obs[e]) obs_names.push_back(g.alphabet().event(e).name);
  }
  ObserverResult obs = observer_with_subsets(g, obs_names);

  // Observer cells collect the endpoints of all strings of L with one
  // observation; a cell escaping the spec region disqualifies every string
  // routed through it.
  std::vector<char> cell_ok(obs.subsets.size(), 1);
  for (std::size_t x = 0; x < obs.subsets.size(); ++x) {
    for (int q : obs.subsets[x]) {
      if (!r.in_spec[q]) {
        cell_ok[x] = 0;
        break;
      }
    }
  }

  detail::NameMint mint;
  std::map<std::pair<int, int>, int> ids;  // (product state, observer state)
  std::vector<std::pair<int, int>> states;
  std::vector<std::string> names;
  auto discover = [&](std::pair<int, int> p) {
    auto [it, inserted] = ids.emplace(p, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(p);
      names.push_back(mint.mint(g.state_name(p.first) + "@" +
                                obs.observer.state_name(p.second)));
    }
    return it->second;
  };
  std::pair<int, int> init{g.initial(), obs.observer.initial()};
  if (!cell_ok[init.second]) return Generator::empty(plant.alphabet());
  discover(init);
  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    auto [p, x] = states[cur];
    for (int e = 0; e < g.alphabet().size(); ++e) {
      int tp = g.target(p, e);
      if (tp < 0 || !r.in_spec[tp]) continue;
      int tx = x;
      if (is_obs[e]) {
        tx = obs.observer.target(
            x, obs.observer.alphabet().index(g.alphabet().event(e).name));
      }
      if (!cell_ok[tx]) continue;
      edges.push_back({static_cast<int>(cur), e, discover({tp, tx})});
    }
  }
  Generator out(g.alphabet(), names, names[0]);
  for (const Edge& edge : edges) {
    out.add_transition(names[edge.from], g.alphabet().event(edge.event).name,
                       names[edge.to]);
  }
  return out.accessible();
}

namespace {

// One round of the relative-observability fixpoint. Builds the
// observation-determinized verifier for the current iterate and, when
// `remove_violations` is set, drops every violating continuation.
struct RelObsRound {
  Generator next;
  bool removed = false;
};

RelObsRound rel_obs_round(const Generator& cur, const Generator& ambient,
                          const Generator& plant,
                          const std::vector<bool>& is_obs,
                          bool remove_violations) {
  RefinedPair r = refine(cur, plant);
  const Generator& g = r.product;
  const Alphabet& alphabet = g.alphabet();

  // w' configurations: alive in the ambient and in the plant simultaneously.
  using Pair = std::pair<int, int>;  // (ambient state, product state)
  auto closure = [&](std::vector<Pair> set) {
    std::deque<Pair> queue(set.begin(), set.end());
    std::set<Pair> in(set.begin(), set.end());
    while (!queue.empty()) {
      Pair pr = queue.front();
      queue.pop_front();
      for (int e = 0; e < alphabet.size(); ++e) {
        if (is_obs[e]) continue;
        int tc = ambient.target(pr.first, e);
        int tp = g.target(pr.second, e);
        if (tc >= 0 && tp >= 0 && in.emplace(tc, tp).second) {
          queue.emplace_back(tc, tp);
        }
      }
    }
    return std::vector<Pair>(in.begin(), in.end());
  };

  struct DState {
    int h;
    std::vector<Pair> partners;
    bool operator<(const DState& o) const {
      return std::tie(h, partners) < std::tie(o.h, o.partners);
    }
  };
  detail::NameMint mint;
  std::map<DState, int> ids;
  std::vector<DState> states;
  std::vector<std::string> names;
  auto discover = [&](DState s) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(std::move(s));
      names.push_back(mint.mint("d" + std::to_string(names.size())));
    }
    return it->second;
  };
  DState init{g.initial(),
              closure({{ambient.initial(), g.initial()}})};
  discover(std::move(init));

  struct Edge {
    int from, event, to;
    bool violating;
  };
  std::vector<Edge> edges;
  bool any_violation = false;

  for (std::size_t cur_id = 0; cur_id < states.size(); ++cur_id) {
    DState state = states[cur_id];
    for (int e = 0; e < alphabet.size(); ++e) {
      int th = g.target(state.h, e);
      if (th < 0 || !r.in_spec[th]) continue;  // wa must stay in the iterate
      bool violating = false;
      for (const Pair& pr : state.partners) {
        int tp = g.target(pr.second, e);
        if (tp >= 0 && !r.in_spec[tp]) {  // w'a in L but outside the iterate
          violating = true;
          break;
        }
      }
      if (violating && remove_violations) {
        any_violation = true;
        edges.push_back({static_cast<int>(cur_id), e, -1, true});
        continue;
      }
      DState next;
      next.h = th;
      if (is_obs[e]) {
        std::vector<Pair> moved;
        for (const Pair& pr : state.partners) {
          int tc = ambient.target(pr.first, e);
          int tp = g.target(pr.second, e);
          if (tc >= 0 && tp >= 0) moved.emplace_back(tc, tp);
        }
        std::sort(moved.begin(), moved.end());
        moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
        next.partners = closure(std::move(moved));
      } else {
        next.partners = state.partners;
      }
      edges.push_back({static_cast<int>(cur_id), e, discover(std::move(next)),
                       false});
    }
  }

  if (remove_violations && !any_violation) {
    return {cur, false};
  }
  Generator out(alphabet, names, names[0]);
  for (const Edge& edge : edges) {
    if (edge.violating) continue;
    out.add_transition(names[edge.from], alphabet.event(edge.event).name,
                       names[edge.to]);
  }
  return {out.accessible(), any_violation};
}

}  // namespace

Generator sup_rel_observable(const Generator& spec, const Generator& ambient,
                             const Generator& plant,
                             const std::vector<std::string>& ao) {
  if (!spec.alphabet().same_events(plant.alphabet()) ||
      !spec.alphabet().same_events(ambient.alphabet())) {
    throw InputError("sup_rel_observable requires a common event set");
  }
  std::vector<bool> is_obs =
      event_mask(plant.alphabet(), ao, "sup_rel_observable");
  {
    LeqResult leq = language_leq(spec, plant);
    if (!leq.holds) {
      throw InclusionError("specification is not included in the plant",
                           *leq.witness);
    }
  }
  if (spec.is_empty() || plant.is_empty()) {
    return Generator::empty(plant.alphabet());
  }
  if (ambient.is_empty()) return spec.canonical();

  Generator cur = spec.canonical();
  for (int round = 0; round < kFixpointCap; ++round) {
    if (cur.is_empty()) return cur;
    RelObsRound step = rel_obs_round(cur, ambient, plant, is_obs,
                                     /*remove_violations=*/true);
    if (!step.removed) return cur;
    cur = std::move(step.next);
  }
  throw InternalError("sup_rel_observable did not converge within " +
                      std::to_string(kFixpointCap) + " rounds");
}

Generator relobs_verifier(const Generator& spec, const Generator& ambient,
                          const Generator& plant,
                          const std::vector<std::string>& ao) {
  if (!spec.alphabet().same_events(plant.alphabet()) ||
      !spec.alphabet().same_events(ambient.alphabet())) {
    throw InputError("relobs_verifier requires a common event set");
  }
  std::vector<bool> is_obs =
      event_mask(plant.alphabet(), ao, "relobs_verifier");
  if (spec.is_empty() || plant.is_empty()) {
    return Generator::empty(plant.alphabet());
  }
  if (ambient.is_empty()) return spec.canonical();
  return rel_obs_round(spec, ambient, plant, is_obs,
                       /*remove_violations=*/false)
      .next;
}

Generator sup_combined(const Generator& spec, const Generator& plant,
                       const std::vector<std::string>& au,
                       const std::vector<std::string>& ao, Flavor flavor) {
  if (flavor != Flavor::CN && flavor != Flavor::CR) {
    throw InputError("sup_combined expects flavor cn or cr");
  }
  Generator cur = spec.canonical();
  const Generator& frozen_ambient = spec;  // CR keeps the original ambient
  for (int round = 0; round < kFixpointCap; ++round) {
    if (cur.is_empty()) return cur;
    Generator ctrl = sup_controllable(cur, plant, au);
    Generator both = flavor == Flavor::CN
                         ? sup_normal(ctrl, plant, ao)
                         : sup_rel_observable(ctrl, frozen_ambient, plant, ao);
    if (language_equal(both, cur)) return both;
    cur = std::move(both);
  }
  throw InternalError("sup_combined did not converge within " +
                      std::to_string(kFixpointCap) + " rounds");
}

Generator synthesize(Flavor flavor, const Generator& spec,
                     const Generator& plant,
                     const std::vector<std::string>& au,
                     const std::vector<std::string>& ao) {
  switch (flavor) {
    case Flavor::C:
      return sup_controllable(spec, plant, au);
    case Flavor::N:
      return sup_normal(spec, plant, ao);
    case Flavor::R_K:
      return sup_rel_observable(spec, spec, plant, ao);
    case Flavor::R_L:
      return sup_rel_observable(spec, plant, plant, ao);
    case Flavor::CN:
    case Flavor::CR:
      return sup_combined(spec, plant, au, ao, flavor);
  }
  throw InputError("unknown flavor");
}

Generator synthesize(Flavor flavor, const Generator& spec,
                     const Generator& plant) {
  return synthesize(flavor, spec, plant,
                    plant.alphabet().uncontrollable_names(),
                    plant.alphabet().observable_names());
}

}  // namespace supctl
