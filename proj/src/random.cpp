// random.cpp
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

#include "supctl/random.hpp"

#include <algorithm>
#include <random>

#include "supctl/lang_ops.hpp"
#include "supctl/refine.hpp"

namespace supctl {

namespace {

// Draws go through explicit modulo/threshold helpers so results depend only
// on the mt19937_64 stream, not on library distribution internals.
struct Rng {
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::mt19937_64 engine;

  int below(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
  bool chance(double p) {
    return static_cast<double>(engine() >> 11) / 9007199254740992.0 < p;
  }
};

const char* kEventPool[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                            "i", "j", "k", "l"};

Alphabet random_flags(Rng& rng, const std::vector<std::string>& names,
                      const InstanceParams& p) {
  int n = static_cast<int>(names.size());
  std::vector<bool> unobs(n, false), uncont(n, false);
  for (int i = 0; i < n; ++i) {
    unobs[i] = rng.chance(p.unobs_fraction);
    uncont[i] = rng.chance(p.uncont_fraction);
  }
  auto force = [&](std::vector<bool>& v, int wanted) {
    int have = static_cast<int>(std::count(v.begin(), v.end(), true));
    while (have < wanted && have < n) {
      int i = rng.below(n);
      if (!v[i]) {
        v[i] = true;
        ++have;
      }
    }
  };
  force(unobs, std::min(p.min_unobs, n));
  force(uncont, std::min(p.min_uncont, n));
  std::vector<Event> events;
  for (int i = 0; i < n; ++i) {
    events.push_back(Event{names[i], !uncont[i], !unobs[i]});
  }
  return Alphabet(std::move(events));
}

Generator random_plant(Rng& rng, const Alphabet& alphabet,
                       const InstanceParams& p, const std::string& prefix) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    int n = 2 + rng.below(std::max(1, p.max_states - 1));
    n = std::min(n, p.max_states);
    std::vector<std::string> states;
    for (int i = 0; i < n; ++i) states.push_back(prefix + std::to_string(i));
    Generator g(alphabet, states, states[0]);
    int added = 0;
    for (int q = 0; q < n; ++q) {
      for (int e = 0; e < alphabet.size(); ++e) {
        if (rng.chance(p.transition_density)) {
          g.add_transition(states[q], alphabet.event(e).name,
                           states[rng.below(n)]);
          ++added;
        }
      }
    }
    Generator trimmed = g.accessible();
    if (added > 0 && trimmed.num_states() >= 2) return trimmed;
  }
  // Degenerate fallback: a one-loop plant.
  Generator g(alphabet, {prefix + "0"}, prefix + "0");
  g.add_transition(prefix + "0", alphabet.event(0).name, prefix + "0");
  return g;
}

Generator random_sub_recognizer(Rng& rng, const Generator& plant,
                                const InstanceParams& p) {
  if (plant.is_empty()) return plant;
  std::vector<char> keep(plant.num_states(), 0);
  keep[plant.initial()] = 1;
  for (int q = 0; q < plant.num_states(); ++q) {
    if (q != plant.initial()) keep[q] = rng.chance(p.spec_state_keep) ? 1 : 0;
  }
  Generator base = restrict_to_mask(plant, keep);
  if (base.is_empty()) return base;
  // Drop a fraction of the remaining transitions as well; refine_pair
  // re-normalizes arbitrary sub-recognizers downstream.
  Generator out(base.alphabet(), base.state_names(),
                base.state_name(base.initial()));
  for (int q = 0; q < base.num_states(); ++q) {
    for (int e = 0; e < base.alphabet().size(); ++e) {
      int t = base.target(q, e);
      if (t >= 0 && rng.chance(p.spec_trans_keep)) {
        out.add_transition(base.state_name(q), base.alphabet().event(e).name,
                           base.state_name(t));
      }
    }
  }
  return out.accessible();
}

}  // namespace

PairInstance random_pair(std::uint64_t seed, const InstanceParams& params) {
  Rng rng(seed * 2654435761u + 1);
  int n_events = std::max(2, 2 + rng.below(std::max(1, params.max_events - 1)));
  n_events = std::min(n_events, params.max_events);
  std::vector<std::string> names(kEventPool, kEventPool + n_events);
  Alphabet alphabet = random_flags(rng, names, params);
  PairInstance out;
  out.plant = random_plant(rng, alphabet, params, "s");
  out.spec = random_sub_recognizer(rng, out.plant, params);
  return out;
}

Generator random_sublanguage(std::uint64_t seed, const Generator& plant,
                             const InstanceParams& params) {
  Rng rng(seed * 2654435761u + 13);
  return random_sub_recognizer(rng, plant, params);
}

ModularRandomInstance random_modular(std::uint64_t seed,
                                     const InstanceParams& params) {
  Rng rng(seed * 2654435761u + 7);
  int n_shared = std::max(1, params.shared_events);
  int n_local1 = 1 + rng.below(2);
  int n_local2 = 1 + rng.below(2);
  std::vector<std::string> all(kEventPool,
                               kEventPool + n_shared + n_local1 + n_local2);
  ModularRandomInstance out;
  out.global = random_flags(rng, all, params);

  std::vector<std::string> a1(all.begin(), all.begin() + n_shared);
  a1.insert(a1.end(), all.begin() + n_shared, all.begin() + n_shared + n_local1);
  std::vector<std::string> a2(all.begin(), all.begin() + n_shared);
  a2.insert(a2.end(), all.begin() + n_shared + n_local1, all.end());

  out.g1 = random_plant(rng, out.global.restricted_to(a1), params, "p");
  out.g2 = random_plant(rng, out.global.restricted_to(a2), params, "q");
  Generator plant = sync_product({out.g1, out.g2});
  out.spec = random_sub_recognizer(rng, plant, params);
  return out;
}

}  // namespace supctl
