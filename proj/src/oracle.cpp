// oracle.cpp
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

#include "supctl/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "internal.hpp"
#include "supctl/checks.hpp"
#include "supctl/lang_ops.hpp"
#include "supctl/refine.hpp"

namespace supctl {

namespace {

constexpr std::size_t kSearchCap = 200000;  // visited candidates per call

// States visited by the run of `w` in `g`, including start and endpoint.
std::vector<int> path_states(const Generator& g, const Word& w) {
  std::vector<int> out;
  int q = g.initial();
  out.push_back(q);
  for (const std::string& a : w) {
    q = g.target(q, g.alphabet().index(a));
    if (q < 0) break;
    out.push_back(q);
  }
  return out;
}

std::vector<int> to_arena_ids(const Generator& arena,
                              const Generator& candidate,
                              const std::vector<int>& candidate_states) {
  std::vector<int> out;
  out.reserve(candidate_states.size());
  for (int q : candidate_states) {
    int a = arena.state_index(candidate.state_name(q));
    if (a < 0) throw InternalError("oracle: candidate state not in arena");
    out.push_back(a);
  }
  return out;
}

struct BranchSet {
  bool satisfied = false;
  std::vector<int> removable;  // any satisfying submask drops one of these
};

// Complete witness-guided search over state masks of the arena: at every
// violated candidate, any satisfying submask must drop a state on the
// witness path, so following all drops visits every maximal satisfying
// mask. Satisfied candidates are not branched further (their submasks only
// recognize sublanguages).
template <typename ProbeFn>
std::vector<Generator> maximal_satisfying_masks(const Generator& arena,
                                                ProbeFn probe) {
  std::vector<Generator> results;
  if (arena.is_empty()) return results;

  const int n = arena.num_states();
  std::vector<std::vector<char>> stack;
  std::set<std::vector<char>> memo;
  stack.emplace_back(n, 1);
  std::size_t visited = 0;
  while (!stack.empty()) {
    std::vector<char> mask = std::move(stack.back());
    stack.pop_back();
    if (!memo.insert(mask).second) continue;
    if (++visited > kSearchCap) {
      throw BoundError("oracle mask search exceeded its exploration cap");
    }
    Generator candidate = restrict_to_mask(arena, mask);
    BranchSet branch = probe(candidate);
    if (branch.satisfied) {
      if (!candidate.is_empty()) results.push_back(std::move(candidate));
      continue;
    }
    for (int s : branch.removable) {
      std::vector<char> next = mask;
      next[s] = 0;
      stack.push_back(std::move(next));
    }
  }
  return results;
}

std::vector<Generator> maximal_elements(std::vector<Generator> langs) {
  std::vector<Generator> out;
  for (std::size_t i = 0; i < langs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < langs.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = language_leq(langs[i], langs[j]).holds;
      bool ge = language_leq(langs[j], langs[i]).holds;
      if (le && !ge) dominated = true;
      if (le && ge && j < i) dominated = true;  // language-equal: keep first
    }
    if (!dominated) out.push_back(langs[i]);
  }
  return out;
}

Generator union_all(const std::vector<Generator>& langs,
                    const Alphabet& alphabet) {
  if (langs.empty()) return Generator::empty(alphabet);
  std::vector<Generator> maxima = maximal_elements(langs);
  Generator out = maxima.front();
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    out = union_language(out, maxima[i]);
  }
  return out.canonical();
}

// Supremal controllable sublanguage: the classical result makes it a state
// mask of the plain refined pair, so mask search on that arena is complete.
Generator oracle_controllable(const Generator& spec, const Generator& plant,
                              const std::vector<std::string>& au) {
  RefinedPair r = refine(spec, plant);
  Generator arena = r.spec_part();
  auto probe = [&](const Generator& candidate) {
    BranchSet out;
    if (candidate.is_empty()) {
      out.satisfied = true;
      return out;
    }
    if (CheckResult v = controllability_inclusion(candidate, plant, au)) {
      out.removable =
          to_arena_ids(arena, candidate, path_states(candidate, v->w));
      return out;
    }
    out.satisfied = true;
    return out;
  };
  std::vector<Generator> satisfying = maximal_satisfying_masks(arena, probe);
  return union_all(satisfying, plant.alphabet());
}

// Observation-refined arena for normality: the spec part of refine(K, L)
// split by the observer cell of the plant. The supremal normal sublanguage
// is a single state mask of this product (a cell reaching outside the spec
// region disqualifies its strings), so mask search here is complete; the
// plain refined pair is not fine enough because its states conflate strings
// with different observation histories.
Generator normality_arena(const Generator& spec, const Generator& plant,
                          const std::vector<std::string>& ao) {
  RefinedPair r = refine(spec, plant);
  if (r.product.is_empty() || !r.in_spec[r.product.initial()]) {
    return Generator::empty(plant.alphabet());
  }
  const Generator& g = r.product;
  std::vector<bool> is_obs(g.alphabet().size(), false);
  for (const std::string& n : ao) {
    int e = g.alphabet().index(n);
    if (e < 0) throw InputError("oracle: event '" + n + "' not in alphabet");
    is_obs[e] = true;
  }
  ObserverResult obs = observer_with_subsets(g, ao);

  detail::NameMint mint;
  std::map<std::pair<int, int>, int> ids;
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
  discover({g.initial(), obs.observer.initial()});
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
      edges.push_back({static_cast<int>(cur), e, discover({tp, tx})});
    }
  }
  Generator arena(g.alphabet(), names, names[0]);
  for (const Edge& edge : edges) {
    arena.add_transition(names[edge.from], g.alphabet().event(edge.event).name,
                         names[edge.to]);
  }
  return arena.accessible();
}

Generator oracle_normal(const Generator& spec, const Generator& plant,
                        const std::vector<std::string>& ao) {
  Generator arena = normality_arena(spec, plant, ao);
  auto probe = [&](const Generator& candidate) {
    BranchSet out;
    if (candidate.is_empty()) {
      out.satisfied = true;
      return out;
    }
    // The pair witness names a spec string s whose O-partner escapes the
    // candidate; any satisfying submask must drop a state on s's path.
    if (CheckResult v = normality_pair(candidate, plant, ao)) {
      out.removable =
          to_arena_ids(arena, candidate, path_states(candidate, v->w));
      return out;
    }
    out.satisfied = true;
    return out;
  };
  std::vector<Generator> satisfying = maximal_satisfying_masks(arena, probe);
  return union_all(satisfying, plant.alphabet());
}

// For relative observability no fixed product admits the supremal as a
// state mask: a verifier state revisited by both a kept and a removed
// string (a self-loop) cannot be split by state removal. Candidates are
// therefore sub-DFAs of the observation-determinized verifier obtained by
// edge removal, and the verifier is iteratively rebuilt on top of itself
// until the union of maximal satisfying candidates stabilizes.
std::vector<Generator> maximal_satisfying_edges(
    const Generator& arena, const Generator& ambient, const Generator& plant,
    const std::vector<std::string>& ao) {
  std::vector<Generator> results;
  if (arena.is_empty()) return results;

  const int n = arena.num_states();
  const int width = arena.alphabet().size();
  auto build = [&](const std::vector<char>& mask) {
    Generator g(arena.alphabet(), arena.state_names(),
                arena.state_name(arena.initial()));
    for (int q = 0; q < n; ++q) {
      for (int e = 0; e < width; ++e) {
        int t = arena.target(q, e);
        if (t >= 0 && mask[q * width + e]) {
          g.add_transition(arena.state_name(q), arena.alphabet().event(e).name,
                           arena.state_name(t));
        }
      }
    }
    return g.accessible();
  };
  auto path_edges = [&](const Word& word) {
    std::vector<int> out;
    int q = arena.initial();
    for (const std::string& a : word) {
      int e = arena.alphabet().index(a);
      out.push_back(q * width + e);
      q = arena.target(q, e);
      if (q < 0) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  std::vector<char> full(static_cast<std::size_t>(n) * width, 1);
  std::vector<std::vector<char>> stack{full};
  std::set<std::vector<char>> memo;
  std::size_t visited = 0;
  while (!stack.empty()) {
    std::vector<char> mask = std::move(stack.back());
    stack.pop_back();
    if (!memo.insert(mask).second) continue;
    if (++visited > kSearchCap) {
      throw BoundError("oracle edge search exceeded its exploration cap");
    }
    Generator candidate = build(mask);
    CheckResult v = rel_obs_core(candidate, ambient, plant, ao);
    if (!v) {
      results.push_back(std::move(candidate));
      continue;
    }
    Word wa = v->w;
    wa.push_back(*v->event);
    for (int edge : path_edges(wa)) {
      std::vector<char> next = mask;
      next[edge] = 0;
      stack.push_back(std::move(next));
    }
  }
  return results;
}

Generator oracle_relobs(const Generator& spec, const Generator& ambient,
                        const Generator& plant,
                        const std::vector<std::string>& ao) {
  if (spec.is_empty() || plant.is_empty()) {
    return Generator::empty(plant.alphabet());
  }
  Generator arena = relobs_verifier(spec, ambient, plant, ao);
  Generator best = Generator::empty(plant.alphabet());
  for (int level = 0; level < 4; ++level) {
    std::vector<Generator> satisfying =
        maximal_satisfying_edges(arena, ambient, plant, ao);
    Generator u = union_all(satisfying, plant.alphabet());
    if (!best.is_empty() && language_equal(u, best)) return best;
    best = std::move(u);
    if (best.is_empty()) return best;
    arena = relobs_verifier(arena, ambient, plant, ao);
  }
  return best;
}

}  // namespace

Generator brute_supremal(const Generator& spec, const Generator& plant,
                         Flavor flavor, const OracleOptions& opts) {
  if (!spec.alphabet().same_events(plant.alphabet())) {
    throw InputError("brute_supremal requires a common event set");
  }
  RefinedPair r = refine(spec, plant);
  if (r.spec_state_count() > opts.state_bound) {
    throw BoundError("refined pair has " +
                     std::to_string(r.spec_state_count()) +
                     " spec states, above the oracle bound of " +
                     std::to_string(opts.state_bound));
  }
  std::vector<std::string> au = plant.alphabet().uncontrollable_names();
  std::vector<std::string> ao = plant.alphabet().observable_names();

  switch (flavor) {
    case Flavor::C:
      return oracle_controllable(spec, plant, au);
    case Flavor::N:
      return oracle_normal(spec, plant, ao);
    case Flavor::R_K:
      return oracle_relobs(spec, spec, plant, ao);
    case Flavor::R_L:
      return oracle_relobs(spec, plant, plant, ao);
    case Flavor::CN:
    case Flavor::CR: {
      // Alternate the two certified single-property oracles; the limit is
      // the largest sublanguage with both properties.
      Generator cur = spec.canonical();
      for (int round = 0; round < 64; ++round) {
        if (cur.is_empty()) return cur;
        Generator a = oracle_controllable(cur, plant, au);
        Generator b = flavor == Flavor::CN
                          ? oracle_normal(a, plant, ao)
                          : oracle_relobs(a, spec, plant, ao);
        if (language_equal(b, cur)) return b;
        cur = std::move(b);
      }
      throw InternalError("combined oracle did not converge");
    }
  }
  throw InputError("unknown flavor");
}

std::vector<Generator> brute_maximal_observable(const Generator& spec,
                                                const Generator& plant,
                                                bool with_controllability,
                                                int state_bound) {
  if (!spec.alphabet().same_events(plant.alphabet())) {
    throw InputError("brute_maximal_observable requires a common event set");
  }
  RefinedPair r = refine(spec, plant);
  if (r.spec_state_count() > state_bound) {
    throw BoundError("refined pair has " +
                     std::to_string(r.spec_state_count()) +
                     " spec states, above the oracle bound of " +
                     std::to_string(state_bound));
  }
  std::vector<std::string> au = plant.alphabet().uncontrollable_names();
  std::vector<std::string> ao = plant.alphabet().observable_names();
  Generator arena = r.spec_part();

  auto probe = [&](const Generator& candidate) {
    BranchSet out;
    if (candidate.is_empty()) {
      out.satisfied = true;
      return out;
    }
    if (with_controllability) {
      if (CheckResult v = controllability_inclusion(candidate, plant, au)) {
        out.removable =
            to_arena_ids(arena, candidate, path_states(candidate, v->w));
        return out;
      }
    }
    // Plain observability: the ambient is the candidate itself, so a
    // violation can also be broken by dropping the partner w'.
    if (CheckResult v = rel_obs_core(candidate, candidate, plant, ao)) {
      Word wa = v->w;
      wa.push_back(*v->event);
      std::vector<int> ids = path_states(candidate, wa);
      std::vector<int> other = path_states(candidate, *v->w_prime);
      ids.insert(ids.end(), other.begin(), other.end());
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      out.removable = to_arena_ids(arena, candidate, ids);
      return out;
    }
    out.satisfied = true;
    return out;
  };

  std::vector<Generator> satisfying = maximal_satisfying_masks(arena, probe);
  if (satisfying.empty()) {
    return {Generator::empty(plant.alphabet())};
  }
  std::vector<Generator> maxima = maximal_elements(std::move(satisfying));
  for (Generator& g : maxima) g = g.canonical();
  std::sort(maxima.begin(), maxima.end(),
            [](const Generator& a, const Generator& b) {
              return a.serialize() < b.serialize();
            });
  return maxima;
}

std::set<Word> bounded_string_supremal(const Generator& spec,
                                       const Generator& plant, Flavor flavor,
                                       std::size_t length_bound) {
  if (!spec.alphabet().same_events(plant.alphabet())) {
    throw InputError("bounded_string_supremal requires a common event set");
  }
  StringSet plant_slice = plant.enumerate_language(length_bound);
  if (plant_slice.strings.size() > 20000) {
    throw BoundError("bounded string oracle: plant slice too large");
  }
  StringSet spec_slice = spec.enumerate_language(length_bound);

  std::vector<std::string> obs_names = plant.alphabet().observable_names();
  Projection obs(plant.alphabet(), obs_names);
  std::vector<bool> is_u(plant.alphabet().size(), false);
  for (const std::string& n : plant.alphabet().uncontrollable_names()) {
    is_u[plant.alphabet().index(n)] = true;
  }

  std::set<Word> current = spec_slice.strings;
  const std::set<Word>& plant_set = plant_slice.strings;
  const std::set<Word> ambient_k = spec_slice.strings;  // frozen for r/cr

  auto remove_cone = [&](const Word& root) {
    for (auto it = current.begin(); it != current.end();) {
      const Word& s = *it;
      bool has_prefix = s.size() >= root.size() &&
                        std::equal(root.begin(), root.end(), s.begin());
      it = has_prefix ? current.erase(it) : ++it;
    }
  };

  bool use_ctrl = flavor == Flavor::C || flavor == Flavor::CN ||
                  flavor == Flavor::CR;
  bool use_norm = flavor == Flavor::N || flavor == Flavor::CN;
  bool use_relobs = flavor == Flavor::R_K || flavor == Flavor::R_L ||
                    flavor == Flavor::CR;

  bool changed = true;
  while (changed) {
    changed = false;
    // Controllability: w in X, u uncontrollable, wu in L, wu not in X.
    if (use_ctrl) {
      std::vector<Word> to_remove;
      for (const Word& w : current) {
        for (int e = 0; e < plant.alphabet().size(); ++e) {
          if (!is_u[e]) continue;
          Word wu = w;
          wu.push_back(plant.alphabet().event(e).name);
          if (plant_set.count(wu) && !current.count(wu)) {
            to_remove.push_back(w);
            break;
          }
        }
      }
      for (const Word& w : to_remove) {
        if (current.count(w)) {
          remove_cone(w);
          changed = true;
        }
      }
    }
    // Observation-based removals need partners grouped by projection.
    auto obs_groups = [&](const std::set<Word>& universe) {
      std::map<Word, std::vector<Word>> groups;
      for (const Word& s : universe) groups[obs.apply(s)].push_back(s);
      return groups;
    };
    if (use_norm) {
      std::map<Word, std::vector<Word>> plant_groups = obs_groups(plant_set);
      std::vector<Word> to_remove;
      for (const Word& s : current) {
        for (const Word& t : plant_groups[obs.apply(s)]) {
          if (!current.count(t)) {
            to_remove.push_back(s);
            break;
          }
        }
      }
      for (const Word& s : to_remove) {
        if (current.count(s)) {
          remove_cone(s);
          changed = true;
        }
      }
    }
    if (use_relobs) {
      const std::set<Word>& ambient =
          flavor == Flavor::R_L ? plant_set : ambient_k;
      std::map<Word, std::vector<Word>> ambient_groups = obs_groups(ambient);
      std::vector<Word> to_remove;
      for (const Word& wa : current) {
        if (wa.empty()) continue;
        Word w(wa.begin(), wa.end() - 1);
        const std::string& a = wa.back();
        for (const Word& wp : ambient_groups[obs.apply(w)]) {
          Word wpa = wp;
          wpa.push_back(a);
          if (plant_set.count(wpa) && !current.count(wpa)) {
            to_remove.push_back(wa);
            break;
          }
        }
      }
      for (const Word& wa : to_remove) {
        if (current.count(wa)) {
          remove_cone(wa);
          changed = true;
        }
      }
    }
  }
  return current;
}

}  // namespace supctl
