// checks.cpp
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

#include "supctl/checks.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <tuple>

#include "supctl/lang_ops.hpp"
#include "supctl/refine.hpp"

namespace supctl {

nlohmann::json Witness::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["w"] = w;
  if (w_prime) j["w_prime"] = *w_prime;
  if (event) j["event"] = *event;
  if (side) j["side"] = *side;
  return j;
}

namespace {

void require_same_events(const Generator& a, const Generator& b,
                         const char* what) {
  if (!a.alphabet().same_events(b.alphabet())) {
    throw InputError(std::string(what) + " requires a common event set");
  }
}

std::vector<std::string> validated_subset(const Alphabet& alphabet,
                                          const std::vector<std::string>& names,
                                          const char* what) {
  std::vector<std::string> out = names;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const std::string& n : out) {
    if (!alphabet.has(n)) {
      throw InputError(std::string(what) + ": event '" + n +
                       "' not in alphabet");
    }
  }
  return out;
}

void require_inclusion(const Generator& spec, const Generator& plant) {
  LeqResult leq = language_leq(spec, plant);
  if (!leq.holds) {
    throw InclusionError("specification is not included in the plant",
                         *leq.witness);
  }
}

}  // namespace

CheckResult controllability_inclusion(const Generator& spec,
                                      const Generator& plant,
                                      const std::vector<std::string>& au) {
  require_same_events(spec, plant, "controllability");
  std::vector<std::string> uncont =
      validated_subset(spec.alphabet(), au, "controllability");
  if (spec.is_empty() || plant.is_empty()) return std::nullopt;

  const Alphabet& alphabet = spec.alphabet();
  std::vector<bool> is_u(alphabet.size(), false);
  for (const std::string& n : uncont) is_u[alphabet.index(n)] = true;

  // BFS over live (spec, plant) pairs in length-lex order; the first
  // uncontrollable plant move missing from the spec is the minimal witness.
  struct Node {
    int k, l;
    Word w;
  };
  std::deque<Node> queue;
  std::map<std::pair<int, int>, bool> seen;
  queue.push_back({spec.initial(), plant.initial(), {}});
  seen[{spec.initial(), plant.initial()}] = true;
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    for (int e = 0; e < alphabet.size(); ++e) {
      int tk = spec.target(node.k, e);
      int tl = plant.target(node.l, e);
      if (is_u[e] && tl >= 0 && tk < 0) {
        return Witness{"controllability", node.w, std::nullopt,
                       alphabet.event(e).name, std::nullopt};
      }
      if (tk >= 0 && tl >= 0 && !seen[{tk, tl}]) {
        seen[{tk, tl}] = true;
        Word w = node.w;
        w.push_back(alphabet.event(e).name);
        queue.push_back({tk, tl, std::move(w)});
      }
    }
  }
  return std::nullopt;
}

CheckResult check_controllability(const Generator& spec, const Generator& plant,
                                  const std::vector<std::string>& au) {
  require_same_events(spec, plant, "controllability");
  require_inclusion(spec, plant);
  return controllability_inclusion(spec, plant, au);
}

namespace {

// Priority-queue search used by the O-equal pair verifiers. Orders
// configurations by (|w| + |w'|, w, w'), so the first violation reported is
// the shortest witness, lexicographically least among shortest.
template <typename State, typename ExpandFn, typename ViolationFn>
CheckResult pair_search(const State& start, ExpandFn expand,
                        ViolationFn violation) {
  using Key = std::tuple<std::size_t, Word, Word>;
  struct Item {
    Key key;
    State state;
    bool operator>(const Item& other) const { return key > other.key; }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  std::map<State, Key> best;
  Key key0{0, {}, {}};
  best[start] = key0;
  queue.push({key0, start});
  while (!queue.empty()) {
    Item item = queue.top();
    queue.pop();
    auto it = best.find(item.state);
    if (it != best.end() && it->second < item.key) continue;  // stale
    const auto& [len, w, wp] = item.key;
    if (CheckResult res = violation(item.state, w, wp)) return res;
    expand(item.state, w, wp,
           [&](const State& next, const Word& nw, const Word& nwp) {
             Key key{nw.size() + nwp.size(), nw, nwp};
             auto found = best.find(next);
             if (found == best.end() || key < found->second) {
               best[next] = key;
               queue.push({key, next});
             }
           });
  }
  return std::nullopt;
}

}  // namespace

CheckResult rel_obs_core(const Generator& spec, const Generator& ambient,
                         const Generator& plant,
                         const std::vector<std::string>& ao) {
  require_same_events(spec, plant, "relative observability");
  require_same_events(spec, ambient, "relative observability");
  std::vector<std::string> obs =
      validated_subset(spec.alphabet(), ao, "relative observability");
  if (spec.is_empty() || ambient.is_empty() || plant.is_empty()) {
    return std::nullopt;
  }

  const Alphabet& alphabet = spec.alphabet();
  std::vector<bool> is_obs(alphabet.size(), false);
  for (const std::string& n : obs) is_obs[alphabet.index(n)] = true;
  const int DEAD = -1;

  // w tracked in the spec recognizer; w' in ambient x plant, with a spec
  // tracker deciding w'a ∈ K. Reachable configurations are exactly the
  // string pairs with O(w) = O(w').
  using State = std::array<int, 4>;  // k1, c, l, k2(|DEAD)
  State start{spec.initial(), ambient.initial(), plant.initial(),
              spec.initial()};

  auto expand = [&](const State& s, const Word& w, const Word& wp, auto emit) {
    auto [k1, c, l, k2] = s;
    for (int e = 0; e < alphabet.size(); ++e) {
      const std::string& name = alphabet.event(e).name;
      int ck = spec.target(k1, e);
      int cc = ambient.target(c, ambient.alphabet().index(name));
      int cl = plant.target(l, plant.alphabet().index(name));
      int ck2 = k2 == DEAD ? DEAD : spec.target(k2, e);
      if (is_obs[e]) {
        if (ck >= 0 && cc >= 0 && cl >= 0) {
          Word nw = w, nwp = wp;
          nw.push_back(name);
          nwp.push_back(name);
          emit(State{ck, cc, cl, ck2}, nw, nwp);
        }
      } else {
        if (ck >= 0) {  // w alone
          Word nw = w;
          nw.push_back(name);
          emit(State{ck, c, l, k2}, nw, wp);
        }
        if (cc >= 0 && cl >= 0) {  // w' alone
          Word nwp = wp;
          nwp.push_back(name);
          emit(State{k1, cc, cl, ck2}, w, nwp);
        }
      }
    }
  };

  auto violation = [&](const State& s, const Word& w,
                       const Word& wp) -> CheckResult {
    auto [k1, c, l, k2] = s;
    (void)c;
    for (int e = 0; e < alphabet.size(); ++e) {
      const std::string& name = alphabet.event(e).name;
      int ck = spec.target(k1, e);
      int cl = plant.target(l, plant.alphabet().index(name));
      int ck2 = k2 == DEAD ? DEAD : spec.target(k2, e);
      if (ck >= 0 && cl >= 0 && ck2 == DEAD) {
        return Witness{"observability", w, wp, name, std::nullopt};
      }
    }
    return std::nullopt;
  };

  return pair_search(start, expand, violation);
}

CheckResult check_rel_observability(const Generator& spec,
                                    const Generator& ambient,
                                    const Generator& plant,
                                    const std::vector<std::string>& ao) {
  require_same_events(spec, plant, "relative observability");
  require_same_events(spec, ambient, "relative observability");
  require_inclusion(spec, plant);
  return rel_obs_core(spec, ambient, plant, ao);
}

CheckResult check_observability(const Generator& spec, const Generator& plant,
                                const std::vector<std::string>& ao) {
  return check_rel_observability(spec, spec, plant, ao);
}

CheckResult check_normality(const Generator& spec, const Generator& plant,
                            const std::vector<std::string>& ao) {
  require_same_events(spec, plant, "normality");
  std::vector<std::string> obs =
      validated_subset(spec.alphabet(), ao, "normality");
  require_inclusion(spec, plant);

  Generator lifted =
      inverse_projection(natural_projection(spec, obs), spec.alphabet());
  Generator closure_in_plant = intersect(lifted, plant);
  LeqResult leq = language_leq(closure_in_plant, spec);
  if (leq.holds) return std::nullopt;
  return Witness{"normality", *leq.witness, std::nullopt, std::nullopt,
                 std::nullopt};
}

CheckResult normality_pair(const Generator& spec, const Generator& plant,
                           const std::vector<std::string>& ao) {
  require_same_events(spec, plant, "normality");
  std::vector<std::string> obs =
      validated_subset(spec.alphabet(), ao, "normality");
  if (spec.is_empty() || plant.is_empty()) return std::nullopt;

  const Alphabet& alphabet = spec.alphabet();
  std::vector<bool> is_obs(alphabet.size(), false);
  for (const std::string& n : obs) is_obs[alphabet.index(n)] = true;
  const int DEAD = -1;

  using State = std::array<int, 3>;  // k (for s), l, k2(|DEAD) (for t)
  State start{spec.initial(), plant.initial(), spec.initial()};

  auto expand = [&](const State& s, const Word& w, const Word& wp, auto emit) {
    auto [k, l, k2] = s;
    for (int e = 0; e < alphabet.size(); ++e) {
      const std::string& name = alphabet.event(e).name;
      int ck = spec.target(k, e);
      int cl = plant.target(l, plant.alphabet().index(name));
      int ck2 = k2 == DEAD ? DEAD : spec.target(k2, e);
      if (is_obs[e]) {
        if (ck >= 0 && cl >= 0) {
          Word nw = w, nwp = wp;
          nw.push_back(name);
          nwp.push_back(name);
          emit(State{ck, cl, ck2}, nw, nwp);
        }
      } else {
        if (ck >= 0) {
          Word nw = w;
          nw.push_back(name);
          emit(State{ck, l, k2}, nw, wp);
        }
        if (cl >= 0) {
          Word nwp = wp;
          nwp.push_back(name);
          emit(State{k, cl, ck2}, w, nwp);
        }
      }
    }
  };

  auto violation = [&](const State& s, const Word& w,
                       const Word& wp) -> CheckResult {
    if (s[2] == DEAD) {
      return Witness{"normality", w, wp, std::nullopt, std::nullopt};
    }
    return std::nullopt;
  };

  return pair_search(start, expand, violation);
}

}  // namespace supctl
