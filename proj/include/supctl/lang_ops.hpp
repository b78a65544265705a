// lang_ops.hpp
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

#ifndef SUPCTL_LANG_OPS_HPP_
#define SUPCTL_LANG_OPS_HPP_

#include <optional>
#include <vector>

#include "supctl/generator.hpp"

namespace supctl {

/// Synchronous product over the union alphabet: L = ∩ P_i^{-1}(L_i).
/// Attribute flags of shared events must agree (ConsistencyError).
/// The result is accessible and deterministic; state names are the
/// '|'-joined component names.
Generator sync_product(const std::vector<Generator>& gs);

/// Observer: deterministic generator of P(L(G)) for the projection onto
/// target_events (subset construction over moves outside the target).
/// State names are '{...}' subsets of G's state names.
Generator natural_projection(const Generator& g,
                             const std::vector<std::string>& target_events);

/// Observer plus, per observer state, the subset of G-states it stands for.
struct ObserverResult {
  Generator observer;
  std::vector<std::vector<int>> subsets;  // per observer state, sorted G-state ids
};
ObserverResult observer_with_subsets(const Generator& g,
                                     const std::vector<std::string>& target_events);

/// P^{-1}(L(G)) for the projection full -> G's events: structurally G plus a
/// self-loop at every state for every event of full \ G's events. Flags of
/// shared events must agree (ConsistencyError).
Generator inverse_projection(const Generator& g, const Alphabet& full);

struct LeqResult {
  bool holds = false;
  /// On failure: the shortest, lexicographically least string in
  /// L(G1) \ L(G2).
  std::optional<Word> witness;
};

/// Exact language inclusion between same-event-set generators, decided by
/// synchronized traversal of the deterministic pair graph.
LeqResult language_leq(const Generator& g1, const Generator& g2);

bool language_equal(const Generator& g1, const Generator& g2);

/// Same-alphabet intersection (the synchronous product of equal alphabets).
Generator intersect(const Generator& g1, const Generator& g2);

/// Union of two same-event-set prefix-closed languages (completed-pair
/// product).
Generator union_language(const Generator& g1, const Generator& g2);

/// O^{-1}O(L(G)) over G's own alphabet, with O the projection onto the
/// alphabet's observable events.
Generator observation_closure(const Generator& g);

/// Same language viewed over a larger event universe: no transitions are
/// added for the new events. Flags of shared events must agree.
Generator widen_alphabet(const Generator& g, const Alphabet& full);

}  // namespace supctl

#endif  // SUPCTL_LANG_OPS_HPP_
