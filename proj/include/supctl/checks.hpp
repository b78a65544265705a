// checks.hpp
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

#ifndef SUPCTL_CHECKS_HPP_
#define SUPCTL_CHECKS_HPP_

#include <optional>
#include <string>

#include "supctl/generator.hpp"

#include "json.hpp"

namespace supctl {

/// Counterexample record returned by every failed property check.
/// Replaying it against the definition re-demonstrates the violation.
struct Witness {
  std::string kind;  // controllability | observability | normality
  Word w;
  std::optional<Word> w_prime;
  std::optional<std::string> event;
  std::optional<int> side;  // for mutual conditions: which (i,j) order failed

  nlohmann::json to_json() const;
};

/// nullopt means the property holds.
using CheckResult = std::optional<Witness>;

/// K controllable w.r.t. L and Au:  K Au ∩ L ⊆ K.
/// pre: Au ⊆ alphabet, K ⊆ L (InclusionError otherwise).
CheckResult check_controllability(const Generator& spec, const Generator& plant,
                                  const std::vector<std::string>& au);

/// K C-observable w.r.t. L and Ao:
///   ∀w,w' with O(w)=O(w'): wa ∈ K ∧ w' ∈ C ∧ w'a ∈ L ⇒ w'a ∈ K.
/// pre: K ⊆ L; C is any language over the same event set.
CheckResult check_rel_observability(const Generator& spec,
                                    const Generator& ambient,
                                    const Generator& plant,
                                    const std::vector<std::string>& ao);

/// Plain observability: C = K.
CheckResult check_observability(const Generator& spec, const Generator& plant,
                                const std::vector<std::string>& ao);

/// K normal w.r.t. L and Ao:  O^{-1}O(K) ∩ L ⊆ K.  pre: K ⊆ L.
CheckResult check_normality(const Generator& spec, const Generator& plant,
                            const std::vector<std::string>& ao);

// Inclusion-shaped cores without the K ⊆ L precondition; the mutual
// condition checkers instantiate these with lifted languages that need not
// be nested.

/// K Au ∩ L ⊆ K, exactly; witness (w, u) on failure.
CheckResult controllability_inclusion(const Generator& spec,
                                      const Generator& plant,
                                      const std::vector<std::string>& au);

/// The quantified relative-observability formula for arbitrary (K, C, L).
CheckResult rel_obs_core(const Generator& spec, const Generator& ambient,
                         const Generator& plant,
                         const std::vector<std::string>& ao);

/// Normality violation as an O-equal pair: s ∈ K, t ∈ L, O(s)=O(t), t ∉ K.
/// Returns Witness{w = s, w_prime = t} minimized by total length.
CheckResult normality_pair(const Generator& spec, const Generator& plant,
                           const std::vector<std::string>& ao);

}  // namespace supctl

#endif  // SUPCTL_CHECKS_HPP_
