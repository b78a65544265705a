// supervisor.hpp
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

#ifndef SUPCTL_SUPERVISOR_HPP_
#define SUPCTL_SUPERVISOR_HPP_

#include "supctl/generator.hpp"

#include "json.hpp"

namespace supctl {

/// Feedback supervisor realized from a synthesized closed-loop language:
/// an observer over the observable events plus one control pattern per
/// observer state. Every pattern contains all uncontrollable events;
/// observations outside the target's observation language get the default
/// pattern (uncontrollable events only).
struct Supervisor {
  Alphabet alphabet;                 // full event set with flags
  Generator observer;                // over the observable subset
  std::vector<std::vector<std::string>> patterns;  // per observer state
  std::vector<std::string> default_pattern;

  nlohmann::json to_json() const;
  static Supervisor from_json(const nlohmann::json& j);
};

/// Builds the supervisor for a nonempty target Ksyn ⊆ L:
///   S(O(w)) = Au ∪ { a ∈ Ac : ∃w' ∈ Ksyn, O(w')=O(w), w'a ∈ Ksyn }.
/// Errors: empty target (InputError), Ksyn ⊄ L (InclusionError).
Supervisor induce_supervisor(const Generator& target, const Generator& plant,
                             const std::vector<std::string>& ac,
                             const std::vector<std::string>& ao);

/// Closed-loop language L(S/G): wa ∈ L(S/G) iff wa ∈ L(G) and a ∈ S(O(w)).
/// closed_loop(S, EMPTY) = EMPTY.
Generator closed_loop(const Supervisor& sup, const Generator& plant);

}  // namespace supctl

#endif  // SUPCTL_SUPERVISOR_HPP_
