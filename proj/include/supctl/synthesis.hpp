// synthesis.hpp
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

#ifndef SUPCTL_SYNTHESIS_HPP_
#define SUPCTL_SYNTHESIS_HPP_

#include "supctl/generator.hpp"

namespace supctl {

/// Selects one of the supremal sublanguage operators. R_K fixes the ambient
/// language of relative observability at the original specification, R_L at
/// the plant; the ambient never shrinks with the iterate.
enum class Flavor { C, N, R_K, R_L, CN, CR };

const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

/// Supremal controllable sublanguage of K w.r.t. L and Au: the subautomaton
/// of the refined pair without the states that can reach L \ K via
/// uncontrollable strings. Exact.
Generator sup_controllable(const Generator& spec, const Generator& plant,
                           const std::vector<std::string>& au);

/// Supremal normal sublanguage of K w.r.t. L and Ao:
///   { s ∈ K : every prefix t and every t' ∈ L with O(t')=O(t) has t' ∈ K }.
/// Computed in one pass on the refined pair refined again by the observer
/// of the plant. Exact.
Generator sup_normal(const Generator& spec, const Generator& plant,
                     const std::vector<std::string>& ao);

/// Supremal C-observable sublanguage of K w.r.t. L and Ao for a fixed
/// ambient C. Iterated fixpoint: each round finds all violating
/// continuations wa via the observation-determinized verifier and removes
/// exactly those strings (with their extensions), until no violation
/// remains. Every removal is forced, so the fixpoint is the supremal.
Generator sup_rel_observable(const Generator& spec, const Generator& ambient,
                             const Generator& plant,
                             const std::vector<std::string>& ao);

/// The observation-determinized verifier behind one fixpoint round: a
/// recognizer of K whose states pair the refined spec position of w with
/// the set of (ambient, plant) positions of every w' with O(w') = O(w).
/// Violating continuations of the current spec are decidable per state and
/// event, which the oracle exploits for its candidate family.
Generator relobs_verifier(const Generator& spec, const Generator& ambient,
                          const Generator& plant,
                          const std::vector<std::string>& ao);

/// Supremal controllable-and-normal (CN) or controllable-and-K-observable
/// (CR, ambient fixed at the original spec) sublanguage: alternates the two
/// single-property operators until the language stabilizes.
Generator sup_combined(const Generator& spec, const Generator& plant,
                       const std::vector<std::string>& au,
                       const std::vector<std::string>& ao, Flavor flavor);

/// Dispatch on flavor; au/ao are the uncontrollable and observable subsets.
Generator synthesize(Flavor flavor, const Generator& spec,
                     const Generator& plant,
                     const std::vector<std::string>& au,
                     const std::vector<std::string>& ao);

/// synthesize() with au/ao taken from the spec's alphabet flags.
Generator synthesize(Flavor flavor, const Generator& spec,
                     const Generator& plant);

}  // namespace supctl

#endif  // SUPCTL_SYNTHESIS_HPP_
