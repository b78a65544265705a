// oracle.hpp
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

#ifndef SUPCTL_ORACLE_HPP_
#define SUPCTL_ORACLE_HPP_

#include <set>

#include "supctl/generator.hpp"
#include "supctl/synthesis.hpp"

namespace supctl {

struct OracleOptions {
  /// Bound on the refined pair's spec-side state count (BoundError beyond).
  int state_bound = 16;
};

/// Independent ground truth for the supremal operators: the union of all
/// property-satisfying subautomaton languages of the observation-refined
/// pair (plus the empty language). Candidates are explored by complete
/// witness-guided branching over state-removal: every violation forces any
/// satisfying submask to drop a state on the witness path, so all maximal
/// satisfying masks are visited. For union-closed properties the union
/// equals the supremal sublanguage.
Generator brute_supremal(const Generator& spec, const Generator& plant,
                         Flavor flavor, const OracleOptions& opts = {});

/// The ⊆-maximal elements among observable (and controllable, when flagged)
/// subautomaton languages of the refined pair; not unique in general.
std::vector<Generator> brute_maximal_observable(const Generator& spec,
                                                const Generator& plant,
                                                bool with_controllability,
                                                int state_bound = 12);

/// Bounded string-level removal fixpoint: all strings of the supremal
/// sublanguage up to the bound, computed on the enumerated slice of L with
/// no automaton constructions. Missing long observation partners can only
/// make the result larger, so the true supremal's slice is always included;
/// use as a one-way soundness check (synthesized ⊆ this).
std::set<Word> bounded_string_supremal(const Generator& spec,
                                       const Generator& plant, Flavor flavor,
                                       std::size_t length_bound);

}  // namespace supctl

#endif  // SUPCTL_ORACLE_HPP_
