// refine.hpp
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

#ifndef SUPCTL_REFINE_HPP_
#define SUPCTL_REFINE_HPP_

#include <utility>
#include <vector>

#include "supctl/generator.hpp"

namespace supctl {

/// Product normalization of recognizers of K ⊆ L into subautomaton form.
/// `product` generates L; the states with in_spec set generate exactly K and
/// once a run leaves the in_spec region it never re-enters, so membership of
/// a string in K is read off the state its run ends in.
struct RefinedPair {
  Generator product;          // generates L
  std::vector<char> in_spec;  // per product state

  int spec_state_count() const;
  /// The subautomaton restricted to in_spec states, trimmed accessible.
  Generator spec_part() const;
};

/// Normalizes recognizers of K and L with L(K-rec) ⊆ L(L-rec) (checked;
/// InclusionError carries a shortest witness otherwise). Both must share an
/// event set.
RefinedPair refine(const Generator& spec, const Generator& plant);

/// The spec-facing form: (H, G) with H a literal subautomaton of G,
/// L(H) = K and L(G) = L.
std::pair<Generator, Generator> refine_pair(const Generator& spec,
                                            const Generator& plant);

/// Subautomaton of `g` induced by the kept states, trimmed accessible;
/// EMPTY when the initial state is dropped.
Generator restrict_to_mask(const Generator& g, const std::vector<char>& keep);

}  // namespace supctl

#endif  // SUPCTL_REFINE_HPP_
