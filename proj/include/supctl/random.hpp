// random.hpp
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

#ifndef SUPCTL_RANDOM_HPP_
#define SUPCTL_RANDOM_HPP_

#include <cstdint>

#include "supctl/generator.hpp"

namespace supctl {

/// Knobs for seeded instance generation. Identical (seed, params) pairs
/// produce identical instances.
struct InstanceParams {
  int max_states = 5;
  int max_events = 4;
  double unobs_fraction = 0.3;
  double uncont_fraction = 0.3;
  int min_unobs = 1;
  int min_uncont = 1;
  double transition_density = 0.45;
  double spec_state_keep = 0.85;
  double spec_trans_keep = 0.8;
  bool modular = false;
  int shared_events = 1;  // modular instances: size of A'_1 ∩ A'_2
};

struct PairInstance {
  Generator spec, plant;  // spec ⊆ plant by construction
};

struct ModularRandomInstance {
  Generator g1, g2;  // local plants over overlapping alphabets
  Generator spec;    // sub-recognizer of G1 || G2, over the global alphabet
  Alphabet global;
};

PairInstance random_pair(std::uint64_t seed, const InstanceParams& params = {});

/// Random sub-recognizer of the given plant (subset of states plus a subset
/// of the surviving transitions), trimmed; always a sublanguage.
Generator random_sublanguage(std::uint64_t seed, const Generator& plant,
                             const InstanceParams& params = {});

ModularRandomInstance random_modular(std::uint64_t seed,
                                     const InstanceParams& params = {});

}  // namespace supctl

#endif  // SUPCTL_RANDOM_HPP_
