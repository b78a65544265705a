// coordination.hpp
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

#ifndef SUPCTL_COORDINATION_HPP_
#define SUPCTL_COORDINATION_HPP_

#include <map>
#include <optional>

#include "supctl/checks.hpp"
#include "supctl/generator.hpp"
#include "supctl/synthesis.hpp"

#include "json.hpp"

namespace supctl {

struct DecompResult {
  bool decomposable = false;
  std::optional<Word> witness;  // string in P1(K) || P2(K) but not K
};

/// K = P1(K) || P2(K) for P_i onto A_i ∪ A_k? Exact. pre: A1∩A2 ⊆ Ak ⊆ A1∪A2.
DecompResult check_cond_decomposable(const Generator& spec,
                                     const std::vector<std::string>& a1,
                                     const std::vector<std::string>& a2,
                                     const std::vector<std::string>& ak);

/// Smallest-effort greedy extension of A1∩A2 until K becomes conditionally
/// decomposable; deterministic for fixed inputs; Ak = A1∪A2 always succeeds.
std::vector<std::string> extend_coordinator_alphabet(
    const Generator& spec, const std::vector<std::string>& a1,
    const std::vector<std::string>& a2);

/// Coordinator G'_k = P_k(G'_1) || P_k(G'_2); asserts coordinator
/// neutrality L(G'_1 || G'_2 || G'_k) = L(G'_1 || G'_2) exactly.
Generator build_coordinator(const Generator& g1, const Generator& g2,
                            const std::vector<std::string>& ak);

/// Coordinator-composed modular control problem: local plants
/// G_i = G'_i || G'_k over A_i = A'_i ∪ A'_k, global spec K.
struct CoordinationSetup {
  Generator g1_orig, g2_orig;
  Generator coordinator;
  std::vector<std::string> ak;
  Generator g1, g2;  // composed local plants
  Generator spec;    // over the global alphabet, spec ⊆ L(G'_1||G'_2)
  Generator plant;   // L(G'_1||G'_2)
  Alphabet global;
  bool spec_intersected_with_plant = false;
};

/// Runs Algorithm-1 style setup: merge alphabets, intersect the spec with
/// the plant if needed, extend the coordinator alphabet (unless given) and
/// build the coordinator. A user-supplied Ak that leaves K undecomposable is
/// an input error.
CoordinationSetup make_setup(const Generator& g1, const Generator& g2,
                             const Generator& spec,
                             std::optional<std::vector<std::string>> ak);

/// flavor(K, L) with L = L(G'_1 || G'_2) and global attribute sets.
Generator run_monolithic(const CoordinationSetup& setup, Flavor flavor);

struct CoordinationResult {
  Generator k1_up, k2_up;  // local syntheses of P_i(K) w.r.t. L(G_i)
  Generator product;       // K1^ || K2^
};

CoordinationResult run_coordination(const CoordinationSetup& setup,
                                    Flavor flavor);

/// Structured result of the modular-vs-monolithic comparison.
struct ComparisonReport {
  Flavor flavor = Flavor::C;
  std::vector<std::string> coordinator_alphabet;
  int coordinator_states = 0;
  bool spec_intersected_with_plant = false;
  std::map<std::string, bool> conditions;  // evaluated mutual conditions
  bool condition_theorem_backed = false;   // false for cn/cr (heuristic)
  bool conditions_hold = false;            // conjunction of `conditions`
  Generator monolithic, local1, local2, modular_product;
  bool safety_monolithic = false;
  bool safety_modular = false;
  bool inclusion_modular_in_monolithic = false;  // the §3 always-inclusion
  bool inclusion_monolithic_in_modular = false;  // the theorem direction
  bool equality = false;
  std::optional<Word> gap_witness;  // in monolithic \ modular when strict
  std::optional<std::size_t> sample_max_len;  // include language samples

  nlohmann::json to_json() const;
};

/// Full pipeline: coordinator, monolithic and modular synthesis, condition
/// evaluation, safety / inclusion / equality verdicts.
///
/// Guarantees enforced with a diagnostics-dump InternalError (violating any
/// of them would falsify the implementation):
///   - safety, both routes, every flavor;
///   - under the flavor's mutual condition, monolithic ⊆ modular for the
///     c, n and R flavors (their comparison theorems rest on monotone
///     operators and exact distributivity);
///   - modular ⊆ monolithic for the controllability/normality family
///     (c, n, cn), where the product of locally-satisfying languages
///     satisfies the property globally.
/// The remaining combinations can genuinely fail and are only recorded:
/// supremal K-ambient relative observability is not monotone in the
/// specification (the ambient grows with it), so the r-flavor theorem
/// direction may break even under the mutual condition; and for every
/// relative-observability flavor the modular product may escape the
/// monolithic supremal, because local supremality does not survive inverse
/// projection (an unobservable string private to one side pairs with the
/// empty string and constrains the other side's continuations).
ComparisonReport compare(const Generator& g1, const Generator& g2,
                         const Generator& spec, Flavor flavor,
                         std::optional<std::vector<std::string>> ak =
                             std::nullopt,
                         std::optional<std::size_t> sample_max_len =
                             std::nullopt);

}  // namespace supctl

#endif  // SUPCTL_COORDINATION_HPP_
