// mutual.hpp
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

#ifndef SUPCTL_MUTUAL_HPP_
#define SUPCTL_MUTUAL_HPP_

#include <optional>

#include "supctl/checks.hpp"
#include "supctl/generator.hpp"

namespace supctl {

/// Two local plants over local alphabets inside a global alphabet, with
/// optional local specifications. Local flags must agree with the global
/// alphabet's (controllability and observability of events are consistent
/// over local supervisors).
struct ModularInstance {
  Generator l1, l2;
  Alphabet global;
  std::optional<Generator> k1, k2;

  /// Throws on flag inconsistency, events outside the global alphabet, or
  /// K_i ⊄ L_i.
  void validate() const;

  std::vector<std::string> local_events(int side) const;  // side ∈ {1,2}
  /// P_i^{-1}(L_i) over the global alphabet.
  Generator lifted_plant(int side) const;
  Generator lifted_spec(int side) const;
};

/// Globally mutually controllable:
///   P_i^{-1}(L_i) A_{i,u} ∩ P_j^{-1}(L_j) ⊆ P_i^{-1}(L_i), both orders.
CheckResult check_gmc(const ModularInstance& inst);

/// Weakly globally mutually controllable: A_{i,u} ∩ A_j in place of A_{i,u}.
CheckResult check_wgmc(const ModularInstance& inst);

/// Mutually controllable:
///   L_i (A_{i,u} ∩ A_j) ∩ P_i(P_j^{-1}(L_j)) ⊆ L_i, both orders.
CheckResult check_mc(const ModularInstance& inst);

/// Globally mutually normal:
///   O^{-1}O(P_i^{-1}(L_i)) ∩ P_j^{-1}(L_j) ⊆ P_i^{-1}(L_i), both orders.
CheckResult check_gmn(const ModularInstance& inst);

/// Mutually normal: O_i^{-1}O_i(L_i) ∩ P_i(P_j^{-1}(L_j)) ⊆ L_i, both orders.
CheckResult check_mn(const ModularInstance& inst);

/// Globally mutually K-observable: for both orders,
///   O(w)=O(w') ∧ wa ∈ P_i^{-1}(L_i) ∧ w' ∈ P_j^{-1}(K_j) ∧
///   w'a ∈ P_j^{-1}(L_j)  ⇒  w'a ∈ P_i^{-1}(L_i).
/// Requires local specs K1, K2.
CheckResult check_gm_k_obs(const ModularInstance& inst);

/// Mutual L-observability: P_i^{-1}(L_i) is P_j^{-1}(L_j)-observable with
/// respect to P_j^{-1}(L_j), both orders.
CheckResult check_mutual_l_obs(const ModularInstance& inst);

}  // namespace supctl

#endif  // SUPCTL_MUTUAL_HPP_
