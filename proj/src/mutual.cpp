// mutual.cpp
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

#include "supctl/mutual.hpp"

#include <algorithm>

#include "supctl/lang_ops.hpp"

namespace supctl {

namespace {

std::vector<std::string> intersect_names(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const std::string& n : a) {
    if (std::find(b.begin(), b.end(), n) != b.end()) out.push_back(n);
  }
  return out;
}

CheckResult with_side(CheckResult r, int side) {
  if (r) r->side = side;
  return r;
}

}  // namespace

void ModularInstance::validate() const {
  if (!l1.alphabet().consistent_subset_of(global)) {
    throw ConsistencyError(
        "L1 alphabet is not a flag-consistent subset of the global alphabet");
  }
  if (!l2.alphabet().consistent_subset_of(global)) {
    throw ConsistencyError(
        "L2 alphabet is not a flag-consistent subset of the global alphabet");
  }
  if (k1) {
    if (!k1->alphabet().same_events(l1.alphabet())) {
      throw InputError("K1 must share L1's event set");
    }
    if (!k1->alphabet().consistent_subset_of(global)) {
      throw ConsistencyError("K1 flags disagree with the global alphabet");
    }
    LeqResult leq = language_leq(*k1, l1);
    if (!leq.holds) throw InclusionError("K1 not included in L1", *leq.witness);
  }
  if (k2) {
    if (!k2->alphabet().same_events(l2.alphabet())) {
      throw InputError("K2 must share L2's event set");
    }
    if (!k2->alphabet().consistent_subset_of(global)) {
      throw ConsistencyError("K2 flags disagree with the global alphabet");
    }
    LeqResult leq = language_leq(*k2, l2);
    if (!leq.holds) throw InclusionError("K2 not included in L2", *leq.witness);
  }
}

std::vector<std::string> ModularInstance::local_events(int side) const {
  return side == 1 ? l1.alphabet().names() : l2.alphabet().names();
}

Generator ModularInstance::lifted_plant(int side) const {
  return inverse_projection(side == 1 ? l1 : l2, global);
}

Generator ModularInstance::lifted_spec(int side) const {
  const std::optional<Generator>& k = side == 1 ? k1 : k2;
  if (!k) throw InputError("local specification missing");
  return inverse_projection(*k, global);
}

CheckResult check_gmc(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    int j = 3 - i;
    Generator ti = inst.lifted_plant(i);
    Generator tj = inst.lifted_plant(j);
    Alphabet local = (i == 1 ? inst.l1 : inst.l2).alphabet();
    std::vector<std::string> aiu = local.uncontrollable_names();
    if (CheckResult r = controllability_inclusion(ti, tj, aiu)) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

CheckResult check_wgmc(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    int j = 3 - i;
    Generator ti = inst.lifted_plant(i);
    Generator tj = inst.lifted_plant(j);
    Alphabet local = (i == 1 ? inst.l1 : inst.l2).alphabet();
    std::vector<std::string> shared_u =
        intersect_names(local.uncontrollable_names(), inst.local_events(j));
    if (CheckResult r = controllability_inclusion(ti, tj, shared_u)) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

CheckResult check_mc(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    int j = 3 - i;
    const Generator& li = i == 1 ? inst.l1 : inst.l2;
    const Generator& lj = i == 1 ? inst.l2 : inst.l1;
    // P_i(P_j^{-1}(L_j)) over A_i.
    Generator projected =
        natural_projection(inverse_projection(lj, inst.global),
                           li.alphabet().names());
    std::vector<std::string> shared_u =
        intersect_names(li.alphabet().uncontrollable_names(),
                        inst.local_events(j));
    if (CheckResult r = controllability_inclusion(li, projected, shared_u)) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

namespace {

// X ∩ big ⊆ small, exactly; witness is the shortest offending string.
CheckResult normal_style_inclusion(const Generator& closure,
                                   const Generator& other,
                                   const Generator& bound) {
  Generator lhs = intersect(closure, other);
  LeqResult leq = language_leq(lhs, bound);
  if (leq.holds) return std::nullopt;
  return Witness{"normality", *leq.witness, std::nullopt, std::nullopt,
                 std::nullopt};
}

}  // namespace

CheckResult check_gmn(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    int j = 3 - i;
    Generator ti = inst.lifted_plant(i);
    Generator tj = inst.lifted_plant(j);
    Generator closure = inverse_projection(
        natural_projection(ti, inst.global.observable_names()), inst.global);
    if (CheckResult r = normal_style_inclusion(closure, tj, ti)) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

CheckResult check_mn(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    const Generator& li = i == 1 ? inst.l1 : inst.l2;
    const Generator& lj = i == 1 ? inst.l2 : inst.l1;
    std::vector<std::string> local_obs = li.alphabet().observable_names();
    Generator closure = inverse_projection(
        natural_projection(li, local_obs), li.alphabet());
    Generator projected =
        natural_projection(inverse_projection(lj, inst.global),
                           li.alphabet().names());
    if (CheckResult r = normal_style_inclusion(closure, projected, li)) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

CheckResult check_gm_k_obs(const ModularInstance& inst) {
  inst.validate();
  if (!inst.k1 || !inst.k2) {
    throw InputError("globally mutual K-observability needs local specs");
  }
  for (int i : {1, 2}) {
    int j = 3 - i;
    Generator ti = inst.lifted_plant(i);
    Generator cj = inst.lifted_spec(j);
    Generator tj = inst.lifted_plant(j);
    if (CheckResult r =
            rel_obs_core(ti, cj, tj, inst.global.observable_names())) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

CheckResult check_mutual_l_obs(const ModularInstance& inst) {
  inst.validate();
  for (int i : {1, 2}) {
    int j = 3 - i;
    Generator ti = inst.lifted_plant(i);
    Generator tj = inst.lifted_plant(j);
    if (CheckResult r =
            rel_obs_core(ti, tj, tj, inst.global.observable_names())) {
      return with_side(std::move(r), i);
    }
  }
  return std::nullopt;
}

}  // namespace supctl
