// coordination.cpp
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

#include "supctl/coordination.hpp"

#include <algorithm>

#include "supctl/lang_ops.hpp"
#include "supctl/mutual.hpp"
#include "supctl/refine.hpp"

namespace supctl {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<std::string> names_union(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return sorted_unique(std::move(out));
}

std::vector<std::string> names_intersection(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const std::string& n : a) {
    if (std::find(b.begin(), b.end(), n) != b.end()) out.push_back(n);
  }
  return sorted_unique(std::move(out));
}

bool subset_of(const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
  for (const std::string& n : a) {
    if (std::find(b.begin(), b.end(), n) == b.end()) return false;
  }
  return true;
}

// The spec as a language over all of A1 ∪ A2; events it does not mention are
// added to the universe without transitions.
Generator spec_over_union(const Generator& spec,
                          const std::vector<std::string>& all) {
  std::vector<Event> events;
  for (const std::string& n : all) {
    int i = spec.alphabet().index(n);
    events.push_back(i >= 0 ? spec.alphabet().event(i) : Event{n, false, false});
  }
  Alphabet full(std::move(events));
  return spec.alphabet().same_events(full) ? spec
                                           : widen_alphabet(spec, full);
}

// P1(K) || P2(K) for P_i onto A_i ∪ A_k.
Generator decomposition_product(const Generator& spec,
                                const std::vector<std::string>& a1,
                                const std::vector<std::string>& a2,
                                const std::vector<std::string>& ak) {
  Generator wide = spec_over_union(spec, names_union(a1, a2));
  Generator p1 = natural_projection(wide, names_union(a1, ak));
  Generator p2 = natural_projection(wide, names_union(a2, ak));
  return sync_product({p1, p2});
}

}  // namespace

DecompResult check_cond_decomposable(const Generator& spec,
                                     const std::vector<std::string>& a1,
                                     const std::vector<std::string>& a2,
                                     const std::vector<std::string>& ak) {
  std::vector<std::string> all = names_union(a1, a2);
  if (!subset_of(ak, all)) {
    throw InputError("coordinator alphabet must be within A1 ∪ A2");
  }
  if (!subset_of(names_intersection(a1, a2), ak)) {
    throw InputError("coordinator alphabet must contain all shared events");
  }
  for (const std::string& n : spec.alphabet().names()) {
    if (std::find(all.begin(), all.end(), n) == all.end()) {
      throw InputError("specification event '" + n + "' outside A1 ∪ A2");
    }
  }
  Generator wide = spec_over_union(spec, all);
  Generator product = decomposition_product(spec, a1, a2, ak);
  // K ⊆ P1(K) || P2(K) always holds; the interesting direction is ⊇.
  LeqResult back = language_leq(product, wide);
  if (back.holds) return {true, std::nullopt};
  return {false, back.witness};
}

std::vector<std::string> extend_coordinator_alphabet(
    const Generator& spec, const std::vector<std::string>& a1,
    const std::vector<std::string>& a2) {
  std::vector<std::string> all = names_union(a1, a2);
  std::vector<std::string> ak = names_intersection(a1, a2);
  Generator wide = spec_over_union(spec, all);

  // Number of product-minus-spec strings up to a fixed length bound,
  // counted by dynamic programming over the pair automaton (saturating).
  // Used only to rank candidate events, so any deterministic bound works.
  const std::size_t bound =
      static_cast<std::size_t>(spec.num_states() + 1) * 2 + 2;
  auto witness_count = [&](const std::vector<std::string>& candidate_ak) {
    Generator product = decomposition_product(spec, a1, a2, candidate_ak);
    RefinedPair pair = refine(wide, product);  // wide ⊆ product always
    const Generator& g = pair.product;
    if (g.is_empty()) return static_cast<unsigned long long>(0);
    constexpr unsigned long long kCap = 1ull << 62;
    std::vector<unsigned long long> count(g.num_states(), 0);
    count[g.initial()] = 1;
    unsigned long long witnesses = 0;
    for (std::size_t len = 0; len < bound; ++len) {
      std::vector<unsigned long long> next(g.num_states(), 0);
      for (int q = 0; q < g.num_states(); ++q) {
        if (count[q] == 0) continue;
        for (int e = 0; e < g.alphabet().size(); ++e) {
          int t = g.target(q, e);
          if (t < 0) continue;
          next[t] = std::min(kCap, next[t] + count[q]);
        }
      }
      for (int q = 0; q < g.num_states(); ++q) {
        if (!pair.in_spec[q]) witnesses = std::min(kCap, witnesses + next[q]);
      }
      count = std::move(next);
    }
    return witnesses;
  };

  while (!check_cond_decomposable(spec, a1, a2, ak).decomposable) {
    std::vector<std::string> rest;
    for (const std::string& n : all) {
      if (std::find(ak.begin(), ak.end(), n) == ak.end()) rest.push_back(n);
    }
    std::size_t current = witness_count(ak);
    std::string chosen = rest.front();
    for (const std::string& candidate : rest) {
      std::vector<std::string> trial = ak;
      trial.push_back(candidate);
      if (witness_count(sorted_unique(trial)) < current) {
        chosen = candidate;
        break;
      }
    }
    ak.push_back(chosen);
    ak = sorted_unique(std::move(ak));
  }
  return ak;
}

Generator build_coordinator(const Generator& g1, const Generator& g2,
                            const std::vector<std::string>& ak) {
  std::vector<std::string> a1 = g1.alphabet().names();
  std::vector<std::string> a2 = g2.alphabet().names();
  if (!subset_of(ak, names_union(a1, a2))) {
    throw InputError("coordinator alphabet must be within A'_1 ∪ A'_2");
  }
  Generator p1 = natural_projection(g1, names_intersection(ak, a1));
  Generator p2 = natural_projection(g2, names_intersection(ak, a2));
  Generator coordinator = sync_product({p1, p2});

  // Coordinator neutrality: G'_1 || G'_2 = G'_1 || G'_2 || G'_k.
  Generator plain = sync_product({g1, g2});
  Generator with_coord = sync_product({g1, g2, coordinator});
  if (!language_equal(plain, with_coord)) {
    throw InternalError("coordinator changed the composed plant language");
  }
  return coordinator;
}

CoordinationSetup make_setup(const Generator& g1, const Generator& g2,
                             const Generator& spec,
                             std::optional<std::vector<std::string>> ak) {
  CoordinationSetup setup;
  setup.g1_orig = g1;
  setup.g2_orig = g2;
  setup.global = g1.alphabet().merged_with(g2.alphabet());
  for (const std::string& n : spec.alphabet().names()) {
    if (!setup.global.has(n)) {
      throw InputError("specification event '" + n +
                       "' outside the composed plant alphabet");
    }
  }
  if (!spec.alphabet().consistent_subset_of(setup.global)) {
    throw ConsistencyError("specification flags disagree with the plants");
  }

  setup.plant = sync_product({g1, g2});
  Generator lifted_spec = spec.alphabet().same_events(setup.global)
                              ? spec
                              : inverse_projection(spec, setup.global);
  // The framework assumes K ⊆ L(G); a larger file is cut down to the plant.
  LeqResult leq = language_leq(lifted_spec, setup.plant);
  if (leq.holds) {
    setup.spec = lifted_spec.canonical();
  } else {
    setup.spec = intersect(lifted_spec, setup.plant);
    setup.spec_intersected_with_plant = true;
  }

  std::vector<std::string> a1 = g1.alphabet().names();
  std::vector<std::string> a2 = g2.alphabet().names();
  if (ak) {
    setup.ak = sorted_unique(*ak);
    DecompResult d = check_cond_decomposable(setup.spec, a1, a2, setup.ak);
    if (!d.decomposable) {
      throw InputError(
          "specification is not conditionally decomposable for the given "
          "coordinator alphabet (witness " +
          word_str(*d.witness) + ")");
    }
  } else {
    setup.ak = extend_coordinator_alphabet(setup.spec, a1, a2);
  }
  setup.coordinator = build_coordinator(g1, g2, setup.ak);
  setup.g1 = sync_product({g1, setup.coordinator});
  setup.g2 = sync_product({g2, setup.coordinator});
  return setup;
}

Generator run_monolithic(const CoordinationSetup& setup, Flavor flavor) {
  return synthesize(flavor, setup.spec, setup.plant,
                    setup.global.uncontrollable_names(),
                    setup.global.observable_names());
}

CoordinationResult run_coordination(const CoordinationSetup& setup,
                                    Flavor flavor) {
  CoordinationResult out;
  if (setup.spec.is_empty()) {
    out.k1_up = Generator::empty(setup.g1.alphabet());
    out.k2_up = Generator::empty(setup.g2.alphabet());
    out.product = Generator::empty(setup.global);
    return out;
  }
  for (int i : {1, 2}) {
    const Generator& gi = i == 1 ? setup.g1 : setup.g2;
    Generator ki = natural_projection(setup.spec, gi.alphabet().names());
    Generator up = synthesize(flavor, ki, gi,
                              gi.alphabet().uncontrollable_names(),
                              gi.alphabet().observable_names());
    (i == 1 ? out.k1_up : out.k2_up) = std::move(up);
  }
  out.product = sync_product({out.k1_up, out.k2_up});
  return out;
}

nlohmann::json ComparisonReport::to_json() const {
  nlohmann::json j;
  j["flavor"] = flavor_name(flavor);
  j["coordinator"] = {{"alphabet", coordinator_alphabet},
                      {"states", coordinator_states}};
  j["spec_intersected_with_plant"] = spec_intersected_with_plant;
  j["conditions"] = conditions;
  j["conditions_hold"] = conditions_hold;
  j["condition_label"] = condition_theorem_backed
                             ? "theorem"
                             : "heuristic - no theorem in paper";
  j["languages"] = {{"monolithic", monolithic.serialize()},
                    {"local1", local1.serialize()},
                    {"local2", local2.serialize()},
                    {"modular_product", modular_product.serialize()}};
  j["safety_monolithic"] = safety_monolithic;
  j["safety_modular"] = safety_modular;
  j["inclusion_modular_in_monolithic"] = inclusion_modular_in_monolithic;
  j["inclusion_monolithic_in_modular"] = inclusion_monolithic_in_modular;
  j["equality"] = equality;
  if (gap_witness) j["gap_witness"] = *gap_witness;
  if (sample_max_len) {
    auto sample = [&](const Generator& g) {
      nlohmann::json arr = nlohmann::json::array();
      for (const Word& w : g.enumerate_language(*sample_max_len).strings) {
        arr.push_back(w);
      }
      return arr;
    };
    j["samples"] = {{"max_len", *sample_max_len},
                    {"monolithic", sample(monolithic)},
                    {"modular_product", sample(modular_product)}};
  }
  return j;
}

ComparisonReport compare(const Generator& g1, const Generator& g2,
                         const Generator& spec, Flavor flavor,
                         std::optional<std::vector<std::string>> ak,
                         std::optional<std::size_t> sample_max_len) {
  CoordinationSetup setup = make_setup(g1, g2, spec, std::move(ak));
  ComparisonReport report;
  report.flavor = flavor;
  report.coordinator_alphabet = setup.ak;
  report.coordinator_states = setup.coordinator.num_states();
  report.spec_intersected_with_plant = setup.spec_intersected_with_plant;
  report.sample_max_len = sample_max_len;

  report.monolithic = run_monolithic(setup, flavor);
  CoordinationResult modular = run_coordination(setup, flavor);
  report.local1 = modular.k1_up;
  report.local2 = modular.k2_up;
  report.modular_product = modular.product;

  // Mutual conditions between the composed local plants.
  ModularInstance inst;
  inst.l1 = setup.g1;
  inst.l2 = setup.g2;
  inst.global = setup.global;
  inst.k1 = natural_projection(setup.spec, setup.g1.alphabet().names());
  inst.k2 = natural_projection(setup.spec, setup.g2.alphabet().names());
  switch (flavor) {
    case Flavor::C:
      report.conditions["gmc"] = !check_gmc(inst).has_value();
      report.condition_theorem_backed = true;
      break;
    case Flavor::N:
      report.conditions["gmn"] = !check_gmn(inst).has_value();
      report.condition_theorem_backed = true;
      break;
    case Flavor::R_K:
      report.conditions["gm_k_obs"] = !check_gm_k_obs(inst).has_value();
      report.condition_theorem_backed = true;
      break;
    case Flavor::R_L:
      report.conditions["mutual_l_obs"] = !check_mutual_l_obs(inst).has_value();
      report.condition_theorem_backed = true;
      break;
    case Flavor::CN:
      report.conditions["gmc"] = !check_gmc(inst).has_value();
      report.conditions["gmn"] = !check_gmn(inst).has_value();
      report.condition_theorem_backed = false;
      break;
    case Flavor::CR:
      report.conditions["gmc"] = !check_gmc(inst).has_value();
      report.conditions["gm_k_obs"] = !check_gm_k_obs(inst).has_value();
      report.condition_theorem_backed = false;
      break;
  }
  report.conditions_hold = true;
  for (const auto& [name, held] : report.conditions) {
    (void)name;
    report.conditions_hold = report.conditions_hold && held;
  }

  report.safety_monolithic = language_leq(report.monolithic, setup.spec).holds;
  report.safety_modular =
      language_leq(report.modular_product, setup.spec).holds;
  LeqResult always = language_leq(report.modular_product, report.monolithic);
  report.inclusion_modular_in_monolithic = always.holds;
  LeqResult theorem = language_leq(report.monolithic, report.modular_product);
  report.inclusion_monolithic_in_modular = theorem.holds;
  report.equality = always.holds && theorem.holds;
  if (!always.holds) report.gap_witness = always.witness;

  auto falsified = [&](const std::string& what) {
    throw InternalError(what + "; diagnostics: " + report.to_json().dump());
  };
  if (!report.safety_monolithic || !report.safety_modular) {
    falsified("safety violated");
  }
  bool theorem_sound = flavor == Flavor::C || flavor == Flavor::N ||
                       flavor == Flavor::R_L;
  if (theorem_sound && report.conditions_hold &&
      !report.inclusion_monolithic_in_modular) {
    falsified("comparison theorem violated");
  }
  bool product_property_closed = flavor == Flavor::C || flavor == Flavor::N ||
                                 flavor == Flavor::CN;
  if (product_property_closed && !report.inclusion_modular_in_monolithic) {
    falsified("modular product escaped the monolithic supremal");
  }
  return report;
}

}  // namespace supctl
