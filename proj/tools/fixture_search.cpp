// fixture_search.cpp
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
//
// Seeded searches for the committed regression fixtures:
//   fig2            local plants over {a,b1,tau} / {a,b2,tau} where mutual
//                   normality fails with witness a·tau while mutual
//                   L-observability holds
//   nonunion        a (K, L) instance with two incomparable maximal
//                   observable sublanguages whose union is not observable
//   distrib         triples (K, L, M) whose distributivity hypothesis fails,
//                   at least one with a strict inequality, per flavor
//
// Usage: fixture_search <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "supctl/checks.hpp"
#include "supctl/lang_ops.hpp"
#include "supctl/mutual.hpp"
#include "supctl/oracle.hpp"
#include "supctl/random.hpp"
#include "supctl/refine.hpp"
#include "supctl/synthesis.hpp"

#include "json.hpp"

using namespace supctl;

namespace {

Generator random_local(std::mt19937_64& rng, const Alphabet& alphabet,
                       int max_states) {
  int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_states - 1));
  std::vector<std::string> states;
  for (int i = 0; i < n; ++i) states.push_back("x" + std::to_string(i));
  Generator g(alphabet, states, states[0]);
  for (int q = 0; q < n; ++q) {
    for (int e = 0; e < alphabet.size(); ++e) {
      if (rng() % 100 < 45) {
        g.add_transition(states[q], alphabet.event(e).name,
                         states[rng() % n]);
      }
    }
  }
  return g.accessible();
}

bool search_fig2(const std::string& dir) {
  Alphabet a1 = Alphabet::parse_entries("a:co b1:co tau:c");
  Alphabet a2 = Alphabet::parse_entries("a:co b2:co tau:c");
  Alphabet global = Alphabet::parse_entries("a:co b1:co b2:co tau:c");
  Word want{"a", "tau"};
  for (std::uint64_t seed = 1; seed <= 200000; ++seed) {
    std::mt19937_64 rng(seed);
    ModularInstance inst;
    inst.l1 = random_local(rng, a1, 6);
    inst.l2 = random_local(rng, a2, 6);
    inst.global = global;
    if (inst.l1.num_states() < 2 || inst.l2.num_states() < 2) continue;
    CheckResult mn = check_mn(inst);
    if (!mn || mn->w != want || mn->side != 1) continue;
    if (check_mutual_l_obs(inst)) continue;
    std::cout << "fig2: seed " << seed << "\n";
    inst.l1.write_file(dir + "/fig2_l1.gen");
    inst.l2.write_file(dir + "/fig2_l2.gen");
    std::ofstream(dir + "/fig2_global.alph")
        << "alphabet: " << global.format_entries() << "\n";
    return true;
  }
  return false;
}

bool search_nonunion(const std::string& dir) {
  InstanceParams params;
  params.max_states = 4;
  params.max_events = 3;
  for (std::uint64_t seed = 1; seed <= 50000; ++seed) {
    PairInstance inst = random_pair(seed, params);
    RefinedPair r = refine(inst.spec, inst.plant);
    if (r.spec_state_count() > 10) continue;
    std::vector<Generator> maxima =
        brute_maximal_observable(inst.spec, inst.plant, false);
    if (maxima.size() < 2) continue;
    std::vector<std::string> ao = inst.plant.alphabet().observable_names();
    for (std::size_t i = 0; i < maxima.size(); ++i) {
      for (std::size_t j = i + 1; j < maxima.size(); ++j) {
        Generator u = union_language(maxima[i], maxima[j]);
        if (rel_obs_core(u, u, inst.plant, ao)) {
          std::cout << "nonunion: seed " << seed << " (" << maxima.size()
                    << " maximal elements)\n";
          inst.spec.write_file(dir + "/nonunion_spec.gen");
          inst.plant.write_file(dir + "/nonunion_plant.gen");
          return true;
        }
      }
    }
  }
  return false;
}

bool search_distrib(const std::string& dir) {
  InstanceParams params;
  params.max_states = 4;
  params.max_events = 3;
  nlohmann::json manifest = nlohmann::json::array();
  const char* flavor_names[4] = {"c", "n", "r", "R"};
  Flavor flavors[4] = {Flavor::C, Flavor::N, Flavor::R_K, Flavor::R_L};
  bool any_strict = false;
  for (int fi = 0; fi < 4; ++fi) {
    int stored = 0;
    bool want_strict = true;
    for (std::uint64_t seed = 1; seed <= 100000 && stored < 3; ++seed) {
      PairInstance inst = random_pair(seed * 4 + fi, params);
      Generator m = random_sublanguage(seed * 4 + fi + 55555, inst.plant, params);
      if (m.is_empty()) continue;
      const Alphabet& alphabet = inst.plant.alphabet();
      std::vector<std::string> au = alphabet.uncontrollable_names();
      std::vector<std::string> ao = alphabet.observable_names();
      bool hypothesis = false;
      switch (flavors[fi]) {
        case Flavor::C:
          hypothesis = !controllability_inclusion(m, inst.plant, au);
          break;
        case Flavor::N:
          hypothesis = !normality_pair(m, inst.plant, ao);
          break;
        case Flavor::R_K:
          hypothesis = !rel_obs_core(m, inst.spec, inst.plant, ao);
          break;
        default:
          hypothesis = !rel_obs_core(m, inst.plant, inst.plant, ao);
          break;
      }
      if (hypothesis) continue;  // fixtures need the hypothesis to fail

      Generator km = intersect(inst.spec, m);
      Generator lm = intersect(inst.plant, m);
      Generator lhs, rhs;
      switch (flavors[fi]) {
        case Flavor::C:
          lhs = sup_controllable(km, lm, au);
          rhs = intersect(sup_controllable(inst.spec, inst.plant, au), m);
          break;
        case Flavor::N:
          lhs = sup_normal(km, lm, ao);
          rhs = intersect(sup_normal(inst.spec, inst.plant, ao), m);
          break;
        case Flavor::R_K:
          lhs = sup_rel_observable(km, km, lm, ao);
          rhs = intersect(
              sup_rel_observable(inst.spec, inst.spec, inst.plant, ao), m);
          break;
        default:
          lhs = sup_rel_observable(km, lm, lm, ao);
          rhs = intersect(
              sup_rel_observable(inst.spec, inst.plant, inst.plant, ao), m);
          break;
      }
      bool strict = !language_equal(lhs, rhs);
      if (want_strict && !strict && stored == 0) continue;  // lead with one
      if (strict) {
        want_strict = false;
        any_strict = true;
      }
      std::string base = std::string("distrib_") + flavor_names[fi] + "_" +
                         std::to_string(stored);
      inst.spec.write_file(dir + "/" + base + "_k.gen");
      inst.plant.write_file(dir + "/" + base + "_l.gen");
      m.write_file(dir + "/" + base + "_m.gen");
      manifest.push_back({{"flavor", flavor_names[fi]},
                          {"spec", base + "_k.gen"},
                          {"plant", base + "_l.gen"},
                          {"m", base + "_m.gen"},
                          {"strict", strict}});
      ++stored;
    }
    if (stored < 3) return false;
  }
  std::ofstream(dir + "/distrib_manifest.json") << manifest.dump(2) << "\n";
  return any_strict;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: fixture_search <output-dir>\n";
    return 2;
  }
  std::string dir = argv[1];
  std::filesystem::create_directories(dir);
  bool ok = true;
  if (!search_fig2(dir)) {
    std::cerr << "fig2 reconstruction not found\n";
    ok = false;
  }
  if (!search_nonunion(dir)) {
    std::cerr << "non-union-closure instance not found\n";
    ok = false;
  }
  if (!search_distrib(dir)) {
    std::cerr << "distributivity fixtures incomplete\n";
    ok = false;
  }
  return ok ? 0 : 1;
}
