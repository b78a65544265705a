// capi.cpp
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

#include "supctl.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>

#include "supctl/checks.hpp"
#include "supctl/coordination.hpp"
#include "supctl/lang_ops.hpp"
#include "supctl/mutual.hpp"
#include "supctl/oracle.hpp"
#include "supctl/random.hpp"
#include "supctl/refine.hpp"
#include "supctl/supervisor.hpp"
#include "supctl/synthesis.hpp"

#include "json.hpp"

using nlohmann::json;

struct supctl_gen {
  supctl::Generator g;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

supctl_status fail(supctl_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
supctl_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const supctl::InclusionError& e) {
    return fail(SUPCTL_ERR_INCLUSION, e.what());
  } catch (const supctl::ConsistencyError& e) {
    return fail(SUPCTL_ERR_CONSISTENCY, e.what());
  } catch (const supctl::BoundError& e) {
    return fail(SUPCTL_ERR_BOUND, e.what());
  } catch (const supctl::InputError& e) {
    return fail(SUPCTL_ERR_INPUT, e.what());
  } catch (const supctl::InternalError& e) {
    return fail(SUPCTL_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(SUPCTL_ERR_INPUT, e.what());
  }
}

supctl_status require(bool ok, const char* message) {
  return ok ? SUPCTL_OK : fail(SUPCTL_ERR_INPUT, message);
}

supctl_gen* wrap(supctl::Generator g) {
  return new supctl_gen{std::move(g)};
}

std::vector<std::string> to_words(const char* const* items, size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.emplace_back(items[i]);
  return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

extern "C" {

const char* supctl_last_error(void) { return g_last_error.c_str(); }

void supctl_string_free(char* s) { std::free(s); }

void supctl_gen_free(supctl_gen* g) { delete g; }

supctl_status supctl_gen_parse_file(const char* path, supctl_gen** out) {
  if (supctl_status s = require(path && out, "null argument")) return s;
  return guarded([&] {
    *out = wrap(supctl::Generator::parse_file(path));
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_parse_text(const char* text, supctl_gen** out) {
  if (supctl_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = wrap(supctl::Generator::parse(text));
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_serialize(const supctl_gen* g, char** out) {
  if (supctl_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(g->g.serialize());
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_to_dot(const supctl_gen* g, char** out) {
  if (supctl_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(g->g.to_dot());
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_write_file(const supctl_gen* g, const char* path) {
  if (supctl_status s = require(g && path, "null argument")) return s;
  return guarded([&] {
    g->g.write_file(path);
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_stats_json(const supctl_gen* g, char** out_json) {
  if (supctl_status s = require(g && out_json, "null argument")) return s;
  return guarded([&] {
    json j{{"states", g->g.num_states()},
           {"transitions", g->g.num_transitions()},
           {"empty", g->g.is_empty()},
           {"alphabet", g->g.alphabet().format_entries()}};
    *out_json = dup_string(j.dump());
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_enumerate_json(const supctl_gen* g, size_t max_len,
                                        char** out_json) {
  if (supctl_status s = require(g && out_json, "null argument")) return s;
  return guarded([&] {
    json arr = json::array();
    for (const supctl::Word& w : g->g.enumerate_language(max_len).strings) {
      arr.push_back(w);
    }
    *out_json = dup_string(arr.dump());
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_accessible(const supctl_gen* g, supctl_gen** out) {
  if (supctl_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = wrap(g->g.accessible());
    return SUPCTL_OK;
  });
}

supctl_status supctl_gen_generates(const supctl_gen* g,
                                   const char* const* word, size_t len,
                                   int* out) {
  if (supctl_status s = require(g && out && (len == 0 || word), "null argument"))
    return s;
  return guarded([&] {
    *out = g->g.generates(to_words(word, len)) ? 1 : 0;
    return SUPCTL_OK;
  });
}

supctl_status supctl_sync_product(const supctl_gen* const* gs, size_t n,
                                  supctl_gen** out) {
  if (supctl_status s = require(gs && out && n > 0, "null argument")) return s;
  return guarded([&] {
    std::vector<supctl::Generator> inputs;
    inputs.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      if (!gs[i]) return fail(SUPCTL_ERR_INPUT, "null generator");
      inputs.push_back(gs[i]->g);
    }
    *out = wrap(supctl::sync_product(inputs));
    return SUPCTL_OK;
  });
}

supctl_status supctl_natural_projection(const supctl_gen* g,
                                        const char* const* events, size_t n,
                                        supctl_gen** out) {
  if (supctl_status s =
          require(g && out && (n == 0 || events), "null argument"))
    return s;
  return guarded([&] {
    *out = wrap(supctl::natural_projection(g->g, to_words(events, n)));
    return SUPCTL_OK;
  });
}

supctl_status supctl_inverse_projection(const supctl_gen* g,
                                        const char* alphabet_entries,
                                        supctl_gen** out) {
  if (supctl_status s = require(g && alphabet_entries && out, "null argument"))
    return s;
  return guarded([&] {
    supctl::Alphabet full = supctl::Alphabet::parse_entries(alphabet_entries);
    *out = wrap(supctl::inverse_projection(g->g, full));
    return SUPCTL_OK;
  });
}

supctl_status supctl_language_leq(const supctl_gen* a, const supctl_gen* b,
                                  int* holds, char** witness_json) {
  if (supctl_status s = require(a && b && holds, "null argument")) return s;
  return guarded([&] {
    supctl::LeqResult r = supctl::language_leq(a->g, b->g);
    *holds = r.holds ? 1 : 0;
    if (witness_json) {
      *witness_json =
          r.witness ? dup_string(json(*r.witness).dump()) : nullptr;
    }
    return SUPCTL_OK;
  });
}

supctl_status supctl_refine_pair(const supctl_gen* spec,
                                 const supctl_gen* plant, supctl_gen** sub,
                                 supctl_gen** full) {
  if (supctl_status s = require(spec && plant && sub && full, "null argument"))
    return s;
  return guarded([&] {
    auto [h, g] = supctl::refine_pair(spec->g, plant->g);
    *sub = wrap(std::move(h));
    *full = wrap(std::move(g));
    return SUPCTL_OK;
  });
}

supctl_status supctl_check(const char* kind, const supctl_gen* spec,
                           const supctl_gen* plant, const supctl_gen* ambient,
                           char** witness_json) {
  if (supctl_status s = require(kind && spec && plant, "null argument"))
    return s;
  return guarded([&] {
    std::string k = kind;
    supctl::CheckResult r;
    const supctl::Alphabet& flags = plant->g.alphabet();
    if (k == "controllability") {
      r = supctl::check_controllability(spec->g, plant->g,
                                        flags.uncontrollable_names());
    } else if (k == "observability") {
      r = supctl::check_observability(spec->g, plant->g,
                                      flags.observable_names());
    } else if (k == "normality") {
      r = supctl::check_normality(spec->g, plant->g, flags.observable_names());
    } else if (k == "relobs") {
      if (!ambient) return fail(SUPCTL_ERR_INPUT, "relobs needs --ambient");
      r = supctl::check_rel_observability(spec->g, ambient->g, plant->g,
                                          flags.observable_names());
    } else {
      return fail(SUPCTL_ERR_INPUT, "unknown check kind '" + k + "'");
    }
    if (!r) {
      if (witness_json) *witness_json = nullptr;
      return SUPCTL_OK;
    }
    if (witness_json) *witness_json = dup_string(r->to_json().dump());
    return fail(SUPCTL_VIOLATION, "property '" + k + "' violated");
  });
}

supctl_status supctl_synthesize(const char* flavor, const supctl_gen* spec,
                                const supctl_gen* plant, int ambient_plant,
                                supctl_gen** out) {
  if (supctl_status s = require(flavor && spec && plant && out, "null argument"))
    return s;
  return guarded([&] {
    supctl::Flavor f = supctl::flavor_from_name(flavor);
    if (ambient_plant) {
      if (f != supctl::Flavor::R_K) {
        return fail(SUPCTL_ERR_INPUT, "--ambient-L applies to supr only");
      }
      f = supctl::Flavor::R_L;
    }
    *out = wrap(supctl::synthesize(f, spec->g, plant->g));
    return SUPCTL_OK;
  });
}

supctl_status supctl_realize(const supctl_gen* target, const supctl_gen* plant,
                             char** supervisor_json) {
  if (supctl_status s =
          require(target && plant && supervisor_json, "null argument"))
    return s;
  return guarded([&] {
    supctl::Supervisor sup = supctl::induce_supervisor(
        target->g, plant->g, plant->g.alphabet().controllable_names(),
        plant->g.alphabet().observable_names());
    *supervisor_json = dup_string(sup.to_json().dump(2));
    return SUPCTL_OK;
  });
}

supctl_status supctl_closed_loop(const char* supervisor_json,
                                 const supctl_gen* plant, supctl_gen** out) {
  if (supctl_status s =
          require(supervisor_json && plant && out, "null argument"))
    return s;
  return guarded([&] {
    supctl::Supervisor sup =
        supctl::Supervisor::from_json(json::parse(supervisor_json));
    *out = wrap(supctl::closed_loop(sup, plant->g));
    return SUPCTL_OK;
  });
}

supctl_status supctl_mutual(const char* kind, const supctl_gen* l1,
                            const supctl_gen* l2, const supctl_gen* k1,
                            const supctl_gen* k2,
                            const char* global_alphabet_entries,
                            char** witness_json) {
  if (supctl_status s =
          require(kind && l1 && l2 && global_alphabet_entries, "null argument"))
    return s;
  return guarded([&] {
    supctl::ModularInstance inst;
    inst.l1 = l1->g;
    inst.l2 = l2->g;
    inst.global = supctl::Alphabet::parse_entries(global_alphabet_entries);
    if (k1) inst.k1 = k1->g;
    if (k2) inst.k2 = k2->g;
    std::string k = kind;
    supctl::CheckResult r;
    if (k == "gmc") {
      r = supctl::check_gmc(inst);
    } else if (k == "wgmc") {
      r = supctl::check_wgmc(inst);
    } else if (k == "mc") {
      r = supctl::check_mc(inst);
    } else if (k == "gmn") {
      r = supctl::check_gmn(inst);
    } else if (k == "mn") {
      r = supctl::check_mn(inst);
    } else if (k == "gmk") {
      r = supctl::check_gm_k_obs(inst);
    } else if (k == "glo") {
      r = supctl::check_mutual_l_obs(inst);
    } else {
      return fail(SUPCTL_ERR_INPUT, "unknown mutual condition '" + k + "'");
    }
    if (!r) {
      if (witness_json) *witness_json = nullptr;
      return SUPCTL_OK;
    }
    if (witness_json) *witness_json = dup_string(r->to_json().dump());
    return fail(SUPCTL_VIOLATION, "mutual condition '" + k + "' violated");
  });
}

supctl_status supctl_coordinator(const supctl_gen* g1, const supctl_gen* g2,
                                 const supctl_gen* spec, const char* ak_csv,
                                 supctl_gen** coordinator, char** ak_json) {
  if (supctl_status s =
          require(g1 && g2 && spec && coordinator, "null argument"))
    return s;
  return guarded([&] {
    std::optional<std::vector<std::string>> ak;
    if (ak_csv) ak = split_csv(ak_csv);
    supctl::CoordinationSetup setup =
        supctl::make_setup(g1->g, g2->g, spec->g, ak);
    *coordinator = wrap(setup.coordinator);
    if (ak_json) *ak_json = dup_string(json(setup.ak).dump());
    return SUPCTL_OK;
  });
}

supctl_status supctl_compare(const supctl_gen* g1, const supctl_gen* g2,
                             const supctl_gen* spec, const char* flavor,
                             const char* ak_csv, long sample_max_len,
                             char** report_json) {
  if (supctl_status s =
          require(g1 && g2 && spec && flavor && report_json, "null argument"))
    return s;
  return guarded([&] {
    std::optional<std::vector<std::string>> ak;
    if (ak_csv) ak = split_csv(ak_csv);
    std::optional<std::size_t> sample;
    if (sample_max_len >= 0) sample = static_cast<std::size_t>(sample_max_len);
    supctl::ComparisonReport report =
        supctl::compare(g1->g, g2->g, spec->g,
                        supctl::flavor_from_name(flavor), ak, sample);
    *report_json = dup_string(report.to_json().dump(2));
    return SUPCTL_OK;
  });
}

supctl_status supctl_oracle_supremal(const char* flavor,
                                     const supctl_gen* spec,
                                     const supctl_gen* plant, int state_bound,
                                     supctl_gen** out) {
  if (supctl_status s = require(flavor && spec && plant && out, "null argument"))
    return s;
  return guarded([&] {
    supctl::OracleOptions opts;
    if (state_bound > 0) opts.state_bound = state_bound;
    *out = wrap(supctl::brute_supremal(
        spec->g, plant->g, supctl::flavor_from_name(flavor), opts));
    return SUPCTL_OK;
  });
}

supctl_status supctl_oracle_maxobs(const supctl_gen* spec,
                                   const supctl_gen* plant,
                                   int with_controllability, int state_bound,
                                   char** gens_json) {
  if (supctl_status s = require(spec && plant && gens_json, "null argument"))
    return s;
  return guarded([&] {
    std::vector<supctl::Generator> maxima = supctl::brute_maximal_observable(
        spec->g, plant->g, with_controllability != 0,
        state_bound > 0 ? state_bound : 12);
    json arr = json::array();
    for (const supctl::Generator& g : maxima) arr.push_back(g.serialize());
    *gens_json = dup_string(arr.dump());
    return SUPCTL_OK;
  });
}

supctl_status supctl_random_instance(unsigned long long seed,
                                     const char* params_json,
                                     char** instance_json) {
  if (supctl_status s = require(instance_json != nullptr, "null argument"))
    return s;
  return guarded([&] {
    supctl::InstanceParams params;
    if (params_json && *params_json) {
      json j = json::parse(params_json);
      params.max_states = j.value("max_states", params.max_states);
      params.max_events = j.value("max_events", params.max_events);
      params.unobs_fraction = j.value("unobs_fraction", params.unobs_fraction);
      params.uncont_fraction =
          j.value("uncont_fraction", params.uncont_fraction);
      params.min_unobs = j.value("min_unobs", params.min_unobs);
      params.min_uncont = j.value("min_uncont", params.min_uncont);
      params.transition_density =
          j.value("transition_density", params.transition_density);
      params.spec_state_keep =
          j.value("spec_state_keep", params.spec_state_keep);
      params.spec_trans_keep =
          j.value("spec_trans_keep", params.spec_trans_keep);
      params.modular = j.value("modular", params.modular);
      params.shared_events = j.value("shared_events", params.shared_events);
    }
    json out;
    if (params.modular) {
      supctl::ModularRandomInstance inst =
          supctl::random_modular(seed, params);
      out = {{"kind", "modular"},
             {"g1", inst.g1.serialize()},
             {"g2", inst.g2.serialize()},
             {"spec", inst.spec.serialize()},
             {"global_alphabet", inst.global.format_entries()}};
    } else {
      supctl::PairInstance inst = supctl::random_pair(seed, params);
      out = {{"kind", "pair"},
             {"spec", inst.spec.serialize()},
             {"plant", inst.plant.serialize()}};
    }
    *instance_json = dup_string(out.dump(2));
    return SUPCTL_OK;
  });
}

}  // extern "C"
