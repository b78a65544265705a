// supctl_main.cpp
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
// Command-line front end. All functionality goes through the C API in
// supctl.h; this file only parses arguments and moves bytes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "supctl.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

struct GenHandle {
  supctl_gen* g = nullptr;
  ~GenHandle() { supctl_gen_free(g); }
};

struct StrHandle {
  char* s = nullptr;
  ~StrHandle() { supctl_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "supctl: " << message << "\n";
  std::exit(kExitError);
}

void check_status(supctl_status status) {
  if (status == SUPCTL_OK) return;
  die(supctl_last_error());
}

GenHandle load(const std::string& path) {
  GenHandle h;
  check_status(supctl_gen_parse_file(path.c_str(), &h.g));
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) die("cannot write '" + path + "'");
  out << text;
}

// Reads the payload of the single `alphabet:` statement in a .alph file.
std::string read_alphabet_entries(const std::string& path) {
  std::ifstream in(path);
  if (!in) die("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    if (line.substr(0, colon) == "alphabet") return line.substr(colon + 1);
  }
  die("no alphabet statement in '" + path + "'");
}

void emit_generator(const GenHandle& g, const std::string& out_path,
                    bool also_dot) {
  if (out_path.empty()) {
    StrHandle text;
    check_status(supctl_gen_serialize(g.g, &text.s));
    std::cout << text.str();
  } else {
    check_status(supctl_gen_write_file(g.g, out_path.c_str()));
    if (also_dot) {
      StrHandle dot;
      check_status(supctl_gen_to_dot(g.g, &dot.s));
      write_text(out_path + ".dot", dot.str());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supervisory control of modular discrete-event systems"};
  app.require_subcommand(1);
  bool json_output = false;
  bool dot_output = false;
  long max_len = -1;
  app.add_flag("--json", json_output, "machine-readable output");
  app.add_flag("--dot", dot_output,
               "also write a .dot rendering next to generator outputs");
  app.add_option("--max-len", max_len,
                 "bounded-enumeration length for report samples");

  // check
  auto* check = app.add_subcommand("check", "decide a property of K vs L");
  std::string check_kind, check_spec, check_plant, check_ambient;
  check->add_option("kind", check_kind,
                    "controllability|observability|normality|relobs")
      ->required();
  check->add_option("--spec", check_spec, "specification generator")->required();
  check->add_option("--plant", check_plant, "plant generator")->required();
  check->add_option("--ambient", check_ambient, "ambient generator (relobs)");

  // synth
  auto* synth = app.add_subcommand("synth", "supremal sublanguage synthesis");
  std::string synth_flavor, synth_spec, synth_plant, synth_out;
  bool ambient_plant = false;
  synth->add_option("flavor", synth_flavor,
                    "supc|supn|supr|supR|supcn|supcr")
      ->required();
  synth->add_option("--spec", synth_spec)->required();
  synth->add_option("--plant", synth_plant)->required();
  synth->add_option("-o,--out", synth_out, "output generator file");
  synth->add_flag("--ambient-L", ambient_plant,
                  "use the plant as the ambient (supr only)");

  // realize
  auto* realize = app.add_subcommand("realize", "induce a supervisor");
  std::string realize_target, realize_plant, realize_out;
  realize->add_option("--target", realize_target)->required();
  realize->add_option("--plant", realize_plant)->required();
  realize->add_option("-o,--out", realize_out, "supervisor JSON file");

  // closedloop
  auto* closedloop = app.add_subcommand("closedloop",
                                        "run a supervisor against a plant");
  std::string cl_sup, cl_plant, cl_out;
  closedloop->add_option("--sup", cl_sup, "supervisor JSON file")->required();
  closedloop->add_option("--plant", cl_plant)->required();
  closedloop->add_option("-o,--out", cl_out);

  // mutual
  auto* mutual = app.add_subcommand("mutual",
                                    "inter-plant structural conditions");
  std::string mu_kind, mu_l1, mu_l2, mu_k1, mu_k2, mu_global;
  mutual->add_option("kind", mu_kind, "gmc|wgmc|mc|gmn|mn|gmk|glo")->required();
  mutual->add_option("--l1", mu_l1)->required();
  mutual->add_option("--l2", mu_l2)->required();
  mutual->add_option("--k1", mu_k1);
  mutual->add_option("--k2", mu_k2);
  mutual->add_option("--global-alphabet", mu_global, ".alph file")->required();

  // coord
  auto* coord = app.add_subcommand("coord", "build an Algorithm-1 coordinator");
  std::string co_g1, co_g2, co_spec, co_ak, co_out;
  coord->add_option("--g1", co_g1)->required();
  coord->add_option("--g2", co_g2)->required();
  coord->add_option("--spec", co_spec)->required();
  coord->add_option("--ak", co_ak, "comma-separated coordinator events");
  coord->add_option("-o,--out", co_out, "coordinator output file");

  // compare
  auto* compare = app.add_subcommand(
      "compare", "modular vs monolithic synthesis comparison");
  std::string cp_g1, cp_g2, cp_spec, cp_flavor, cp_ak, cp_report;
  compare->add_option("--g1", cp_g1)->required();
  compare->add_option("--g2", cp_g2)->required();
  compare->add_option("--spec", cp_spec)->required();
  compare->add_option("--flavor", cp_flavor, "c|n|r|R|cn|cr")->required();
  compare->add_option("--ak", cp_ak);
  compare->add_option("--report", cp_report, "report JSON output")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  std::string or_kind, or_spec, or_plant, or_out;
  int oracle_bound = 0;
  bool or_ctrl = false;
  oracle->add_option("kind", or_kind, "supc|supn|supr|supR|supcn|supcr|maxobs")
      ->required();
  oracle->add_option("--spec", or_spec)->required();
  oracle->add_option("--plant", or_plant)->required();
  oracle->add_option("-o,--out", or_out);
  oracle->add_option("--oracle-bound", oracle_bound,
                     "refined-pair state bound (default 16, 12 for maxobs)");
  oracle->add_flag("--with-controllability", or_ctrl,
                   "maxobs: require controllability as well");

  // gen
  auto* gen = app.add_subcommand("gen", "seeded random instance fixtures");
  unsigned long long gen_seed = 1;
  std::string gen_prefix;
  bool gen_modular = false;
  int gen_max_states = 5, gen_max_events = 4;
  double gen_unobs = 0.3, gen_uncont = 0.3;
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out-prefix", gen_prefix)->required();
  gen->add_flag("--modular", gen_modular);
  gen->add_option("--max-states", gen_max_states);
  gen->add_option("--max-events", gen_max_events);
  gen->add_option("--unobs-frac", gen_unobs);
  gen->add_option("--uncont-frac", gen_uncont);

  // dot
  auto* dot = app.add_subcommand("dot", "DOT export of a generator");
  std::string dot_in, dot_out;
  dot->add_option("--in", dot_in)->required();
  dot->add_option("-o,--out", dot_out);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "supctl: " << e.what() << "\n";
    return kExitError;
  }

  if (check->parsed()) {
    GenHandle spec = load(check_spec);
    GenHandle plant = load(check_plant);
    GenHandle ambient;
    if (!check_ambient.empty()) ambient = load(check_ambient);
    StrHandle witness;
    supctl_status status = supctl_check(check_kind.c_str(), spec.g, plant.g,
                                        ambient.g, &witness.s);
    if (status == SUPCTL_OK) {
      std::cout << (json_output ? "{\"ok\":true}" : "ok") << "\n";
      return kExitOk;
    }
    if (status == SUPCTL_VIOLATION) {
      std::cout << witness.str() << "\n";
      return kExitViolation;
    }
    die(supctl_last_error());
  }

  if (synth->parsed()) {
    GenHandle spec = load(synth_spec);
    GenHandle plant = load(synth_plant);
    GenHandle out;
    check_status(supctl_synthesize(synth_flavor.c_str(), spec.g, plant.g,
                                   ambient_plant ? 1 : 0, &out.g));
    emit_generator(out, synth_out, dot_output);
    return kExitOk;
  }

  if (realize->parsed()) {
    GenHandle target = load(realize_target);
    GenHandle plant = load(realize_plant);
    StrHandle sup;
    check_status(supctl_realize(target.g, plant.g, &sup.s));
    if (realize_out.empty()) {
      std::cout << sup.str() << "\n";
    } else {
      write_text(realize_out, sup.str() + "\n");
    }
    return kExitOk;
  }

  if (closedloop->parsed()) {
    std::string sup_json = read_file(cl_sup);
    GenHandle plant = load(cl_plant);
    GenHandle out;
    check_status(supctl_closed_loop(sup_json.c_str(), plant.g, &out.g));
    emit_generator(out, cl_out, dot_output);
    return kExitOk;
  }

  if (mutual->parsed()) {
    GenHandle l1 = load(mu_l1);
    GenHandle l2 = load(mu_l2);
    GenHandle k1, k2;
    if (!mu_k1.empty()) k1 = load(mu_k1);
    if (!mu_k2.empty()) k2 = load(mu_k2);
    std::string entries = read_alphabet_entries(mu_global);
    StrHandle witness;
    supctl_status status = supctl_mutual(mu_kind.c_str(), l1.g, l2.g, k1.g,
                                         k2.g, entries.c_str(), &witness.s);
    if (status == SUPCTL_OK) {
      std::cout << (json_output ? "{\"ok\":true}" : "ok") << "\n";
      return kExitOk;
    }
    if (status == SUPCTL_VIOLATION) {
      std::cout << witness.str() << "\n";
      return kExitViolation;
    }
    die(supctl_last_error());
  }

  if (coord->parsed()) {
    GenHandle g1 = load(co_g1);
    GenHandle g2 = load(co_g2);
    GenHandle spec = load(co_spec);
    GenHandle coordinator;
    StrHandle ak;
    check_status(supctl_coordinator(g1.g, g2.g, spec.g,
                                    co_ak.empty() ? nullptr : co_ak.c_str(),
                                    &coordinator.g, &ak.s));
    std::cout << (json_output ? "{\"ak\":" + ak.str() + "}" : ak.str())
              << "\n";
    if (!co_out.empty()) emit_generator(coordinator, co_out, dot_output);
    return kExitOk;
  }

  if (compare->parsed()) {
    GenHandle g1 = load(cp_g1);
    GenHandle g2 = load(cp_g2);
    GenHandle spec = load(cp_spec);
    StrHandle report;
    check_status(supctl_compare(g1.g, g2.g, spec.g, cp_flavor.c_str(),
                                cp_ak.empty() ? nullptr : cp_ak.c_str(),
                                max_len, &report.s));
    write_text(cp_report, report.str() + "\n");
    if (json_output) std::cout << report.str() << "\n";
    return kExitOk;
  }

  if (oracle->parsed()) {
    GenHandle spec = load(or_spec);
    GenHandle plant = load(or_plant);
    if (or_kind == "maxobs") {
      StrHandle gens;
      check_status(supctl_oracle_maxobs(spec.g, plant.g, or_ctrl ? 1 : 0,
                                        oracle_bound, &gens.s));
      if (or_out.empty()) {
        std::cout << gens.str() << "\n";
      } else {
        // One numbered .gen file per maximal element.
        nlohmann::json arr = nlohmann::json::parse(gens.str());
        for (std::size_t i = 0; i < arr.size(); ++i) {
          write_text(or_out + "." + std::to_string(i) + ".gen",
                     arr[i].get<std::string>());
        }
        std::cout << arr.size() << " maximal elements\n";
      }
      return kExitOk;
    }
    GenHandle out;
    check_status(supctl_oracle_supremal(or_kind.c_str(), spec.g, plant.g,
                                        oracle_bound, &out.g));
    emit_generator(out, or_out, dot_output);
    return kExitOk;
  }

  if (gen->parsed()) {
    nlohmann::json params{{"max_states", gen_max_states},
                          {"max_events", gen_max_events},
                          {"unobs_fraction", gen_unobs},
                          {"uncont_fraction", gen_uncont},
                          {"modular", gen_modular}};
    StrHandle instance;
    check_status(supctl_random_instance(gen_seed, params.dump().c_str(),
                                        &instance.s));
    nlohmann::json j = nlohmann::json::parse(instance.str());
    if (j["kind"] == "modular") {
      write_text(gen_prefix + "_g1.gen", j["g1"].get<std::string>());
      write_text(gen_prefix + "_g2.gen", j["g2"].get<std::string>());
      write_text(gen_prefix + "_spec.gen", j["spec"].get<std::string>());
      write_text(gen_prefix + "_global.alph",
                 "alphabet: " + j["global_alphabet"].get<std::string>() + "\n");
    } else {
      write_text(gen_prefix + "_spec.gen", j["spec"].get<std::string>());
      write_text(gen_prefix + "_plant.gen", j["plant"].get<std::string>());
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  if (dot->parsed()) {
    GenHandle g = load(dot_in);
    StrHandle text;
    check_status(supctl_gen_to_dot(g.g, &text.s));
    if (dot_out.empty()) {
      std::cout << text.str();
    } else {
      write_text(dot_out, text.str());
    }
    return kExitOk;
  }

  return kExitError;
}
