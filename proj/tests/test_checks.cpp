// test_checks.cpp
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "supctl/checks.hpp"
#include "supctl/lang_ops.hpp"
#include "supctl/random.hpp"
#include "test_util.hpp"

using namespace supctl;
using testutil::enum_set;
using testutil::prefix_tree;
using testutil::w;

namespace {

// Definition-by-enumeration for the three partial-observation properties.
// Quantifiers range over bounded slices; the bound is large enough for the
// small random instances these tests draw.
struct Defs {
  const Generator& spec;
  const Generator& plant;
  Projection obs;
  std::size_t bound;

  std::set<Word> k, l;

  Defs(const Generator& spec_in, const Generator& plant_in,
       const std::vector<std::string>& ao, std::size_t bound_in)
      : spec(spec_in),
        plant(plant_in),
        obs(plant_in.alphabet(), ao),
        bound(bound_in),
        k(enum_set(spec_in, bound_in)),
        l(enum_set(plant_in, bound_in)) {}

  bool controllable(const std::vector<std::string>& au) const {
    for (const Word& s : k) {
      for (const std::string& u : au) {
        Word su = s;
        su.push_back(u);
        if (plant.generates(su) && !spec.generates(su)) return false;
      }
    }
    return true;
  }

  bool rel_observable(const std::set<Word>& ambient) const {
    for (const Word& s : k) {
      for (const Word& t : ambient) {
        if (obs.apply(s) != obs.apply(t)) continue;
        for (const Event& e : plant.alphabet().events()) {
          Word sa = s, ta = t;
          sa.push_back(e.name);
          ta.push_back(e.name);
          if (spec.generates(sa) && plant.generates(ta) &&
              !spec.generates(ta)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool normal() const {
    for (const Word& t : l) {
      bool matched = false;
      for (const Word& s : k) {
        if (obs.apply(s) == obs.apply(t)) {
          matched = true;
          break;
        }
      }
      if (matched && !spec.generates(t)) return false;
    }
    return true;
  }
};

}  // namespace

TEST_CASE("controllability check: examples") {
  Alphabet au = Alphabet::parse_entries("a:co u:o");
  Generator k = prefix_tree(au, {w("a")});
  Generator l = prefix_tree(au, {w("a u")});
  CheckResult r = check_controllability(k, l, {"u"});
  REQUIRE(r.has_value());
  CHECK(r->kind == "controllability");
  CHECK(r->w == w("a"));
  CHECK(*r->event == "u");

  CHECK_FALSE(check_controllability(l, l, {"u"}).has_value());
  CHECK_FALSE(check_controllability(k, l, {}).has_value());
  CHECK_THROWS_AS(check_controllability(k, l, {"z"}), InputError);
  CHECK_THROWS_AS(check_controllability(l, k, {"u"}), InclusionError);
}

TEST_CASE("relative observability check: examples") {
  Alphabet at = Alphabet::parse_entries("a:co tau:c");
  Generator k = prefix_tree(at, {w("a"), w("tau")});
  Generator l = prefix_tree(at, {w("a"), w("tau a")});
  CheckResult r = check_rel_observability(k, k, l, {"a"});
  REQUIRE(r.has_value());
  CHECK(r->kind == "observability");
  CHECK(r->w == Word{});
  CHECK(*r->w_prime == w("tau"));
  CHECK(*r->event == "a");

  // Full observation: any K ⊆ L is observable.
  CHECK_FALSE(check_rel_observability(k, k, l, {"a", "tau"}).has_value());
  // Empty spec: vacuous.
  CHECK_FALSE(check_rel_observability(Generator::empty(at), k, l, {"a"})
                  .has_value());
}

TEST_CASE("normality check: examples") {
  Alphabet abt = Alphabet::parse_entries("a:co b:co tau:c");
  Generator k = prefix_tree(abt, {w("a")});
  Generator l = prefix_tree(abt, {w("a tau"), w("b")});
  CheckResult r = check_normality(k, l, {"a", "b"});
  REQUIRE(r.has_value());
  CHECK(r->kind == "normality");
  CHECK(r->w == w("a tau"));

  CHECK_FALSE(check_normality(k, l, {"a", "b", "tau"}).has_value());
  CHECK_FALSE(check_normality(l, l, {"a", "b"}).has_value());
}

TEST_CASE("observability delegates to relative observability with C = K") {
  Alphabet at = Alphabet::parse_entries("a:co tau:c");
  Generator k = prefix_tree(at, {w("a"), w("tau")});
  Generator l = prefix_tree(at, {w("a"), w("tau a")});
  CheckResult r = check_observability(k, l, {"a"});
  REQUIRE(r.has_value());
  CHECK(*r->w_prime == w("tau"));
  CHECK_FALSE(check_observability(l, l, {"a"}).has_value());
}

TEST_CASE("verifier verdicts match definition-by-enumeration") {
  InstanceParams params;
  params.max_states = 4;
  params.max_events = 4;
  int violations_seen = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    PairInstance inst = random_pair(seed, params);
    const Alphabet& alphabet = inst.plant.alphabet();
    std::vector<std::string> au = alphabet.uncontrollable_names();
    std::vector<std::string> ao = alphabet.observable_names();
    std::size_t bound = static_cast<std::size_t>(
        std::max(1, inst.spec.num_states()) *
            std::max(1, inst.plant.num_states()) +
        1);
    bound = std::min<std::size_t>(bound, 9);
    // Keep the quantifier ranges small enough for the O(|K|·|L|) scan.
    while (bound > 3 && enum_set(inst.plant, bound).size() > 400) --bound;
    Defs defs(inst.spec, inst.plant, ao, bound);

    CHECK(defs.controllable(au) ==
          !check_controllability(inst.spec, inst.plant, au).has_value());
    CHECK(defs.normal() ==
          !check_normality(inst.spec, inst.plant, ao).has_value());
    bool obs_ok = !check_observability(inst.spec, inst.plant, ao).has_value();
    CHECK(defs.rel_observable(defs.k) == obs_ok);
    bool lobs_ok =
        !check_rel_observability(inst.spec, inst.plant, inst.plant, ao)
             .has_value();
    CHECK(defs.rel_observable(defs.l) == lobs_ok);
    if (!obs_ok) ++violations_seen;

    // Hierarchy: normality implies observability; L-ambient relative
    // observability implies plain observability.
    if (defs.normal()) CHECK(obs_ok);
    if (lobs_ok) CHECK(obs_ok);
  }
  // The instance distribution must exercise both verdicts.
  CHECK(violations_seen > 5);
}

TEST_CASE("witnesses replay against the definitions") {
  InstanceParams params;
  params.max_states = 4;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    PairInstance inst = random_pair(seed, params);
    const Alphabet& alphabet = inst.plant.alphabet();
    std::vector<std::string> au = alphabet.uncontrollable_names();
    std::vector<std::string> ao = alphabet.observable_names();
    Projection obs(alphabet, ao);

    if (CheckResult r = check_controllability(inst.spec, inst.plant, au)) {
      Word wu = r->w;
      wu.push_back(*r->event);
      CHECK(inst.spec.generates(r->w));
      CHECK(inst.plant.generates(wu));
      CHECK_FALSE(inst.spec.generates(wu));
    }
    if (CheckResult r = check_observability(inst.spec, inst.plant, ao)) {
      Word wa = r->w, wpa = *r->w_prime;
      CHECK(obs.apply(r->w) == obs.apply(*r->w_prime));
      CHECK(inst.spec.generates(*r->w_prime));  // w' in C = K
      wa.push_back(*r->event);
      wpa.push_back(*r->event);
      CHECK(inst.spec.generates(wa));
      CHECK(inst.plant.generates(wpa));
      CHECK_FALSE(inst.spec.generates(wpa));
    }
    if (CheckResult r = check_normality(inst.spec, inst.plant, ao)) {
      // w ∈ O^{-1}O(K) ∩ L \ K.
      CHECK(inst.plant.generates(r->w));
      CHECK_FALSE(inst.spec.generates(r->w));
      bool matched = false;
      for (const Word& s : enum_set(inst.spec, r->w.size() + 3)) {
        if (obs.apply(s) == obs.apply(r->w)) {
          matched = true;
          break;
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("relative observability containment relaxation") {
  // The ambient need not contain the spec: C and K incomparable is fine.
  // tau is unobservable, so the ambient string tau pairs with eps; it
  // extends by a inside L but the extension is outside K: violation.
  Alphabet at = Alphabet::parse_entries("a:co b:co tau:c");
  Generator k = prefix_tree(at, {w("a")});
  Generator c = prefix_tree(at, {w("tau b")});
  Generator l = prefix_tree(at, {w("a"), w("tau b"), w("tau a")});
  CheckResult r = check_rel_observability(k, c, l, {"a", "b"});
  REQUIRE(r.has_value());
  CHECK(r->w == Word{});
  CHECK(*r->w_prime == w("tau"));
  CHECK(*r->event == "a");
  // Under full observation the pairing disappears.
  CHECK_FALSE(check_rel_observability(k, c, l, {"a", "b", "tau"}).has_value());
}
