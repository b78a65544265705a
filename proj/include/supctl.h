/* supctl.h
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * C interface of the supctl shared library: supervisory control of modular
 * discrete-event systems. Objects are opaque handles; every function
 * returns a status code. String outputs are heap-allocated and must be
 * released with supctl_string_free. On any status other than SUPCTL_OK,
 * supctl_last_error() describes the problem (thread-local).
 */

#ifndef SUPCTL_H_
#define SUPCTL_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct supctl_gen supctl_gen; /* deterministic generator */

typedef enum {
  SUPCTL_OK = 0,
  SUPCTL_VIOLATION = 1,        /* property check failed; witness produced */
  SUPCTL_ERR_INPUT = 2,        /* bad arguments, parse errors, mismatches */
  SUPCTL_ERR_INCLUSION = 3,    /* a required language inclusion fails */
  SUPCTL_ERR_CONSISTENCY = 4,  /* event attribute flags disagree */
  SUPCTL_ERR_BOUND = 5,        /* oracle state bound exceeded */
  SUPCTL_ERR_INTERNAL = 6
} supctl_status;

const char* supctl_last_error(void);
void supctl_string_free(char* s);
void supctl_gen_free(supctl_gen* g);

/* --- generator I/O ------------------------------------------------------ */

supctl_status supctl_gen_parse_file(const char* path, supctl_gen** out);
supctl_status supctl_gen_parse_text(const char* text, supctl_gen** out);
supctl_status supctl_gen_serialize(const supctl_gen* g, char** out);
supctl_status supctl_gen_to_dot(const supctl_gen* g, char** out);
supctl_status supctl_gen_write_file(const supctl_gen* g, const char* path);
/* {"states":N,"transitions":N,"empty":bool,"alphabet":"a:co ..."} */
supctl_status supctl_gen_stats_json(const supctl_gen* g, char** out_json);
/* JSON array of words (each a JSON array of event names), |w| <= max_len */
supctl_status supctl_gen_enumerate_json(const supctl_gen* g, size_t max_len,
                                        char** out_json);

/* --- elementary and language operations --------------------------------- */

supctl_status supctl_gen_accessible(const supctl_gen* g, supctl_gen** out);
supctl_status supctl_gen_generates(const supctl_gen* g,
                                   const char* const* word, size_t len,
                                   int* out);
supctl_status supctl_sync_product(const supctl_gen* const* gs, size_t n,
                                  supctl_gen** out);
supctl_status supctl_natural_projection(const supctl_gen* g,
                                        const char* const* events, size_t n,
                                        supctl_gen** out);
/* alphabet_entries: payload of an `alphabet:` statement, e.g. "a:co b:" */
supctl_status supctl_inverse_projection(const supctl_gen* g,
                                        const char* alphabet_entries,
                                        supctl_gen** out);
supctl_status supctl_language_leq(const supctl_gen* a, const supctl_gen* b,
                                  int* holds, char** witness_json);
supctl_status supctl_refine_pair(const supctl_gen* spec,
                                 const supctl_gen* plant, supctl_gen** sub,
                                 supctl_gen** full);

/* --- property checks ----------------------------------------------------- */

/* kind: controllability | observability | normality | relobs.
 * relobs requires `ambient`; the others ignore it. Attribute sets are read
 * from the plant's alphabet flags. Returns SUPCTL_VIOLATION with a witness
 * JSON object when the property fails. */
supctl_status supctl_check(const char* kind, const supctl_gen* spec,
                           const supctl_gen* plant, const supctl_gen* ambient,
                           char** witness_json);

/* --- supremal synthesis --------------------------------------------------- */

/* flavor: supc | supn | supr | supR | supcn | supcr. ambient_plant != 0
 * switches supr's ambient from the specification to the plant. */
supctl_status supctl_synthesize(const char* flavor, const supctl_gen* spec,
                                const supctl_gen* plant, int ambient_plant,
                                supctl_gen** out);

/* --- supervisor runtime --------------------------------------------------- */

supctl_status supctl_realize(const supctl_gen* target, const supctl_gen* plant,
                             char** supervisor_json);
supctl_status supctl_closed_loop(const char* supervisor_json,
                                 const supctl_gen* plant, supctl_gen** out);

/* --- mutual conditions ---------------------------------------------------- */

/* kind: gmc | wgmc | mc | gmn | mn | gmk | glo. gmk needs k1 and k2.
 * global_alphabet_entries fixes the global event set and flags. */
supctl_status supctl_mutual(const char* kind, const supctl_gen* l1,
                            const supctl_gen* l2, const supctl_gen* k1,
                            const supctl_gen* k2,
                            const char* global_alphabet_entries,
                            char** witness_json);

/* --- coordination pipeline ------------------------------------------------ */

/* ak_csv: comma-separated coordinator events, or NULL to extend greedily.
 * ak_json receives the chosen coordinator alphabet as a JSON array. */
supctl_status supctl_coordinator(const supctl_gen* g1, const supctl_gen* g2,
                                 const supctl_gen* spec, const char* ak_csv,
                                 supctl_gen** coordinator, char** ak_json);
/* flavor: c | n | r | R | cn | cr. sample_max_len < 0 omits samples. */
supctl_status supctl_compare(const supctl_gen* g1, const supctl_gen* g2,
                             const supctl_gen* spec, const char* flavor,
                             const char* ak_csv, long sample_max_len,
                             char** report_json);

/* --- brute-force oracle --------------------------------------------------- */

supctl_status supctl_oracle_supremal(const char* flavor,
                                     const supctl_gen* spec,
                                     const supctl_gen* plant, int state_bound,
                                     supctl_gen** out);
/* JSON array of serialized generators (the maximal elements). */
supctl_status supctl_oracle_maxobs(const supctl_gen* spec,
                                   const supctl_gen* plant,
                                   int with_controllability, int state_bound,
                                   char** gens_json);

/* --- seeded instance generation ------------------------------------------- */

/* params_json keys (all optional): max_states, max_events, unobs_fraction,
 * uncont_fraction, min_unobs, min_uncont, transition_density,
 * spec_state_keep, spec_trans_keep, modular, shared_events.
 * Result: {"kind":"pair","spec":...,"plant":...} or
 * {"kind":"modular","g1":...,"g2":...,"spec":...} with serialized
 * generator texts. */
supctl_status supctl_random_instance(unsigned long long seed,
                                     const char* params_json,
                                     char** instance_json);

#ifdef __cplusplus
}
#endif

#endif /* SUPCTL_H_ */
