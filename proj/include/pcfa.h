/* pcfa -- prefix-closed finite automata: state-complexity constructions,
 * witness families, fooling-set certificates and an exhaustive star census.
 *
 * C interface of the shared library. All objects are opaque handles; every
 * fallible call returns a pcfa_status and stores a message retrievable with
 * pcfa_last_error() on failure. Strings returned through char** are
 * malloc'd; release them with pcfa_string_free().
 */
#ifndef PCFA_H
#define PCFA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef PCFA_API
#if defined(_WIN32)
#define PCFA_API __declspec(dllexport)
#else
#define PCFA_API __attribute__((visibility("default")))
#endif
#endif

typedef enum pcfa_status {
    PCFA_OK = 0,
    PCFA_ERR_INTERNAL = 1,
    PCFA_ERR_PARSE = 2,         /* malformed file or text */
    PCFA_ERR_PRECONDITION = 3,  /* contract violated by the inputs */
    PCFA_ERR_VERIFICATION = 4,  /* a certified check or reconstruction failed */
} pcfa_status;

typedef struct pcfa_automaton pcfa_automaton;
typedef struct pcfa_certificate pcfa_certificate;

PCFA_API const char* pcfa_version(void);

/* Message for the most recent failure on this thread. */
PCFA_API const char* pcfa_last_error(void);

PCFA_API void pcfa_string_free(char* s);

/* ---- automata ---------------------------------------------------------- */

/* Text format (one automaton per file):
 *   type: nfa | idfa | cdfa
 *   alphabet: a b c
 *   states: 4
 *   initial: 0            (space-separated list for nfa)
 *   final: 0 1 2 3
 *   trans: 0 a 1          (one line per transition)
 */
PCFA_API pcfa_status pcfa_automaton_parse(const char* text, pcfa_automaton** out);
PCFA_API pcfa_status pcfa_automaton_read(const char* path, pcfa_automaton** out);
PCFA_API pcfa_status pcfa_automaton_to_text(const pcfa_automaton* a, char** out);
PCFA_API pcfa_status pcfa_automaton_to_dot(const pcfa_automaton* a, char** out);
PCFA_API pcfa_status pcfa_automaton_write(const pcfa_automaton* a, const char* path);
PCFA_API pcfa_status pcfa_automaton_clone(const pcfa_automaton* a, pcfa_automaton** out);
PCFA_API void pcfa_automaton_free(pcfa_automaton* a);

PCFA_API int64_t pcfa_automaton_states(const pcfa_automaton* a);
/* "nfa", "idfa" or "cdfa" (static string). */
PCFA_API const char* pcfa_automaton_kind(const pcfa_automaton* a);
PCFA_API pcfa_status pcfa_automaton_alphabet(const pcfa_automaton* a, char** out);

/* word uses one character per symbol; "-" is the empty word */
PCFA_API pcfa_status pcfa_accepts(const pcfa_automaton* a, const char* word, int* out);

PCFA_API pcfa_status pcfa_determinize(const pcfa_automaton* a, pcfa_automaton** out);
PCFA_API pcfa_status pcfa_complete(const pcfa_automaton* a, pcfa_automaton** out);
/* minimal incomplete DFA (0 states for the empty language) */
PCFA_API pcfa_status pcfa_minimize(const pcfa_automaton* a, pcfa_automaton** out);
PCFA_API pcfa_status pcfa_isc(const pcfa_automaton* a, uint64_t* out);
PCFA_API pcfa_status pcfa_sc(const pcfa_automaton* a, uint64_t* out);
PCFA_API pcfa_status pcfa_equivalent(const pcfa_automaton* a, const pcfa_automaton* b, int* out);
PCFA_API pcfa_status pcfa_is_prefix_closed(const pcfa_automaton* a, int* out);
PCFA_API pcfa_status pcfa_canonical_form(const pcfa_automaton* a, int permute_alphabet,
                                         char** out);

/* ---- operation constructions ------------------------------------------- */

/* op: complement intersect union union-nfa concat star reverse.
 * b must be NULL for unary operations. stats may be NULL. */
typedef struct pcfa_op_stats {
    uint64_t construction_states;
    uint64_t upper_bound;
} pcfa_op_stats;

PCFA_API pcfa_status pcfa_apply_op(const char* op, const pcfa_automaton* a,
                                   const pcfa_automaton* b, pcfa_automaton** out,
                                   pcfa_op_stats* stats);

/* ---- witness families --------------------------------------------------- */

/* family: complement-unary complement-nsc intersection union-isc-product
 * union-nsc concat-isc concat-nsc star-isc star-prop3 reversal-isc
 * star-reversal-nsc. Two-automaton families fill *l_out, others set it to
 * NULL (l_out may be NULL if the caller does not want it; budget 0 means the
 * default reconstruction budget). */
PCFA_API pcfa_status pcfa_make_witness(const char* family, uint64_t m, uint64_t n,
                                       uint64_t budget, pcfa_automaton** k_out,
                                       pcfa_automaton** l_out);
PCFA_API pcfa_status pcfa_validate_witness(const char* family, uint64_t m, uint64_t n,
                                           uint64_t budget, int* ok, char** report);

/* ---- fooling-set certificates ------------------------------------------ */

/* Certificate file format:
 *   fooling: plain|extended
 *   claimed: 7
 *   pair: x y              (the empty word is "-")
 * extended certificates put pair lines under "A:" / "B:" headers and add
 *   u: ...
 *   v: ...
 */
PCFA_API pcfa_status pcfa_certificate_parse(const char* text, pcfa_certificate** out);
PCFA_API pcfa_status pcfa_certificate_read(const char* path, pcfa_certificate** out);
PCFA_API pcfa_status pcfa_certificate_to_text(const pcfa_certificate* c, char** out);
PCFA_API void pcfa_certificate_free(pcfa_certificate* c);
PCFA_API uint64_t pcfa_certificate_bound(const pcfa_certificate* c);
PCFA_API int pcfa_certificate_extended(const pcfa_certificate* c);

/* theorem: complement-nsc intersection-nsc union-nsc concat-nsc star-nsc
 * reversal-nsc */
PCFA_API pcfa_status pcfa_fooling_family(const char* theorem, uint64_t m, uint64_t n,
                                            pcfa_certificate** out);

/* ok=1 certifies: every NFA for the language needs >= bound states (plain),
 * or every single-initial NFA needs >= bound states (extended). On ok=0,
 * *detail names the violated condition and the offending pairs. */
PCFA_API pcfa_status pcfa_fooling_check(const pcfa_automaton* lang, const pcfa_certificate* c,
                                        int* ok, uint64_t* bound, char** detail);

/* truncated (nullable) is set to 1 when the candidate pool hit its internal
 * cap and the search was partial. */
PCFA_API pcfa_status pcfa_fooling_search(const pcfa_automaton* lang, uint32_t max_pairs,
                                         uint32_t max_len, int extended, uint64_t seed,
                                         pcfa_certificate** out, int* truncated);

/* ---- bound reports and census ------------------------------------------ */

/* theorem: complement-isc complement-nsc intersection-isc intersection-nsc
 * union-isc union-nsc concat-isc concat-nsc star-isc star-nsc reversal-isc
 * reversal-nsc; format: text csv json-lines; status_out: "tight", "gap" or
 * "fail" (static strings). */
PCFA_API pcfa_status pcfa_bound(const char* theorem, uint64_t m, uint64_t n, uint64_t budget,
                                const char* format, char** report, const char** status_out);

PCFA_API pcfa_status pcfa_census(uint64_t n, uint64_t k, int permute_alphabet,
                                 const char* format, char** out);

PCFA_API pcfa_status pcfa_prop3_check(uint64_t n, uint64_t* count, int* star_is_b_star,
                                      char** report);

#ifdef __cplusplus
}
#endif

#endif /* PCFA_H */
