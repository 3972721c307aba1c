#include "pcfa.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "automata.hpp"
#include "census.hpp"
#include "fooling.hpp"
#include "lang_ops.hpp"
#include "reports.hpp"
#include "text_format.hpp"
#include "witnesses.hpp"

using namespace pcfa;

struct pcfa_automaton {
    Automaton a;
};

struct pcfa_certificate {
    FoolingCertificate c;
};

namespace {

thread_local std::string g_last_error;

pcfa_status status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse: return PCFA_ERR_PARSE;
        case ErrorKind::Precondition: return PCFA_ERR_PRECONDITION;
        case ErrorKind::Verification: return PCFA_ERR_VERIFICATION;
        case ErrorKind::Internal: return PCFA_ERR_INTERNAL;
    }
    return PCFA_ERR_INTERNAL;
}

template <class F>
pcfa_status guarded(F&& f) {
    try {
        f();
        return PCFA_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PCFA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PCFA_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string word_arg(const char* w) {
    if (w == nullptr) throw_precondition("word must not be NULL");
    return parse_word(w);
}

const Automaton& deref(const pcfa_automaton* a) {
    if (a == nullptr) throw_precondition("automaton handle is NULL");
    return a->a;
}

const FoolingCertificate& deref(const pcfa_certificate* c) {
    if (c == nullptr) throw_precondition("certificate handle is NULL");
    return c->c;
}

ReconstructOptions budget_opts(uint64_t budget) {
    ReconstructOptions o;
    if (budget > 0) o.budget = budget;
    return o;
}

}  // namespace

extern "C" {

const char* pcfa_version(void) { return "1.0.0"; }

const char* pcfa_last_error(void) { return g_last_error.c_str(); }

void pcfa_string_free(char* s) { std::free(s); }

pcfa_status pcfa_automaton_parse(const char* text, pcfa_automaton** out) {
    return guarded([&] {
        if (!text) throw_precondition("text must not be NULL");
        *out = new pcfa_automaton{parse_automaton(text)};
    });
}

pcfa_status pcfa_automaton_read(const char* path, pcfa_automaton** out) {
    return guarded([&] {
        if (!path) throw_precondition("path must not be NULL");
        *out = new pcfa_automaton{read_automaton(path)};
    });
}

pcfa_status pcfa_automaton_to_text(const pcfa_automaton* a, char** out) {
    return guarded([&] { *out = dup_string(to_text(deref(a))); });
}

pcfa_status pcfa_automaton_to_dot(const pcfa_automaton* a, char** out) {
    return guarded([&] { *out = dup_string(to_dot(deref(a))); });
}

pcfa_status pcfa_automaton_write(const pcfa_automaton* a, const char* path) {
    return guarded([&] {
        if (!path) throw_precondition("path must not be NULL");
        write_automaton(deref(a), path);
    });
}

pcfa_status pcfa_automaton_clone(const pcfa_automaton* a, pcfa_automaton** out) {
    return guarded([&] { *out = new pcfa_automaton{deref(a)}; });
}

void pcfa_automaton_free(pcfa_automaton* a) { delete a; }

int64_t pcfa_automaton_states(const pcfa_automaton* a) {
    return a ? static_cast<int64_t>(a->a.states()) : -1;
}

const char* pcfa_automaton_kind(const pcfa_automaton* a) {
    if (!a) return "?";
    return kind_name(a->a.kind()).data();
}

pcfa_status pcfa_automaton_alphabet(const pcfa_automaton* a, char** out) {
    return guarded([&] { *out = dup_string(deref(a).alphabet().symbols); });
}

pcfa_status pcfa_accepts(const pcfa_automaton* a, const char* word, int* out) {
    return guarded([&] { *out = accepts(deref(a), word_arg(word)) ? 1 : 0; });
}

pcfa_status pcfa_determinize(const pcfa_automaton* a, pcfa_automaton** out) {
    return guarded([&] { *out = new pcfa_automaton{Automaton(determinize(deref(a).to_nfa()))}; });
}

pcfa_status pcfa_complete(const pcfa_automaton* a, pcfa_automaton** out) {
    return guarded([&] {
        const Automaton& x = deref(a);
        Idfa d = x.deterministic() ? x.to_idfa() : determinize(x.to_nfa());
        *out = new pcfa_automaton{Automaton(complete(d))};
    });
}

pcfa_status pcfa_minimize(const pcfa_automaton* a, pcfa_automaton** out) {
    return guarded([&] {
        const Automaton& x = deref(a);
        Idfa d = x.deterministic() ? x.to_idfa() : determinize(x.to_nfa());
        *out = new pcfa_automaton{Automaton(minimize_idfa(d))};
    });
}

pcfa_status pcfa_isc(const pcfa_automaton* a, uint64_t* out) {
    return guarded([&] { *out = isc(deref(a)); });
}

pcfa_status pcfa_sc(const pcfa_automaton* a, uint64_t* out) {
    return guarded([&] { *out = sc(deref(a)); });
}

pcfa_status pcfa_equivalent(const pcfa_automaton* a, const pcfa_automaton* b, int* out) {
    return guarded([&] { *out = equivalent(deref(a), deref(b)) ? 1 : 0; });
}

pcfa_status pcfa_is_prefix_closed(const pcfa_automaton* a, int* out) {
    return guarded([&] { *out = is_prefix_closed(deref(a)) ? 1 : 0; });
}

pcfa_status pcfa_canonical_form(const pcfa_automaton* a, int permute_alphabet, char** out) {
    return guarded([&] {
        const Automaton& x = deref(a);
        Idfa d = x.deterministic() ? x.to_idfa() : determinize(x.to_nfa());
        Cdfa c = complete(trim(d));
        *out = dup_string(canonical_form(c, permute_alphabet != 0));
    });
}

pcfa_status pcfa_apply_op(const char* op, const pcfa_automaton* a, const pcfa_automaton* b,
                          pcfa_automaton** out, pcfa_op_stats* stats) {
    return guarded([&] {
        if (!op) throw_precondition("op must not be NULL");
        OpResult r = apply_op(lang_op_from_name(op), deref(a), b ? &b->a : nullptr);
        if (stats) {
            stats->construction_states = r.construction_states;
            stats->upper_bound = r.upper_bound;
        }
        *out = new pcfa_automaton{std::move(r.automaton)};
    });
}

pcfa_status pcfa_make_witness(const char* family, uint64_t m, uint64_t n, uint64_t budget,
                              pcfa_automaton** k_out, pcfa_automaton** l_out) {
    return guarded([&] {
        if (!family) throw_precondition("family must not be NULL");
        WitnessSpec spec{witness_family_from_name(family), m, n};
        Witness w = make_witness(spec, budget_opts(budget));
        if (k_out) *k_out = new pcfa_automaton{std::move(w.K)};
        if (l_out) *l_out = w.L ? new pcfa_automaton{std::move(*w.L)} : nullptr;
    });
}

pcfa_status pcfa_validate_witness(const char* family, uint64_t m, uint64_t n, uint64_t budget,
                                  int* ok, char** report) {
    return guarded([&] {
        if (!family) throw_precondition("family must not be NULL");
        WitnessSpec spec{witness_family_from_name(family), m, n};
        Witness w = make_witness(spec, budget_opts(budget));
        ValidationReport r = validate_witness(spec, w);
        if (ok) *ok = r.ok ? 1 : 0;
        if (report) *report = dup_string(r.to_text());
    });
}

pcfa_status pcfa_certificate_parse(const char* text, pcfa_certificate** out) {
    return guarded([&] {
        if (!text) throw_precondition("text must not be NULL");
        *out = new pcfa_certificate{parse_certificate(text)};
    });
}

pcfa_status pcfa_certificate_read(const char* path, pcfa_certificate** out) {
    return guarded([&] {
        if (!path) throw_precondition("path must not be NULL");
        *out = new pcfa_certificate{read_certificate(path)};
    });
}

pcfa_status pcfa_certificate_to_text(const pcfa_certificate* c, char** out) {
    return guarded([&] { *out = dup_string(certificate_to_text(deref(c))); });
}

void pcfa_certificate_free(pcfa_certificate* c) { delete c; }

uint64_t pcfa_certificate_bound(const pcfa_certificate* c) { return c ? c->c.bound() : 0; }

int pcfa_certificate_extended(const pcfa_certificate* c) {
    return c && c->c.extended ? 1 : 0;
}

pcfa_status pcfa_fooling_family(const char* theorem, uint64_t m, uint64_t n,
                                   pcfa_certificate** out) {
    return guarded([&] {
        if (!theorem) throw_precondition("theorem must not be NULL");
        *out = new pcfa_certificate{fooling_set_family(fooling_family_from_name(theorem), m, n)};
    });
}

pcfa_status pcfa_fooling_check(const pcfa_automaton* lang, const pcfa_certificate* c, int* ok,
                               uint64_t* bound, char** detail) {
    return guarded([&] {
        FoolingVerdict v = check_certificate(deref(lang), deref(c));
        if (ok) *ok = v.ok ? 1 : 0;
        if (bound) *bound = v.bound;
        if (detail) *detail = dup_string(v.ok ? "" : v.violation->to_text());
    });
}

pcfa_status pcfa_fooling_search(const pcfa_automaton* lang, uint32_t max_pairs, uint32_t max_len,
                                int extended, uint64_t seed, pcfa_certificate** out,
                                int* truncated) {
    return guarded([&] {
        SearchOptions opts;
        if (max_pairs > 0) opts.max_pairs = max_pairs;
        if (max_len > 0) opts.max_len = max_len;
        opts.extended = extended != 0;
        opts.seed = seed;
        bool capped = false;
        *out = new pcfa_certificate{search_fooling(deref(lang), opts, &capped)};
        if (truncated) *truncated = capped ? 1 : 0;
    });
}

pcfa_status pcfa_bound(const char* theorem, uint64_t m, uint64_t n, uint64_t budget,
                       const char* format, char** report, const char** status_out) {
    return guarded([&] {
        if (!theorem) throw_precondition("theorem must not be NULL");
        Theorem t = theorem_from_name(theorem);
        BoundReport r = run_bound(t, m, n, budget_opts(budget));
        if (report) *report = dup_string(r.render(format_from_name(format ? format : "text")));
        if (status_out) {
            if (r.status == "tight") *status_out = "tight";
            else if (r.status == "gap") *status_out = "gap";
            else *status_out = "fail";
        }
    });
}

pcfa_status pcfa_census(uint64_t n, uint64_t k, int permute_alphabet, const char* format,
                        char** out) {
    return guarded([&] {
        CensusTable t = star_census(n, k == 0 ? 2 : k, permute_alphabet != 0);
        *out = dup_string(render_census(t, format_from_name(format ? format : "csv")));
    });
}

pcfa_status pcfa_prop3_check(uint64_t n, uint64_t* count, int* star_is_b_star, char** report) {
    return guarded([&] {
        Prop3Result r = prop3_check(n);
        if (count) *count = r.count;
        if (star_is_b_star) *star_is_b_star = r.star_is_b_star ? 1 : 0;
        if (report) {
            std::ostringstream out;
            out << "languages with sc(L)=" << n << " and sc(L*)=2: " << r.count << "\n";
            out << "star equals b* (up to symbol renaming): " << (r.star_is_b_star ? "yes" : "no")
                << "\n";
            out << "representative is the b-chain language: "
                << (r.matches_chain_witness ? "yes" : "no") << "\n";
            out << "RESULT prop3 n=" << n << " count=" << r.count
                << " star_is_b_star=" << (r.star_is_b_star ? 1 : 0) << "\n";
            *report = dup_string(out.str());
        }
    });
}

}  // extern "C"
