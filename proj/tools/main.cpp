// pcfa command-line tool: operation constructions, tightness reports,
// fooling-set certificates, witness generators and the star census, on top of
// the C API of libpcfa.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcfa.h"

namespace {

int exit_code(pcfa_status s) {
    switch (s) {
        case PCFA_OK: return 0;
        case PCFA_ERR_PARSE: return 2;
        case PCFA_ERR_PRECONDITION: return 3;
        case PCFA_ERR_VERIFICATION: return 4;
        default: return 1;
    }
}

[[noreturn]] void die(pcfa_status s) {
    std::fprintf(stderr, "error: %s\n", pcfa_last_error());
    std::exit(exit_code(s));
}

void check(pcfa_status s) {
    if (s != PCFA_OK) die(s);
}

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    Handle() = default;
    Handle(Handle&& o) noexcept : p(o.p) { o.p = nullptr; }
    Handle& operator=(Handle&& o) noexcept {
        if (this != &o) {
            Free(p);
            p = o.p;
            o.p = nullptr;
        }
        return *this;
    }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(p); }
};

using AutomatonHandle = Handle<pcfa_automaton, pcfa_automaton_free>;
using CertificateHandle = Handle<pcfa_certificate, pcfa_certificate_free>;

struct OwnedString {
    char* p = nullptr;
    OwnedString() = default;
    OwnedString(const OwnedString&) = delete;
    OwnedString& operator=(const OwnedString&) = delete;
    ~OwnedString() { pcfa_string_free(p); }
    const char* get() const { return p ? p : ""; }
};

AutomatonHandle load(const std::string& path) {
    AutomatonHandle h;
    check(pcfa_automaton_read(path.c_str(), &h.p));
    return h;
}

void emit_automaton(const pcfa_automaton* a, const std::string& out_path,
                    const std::string& dot_path) {
    if (!out_path.empty()) check(pcfa_automaton_write(a, out_path.c_str()));
    if (!dot_path.empty()) {
        OwnedString dot;
        check(pcfa_automaton_to_dot(a, &dot.p));
        FILE* f = std::fopen(dot_path.c_str(), "w");
        if (!f) {
            std::fprintf(stderr, "error: cannot write \"%s\"\n", dot_path.c_str());
            std::exit(2);
        }
        std::fputs(dot.get(), f);
        std::fclose(f);
    }
}

void write_or_print(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) {
        std::fprintf(stderr, "error: cannot write \"%s\"\n", out_path.c_str());
        std::exit(2);
    }
    std::fputs(content.c_str(), f);
    std::fclose(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-complexity experiments on prefix-closed regular languages"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format: text, csv or json-lines")
        ->capture_default_str();
    uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized search order");
    uint64_t budget = 0;
    app.add_option("--budget", budget, "candidate budget for witness reconstruction");

    // ops -----------------------------------------------------------------
    auto* ops = app.add_subcommand("ops", "run an operation construction on automaton files");
    std::string op_name;
    std::vector<std::string> op_inputs;
    std::string out_path, dot_path;
    ops->add_option("op", op_name,
                    "complement, intersect, union, union-nfa, concat, star or reverse")
        ->required();
    ops->add_option("inputs", op_inputs, "input automaton file(s)")->required()->expected(1, 2);
    ops->add_option("--out", out_path, "write the result automaton here");
    ops->add_option("--emit-dot", dot_path, "write a graphviz rendering of the result");
    ops->callback([&] {
        AutomatonHandle a = load(op_inputs[0]);
        AutomatonHandle b;
        if (op_inputs.size() == 2) b = load(op_inputs[1]);
        AutomatonHandle result;
        pcfa_op_stats stats{};
        check(pcfa_apply_op(op_name.c_str(), a.p, b.p, &result.p, &stats));
        uint64_t r_isc = 0, r_sc = 0;
        check(pcfa_isc(result.p, &r_isc));
        check(pcfa_sc(result.p, &r_sc));
        emit_automaton(result.p, out_path, dot_path);
        if (format == "csv") {
            std::printf("op,construction_states,upper_bound,isc,sc\n%s,%llu,%llu,%llu,%llu\n",
                        op_name.c_str(), (unsigned long long)stats.construction_states,
                        (unsigned long long)stats.upper_bound, (unsigned long long)r_isc,
                        (unsigned long long)r_sc);
        } else if (format == "json-lines") {
            std::printf("{\"op\":\"%s\",\"construction_states\":%llu,\"upper_bound\":%llu,"
                        "\"isc\":%llu,\"sc\":%llu}\n",
                        op_name.c_str(), (unsigned long long)stats.construction_states,
                        (unsigned long long)stats.upper_bound, (unsigned long long)r_isc,
                        (unsigned long long)r_sc);
        } else {
            std::printf("construction states: %llu (bound %llu)\nisc: %llu\nsc:  %llu\n",
                        (unsigned long long)stats.construction_states,
                        (unsigned long long)stats.upper_bound, (unsigned long long)r_isc,
                        (unsigned long long)r_sc);
            std::printf("RESULT op=%s construction_states=%llu upper_bound=%llu isc=%llu sc=%llu\n",
                        op_name.c_str(), (unsigned long long)stats.construction_states,
                        (unsigned long long)stats.upper_bound, (unsigned long long)r_isc,
                        (unsigned long long)r_sc);
        }
    });

    // complexity ------------------------------------------------------------
    auto* cx = app.add_subcommand("complexity", "isc and sc of an automaton file");
    std::string cx_file;
    cx->add_option("file", cx_file)->required();
    cx->callback([&] {
        AutomatonHandle a = load(cx_file);
        uint64_t v_isc = 0, v_sc = 0;
        int pc = 0;
        check(pcfa_isc(a.p, &v_isc));
        check(pcfa_sc(a.p, &v_sc));
        check(pcfa_is_prefix_closed(a.p, &pc));
        const char* kind = pcfa_automaton_kind(a.p);
        long long states = (long long)pcfa_automaton_states(a.p);
        if (format == "csv") {
            std::printf("file,kind,states,isc,sc,prefix_closed\n%s,%s,%lld,%llu,%llu,%d\n",
                        cx_file.c_str(), kind, states, (unsigned long long)v_isc,
                        (unsigned long long)v_sc, pc);
        } else if (format == "json-lines") {
            std::printf("{\"file\":\"%s\",\"kind\":\"%s\",\"states\":%lld,\"isc\":%llu,"
                        "\"sc\":%llu,\"prefix_closed\":%s}\n",
                        cx_file.c_str(), kind, states, (unsigned long long)v_isc,
                        (unsigned long long)v_sc, pc ? "true" : "false");
        } else {
            std::printf("kind:   %s\nstates: %lld\nisc:    %llu\nsc:     %llu\nprefix-closed: %s\n",
                        kind, states, (unsigned long long)v_isc, (unsigned long long)v_sc,
                        pc ? "yes" : "no");
            std::printf("RESULT complexity file=%s states=%lld isc=%llu sc=%llu prefix_closed=%d\n",
                        cx_file.c_str(), states, (unsigned long long)v_isc,
                        (unsigned long long)v_sc, pc);
        }
    });

    // check-prefix-closed ----------------------------------------------------
    auto* pcc = app.add_subcommand("check-prefix-closed",
                                   "test whether the language of a file is prefix-closed");
    std::string pcc_file;
    pcc->add_option("file", pcc_file)->required();
    pcc->callback([&] {
        AutomatonHandle a = load(pcc_file);
        int pc = 0;
        check(pcfa_is_prefix_closed(a.p, &pc));
        std::printf("prefix-closed: %s\nRESULT check_prefix_closed file=%s prefix_closed=%d\n",
                    pc ? "yes" : "no", pcc_file.c_str(), pc);
    });

    // witness -----------------------------------------------------------------
    auto* wit = app.add_subcommand("witness", "generate (and optionally validate) a witness family");
    std::string family;
    uint64_t wm = 0, wn = 0;
    std::string emit_k, emit_l;
    bool do_validate = false;
    wit->add_option("family", family,
                    "complement-unary complement-nsc intersection union-isc-product union-nsc "
                    "concat-isc concat-nsc star-isc star-prop3 reversal-isc star-reversal-nsc")
        ->required();
    wit->add_option("--m", wm, "left parameter (two-automaton families)");
    wit->add_option("--n", wn, "state-count parameter")->required();
    wit->add_option("--emit", emit_k, "write K (or the single automaton) here");
    wit->add_option("--emit-l", emit_l, "write L here (two-automaton families)");
    wit->add_flag("--validate", do_validate, "run the full validation report");
    wit->callback([&] {
        AutomatonHandle k, l;
        check(pcfa_make_witness(family.c_str(), wm, wn, budget, &k.p, &l.p));
        if (!emit_k.empty()) check(pcfa_automaton_write(k.p, emit_k.c_str()));
        if (!emit_l.empty() && l.p) check(pcfa_automaton_write(l.p, emit_l.c_str()));
        std::printf("K: %lld states", (long long)pcfa_automaton_states(k.p));
        if (l.p) std::printf("; L: %lld states", (long long)pcfa_automaton_states(l.p));
        std::printf("\n");
        if (do_validate) {
            int ok = 0;
            OwnedString report;
            check(pcfa_validate_witness(family.c_str(), wm, wn, budget, &ok, &report.p));
            std::fputs(report.get(), stdout);
            std::printf("RESULT witness family=%s m=%llu n=%llu valid=%d\n", family.c_str(),
                        (unsigned long long)wm, (unsigned long long)wn, ok);
            if (!ok) std::exit(4);
        }
    });

    // fooling ----------------------------------------------------------------
    auto* fool = app.add_subcommand("fooling", "check or search fooling-set certificates");
    auto* fool_check = fool->add_subcommand("check", "validate a certificate file");
    std::string f_lang, f_cert;
    fool_check->add_option("language", f_lang, "automaton file")->required();
    fool_check->add_option("certificate", f_cert, "certificate file")->required();
    fool_check->callback([&] {
        AutomatonHandle lang = load(f_lang);
        CertificateHandle cert;
        check(pcfa_certificate_read(f_cert.c_str(), &cert.p));
        int ok = 0;
        uint64_t bound = 0;
        OwnedString detail;
        check(pcfa_fooling_check(lang.p, cert.p, &ok, &bound, &detail.p));
        bool extended = pcfa_certificate_extended(cert.p) != 0;
        if (ok) {
            if (extended)
                std::printf("valid, nsc >= %llu\n", (unsigned long long)bound);
            else
                std::printf("valid, bound %llu\n", (unsigned long long)bound);
        } else {
            std::printf("invalid: %s\n", detail.get());
        }
        std::printf("RESULT fooling_check language=%s certificate=%s valid=%d bound=%llu\n",
                    f_lang.c_str(), f_cert.c_str(), ok, (unsigned long long)bound);
        if (!ok) std::exit(4);
    });
    auto* fool_search = fool->add_subcommand("search", "search for a fooling set");
    std::string s_lang, s_out;
    uint32_t max_pairs = 8, max_len = 4;
    bool want_extended = false;
    fool_search->add_option("language", s_lang, "automaton file")->required();
    fool_search->add_option("--max-pairs", max_pairs)->capture_default_str();
    fool_search->add_option("--max-len", max_len)->capture_default_str();
    fool_search->add_flag("--extended", want_extended, "also look for an (A,B,u,v) split");
    fool_search->add_option("--out", s_out, "write the certificate here");
    fool_search->callback([&] {
        AutomatonHandle lang = load(s_lang);
        CertificateHandle cert;
        int truncated = 0;
        check(pcfa_fooling_search(lang.p, max_pairs, max_len, want_extended ? 1 : 0, seed,
                                  &cert.p, &truncated));
        OwnedString text;
        check(pcfa_certificate_to_text(cert.p, &text.p));
        write_or_print(s_out, text.get());
        if (truncated)
            std::fprintf(stderr, "note: candidate pool hit its cap; the search was partial\n");
        std::printf("RESULT fooling_search language=%s bound=%llu extended=%d truncated=%d\n",
                    s_lang.c_str(), (unsigned long long)pcfa_certificate_bound(cert.p),
                    pcfa_certificate_extended(cert.p), truncated);
    });
    fool->require_subcommand(1);

    // bound --------------------------------------------------------------------
    auto* bnd = app.add_subcommand("bound", "reproduce a tightness claim");
    std::string theorem;
    std::vector<uint64_t> params;
    bnd->add_option("theorem", theorem,
                    "complement-isc complement-nsc intersection-isc intersection-nsc union-isc "
                    "union-nsc concat-isc concat-nsc star-isc star-nsc reversal-isc reversal-nsc")
        ->required();
    bnd->add_option("params", params, "m n for two-parameter theorems, n otherwise")
        ->required()
        ->expected(1, 2);
    bnd->callback([&] {
        uint64_t m = params.size() == 2 ? params[0] : 0;
        uint64_t n = params.size() == 2 ? params[1] : params[0];
        OwnedString report;
        const char* status = nullptr;
        check(pcfa_bound(theorem.c_str(), m, n, budget, format.c_str(), &report.p, &status));
        std::fputs(report.get(), stdout);
        if (status && std::string(status) == "fail") std::exit(4);
    });

    // census --------------------------------------------------------------------
    auto* cen = app.add_subcommand("census", "exhaustive star-complexity census");
    uint64_t cn = 0, ck = 2;
    bool no_perm = false, run_prop3 = false;
    std::string census_out;
    cen->add_option("--n", cn, "number of states")->required();
    cen->add_option("--k", ck, "alphabet size")->capture_default_str();
    cen->add_flag("--no-alphabet-perm", no_perm,
                  "count isomorphism without alphabet-symbol renaming");
    cen->add_option("--out", census_out, "write the table here (default: stdout)");
    cen->add_flag("--prop3", run_prop3, "also report the languages with sc(L*)=2");
    cen->callback([&] {
        // the table defaults to CSV; --format overrides
        std::string fmt = app.count("--format") > 0 ? format : "csv";
        OwnedString table;
        check(pcfa_census(cn, ck, no_perm ? 0 : 1, fmt.c_str(), &table.p));
        write_or_print(census_out, table.get());
        if (run_prop3) {
            uint64_t count = 0;
            int star_b = 0;
            OwnedString report;
            check(pcfa_prop3_check(cn, &count, &star_b, &report.p));
            std::fputs(report.get(), stdout);
        }
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}
