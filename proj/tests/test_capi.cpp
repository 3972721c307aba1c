// Exercises the shared-library surface: handles, error codes, and the
// formatted reports, end to end through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pcfa.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { pcfa_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Aut {
    pcfa_automaton* p = nullptr;
    ~Aut() { pcfa_automaton_free(p); }
};

struct Cert {
    pcfa_certificate* p = nullptr;
    ~Cert() { pcfa_certificate_free(p); }
};

constexpr const char* kUnary3 =
    "type: idfa\nalphabet: a\nstates: 3\ninitial: 0\nfinal: 0 1 2\ntrans: 0 a 1\ntrans: 1 a 2\n";

}  // namespace

TEST_CASE("automaton lifecycle and queries") {
    Aut a;
    REQUIRE(pcfa_automaton_parse(kUnary3, &a.p) == PCFA_OK);
    CHECK(pcfa_automaton_states(a.p) == 3);
    CHECK(std::string(pcfa_automaton_kind(a.p)) == "idfa");
    Str sigma;
    CHECK(pcfa_automaton_alphabet(a.p, &sigma.p) == PCFA_OK);
    CHECK(sigma.str() == "a");

    int acc = -1;
    CHECK(pcfa_accepts(a.p, "aa", &acc) == PCFA_OK);
    CHECK(acc == 1);
    CHECK(pcfa_accepts(a.p, "aaa", &acc) == PCFA_OK);
    CHECK(acc == 0);
    CHECK(pcfa_accepts(a.p, "-", &acc) == PCFA_OK);
    CHECK(acc == 1);

    uint64_t isc_v = 0, sc_v = 0;
    CHECK(pcfa_isc(a.p, &isc_v) == PCFA_OK);
    CHECK(pcfa_sc(a.p, &sc_v) == PCFA_OK);
    CHECK(isc_v == 3);
    CHECK(sc_v == 4);

    int pc = 0;
    CHECK(pcfa_is_prefix_closed(a.p, &pc) == PCFA_OK);
    CHECK(pc == 1);

    Str text;
    CHECK(pcfa_automaton_to_text(a.p, &text.p) == PCFA_OK);
    Aut b;
    REQUIRE(pcfa_automaton_parse(text.str().c_str(), &b.p) == PCFA_OK);
    int eq = 0;
    CHECK(pcfa_equivalent(a.p, b.p, &eq) == PCFA_OK);
    CHECK(eq == 1);

    Str dot;
    CHECK(pcfa_automaton_to_dot(a.p, &dot.p) == PCFA_OK);
    CHECK(dot.str().find("digraph") == 0);
}

TEST_CASE("error codes carry the failure kind and a message") {
    Aut a;
    CHECK(pcfa_automaton_parse("type: bogus\n", &a.p) == PCFA_ERR_PARSE);
    CHECK(std::strlen(pcfa_last_error()) > 0);

    REQUIRE(pcfa_automaton_parse(kUnary3, &a.p) == PCFA_OK);
    int acc = 0;
    CHECK(pcfa_accepts(a.p, "ab", &acc) == PCFA_ERR_PRECONDITION);

    Aut k, l;
    CHECK(pcfa_make_witness("no-such-family", 0, 3, 0, &k.p, &l.p) == PCFA_ERR_PRECONDITION);
    CHECK(pcfa_make_witness("concat-isc", 2, 3, 0, &k.p, &l.p) == PCFA_ERR_PRECONDITION);
    CHECK(pcfa_automaton_read("/nonexistent/path.aut", &k.p) == PCFA_ERR_PARSE);
}

TEST_CASE("ops through the C API") {
    Aut a;
    REQUIRE(pcfa_automaton_parse(kUnary3, &a.p) == PCFA_OK);
    pcfa_op_stats stats{};
    Aut comp;
    REQUIRE(pcfa_apply_op("complement", a.p, nullptr, &comp.p, &stats) == PCFA_OK);
    CHECK(stats.construction_states == 4);
    CHECK(stats.upper_bound == 4);
    int acc = 0;
    CHECK(pcfa_accepts(comp.p, "aaa", &acc) == PCFA_OK);
    CHECK(acc == 1);

    Aut bad;
    CHECK(pcfa_apply_op("intersect", a.p, nullptr, &bad.p, nullptr) == PCFA_ERR_PRECONDITION);
}

TEST_CASE("witnesses, bounds and fooling through the C API") {
    Aut k, l;
    REQUIRE(pcfa_make_witness("star-isc", 0, 6, 0, &k.p, &l.p) == PCFA_OK);
    CHECK(l.p == nullptr);
    Aut star;
    pcfa_op_stats stats{};
    REQUIRE(pcfa_apply_op("star", k.p, nullptr, &star.p, &stats) == PCFA_OK);
    uint64_t isc_v = 0;
    CHECK(pcfa_isc(star.p, &isc_v) == PCFA_OK);
    CHECK(isc_v == 32);

    int ok = 0;
    Str report;
    REQUIRE(pcfa_validate_witness("union-nsc", 3, 3, 0, &ok, &report.p) == PCFA_OK);
    CHECK(ok == 1);
    CHECK(report.str().find("witness valid") != std::string::npos);

    const char* status = nullptr;
    Str bound_report;
    REQUIRE(pcfa_bound("reversal-isc", 0, 4, 0, "text", &bound_report.p, &status) == PCFA_OK);
    CHECK(std::string(status) == "tight");
    CHECK(bound_report.str().find("achieved: 15") != std::string::npos);

    Cert cert;
    REQUIRE(pcfa_fooling_family("star-nsc", 0, 5, &cert.p) == PCFA_OK);
    CHECK(pcfa_certificate_bound(cert.p) == 5);
    CHECK(pcfa_certificate_extended(cert.p) == 0);
    Aut base;
    REQUIRE(pcfa_make_witness("star-reversal-nsc", 0, 5, 0, &base.p, nullptr) == PCFA_OK);
    Aut st5;
    REQUIRE(pcfa_apply_op("star", base.p, nullptr, &st5.p, nullptr) == PCFA_OK);
    uint64_t b = 0;
    Str detail;
    REQUIRE(pcfa_fooling_check(st5.p, cert.p, &ok, &b, &detail.p) == PCFA_OK);
    CHECK(ok == 1);
    CHECK(b == 5);

    Cert found;
    int truncated = -1;
    REQUIRE(pcfa_fooling_search(base.p, 6, 3, 0, 0, &found.p, &truncated) == PCFA_OK);
    CHECK(truncated == 0);
    Str cert_text;
    REQUIRE(pcfa_certificate_to_text(found.p, &cert_text.p) == PCFA_OK);
    Cert reparsed;
    CHECK(pcfa_certificate_parse(cert_text.str().c_str(), &reparsed.p) == PCFA_OK);
    CHECK(pcfa_certificate_bound(reparsed.p) == pcfa_certificate_bound(found.p));
}

TEST_CASE("census and prop3 through the C API") {
    Str csv;
    REQUIRE(pcfa_census(3, 2, 1, "csv", &csv.p) == PCFA_OK);
    CHECK(csv.str() ==
          "sc_star,count\n1,8\n2,1\n3,6\ntotal,15\naverage_exact,28/15\naverage_3dp,1.866\n");

    uint64_t count = 0;
    int star_b = 0;
    Str report;
    REQUIRE(pcfa_prop3_check(4, &count, &star_b, &report.p) == PCFA_OK);
    CHECK(count == 1);
    CHECK(star_b == 1);
}
