#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fooling.hpp"
#include "lang_ops.hpp"
#include "oracle.hpp"
#include "text_format.hpp"
#include "witnesses.hpp"

using namespace pcfa;

namespace {

Idfa unary_chain(uint32_t n) {
    Idfa d(n, Alphabet{"a"});
    for (State i = 0; i < n; ++i) d.final.set(i);
    for (State i = 0; i + 1 < n; ++i) d.set_transition(i, 'a', i + 1);
    return d;
}

Nfa example1_union() {
    Nfa k(3, Alphabet{"ab"});
    k.initial.set(0);
    k.final.set(0);
    k.add_transition(0, 'a', 1);
    k.add_transition(1, 'a', 2);
    k.add_transition(2, 'a', 0);
    Nfa l(3, Alphabet{"ab"});
    l.initial.set(0);
    l.final.set(0);
    l.add_transition(0, 'b', 1);
    l.add_transition(1, 'b', 2);
    l.add_transition(2, 'b', 0);
    return union_nfa(k, l);
}

FoolingCertificate example1_cert(const std::string& u, const std::string& v) {
    FoolingCertificate c;
    c.extended = true;
    c.pairs = {{"a", "aa"},  {"aa", "a"},  {"aaa", "aaa"},
               {"b", "bb"},  {"bb", "b"},  {"bbb", "bbb"}};
    c.a_count = 3;
    c.u = u;
    c.v = v;
    return c;
}

}  // namespace

TEST_CASE("check_fooling") {
    SUBCASE("complement witness n=3: the 2^3 pairs validate on the complement") {
        Nfa w = make_witness({WitnessFamily::ComplementNsc, 0, 3}).K.to_nfa();
        Cdfa comp = complement_nfa(w);
        FoolingVerdict v =
            check_fooling(Automaton(comp), fooling_set_family(FoolingFamily::ComplementNsc, 0, 3));
        CHECK(v.ok);
        CHECK(v.bound == 8);
    }
    SUBCASE("the single pair (eps, eps) on a language containing eps") {
        FoolingCertificate c;
        c.pairs = {{"", ""}};
        FoolingVerdict v = check_fooling(Automaton(unary_chain(3)), c);
        CHECK(v.ok);
        CHECK(v.bound == 1);
    }
    SUBCASE("intersection pairs at m=n=3 give bound 9") {
        Witness w = make_witness({WitnessFamily::Intersection, 3, 3});
        Idfa p = intersect_idfa(w.K.to_idfa(), w.L->to_idfa());
        FoolingVerdict v = check_fooling(Automaton(p),
                                         fooling_set_family(FoolingFamily::IntersectionNsc, 3, 3));
        CHECK(v.ok);
        CHECK(v.bound == 9);
    }
    SUBCASE("alphabet mismatch is an input error") {
        FoolingCertificate c;
        c.pairs = {{"x", ""}};
        CHECK_THROWS_AS((void)check_fooling(Automaton(unary_chain(2)), c), Error);
    }
    SUBCASE("a violation re-checks as genuine by direct simulation") {
        // corrupt one pair of the intersection certificate
        Witness w = make_witness({WitnessFamily::Intersection, 3, 3});
        Idfa p = intersect_idfa(w.K.to_idfa(), w.L->to_idfa());
        FoolingCertificate c = fooling_set_family(FoolingFamily::IntersectionNsc, 3, 3);
        c.pairs[4] = c.pairs[2];  // duplicate pair: F2 must break
        FoolingVerdict v = check_fooling(Automaton(p), c);
        REQUIRE(!v.ok);
        const Violation& viol = *v.violation;
        CHECK(viol.cond == Violation::Cond::F2);
        CHECK(accepts(p, viol.pi.x + viol.pj.y));
        CHECK(accepts(p, viol.pj.x + viol.pi.y));
        CHECK(viol.i == 2);
        CHECK(viol.j == 4);
    }
    SUBCASE("an F1 break names the offending pair") {
        FoolingCertificate c;
        c.pairs = {{"a", "a"}, {"aaa", ""}};
        FoolingVerdict v = check_fooling(Automaton(unary_chain(3)), c);
        REQUIRE(!v.ok);
        CHECK(v.violation->cond == Violation::Cond::F1);
        CHECK(v.violation->i == 1);
        CHECK(!accepts(unary_chain(3), v.violation->pi.x + v.violation->pi.y));
    }
}

TEST_CASE("check_fooling_extended") {
    Nfa u7 = example1_union();
    SUBCASE("example 1 with u=b^3, v=a^3 certifies 7") {
        FoolingVerdict v = check_fooling_extended(Automaton(u7), example1_cert("bbb", "aaa"));
        CHECK(v.ok);
        CHECK(v.bound == 7);
    }
    SUBCASE("example 1 with u=v=eps fails on F2 against the eps pair") {
        FoolingVerdict v = check_fooling_extended(Automaton(u7), example1_cert("", ""));
        REQUIRE(!v.ok);
        CHECK(v.violation->cond == Violation::Cond::F2);
    }
    SUBCASE("reversal witness n=4: extended certificate gives 5") {
        Witness w = make_witness({WitnessFamily::StarReversalNsc, 0, 4});
        Nfa rev = reverse_nfa(w.K.to_nfa());
        FoolingVerdict v = check_fooling_extended(
            Automaton(rev), fooling_set_family(FoolingFamily::ReversalNsc, 0, 4));
        CHECK(v.ok);
        CHECK(v.bound == 5);
    }
    SUBCASE("plain certificate is rejected by the extended checker") {
        FoolingCertificate c;
        c.pairs = {{"", ""}};
        CHECK_THROWS_AS((void)check_fooling_extended(Automaton(unary_chain(2)), c), Error);
    }
}

TEST_CASE("fooling_set_family") {
    SUBCASE("concat pairs m=n=3: x_m y_(m-1) is the cbcb string and is rejected") {
        FoolingCertificate c = fooling_set_family(FoolingFamily::ConcatNsc, 3, 3);
        CHECK(c.pairs.size() == 6);
        // pairs are indexed 0..m-1 then m..m+n-1
        std::string xm = c.pairs[3].x, ym1 = c.pairs[2].y;
        CHECK(xm + ym1 == "aacbcbaa");
        Witness w = make_witness({WitnessFamily::ConcatNsc, 3, 3});
        Nfa kl = concat_nfa(w.K.to_nfa(), w.L->to_nfa());
        CHECK(!accepts(kl, xm + ym1));
    }
    SUBCASE("star pairs degenerate cleanly at n=1") {
        FoolingCertificate c = fooling_set_family(FoolingFamily::StarNsc, 0, 1);
        REQUIRE(c.pairs.size() == 1);
        CHECK(c.pairs[0].x == "");
        CHECK(c.pairs[0].y == "b");
    }
    SUBCASE("complement y_S follows the positional rule") {
        // n=3, S={1,3} in 1-indexed paper states = mask 0b101
        FoolingCertificate c = fooling_set_family(FoolingFamily::ComplementNsc, 0, 3);
        CHECK(c.pairs.size() == 8);
        CHECK(c.pairs[0b101].y == "aca");
        // x for a singleton {i} replays a^(i-1)
        CHECK(c.pairs[0b001].x == "");
        CHECK(c.pairs[0b010].x == "a");
        CHECK(c.pairs[0b000].x == "aaa");
    }
    SUBCASE("generator validity across the grids") {
        for (uint64_t m = 2; m <= 6; ++m)
            for (uint64_t n = 2; n <= 6; ++n) {
                {
                    Witness w = make_witness({WitnessFamily::Intersection, m, n});
                    Idfa p = intersect_idfa(w.K.to_idfa(), w.L->to_idfa());
                    CHECK(check_fooling(Automaton(p),
                                        fooling_set_family(FoolingFamily::IntersectionNsc, m, n))
                              .ok);
                }
                {
                    Witness w = make_witness({WitnessFamily::UnionNsc, m, n});
                    Nfa u = union_nfa(w.K.to_nfa(), w.L->to_nfa());
                    CHECK(check_fooling_extended(
                              Automaton(u), fooling_set_family(FoolingFamily::UnionNsc, m, n))
                              .ok);
                }
                if (m >= 3 && n >= 3) {
                    Witness w = make_witness({WitnessFamily::ConcatNsc, m, n});
                    Nfa kl = concat_nfa(w.K.to_nfa(), w.L->to_nfa());
                    CHECK(check_fooling(Automaton(kl),
                                        fooling_set_family(FoolingFamily::ConcatNsc, m, n))
                              .ok);
                }
            }
        for (uint64_t n = 2; n <= 8; ++n) {
            Witness w = make_witness({WitnessFamily::ComplementNsc, 0, n});
            Cdfa comp = complement_nfa(w.K.to_nfa());
            FoolingVerdict v = check_fooling(
                Automaton(comp), fooling_set_family(FoolingFamily::ComplementNsc, 0, n));
            CHECK(v.ok);
            CHECK(v.bound == (uint64_t{1} << n));
        }
        for (uint64_t n = 2; n <= 6; ++n) {
            Witness w = make_witness({WitnessFamily::StarReversalNsc, 0, n});
            CHECK(check_fooling(Automaton(star_nfa(w.K.to_nfa())),
                                fooling_set_family(FoolingFamily::StarNsc, 0, n))
                      .ok);
            CHECK(check_fooling_extended(Automaton(reverse_nfa(w.K.to_nfa())),
                                         fooling_set_family(FoolingFamily::ReversalNsc, 0, n))
                      .ok);
        }
    }
    SUBCASE("out-of-range parameters are rejected") {
        CHECK_THROWS_AS((void)fooling_set_family(FoolingFamily::ConcatNsc, 2, 3), Error);
        CHECK_THROWS_AS((void)fooling_set_family(FoolingFamily::ComplementNsc, 0, 1), Error);
        CHECK_THROWS_AS((void)fooling_set_family(FoolingFamily::UnionNsc, 1, 2), Error);
    }
}

TEST_CASE("search_fooling") {
    SUBCASE("finds the 3 chain pairs on {a^i | i <= 2}") {
        SearchOptions opts;
        opts.max_pairs = 6;
        opts.max_len = 3;
        FoolingCertificate c = search_fooling(Automaton(unary_chain(3)), opts);
        CHECK(c.bound() == 3);
        CHECK(check_fooling(Automaton(unary_chain(3)), c).ok);
    }
    SUBCASE("unary sigma* caps at one pair") {
        Idfa all(1, Alphabet{"a"});
        all.final.set(0);
        all.set_transition(0, 'a', 0);
        FoolingCertificate c = search_fooling(Automaton(all), {});
        CHECK(c.bound() == 1);
    }
    SUBCASE("union witness: plain search stays at 6, the split reaches 7") {
        Witness w = make_witness({WitnessFamily::UnionNsc, 3, 3});
        Nfa u = union_nfa(w.K.to_nfa(), w.L->to_nfa());
        SearchOptions opts;
        opts.max_pairs = 10;
        opts.max_len = 4;
        FoolingCertificate plain = search_fooling(Automaton(u), opts);
        CHECK(check_certificate(Automaton(u), plain).ok);
        CHECK(plain.bound() <= 6);
        opts.extended = true;
        FoolingCertificate ext = search_fooling(Automaton(u), opts);
        CHECK(ext.extended);
        CHECK(ext.bound() == 7);
        CHECK(check_fooling_extended(Automaton(u), ext).ok);
    }
    SUBCASE("search results are always valid certificates (property)") {
        std::mt19937_64 rng(606);
        SearchOptions opts;
        opts.max_pairs = 5;
        opts.max_len = 3;
        for (int i = 0; i < 50; ++i) {
            Idfa d = oracle::random_all_final_trim_idfa(rng, 4, "ab");
            if (d.num_states == 0) continue;
            FoolingCertificate c = search_fooling(Automaton(d), opts);
            FoolingVerdict v = check_certificate(Automaton(d), c);
            CHECK(v.ok);
            CHECK(v.bound <= isc(d));  // soundness: a fooling set never beats an actual automaton
        }
    }
}

TEST_CASE("certificate file format") {
    SUBCASE("plain round trip") {
        FoolingCertificate c = fooling_set_family(FoolingFamily::StarNsc, 0, 3);
        FoolingCertificate back = parse_certificate(certificate_to_text(c));
        CHECK(back.pairs.size() == c.pairs.size());
        CHECK(back.bound() == c.bound());
        CHECK(certificate_to_text(back) == certificate_to_text(c));
    }
    SUBCASE("extended round trip keeps the split and u, v") {
        FoolingCertificate c = fooling_set_family(FoolingFamily::UnionNsc, 3, 4);
        FoolingCertificate back = parse_certificate(certificate_to_text(c));
        CHECK(back.extended);
        CHECK(back.a_count == c.a_count);
        CHECK(back.u == c.u);
        CHECK(back.v == c.v);
        CHECK(certificate_to_text(back) == certificate_to_text(c));
    }
    SUBCASE("epsilon is spelled -") {
        FoolingCertificate c = parse_certificate("fooling: plain\nclaimed: 1\npair: - -\n");
        CHECK(c.pairs.size() == 1);
        CHECK(c.pairs[0].x.empty());
        CHECK(c.pairs[0].y.empty());
    }
    SUBCASE("the empty certificate is valid with bound 0") {
        FoolingCertificate c = parse_certificate("fooling: plain\nclaimed: 0\n");
        CHECK(c.pairs.empty());
        FoolingVerdict v = check_fooling(Automaton(unary_chain(2)), c);
        CHECK(v.ok);
        CHECK(v.bound == 0);
    }
    SUBCASE("claimed must match the pair count") {
        CHECK_THROWS_WITH_AS(parse_certificate("fooling: plain\nclaimed: 5\npair: a a\n"),
                             doctest::Contains("claimed"), Error);
    }
    SUBCASE("extended structure is enforced") {
        CHECK_THROWS_AS(parse_certificate("fooling: extended\npair: a a\nu: a\nv: a\n"), Error);
        CHECK_THROWS_AS(parse_certificate("fooling: plain\nu: a\npair: a a\n"), Error);
        CHECK_THROWS_AS(parse_certificate("claimed: 1\nfooling: plain\npair: a a\n"), Error);
    }
}

TEST_CASE("soundness against constructions (property)") {
    std::mt19937_64 rng(707);
    SearchOptions opts;
    opts.max_pairs = 4;
    opts.max_len = 3;
    for (int i = 0; i < 60; ++i) {
        Idfa a = oracle::random_all_final_trim_idfa(rng, 4, "ab");
        Idfa b = oracle::random_all_final_trim_idfa(rng, 4, "ab");
        if (a.num_states == 0 || b.num_states == 0) continue;
        // every construction the repo builds for a language is an NFA for it,
        // so a validated fooling set can never exceed its state count
        std::vector<std::pair<Automaton, Automaton>> built;
        built.emplace_back(Automaton(intersect_idfa(a, b)), Automaton(intersect_idfa(a, b)));
        built.emplace_back(Automaton(union_idfa(a, b)), Automaton(union_idfa(a, b)));
        built.emplace_back(Automaton(union_nfa(as_nfa(a), as_nfa(b))),
                           Automaton(union_nfa(as_nfa(a), as_nfa(b))));
        built.emplace_back(Automaton(concat_nfa(as_nfa(a), as_nfa(b))),
                           Automaton(concat_nfa(as_nfa(a), as_nfa(b))));
        built.emplace_back(Automaton(star_nfa(as_nfa(a))), Automaton(star_nfa(as_nfa(a))));
        for (auto& [lang, construction] : built) {
            FoolingCertificate c = search_fooling(lang, opts);
            FoolingVerdict v = check_certificate(lang, c);
            CHECK(v.ok);
            CHECK(v.bound <= construction.states());
        }
    }
}
