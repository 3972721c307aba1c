#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "census.hpp"
#include "lang_ops.hpp"
#include "reports.hpp"
#include "witnesses.hpp"

using namespace pcfa;

TEST_CASE("enumerate_class") {
    SUBCASE("n=2 yields exactly the two languages {eps} and a-loop") {
        std::vector<Cdfa> reps;
        enumerate_class(2, 2, true, [&](const Cdfa& d) { reps.push_back(d); });
        REQUIRE(reps.size() == 2);
        for (const Cdfa& d : reps) {
            CHECK(d.num_states == 2);
            CHECK(is_prefix_closed(Automaton(d)));
            CHECK(minimize_cdfa(d).num_states == 2);
        }
    }
    SUBCASE("n=3 yields 15 classes") {
        size_t count = 0;
        enumerate_class(3, 2, true, [&](const Cdfa&) { ++count; });
        CHECK(count == 15);
    }
    SUBCASE("n=4 yields 246 classes, pairwise distinct canonical forms") {
        std::set<std::string> keys;
        size_t count = 0;
        enumerate_class(4, 2, true, [&](const Cdfa& d) {
            ++count;
            keys.insert(canonical_form(d, true));
            CHECK(is_prefix_closed(Automaton(d)));
        });
        CHECK(count == 246);
        CHECK(keys.size() == 246);
    }
    SUBCASE("without alphabet permutation, n=2 sees a* and b* separately") {
        size_t with = 0, without = 0;
        enumerate_class(2, 2, true, [&](const Cdfa&) { ++with; });
        enumerate_class(2, 2, false, [&](const Cdfa&) { ++without; });
        CHECK(with == 2);
        CHECK(without == 3);  // {eps}, a*, b*
    }
    SUBCASE("every member is minimal with exactly one dead state") {
        enumerate_class(3, 2, true, [&](const Cdfa& d) {
            CHECK(minimize_cdfa(d).num_states == d.num_states);
            int dead = 0;
            for (State q = 0; q < d.num_states; ++q) {
                if (d.final.test(q)) continue;
                bool self = true;
                for (uint32_t s = 0; s < d.alphabet.size(); ++s)
                    if (d.target(q, s) != q) self = false;
                if (self) ++dead;
            }
            CHECK(dead == 1);
        });
    }
}

TEST_CASE("star_census reference rows") {
    SUBCASE("n=2") {
        CensusTable t = star_census(2);
        CHECK(t.frequencies == std::map<uint64_t, uint64_t>{{2, 2}});
        CHECK(t.total == 2);
        CHECK(t.average_3dp() == "2.000");
    }
    SUBCASE("n=3") {
        CensusTable t = star_census(3);
        CHECK(t.frequencies == std::map<uint64_t, uint64_t>{{1, 8}, {2, 1}, {3, 6}});
        CHECK(t.average_exact() == "28/15");
        CHECK(t.average_3dp() == "1.866");
    }
    SUBCASE("n=4") {
        CensusTable t = star_census(4);
        CHECK(t.frequencies ==
              std::map<uint64_t, uint64_t>{{1, 161}, {2, 1}, {3, 48}, {4, 30}, {5, 6}});
        CHECK(t.total == 246);
        CHECK(t.average_3dp() == "1.857");
    }
    SUBCASE("csv layout") {
        CensusTable t = star_census(3);
        CHECK(t.to_csv() ==
              "sc_star,count\n1,8\n2,1\n3,6\ntotal,15\naverage_exact,28/15\naverage_3dp,1.866\n");
    }
    SUBCASE("sc star 1 bucket means the star is sigma*") {
        Idfa sigma_star(1, Alphabet{"ab"});
        sigma_star.final.set(0);
        sigma_star.set_transition(0, 'a', 0);
        sigma_star.set_transition(0, 'b', 0);
        size_t bucket1 = 0;
        enumerate_class(3, 2, true, [&](const Cdfa& d) {
            if (star_sc(d) != 1) return;
            ++bucket1;
            Nfa st = star_nfa(as_nfa(trim(as_idfa(d))));
            CHECK(equivalent(Automaton(st), Automaton(sigma_star)));
        });
        CHECK(bucket1 == 8);
    }
}

TEST_CASE("prop3_check") {
    for (uint64_t n = 3; n <= 5; ++n) {
        Prop3Result r = prop3_check(n);
        CHECK(r.count == 1);
        CHECK(r.star_is_b_star);
        CHECK(r.matches_chain_witness);
        // representative is the chain witness language, up to symbol renaming
        REQUIRE(r.representatives.size() == 1);
        Cdfa chain = std::get<Cdfa>(make_witness({WitnessFamily::StarProp3, 0, n}).K.value);
        CHECK(canonical_form(minimize_cdfa(r.representatives[0]), true) ==
              canonical_form(chain, true));
    }
    CHECK_THROWS_AS((void)prop3_check(2), Error);
}

TEST_CASE("census rendering formats") {
    CensusTable t = star_census(3);
    std::string text = render_census(t, OutputFormat::Text);
    CHECK(text.find("RESULT census n=3") != std::string::npos);
    CHECK(text.find("1.866") != std::string::npos);
    std::string jl = render_census(t, OutputFormat::JsonLines);
    CHECK(jl.find("\"sc_star\":1") != std::string::npos);
    CHECK(jl.find("\"rounding\":\"truncate\"") != std::string::npos);
}
