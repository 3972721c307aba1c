#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "automata.hpp"

namespace pcfa {

// Exhaustive census of n-state minimal complete DFAs over k symbols with one
// dead state, every other state final (so the language is prefix-closed and
// needs exactly n complete-DFA states), counted up to isomorphism -- by
// default including renaming of alphabet symbols.

struct CensusTable {
    uint64_t n = 0;
    uint64_t k = 2;
    bool alphabet_permutation = true;
    std::map<uint64_t, uint64_t> frequencies;  // sc(L*) -> class count
    uint64_t total = 0;
    uint64_t avg_num = 0, avg_den = 1;  // exact average, reduced

    // The 3-decimal rendering truncates the exact rational; that is the
    // recorded rounding mode this census is reproduced under.
    static constexpr const char* kRoundingMode = "truncate";

    std::string average_exact() const;
    std::string average_3dp() const;
    std::string to_csv() const;
};

/// Streams one representative per isomorphism class, ordered by canonical
/// form. Enumeration fixes the initial state as 0 and the dead state as n-1
/// and iterates every transition table of the non-dead states.
void enumerate_class(uint64_t n, uint64_t k, bool permute_alphabet,
                     const std::function<void(const Cdfa&)>& yield);

CensusTable star_census(uint64_t n, uint64_t k = 2, bool permute_alphabet = true);

/// sc(L*) of one census member: star of the all-final trimmed view, then
/// determinize/complete/minimize.
uint64_t star_sc(const Cdfa& d);

struct Prop3Result {
    uint64_t count = 0;                 // classes with sc(L*) = 2
    std::vector<Cdfa> representatives;  // in canonical order
    bool star_is_b_star = false;        // every representative's star equals b* (up to symbol renaming)
    bool matches_chain_witness = false; // representative is the b-chain language
};

Prop3Result prop3_check(uint64_t n);

}  // namespace pcfa
