#include "census.hpp"

#include <cmath>
#include <numeric>
#include <unordered_set>

#include "lang_ops.hpp"

namespace pcfa {

namespace {

constexpr uint32_t kMaxCensusStates = 12;

/// Reachability plus Moore refinement on a packed table, no allocations.
/// finals are 0..n-2, state n-1 is the dead state, initial is 0.
bool minimal_with_all_states(uint32_t n, uint32_t k, const uint8_t* delta) {
    uint32_t seen = 1;
    uint32_t stack[kMaxCensusStates];
    int sp = 0;
    stack[sp++] = 0;
    while (sp) {
        uint32_t q = stack[--sp];
        const uint8_t* row = delta + q * k;
        for (uint32_t s = 0; s < k; ++s) {
            uint32_t t = row[s];
            if (!((seen >> t) & 1)) {
                seen |= 1u << t;
                stack[sp++] = t;
            }
        }
    }
    if (seen != (1u << n) - 1) return false;

    uint8_t cls[kMaxCensusStates], next[kMaxCensusStates];
    for (uint32_t q = 0; q < n; ++q) cls[q] = (q == n - 1) ? 0 : 1;
    uint32_t num = 2;
    for (;;) {
        uint64_t sig[kMaxCensusStates];
        for (uint32_t q = 0; q < n; ++q) {
            uint64_t s = cls[q];
            const uint8_t* row = delta + q * k;
            for (uint32_t sym = 0; sym < k; ++sym) s = s * n + cls[row[sym]];
            sig[q] = s;
        }
        uint32_t fresh = 0;
        for (uint32_t q = 0; q < n; ++q) {
            uint32_t id = fresh;
            for (uint32_t p = 0; p < q; ++p)
                if (sig[p] == sig[q]) {
                    id = next[p];
                    break;
                }
            if (id == fresh) ++fresh;
            next[q] = static_cast<uint8_t>(id);
        }
        if (fresh == num) return num == n;
        num = fresh;
        for (uint32_t q = 0; q < n; ++q) cls[q] = next[q];
    }
}

std::string census_alphabet(uint64_t k) {
    std::string sigma;
    for (uint64_t i = 0; i < k; ++i) sigma += static_cast<char>('a' + i);
    return sigma;
}

/// Streams every labeled minimal member of the class (initial 0, dead n-1,
/// the rest final), without isomorphism dedup.
void enumerate_minimal(uint64_t n, uint64_t k, const std::function<void(const Cdfa&)>& fn) {
    if (n < 2) throw_precondition("census needs n >= 2");
    if (k < 1 || k > 6) throw_precondition("census needs 1 <= k <= 6");
    long double candidates = powl(static_cast<long double>(n), static_cast<long double>((n - 1) * k));
    if (n > kMaxCensusStates || candidates > 1e12L)
        throw_precondition("census space too large for exhaustive enumeration (n^((n-1)k) = " +
                           std::to_string(static_cast<double>(candidates)) + " candidates)");
    const uint32_t nn = static_cast<uint32_t>(n), kk = static_cast<uint32_t>(k);
    const uint32_t slots = (nn - 1) * kk;
    std::vector<uint8_t> delta(static_cast<size_t>(nn) * kk, static_cast<uint8_t>(nn - 1));
    std::fill(delta.begin(), delta.begin() + slots, 0);

    Alphabet sigma{census_alphabet(k)};
    for (;;) {
        if (minimal_with_all_states(nn, kk, delta.data())) {
            Cdfa d(nn, sigma);
            for (uint32_t q = 0; q < nn; ++q)
                for (uint32_t s = 0; s < kk; ++s) d.set_target(q, s, delta[q * kk + s]);
            for (uint32_t q = 0; q + 1 < nn; ++q) d.final.set(q);
            fn(d);
        }
        // odometer over the non-dead rows
        uint32_t i = 0;
        while (i < slots) {
            if (++delta[i] < nn) break;
            delta[i] = 0;
            ++i;
        }
        if (i == slots) break;
    }
}

}  // namespace

uint64_t star_sc(const Cdfa& d) {
    Idfa t = trim(as_idfa(d));
    if (t.num_states == 0) return 1;
    return sc(star_nfa(as_nfa(t)));
}

void enumerate_class(uint64_t n, uint64_t k, bool permute_alphabet,
                     const std::function<void(const Cdfa&)>& yield) {
    std::map<std::string, Cdfa> reps;
    enumerate_minimal(n, k, [&](const Cdfa& d) {
        std::string key = canonical_form(d, permute_alphabet);
        reps.emplace(std::move(key), d);
    });
    for (const auto& [key, d] : reps) yield(d);
}

CensusTable star_census(uint64_t n, uint64_t k, bool permute_alphabet) {
    CensusTable t;
    t.n = n;
    t.k = k;
    t.alphabet_permutation = permute_alphabet;
    std::unordered_set<std::string> seen;
    enumerate_minimal(n, k, [&](const Cdfa& d) {
        if (!seen.insert(canonical_form(d, permute_alphabet)).second) return;
        ++t.frequencies[star_sc(d)];
    });
    uint64_t num = 0;
    for (const auto& [value, count] : t.frequencies) {
        t.total += count;
        num += value * count;
    }
    if (t.total == 0) {
        t.avg_num = 0;
        t.avg_den = 1;
    } else {
        uint64_t g = std::gcd(num, t.total);
        t.avg_num = num / g;
        t.avg_den = t.total / g;
    }
    return t;
}

std::string CensusTable::average_exact() const {
    return std::to_string(avg_num) + "/" + std::to_string(avg_den);
}

std::string CensusTable::average_3dp() const {
    uint64_t scaled = avg_den == 0 ? 0 : (avg_num * 1000) / avg_den;
    std::string frac = std::to_string(scaled % 1000);
    return std::to_string(scaled / 1000) + "." + std::string(3 - frac.size(), '0') + frac;
}

std::string CensusTable::to_csv() const {
    std::string out = "sc_star,count\n";
    for (const auto& [value, count] : frequencies)
        out += std::to_string(value) + "," + std::to_string(count) + "\n";
    out += "total," + std::to_string(total) + "\n";
    out += "average_exact," + average_exact() + "\n";
    out += "average_3dp," + average_3dp() + "\n";
    return out;
}

Prop3Result prop3_check(uint64_t n) {
    if (n < 3) throw_precondition("prop3_check needs n >= 3");
    Prop3Result r;
    std::map<std::string, Cdfa> hits;
    enumerate_minimal(n, 2, [&](const Cdfa& d) {
        if (star_sc(d) != 2) return;
        hits.emplace(canonical_form(d, true), d);
    });
    r.count = hits.size();
    for (auto& [key, d] : hits) r.representatives.push_back(std::move(d));

    // the b-chain witness: a b-path through the final states, then dead
    Cdfa chain(static_cast<uint32_t>(n), Alphabet{"ab"});
    State dead = static_cast<State>(n - 1);
    for (State i = 0; i < dead; ++i) {
        chain.final.set(i);
        chain.set_transition(i, 'a', dead);
        chain.set_transition(i, 'b', i + 1);
    }
    chain.set_transition(dead, 'a', dead);
    chain.set_transition(dead, 'b', dead);

    Idfa bloop(1, Alphabet{"ab"});
    bloop.final.set(0);
    bloop.set_transition(0, 'b', 0);
    Cdfa bstar_min = minimize_cdfa(complete(bloop));
    std::string bstar_key = canonical_form(bstar_min, true);
    std::string chain_key = canonical_form(chain, true);

    r.star_is_b_star = !r.representatives.empty();
    r.matches_chain_witness = !r.representatives.empty();
    for (const Cdfa& d : r.representatives) {
        Idfa t = trim(as_idfa(d));
        Cdfa star_min = minimize_cdfa(complete(determinize(star_nfa(as_nfa(t)))));
        if (canonical_form(star_min, true) != bstar_key) r.star_is_b_star = false;
        if (canonical_form(minimize_cdfa(d), true) != chain_key) r.matches_chain_witness = false;
    }
    return r;
}

}  // namespace pcfa
