#pragma once

#include <optional>
#include <string>
#include <vector>

#include "automata.hpp"
#include "fooling.hpp"

namespace pcfa {

// Parametric witness families, one per operation bound. Most are built
// directly from their defining construction; four are reconstructed from
// seed candidates and accepted only after validate_witness passes.
enum class WitnessFamily {
    ComplementUnary,   // {a^i | i <= n-1}
    ComplementNsc,     // ternary NFA whose complement needs 2^n NFA states
    Intersection,      // binary letter counters, also the union-isc witnesses
    UnionIscProduct,   // the (mn+m+n)-state union product of the counters
    UnionNsc,          // reconstructed; block languages on {a,b} and {c,d}
    ConcatIsc,         // ternary pair with isc(KL) = m 2^(n-1) + 2^n - 1
    ConcatNsc,         // reconstructed; b-loop / a-chain / c-loop pair
    StarIsc,           // binary ladder with isc(L*) = 2^(n-1)
    StarProp3,         // the b-chain complete DFA with sc(L*) = 2
    ReversalIsc,       // reconstructed; a-cycle with one b-gap, isc(L^R) = 2^n - 1
    StarReversalNsc,   // reconstructed; prefixes of (a^(n-1) b)*
};

WitnessFamily witness_family_from_name(std::string_view name);
std::string_view witness_family_name(WitnessFamily f);
bool family_takes_two_params(WitnessFamily f);
bool family_is_reconstructed(WitnessFamily f);
std::vector<WitnessFamily> all_witness_families();

struct WitnessSpec {
    WitnessFamily family;
    uint64_t m = 0;  // ignored by single-parameter families
    uint64_t n = 0;
};

struct Witness {
    Automaton K;
    std::optional<Automaton> L;  // set for two-automaton families
    bool reconstructed = false;
};

struct ReconstructOptions {
    uint64_t budget = 100000;  // candidates tried in the exhaustive fallback
    bool skip_seeds = false;   // go straight to the exhaustive search
};

/// Builds the family instance; reconstructed families go through
/// reconstruct_witness and are returned only after passing validation.
Witness make_witness(const WitnessSpec& spec, const ReconstructOptions& opts = {});

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> passed;
    std::vector<std::string> failed;
    std::string to_text() const;
    void check(bool cond, const std::string& what);
};

/// Re-derives every claim the family stands for: prefix-closedness, the
/// inputs' exact complexity (isc by minimization, nsc by a validating
/// certificate plus a construction of that size), the operation bound
/// attained exactly, and the per-family textual constraints.
ValidationReport validate_witness(const WitnessSpec& spec, const Witness& w);

/// Seeded search for the reconstructed families; tries analytic seeds first,
/// then a bounded exhaustive enumeration of all-final automata of the right
/// size. Throws a verification error when the budget runs out.
Witness reconstruct_witness(WitnessFamily family, uint64_t m, uint64_t n,
                            const ReconstructOptions& opts = {});

}  // namespace pcfa
