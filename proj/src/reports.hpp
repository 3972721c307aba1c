#pragma once

#include <string>

#include "census.hpp"
#include "witnesses.hpp"

namespace pcfa {

enum class OutputFormat { Text, Csv, JsonLines };
OutputFormat format_from_name(std::string_view name);

// The tightness claims the tool can reproduce: build the witness family, run
// the construction, then measure (isc, by minimization) or certify (nsc, by a
// validating fooling set plus a construction of exactly the claimed size).
enum class Theorem {
    ComplementIsc,    // n+1
    ComplementNsc,    // 2^n
    IntersectionIsc,  // mn
    IntersectionNsc,  // mn
    UnionIsc,         // mn+m+n
    UnionNsc,         // m+n+1
    ConcatIsc,        // m 2^(n-1) + 2^n - 1
    ConcatNsc,        // m+n
    StarIsc,          // 2^(n-1)
    StarNsc,          // n
    ReversalIsc,      // 2^n - 1
    ReversalNsc,      // n+1
};

Theorem theorem_from_name(std::string_view name);
std::string_view theorem_name(Theorem t);
bool theorem_takes_two_params(Theorem t);
std::string_view theorem_model(Theorem t);  // "isc" or "nsc"
uint64_t theorem_upper_bound(Theorem t, uint64_t m, uint64_t n);
std::vector<Theorem> all_theorems();

struct BoundReport {
    std::string theorem;
    uint64_t m = 0, n = 0;
    bool two_params = false;
    std::string model;        // isc | nsc
    std::string certificate;  // nsc only: plain (any NFA) | extended (single-initial NFAs)
    uint64_t upper = 0;
    uint64_t achieved = 0;    // measured isc, or certified lower bound
    std::string status;       // tight | gap | fail
    std::string detail;       // diagnostics when not tight

    std::string summary_line() const;  // key=value pairs on one line
    std::string render(OutputFormat f) const;
};

BoundReport run_bound(Theorem t, uint64_t m, uint64_t n, const ReconstructOptions& opts = {});

std::string render_census(const CensusTable& t, OutputFormat f);

}  // namespace pcfa
