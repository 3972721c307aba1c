#pragma once

#include <optional>
#include <string>
#include <vector>

#include "automata.hpp"

namespace pcfa {

// A fooling set for L is a set of string pairs (x_i, y_i) with
//   (F1) x_i y_i in L, and
//   (F2) for i != j, x_i y_j not in L or x_j y_i not in L.
// Its size lower-bounds the state count of every NFA for L, including
// multi-initial ones. The extended form (A, B, u, v) additionally requires
// A+B, A+{(eps,u)} and B+{(eps,v)} to be fooling sets and lower-bounds
// single-initial NFAs by |A|+|B|+1.

struct StringPair {
    std::string x, y;
    bool operator==(const StringPair&) const = default;
};

struct FoolingCertificate {
    bool extended = false;
    std::vector<StringPair> pairs;  // extended: the A block, then the B block
    uint32_t a_count = 0;           // size of the A block (extended only)
    std::string u, v;               // extended only

    uint64_t bound() const { return extended ? pairs.size() + 1 : pairs.size(); }
};

struct Violation {
    enum class Cond { F1, F2 };
    Cond cond = Cond::F1;
    std::string set_name;  // which set broke: "F", "A+B", "A+(eps,u)", "B+(eps,v)"
    uint32_t i = 0, j = 0;
    StringPair pi, pj;
    std::string to_text() const;
};

struct FoolingVerdict {
    bool ok = false;
    uint64_t bound = 0;  // certified bound when ok
    std::optional<Violation> violation;
};

/// Membership tester backed by the cached minimal complete DFA of the
/// language, so large certificates check in time linear in total string
/// length.
class Membership {
public:
    explicit Membership(const Nfa& lang);
    bool contains(std::string_view w) const;
    const Cdfa& dfa() const { return dfa_; }

private:
    Cdfa dfa_;
};

FoolingVerdict check_fooling(const Membership& lang, const FoolingCertificate& cert);
FoolingVerdict check_fooling(const Automaton& lang, const FoolingCertificate& cert);

/// Checks all three sets of the extended condition; the certificate must have
/// a split.
FoolingVerdict check_fooling_extended(const Membership& lang, const FoolingCertificate& cert);
FoolingVerdict check_fooling_extended(const Automaton& lang, const FoolingCertificate& cert);

/// Runs the matching checker for the certificate's flavor.
FoolingVerdict check_certificate(const Automaton& lang, const FoolingCertificate& cert);

/// The explicit fooling-set families used by the lower-bound proofs, keyed by
/// operation. Two-parameter families ignore neither m nor n; single-parameter
/// families use n.
enum class FoolingFamily {
    ComplementNsc,   // 2^n pairs (x_S, y_S) against the complement
    IntersectionNsc, // mn pairs (a^i b^j, a^(m-1-i) b^(n-1-j))
    UnionNsc,        // extended, |A|+|B|+1 = m+n+1
    ConcatNsc,       // m+n pairs around a^(m-1) c b a^(n-1)
    StarNsc,         // n pairs (a^i, a^(n-1-i) b)
    ReversalNsc,     // extended, n+1
};

FoolingFamily fooling_family_from_name(std::string_view name);
std::string_view fooling_family_name(FoolingFamily f);

FoolingCertificate fooling_set_family(FoolingFamily family, uint64_t m, uint64_t n);

struct SearchOptions {
    uint32_t max_pairs = 8;
    uint32_t max_len = 4;
    bool extended = false;     // also try to find a split with u, v
    uint64_t seed = 0;         // tie-breaking order of candidate pairs
    uint64_t max_candidates = 200000;
};

/// Best-effort greedy search with limited backtracking; the result is always
/// a valid certificate (possibly empty), not necessarily maximum. When the
/// candidate-pair pool hits max_candidates, *truncated is set and the result
/// is a partial search.
FoolingCertificate search_fooling(const Automaton& lang, const SearchOptions& opts,
                                  bool* truncated = nullptr);

// Certificate file format:
//   fooling: plain|extended
//   claimed: 7
//   pair: x y            (plain; eps spelled "-")
//   A: / B: section headers then pair lines (extended)
//   u: ... / v: ...      (extended)
FoolingCertificate parse_certificate(std::string_view text);
FoolingCertificate read_certificate(const std::string& path);
std::string certificate_to_text(const FoolingCertificate& cert);

}  // namespace pcfa
