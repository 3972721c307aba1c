#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "error.hpp"

namespace pcfa {

using State = uint32_t;
inline constexpr State kNoState = UINT32_MAX;

/// Fixed-width bitset over the states 0..width-1 of one automaton.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(uint32_t width)
        : width_(width), bits_((width + 63) / 64, 0) {}

    static StateSet singleton(uint32_t width, State s) {
        StateSet r(width);
        r.set(s);
        return r;
    }

    uint32_t width() const { return width_; }
    bool test(State s) const { return (bits_[s >> 6] >> (s & 63)) & 1; }
    void set(State s) { bits_[s >> 6] |= uint64_t{1} << (s & 63); }
    void reset(State s) { bits_[s >> 6] &= ~(uint64_t{1} << (s & 63)); }

    bool empty() const {
        for (uint64_t b : bits_)
            if (b) return false;
        return true;
    }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t b : bits_) c += static_cast<uint32_t>(__builtin_popcountll(b));
        return c;
    }

    bool intersects(const StateSet& o) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }

    StateSet& operator|=(const StateSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }

    StateSet& operator&=(const StateSet& o) {
        for (size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }

    bool operator==(const StateSet&) const = default;

    /// Lowest member, or kNoState when empty.
    State first() const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<State>(i * 64 + __builtin_ctzll(bits_[i]));
        return kNoState;
    }

    /// Visits members in ascending order.
    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            uint64_t b = bits_[i];
            while (b) {
                f(static_cast<State>(i * 64 + __builtin_ctzll(b)));
                b &= b - 1;
            }
        }
    }

    std::vector<State> elements() const {
        std::vector<State> out;
        out.reserve(count());
        for_each([&](State s) { out.push_back(s); });
        return out;
    }

    size_t hash() const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t b : bits_) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h ^ width_);
    }

private:
    uint32_t width_ = 0;
    std::vector<uint64_t> bits_;
};

struct StateSetHash {
    size_t operator()(const StateSet& s) const { return s.hash(); }
};

/// Ordered list of distinct single-character symbols. The order is fixed and
/// total; canonical forms and file output depend on it.
struct Alphabet {
    std::string symbols;

    uint32_t size() const { return static_cast<uint32_t>(symbols.size()); }

    int index_of(char c) const {
        auto p = symbols.find(c);
        return p == std::string::npos ? -1 : static_cast<int>(p);
    }

    /// Index of c, or a precondition error naming the symbol.
    uint32_t require(char c) const;

    bool contains(char c) const { return index_of(c) >= 0; }
    bool same_symbols(const Alphabet& o) const;
    bool operator==(const Alphabet&) const = default;
};

/// Nondeterministic automaton with a set of initial states.
struct Nfa {
    uint32_t num_states = 0;
    Alphabet alphabet;
    std::vector<StateSet> delta;  // num_states * |alphabet|, row-major by state
    StateSet initial;
    StateSet final;

    Nfa() = default;
    Nfa(uint32_t n, Alphabet sigma)
        : num_states(n),
          alphabet(std::move(sigma)),
          delta(static_cast<size_t>(n) * alphabet.size(), StateSet(n)),
          initial(n),
          final(n) {}

    const StateSet& targets(State q, uint32_t s) const {
        return delta[static_cast<size_t>(q) * alphabet.size() + s];
    }
    StateSet& targets(State q, uint32_t s) {
        return delta[static_cast<size_t>(q) * alphabet.size() + s];
    }

    void add_transition(State q, char c, State t) { targets(q, alphabet.require(c)).set(t); }

    bool single_initial() const { return initial.count() == 1; }
    bool all_final() const { return final.count() == num_states; }
};

/// Incomplete deterministic automaton: partial transition function, one
/// initial state. An undefined transition rejects immediately.
struct Idfa {
    uint32_t num_states = 0;
    Alphabet alphabet;
    std::vector<State> delta;  // kNoState = undefined
    State initial = kNoState;  // kNoState only when num_states == 0
    StateSet final;

    Idfa() = default;
    Idfa(uint32_t n, Alphabet sigma)
        : num_states(n),
          alphabet(std::move(sigma)),
          delta(static_cast<size_t>(n) * alphabet.size(), kNoState),
          initial(n > 0 ? 0 : kNoState),
          final(n) {}

    State target(State q, uint32_t s) const {
        return delta[static_cast<size_t>(q) * alphabet.size() + s];
    }
    void set_target(State q, uint32_t s, State t) {
        delta[static_cast<size_t>(q) * alphabet.size() + s] = t;
    }
    void set_transition(State q, char c, State t) { set_target(q, alphabet.require(c), t); }

    bool total() const {
        for (State t : delta)
            if (t == kNoState) return false;
        return true;
    }
    bool all_final() const { return final.count() == num_states; }
};

/// Complete deterministic automaton: same layout as Idfa, total delta.
struct Cdfa {
    uint32_t num_states = 0;
    Alphabet alphabet;
    std::vector<State> delta;
    State initial = kNoState;
    StateSet final;

    Cdfa() = default;
    Cdfa(uint32_t n, Alphabet sigma)
        : num_states(n),
          alphabet(std::move(sigma)),
          delta(static_cast<size_t>(n) * alphabet.size(), kNoState),
          initial(n > 0 ? 0 : kNoState),
          final(n) {}

    State target(State q, uint32_t s) const {
        return delta[static_cast<size_t>(q) * alphabet.size() + s];
    }
    void set_target(State q, uint32_t s, State t) {
        delta[static_cast<size_t>(q) * alphabet.size() + s] = t;
    }
    void set_transition(State q, char c, State t) { set_target(q, alphabet.require(c), t); }
};

enum class Kind { Nfa, Idfa, Cdfa };

std::string_view kind_name(Kind k);

/// Tagged holder used by file IO, the C API and the CLI.
struct Automaton {
    std::variant<Nfa, Idfa, Cdfa> value;

    Automaton() = default;
    Automaton(Nfa a) : value(std::move(a)) {}
    Automaton(Idfa a) : value(std::move(a)) {}
    Automaton(Cdfa a) : value(std::move(a)) {}

    Kind kind() const { return static_cast<Kind>(value.index()); }
    uint32_t states() const;
    const Alphabet& alphabet() const;
    bool deterministic() const { return kind() != Kind::Nfa; }

    /// Any model viewed as an NFA.
    Nfa to_nfa() const;
    /// Idfa/Cdfa pass through; a deterministic single-initial Nfa is
    /// converted; anything else is a precondition error.
    Idfa to_idfa() const;
};

// conversions
Nfa as_nfa(const Idfa& d);
Nfa as_nfa(const Cdfa& d);
Idfa as_idfa(const Cdfa& d);

// word acceptance; unknown symbols are precondition errors
bool accepts(const Nfa& a, std::string_view w);
bool accepts(const Idfa& a, std::string_view w);
bool accepts(const Cdfa& a, std::string_view w);
bool accepts(const Automaton& a, std::string_view w);

/// Reachable part of the subset automaton, empty set omitted; origins[i] is
/// the subset of input states that became state i.
struct SubsetAutomaton {
    Idfa dfa;
    std::vector<StateSet> origins;
};

SubsetAutomaton determinize_subsets(const Nfa& a);
Idfa determinize(const Nfa& a);

/// Totalizes the transition function; adds at most one non-final dead state.
Cdfa complete(const Idfa& d);

/// Removes states that are unreachable or cannot reach a final state.
Idfa trim(const Idfa& d);

/// Unique minimal incomplete DFA (up to renaming); 0 states for the empty
/// language. States come out in BFS order from the initial state.
Idfa minimize_idfa(const Idfa& d);

/// Standard complete-DFA minimization; keeps the dead state if the language
/// needs one. States come out in BFS order.
Cdfa minimize_cdfa(const Cdfa& d);

uint64_t isc(const Nfa& a);
uint64_t isc(const Idfa& a);
uint64_t isc(const Automaton& a);
uint64_t sc(const Nfa& a);
uint64_t sc(const Idfa& a);
uint64_t sc(const Automaton& a);

/// Language equality via the product of completed determinizations.
/// Requires the same symbol set on both sides.
bool equivalent(const Automaton& a, const Automaton& b);
bool equivalent(const Nfa& a, const Nfa& b);

/// Canonical encoding of the reachable part under BFS relabeling; equal
/// encodings == isomorphic automata. With permute_alphabet, minimized over
/// all symbol permutations, so equality means isomorphic up to renaming of
/// alphabet symbols.
std::string canonical_form(const Cdfa& d, bool permute_alphabet);

/// True iff every state of the minimal incomplete DFA is final.
bool is_prefix_closed(const Automaton& a);
bool is_prefix_closed(const Nfa& a);
bool is_prefix_closed(const Idfa& a);

/// Rebuilds b's transition table in a's symbol order (same symbol set
/// required).
Nfa remap_alphabet(const Nfa& b, const Alphabet& target);
Idfa remap_alphabet(const Idfa& b, const Alphabet& target);

}  // namespace pcfa
