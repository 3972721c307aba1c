#include "automata.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace pcfa {

uint32_t Alphabet::require(char c) const {
    int i = index_of(c);
    if (i < 0)
        throw_precondition(std::string("symbol '") + c + "' is not in the alphabet \"" +
                           symbols + "\"");
    return static_cast<uint32_t>(i);
}

bool Alphabet::same_symbols(const Alphabet& o) const {
    if (symbols.size() != o.symbols.size()) return false;
    std::string a = symbols, b = o.symbols;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::string_view kind_name(Kind k) {
    switch (k) {
        case Kind::Nfa: return "nfa";
        case Kind::Idfa: return "idfa";
        case Kind::Cdfa: return "cdfa";
    }
    return "?";
}

uint32_t Automaton::states() const {
    return std::visit([](const auto& a) { return a.num_states; }, value);
}

const Alphabet& Automaton::alphabet() const {
    return std::visit([](const auto& a) -> const Alphabet& { return a.alphabet; }, value);
}

Nfa Automaton::to_nfa() const {
    switch (kind()) {
        case Kind::Nfa: return std::get<Nfa>(value);
        case Kind::Idfa: return as_nfa(std::get<Idfa>(value));
        case Kind::Cdfa: return as_nfa(std::get<Cdfa>(value));
    }
    throw_precondition("bad automaton kind");
}

Idfa Automaton::to_idfa() const {
    switch (kind()) {
        case Kind::Idfa: return std::get<Idfa>(value);
        case Kind::Cdfa: return as_idfa(std::get<Cdfa>(value));
        case Kind::Nfa: break;
    }
    const Nfa& a = std::get<Nfa>(value);
    if (a.num_states == 0) return Idfa(0, a.alphabet);
    if (!a.single_initial())
        throw_precondition("a deterministic automaton is required, but the input has " +
                           std::to_string(a.initial.count()) + " initial states");
    Idfa d(a.num_states, a.alphabet);
    d.initial = a.initial.first();
    d.final = a.final;
    for (State q = 0; q < a.num_states; ++q) {
        for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
            const StateSet& t = a.targets(q, s);
            uint32_t c = t.count();
            if (c > 1)
                throw_precondition("a deterministic automaton is required, but state " +
                                   std::to_string(q) + " has " + std::to_string(c) +
                                   " targets on '" + a.alphabet.symbols[s] + "'");
            if (c == 1) d.set_target(q, s, t.first());
        }
    }
    return d;
}

Nfa as_nfa(const Idfa& d) {
    Nfa a(d.num_states, d.alphabet);
    if (d.num_states > 0) a.initial.set(d.initial);
    a.final = d.final;
    for (State q = 0; q < d.num_states; ++q)
        for (uint32_t s = 0; s < d.alphabet.size(); ++s)
            if (d.target(q, s) != kNoState) a.targets(q, s).set(d.target(q, s));
    return a;
}

Nfa as_nfa(const Cdfa& d) { return as_nfa(as_idfa(d)); }

Idfa as_idfa(const Cdfa& d) {
    Idfa r(d.num_states, d.alphabet);
    r.delta = d.delta;
    r.initial = d.initial;
    r.final = d.final;
    return r;
}

bool accepts(const Nfa& a, std::string_view w) {
    StateSet cur = a.initial;
    for (char c : w) {
        uint32_t s = a.alphabet.require(c);
        StateSet next(a.num_states);
        cur.for_each([&](State q) { next |= a.targets(q, s); });
        cur = std::move(next);
    }
    return cur.intersects(a.final);
}

bool accepts(const Idfa& a, std::string_view w) {
    if (a.num_states == 0) {
        for (char c : w) a.alphabet.require(c);
        return false;
    }
    State q = a.initial;
    for (char c : w) {
        uint32_t s = a.alphabet.require(c);
        if (q == kNoState) continue;  // keep validating symbols
        q = a.target(q, s);
    }
    return q != kNoState && a.final.test(q);
}

bool accepts(const Cdfa& a, std::string_view w) { return accepts(as_idfa(a), w); }

bool accepts(const Automaton& a, std::string_view w) {
    return std::visit([&](const auto& x) { return accepts(x, w); }, a.value);
}

SubsetAutomaton determinize_subsets(const Nfa& a) {
    SubsetAutomaton out;
    if (a.initial.empty()) {
        out.dfa = Idfa(0, a.alphabet);
        return out;
    }
    const uint32_t k = a.alphabet.size();
    std::unordered_map<StateSet, State, StateSetHash> index;
    std::vector<StateSet> order;
    index.emplace(a.initial, 0);
    order.push_back(a.initial);
    std::vector<std::pair<size_t, State>> trans;  // (q*k+s, target)
    for (size_t qi = 0; qi < order.size(); ++qi) {
        StateSet cur = order[qi];  // copy: order may reallocate
        for (uint32_t s = 0; s < k; ++s) {
            StateSet next(a.num_states);
            cur.for_each([&](State q) { next |= a.targets(q, s); });
            if (next.empty()) continue;
            auto [it, fresh] = index.emplace(next, static_cast<State>(order.size()));
            if (fresh) order.push_back(next);
            trans.emplace_back(qi * k + s, it->second);
        }
    }
    Idfa d(static_cast<uint32_t>(order.size()), a.alphabet);
    for (auto [slot, t] : trans) d.delta[slot] = t;
    for (uint32_t i = 0; i < d.num_states; ++i)
        if (order[i].intersects(a.final)) d.final.set(i);
    out.dfa = std::move(d);
    out.origins = std::move(order);
    return out;
}

Idfa determinize(const Nfa& a) { return determinize_subsets(a).dfa; }

Cdfa complete(const Idfa& d) {
    const uint32_t k = d.alphabet.size();
    if (d.num_states > 0 && d.total()) {
        Cdfa c(d.num_states, d.alphabet);
        c.delta = d.delta;
        c.initial = d.initial;
        c.final = d.final;
        return c;
    }
    uint32_t n = d.num_states;
    Cdfa c(n + 1, d.alphabet);
    c.initial = (n > 0) ? d.initial : n;
    c.final = StateSet(n + 1);
    d.final.for_each([&](State q) { c.final.set(q); });
    for (State q = 0; q < n; ++q)
        for (uint32_t s = 0; s < k; ++s) {
            State t = d.target(q, s);
            c.set_target(q, s, t == kNoState ? n : t);
        }
    for (uint32_t s = 0; s < k; ++s) c.set_target(n, s, n);
    return c;
}

namespace {

std::vector<bool> reachable_states(const Idfa& d) {
    std::vector<bool> seen(d.num_states, false);
    if (d.num_states == 0) return seen;
    std::vector<State> stack{d.initial};
    seen[d.initial] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (uint32_t s = 0; s < d.alphabet.size(); ++s) {
            State t = d.target(q, s);
            if (t != kNoState && !seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

Idfa keep_states(const Idfa& d, const std::vector<bool>& keep) {
    std::vector<State> rename(d.num_states, kNoState);
    uint32_t n = 0;
    for (State q = 0; q < d.num_states; ++q)
        if (keep[q]) rename[q] = n++;
    if (d.num_states == 0 || !keep[d.initial]) return Idfa(0, d.alphabet);
    Idfa r(n, d.alphabet);
    r.initial = rename[d.initial];
    for (State q = 0; q < d.num_states; ++q) {
        if (!keep[q]) continue;
        if (d.final.test(q)) r.final.set(rename[q]);
        for (uint32_t s = 0; s < d.alphabet.size(); ++s) {
            State t = d.target(q, s);
            if (t != kNoState && keep[t]) r.set_target(rename[q], s, rename[t]);
        }
    }
    return r;
}

/// Moore partition refinement over the reachable part of a total DFA.
/// Returns the class of each state (kNoState for unreachable) and the count.
std::pair<std::vector<State>, uint32_t> refine_classes(const Cdfa& d) {
    const uint32_t k = d.alphabet.size();
    std::vector<bool> reach = reachable_states(as_idfa(d));
    std::vector<State> cls(d.num_states, kNoState);
    for (State q = 0; q < d.num_states; ++q)
        if (reach[q]) cls[q] = d.final.test(q) ? 1 : 0;
    uint32_t num_classes = 2;
    std::vector<std::vector<State>> sig;
    std::vector<State> ncls(d.num_states, kNoState);
    for (;;) {
        sig.clear();
        std::unordered_map<size_t, std::vector<State>> buckets;  // hash -> class reps
        uint32_t next_id = 0;
        std::vector<std::vector<State>> keys;
        for (State q = 0; q < d.num_states; ++q) {
            if (cls[q] == kNoState) continue;
            std::vector<State> key(k + 1);
            key[0] = cls[q];
            for (uint32_t s = 0; s < k; ++s) key[s + 1] = cls[d.target(q, s)];
            size_t h = 1469598103934665603ull;
            for (State v : key) h = (h ^ v) * 1099511628211ull;
            auto& cand = buckets[h];
            State found = kNoState;
            for (State id : cand)
                if (keys[id] == key) {
                    found = id;
                    break;
                }
            if (found == kNoState) {
                found = next_id++;
                keys.push_back(key);
                cand.push_back(found);
            }
            ncls[q] = found;
        }
        if (next_id == num_classes) break;
        num_classes = next_id;
        std::swap(cls, ncls);
    }
    return {cls, num_classes};
}

/// Relabels the reachable part of a total DFA in BFS order (symbols in
/// alphabet order). Assumes all states reachable.
Cdfa bfs_relabel(const Cdfa& d) {
    const uint32_t k = d.alphabet.size();
    std::vector<State> rename(d.num_states, kNoState);
    std::vector<State> order;
    order.reserve(d.num_states);
    rename[d.initial] = 0;
    order.push_back(d.initial);
    for (size_t i = 0; i < order.size(); ++i)
        for (uint32_t s = 0; s < k; ++s) {
            State t = d.target(order[i], s);
            if (rename[t] == kNoState) {
                rename[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }
    Cdfa r(static_cast<uint32_t>(order.size()), d.alphabet);
    r.initial = 0;
    for (State i = 0; i < r.num_states; ++i) {
        State q = order[i];
        if (d.final.test(q)) r.final.set(i);
        for (uint32_t s = 0; s < k; ++s) r.set_target(i, s, rename[d.target(q, s)]);
    }
    return r;
}

std::optional<State> find_dead_state(const Cdfa& d) {
    for (State q = 0; q < d.num_states; ++q) {
        if (d.final.test(q)) continue;
        bool dead = true;
        for (uint32_t s = 0; s < d.alphabet.size(); ++s)
            if (d.target(q, s) != q) {
                dead = false;
                break;
            }
        if (dead) return q;
    }
    return std::nullopt;
}

}  // namespace

Idfa trim(const Idfa& d) {
    if (d.num_states == 0) return d;
    std::vector<bool> reach = reachable_states(d);
    // backward closure from final states
    std::vector<std::vector<State>> rev(d.num_states);
    for (State q = 0; q < d.num_states; ++q)
        for (uint32_t s = 0; s < d.alphabet.size(); ++s) {
            State t = d.target(q, s);
            if (t != kNoState) rev[t].push_back(q);
        }
    std::vector<bool> useful(d.num_states, false);
    std::vector<State> stack;
    d.final.for_each([&](State q) {
        useful[q] = true;
        stack.push_back(q);
    });
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : rev[q])
            if (!useful[p]) {
                useful[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<bool> keep(d.num_states);
    for (State q = 0; q < d.num_states; ++q) keep[q] = reach[q] && useful[q];
    return keep_states(d, keep);
}

Cdfa minimize_cdfa(const Cdfa& d) {
    if (d.num_states == 0) throw_precondition("complete DFA cannot have 0 states");
    auto [cls, num_classes] = refine_classes(d);
    Cdfa q(num_classes, d.alphabet);
    q.initial = cls[d.initial];
    for (State s0 = 0; s0 < d.num_states; ++s0) {
        if (cls[s0] == kNoState) continue;
        if (d.final.test(s0)) q.final.set(cls[s0]);
        for (uint32_t s = 0; s < d.alphabet.size(); ++s)
            q.set_target(cls[s0], s, cls[d.target(s0, s)]);
    }
    return bfs_relabel(q);
}

Idfa minimize_idfa(const Idfa& d) {
    Idfa t = trim(d);
    if (t.num_states == 0) return t;
    Cdfa m = minimize_cdfa(complete(t));
    auto dead = find_dead_state(m);
    if (!dead) return as_idfa(m);
    std::vector<bool> keep(m.num_states, true);
    keep[*dead] = false;
    return keep_states(as_idfa(m), keep);
}

uint64_t isc(const Idfa& a) { return minimize_idfa(a).num_states; }
uint64_t isc(const Nfa& a) { return isc(determinize(a)); }
uint64_t isc(const Automaton& a) {
    switch (a.kind()) {
        case Kind::Nfa: return isc(std::get<Nfa>(a.value));
        case Kind::Idfa: return isc(std::get<Idfa>(a.value));
        case Kind::Cdfa: return isc(as_idfa(std::get<Cdfa>(a.value)));
    }
    return 0;
}

uint64_t sc(const Idfa& a) { return minimize_cdfa(complete(a)).num_states; }
uint64_t sc(const Nfa& a) { return sc(determinize(a)); }
uint64_t sc(const Automaton& a) {
    switch (a.kind()) {
        case Kind::Nfa: return sc(std::get<Nfa>(a.value));
        case Kind::Idfa: return sc(std::get<Idfa>(a.value));
        case Kind::Cdfa: return minimize_cdfa(std::get<Cdfa>(a.value)).num_states;
    }
    return 0;
}

bool equivalent(const Nfa& a, const Nfa& b) {
    if (!a.alphabet.same_symbols(b.alphabet))
        throw_precondition("alphabet mismatch: \"" + a.alphabet.symbols + "\" vs \"" +
                           b.alphabet.symbols + "\"");
    Cdfa da = complete(determinize(a));
    Cdfa db = complete(determinize(remap_alphabet(b, a.alphabet)));
    const uint32_t k = da.alphabet.size();
    std::vector<bool> seen(static_cast<size_t>(da.num_states) * db.num_states, false);
    std::vector<std::pair<State, State>> stack{{da.initial, db.initial}};
    seen[static_cast<size_t>(da.initial) * db.num_states + db.initial] = true;
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        if (da.final.test(p) != db.final.test(q)) return false;
        for (uint32_t s = 0; s < k; ++s) {
            State tp = da.target(p, s), tq = db.target(q, s);
            size_t slot = static_cast<size_t>(tp) * db.num_states + tq;
            if (!seen[slot]) {
                seen[slot] = true;
                stack.emplace_back(tp, tq);
            }
        }
    }
    return true;
}

bool equivalent(const Automaton& a, const Automaton& b) {
    return equivalent(a.to_nfa(), b.to_nfa());
}

std::string canonical_form(const Cdfa& d, bool permute_alphabet) {
    const uint32_t k = d.alphabet.size();
    std::vector<uint32_t> perm(k);
    for (uint32_t i = 0; i < k; ++i) perm[i] = i;
    std::string best;
    std::vector<State> rename(d.num_states);
    std::vector<State> order;
    do {
        std::fill(rename.begin(), rename.end(), kNoState);
        order.clear();
        rename[d.initial] = 0;
        order.push_back(d.initial);
        for (size_t i = 0; i < order.size(); ++i)
            for (uint32_t s : perm) {
                State t = d.target(order[i], s);
                if (rename[t] == kNoState) {
                    rename[t] = static_cast<State>(order.size());
                    order.push_back(t);
                }
            }
        std::string enc = std::to_string(order.size());
        enc += ':';
        for (State q : order) {
            for (uint32_t s : perm) {
                enc += std::to_string(rename[d.target(q, s)]);
                enc += ',';
            }
            enc += ';';
        }
        enc += "f=";
        for (State q : order) enc += d.final.test(q) ? '1' : '0';
        if (best.empty() || enc < best) best = std::move(enc);
    } while (permute_alphabet && std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_prefix_closed(const Idfa& a) {
    Idfa m = minimize_idfa(a);
    return m.all_final();
}

bool is_prefix_closed(const Nfa& a) { return is_prefix_closed(determinize(a)); }

bool is_prefix_closed(const Automaton& a) { return is_prefix_closed(a.to_nfa()); }

Nfa remap_alphabet(const Nfa& b, const Alphabet& target) {
    if (!b.alphabet.same_symbols(target))
        throw_precondition("alphabet mismatch: \"" + b.alphabet.symbols + "\" vs \"" +
                           target.symbols + "\"");
    if (b.alphabet == target) return b;
    Nfa r(b.num_states, target);
    r.initial = b.initial;
    r.final = b.final;
    for (State q = 0; q < b.num_states; ++q)
        for (uint32_t s = 0; s < target.size(); ++s)
            r.targets(q, s) = b.targets(q, b.alphabet.require(target.symbols[s]));
    return r;
}

Idfa remap_alphabet(const Idfa& b, const Alphabet& target) {
    if (!b.alphabet.same_symbols(target))
        throw_precondition("alphabet mismatch: \"" + b.alphabet.symbols + "\" vs \"" +
                           target.symbols + "\"");
    if (b.alphabet == target) return b;
    Idfa r(b.num_states, target);
    r.initial = b.initial;
    r.final = b.final;
    for (State q = 0; q < b.num_states; ++q)
        for (uint32_t s = 0; s < target.size(); ++s)
            r.set_target(q, s, b.target(q, b.alphabet.require(target.symbols[s])));
    return r;
}

}  // namespace pcfa
