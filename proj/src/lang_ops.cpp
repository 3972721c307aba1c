#include "lang_ops.hpp"

#include <unordered_map>

namespace pcfa {

namespace {

void require_same_symbols(const Alphabet& a, const Alphabet& b) {
    if (!a.same_symbols(b))
        throw_precondition("alphabet mismatch: \"" + a.symbols + "\" vs \"" + b.symbols + "\"");
}

uint64_t pow2(uint64_t e) { return e >= 63 ? UINT64_MAX : (uint64_t{1} << e); }

}  // namespace

Cdfa complement_idfa(const Idfa& d) {
    Cdfa c = complete(d);
    StateSet flipped(c.num_states);
    for (State q = 0; q < c.num_states; ++q)
        if (!c.final.test(q)) flipped.set(q);
    c.final = std::move(flipped);
    return c;
}

Cdfa complement_nfa(const Nfa& a) { return complement_idfa(determinize(a)); }

Idfa intersect_idfa(const Idfa& a, const Idfa& b) {
    require_same_symbols(a.alphabet, b.alphabet);
    Idfa b2 = remap_alphabet(b, a.alphabet);
    const uint32_t k = a.alphabet.size();
    if (a.num_states == 0 || b2.num_states == 0) return Idfa(0, a.alphabet);

    auto pack = [&](State p, State q) { return static_cast<uint64_t>(p) * b2.num_states + q; };
    std::unordered_map<uint64_t, State> index;
    std::vector<std::pair<State, State>> order;
    index.emplace(pack(a.initial, b2.initial), 0);
    order.emplace_back(a.initial, b2.initial);
    std::vector<std::pair<size_t, State>> trans;
    for (size_t i = 0; i < order.size(); ++i) {
        auto [p, q] = order[i];
        for (uint32_t s = 0; s < k; ++s) {
            State tp = a.target(p, s), tq = b2.target(q, s);
            if (tp == kNoState || tq == kNoState) continue;
            auto [it, fresh] = index.emplace(pack(tp, tq), static_cast<State>(order.size()));
            if (fresh) order.emplace_back(tp, tq);
            trans.emplace_back(i * k + s, it->second);
        }
    }
    Idfa r(static_cast<uint32_t>(order.size()), a.alphabet);
    for (auto [slot, t] : trans) r.delta[slot] = t;
    for (uint32_t i = 0; i < r.num_states; ++i)
        if (a.final.test(order[i].first) && b2.final.test(order[i].second)) r.final.set(i);
    return r;
}

Idfa union_idfa(const Idfa& a, const Idfa& b) {
    require_same_symbols(a.alphabet, b.alphabet);
    Idfa b2 = remap_alphabet(b, a.alphabet);
    const uint32_t k = a.alphabet.size();
    Cdfa ca = complete(a), cb = complete(b2);
    // the completion sink, or any dead state the input already had
    auto dead_of = [&](const Cdfa& c) -> State {
        for (State q = 0; q < c.num_states; ++q) {
            if (c.final.test(q)) continue;
            bool dead = true;
            for (uint32_t s = 0; s < k; ++s)
                if (c.target(q, s) != q) dead = false;
            if (dead) return q;
        }
        return kNoState;
    };
    State da = dead_of(ca), db = dead_of(cb);
    bool drop = (da != kNoState && db != kNoState);

    std::vector<State> index(static_cast<size_t>(ca.num_states) * cb.num_states, kNoState);
    std::vector<std::pair<State, State>> order;
    for (State p = 0; p < ca.num_states; ++p)
        for (State q = 0; q < cb.num_states; ++q) {
            if (drop && p == da && q == db) continue;
            index[static_cast<size_t>(p) * cb.num_states + q] =
                static_cast<State>(order.size());
            order.emplace_back(p, q);
        }
    Idfa r(static_cast<uint32_t>(order.size()), a.alphabet);
    r.initial = index[static_cast<size_t>(ca.initial) * cb.num_states + cb.initial];
    for (uint32_t i = 0; i < r.num_states; ++i) {
        auto [p, q] = order[i];
        if (ca.final.test(p) || cb.final.test(q)) r.final.set(i);
        for (uint32_t s = 0; s < k; ++s) {
            State t = index[static_cast<size_t>(ca.target(p, s)) * cb.num_states +
                            cb.target(q, s)];
            if (t != kNoState) r.set_target(i, s, t);
        }
    }
    return r;
}

Nfa union_nfa(const Nfa& a, const Nfa& b) {
    require_same_symbols(a.alphabet, b.alphabet);
    Nfa b2 = remap_alphabet(b, a.alphabet);
    if (!a.single_initial() || !b2.single_initial())
        throw_precondition("union_nfa requires single-initial inputs");
    const uint32_t k = a.alphabet.size();
    const uint32_t m = a.num_states, n = b2.num_states;
    Nfa r(m + n + 1, a.alphabet);
    for (State q = 0; q < m; ++q)
        for (uint32_t s = 0; s < k; ++s)
            a.targets(q, s).for_each([&](State t) { r.targets(q, s).set(t); });
    for (State q = 0; q < n; ++q)
        for (uint32_t s = 0; s < k; ++s)
            b2.targets(q, s).for_each([&](State t) { r.targets(q + m, s).set(t + m); });
    State sa = a.initial.first(), sb = b2.initial.first();
    State fresh = m + n;
    for (uint32_t s = 0; s < k; ++s) {
        r.targets(fresh, s) = r.targets(sa, s);
        r.targets(fresh, s) |= r.targets(sb + m, s);
    }
    a.final.for_each([&](State q) { r.final.set(q); });
    b2.final.for_each([&](State q) { r.final.set(q + m); });
    if (a.final.test(sa) || b2.final.test(sb)) r.final.set(fresh);
    r.initial.set(fresh);
    return r;
}

Nfa concat_nfa(const Nfa& a, const Nfa& b) {
    require_same_symbols(a.alphabet, b.alphabet);
    Nfa b2 = remap_alphabet(b, a.alphabet);
    if (!a.all_final()) throw_precondition("concat_nfa requires an all-final left input");
    if (!b2.single_initial()) throw_precondition("concat_nfa requires a single-initial right input");
    const uint32_t k = a.alphabet.size();
    const uint32_t m = a.num_states, n = b2.num_states;
    if (m == 0 || n == 0) return Nfa(0, a.alphabet);
    State sb = b2.initial.first() + m;
    Nfa r(m + n, a.alphabet);
    for (State q = 0; q < m; ++q)
        for (uint32_t s = 0; s < k; ++s) {
            const StateSet& t = a.targets(q, s);
            if (t.empty()) continue;
            t.for_each([&](State x) { r.targets(q, s).set(x); });
            r.targets(q, s).set(sb);  // jump whenever the A-transition is defined
        }
    for (State q = 0; q < n; ++q)
        for (uint32_t s = 0; s < k; ++s)
            b2.targets(q, s).for_each([&](State t) { r.targets(q + m, s).set(t + m); });
    a.initial.for_each([&](State q) { r.initial.set(q); });
    r.initial.set(sb);
    for (State q = m; q < m + n; ++q) r.final.set(q);
    return r;
}

Nfa star_nfa(const Nfa& a) {
    if (!a.all_final()) throw_precondition("star_nfa requires an all-final input");
    if (!a.single_initial()) throw_precondition("star_nfa requires a single-initial input");
    State s0 = a.initial.first();
    Nfa r = a;
    for (State q = 0; q < a.num_states; ++q)
        for (uint32_t s = 0; s < a.alphabet.size(); ++s)
            if (a.targets(q, s).intersects(a.final)) r.targets(q, s).set(s0);
    return r;
}

Nfa reverse_nfa(const Nfa& a) {
    Nfa r(a.num_states, a.alphabet);
    r.initial = a.final;
    r.final = a.initial;
    for (State q = 0; q < a.num_states; ++q)
        for (uint32_t s = 0; s < a.alphabet.size(); ++s)
            a.targets(q, s).for_each([&](State t) { r.targets(t, s).set(q); });
    return r;
}

Nfa merge_initial_states(const Nfa& a) {
    if (a.initial.empty()) throw_precondition("cannot merge an empty initial set");
    State i0 = a.initial.first();
    Nfa r = a;
    r.initial = StateSet::singleton(a.num_states, i0);
    for (uint32_t s = 0; s < a.alphabet.size(); ++s) {
        StateSet u(a.num_states);
        a.initial.for_each([&](State i) { u |= a.targets(i, s); });
        r.targets(i0, s) = std::move(u);
    }
    if (a.initial.intersects(a.final)) r.final.set(i0);
    return r;
}

Nfa make_single_initial(const Nfa& a) {
    const uint32_t k = a.alphabet.size();
    Nfa r(a.num_states + 1, a.alphabet);
    for (State q = 0; q < a.num_states; ++q)
        for (uint32_t s = 0; s < k; ++s)
            a.targets(q, s).for_each([&](State t) { r.targets(q, s).set(t); });
    State fresh = a.num_states;
    for (uint32_t s = 0; s < k; ++s) {
        StateSet u(a.num_states + 1);
        a.initial.for_each([&](State i) {
            a.targets(i, s).for_each([&](State t) { u.set(t); });
        });
        r.targets(fresh, s) = std::move(u);
    }
    a.final.for_each([&](State q) { r.final.set(q); });
    if (a.initial.intersects(a.final)) r.final.set(fresh);
    r.initial.set(fresh);
    return r;
}

LangOp lang_op_from_name(std::string_view name) {
    if (name == "complement") return LangOp::Complement;
    if (name == "intersect") return LangOp::Intersect;
    if (name == "union") return LangOp::Union;
    if (name == "union-nfa") return LangOp::UnionNfa;
    if (name == "concat") return LangOp::Concat;
    if (name == "star") return LangOp::Star;
    if (name == "reverse") return LangOp::Reverse;
    throw_precondition("unknown operation \"" + std::string(name) +
                       "\" (expected: complement intersect union union-nfa concat star reverse)");
}

std::string_view lang_op_name(LangOp op) {
    switch (op) {
        case LangOp::Complement: return "complement";
        case LangOp::Intersect: return "intersect";
        case LangOp::Union: return "union";
        case LangOp::UnionNfa: return "union-nfa";
        case LangOp::Concat: return "concat";
        case LangOp::Star: return "star";
        case LangOp::Reverse: return "reverse";
    }
    return "?";
}

bool lang_op_is_binary(LangOp op) {
    return op == LangOp::Intersect || op == LangOp::Union || op == LangOp::UnionNfa ||
           op == LangOp::Concat;
}

OpResult apply_op(LangOp op, const Automaton& a, const Automaton* b) {
    if (lang_op_is_binary(op) && b == nullptr)
        throw_precondition(std::string(lang_op_name(op)) + " needs two input automata");
    if (!lang_op_is_binary(op) && b != nullptr)
        throw_precondition(std::string(lang_op_name(op)) + " takes one input automaton");
    const uint64_t m = a.states();
    const uint64_t n = b ? b->states() : 0;
    OpResult r;
    switch (op) {
        case LangOp::Complement:
            if (a.deterministic()) {
                r.automaton = complement_idfa(a.to_idfa());
                r.upper_bound = m + 1;
            } else {
                r.automaton = complement_nfa(std::get<Nfa>(a.value));
                r.upper_bound = pow2(m);
            }
            break;
        case LangOp::Intersect:
            r.automaton = intersect_idfa(a.to_idfa(), b->to_idfa());
            r.upper_bound = m * n;
            break;
        case LangOp::Union:
            r.automaton = union_idfa(a.to_idfa(), b->to_idfa());
            r.upper_bound = m * n + m + n;
            break;
        case LangOp::UnionNfa:
            r.automaton = union_nfa(a.to_nfa(), b->to_nfa());
            r.upper_bound = m + n + 1;
            break;
        case LangOp::Concat:
            r.automaton = concat_nfa(a.to_nfa(), b->to_nfa());
            r.upper_bound = m + n;
            break;
        case LangOp::Star:
            r.automaton = star_nfa(a.to_nfa());
            r.upper_bound = m;
            break;
        case LangOp::Reverse:
            r.automaton = reverse_nfa(a.to_nfa());
            r.upper_bound = m;
            break;
    }
    r.construction_states = r.automaton.states();
    return r;
}

}  // namespace pcfa
